#pragma once

// Reference tables: rows (kind, n, r, value) exchanged as CSV with header
// "kind,n,r,value" or as a JSON array of objects with the same keys. The r
// column is empty (CSV) or absent (JSON) for kinds without an order.

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "exact.hpp"
#include "sequences.hpp"
#include "text.hpp"

namespace dharm {

/// A sequence value of whichever exact type its kind calls for.
using Value = std::variant<Int, Rat, LPoly>;

inline std::string to_text(const Value& v) {
    return std::visit([](const auto& x) { return to_text(x); }, v);
}

inline Value compute_value(Tables& t, Kind kind, std::size_t n, unsigned r) {
    switch (kind) {
        case Kind::Derangement: return t.derangement(n);
        case Kind::Harmonic: return t.harmonic(n);
        case Kind::Hyperharmonic: return t.hyperharmonic(n, r);
        case Kind::DegHarmonic: return t.deg_harmonic(n);
        case Kind::DegHyperharmonic: return t.deg_hyperharmonic(n, r);
    }
    return Int(0);
}

/// Parses value text into the exact type used by `kind`.
inline Value parse_value(Kind kind, std::string_view text) {
    switch (kind) {
        case Kind::Derangement: return parse_int(text);
        case Kind::Harmonic:
        case Kind::Hyperharmonic: return parse_rat(text);
        case Kind::DegHarmonic:
        case Kind::DegHyperharmonic: return parse_lpoly(text);
    }
    throw ParseError("unknown kind");
}

struct ReferenceRow {
    Kind kind;
    std::size_t n;
    std::optional<unsigned> r;
    Value value;
    std::size_t line = 0;  // 1-based source line, 0 when not parsed from a file
};

struct ReferenceTable {
    std::vector<ReferenceRow> rows;
};

/// Raised with the offending 1-based line number.
class TableParseError : public ParseError {
public:
    TableParseError(std::size_t line, const std::string& what)
        : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr std::string_view csv_header = "kind,n,r,value";

namespace detail {

template <class T>
T parse_unsigned(std::string_view s, std::size_t line, std::string_view field) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw TableParseError(line, "bad " + std::string(field) + " '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

}  // namespace detail

inline ReferenceTable parse_reference_csv(std::istream& in) {
    ReferenceTable table;
    std::set<std::tuple<Kind, std::size_t, unsigned>> seen;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!have_header) {
            if (line != csv_header)
                throw TableParseError(line_no, "expected header '" + std::string(csv_header) + "'");
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() != 4)
            throw TableParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        const auto kind = parse_kind(fields[0]);
        if (!kind) throw TableParseError(line_no, "unknown kind '" + std::string(fields[0]) + "'");
        const auto n = detail::parse_unsigned<std::size_t>(fields[1], line_no, "n");
        std::optional<unsigned> r;
        if (needs_order(*kind)) {
            if (fields[2].empty()) throw TableParseError(line_no, "kind " + std::string(fields[0]) + " requires r");
            r = detail::parse_unsigned<unsigned>(fields[2], line_no, "r");
        } else if (!fields[2].empty()) {
            throw TableParseError(line_no, "kind " + std::string(fields[0]) + " takes no r");
        }
        Value value;
        try {
            value = parse_value(*kind, fields[3]);
        } catch (const ParseError& e) {
            throw TableParseError(line_no, e.what());
        }
        if (!seen.insert({*kind, n, r.value_or(0)}).second) throw TableParseError(line_no, "duplicate row");
        table.rows.push_back({*kind, n, r, std::move(value), line_no});
    }
    if (!have_header) throw TableParseError(line_no + 1, "missing header");
    return table;
}

inline ReferenceTable make_table(Tables& t, Kind kind, std::size_t n_max, std::optional<unsigned> r) {
    ReferenceTable table;
    for (std::size_t n = 0; n <= n_max; ++n)
        table.rows.push_back({kind, n, needs_order(kind) ? r : std::nullopt, compute_value(t, kind, n, r.value_or(0))});
    return table;
}

inline void write_csv(std::ostream& out, const ReferenceTable& table) {
    out << csv_header << '\n';
    for (const auto& row : table.rows) {
        out << kind_name(row.kind) << ',' << row.n << ',';
        if (row.r) out << *row.r;
        out << ',' << to_text(row.value) << '\n';
    }
}

inline void write_json(std::ostream& out, const ReferenceTable& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        obj["kind"] = kind_name(row.kind);
        obj["n"] = row.n;
        if (row.r) obj["r"] = *row.r;
        obj["value"] = to_text(row.value);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

/// Installs every row as an override in `t`, so later checks read the table's
/// values instead of the computed ones.
inline void apply_overrides(Tables& t, const ReferenceTable& table) {
    for (const auto& row : table.rows)
        std::visit([&](const auto& v) { t.override_value(row.kind, row.n, row.r.value_or(0), v); }, row.value);
}

}  // namespace dharm
