#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "exact.hpp"
#include "text.hpp"

namespace dharm {

enum class IdentityId {
    Thm1,
    Thm2,
    Thm3,
    Eq10,
    Eq13,
    CorHyper,
    CorDegHyper,
    Eq6,
    GfDerangement,
    GfHarmonic,
    GfHyperharmonic,
    GfDegHarmonic,
    GfDegHyperharmonic,
    BivThm1,
    BivThm2,
    BivThm3,
};

inline constexpr IdentityId all_identities[] = {
    IdentityId::Thm1,          IdentityId::Thm2,          IdentityId::Thm3,
    IdentityId::Eq10,          IdentityId::Eq13,          IdentityId::CorHyper,
    IdentityId::CorDegHyper,   IdentityId::Eq6,           IdentityId::GfDerangement,
    IdentityId::GfHarmonic,    IdentityId::GfHyperharmonic, IdentityId::GfDegHarmonic,
    IdentityId::GfDegHyperharmonic, IdentityId::BivThm1,  IdentityId::BivThm2,
    IdentityId::BivThm3,
};

inline std::string_view identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::Thm1: return "thm1";
        case IdentityId::Thm2: return "thm2";
        case IdentityId::Thm3: return "thm3";
        case IdentityId::Eq10: return "eq10";
        case IdentityId::Eq13: return "eq13";
        case IdentityId::CorHyper: return "cor-hyper";
        case IdentityId::CorDegHyper: return "eq13-corollary";
        case IdentityId::Eq6: return "eq6";
        case IdentityId::GfDerangement: return "gf-derangement";
        case IdentityId::GfHarmonic: return "gf-harmonic";
        case IdentityId::GfHyperharmonic: return "gf-hyperharmonic";
        case IdentityId::GfDegHarmonic: return "gf-deg-harmonic";
        case IdentityId::GfDegHyperharmonic: return "gf-deg-hyperharmonic";
        case IdentityId::BivThm1: return "biv-thm1";
        case IdentityId::BivThm2: return "biv-thm2";
        case IdentityId::BivThm3: return "biv-thm3";
    }
    return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s) {
    for (IdentityId id : all_identities)
        if (identity_name(id) == s) return id;
    return std::nullopt;
}

struct CheckParams {
    std::optional<unsigned> m{}, n{}, r{}, order{};
    std::optional<Rat> x{}, y{}, lambda{};

    std::string to_string() const {
        std::string out;
        auto add = [&out](std::string_view key, const std::string& v) {
            if (!out.empty()) out += ' ';
            out += key;
            out += '=';
            out += v;
        };
        if (m) add("m", std::to_string(*m));
        if (n) add("n", std::to_string(*n));
        if (r) add("r", std::to_string(*r));
        if (order) add("N", std::to_string(*order));
        if (x) add("x", to_text(*x));
        if (y) add("y", to_text(*y));
        if (lambda) add("lambda", to_text(*lambda));
        return out;
    }
};

/// Outcome of one exact identity check. pass is true iff lhs and rhs are
/// structurally equal. For polynomial sides first_diff is the lowest
/// lambda-degree whose coefficients differ; for series checks it is the
/// first mismatching coefficient index.
struct CheckReport {
    IdentityId id;
    CheckParams params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::optional<std::size_t> first_diff;
    std::string note;

    std::string failure_line() const {
        std::string s(identity_name(id));
        s += " [" + params.to_string() + "] lhs=" + lhs + " rhs=" + rhs;
        if (first_diff) s += " first_diff=" + std::to_string(*first_diff);
        if (!note.empty()) s += " (" + note + ")";
        return s;
    }
};

inline CheckReport make_report(IdentityId id, CheckParams params, const Rat& lhs, const Rat& rhs) {
    return CheckReport{id, std::move(params), to_text(lhs), to_text(rhs), lhs == rhs, std::nullopt, {}};
}

inline std::optional<std::size_t> first_coefficient_diff(const LPoly& a, const LPoly& b) {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < len; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return std::nullopt;
}

inline CheckReport make_report(IdentityId id, CheckParams params, const LPoly& lhs, const LPoly& rhs) {
    const auto diff = first_coefficient_diff(lhs, rhs);
    return CheckReport{id, std::move(params), to_text(lhs), to_text(rhs), !diff.has_value(), diff, {}};
}

}  // namespace dharm
