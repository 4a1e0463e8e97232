// Prints the first few degenerate harmonic numbers as polynomials in lambda,
// their lambda = 0 limits, and the degenerate harmonic recurrence at one (m, n).

#include <iostream>

#include <dharm/identities.hpp>
#include <dharm/sequences.hpp>
#include <dharm/text.hpp>

int main() {
    dharm::Tables tables;
    for (std::size_t n = 0; n <= 5; ++n) {
        const auto& h = tables.deg_harmonic(n);
        std::cout << "H_" << n << ",L = " << dharm::to_text(h) << "    (L -> 0: " << dharm::to_text(h.constant_term())
                  << ")\n";
    }
    const auto report = dharm::thm3_check(tables, 3, 4);
    std::cout << "\nbinom(7,4) H_7,L   = " << report.lhs << "\nrecurrence side    = " << report.rhs
              << "\nequal: " << (report.pass ? "yes" : "no") << '\n';
    return report.pass ? 0 : 1;
}
