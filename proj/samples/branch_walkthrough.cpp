// Walks the branch divisor of U_m over F(m, m-4, 0) for m = 3..14 and prints
// where the generic fiber multiplicity crosses the Du Val bound.

#include <gfano/double_cover.hpp>
#include <gfano/surface.hpp>

#include <iostream>

int main()
{
    using namespace gfano;
    for (Int m = 3; m <= 14; ++m) {
        const auto r = analyze_um(m);
        std::cout << "m=" << m << "  " << to_string(r.base) << "  D=" << to_string(r.branch)
                  << "  h0(D)=" << h0(r.base, r.branch) << "  B in D: " << r.b_mult << "  fiber mult=" << *r.fiber_mult
                  << "  " << to_string(r.verdict) << "\n";
    }

    // On the hyperplane Σ_4 the branch curve always splits as ξ_4 + C.
    const Scroll w{7, 3, 0};
    const auto branch = branch_for_taut_anticanonical(w).branch;
    const auto [sigma, restricted] = restrict_to_subscroll(w, {0, 1}, branch);
    const auto split = forced_minimal_decomposition(from_scroll(sigma, restricted));
    std::cout << "m=7: D|Σ_4 = " << to_string(from_scroll(sigma, restricted)) << " = " << split.mu << " ξ + "
              << to_string(split.residual) << ", genus " << genus(split.residual) << "\n";
}
