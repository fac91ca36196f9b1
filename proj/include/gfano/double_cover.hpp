#pragma once

#include <gfano/errors.hpp>
#include <gfano/scroll.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfano {

/// Double cover of base branched along branch = 2 * half; K_cover = pullback of (K_base + half).
struct DoubleCoverSpec {
    Scroll base;
    DivisorClass branch;
    DivisorClass half;
};

/// Branch data for which -K of the cover is the pullback of O(1):
/// half = -K_base - O(1).
inline DoubleCoverSpec branch_for_taut_anticanonical(const Scroll& s)
{
    if (s.rank() != 3)
        fail(Errc::WrongRank, to_string(s) + " is not a threefold scroll");
    const DivisorClass half = -canonical_class(s) - kTautological;
    return {s, 2 * half, half};
}

/// (-K)^3 of the cover: twice (O(1))^n on the base.
inline Int cover_degree(const DoubleCoverSpec& spec)
{
    const std::vector<DivisorClass> taut(spec.base.rank(), kTautological);
    return 2 * intersect(spec.base, taut);
}

enum class Verdict { PassesDuValNecessary, FailsDuValNecessary };

constexpr std::string_view to_string(Verdict v) noexcept
{
    return v == Verdict::PassesDuValNecessary ? "PassesDuValNecessary" : "FailsDuValNecessary";
}

/// Generic fiber multiplicity above which the branch surface cannot be Du Val.
inline constexpr Int kDuValMaxMultiplicity = 3;

struct BranchReport {
    Int m = 0;
    Scroll base{0, 0};
    DivisorClass branch;
    DivisorClass b_class;
    Int b_mult = 0;               ///< times B splits off every branch divisor
    DivisorClass residual_class;  ///< branch - B, the class of R in D = B + R
    std::size_t point_index = 0;  ///< zero-based coordinate of the distinguished fiber point
    std::optional<Int> fiber_mult; ///< nullopt: the support is empty
    Int rbs = 0;                  ///< R.B.Σ with Σ in |O(1)|
    Verdict verdict = Verdict::FailsDuValNecessary;
};

/// Branch-divisor analysis for the double cover U_m of F(m, m - 4, 0).
inline BranchReport analyze_um(Int m)
{
    if (m < 3)
        fail(Errc::InvalidM, "m = " + std::to_string(m) + " < 3");
    BranchReport r;
    r.m = m;
    r.base = Scroll{m, m - 4, 0};
    const auto spec = branch_for_taut_anticanonical(r.base);
    r.branch = spec.branch;
    r.b_class = {1, -m};
    r.b_mult = fixed_component_multiplicity(r.base, r.b_class, r.branch);
    r.residual_class = r.branch - r.b_class;
    // The coordinate point of the smallest twist, where B and the residual cubic concur.
    r.point_index = r.base.rank() - 1;
    r.fiber_mult = fiber_multiplicity_at(r.base, r.branch, r.point_index);
    r.rbs = intersect(r.base, {r.residual_class, r.b_class, kTautological});
    r.verdict = (r.fiber_mult && *r.fiber_mult <= kDuValMaxMultiplicity) ? Verdict::PassesDuValNecessary
                                                                         : Verdict::FailsDuValNecessary;
    return r;
}

} // namespace gfano
