#pragma once

#include <gfano/errors.hpp>

#include <string>

namespace gfano {

/// Splitting type O(a) + O(b), a >= b, of the normal bundle of a rational curve.
class NormalBundle {
public:
    NormalBundle(Int a, Int b) : a_(a), b_(b)
    {
        if (a < b)
            fail(Errc::OutOfRange, "normal bundle needs a >= b, got (" + std::to_string(a) + ","
                                       + std::to_string(b) + ")");
    }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    /// -K.Γ = m - 2 = a + b + 2 for the base curve Γ of the anticanonical system.
    Int m() const noexcept { return a_ + b_ + 4; }

    friend bool operator==(const NormalBundle&, const NormalBundle&) = default;

private:
    Int a_;
    Int b_;
};

struct BlowupStep {
    Int ambient_degree = 0; ///< (-K)^3 before the blowup
    Int curve_degree = 0;   ///< -K.C
    Int genus = 0;
};

/// (-K)^3 after blowing up a locally complete intersection curve.
constexpr Int blowup_degree(const BlowupStep& step)
{
    return step.ambient_degree - 2 * step.curve_degree - 2 + 2 * step.genus;
}

/// The exceptional surface P(N*) is Σ_{a-b}.
inline Int exceptional_surface_index(const NormalBundle& nb) { return nb.a() - nb.b(); }

/// Cone case: b = -2 and a + b = m - 4.
inline NormalBundle cone_case_normal_bundle(Int m)
{
    if (m < 3)
        fail(Errc::InvalidM, "m = " + std::to_string(m) + " < 3");
    return {m - 2, -2};
}

/// Fiber coefficient in -K = Z + B + (a + 2) F on the blown-up threefold.
constexpr Int decomposition_fiber_coeff(Int a) { return a + 2; }

/// (-K)^3 of S x P^1 for a surface S with K_S^2 = dp_degree.
inline Int product_degree(Int dp_degree)
{
    if (dp_degree < 1)
        fail(Errc::InvalidDegree, "del Pezzo degree " + std::to_string(dp_degree) + " < 1");
    return 6 * dp_degree;
}

} // namespace gfano
