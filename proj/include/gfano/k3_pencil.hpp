#pragma once

#include <gfano/errors.hpp>
#include <gfano/surface.hpp>

#include <string>

namespace gfano {

// Rank-2 lattice spanned by a (-2)-section Γ and an elliptic fiber f on a K3
// surface, with Gram matrix [[-2, 1], [1, 0]].
struct PencilClass {
    Int gamma = 0;
    Int ell = 0;

    friend constexpr bool operator==(const PencilClass&, const PencilClass&) = default;
};

inline std::string to_string(const PencilClass& c)
{
    return std::to_string(c.gamma) + "Γ+" + std::to_string(c.ell) + "f";
}

constexpr Int dot(const PencilClass& a, const PencilClass& b)
{
    return -2 * a.gamma * b.gamma + a.gamma * b.ell + b.gamma * a.ell;
}

constexpr Int square(const PencilClass& c) { return dot(c, c); }

/// m for a class of the form Γ + m f with m >= 2.
inline Int saint_donat_form(const PencilClass& c)
{
    if (c.gamma != 1 || c.ell < 2)
        fail(Errc::NotElephantShape, to_string(c) + " is not of the form Γ + mf with m >= 2");
    return c.ell;
}

/// 0 when the base locus is a point (m = 2), 1 when it is the section Γ.
inline Int base_locus_dimension(Int m)
{
    if (m < 2)
        fail(Errc::InvalidM, "m = " + std::to_string(m) + " < 2");
    return m == 2 ? 0 : 1;
}

/// (-K)^3 = (Γ + mf)^2 = 2m - 2.
inline Int fano_degree(Int m)
{
    if (m < 2)
        fail(Errc::InvalidM, "m = " + std::to_string(m) + " < 2");
    const Int degree = square({1, m});
    if (degree != 2 * m - 2)
        fail(Errc::Inconsistent, "lattice square disagrees with 2m - 2");
    return degree;
}

/// Pullback along the double cover S -> Σ_4 branched over ξ: ξ becomes 2Γ, 𝔣 becomes f.
inline PencilClass cover_pullback(const SurfaceClass& c)
{
    if (c.e != 4)
        fail(Errc::WrongSurface, to_string(c) + " is not on Σ_4");
    return {2 * c.xi, c.fib};
}

/// Restriction of -K after blowing up the curve lying over the section: one copy of Γ drops.
inline PencilClass blowup_section_reduce(const PencilClass& c)
{
    if (c.gamma < 1)
        fail(Errc::NoSection, to_string(c) + " does not contain Γ");
    return {c.gamma - 1, c.ell};
}

} // namespace gfano
