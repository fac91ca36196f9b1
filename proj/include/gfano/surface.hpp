#pragma once

#include <gfano/errors.hpp>
#include <gfano/scroll.hpp>

#include <string>
#include <utility>

namespace gfano {

// Classes xi * ξ + fib * 𝔣 on the Hirzebruch surface Σ_e, where ξ is the
// minimal section (ξ² = -e) and 𝔣 a fiber (ξ.𝔣 = 1, 𝔣² = 0).
struct SurfaceClass {
    Int e = 0;
    Int xi = 0;
    Int fib = 0;

    friend constexpr bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

inline std::string to_string(const SurfaceClass& c)
{
    return "Sigma_" + std::to_string(c.e) + "(" + std::to_string(c.xi) + "," + std::to_string(c.fib) + ")";
}

constexpr SurfaceClass minimal_section(Int e) { return {e, 1, 0}; }
constexpr SurfaceClass surface_fiber(Int e) { return {e, 0, 1}; }
constexpr SurfaceClass surface_canonical(Int e) { return {e, -2, -(e + 2)}; }

inline Int intersect2(const SurfaceClass& a, const SurfaceClass& b)
{
    if (a.e != b.e)
        fail(Errc::SurfaceMismatch, to_string(a) + " vs " + to_string(b));
    return -a.e * a.xi * b.xi + a.xi * b.fib + b.xi * a.fib;
}

/// Arithmetic genus by adjunction, 2g - 2 = C.(C + K).
inline Int genus(const SurfaceClass& c)
{
    if (c.xi < 0)
        fail(Errc::NotEffectiveShape, to_string(c) + " has negative ξ-coefficient");
    const SurfaceClass k = surface_canonical(c.e);
    const Int twice = intersect2(c, {c.e, c.xi + k.xi, c.fib + k.fib});
    if (twice % 2 != 0)
        fail(Errc::NotEffectiveShape, "odd adjunction value for " + to_string(c));
    return 1 + twice / 2;
}

/// Basis change from a rank-2 scroll F(d1, d2): H = ξ + d1 𝔣 and F = 𝔣.
inline SurfaceClass from_scroll(const Scroll& s, const DivisorClass& c)
{
    if (s.rank() != 2)
        fail(Errc::RankMismatch, to_string(s) + " is not a surface scroll");
    return {s.twist(0) - s.twist(1), c.h, c.h * s.twist(0) + c.f};
}

/// Inverse of from_scroll for the given presentation F(d1, d2) of Σ_e.
inline DivisorClass to_scroll_class(const Scroll& s, const SurfaceClass& c)
{
    if (s.rank() != 2)
        fail(Errc::RankMismatch, to_string(s) + " is not a surface scroll");
    if (s.twist(0) - s.twist(1) != c.e)
        fail(Errc::SurfaceMismatch, to_string(s) + " does not present " + to_string(c));
    return {c.xi, c.fib - c.xi * s.twist(0)};
}

/// Normal-form presentation Σ_e = F(e, 0).
inline std::pair<Scroll, DivisorClass> to_scroll(const SurfaceClass& c)
{
    Scroll s{c.e, 0};
    return {s, to_scroll_class(s, c)};
}

struct ForcedDecomposition {
    Int mu = 0;
    SurfaceClass residual;

    friend bool operator==(const ForcedDecomposition&, const ForcedDecomposition&) = default;
};

/// Splits off the minimal section as long as the class meets it negatively.
inline ForcedDecomposition forced_minimal_decomposition(const SurfaceClass& c)
{
    if (c.xi < 0)
        fail(Errc::NotEffectiveShape, to_string(c) + " has negative ξ-coefficient");
    const auto [scroll, cls] = to_scroll(c);
    if (h0(scroll, cls) == 0)
        fail(Errc::EmptySystem, to_string(c) + " has no members");
    const SurfaceClass xi = minimal_section(c.e);
    ForcedDecomposition out{0, c};
    while (out.residual.xi > 0 && intersect2(out.residual, xi) < 0) {
        out.residual.xi -= 1;
        ++out.mu;
    }
    return out;
}

} // namespace gfano
