#pragma once

#include <gfano/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gfano {

/*
 * Divisor calculus on the scroll F(d_1, ..., d_n) = P(O(d_1) + ... + O(d_n))
 * over the projective line.
 *
 * The Picard group is generated by the tautological class H = O(1) and the
 * fiber class F of the projection to the line. Intersections follow the
 * Chow ring relations
 *
 *     F^2 = 0,   H^{n-1} F = 1,   H^n = delta * H^{n-1} F,   delta = sum d_i.
 *
 * A class h*H + f*F is stored as (h, f); the linear system |O(k) - lF| is
 * therefore the class (k, -l). Fiber coordinates x_1, ..., x_n correspond to
 * the summands in non-increasing twist order, and the coefficient of the
 * fiber monomial x^e in a section of (h, f) is a binary form of degree
 * e.d + f on the base line.
 */

struct DivisorClass {
    Int h = 0;
    Int f = 0;

    friend constexpr bool operator==(const DivisorClass&, const DivisorClass&) = default;

    constexpr DivisorClass& operator+=(const DivisorClass& o)
    {
        h += o.h;
        f += o.f;
        return *this;
    }
    constexpr DivisorClass& operator-=(const DivisorClass& o)
    {
        h -= o.h;
        f -= o.f;
        return *this;
    }
    friend constexpr DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend constexpr DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend constexpr DivisorClass operator*(Int k, const DivisorClass& c) { return {k * c.h, k * c.f}; }
    friend constexpr DivisorClass operator-(const DivisorClass& c) { return {-c.h, -c.f}; }
};

inline constexpr DivisorClass kTautological{1, 0};
inline constexpr DivisorClass kFiber{0, 1};

inline std::string to_string(const DivisorClass& c)
{
    return "(" + std::to_string(c.h) + "," + std::to_string(c.f) + ")";
}

/// Exponents (e_1, ..., e_n) of a fiber monomial; sums to the h of its class.
using ExponentVector = std::vector<Int>;

class Scroll {
public:
    /// Twists are normalized into non-increasing order. Negative twists are allowed.
    explicit Scroll(std::vector<Int> twists) : twists_(std::move(twists))
    {
        if (twists_.size() < 2)
            fail(Errc::TooFewSummands, "a scroll needs at least two summands");
        std::sort(twists_.begin(), twists_.end(), std::greater<>{});
    }
    Scroll(std::initializer_list<Int> twists) : Scroll(std::vector<Int>(twists)) {}

    std::size_t rank() const noexcept { return twists_.size(); }
    std::span<const Int> twists() const noexcept { return twists_; }
    Int twist(std::size_t i) const { return twists_.at(i); }

    /// Degree of H^n, the sum of the twists.
    Int delta() const noexcept { return std::accumulate(twists_.begin(), twists_.end(), Int{0}); }

    friend bool operator==(const Scroll&, const Scroll&) = default;

private:
    std::vector<Int> twists_;
};

inline std::string to_string(const Scroll& s)
{
    std::string out = "F(";
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.twist(i));
    }
    return out + ")";
}

/// Visits every exponent vector of length n with entries summing to total.
/// The visitor receives the vector by const reference; it is reused between calls.
template <typename Visitor>
void for_each_exponent(std::size_t n, Int total, Visitor&& visit)
{
    if (n == 0 || total < 0)
        return;
    ExponentVector e(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, Int left) -> void {
        if (pos + 1 == n) {
            e[pos] = left;
            visit(std::as_const(e));
            return;
        }
        for (Int k = left; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, total);
}

/// Degree of the coefficient form of x^e in a section of c.
inline Int coefficient_degree(const Scroll& s, const ExponentVector& e, const DivisorClass& c)
{
    Int deg = c.f;
    for (std::size_t i = 0; i < e.size(); ++i)
        deg += e[i] * s.twist(i);
    return deg;
}

/// Dimension of the space of global sections of c. Zero for h < 0.
inline Int h0(const Scroll& s, const DivisorClass& c)
{
    Int total = 0;
    for_each_exponent(s.rank(), c.h, [&](const ExponentVector& e) {
        total += std::max<Int>(0, coefficient_degree(s, e, c) + 1);
    });
    return total;
}

/// Exponents whose coefficient space is non-zero, in lexicographically decreasing order.
inline std::vector<ExponentVector> monomial_support(const Scroll& s, const DivisorClass& c)
{
    if (c.h < 0)
        fail(Errc::NegativeDegree, "monomial support needs h >= 0, got " + to_string(c));
    std::vector<ExponentVector> out;
    for_each_exponent(s.rank(), c.h, [&](const ExponentVector& e) {
        if (coefficient_degree(s, e, c) >= 0)
            out.push_back(e);
    });
    return out;
}

/// Top intersection number of n classes on an n-dimensional scroll.
inline Int intersect(const Scroll& s, std::span<const DivisorClass> cs)
{
    if (cs.size() != s.rank())
        fail(Errc::ArityMismatch, "expected " + std::to_string(s.rank()) + " classes, got "
                                      + std::to_string(cs.size()));
    // H^n contributes delta; one F factor contributes 1; two F factors vanish.
    Int all_h = 1;
    for (const auto& c : cs)
        all_h *= c.h;
    Int total = s.delta() * all_h;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Int term = cs[i].f;
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (j != i)
                term *= cs[j].h;
        total += term;
    }
    return total;
}

inline Int intersect(const Scroll& s, std::initializer_list<DivisorClass> cs)
{
    return intersect(s, std::span<const DivisorClass>(cs.begin(), cs.size()));
}

/// K = -n H + (delta - 2) F.
inline DivisorClass canonical_class(const Scroll& s)
{
    return {-static_cast<Int>(s.rank()), s.delta() - 2};
}

/// Maximal length of the h0 chain walked by fixed_component_multiplicity.
inline constexpr Int kMaxComponentChain = 64;

/// How many times the unique member of comp splits off every member of sys.
///
/// Multiplication by the section of comp embeds H0(sys - comp) into H0(sys);
/// equal dimensions mean every section of sys is divisible by it.
inline Int fixed_component_multiplicity(const Scroll& s, const DivisorClass& comp, const DivisorClass& sys)
{
    if (comp == DivisorClass{} || h0(s, comp) != 1)
        fail(Errc::NotRigid, to_string(comp) + " does not have a unique non-trivial member on " + to_string(s));
    const Int base = h0(s, sys);
    if (base == 0)
        fail(Errc::EmptySystem, to_string(sys) + " has no members on " + to_string(s));
    Int mu = 0;
    while (mu < kMaxComponentChain && h0(s, sys - (mu + 1) * comp) == base)
        ++mu;
    return mu;
}

/// Multiplicity of the general member of c at the coordinate point of the
/// fiber where every x_j with j != index vanishes. The index is zero-based.
/// std::nullopt stands for an empty support (every section vanishes identically).
inline std::optional<Int> fiber_multiplicity_at(const Scroll& s, const DivisorClass& c, std::size_t index)
{
    if (index >= s.rank())
        fail(Errc::IndexOutOfRange, "coordinate " + std::to_string(index) + " on " + to_string(s));
    std::optional<Int> best;
    for (const auto& e : monomial_support(s, c)) {
        const Int mult = c.h - e[index];
        if (!best || mult < *best)
            best = mult;
    }
    return best;
}

/// The sub-scroll on the summands listed in keep (zero-based, duplicates ignored),
/// together with the restricted class. Coefficients are unchanged by restriction.
inline std::pair<Scroll, DivisorClass> restrict_to_subscroll(const Scroll& s, std::span<const std::size_t> keep,
                                                             const DivisorClass& c)
{
    std::vector<std::size_t> idx(keep.begin(), keep.end());
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.size() < 2)
        fail(Errc::TooFewSummands, "a sub-scroll needs at least two summands");
    std::vector<Int> twists;
    for (auto i : idx) {
        if (i >= s.rank())
            fail(Errc::IndexOutOfRange, "summand " + std::to_string(i) + " on " + to_string(s));
        twists.push_back(s.twist(i));
    }
    return {Scroll(std::move(twists)), c};
}

inline std::pair<Scroll, DivisorClass> restrict_to_subscroll(const Scroll& s, std::initializer_list<std::size_t> keep,
                                                             const DivisorClass& c)
{
    return restrict_to_subscroll(s, std::span<const std::size_t>(keep.begin(), keep.size()), c);
}

struct MinimalDegreeData {
    Int degree = 0;
    Int ambient_dimension = 0;
    bool is_minimal_degree = false;

    friend bool operator==(const MinimalDegreeData&, const MinimalDegreeData&) = default;
};

/// Degree and ambient space of the image of the scroll under |O(1)|.
inline MinimalDegreeData minimal_degree_data(const Scroll& s)
{
    if (s.twists().back() < 0)
        fail(Errc::NegativeTwist, to_string(s) + " is not mapped onto a scroll by |O(1)|");
    const Int degree = s.delta();
    const Int n = static_cast<Int>(s.rank());
    const Int ambient = degree + n - 1;
    return {degree, ambient, degree == (ambient - n) + 1};
}

} // namespace gfano
