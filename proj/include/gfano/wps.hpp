#pragma once

#include <gfano/errors.hpp>

#include <boost/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gfano {

/// Default truncation degree for Hilbert series work.
inline constexpr Int kDefaultSeriesDegree = 24;

/// Coefficients h^0(kA), k = 0, 1, ... of a graded ring.
using HilbertPrefix = std::vector<Int>;

/// Complete intersection of forms of degrees rel_degrees in P(weights).
class WeightedCI {
public:
    WeightedCI(std::vector<Int> weights, std::vector<Int> rel_degrees)
        : weights_(std::move(weights)), rel_degrees_(std::move(rel_degrees))
    {
        if (weights_.empty())
            fail(Errc::InvalidWeights, "no weights");
        if (std::any_of(weights_.begin(), weights_.end(), [](Int w) { return w < 1; }))
            fail(Errc::InvalidWeights, "weights must be positive");
        if (std::any_of(rel_degrees_.begin(), rel_degrees_.end(), [](Int e) { return e < 2; }))
            fail(Errc::InvalidWeights, "relation degrees must be at least 2");
        if (rel_degrees_.size() >= weights_.size())
            fail(Errc::InvalidWeights, "too many relations for a positive-dimensional intersection");
        std::sort(weights_.begin(), weights_.end());
        std::sort(rel_degrees_.begin(), rel_degrees_.end());
    }

    const std::vector<Int>& weights() const noexcept { return weights_; }
    const std::vector<Int>& rel_degrees() const noexcept { return rel_degrees_; }

    Int dimension() const noexcept
    {
        return static_cast<Int>(weights_.size()) - 1 - static_cast<Int>(rel_degrees_.size());
    }

    /// sum(w) - sum(e); -K is O(amplitude) by adjunction.
    Int amplitude() const noexcept
    {
        return std::accumulate(weights_.begin(), weights_.end(), Int{0})
               - std::accumulate(rel_degrees_.begin(), rel_degrees_.end(), Int{0});
    }

    friend bool operator==(const WeightedCI&, const WeightedCI&) = default;

private:
    std::vector<Int> weights_;
    std::vector<Int> rel_degrees_;
};

/// Truncated expansion of prod(1 - t^e) / prod(1 - t^w) up to t^n_max.
inline HilbertPrefix hilbert_series(const std::vector<Int>& gen_degrees, const std::vector<Int>& rel_degrees,
                                    Int n_max)
{
    if (n_max < 0)
        fail(Errc::OutOfRange, "negative truncation degree");
    const auto len = static_cast<std::size_t>(n_max) + 1;
    HilbertPrefix a(len, 0);
    a[0] = 1;
    for (Int e : rel_degrees) {
        for (auto k = len; k-- > 0;)
            if (static_cast<Int>(k) >= e)
                a[k] -= a[k - static_cast<std::size_t>(e)];
    }
    // Dividing by 1 - t^w is a running sum with stride w.
    for (Int w : gen_degrees) {
        for (auto k = static_cast<std::size_t>(w); k < len; ++k)
            a[k] += a[k - static_cast<std::size_t>(w)];
    }
    return a;
}

inline HilbertPrefix hilbert_coeffs(const WeightedCI& x, Int n_max)
{
    return hilbert_series(x.weights(), x.rel_degrees(), n_max);
}

struct AnticanonicalDegree {
    boost::rational<Int> value;
    Int amplitude = 0;
    bool integral = false; ///< integer and at least 1
};

/// (-K)^3 = amplitude^3 * prod(e) / prod(w) for a threefold complete intersection.
inline AnticanonicalDegree anticanonical_degree(const WeightedCI& x)
{
    if (x.dimension() != 3)
        fail(Errc::WrongDimension, "expected a threefold, got dimension " + std::to_string(x.dimension()));
    const Int amp = x.amplitude();
    boost::rational<Int> value(amp * amp * amp);
    for (Int e : x.rel_degrees())
        value *= e;
    for (Int w : x.weights())
        value /= w;
    return {value, amp, value.denominator() == 1 && value.numerator() >= 1};
}

/// Degree of the polarization O(1) itself: prod(e) / prod(w).
inline boost::rational<Int> polarization_degree(const WeightedCI& x)
{
    boost::rational<Int> value(1);
    for (Int e : x.rel_degrees())
        value *= e;
    for (Int w : x.weights())
        value /= w;
    return value;
}

/// Riemann-Roch for a Gorenstein Fano threefold of the given degree:
/// chi(-kK) = (2k + 1) + k(k + 1)(2k + 1) degree / 12.
inline Int rr_chi(Int degree, Int k)
{
    const Int cubic = k * (k + 1) * (2 * k + 1) * degree;
    if (cubic % 12 != 0)
        fail(Errc::NonIntegralChi,
             "degree " + std::to_string(degree) + " gives a fractional value at k = " + std::to_string(k));
    return (2 * k + 1) + cubic / 12;
}

struct RingModel {
    std::vector<Int> gen_degrees;
    std::vector<Int> rel_degrees;

    friend bool operator==(const RingModel&, const RingModel&) = default;
};

/// Reads off generators and relations degree by degree: a deficit against
/// the current candidate series calls for new generators in that degree, a
/// surplus for new relations. Returns the minimal model, which reproduces seq
/// exactly over its full length.
inline RingModel infer_ring(const HilbertPrefix& seq)
{
    if (seq.size() < 2)
        fail(Errc::Inconsistent, "need at least two coefficients");
    if (seq[0] != 1)
        fail(Errc::Inconsistent, "coefficient 0 must be 1");
    RingModel model;
    const auto n_max = static_cast<Int>(seq.size()) - 1;
    for (Int d = 1; d <= n_max; ++d) {
        const Int target = seq[static_cast<std::size_t>(d)];
        if (target < 0)
            fail(Errc::Inconsistent, "negative coefficient in degree " + std::to_string(d));
        const Int candidate = hilbert_series(model.gen_degrees, model.rel_degrees, d).back();
        // Earlier relations over-absorbed: no graded ring has this candidate.
        if (candidate < 0)
            fail(Errc::Inconsistent, "relations exceed the candidate in degree " + std::to_string(d));
        for (Int k = 0; k < target - candidate; ++k)
            model.gen_degrees.push_back(d);
        for (Int k = 0; k < candidate - target; ++k)
            model.rel_degrees.push_back(d);
    }
    return model;
}

} // namespace gfano
