// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cli.hpp"
#include "oracles.hpp"

#include <gfano/blowup.hpp>
#include <gfano/classifier.hpp>
#include <gfano/double_cover.hpp>
#include <gfano/k3_pencil.hpp>
#include <gfano/scroll.hpp>
#include <gfano/surface.hpp>
#include <gfano/wps.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gfano;

namespace {

struct Gate {
    int failed = 0;
    std::vector<std::string> notes;

    void note(std::string s) { notes.push_back(std::move(s)); }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            note(what);
    }

    void criterion(int id, const std::string& title, const std::function<void(Gate&)>& body)
    {
        Gate inner;
        try {
            body(inner);
        } catch (const std::exception& ex) {
            inner.note(std::string("exception: ") + ex.what());
        }
        const bool ok = inner.notes.empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", id, title.c_str());
        for (std::size_t i = 0; i < inner.notes.size() && i < 8; ++i)
            std::printf("       %s\n", inner.notes[i].c_str());
        if (inner.notes.size() > 8)
            std::printf("       ... %zu more\n", inner.notes.size() - 8);
    }
};

std::string at_m(Int m) { return "m = " + std::to_string(m); }

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    Gate gate;

    gate.criterion(1, "Riemann-Roch counts 4, 10, 21 for (-K)^3 = 2", [](Gate& g) {
        g.expect(rr_chi(2, 1) == 4, "rr_chi(2,1)");
        g.expect(rr_chi(2, 2) == 10, "rr_chi(2,2)");
        g.expect(rr_chi(2, 3) == 21, "rr_chi(2,3)");
    });

    gate.criterion(2, "Hilbert series of CI(2,6) in P(1,1,1,1,2,3) matches RR and the expansion oracle", [](Gate& g) {
        const WeightedCI x{{1, 1, 1, 1, 2, 3}, {2, 6}};
        const auto series = hilbert_coeffs(x, 12);
        for (Int k = 0; k <= 12; ++k) {
            const auto got = series[static_cast<std::size_t>(k)];
            g.expect(got == rr_chi(2, k), "k = " + std::to_string(k) + " vs rr_chi");
            g.expect(got == oracle::ci_hilbert_function(x.weights(), x.rel_degrees(), k),
                     "k = " + std::to_string(k) + " vs oracle");
        }
        g.expect(series[6] == 104, "value 104 at k = 6");
    });

    gate.criterion(3, "Sextic in P(1,1,1,2,3): closed form, (-K)^3 = 8 with amplitude 2, H^3 = 1", [](Gate& g) {
        const WeightedCI x{{1, 1, 1, 2, 3}, {6}};
        const auto series = hilbert_coeffs(x, 20);
        for (Int k = 0; k <= 20; ++k)
            g.expect(series[static_cast<std::size_t>(k)] == 1 + k * (8 + 3 * k + k * k) / 6,
                     "k = " + std::to_string(k));
        const auto d = anticanonical_degree(x);
        g.expect(d.value == boost::rational<Int>(8) && d.integral, "(-K)^3");
        g.expect(d.amplitude == 2, "amplitude");
        g.expect(polarization_degree(x) == boost::rational<Int>(1), "H^3");
    });

    gate.criterion(4, "infer_ring([1,3,7,14,25,41,63]) = ({1,1,1,2,3}, {6})", [](Gate& g) {
        g.expect(infer_ring({1, 3, 7, 14, 25, 41, 63}) == RingModel{{1, 1, 1, 2, 3}, {6}}, "model");
    });

    gate.criterion(5, "O(1)^3 on F(m,m-4,0) is 2m-4 and the cover degree is 4m-8, m = 3..20", [](Gate& g) {
        for (Int m = 3; m <= 20; ++m) {
            const Scroll s{m, m - 4, 0};
            g.expect(intersect(s, {kTautological, kTautological, kTautological}) == 2 * m - 4, at_m(m));
            g.expect(cover_degree(branch_for_taut_anticanonical(s)) == 4 * m - 8, at_m(m) + " cover");
        }
    });

    gate.criterion(6, "Branch verdict passes exactly for m = 3..12, fiber multiplicity 4 for m >= 13", [](Gate& g) {
        for (Int m = 3; m <= 30; ++m) {
            const auto r = analyze_um(m);
            g.expect((r.verdict == Verdict::PassesDuValNecessary) == (m <= 12), at_m(m) + " verdict");
            if (m >= 13)
                g.expect(r.fiber_mult == 4, at_m(m) + " fiber multiplicity");
        }
    });

    gate.criterion(7, "Fixed component B has multiplicity 1 for m = 3..30 and R.B.Sigma = 0", [](Gate& g) {
        for (Int m = 3; m <= 30; ++m) {
            const auto r = analyze_um(m);
            g.expect(r.b_mult == 1, at_m(m) + ": b_mult = " + std::to_string(r.b_mult));
            g.expect(r.rbs == 0, at_m(m) + ": R.B.Sigma = " + std::to_string(r.rbs));
        }
    });

    gate.criterion(8, "Branch on Sigma_4 is (4,12) = xi + (3,12), residual.xi = 0, genus 10, m = 4..30", [](Gate& g) {
        for (Int m = 4; m <= 30; ++m) {
            const auto r = analyze_um(m);
            const auto [sub, c] = restrict_to_subscroll(r.base, {0, 1}, r.branch);
            const auto on_sigma = from_scroll(sub, c);
            g.expect(on_sigma == SurfaceClass{4, 4, 12}, at_m(m) + " restriction");
            const auto d = forced_minimal_decomposition(on_sigma);
            g.expect(d.mu == 1 && d.residual == SurfaceClass{4, 3, 12}, at_m(m) + " decomposition");
            g.expect(intersect2(d.residual, minimal_section(4)) == 0, at_m(m) + " residual.xi");
            g.expect(genus(d.residual) == 10, at_m(m) + " genus");
        }
    });

    gate.criterion(9, "Blowup chains give 2m-2 and 0 for m = 3..12, and 4 for (8,2,1)", [](Gate& g) {
        for (Int m = 3; m <= 12; ++m) {
            g.expect(blowup_degree({4 * m - 8, m - 4, 0}) == 2 * m - 2, at_m(m) + " cover chain");
            g.expect(blowup_degree({2 * m - 2, m - 2, 0}) == 0, at_m(m) + " cone chain");
        }
        g.expect(blowup_degree({8, 2, 1}) == 4, "(8,2,1)");
    });

    gate.criterion(10, "K3 chain: (1,m) -> (2,m) -> (1,m), degree 2m-2, base locus dimension", [](Gate& g) {
        for (Int m = 2; m <= 30; ++m) {
            const auto pulled = cover_pullback({4, 1, m});
            g.expect(pulled == PencilClass{2, m}, at_m(m) + " pullback");
            const auto reduced = blowup_section_reduce(pulled);
            g.expect(reduced == PencilClass{1, m}, at_m(m) + " reduce");
            g.expect(saint_donat_form(reduced) == m, at_m(m) + " form");
            g.expect(fano_degree(m) == 2 * m - 2, at_m(m) + " degree");
            g.expect(base_locus_dimension(m) == (m == 2 ? 0 : 1), at_m(m) + " base locus");
        }
    });

    gate.criterion(11, "Classifier: 13 cases, degree multiset, exhaustive pruning, verify-paper exits 0", [](Gate& g) {
        const auto cases = enumerate_cases();
        g.expect(cases.size() == 13, "case count");
        std::multiset<Int> degrees;
        for (const auto& c : cases)
            degrees.insert(c.degree);
        g.expect(degrees == std::multiset<Int>{2, 4, 4, 6, 6, 8, 10, 12, 14, 16, 18, 20, 22}, "degree multiset");

        std::set<std::pair<Int, Int>> survivors, expected{{0, -1}, {0, 0}};
        for (Int a = 1; a <= 12; ++a)
            expected.insert({a, -2});
        for (Int b = -2; b <= 12; ++b)
            for (Int a = b; a <= 12; ++a)
                if (prune(a, b).kind != CaseVerdict::Kind::Excluded)
                    survivors.insert({a, b});
        g.expect(survivors == expected, "pruning survivors");

        std::ostringstream out, err;
        const int code = cli::run({"verify-paper"}, out, err);
        g.expect(code == 0, "verify-paper exit code " + std::to_string(code));
    });

    gate.criterion(12, "Property suites, each with at least 100 instances", [](Gate& g) {
        Int n = 0;
        for (Int d1 = -10; d1 <= 10; ++d1)
            for (Int d2 = -10; d2 <= 10; ++d2)
                for (Int h = 0; h <= 4; ++h)
                    for (Int f = -20; f <= 20; f += 10) {
                        const Scroll s{d1, d2};
                        const auto c = from_scroll(s, {h, f});
                        if (h0(s, {h, f}) != oracle::h0_on_sigma(c.e, c.xi, c.fib))
                            g.note("h0 routes differ on F(" + std::to_string(d1) + "," + std::to_string(d2) + ")");
                        ++n;
                    }
        g.expect(n >= 100, "h0 instance count");

        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<Int> twist(-5, 12), coef(-9, 9);
        for (int i = 0; i < 200; ++i) {
            const Scroll s{twist(rng), twist(rng), twist(rng)};
            std::vector<DivisorClass> cs{{coef(rng), coef(rng)}, {coef(rng), coef(rng)}, {coef(rng), coef(rng)}};
            const Int value = intersect(s, cs);
            std::shuffle(cs.begin(), cs.end(), rng);
            g.expect(intersect(s, cs) == value, "intersect permutation");
        }

        n = 0;
        for (Int d = 2; d <= 22; d += 2)
            for (Int k = 0; k <= 20; ++k, ++n)
                g.expect(rr_chi(d, -1 - k) == -rr_chi(d, k), "rr antisymmetry");
        g.expect(n >= 100, "rr instance count");

        const auto a = hilbert_coeffs({{1, 1, 1, 1, 2, 3}, {2, 6}}, 120);
        const auto b = hilbert_coeffs({{1, 1, 1, 1, 3}, {6}}, 120);
        g.expect(a.size() == 121 && a == b, "presentation equivalence");

        n = 0;
        for (Int xi = -5; xi <= 5; ++xi)
            for (Int fib = -10; fib <= 10; ++fib, ++n) {
                const SurfaceClass c{4, xi, fib};
                g.expect(square(cover_pullback(c)) == 2 * intersect2(c, c), "square doubling");
            }
        g.expect(n >= 100, "square doubling instance count");
    });

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool fast = elapsed < 1.0;
    std::printf("[%s]    runtime %.3f s (limit 1 s)\n", fast ? "PASS" : "FAIL", elapsed);
    gate.failed += fast ? 0 : 1;

    std::printf("%d criterion line(s) failed\n", gate.failed);
    return gate.failed == 0 ? 0 : 1;
}
