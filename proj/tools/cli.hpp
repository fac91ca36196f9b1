#pragma once

#include <gfano/blowup.hpp>
#include <gfano/classifier.hpp>
#include <gfano/double_cover.hpp>
#include <gfano/k3_pencil.hpp>
#include <gfano/report.hpp>
#include <gfano/scroll.hpp>
#include <gfano/surface.hpp>
#include <gfano/wps.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gfano::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3 };

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int parse_int(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError("not an integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<Int> parse_csv(std::string_view s)
{
    std::vector<Int> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        out.push_back(parse_int(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline DivisorClass parse_class(std::string_view s)
{
    const auto v = parse_csv(s);
    if (v.size() != 2)
        throw UsageError("a class is two integers 'h,f', got '" + std::string(s) + "'");
    return {v[0], v[1]};
}

inline std::vector<DivisorClass> parse_classes(std::string_view s)
{
    std::vector<DivisorClass> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(';', start);
        out.push_back(parse_class(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline std::string show_exponent(const ExponentVector& e)
{
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i)
        out += (i ? "," : "") + std::to_string(e[i]);
    return out + ")";
}

inline nlohmann::json analysis_json(const BranchReport& r)
{
    std::vector<Int> twists(r.base.twists().begin(), r.base.twists().end());
    nlohmann::json fiber = nullptr;
    if (r.fiber_mult)
        fiber = *r.fiber_mult;
    return {{"m", r.m},
            {"base", twists},
            {"branch", {r.branch.h, r.branch.f}},
            {"b_class", {r.b_class.h, r.b_class.f}},
            {"b_mult", r.b_mult},
            {"residual_class", {r.residual_class.h, r.residual_class.f}},
            {"point_coordinate", static_cast<Int>(r.point_index) + 1},
            {"fiber_mult", fiber},
            {"rbs", r.rbs},
            {"verdict", std::string(to_string(r.verdict))}};
}

inline void print_report(const std::vector<ClassificationCase>& cases, std::ostream& out)
{
    for (const auto& c : cases) {
        out << "== " << c.label << "  m=" << c.m << "  W=" << to_string(c.w) << "  (-K)^3=" << c.degree
            << "  dim Bs=" << c.bs_dim << "\n";
        out << "   " << c.construction << "\n";
        for (const auto& r : c.checks)
            out << "   [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " {" << r.anchor
                << "}: expected " << r.expected << ", got " << r.got << "\n";
    }
    const auto rep = make_report(cases);
    out << "summary: " << rep.passed() << " passed, " << rep.failed() << " failed\n";
}

/// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Divisor calculus and classification checks for Gorenstein Fano threefolds "
                 "with anticanonical base points",
                 "gfano"};
    app.footer("Classes on a scroll F(d1,...,dn) are 'h,f' meaning h*O(1) + f*F; the system\n"
               "|O(k) - lF| is written k,-l. Use --class=h,f when h is negative.");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int code = kOk;
    bool json = false;

    auto* verify = app.add_subcommand("verify-paper", "Run every case check of the classification table");
    Int max_degree = kDefaultSeriesDegree;
    verify->add_flag("--json", json, "Emit the report as JSON");
    verify->add_option("--max-degree", max_degree, "Hilbert series truncation degree (>= 6)");
    verify->callback([&] {
        if (max_degree < 6)
            throw UsageError("--max-degree must be at least 6");
        const auto cases = verify_all(enumerate_cases(), max_degree);
        const auto rep = make_report(cases);
        if (json)
            out << nlohmann::json(rep).dump(2) << "\n";
        else
            print_report(cases, out);
        code = rep.ok() ? kOk : kCheckFailed;
    });

    // scroll
    auto* scroll = app.add_subcommand("scroll", "Sections and intersections on F(d1,...,dn)");
    scroll->require_subcommand(1);
    std::string twists_csv, class_str, classes_str, comp_str;
    Int coordinate = 0;
    auto add_twists = [&](CLI::App* sub) { sub->add_option("--d", twists_csv, "Twists, e.g. 5,1,0")->required(); };
    auto* s_h0 = scroll->add_subcommand("h0", "Dimension of H^0 of a class");
    add_twists(s_h0);
    s_h0->add_option("--class", class_str, "h,f")->required();
    s_h0->callback([&] { out << h0(Scroll(parse_csv(twists_csv)), parse_class(class_str)) << "\n"; });

    auto* s_support = scroll->add_subcommand("support", "Fiber monomials with non-zero coefficient space");
    add_twists(s_support);
    s_support->add_option("--class", class_str, "h,f")->required();
    s_support->callback([&] {
        for (const auto& e : monomial_support(Scroll(parse_csv(twists_csv)), parse_class(class_str)))
            out << show_exponent(e) << "\n";
    });

    auto* s_int = scroll->add_subcommand("intersect", "Top intersection number of n classes");
    add_twists(s_int);
    s_int->add_option("--classes", classes_str, "h,f;h,f;...")->required();
    s_int->callback([&] {
        const Scroll s(parse_csv(twists_csv));
        out << intersect(s, parse_classes(classes_str)) << "\n";
    });

    auto* s_can = scroll->add_subcommand("canonical", "Canonical class");
    add_twists(s_can);
    s_can->callback([&] { out << to_string(canonical_class(Scroll(parse_csv(twists_csv)))) << "\n"; });

    auto* s_fixed = scroll->add_subcommand("fixed", "Multiplicity of a rigid fixed component");
    add_twists(s_fixed);
    s_fixed->add_option("--comp", comp_str, "h,f of the rigid component")->required();
    s_fixed->add_option("--class", class_str, "h,f of the system")->required();
    s_fixed->callback([&] {
        out << fixed_component_multiplicity(Scroll(parse_csv(twists_csv)), parse_class(comp_str),
                                            parse_class(class_str))
            << "\n";
    });

    auto* s_mult = scroll->add_subcommand("mult", "Generic multiplicity at a coordinate point of the fiber");
    add_twists(s_mult);
    s_mult->add_option("--class", class_str, "h,f")->required();
    s_mult->add_option("--coordinate", coordinate, "1-based coordinate index i (all x_j, j != i, vanish)")
        ->required();
    s_mult->callback([&] {
        const Scroll s(parse_csv(twists_csv));
        if (coordinate < 1 || coordinate > static_cast<Int>(s.rank()))
            fail(Errc::IndexOutOfRange, "coordinate " + std::to_string(coordinate));
        const auto m = fiber_multiplicity_at(s, parse_class(class_str), static_cast<std::size_t>(coordinate - 1));
        out << (m ? std::to_string(*m) : std::string("infinite")) << "\n";
    });

    auto* s_deg = scroll->add_subcommand("degree", "Degree and ambient space of the image under |O(1)|");
    add_twists(s_deg);
    s_deg->callback([&] {
        const auto d = minimal_degree_data(Scroll(parse_csv(twists_csv)));
        out << "degree " << d.degree << " in P^" << d.ambient_dimension << " minimal "
            << (d.is_minimal_degree ? "yes" : "no") << "\n";
    });

    // surface
    auto* surface = app.add_subcommand("surface", "Classes xi*ξ + fib*𝔣 on Hirzebruch surfaces");
    surface->require_subcommand(1);
    Int e = 0;
    auto* split = surface->add_subcommand("split", "Split off the forced copies of the minimal section");
    split->add_option("--e", e, "Surface index e >= 0")->required();
    split->add_option("--class", class_str, "xi,fib")->required();
    split->callback([&] {
        if (e < 0)
            throw UsageError("--e must be non-negative");
        const auto c = parse_class(class_str);
        const auto d = forced_minimal_decomposition({e, c.h, c.f});
        out << "forced " << d.mu << " x ξ, residual " << to_string(d.residual) << "\n";
        out << "residual.ξ = " << intersect2(d.residual, minimal_section(e)) << "\n";
        if (d.residual.xi >= 0)
            out << "genus(residual) = " << genus(d.residual) << "\n";
    });

    // k3
    auto* k3 = app.add_subcommand("k3", "Elliptic pencil lattice on the elephant");
    k3->require_subcommand(1);
    Int m = 0;
    auto* chain = k3->add_subcommand("chain", "Restriction of -K through the double cover and the blowup");
    chain->add_option("--m", m, "Fiber coefficient m >= 2")->required();
    chain->callback([&] {
        const auto on_sigma = from_scroll(Scroll{m, m - 4}, kTautological);
        const auto pulled = cover_pullback(on_sigma);
        const auto reduced = blowup_section_reduce(pulled);
        out << "O(1)|Σ_4 = " << to_string(on_sigma) << "\n";
        out << "-K_U|S = " << to_string(pulled) << "  square " << square(pulled) << "\n";
        out << "-K_Y|S = " << to_string(reduced) << "  m = " << saint_donat_form(reduced) << "\n";
        out << "(-K_X)^3 = " << fano_degree(m) << "  dim Bs = " << base_locus_dimension(m) << "\n";
    });

    // wps
    auto* wps = app.add_subcommand("wps", "Weighted complete intersections and Hilbert series");
    wps->require_subcommand(1);
    std::string weights_csv, degrees_csv, series_csv;
    Int n_max = kDefaultSeriesDegree;
    auto* hilbert = wps->add_subcommand("hilbert", "Hilbert series coefficients");
    hilbert->add_option("--weights", weights_csv, "w0,...,wN")->required();
    hilbert->add_option("--degrees", degrees_csv, "Relation degrees e1,...,ec (may be empty)");
    hilbert->add_option("--max", n_max, "Truncation degree");
    hilbert->callback([&] {
        const WeightedCI x(parse_csv(weights_csv), parse_csv(degrees_csv));
        const auto coeffs = hilbert_coeffs(x, n_max);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out << (i ? "," : "") << coeffs[i];
        out << "\n";
    });
    auto* infer = wps->add_subcommand("infer", "Generator and relation degrees from a Hilbert prefix");
    infer->add_option("--series", series_csv, "1,c1,c2,...")->required();
    infer->callback([&] {
        const auto model = infer_ring(parse_csv(series_csv));
        out << "generators " << detail::show(model.gen_degrees) << "\n";
        out << "relations " << detail::show(model.rel_degrees) << "\n";
    });
    auto* wdeg = wps->add_subcommand("degree", "Anticanonical degree of a threefold complete intersection");
    wdeg->add_option("--weights", weights_csv, "w0,...,wN")->required();
    wdeg->add_option("--degrees", degrees_csv, "Relation degrees");
    wdeg->callback([&] {
        const auto d = anticanonical_degree(WeightedCI(parse_csv(weights_csv), parse_csv(degrees_csv)));
        out << "(-K)^3 = " << detail::show(d.value) << "  amplitude " << d.amplitude << "  integral "
            << (d.integral ? "yes" : "no") << "\n";
    });
    Int rr_degree = 0;
    auto* rr = wps->add_subcommand("rr", "Riemann-Roch values chi(-kK), k = 0..max");
    rr->add_option("--degree", rr_degree, "(-K)^3")->required();
    rr->add_option("--max", n_max, "Largest k");
    rr->callback([&] {
        for (Int k = 0; k <= n_max; ++k)
            out << (k ? "," : "") << rr_chi(rr_degree, k);
        out << "\n";
    });

    // cover
    auto* cover = app.add_subcommand("cover", "Double covers of scrolls");
    cover->require_subcommand(1);
    auto* analyze = cover->add_subcommand("analyze", "Branch divisor analysis of U_m over F(m,m-4,0)");
    analyze->add_option("--m", m, "m >= 3")->required();
    analyze->add_flag("--json", json, "Emit JSON");
    analyze->callback([&] {
        const auto r = analyze_um(m);
        if (json) {
            out << nlohmann::json{{"version", kVersion}, {"analysis", analysis_json(r)}}.dump(2) << "\n";
            return;
        }
        out << "m = " << r.m << "\n"
            << "base = " << to_string(r.base) << "\n"
            << "branch D = " << to_string(r.branch) << "\n"
            << "B = " << to_string(r.b_class) << " fixed multiplicity " << r.b_mult << "\n"
            << "R = " << to_string(r.residual_class) << "\n"
            << "R.B.Σ = " << r.rbs << "\n"
            << "multiplicity at x" << r.point_index + 1 << " = "
            << (r.fiber_mult ? std::to_string(*r.fiber_mult) : std::string("infinite")) << "\n"
            << "cover degree = " << cover_degree(branch_for_taut_anticanonical(r.base)) << "\n"
            << "verdict = " << to_string(r.verdict) << "\n";
    });

    // classify
    auto* classify = app.add_subcommand("classify", "Classification table");
    classify->require_subcommand(1);
    auto* enumerate = classify->add_subcommand("enumerate", "List the thirteen cases");
    enumerate->callback([&] {
        for (const auto& c : enumerate_cases()) {
            out << c.label << "\tm=" << c.m << "\t(a,b)=";
            if (c.nb)
                out << "(" << c.nb->a() << "," << c.nb->b() << ")";
            else
                out << "-";
            out << "\tW=" << to_string(c.w) << "\t(-K)^3=" << c.degree << "\tdim Bs=" << c.bs_dim << "\t"
                << c.construction << "\n";
        }
    });

    // blowup
    auto* blowup = app.add_subcommand("blowup", "Blowups along curves");
    blowup->require_subcommand(1);
    Int ambient = 0, curve = 0, g = 0;
    auto* bdeg = blowup->add_subcommand("degree", "(-K)^3 after blowing up a curve");
    bdeg->add_option("--ambient", ambient, "(-K)^3 before")->required();
    bdeg->add_option("--curve", curve, "-K.C")->required();
    bdeg->add_option("--genus", g, "Arithmetic genus of C")->required();
    bdeg->callback([&] { out << blowup_degree({ambient, curve, g}) << "\n"; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return kUsage;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return kUsage;
    } catch (const DomainError& ex) {
        err << "domain error: " << ex.what() << "\n";
        return kDomain;
    }
    return code;
}

} // namespace gfano::cli
