// Command-line front end: solve, bound, classnumber, lucas, bhv-verify,
// sylvester. Text output by default, --format json for one JSON document.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadpower/classnum.hpp"
#include "quadpower/lucas.hpp"
#include "quadpower/solver.hpp"
#include "quadpower/sylvester.hpp"

using json = nlohmann::ordered_json;
using namespace quadpower;

namespace {

MonicQuadratic parse_poly(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--poly", "expected two comma-separated "
                                             "integers a,b for x^2 + a x + b");
    try {
        return MonicQuadratic{Int(text.substr(0, comma)),
                              Int(text.substr(comma + 1))};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--poly", "could not parse '" + text + "'");
    }
}

Int default_search_bound() {
    if (const char* env = std::getenv("QUADPOWER_SEARCH_BOUND")) {
        try {
            Int n(env);
            if (n >= 1) return n;
        } catch (const std::invalid_argument&) {
        }
        std::cerr << "warning: ignoring invalid QUADPOWER_SEARCH_BOUND\n";
    }
    return 10000;
}

std::string poly_text(const MonicQuadratic& f) {
    std::string s = "x^2";
    if (f.a != 0)
        s += (f.a > 0 ? " + " : " - ") + Int(abs(f.a)).get_str() + " x";
    if (f.b != 0) s += (f.b > 0 ? " + " : " - ") + Int(abs(f.b)).get_str();
    return s;
}

const char* regime_name(PlanRegime r) {
    return r == PlanRegime::special_list ? "special-list" : "class-number";
}

const char* tag_name(PlanTag t) {
    return t == PlanTag::provably_complete ? "provably-complete"
                                           : "bounded-search-only";
}

json plan_json(const ExponentPlan& plan) {
    json j;
    j["regime"] = regime_name(plan.regime);
    if (plan.q0) j["q0"] = *plan.q0;
    if (plan.h) j["class_number"] = plan.h->get_str();
    j["check_set"] = plan.check_set;
    json tags = json::array();
    for (const auto& [q, t] : plan.tags)
        tags.push_back({{"q", q}, {"kind", tag_name(t)}});
    j["tags"] = tags;
    if (plan.lebesgue_no_solutions) j["certificate"] = "no-solutions";
    return j;
}

json poly_json(const MonicQuadratic& f) {
    return {{"a", f.a.get_str()},
            {"b", f.b.get_str()},
            {"discriminant", f.disc().get_str()}};
}

void print_plan_text(const ExponentPlan& plan) {
    std::cout << "regime: " << regime_name(plan.regime);
    if (plan.h) std::cout << "   h = " << plan.h->get_str();
    if (plan.q0) std::cout << "   q0 = " << *plan.q0;
    std::cout << "\ncheck set:";
    if (plan.check_set.empty()) std::cout << " (empty)";
    for (unsigned q : plan.check_set)
        std::cout << " " << q << " [" << tag_name(plan.tags.at(q)) << "]";
    std::cout << "\n";
    if (plan.lebesgue_no_solutions)
        std::cout << "certified: no solutions with |y| > 1 for any exponent\n";
}

int cmd_solve(const MonicQuadratic& f, const SolveOptions& opts,
              bool as_json) {
    SolutionSet set = solve_all(f, opts);
    if (as_json) {
        json j;
        j["command"] = "solve";
        j["polynomial"] = poly_json(f);
        j["plan"] = plan_json(set.plan);
        j["search_bound"] = opts.search_bound.get_str();
        j["include_trivial"] = opts.include_trivial;
        json sols = json::array();
        for (const auto& s : set.solutions)
            sols.push_back(
                {{"x", s.x.get_str()}, {"y", s.y.get_str()}, {"q", s.q}});
        j["solutions"] = sols;
        json comp = json::array();
        for (const auto& [q, c] : set.completeness) {
            json e{{"q", q}};
            if (c.provably_complete) {
                e["kind"] = "provably-complete";
            } else {
                e["kind"] = "complete-up-to-bound";
                e["bound"] = c.bound.get_str();
            }
            comp.push_back(e);
        }
        j["completeness"] = comp;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "y^q = " << poly_text(f)
              << "   (discriminant " << f.disc().get_str() << ")\n";
    print_plan_text(set.plan);
    if (set.solutions.empty()) {
        std::cout << "no solutions with |y| > 1\n";
    } else {
        std::cout << "solutions:\n";
        for (const auto& s : set.solutions)
            std::cout << "  q = " << s.q << "   x = " << s.x.get_str()
                      << "   y = " << s.y.get_str() << "\n";
    }
    for (const auto& [q, c] : set.completeness) {
        std::cout << "completeness q = " << q << ": "
                  << (c.provably_complete
                          ? "provably complete"
                          : "complete up to search bound " + c.bound.get_str())
                  << "\n";
    }
    return 0;
}

int cmd_bound(const MonicQuadratic& f, bool as_json) {
    ExponentPlan plan = exponent_plan(f);
    if (as_json) {
        json j;
        j["command"] = "bound";
        j["polynomial"] = poly_json(f);
        j["plan"] = plan_json(plan);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "y^q = " << poly_text(f) << "   (discriminant "
              << f.disc().get_str() << ")\n";
    print_plan_text(plan);
    return 0;
}

int cmd_classnumber(const Int& disc, bool as_json) {
    Int h = class_number(disc);
    if (as_json) {
        json j;
        j["command"] = "classnumber";
        j["discriminant"] = disc.get_str();
        j["class_number"] = h.get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << h.get_str() << "\n";
    }
    return 0;
}

int cmd_lucas(const Int& p, const Int& b, unsigned long n, bool primitive,
              bool as_json) {
    LucasSpec spec(p, b);
    Int u = lucas_u(spec, n);
    json j;
    if (as_json) {
        j["command"] = "lucas";
        j["trace"] = spec.trace_p.get_str();
        j["disc"] = spec.disc_b.get_str();
        j["norm"] = spec.norm_q.get_str();
        j["n"] = n;
        j["u"] = u.get_str();
    } else {
        std::cout << "u_" << n << "(P=" << spec.trace_p.get_str()
                  << ", b=" << spec.disc_b.get_str()
                  << ", Q=" << spec.norm_q.get_str() << ") = " << u.get_str()
                  << "\n";
    }
    if (primitive) {
        auto pd = has_primitive_prime_divisor(spec, n);
        if (as_json) {
            j["has_primitive_prime_divisor"] = pd.found;
            if (pd.witness) j["witness"] = pd.witness->get_str();
        } else {
            std::cout << "primitive prime divisor: "
                      << (pd.found ? "yes" : "no");
            if (pd.witness)
                std::cout << "   witness " << pd.witness->get_str();
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bhv_verify(int nmax, long height_p, long height_q, bool as_json) {
    BhvSweepReport report = verify_bhv_rows(nmax, height_p, height_q);
    auto expected =
        bhv_rows_within(report.n_values, report.max_p, report.max_q);
    std::vector<BhvEntry> found = report.defects;
    bool matches = found == expected;

    if (as_json) {
        json j;
        j["command"] = "bhv-verify";
        j["height_p"] = report.max_p;
        j["height_q"] = report.max_q;
        j["n_values"] = report.n_values;
        j["pairs_tested"] = report.pairs_tested;
        json defects = json::array();
        for (const auto& d : report.defects)
            defects.push_back({{"n", d.n}, {"trace", d.p}, {"disc", d.b}});
        j["defects"] = defects;
        j["matches_exception_table"] = matches;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sweep |P| <= " << report.max_p << ", |Q| <= "
                  << report.max_q << ", n in {";
        for (size_t i = 0; i < report.n_values.size(); ++i)
            std::cout << (i ? "," : "") << report.n_values[i];
        std::cout << "}: " << report.pairs_tested << " pairs\n";
        std::cout << "pairs without a primitive prime divisor:\n";
        for (const auto& d : report.defects)
            std::cout << "  n = " << d.n << "   (P, b) = (" << d.p << ", "
                      << d.b << ")\n";
        std::cout << "matches the exception table within the box: "
                  << (matches ? "yes" : "NO") << "\n";
    }
    return matches ? 0 : 1;
}

std::string truncated(const Int& t) {
    std::string s = t.get_str();
    if (s.size() <= 60) return s;
    return s.substr(0, 25) + "..." + s.substr(s.size() - 25) + " (" +
           std::to_string(s.size()) + " digits)";
}

json certificate_json(const ScanCertificate& cert) {
    json j;
    j["kind"] = cert.kind == ScanCertificate::Kind::position_theorem
                    ? "position-theorem"
                    : "per-term-only";
    j["complete_for_all_indices"] = cert.complete_for_all_indices;
    if (cert.relied_on_search_bound != 0)
        j["relied_on_search_bound"] = cert.relied_on_search_bound.get_str();
    json checks = json::array();
    for (const auto& [x, pre] : cert.preimage_checks) {
        json e{{"x", x.get_str()}};
        e["preimage"] = pre ? json(pre->get_str()) : json(nullptr);
        checks.push_back(e);
    }
    j["preimage_checks"] = checks;
    j["note"] = cert.note;
    return j;
}

int cmd_sylvester(unsigned m, const Int& a, std::size_t terms, bool scan,
                  const SolveOptions& opts, bool as_json) {
    SylvesterSeq seq = generate_sylvester(m, a, terms);
    if (as_json) {
        json j;
        j["command"] = "sylvester";
        j["m"] = m;
        j["a"] = a.get_str();
        json ts = json::array();
        for (const Int& t : seq.terms) ts.push_back(t.get_str());
        j["terms"] = ts;
        if (scan) {
            PowerScan ps = scan_powers(m, a, terms, opts);
            json hits = json::array();
            for (const auto& h : ps.hits)
                hits.push_back({{"index", h.index},
                                {"base", h.base.get_str()},
                                {"exponent", h.exponent}});
            j["power_hits"] = hits;
            j["certificate"] = certificate_json(ps.certificate);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "G^(" << m << ")(" << a.get_str() << "), " << terms
              << " terms:\n";
    for (std::size_t n = 0; n < seq.terms.size(); ++n)
        std::cout << "  n = " << n << "   " << truncated(seq.terms[n]) << "\n";
    if (scan) {
        PowerScan ps = scan_powers(m, a, terms, opts);
        if (ps.hits.empty()) {
            std::cout << "perfect-power terms: none\n";
        } else {
            std::cout << "perfect-power terms:\n";
            for (const auto& h : ps.hits)
                std::cout << "  n = " << h.index << "   " << h.base.get_str()
                          << "^" << h.exponent << "\n";
        }
        std::cout << "certificate: " << ps.certificate.note;
        if (ps.certificate.relied_on_search_bound != 0)
            std::cout << " (q = 3 list complete up to search bound "
                      << ps.certificate.relied_on_search_bound.get_str()
                      << ")";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power values of monic quadratics with negative "
                 "discriminant, and perfect powers in the sequences they "
                 "generate"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string poly_arg;
    std::string bound_arg;
    std::string include_trivial_arg;

    auto* solve = app.add_subcommand("solve", "solve y^q = x^2 + a x + b");
    std::string solve_poly;
    std::string solve_bound;
    bool solve_trivial = false;
    solve->add_option("--poly", solve_poly, "coefficients a,b")->required();
    solve->add_option("--search-bound", solve_bound,
                      "bound for the non-certified searches");
    solve->add_flag("--include-trivial", solve_trivial,
                    "also report |y| <= 1");

    auto* bound = app.add_subcommand("bound", "exponent bound and check set");
    std::string bound_poly;
    bound->add_option("--poly", bound_poly, "coefficients a,b")->required();

    auto* classnum =
        app.add_subcommand("classnumber", "class number of Q(sqrt(D))");
    std::string cn_disc;
    classnum->add_option("--disc", cn_disc, "fundamental discriminant D < 0")
        ->required();

    auto* lucas = app.add_subcommand("lucas", "Lucas sequence term u_n");
    std::string lu_p, lu_b;
    unsigned long lu_n = 1;
    bool lu_prim = false;
    lucas->add_option("--trace", lu_p, "trace P")->required();
    lucas->add_option("--disc", lu_b, "discriminant b = P^2 - 4Q")->required();
    lucas->add_option("--n", lu_n, "index")->required();
    lucas->add_flag("--primitive", lu_prim,
                    "test for a primitive prime divisor");

    auto* bhv = app.add_subcommand(
        "bhv-verify", "sweep Lucas pairs against the exception table");
    int bhv_nmax = 30;
    long bhv_h = 15, bhv_qmax = 400;
    bhv->add_option("--height", bhv_h, "bound on |P|")->capture_default_str();
    bhv->add_option("--qmax", bhv_qmax, "bound on |Q|")->capture_default_str();
    bhv->add_option("--nmax", bhv_nmax, "largest index checked")
        ->capture_default_str();

    auto* sylv =
        app.add_subcommand("sylvester", "generalised Sylvester sequences");
    unsigned sy_m = 1;
    std::string sy_a;
    std::size_t sy_terms = 12;
    bool sy_scan = false;
    std::string sy_bound;
    sylv->add_option("--m", sy_m, "type")->required();
    sylv->add_option("--a", sy_a, "seed")->required();
    sylv->add_option("--terms", sy_terms, "terms to generate")
        ->capture_default_str();
    sylv->add_flag("--scan", sy_scan, "report perfect-power terms");
    sylv->add_option("--search-bound", sy_bound,
                     "bound for the non-certified searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    bool as_json = format == "json";
    try {
        SolveOptions opts;
        opts.search_bound = default_search_bound();
        if (solve->parsed()) {
            if (!solve_bound.empty()) opts.search_bound = Int(solve_bound);
            opts.include_trivial = solve_trivial;
            return cmd_solve(parse_poly(solve_poly), opts, as_json);
        }
        if (bound->parsed()) return cmd_bound(parse_poly(bound_poly), as_json);
        if (classnum->parsed()) return cmd_classnumber(Int(cn_disc), as_json);
        if (lucas->parsed())
            return cmd_lucas(Int(lu_p), Int(lu_b), lu_n, lu_prim, as_json);
        if (bhv->parsed())
            return cmd_bhv_verify(bhv_nmax, bhv_h, bhv_qmax, as_json);
        if (sylv->parsed()) {
            if (!sy_bound.empty()) opts.search_bound = Int(sy_bound);
            return cmd_sylvester(sy_m, Int(sy_a), sy_terms, sy_scan, opts,
                                 as_json);
        }
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }
}
