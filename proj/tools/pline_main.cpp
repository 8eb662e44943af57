#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pline/chains.hpp"
#include "pline/export.hpp"
#include "pline/graph.hpp"
#include "pline/orbits.hpp"
#include "pline/points.hpp"
#include "pline/standard_form.hpp"
#include "pline/verify.hpp"
#include "pline/words.hpp"

using namespace pline;

namespace {

struct Options {
    std::string ring_arg;
    std::string format = "text";
    int threads = 1; // single-threaded by default so runs are deterministic
    std::uint64_t seed = 20260801;
    Budget budget;
};

// PLINE_BUDGET="gl2=16,group=1000000"
Budget budget_from_env() {
    Budget b;
    const char* env = std::getenv("PLINE_BUDGET");
    if (!env) return b;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::uint64_t val = std::stoull(item.substr(eq + 1));
        if (key == "gl2")
            b.gl2_max_ring = (std::uint32_t)val;
        else if (key == "group")
            b.group_max = val;
        else
            throw construction_error("PLINE_BUDGET: unknown key \"" + key + "\" (use gl2, group)");
    }
    return b;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw construction_error("cannot read file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// JSON document, '@file', or the shorthand Fp[X] / Fp[X1,X2]
Ring parse_ring_arg(const std::string& arg) {
    std::string text = arg;
    if (!text.empty() && text[0] == '@') text = slurp(text.substr(1));
    std::size_t i = text.find_first_not_of(" \t\n");
    if (i != std::string::npos && text[i] == '{') return ring_create(RingSpec::from_json_text(text));
    if (i != std::string::npos && (text[i] == 'F' || text[i] == 'f')) {
        std::size_t br = text.find('[');
        if (br != std::string::npos && text.back() == ']') {
            std::uint32_t p = (std::uint32_t)std::stoul(text.substr(i + 1, br - i - 1));
            std::string vars = text.substr(br + 1, text.size() - br - 2);
            if (vars == "X" || vars == "x") return ring_create(RingSpec::poly(RingSpec::zn(p), 1));
            if (vars == "X1,X2" || vars == "x1,x2") return ring_create(RingSpec::poly(RingSpec::zn(p), 2));
        }
    }
    throw construction_error("--ring expects a JSON spec, '@file', or Fp[X] / Fp[X1,X2]");
}

RingPtr finite_ring_arg(const std::string& arg) {
    Ring ring = parse_ring_arg(arg);
    if (auto* fr = std::get_if<RingPtr>(&ring)) return *fr;
    throw capability_error("this command needs a finite ring; got a polynomial ring");
}

PolyDomain poly_domain_arg(const std::string& arg) {
    Ring ring = parse_ring_arg(arg);
    if (auto* pd = std::get_if<PolyDomain>(&ring)) return *pd;
    throw capability_error("this command needs a polynomial ring (e.g. --ring 'F2[X]')");
}

std::pair<Elt, Elt> parse_pair(const FiniteRing& r, const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw construction_error("expected a pair \"a,b\" of element indices");
    Elt a = (Elt)std::stoul(s.substr(0, comma));
    Elt b = (Elt)std::stoul(s.substr(comma + 1));
    if (a >= r.size() || b >= r.size())
        throw domain_error("element index out of range for " + r.name());
    return {a, b};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_points(const Options& opt) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    auto pts = enumerate_points(*r);
    if (opt.format == "json") {
        Json j;
        j["ring"] = r->name();
        j["point_count"] = pts.size();
        auto arr = Json::array();
        for (const Point& p : pts) arr.push_back(p.str());
        j["points"] = arr;
        emit(j);
    } else {
        std::cout << r->name() << ": " << pts.size() << " points\n";
        for (const Point& p : pts) std::cout << "  " << p.str() << "\n";
    }
    return 0;
}

int cmd_graph(const Options& opt) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    DistantGraph g = DistantGraph::build(r, opt.threads);
    if (opt.format == "dot") {
        std::cout << graph_to_dot(g);
    } else if (opt.format == "json") {
        emit(graph_to_json(g, opt.threads));
    } else {
        auto diams = g.component_diameters(opt.threads);
        std::cout << r->name() << ": " << g.point_count() << " points, " << g.component_count()
                  << (g.component_count() == 1 ? " component" : " components");
        for (std::uint32_t diam : diams) std::cout << ", diameter " << diam;
        std::cout << (g.has_loops() ? ", loops (1 = 0)" : "") << "\n";
    }
    return 0;
}

int cmd_distance(const Options& opt, const std::string& from, const std::string& to) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    DistantGraph g = DistantGraph::build(r, opt.threads);
    auto [a, b] = parse_pair(*r, from);
    auto [c, d] = parse_pair(*r, to);
    std::uint32_t i = g.index_of_pair(a, b), j = g.index_of_pair(c, d);
    auto dist = g.dist(i, j);
    if (opt.format == "json") {
        Json out;
        out["ring"] = r->name();
        out["from"] = g.point(i).str();
        out["to"] = g.point(j).str();
        if (dist)
            out["dist"] = *dist;
        else
            out["dist"] = nullptr; // infinite: the points lie in different components
        out["same_component"] = dist.has_value();
        emit(out);
    } else {
        std::cout << "dist(" << g.point(i).str() << ", " << g.point(j).str() << ") = ";
        if (dist)
            std::cout << *dist << "\n";
        else
            std::cout << "infinite (different components)\n";
    }
    return 0;
}

int cmd_orbit(const Options& opt) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    DistantGraph g = DistantGraph::build(r, opt.threads);
    auto orbit = e2_point_orbit(*r);
    std::uint32_t c_inf = g.component_of(g.index_of_pair(r->one(), r->zero()));
    std::uint64_t comp_size = 0;
    for (std::uint32_t i = 0; i < g.point_count(); ++i) comp_size += g.component_of(i) == c_inf;
    bool equal = orbit.size() == comp_size;
    if (equal)
        for (const Point& p : orbit) {
            auto idx = g.find_point(p);
            equal = equal && idx && g.component_of(*idx) == c_inf;
        }
    if (opt.format == "json") {
        Json j;
        j["ring"] = r->name();
        j["orbit_size"] = orbit.size();
        j["component_size"] = comp_size;
        j["orbit_equals_component"] = equal;
        emit(j);
    } else {
        std::cout << r->name() << ": E(t)-orbit of R(1,0) has " << orbit.size()
                  << " points; component has " << comp_size << "; " << (equal ? "equal" : "DIFFERENT")
                  << "\n";
    }
    return 0;
}

int cmd_ge2(const Options& opt) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    Ge2Result res = is_ge2_ring(*r, opt.budget, opt.threads);
    if (opt.format == "json") {
        emit(ge2_to_json(*r, res));
    } else {
        std::cout << r->name() << ": |GL2| = " << res.gl2_order << ", |GE2| = " << res.ge2_order << ", "
                  << (res.is_ge2
                          ? "GE2-ring"
                          : "NOT a GE2-ring, " + std::to_string(res.coset_count) + " right cosets")
                  << "\n";
        if (res.witness) std::cout << "  witness outside GE2: " << mat_str(*r, *res.witness) << "\n";
    }
    return 0;
}

int cmd_uniadmiss(const Options& opt) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    auto rep = unimodular_vs_admissible(*r, opt.threads);
    if (opt.format == "json") {
        emit(uniadmiss_to_json(*r, rep));
    } else {
        std::cout << r->name() << ": " << rep.pairs << " pairs, " << rep.unimodular << " unimodular, "
                  << rep.admissible << " admissible; equivalence "
                  << (rep.uni_implies_admiss && rep.admiss_implies_uni ? "holds" : "FAILS") << "\n";
        if (!rep.counterexample.empty()) std::cout << "  counterexample: " << rep.counterexample << "\n";
    }
    return 0;
}

int cmd_chains(const Options& opt, const std::string& subfield_arg) {
    RingPtr r = finite_ring_arg(opt.ring_arg);
    std::vector<Elt> subset;
    std::stringstream ss(subfield_arg);
    std::string item;
    while (std::getline(ss, item, ',')) subset.push_back((Elt)std::stoul(item));
    Subfield k = require_subfield(*r, subset);
    DistantGraph g = DistantGraph::build(r, opt.threads);
    auto chains = enumerate_chains(g, k, opt.budget, opt.threads);
    auto axioms = verify_chain_axioms(g, chains);
    auto cont = chain_component_containment(g, chains);
    if (opt.format == "json") {
        emit(chains_to_json(g, chains, axioms, cont));
    } else {
        std::cout << "Sigma(K," << r->name() << ") with |K| = " << k.order() << ": " << chains.size()
                  << " chains of " << (k.order() + 1) << " points\n";
        std::cout << "  three-mutually-distant-points axiom: "
                  << (axioms.triple_counterexamples == 0 ? "ok" : "FAIL") << " (" << axioms.triples_checked
                  << " triples)\n";
        std::cout << "  distant-iff-joined axiom: " << (axioms.pair_counterexamples == 0 ? "ok" : "FAIL")
                  << " (" << axioms.pairs_checked << " pairs)\n";
        std::cout << "  component containment: " << (cont.ok ? "ok" : "FAIL") << "\n";
        if (!axioms.first_counterexample.empty())
            std::cout << "  counterexample: " << axioms.first_counterexample << "\n";
    }
    return axioms.ok() && cont.ok ? 0 : 1;
}

int cmd_decompose(const Options& opt, const std::string& matrix_arg) {
    PolyDomain dom = poly_domain_arg(opt.ring_arg);
    if (dom.vars != 1) throw capability_error("decompose works over univariate K[X]");
    PrimeField k(dom.p);
    std::vector<std::string> entries;
    std::stringstream ss(matrix_arg);
    std::string item;
    while (std::getline(ss, item, ';')) entries.push_back(item);
    if (entries.size() != 4) throw construction_error("--matrix expects four polynomials \"a; b; c; d\"");
    PolyMat2 m{poly_parse(k, entries[0]), poly_parse(k, entries[1]), poly_parse(k, entries[2]),
               poly_parse(k, entries[3])};
    StandardForm sf = sf_decompose(k, m);
    bool check = sf_compose(k, sf) == m;
    if (opt.format == "json") {
        Json j;
        j["ring"] = "F" + std::to_string(dom.p) + "[X]";
        j["matrix"] = pm_str(k, m);
        j["u"] = sf.u;
        j["v"] = sf.v;
        auto arr = Json::array();
        for (const Poly& t : sf.params) arr.push_back(poly_str(k, t));
        j["params"] = arr; // t_1 first
        j["length"] = sf.params.size();
        j["recomposition_ok"] = check;
        emit(j);
    } else {
        std::cout << "matrix " << pm_str(k, m) << "\n";
        std::cout << "standard form: " << sf_str(k, sf) << "\n";
        std::cout << "params (t_1 .. t_n):";
        for (const Poly& t : sf.params) std::cout << " " << poly_str(k, t);
        std::cout << "\nrecomposition check: " << (check ? "ok" : "FAIL") << "\n";
    }
    return check ? 0 : 1;
}

int cmd_certify(const Options& opt, const std::string& t_arg, std::uint32_t mmax) {
    PolyDomain dom = poly_domain_arg(opt.ring_arg);
    if (dom.vars != 1) throw capability_error("certify-diameter works over univariate K[X]");
    PrimeField k(dom.p);
    Poly t = poly_parse(k, t_arg);
    bool all = true;
    for (std::uint32_t m = 1; m <= mmax; ++m) {
        auto cert = distance_certificate(k, t, m);
        all = all && cert.ok;
        std::cout << "m=" << m << ": "
                  << (cert.ok ? "certified dist(q_0, q_m) = " + std::to_string(m)
                              : "FAILED (decomposition differs)")
                  << "\n";
    }
    std::cout << (all ? "diameter grows without bound over F" + std::to_string(dom.p) + "[X] up to m = " +
                            std::to_string(mmax)
                      : "certification incomplete")
              << "\n";
    return all ? 0 : 1;
}

int cmd_xy(const Options& opt, std::uint32_t p, std::uint32_t nmax) {
    XyReport rep = xy_matrix_check(p, nmax);
    if (opt.format == "json") {
        emit(xy_to_json(rep));
    } else {
        std::cout << "F" << p << "[X1,X2], n <= " << nmax << ":\n";
        std::cout << "  power identity: " << (rep.power_identity_ok ? "ok" : "FAIL") << "\n";
        std::cout << "  det A = 1: " << (rep.det_ok ? "ok" : "FAIL") << "\n";
        std::cout << "  A^n = I exactly when " << p << " | n: "
                  << (rep.identity_iff_char_divides ? "ok" : "FAIL") << "\n";
        std::cout << "  A * B12(1) * A^-1 = " << rep.conjugate_b12 << "\n";
    }
    return rep.power_identity_ok && rep.det_ok && rep.identity_iff_char_divides ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    auto results = run_verification(opt.budget, opt.seed, opt.threads);
    bool all = true;
    if (opt.format == "json") {
        // timings are omitted so identical runs emit identical bytes
        Json j;
        j["seed"] = opt.seed;
        auto arr = Json::array();
        for (const auto& c : results) {
            all = all && c.pass;
            Json cj;
            cj["id"] = c.id;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["all_pass"] = all;
        emit(j);
    } else {
        for (const auto& c : results) {
            std::cout << format_check_line(c) << "\n";
            all = all && c.pass;
        }
        std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective lines over finite rings: distant graphs, GE2 machinery, standard forms"};
    app.require_subcommand(1);

    Options opt;
    try {
        opt.budget = budget_from_env();
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    auto add_common = [&](CLI::App* sub, bool needs_ring) {
        if (needs_ring)
            sub->add_option("--ring", opt.ring_arg, "ring spec: JSON, '@file', or Fp[X]")->required();
        sub->add_option("--format", opt.format, "text | json | dot")->capture_default_str();
        sub->add_option("--threads", opt.threads, "worker threads (1 = serial)")->capture_default_str();
        sub->add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
        sub->add_option("--budget-gl2", opt.budget.gl2_max_ring, "max |R| for GL2 enumeration");
        sub->add_option("--budget-group", opt.budget.group_max, "max group closure size");
    };

    auto* points = app.add_subcommand("points", "enumerate the points of P(R)");
    add_common(points, true);

    auto* graph = app.add_subcommand("graph", "build the distant graph; summary, JSON or DOT");
    add_common(graph, true);

    std::string from_arg, to_arg;
    auto* distance = app.add_subcommand("distance", "graph distance between two points");
    add_common(distance, true);
    distance->add_option("--from", from_arg, "pair \"a,b\" of element indices")->required();
    distance->add_option("--to", to_arg, "pair \"c,d\" of element indices")->required();

    auto* orbit = app.add_subcommand("orbit", "E(t)-orbit of R(1,0) vs its graph component");
    add_common(orbit, true);

    auto* ge2 = app.add_subcommand("ge2", "decide GE2(R) = GL2(R) with orders and witnesses");
    add_common(ge2, true);

    auto* uniadmiss = app.add_subcommand("uniadmiss", "exhaustive unimodular vs admissible report");
    add_common(uniadmiss, true);

    std::string subfield_arg;
    auto* chains = app.add_subcommand("chains", "enumerate K-chains and check the incidence axioms");
    add_common(chains, true);
    chains->add_option("--subfield", subfield_arg, "comma-separated element indices of K")->required();

    std::string matrix_arg;
    auto* decompose = app.add_subcommand("decompose", "standard form of a GL2(K[X]) matrix");
    add_common(decompose, true);
    decompose->add_option("--matrix", matrix_arg, "four polynomials \"a; b; c; d\"")->required();

    std::string t_arg;
    std::uint32_t mmax = 8;
    auto* certify = app.add_subcommand("certify-diameter", "word-length certificates for E(t)^m");
    add_common(certify, true);
    certify->add_option("--t", t_arg, "parameter polynomial, nonzero and not a unit")->required();
    certify->add_option("--mmax", mmax, "certify m = 1..mmax")->capture_default_str();

    std::uint32_t xy_p = 5, xy_nmax = 10;
    auto* xy = app.add_subcommand("xy", "bivariate power identity over F_p[X1,X2]");
    add_common(xy, false);
    xy->add_option("--p", xy_p, "field characteristic")->capture_default_str();
    xy->add_option("--nmax", xy_nmax, "largest exponent checked")->capture_default_str();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the full theorem-verification suite");
    add_common(verify, false);
    verify->add_option("--suite", suite, "which suite to run (all)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*points) return cmd_points(opt);
        if (*graph) return cmd_graph(opt);
        if (*distance) return cmd_distance(opt, from_arg, to_arg);
        if (*orbit) return cmd_orbit(opt);
        if (*ge2) return cmd_ge2(opt);
        if (*uniadmiss) return cmd_uniadmiss(opt);
        if (*chains) return cmd_chains(opt, subfield_arg);
        if (*decompose) return cmd_decompose(opt, matrix_arg);
        if (*certify) return cmd_certify(opt, t_arg, mmax);
        if (*xy) return cmd_xy(opt, xy_p, xy_nmax);
        if (*verify) {
            if (suite != "all") throw construction_error("unknown suite \"" + suite + "\" (use all)");
            return cmd_verify(opt);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
