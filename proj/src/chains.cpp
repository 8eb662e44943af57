#include "pline/chains.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pline {

SubfieldCheck subfield_check(const FiniteRing& r, std::vector<Elt> subset) {
    SubfieldCheck out;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (Elt a : subset)
        if (a >= r.size()) {
            out.violation = "element index " + std::to_string(a) + " out of range";
            return out;
        }
    auto in = [&](Elt a) { return std::binary_search(subset.begin(), subset.end(), a); };

    if (!in(r.zero())) {
        out.violation = "subset does not contain 0";
        return out;
    }
    if (!in(r.one())) {
        out.violation = "subset does not contain 1";
        return out;
    }
    for (Elt a : subset) {
        for (Elt b : subset) {
            if (!in(r.add(a, b))) {
                out.violation = "not closed under addition: " + r.elt_str(a) + "+" + r.elt_str(b) + " = " +
                                r.elt_str(r.add(a, b)) + " not in subset";
                return out;
            }
            if (!in(r.mul(a, b))) {
                out.violation = "not closed under multiplication: " + r.elt_str(a) + "*" + r.elt_str(b) +
                                " = " + r.elt_str(r.mul(a, b)) + " not in subset";
                return out;
            }
        }
        if (!in(r.neg(a))) {
            out.violation = "not closed under negation: -" + r.elt_str(a) + " = " + r.elt_str(r.neg(a)) +
                            " not in subset";
            return out;
        }
        if (a != r.zero()) {
            if (!r.is_unit(a)) {
                out.violation = "nonzero element " + r.elt_str(a) + " is not a unit of " + r.name();
                return out;
            }
            if (!in(r.unit_inverse(a))) {
                out.violation = "inverse of " + r.elt_str(a) + " not in subset";
                return out;
            }
        }
    }
    out.ok = true;
    out.field.elements = std::move(subset);
    return out;
}

Subfield require_subfield(const FiniteRing& r, std::vector<Elt> subset) {
    SubfieldCheck c = subfield_check(r, std::move(subset));
    if (!c.ok) throw domain_error(r.name() + ": not a subfield: " + c.violation);
    return std::move(c.field);
}

namespace {

std::vector<std::uint32_t> base_chain_ids(const DistantGraph& g, const Subfield& k) {
    const FiniteRing& r = g.ring();
    std::vector<std::uint32_t> ids;
    for (Elt x : k.elements) ids.push_back(g.index_of_pair(r.one(), x));
    ids.push_back(g.index_of_pair(r.zero(), r.one()));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<std::uint32_t> chain_image(const DistantGraph& g, const std::vector<std::uint32_t>& base,
                                       const Mat2& m) {
    const FiniteRing& r = g.ring();
    std::vector<std::uint32_t> ids;
    ids.reserve(base.size());
    for (std::uint32_t i : base) {
        const Point& p = g.point(i);
        Elt x, y;
        mat_apply_row(r, p.a, p.b, m, x, y);
        ids.push_back(g.index_of_pair(x, y));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

std::vector<Chain> enumerate_chains(const DistantGraph& g, const Subfield& k, const Budget& budget,
                                    int threads) {
    const FiniteRing& r = g.ring();
    std::vector<std::uint32_t> base = base_chain_ids(g, k);
    std::vector<Mat2> gl2 = gl2_enumerate(r, budget, threads);

    // map from point set to witness; ordered for deterministic output
    std::map<std::vector<std::uint32_t>, Mat2> found;
    found.emplace(base, mat_identity(r));

#ifdef _OPENMP
    if (threads > 1) {
        std::vector<std::map<std::vector<std::uint32_t>, Mat2>> shard((std::size_t)threads);
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 0; i < (long long)gl2.size(); ++i) {
            int tid = omp_get_thread_num();
            shard[tid].emplace(chain_image(g, base, gl2[i]), gl2[i]);
        }
        // merge with the lowest matrix key as witness; identical to the
        // serial first-hit rule since gl2 enumeration ascends by key
        for (auto& s : shard)
            for (auto& [ids, m] : s) {
                if (ids == base) continue;
                auto it = found.find(ids);
                if (it == found.end())
                    found.emplace(ids, m);
                else if (mat_key(m) < mat_key(it->second))
                    it->second = m;
            }
    } else
#endif
    {
        for (const Mat2& m : gl2) {
            auto ids = chain_image(g, base, m);
            found.emplace(std::move(ids), m); // first witness in enumeration order sticks
        }
    }

    std::vector<Chain> out;
    out.reserve(found.size());
    // base chain first, the rest in point-set order
    out.push_back({base, found.at(base)});
    for (auto& [ids, m] : found)
        if (!(ids == base)) out.push_back({ids, m});
    return out;
}

ChainAxiomReport verify_chain_axioms(const DistantGraph& g, const std::vector<Chain>& chains) {
    ChainAxiomReport rep;
    rep.chains = chains.size();
    const std::uint32_t n = g.point_count();

    // chains through each unordered pair
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> through;
    std::vector<std::vector<std::uint8_t>> member(chains.size(), std::vector<std::uint8_t>(n, 0));
    for (std::uint32_t c = 0; c < chains.size(); ++c) {
        const auto& ids = chains[c].point_ids;
        for (std::uint32_t i : ids) member[c][i] = 1;
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                through[{ids[i], ids[j]}].push_back(c);
    }
    auto chains_through = [&](std::uint32_t i, std::uint32_t j) -> const std::vector<std::uint32_t>* {
        auto it = through.find({std::min(i, j), std::max(i, j)});
        return it == through.end() ? nullptr : &it->second;
    };

    // axiom: distant <=> common chain (distinct points)
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            ++rep.pairs_checked;
            bool dis = g.adjacent(i, j);
            bool joined = chains_through(i, j) != nullptr;
            if (dis != joined) {
                ++rep.pair_counterexamples;
                if (rep.first_counterexample.empty())
                    rep.first_counterexample = "pair " + g.point(i).str() + ", " + g.point(j).str() +
                                               (dis ? " distant but on no common chain"
                                                    : " on a common chain but not distant");
            }
        }

    // axiom: three mutually distant points lie on at least one chain
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            const auto* cij = chains_through(i, j);
            for (std::uint32_t l = j + 1; l < n; ++l) {
                if (!g.adjacent(i, l) || !g.adjacent(j, l)) continue;
                ++rep.triples_checked;
                bool found_chain = false;
                if (cij)
                    for (std::uint32_t c : *cij)
                        if (member[c][l]) {
                            found_chain = true;
                            break;
                        }
                if (!found_chain) {
                    ++rep.triple_counterexamples;
                    if (rep.first_counterexample.empty())
                        rep.first_counterexample = "mutually distant triple " + g.point(i).str() + ", " +
                                                   g.point(j).str() + ", " + g.point(l).str() +
                                                   " on no common chain";
                }
            }
        }
    return rep;
}

ContainmentReport chain_component_containment(const DistantGraph& g, const std::vector<Chain>& chains) {
    ContainmentReport rep;
    rep.chains = chains.size();
    for (const Chain& c : chains) {
        for (std::size_t i = 1; i < c.point_ids.size(); ++i)
            if (g.component_of(c.point_ids[i]) != g.component_of(c.point_ids[0])) {
                rep.ok = false;
                if (rep.first_violation.empty())
                    rep.first_violation = "chain containing " + g.point(c.point_ids[0]).str() +
                                          " spans two components";
            }
    }
    return rep;
}

} // namespace pline
