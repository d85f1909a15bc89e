#ifndef MQA_TESTS_HELPERS_HPP
#define MQA_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "mqa/leavitt.hpp"
#include "mqa/mixed.hpp"
#include "mqa/mpa.hpp"

namespace mqa::testing {

// E_T: loop f at 1, edge e: 1 -> 2.
inline QuiverPtr et_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<std::tuple<std::string, std::string, std::string>>{
            {"f", "1", "1"}, {"e", "1", "2"}});
}

inline QuiverPtr a2_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<std::tuple<std::string, std::string, std::string>>{{"e", "1", "2"}});
}

inline QuiverPtr edgeless2_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<std::tuple<std::string, std::string, std::string>>{});
}

inline QuiverPtr rose2_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"v"},
        std::vector<std::tuple<std::string, std::string, std::string>>{
            {"a", "v", "v"}, {"b", "v", "v"}});
}

inline QuiverPtr chain3_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2", "3"},
        std::vector<std::tuple<std::string, std::string, std::string>>{
            {"e12", "1", "2"}, {"e23", "2", "3"}});
}

inline QuiverPtr cyc4_quiver() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2", "3", "4"},
        std::vector<std::tuple<std::string, std::string, std::string>>{
            {"a", "1", "2"}, {"b", "2", "1"}, {"c", "2", "3"}, {"d", "3", "4"},
            {"g", "4", "4"}});
}

inline Tower f2_f4() { return Tower(TowerSpec::finite_field(2, {1, 2})); }
inline Tower q_qt() { return Tower(TowerSpec::rational_function(1)); }

// E_T with chain {2} c {1,2}.
inline MixedDataPtr et_data(const Tower& tower) {
    QuiverPtr q = et_quiver();
    HereditaryChain chain(q, {VertexSet::of_ids(q, {"2"}), VertexSet::full(q)});
    return make_mixed_data(q, std::move(chain), tower);
}

inline MixedDataPtr trivial_chain_data(QuiverPtr q, const Tower& tower) {
    HereditaryChain chain(q, {VertexSet::full(q)});
    return make_mixed_data(std::move(q), std::move(chain),
                           tower.window(tower.hi(), tower.hi()));
}

inline Path path_of(const MixedDataPtr& d, std::initializer_list<const char*> edge_ids) {
    std::vector<int> edges;
    for (const char* id : edge_ids) edges.push_back(d->quiver->edge_index(id));
    return Path::of_edges(d->quiver, std::move(edges));
}

inline Path triv(const MixedDataPtr& d, const char* vid) {
    return Path::trivial(d->quiver, d->quiver->vertex_index(vid));
}

// Random valid element: random walks with coefficients drawn at the admitted
// level of each path's range.
inline MpaElement random_mpa(const MixedDataPtr& d, std::mt19937& rng, unsigned max_terms = 4,
                             unsigned max_len = 3, bool allow_trivial = true) {
    const auto& q = d->quiver;
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<int> vdist(0, q->num_vertices() - 1);
    std::uniform_int_distribution<unsigned> ldist(0, max_len);
    std::vector<std::pair<Path, TowerElement>> terms;
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        int v = vdist(rng);
        unsigned len = ldist(rng);
        Path p = Path::trivial(q, v);
        for (unsigned s = 0; s < len; ++s) {
            const auto& outs = q->out_edges(p.dst());
            if (outs.empty()) break;
            std::uniform_int_distribution<size_t> edist(0, outs.size() - 1);
            std::vector<int> es = p.edges();
            es.push_back(outs[edist(rng)]);
            p = Path::of_edges(q, std::move(es));
        }
        if (p.is_trivial() && !allow_trivial) continue;
        unsigned lev = d->levels.level(p.dst());
        terms.emplace_back(p, d->tower.random_element(rng, lev));
    }
    return MpaElement(d, terms);
}

inline LpaElement random_lpa(const MixedDataPtr& d, std::mt19937& rng, unsigned max_terms = 3,
                             unsigned max_len = 2) {
    const auto& q = d->quiver;
    // in-edges per vertex for ghost walks
    std::vector<std::vector<int>> ins(q->num_vertices());
    for (int e = 0; e < q->num_edges(); ++e) ins[q->edge(e).dst].push_back(e);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<int> vdist(0, q->num_vertices() - 1);
    std::uniform_int_distribution<unsigned> ldist(0, max_len);
    std::vector<std::pair<LpaMonomial, TowerElement>> terms;
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        int mid = vdist(rng);
        // real path ending at mid: walk backwards
        std::vector<int> real_rev;
        unsigned lr = ldist(rng);
        int cur = mid;
        for (unsigned s = 0; s < lr; ++s) {
            if (ins[cur].empty()) break;
            std::uniform_int_distribution<size_t> edist(0, ins[cur].size() - 1);
            int e = ins[cur][edist(rng)];
            real_rev.push_back(e);
            cur = q->edge(e).src;
        }
        std::vector<int> ghost_rev;
        unsigned lg = ldist(rng);
        cur = mid;
        for (unsigned s = 0; s < lg; ++s) {
            if (ins[cur].empty()) break;
            std::uniform_int_distribution<size_t> edist(0, ins[cur].size() - 1);
            int e = ins[cur][edist(rng)];
            ghost_rev.push_back(e);
            cur = q->edge(e).src;
        }
        Path real = real_rev.empty()
                        ? Path::trivial(q, mid)
                        : Path::of_edges(q, std::vector<int>(real_rev.rbegin(), real_rev.rend()));
        Path ghost = ghost_rev.empty()
                         ? Path::trivial(q, mid)
                         : Path::of_edges(q, std::vector<int>(ghost_rev.rbegin(), ghost_rev.rend()));
        unsigned lev = d->levels.level(mid);
        terms.emplace_back(LpaMonomial{real, ghost}, d->tower.random_element(rng, lev));
    }
    return LpaElement(d, terms);
}

}  // namespace mqa::testing

#endif
