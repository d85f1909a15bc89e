#include "mqa/mixed.hpp"

#include "mqa/errors.hpp"

namespace mqa {

LevelAssignment::LevelAssignment(const HereditaryChain& chain) : r_(chain.r()) {
    const Quiver& q = *chain.quiver();
    levels_.resize(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) levels_[v] = chain.level(v);
    for (int e = 0; e < q.num_edges(); ++e) {
        if (levels_[q.edge(e).src] > levels_[q.edge(e).dst])
            throw InternalInvariantViolation(
                "level assignment must be antitone along edges");
    }
}

MixedData::MixedData(QuiverPtr q, HereditaryChain c, Tower t)
    : quiver(std::move(q)), chain(std::move(c)), tower(std::move(t)), levels(chain) {
    if (!(*chain.quiver() == *quiver))
        throw ValidationError("chain quiver differs from element quiver");
    if (chain.r() != tower.r())
        throw ValidationError("chain length r=" + std::to_string(chain.r()) +
                              " does not match tower window length r=" +
                              std::to_string(tower.r()));
}

bool MixedData::operator==(const MixedData& o) const {
    return *quiver == *o.quiver && chain == o.chain && tower.same_tower(o.tower);
}

MixedDataPtr MixedData::unmixed(QuiverPtr q, const Tower& tower) {
    HereditaryChain chain(q, {VertexSet::full(q)});
    Tower top = tower.window(tower.hi(), tower.hi());
    return make_mixed_data(std::move(q), std::move(chain), std::move(top));
}

MixedDataPtr make_mixed_data(QuiverPtr q, HereditaryChain c, Tower t) {
    return std::make_shared<const MixedData>(std::move(q), std::move(c), std::move(t));
}

MixedDataPtr cut_data(const MixedDataPtr& src, unsigned i) {
    unsigned r = src->r();
    if (i < 1 || i > r) throw ValidationError("cut index must satisfy 1 <= i <= r");
    const VertexSet& killed = src->chain.set(i - 1);
    QuiverPtr target = quotient_graph(killed);
    std::vector<VertexSet> sets;
    for (unsigned j = i; j <= r; ++j) {
        std::vector<bool> mask(target->num_vertices(), false);
        for (int v = 0; v < target->num_vertices(); ++v) {
            int sv = src->quiver->vertex_index(target->vertex_id(v));
            mask[v] = src->chain.set(j).contains(sv);
        }
        sets.emplace_back(target, std::move(mask));
    }
    HereditaryChain chain(target, std::move(sets));
    Tower window = src->tower.window(src->tower.lo(), src->tower.lo() + (r - i));
    return make_mixed_data(std::move(target), std::move(chain), std::move(window));
}

MixedDataPtr corner_data(const MixedDataPtr& src, unsigned i) {
    unsigned r = src->r();
    if (i > r) throw ValidationError("corner index must satisfy 0 <= i <= r");
    const VertexSet& kept = src->chain.set(i);
    QuiverPtr target = restriction_graph(kept);
    std::vector<VertexSet> sets;
    for (unsigned j = 0; j <= i; ++j) {
        std::vector<bool> mask(target->num_vertices(), false);
        for (int v = 0; v < target->num_vertices(); ++v) {
            int sv = src->quiver->vertex_index(target->vertex_id(v));
            mask[v] = src->chain.set(j).contains(sv);
        }
        sets.emplace_back(target, std::move(mask));
    }
    HereditaryChain chain(target, std::move(sets));
    Tower window = src->tower.window(src->tower.lo() + (r - i), src->tower.hi());
    return make_mixed_data(std::move(target), std::move(chain), std::move(window));
}

MixedDataPtr quotient_data(const MixedDataPtr& src, const VertexSet& h) {
    if (!is_hereditary(h) || !is_saturated(h))
        throw ValidationError("quotient needs a hereditary saturated subset");
    for (unsigned i = 1; i <= src->r(); ++i) {
        if (src->chain.set(i - 1) == h) return cut_data(src, i);
    }
    if (src->r() == 0) {
        QuiverPtr target = quotient_graph(h);
        HereditaryChain chain(target, {VertexSet::full(target)});
        return make_mixed_data(std::move(target), std::move(chain), src->tower);
    }
    throw ValidationError(
        "quotient of a mixed element needs H equal to a chain member");
}

Path rebase_path(const Path& p, const QuiverPtr& target) {
    if (p.is_trivial()) {
        return Path::trivial(target, target->vertex_index(p.quiver()->vertex_id(p.base_vertex())));
    }
    std::vector<int> edges;
    edges.reserve(p.length());
    for (int e : p.edges()) edges.push_back(target->edge_index(p.quiver()->edge(e).id));
    return Path::of_edges(target, std::move(edges));
}

}  // namespace mqa
