#include "mqa/structure.hpp"

#include <algorithm>

#include "mqa/errors.hpp"

namespace mqa {

ChainReindex ChainReindex::cut(const MixedDataPtr& src, unsigned i) {
    // computed before the aggregate so a throw leaves no partial object
    MixedDataPtr target = cut_data(src, i);
    return ChainReindex{ReindexKind::cut, i, src, std::move(target)};
}

ChainReindex ChainReindex::corner(const MixedDataPtr& src, unsigned i) {
    MixedDataPtr target = corner_data(src, i);
    return ChainReindex{ReindexKind::corner, i, src, std::move(target)};
}

MpaElement ChainReindex::apply(const MpaElement& a) const {
    if (!(*a.data() == *source)) throw ValidationError("element over unexpected data");
    std::vector<std::pair<Path, TowerElement>> terms;
    if (kind == ReindexKind::cut) {
        const VertexSet& killed = source->chain.set(at - 1);
        for (const auto& [p, c] : a.terms()) {
            if (killed.contains(p.dst())) continue;
            terms.emplace_back(rebase_path(p, target->quiver), target->tower.adopt(c));
        }
    } else {
        const VertexSet& kept = source->chain.set(at);
        for (const auto& [p, c] : a.terms()) {
            if (!kept.contains(p.src()) || !kept.contains(p.dst())) continue;
            terms.emplace_back(rebase_path(p, target->quiver), target->tower.adopt(c));
        }
    }
    return MpaElement(target, terms);
}

LpaElement ChainReindex::apply(const LpaElement& a) const {
    if (!(*a.data() == *source)) throw ValidationError("element over unexpected data");
    std::vector<std::pair<LpaMonomial, TowerElement>> terms;
    if (kind == ReindexKind::cut) {
        const VertexSet& killed = source->chain.set(at - 1);
        for (const auto& [m, c] : a.terms()) {
            if (killed.contains(m.midpoint())) continue;
            terms.emplace_back(LpaMonomial{rebase_path(m.real, target->quiver),
                                           rebase_path(m.ghost, target->quiver)},
                               target->tower.adopt(c));
        }
    } else {
        const VertexSet& kept = source->chain.set(at);
        for (const auto& [m, c] : a.terms()) {
            if (!kept.contains(m.real.src()) || !kept.contains(m.ghost.src())) continue;
            terms.emplace_back(LpaMonomial{rebase_path(m.real, target->quiver),
                                           rebase_path(m.ghost, target->quiver)},
                               target->tower.adopt(c));
        }
    }
    return LpaElement(target, terms);
}

MpaElement cut(const MpaElement& a, unsigned i) {
    return ChainReindex::cut(a.data(), i).apply(a);
}

LpaElement cut(const LpaElement& a, unsigned i) {
    return ChainReindex::cut(a.data(), i).apply(a);
}

MpaElement corner(const MpaElement& a, unsigned i) {
    return ChainReindex::corner(a.data(), i).apply(a);
}

LpaElement corner(const LpaElement& a, unsigned i) {
    return ChainReindex::corner(a.data(), i).apply(a);
}

bool check_corner_path_identities(const MixedDataPtr& data, const VertexSet& h,
                                  unsigned maxlen) {
    if (!is_hereditary(h)) throw ValidationError("corner identities need a hereditary subset");
    const auto& q = data->quiver;
    std::vector<std::pair<Path, TowerElement>> ph_terms;
    for (int v : h.indices())
        ph_terms.emplace_back(Path::trivial(q, v), data->tower.one());
    MpaElement ph(data, ph_terms);

    QuiverPtr eh = restriction_graph(h);
    std::vector<Path> eh_paths = all_paths(eh, maxlen);

    std::vector<Path> compressed_support;
    for (const auto& x : all_paths(q, maxlen)) {
        MpaElement xe = MpaElement::single(data, x, data->tower.one());
        MpaElement left = ph * xe;
        MpaElement both = ph * xe * ph;
        if (!(left == both)) return false;
        if (!both.is_zero()) compressed_support.push_back(x);
    }
    if (compressed_support.size() != eh_paths.size()) return false;
    for (size_t i = 0; i < eh_paths.size(); ++i)
        if (!compressed_support[i].same_as(eh_paths[i])) return false;
    return true;
}

}  // namespace mqa
