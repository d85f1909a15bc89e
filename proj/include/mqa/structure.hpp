#ifndef MQA_STRUCTURE_HPP
#define MQA_STRUCTURE_HPP

#include "mqa/leavitt.hpp"
#include "mqa/series.hpp"

namespace mqa {

enum class ReindexKind { cut, corner };

// Precomputed re-indexing of (quiver, chain, tower) for the chain
// isomorphisms: cut at i kills the ideal of H_{i-1} and lands in
// (E/H_{i-1}, H_j \ H_{i-1}, K_0..K_{r-i}); corner at i compresses by
// p_{H_i} and lands in (E_{H_i}, H_0..H_i, K_{r-i}..K_r).
struct ChainReindex {
    ReindexKind kind;
    unsigned at;
    MixedDataPtr source;
    MixedDataPtr target;

    static ChainReindex cut(const MixedDataPtr& src, unsigned i);
    static ChainReindex corner(const MixedDataPtr& src, unsigned i);

    MpaElement apply(const MpaElement& a) const;
    LpaElement apply(const LpaElement& a) const;
};

MpaElement cut(const MpaElement& a, unsigned i);
LpaElement cut(const LpaElement& a, unsigned i);
MpaElement corner(const MpaElement& a, unsigned i);
LpaElement corner(const LpaElement& a, unsigned i);

// p_H x = p_H x p_H for every path x up to maxlen, and the compressed support
// equals the path set of E_H.
bool check_corner_path_identities(const MixedDataPtr& data, const VertexSet& h,
                                  unsigned maxlen);

}  // namespace mqa

#endif  // MQA_STRUCTURE_HPP
