#ifndef MQA_MIXED_HPP
#define MQA_MIXED_HPP

#include <memory>

#include "mqa/quiver.hpp"
#include "mqa/tower.hpp"

namespace mqa {

// Per-vertex coefficient level lev(v) = r - min{ i : v in H_i }. Antitone
// along edges because every chain member is hereditary.
class LevelAssignment {
public:
    LevelAssignment(const HereditaryChain& chain);

    unsigned level(int v) const { return levels_.at(v); }
    unsigned r() const { return r_; }

private:
    std::vector<unsigned> levels_;
    unsigned r_;
};

// The bundle an element of a mixed algebra lives over: quiver E, chain
// H_0 c ... c H_r = E^0, tower window K_0 <= ... <= K_r.
struct MixedData {
    QuiverPtr quiver;
    HereditaryChain chain;
    Tower tower;
    LevelAssignment levels;

    MixedData(QuiverPtr q, HereditaryChain c, Tower t);

    unsigned r() const { return chain.r(); }
    bool operator==(const MixedData& o) const;

    // E with the trivial chain [E^0] and the top field only.
    static std::shared_ptr<const MixedData> unmixed(QuiverPtr q, const Tower& tower);
};

using MixedDataPtr = std::shared_ptr<const MixedData>;

MixedDataPtr make_mixed_data(QuiverPtr q, HereditaryChain c, Tower t);

// Target data of Prop-style re-indexing. cut at i (1 <= i <= r): quotient by
// H_{i-1}, chain H_j \ H_{i-1} for j >= i, tower window [0, r-i]. corner at i
// (0 <= i <= r): restriction to H_i, chain H_0 c ... c H_i, window [r-i, r].
MixedDataPtr cut_data(const MixedDataPtr& src, unsigned i);
MixedDataPtr corner_data(const MixedDataPtr& src, unsigned i);

// Target data of the quotient map by an arbitrary hereditary saturated H:
// defined when H is a chain member H_{i-1} (delegates to cut_data) or when
// the chain is trivial (r = 0).
MixedDataPtr quotient_data(const MixedDataPtr& src, const VertexSet& h);

// Rebases a path onto another quiver by ids; throws when an edge is missing.
Path rebase_path(const Path& p, const QuiverPtr& target);

}  // namespace mqa

#endif  // MQA_MIXED_HPP
