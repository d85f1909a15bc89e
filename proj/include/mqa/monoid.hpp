#ifndef MQA_MONOID_HPP
#define MQA_MONOID_HPP

#include <string>
#include <vector>

#include "mqa/quiver.hpp"

namespace mqa {

// Element of the graph monoid M(E): a nonnegative vertex-indexed vector with
// one defining relation per emitter, v = sum of r(e) over e in s^{-1}(v).
class MonoidElement {
public:
    MonoidElement(QuiverPtr q, std::vector<long long> coords);
    static MonoidElement zero(QuiverPtr q);
    static MonoidElement generator(QuiverPtr q, int v);

    const QuiverPtr& quiver() const { return quiver_; }
    const std::vector<long long>& coords() const { return coords_; }
    long long coord(int v) const { return coords_.at(v); }
    long long total() const;

    MonoidElement operator+(const MonoidElement& o) const;
    bool operator==(const MonoidElement& o) const { return coords_ == o.coords_; }
    bool operator<(const MonoidElement& o) const { return coords_ < o.coords_; }

    std::string str() const;
    static MonoidElement parse(QuiverPtr q, std::string_view text);

private:
    QuiverPtr quiver_;
    std::vector<long long> coords_;
};

std::vector<std::pair<MonoidElement, MonoidElement>> monoid_relations(const QuiverPtr& q);

// Directed rewriting v -> sum r(e) to its fixpoint; defined on acyclic
// quivers only (throws CyclicQuiver), where the result is canonical.
MonoidElement normal_form_acyclic(const MonoidElement& x);

enum class EqAnswer { yes, no, unknown };

// Bidirectional congruence search applying the defining relations both ways,
// pruning vectors whose coordinate sum exceeds the bound. "no" requires one
// side's class to be fully enumerated below the bound.
EqAnswer equals_bounded(const MonoidElement& x, const MonoidElement& y, long long bound);

// Default bound: 12 * |E^0|.
long long default_monoid_bound(const QuiverPtr& q);

struct OrderIdealLattice {
    std::vector<VertexSet> ideal_vertex_sets;  // sorted by (size, mask)
    bool inconclusive = false;                 // some membership ran out of bound
    bool matches_hs_lattice = false;           // equals the hereditary saturated lattice
};

// Order-ideals of M(E), each represented by the set of vertex generators it
// contains; verified against the hereditary saturated lattice.
OrderIdealLattice order_ideal_lattice(const QuiverPtr& q, long long bound = -1,
                                      int multiplicity_cap = -1);

}  // namespace mqa

#endif  // MQA_MONOID_HPP
