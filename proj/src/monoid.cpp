#include "mqa/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "mqa/errors.hpp"

namespace mqa {

MonoidElement::MonoidElement(QuiverPtr q, std::vector<long long> coords)
    : quiver_(std::move(q)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != quiver_->num_vertices())
        throw ValidationError("monoid element coordinate count mismatch");
    for (long long c : coords_)
        if (c < 0) throw ValidationError("monoid element coordinates must be nonnegative");
}

MonoidElement MonoidElement::zero(QuiverPtr q) {
    std::vector<long long> c(q->num_vertices(), 0);
    return MonoidElement(std::move(q), std::move(c));
}

MonoidElement MonoidElement::generator(QuiverPtr q, int v) {
    std::vector<long long> c(q->num_vertices(), 0);
    c.at(v) = 1;
    return MonoidElement(std::move(q), std::move(c));
}

long long MonoidElement::total() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0ll);
}

MonoidElement MonoidElement::operator+(const MonoidElement& o) const {
    std::vector<long long> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return MonoidElement(quiver_, std::move(c));
}

std::string MonoidElement::str() const {
    std::string out;
    for (int v = 0; v < quiver_->num_vertices(); ++v) {
        if (coords_[v] == 0) continue;
        if (!out.empty()) out += ",";
        out += quiver_->vertex_id(v) + ":" + std::to_string(coords_[v]);
    }
    return out.empty() ? "0" : out;
}

MonoidElement MonoidElement::parse(QuiverPtr q, std::string_view text) {
    std::vector<long long> coords(q->num_vertices(), 0);
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size())
        return MonoidElement(std::move(q), std::move(coords));
    while (pos < text.size()) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] != ':') ++pos;
        if (pos == text.size()) throw ParseError("monoid element term needs vertex:count");
        std::string vid(text.substr(start, pos - start));
        while (!vid.empty() && std::isspace(static_cast<unsigned char>(vid.back())))
            vid.pop_back();
        ++pos;
        skip_ws();
        long long count = 0;
        bool any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            count = count * 10 + (text[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any) throw ParseError("monoid element count must be a nonnegative integer");
        coords[q->vertex_index(vid)] += count;
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("expected ',' between monoid terms");
            ++pos;
        }
    }
    return MonoidElement(std::move(q), std::move(coords));
}

std::vector<std::pair<MonoidElement, MonoidElement>> monoid_relations(const QuiverPtr& q) {
    std::vector<std::pair<MonoidElement, MonoidElement>> out;
    for (int v = 0; v < q->num_vertices(); ++v) {
        if (q->is_sink(v)) continue;
        MonoidElement lhs = MonoidElement::generator(q, v);
        MonoidElement rhs = MonoidElement::zero(q);
        for (int e : q->out_edges(v)) rhs = rhs + MonoidElement::generator(q, q->edge(e).dst);
        out.emplace_back(std::move(lhs), std::move(rhs));
    }
    return out;
}

MonoidElement normal_form_acyclic(const MonoidElement& x) {
    const QuiverPtr& q = x.quiver();
    if (!q->is_acyclic()) throw CyclicQuiver();
    // topological order via repeated source removal
    std::vector<int> indeg(q->num_vertices(), 0);
    for (int e = 0; e < q->num_edges(); ++e) ++indeg[q->edge(e).dst];
    std::vector<int> topo;
    std::vector<int> ready;
    for (int v = 0; v < q->num_vertices(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.erase(ready.begin());
        topo.push_back(v);
        for (int e : q->out_edges(v))
            if (--indeg[q->edge(e).dst] == 0) ready.push_back(q->edge(e).dst);
    }
    std::vector<long long> c = x.coords();
    for (int v : topo) {
        if (q->is_sink(v) || c[v] == 0) continue;
        long long k = c[v];
        c[v] = 0;
        for (int e : q->out_edges(v)) c[q->edge(e).dst] += k;
    }
    return MonoidElement(q, std::move(c));
}

namespace {

struct BoundedClass {
    std::set<std::vector<long long>> members;
    bool complete = true;  // no vector was pruned by the bound
};

// Forward and backward closure under the defining relations with a
// coordinate-sum cap; optional early exit when `stop` is seen.
BoundedClass bounded_class(const MonoidElement& x, long long bound,
                           const std::vector<long long>* stop = nullptr,
                           bool* found_stop = nullptr) {
    const QuiverPtr& q = x.quiver();
    auto rels = monoid_relations(q);
    BoundedClass out;
    std::vector<std::vector<long long>> frontier{x.coords()};
    out.members.insert(x.coords());
    if (stop && x.coords() == *stop && found_stop) *found_stop = true;
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& cur : frontier) {
            for (const auto& [lhs, rhs] : rels) {
                // forward: consume lhs, add rhs; backward: the reverse
                for (int dir = 0; dir < 2; ++dir) {
                    const auto& take = dir == 0 ? lhs.coords() : rhs.coords();
                    const auto& give = dir == 0 ? rhs.coords() : lhs.coords();
                    bool applicable = true;
                    for (size_t i = 0; i < take.size(); ++i)
                        if (cur[i] < take[i]) {
                            applicable = false;
                            break;
                        }
                    if (!applicable) continue;
                    std::vector<long long> nxt(cur.size());
                    long long total = 0;
                    for (size_t i = 0; i < cur.size(); ++i) {
                        nxt[i] = cur[i] - take[i] + give[i];
                        total += nxt[i];
                    }
                    if (total > bound) {
                        out.complete = false;
                        continue;
                    }
                    if (out.members.insert(nxt).second) {
                        if (stop && nxt == *stop && found_stop) *found_stop = true;
                        next.push_back(std::move(nxt));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

long long default_monoid_bound(const QuiverPtr& q) { return 12ll * q->num_vertices(); }

EqAnswer equals_bounded(const MonoidElement& x, const MonoidElement& y, long long bound) {
    if (x.coords() == y.coords()) return EqAnswer::yes;
    bool found = false;
    std::vector<long long> target = y.coords();
    BoundedClass cx = bounded_class(x, bound, &target, &found);
    if (found) return EqAnswer::yes;
    if (cx.complete) return EqAnswer::no;
    std::vector<long long> back = x.coords();
    BoundedClass cy = bounded_class(y, bound, &back, &found);
    if (found) return EqAnswer::yes;
    for (const auto& m : cy.members)
        if (cx.members.count(m)) return EqAnswer::yes;
    if (cy.complete) return EqAnswer::no;
    return EqAnswer::unknown;
}

namespace {

// Vertices w with a_w <= n * sum_{v in S} a_v for some n <= cap, i.e. some
// member of the class of n * g_S has a positive w-coordinate.
std::pair<std::vector<bool>, bool> ideal_vertices(const QuiverPtr& q, const VertexSet& s,
                                                  long long bound, int cap) {
    int d = q->num_vertices();
    std::vector<bool> verts(d, false);
    MonoidElement gen = MonoidElement::zero(q);
    for (int v : s.indices()) gen = gen + MonoidElement::generator(q, v);
    if (gen.total() == 0) return {verts, true};
    MonoidElement acc = MonoidElement::zero(q);
    bool any_pruned = false;
    std::vector<bool> before_last;
    for (int n = 1; n <= cap; ++n) {
        before_last = verts;
        acc = acc + gen;
        BoundedClass cls = bounded_class(acc, bound);
        if (!cls.complete) any_pruned = true;
        for (const auto& m : cls.members)
            for (int v = 0; v < d; ++v)
                if (m[v] > 0) verts[v] = true;
    }
    // Membership findings are monotone certificates; only ABSENCES need a
    // completeness argument. Two certificates apply: every class was fully
    // enumerated and the vertex set stopped growing at the cap, or the found
    // set already fills the support invariant of the rewriting system (a
    // forward step at v adds exactly the ranges of s^{-1}(v), a backward step
    // needs all of them present, so no congruent vector can have support
    // outside the hereditary saturated closure of the generators).
    bool all_found = std::all_of(verts.begin(), verts.end(), [](bool b) { return b; });
    VertexSet support_cap = hereditary_saturated_closure(s);
    bool fills_cap = true;
    for (int v = 0; v < d; ++v)
        if (verts[v] != support_cap.contains(v)) fills_cap = false;
    bool definitive = all_found || fills_cap || (!any_pruned && verts == before_last);
    return {verts, definitive};
}

}  // namespace

OrderIdealLattice order_ideal_lattice(const QuiverPtr& q, long long bound,
                                      int multiplicity_cap) {
    if (bound < 0) bound = default_monoid_bound(q);
    if (multiplicity_cap < 0) multiplicity_cap = std::max(2, q->num_vertices());
    OrderIdealLattice out;
    int d = q->num_vertices();

    // Every order-ideal is generated by the vertex generators it contains, so
    // the lattice is the join-closure of the principal-ideal vertex sets.
    std::vector<VertexSet> sets;
    auto add_unique = [&](const VertexSet& v) {
        for (const auto& w : sets)
            if (w == v) return;
        sets.push_back(v);
    };
    add_unique(VertexSet::empty(q));
    auto closure_of = [&](const VertexSet& s) {
        auto [verts, definitive] = ideal_vertices(q, s, bound, multiplicity_cap);
        if (!definitive) out.inconclusive = true;
        std::vector<bool> mask(verts.begin(), verts.end());
        return VertexSet(q, std::move(mask));
    };
    std::vector<VertexSet> principals;
    for (int v = 0; v < d; ++v) {
        std::vector<bool> m(d, false);
        m[v] = true;
        principals.push_back(closure_of(VertexSet(q, std::move(m))));
        add_unique(principals.back());
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = sets.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                size_t before = sets.size();
                add_unique(closure_of(sets[i].set_union(sets[j])));
                if (sets.size() != before) grew = true;
            }
        }
    }
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.mask() < b.mask();
    });
    out.ideal_vertex_sets = std::move(sets);

    HsLattice hs = enumerate_lattice(q);
    out.matches_hs_lattice = hs.sets.size() == out.ideal_vertex_sets.size();
    if (out.matches_hs_lattice) {
        for (size_t i = 0; i < hs.sets.size(); ++i)
            if (!(hs.sets[i] == out.ideal_vertex_sets[i])) out.matches_hs_lattice = false;
    }
    return out;
}

}  // namespace mqa
