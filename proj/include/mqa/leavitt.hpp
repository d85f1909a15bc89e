#ifndef MQA_LEAVITT_HPP
#define MQA_LEAVITT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mqa/mpa.hpp"

namespace mqa {

// Monomial alpha . beta-bar of the Leavitt path algebra. The ghost path is
// stored unreversed; the monomial runs from s(alpha) to s(beta) and its
// midpoint is the shared range r(alpha) = r(beta).
struct LpaMonomial {
    Path real;
    Path ghost;

    int midpoint() const { return real.dst(); }
    unsigned total_length() const { return real.length() + ghost.length(); }
    std::string str() const;
};

struct LpaMonomialLess {
    bool operator()(const LpaMonomial& a, const LpaMonomial& b) const {
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        PathLess less;
        if (less(a.real, b.real)) return true;
        if (less(b.real, a.real)) return false;
        return less(a.ghost, b.ghost);
    }
};

// Designated out-edge per emitter, orienting the (CK2) rewrite rule
// e_v e_v-bar -> p_v - sum_{e != e_v} e e-bar. Only level-minimal edges
// (entry index of the range equal to that of the source) are admissible:
// rewriting at any other edge can push coefficients below their level.
class SpecialEdgeChoice {
public:
    static SpecialEdgeChoice least(const MixedDataPtr& data);
    static SpecialEdgeChoice explicit_map(const MixedDataPtr& data,
                                          const std::map<std::string, std::string>& by_vertex);

    int special_edge(int v) const { return special_.at(v); }  // -1 for sinks

private:
    std::vector<int> special_;
};

class LpaElement {
public:
    using Terms = std::map<LpaMonomial, TowerElement, LpaMonomialLess>;

    LpaElement(MixedDataPtr data, const std::vector<std::pair<LpaMonomial, TowerElement>>& terms);

    static LpaElement zero(MixedDataPtr data);
    static LpaElement unit(MixedDataPtr data);
    static LpaElement vertex_idempotent(MixedDataPtr data, int v);
    static LpaElement real_edge(MixedDataPtr data, int e);
    static LpaElement ghost_edge(MixedDataPtr data, int e);
    static LpaElement from_mpa(const MpaElement& a);
    static LpaElement single(MixedDataPtr data, const LpaMonomial& m, const TowerElement& c);

    const MixedDataPtr& data() const { return data_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LpaElement operator+(const LpaElement& o) const;
    LpaElement operator-(const LpaElement& o) const;
    LpaElement operator-() const;
    LpaElement operator*(const LpaElement& o) const;  // (CK1) contraction product
    LpaElement scaled(const TowerElement& c) const;
    bool operator==(const LpaElement& o) const;

    void validate() const;

    std::string str() const;
    static LpaElement parse(MixedDataPtr data, std::string_view text);

private:
    MixedDataPtr data_;
    Terms terms_;
    explicit LpaElement(MixedDataPtr data) : data_(std::move(data)) {}
    void add_term(const LpaMonomial& m, const TowerElement& c);
    friend LpaElement reduce_with_strategy(const LpaElement&, const SpecialEdgeChoice&,
                                           std::mt19937*);
};

// Canonical normal form: no monomial whose real and ghost paths both end in
// the designated special edge of that edge's source. Deterministic
// (first-redex) strategy; the randomized variant exists for confluence tests.
LpaElement reduce(const LpaElement& a, const SpecialEdgeChoice& choice);
LpaElement reduce_randomized(const LpaElement& a, const SpecialEdgeChoice& choice,
                             std::mt19937& rng);

struct RelationCheck {
    std::string family;    // V, E1, E2, CK1, CK2
    std::string instance;  // which vertices/edges
    bool pass;
};
// Verifies the five relation families instance by instance under mul/reduce.
std::vector<RelationCheck> check_relations(const MixedDataPtr& data,
                                           const SpecialEdgeChoice& choice);

// mu_v invertibility witness: e_i-bar e_j = delta_ij p_{r(e_i)} and
// sum_i e_i e_i-bar = p_v under mul/reduce. Throws SinkVertex for sinks.
bool verify_mu_inverse(const MixedDataPtr& data, int v, const SpecialEdgeChoice& choice);

// Quotient map by a hereditary saturated H: keeps monomials avoiding H
// (midpoint outside H), drops the rest; the result lives over E/H with
// re-indexed chain data. H must be a chain member unless the chain is trivial.
LpaElement quotient_map(const LpaElement& a, const VertexSet& h);
LpaElement quotient_map_to(const LpaElement& a, const MixedDataPtr& target, const VertexSet& h);

}  // namespace mqa

#endif  // MQA_LEAVITT_HPP
