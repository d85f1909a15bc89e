#ifndef MQA_SERIES_HPP
#define MQA_SERIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mqa/mpa.hpp"

namespace mqa {

// Formal power series truncated at a fixed order: coefficients for every path
// of length <= order. Arithmetic results carry the minimum of the operand
// orders.
class TruncatedSeries {
public:
    using Terms = std::map<Path, TowerElement, PathLess>;

    TruncatedSeries(MixedDataPtr data, int order);
    TruncatedSeries(MixedDataPtr data, int order,
                    const std::vector<std::pair<Path, TowerElement>>& terms);
    static TruncatedSeries from_mpa(const MpaElement& a, int order);

    const MixedDataPtr& data() const { return data_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TowerElement coeff(const Path& p) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const TowerElement& c) const;
    bool operator==(const TruncatedSeries& o) const;
    bool agree_up_to(const TruncatedSeries& o, int order) const;

    // Level constraint (as for mixed path algebra elements) on every term.
    bool mixed_valid() const;

    std::string str() const;

private:
    MixedDataPtr data_;
    int order_;
    Terms terms_;
    void add_term(const Path& p, const TowerElement& c);
};

// delta~_e: coefficient of alpha in the output is the input coefficient of
// e.alpha. Output order is one less; requires order >= 1.
TruncatedSeries right_transduction(const TruncatedSeries& s, int edge);
// delta_e: strips e from the right of paths.
TruncatedSeries left_transduction(const TruncatedSeries& s, int edge);
// tau_e: projects to the trivial-path part, relabels p_{s(e)} to p_{r(e)},
// kills every other component.
TruncatedSeries tau(const TruncatedSeries& s, int edge);

// delta~_e(r s) = delta~_e(r) s + tau_e(r) delta~_e(s) at the common valid order.
bool check_derivation_law(const TruncatedSeries& r, const TruncatedSeries& s, int edge);

enum class Side { left, right };
struct ClosureProbe {
    bool valid;
    TruncatedSeries output;
};
ClosureProbe mixed_closure_probe(const TruncatedSeries& s, int edge, Side side);

using MpaMatrix = std::vector<std::vector<MpaElement>>;

MpaMatrix mat_mul(const MpaMatrix& a, const MpaMatrix& b);
bool mat_is_zero(const MpaMatrix& a);

// Linear representation (lambda, B, rho) of a rational series a = lambda
// (I - B)^{-1} rho, with eps(B) = 0 so the geometric expansion is graded.
class LinearRep {
public:
    LinearRep(MixedDataPtr data, std::vector<MpaElement> lambda, MpaMatrix b,
              std::vector<MpaElement> rho);

    const MixedDataPtr& data() const { return data_; }
    int size() const { return static_cast<int>(lambda_.size()); }
    const std::vector<MpaElement>& lambda() const { return lambda_; }
    const MpaMatrix& b() const { return b_; }
    const std::vector<MpaElement>& rho() const { return rho_; }
    bool epsilon_zero() const;
    // Per entry of B: the set of range vertices of support paths.
    const std::vector<std::vector<std::vector<bool>>>& end_masks() const { return end_masks_; }

private:
    MixedDataPtr data_;
    std::vector<MpaElement> lambda_;
    MpaMatrix b_;
    std::vector<MpaElement> rho_;
    std::vector<std::vector<std::vector<bool>>> end_masks_;
};

// lambda (sum_{k<=N} B^k) rho truncated at order N. Throws EpsilonNonzero.
TruncatedSeries expand(const LinearRep& rep, int order);

// B = B1 + B2 with B1 supported on paths ending outside H and B2 on paths
// ending in H; hereditariness forces B2 B1 = 0, asserted exactly (violation
// raises InternalInvariantViolation).
std::pair<MpaMatrix, MpaMatrix> split_b(const LinearRep& rep, const VertexSet& h);

// (I - B)^{-1} = (I - B1)^{-1} (I - B2)^{-1}, compared entrywise to order N.
bool check_binverse_identity(const LinearRep& rep, const VertexSet& h, int order);

// Compressed representation (p_H lambda p_H, p_H B p_H, p_H rho p_H) over the
// restriction graph E_H. H must be a chain member for mixed data; any
// hereditary H is accepted over trivial chains.
LinearRep corner_rep(const LinearRep& rep, const VertexSet& h);

// p_H s p_H: keeps terms whose path starts and ends in H.
TruncatedSeries compress(const TruncatedSeries& s, const VertexSet& h);

// expand(corner_rep(rep, H)) equals p_H expand(rep) p_H at order N.
bool check_corner_identity(const LinearRep& rep, const VertexSet& h, int order);

std::vector<TowerElement> enumerate_level_elements(const Tower& tower, unsigned level);

// Executable content of the crossing-edge claim: when b_1..b_m (series
// supported in H starting at r(e)) are independent over level `level` and
// some a_j e is nonzero, sum_j a_j e b_j is nonzero; the per-path coefficient
// equations of the proof are checked as well.
struct Claim2Report {
    bool bs_independent = false;
    bool some_ae_nonzero = false;
    bool sum_nonzero = false;
    bool coefficients_match = false;
    bool conclusion_holds() const {
        return !(bs_independent && some_ae_nonzero) || (sum_nonzero && coefficients_match);
    }
};
Claim2Report claim2_check(const MixedDataPtr& data, int crossing_edge,
                          const std::vector<MpaElement>& as,
                          const std::vector<TruncatedSeries>& bs, unsigned level, int order);

}  // namespace mqa

#endif  // MQA_SERIES_HPP
