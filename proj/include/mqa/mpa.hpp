#ifndef MQA_MPA_HPP
#define MQA_MPA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mqa/mixed.hpp"

namespace mqa {

// Element of the mixed path algebra: a finite linear combination of paths
// whose coefficient at alpha lies in K_{lev(r(alpha))}. Terms are kept in
// (length, edge-id sequence) order; zero coefficients are never stored.
class MpaElement {
public:
    using Terms = std::map<Path, TowerElement, PathLess>;

    // Canonicalizes and enforces the level constraint (throws LevelViolation).
    MpaElement(MixedDataPtr data, const std::vector<std::pair<Path, TowerElement>>& terms);

    static MpaElement zero(MixedDataPtr data);
    static MpaElement unit(MixedDataPtr data);  // sum of all p_v
    static MpaElement vertex_idempotent(MixedDataPtr data, int v);
    static MpaElement single(MixedDataPtr data, const Path& p, const TowerElement& c);

    const MixedDataPtr& data() const { return data_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TowerElement coeff(const Path& p) const;

    MpaElement operator+(const MpaElement& o) const;
    MpaElement operator-(const MpaElement& o) const;
    MpaElement operator-() const;
    MpaElement operator*(const MpaElement& o) const;  // path concatenation product
    MpaElement scaled(const TowerElement& c) const;
    bool operator==(const MpaElement& o) const;

    // Coefficient of the trivial path at each vertex (zeros included).
    std::vector<TowerElement> augmentation() const;
    bool epsilon_zero() const;  // no trivial-path term

    // Rechecks every invariant; used by closure property tests.
    void validate() const;

    std::string str() const;
    static MpaElement parse(MixedDataPtr data, std::string_view text);

private:
    MixedDataPtr data_;
    Terms terms_;
    MpaElement(MixedDataPtr data) : data_(std::move(data)) {}
    void add_term(const Path& p, const TowerElement& c);
    friend class LpaElement;
};

// True when the raw terms satisfy the level constraints (make_element
// acceptance without throwing).
bool mpa_accepts(const MixedDataPtr& data,
                 const std::vector<std::pair<Path, TowerElement>>& terms);

// Brute-force membership oracle built from the defining recursion
// P_0 = P_{K_r}(E_{H_0}), P_i = P_{K_{r-i}}(E_{H_i}) + P_{K_{r-i}}(E_{H_i}) p_{H_{i-1}} P_{i-1}:
// generates the coefficient span admitted at each path (up to the candidate's
// maximal length) by linear algebra over the prime field and tests
// containment termwise. Finite-field towers only.
bool oracle_membership(const MixedDataPtr& data,
                       const std::vector<std::pair<Path, TowerElement>>& candidate);

// dim over K_0 of the span of length-n terms of the stage algebra P_i
// (default: i = r, the full mixed path algebra). Finite-field or constant
// towers only.
unsigned graded_dimension(const MixedDataPtr& data, unsigned n,
                          std::optional<unsigned> stage = std::nullopt);

}  // namespace mqa

#endif  // MQA_MPA_HPP
