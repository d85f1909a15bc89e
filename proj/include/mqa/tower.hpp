#ifndef MQA_TOWER_HPP
#define MQA_TOWER_HPP

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mqa/gf.hpp"
#include "mqa/poly.hpp"

#include <nlohmann/json_fwd.hpp>

namespace mqa {

enum class TowerKind { finite_field, rational_function, constant };

// Description of a field chain K_0 <= K_1 <= ... <= K_r.
//   finite-field:      F_p^{d_0} <= ... <= F_p^{d_r}, d_i a divisibility chain
//   rational-function: Q <= Q(t1) <= ... <= Q(t1..tr)
//   constant:          Q repeated r+1 times
struct TowerSpec {
    TowerKind kind = TowerKind::constant;
    unsigned p = 0;
    std::vector<unsigned> degrees;
    unsigned levels = 0;  // r, for rational-function / constant

    unsigned r() const {
        return kind == TowerKind::finite_field ? static_cast<unsigned>(degrees.size()) - 1
                                               : levels;
    }

    static TowerSpec finite_field(unsigned p, std::vector<unsigned> degrees);
    static TowerSpec rational_function(unsigned levels);
    static TowerSpec constants(unsigned levels);

    static TowerSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    bool operator==(const TowerSpec&) const = default;
};

class TowerElement;

namespace detail {
struct TowerCore;
}

// A window [lo, hi] onto a constructed field chain. Logical level j of the
// window is physical level lo+j of the core chain; full towers have lo = 0,
// hi = r. Cut/corner re-indexing only moves the window, never the values.
class Tower {
public:
    explicit Tower(const TowerSpec& spec);

    TowerKind kind() const;
    const TowerSpec& spec() const;
    unsigned r() const { return hi_ - lo_; }
    unsigned lo() const { return lo_; }
    unsigned hi() const { return hi_; }
    Tower window(unsigned lo, unsigned hi) const;  // physical indices

    bool same_tower(const Tower& o) const;
    bool operator==(const Tower& o) const { return same_tower(o); }

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement from_int(long long v) const;
    // finite-field: the stored generator w of K_r; others throw UnsupportedTower
    TowerElement generator() const;
    // rational-function: t_j for 1 <= j <= hi (physical index)
    TowerElement indeterminate(unsigned j) const;

    TowerElement parse(std::string_view text) const;  // throws ParseError / LevelViolation

    // Re-tags an element of the same core into this window; throws
    // LevelViolation when the value does not lie in the window's top field.
    TowerElement adopt(const TowerElement& e) const;

    bool linear_independent_over(std::span<const TowerElement> elems, unsigned level) const;

    // Finite-field / constant only.
    unsigned dim_over_base(unsigned level) const;
    std::vector<TowerElement> prime_basis_of_level(unsigned level) const;
    std::vector<unsigned> prime_coords(const TowerElement& e) const;
    unsigned prime_p() const;
    unsigned prime_dim() const;  // dim of K_r over F_p

    // Random element whose minimal level is at most `level` (logical).
    TowerElement random_element(std::mt19937& rng, unsigned level) const;

private:
    std::shared_ptr<const detail::TowerCore> core_;
    unsigned lo_ = 0, hi_ = 0;
    Tower(std::shared_ptr<const detail::TowerCore> core, unsigned lo, unsigned hi);
    friend class TowerElement;
};

class TowerElement {
public:
    TowerElement() = default;

    const Tower& tower() const { return tower_; }
    bool is_zero() const;

    // Logical minimal level within the element's window (cached).
    unsigned level() const;
    bool member_at(unsigned level) const;

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement operator-() const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator/(const TowerElement& o) const;  // throws DivisionByZero
    TowerElement pow(unsigned e) const;
    bool operator==(const TowerElement& o) const;
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    Tower tower_{TowerSpec::constants(0)};
    GfCore::Elem ff_;
    Fraction rf_;
    mutable std::optional<unsigned> cached_level_;

    friend class Tower;
    void check_same(const TowerElement& o) const;
    unsigned physical_level() const;
};

}  // namespace mqa

#endif  // MQA_TOWER_HPP
