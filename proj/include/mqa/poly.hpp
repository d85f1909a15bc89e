#ifndef MQA_POLY_HPP
#define MQA_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace mqa {

// Exponent vector; all monomials of one polynomial share the same width.
using Monomial = std::vector<unsigned>;

// Graded lexicographic order with t1 < t2 < ... (total degree first, then the
// exponent of the largest variable decides). Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over Q. Terms are kept in descending graded
// lexicographic order; zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, mpq_class, GrlexGreater>;

    explicit Poly(unsigned nvars = 0) : nvars_(nvars) {}
    static Poly constant(unsigned nvars, const mpq_class& c);
    static Poly variable(unsigned nvars, unsigned index);  // 1-based index

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Terms& terms() const { return terms_; }
    mpq_class constant_value() const;  // coefficient of the 1-monomial

    // 1-based index of the largest variable that occurs; 0 for constants.
    unsigned max_var() const;
    unsigned total_degree() const;
    unsigned degree_in(unsigned var) const;  // 1-based var

    const Monomial& leading_monomial() const;
    const mpq_class& leading_coeff() const;

    void add_term(const Monomial& m, const mpq_class& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpq_class& c) const;
    bool operator==(const Poly& o) const = default;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    unsigned nvars_;
    Terms terms_;
};

// Exact quotient; throws InternalInvariantViolation when b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);

// Monic (leading coefficient 1 under grlex) gcd via primitive-part recursive
// Euclid. gcd(0, b) is the monic normalization of b.
Poly poly_gcd(const Poly& a, const Poly& b);

// Reduced fraction of polynomials with a grlex-monic denominator; the unique
// canonical representative of its value. Zero is 0/1.
class Fraction {
public:
    explicit Fraction(unsigned nvars = 0);
    Fraction(Poly num, Poly den);  // normalizes; throws DivisionByZero
    static Fraction from_poly(Poly p);
    static Fraction constant(unsigned nvars, const mpq_class& c);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    unsigned nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    unsigned max_var() const;

    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator-() const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;  // throws DivisionByZero
    bool operator==(const Fraction& o) const = default;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    Poly num_, den_;
    void normalize();
};

}  // namespace mqa

#endif  // MQA_POLY_HPP
