#ifndef MQA_GF_HPP
#define MQA_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mqa {

// Row space over F_p kept in reduced row echelon form. Used for the span
// computations of the mixed-algebra membership oracle and small basis counts.
class FpSpan {
public:
    explicit FpSpan(unsigned p) : p_(p) {}
    // Returns true when the vector enlarged the span.
    bool insert(std::vector<unsigned> v);
    bool contains(std::vector<unsigned> v) const;
    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

private:
    unsigned p_;
    std::vector<std::vector<unsigned>> rows_;  // RREF, sorted by pivot
    void reduce(std::vector<unsigned>& v) const;
};

// The top field K_r = F_p[x]/(m(x)) of a finite-field tower, m a fixed stored
// primitive polynomial, together with the unique subfield ladder
// F_{p^{d_0}} <= ... <= F_{p^{d_r}} given by a divisibility chain of degrees.
class GfCore {
public:
    using Elem = std::vector<unsigned>;  // n coordinates over F_p, basis 1,x,...,x^{n-1}

    GfCore(unsigned p, std::vector<unsigned> degrees);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned levels() const { return static_cast<unsigned>(degrees_.size()); }
    unsigned degree(unsigned i) const { return degrees_.at(i); }

    Elem zero() const { return Elem(n_, 0); }
    Elem one() const;
    Elem x() const;
    Elem from_int(long long v) const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws DivisionByZero
    Elem pow(Elem a, unsigned long long e) const;

    Elem frobenius(const Elem& a) const { return pow(a, p_); }
    // Least i with a in F_{p^{d_i}} (Frobenius fixed-point test).
    unsigned min_level(const Elem& a) const;

    // F_p-basis of the level-i subfield: powers of the subfield generator
    // zeta_i = x^((p^n-1)/(p^{d_i}-1)).
    const std::vector<Elem>& level_basis(unsigned i) const { return level_basis_.at(i); }

    // Coordinates of a over the level-i subfield in the basis 1,x,...,x^{k-1},
    // k = n/d_i; each coordinate is an element of the subfield.
    std::vector<Elem> subfield_coords(const Elem& a, unsigned i) const;

    std::string to_string(const Elem& a) const;  // polynomial in w

private:
    unsigned p_;
    std::vector<unsigned> degrees_;
    unsigned n_;
    std::vector<unsigned> modulus_;            // ascending, degree n, monic
    std::vector<Elem> xpow_;                   // x^n .. x^(2n-2) reduced
    std::vector<std::vector<Elem>> level_basis_;
    std::vector<std::vector<std::vector<unsigned>>> mixed_basis_inv_;  // per level, n x n over F_p

    unsigned addp(unsigned a, unsigned b) const { return (a + b) % p_; }
    unsigned subp(unsigned a, unsigned b) const { return (a + p_ - b % p_) % p_; }
    unsigned mulp(unsigned a, unsigned b) const {
        return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    unsigned invp(unsigned a) const;

    void build_subfield_data();
    void check_modulus() const;
};

}  // namespace mqa

#endif  // MQA_GF_HPP
