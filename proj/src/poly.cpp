#include "mqa/poly.hpp"

#include <algorithm>
#include <cassert>

#include "mqa/errors.hpp"

namespace mqa {

int grlex_cmp(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Poly Poly::constant(unsigned nvars, const mpq_class& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(unsigned nvars, unsigned index) {
    assert(index >= 1 && index <= nvars);
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index - 1] = 1;
    p.terms_[m] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

mpq_class Poly::constant_value() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Poly::max_var() const {
    unsigned mv = 0;
    for (const auto& [m, c] : terms_) {
        for (size_t i = m.size(); i-- > 0;) {
            if (m[i] != 0) {
                mv = std::max<unsigned>(mv, static_cast<unsigned>(i) + 1);
                break;
            }
        }
    }
    return mv;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (unsigned e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

unsigned Poly::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var - 1]);
    return d;
}

const Monomial& Poly::leading_monomial() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

const mpq_class& Poly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
    assert(m.size() == nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const mpq_class& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
    return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class ac = c;
        bool neg = c < 0;
        if (neg) ac = -c;
        std::string mono;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names.at(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string body;
        if (mono.empty()) {
            body = ac.get_str();
        } else if (ac == 1) {
            body = mono;
        } else {
            body = ac.get_str() + "*" + mono;
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Coefficients of p viewed as univariate in `var`, exponent of `var` zeroed.
std::map<unsigned, Poly> univariate_view(const Poly& p, unsigned var) {
    std::map<unsigned, Poly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[var - 1];
        Monomial rest = m;
        rest[var - 1] = 0;
        auto [it, inserted] = coeffs.emplace(e, Poly(p.nvars()));
        it->second.add_term(rest, c);
    }
    return coeffs;
}

Poly times_var_power(const Poly& p, unsigned var, unsigned e) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        m2[var - 1] += e;
        r.add_term(m2, c);
    }
    return r;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    mpq_class inv = 1 / p.leading_coeff();
    return p * inv;
}

// Scale to coprime integer coefficients with positive leading coefficient.
// gcds are only defined up to units, and integer-primitive intermediates keep
// the pseudo-remainder sequences from blowing up numerically.
Poly z_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading_coeff() * scale < 0) scale = -scale;
    return p * scale;
}

Poly content(const Poly& p, unsigned var) {
    Poly g(p.nvars());
    for (const auto& [e, coeff] : univariate_view(p, var)) {
        g = poly_gcd(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

}  // namespace

Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    Poly q(a.nvars());
    Poly r = a;
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        const Monomial& lb = b.leading_monomial();
        if (!monomial_divides(lb, lr))
            throw InternalInvariantViolation("non-exact polynomial division");
        Monomial m(a.nvars());
        for (unsigned i = 0; i < a.nvars(); ++i) m[i] = lr[i] - lb[i];
        mpq_class c = r.leading_coeff() / b.leading_coeff();
        Poly t(a.nvars());
        t.add_term(m, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    unsigned var = std::max(a.max_var(), b.max_var());
    if (var == 0) return Poly::constant(a.nvars(), 1);

    Poly ca = content(a, var);
    Poly cb = content(b, var);
    Poly cg = poly_gcd(ca, cb);
    Poly pa = z_primitive(div_exact(a, ca));
    Poly pb = z_primitive(div_exact(b, cb));
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    // Primitive pseudo-remainder sequence, integer-primitive at every step.
    while (!pb.is_zero()) {
        unsigned db = pb.degree_in(var);
        if (db == 0) {
            // pb is primitive with no occurrence of var: unit over the
            // coefficient ring, so the primitive parts are coprime.
            pa = Poly::constant(a.nvars(), 1);
            break;
        }
        Poly r = pa;
        auto lbv = univariate_view(pb, var).rbegin()->second;
        while (!r.is_zero() && r.degree_in(var) >= db) {
            auto rv = univariate_view(r, var);
            unsigned dr = rv.rbegin()->first;
            Poly lr = rv.rbegin()->second;
            r = z_primitive(r * lbv - times_var_power(lr, var, dr - db) * pb);
        }
        pa = pb;
        if (r.is_zero()) {
            pb = Poly(a.nvars());
        } else {
            pb = z_primitive(div_exact(r, content(r, var)));
        }
    }
    return monic(cg * pa);
}

Fraction::Fraction(unsigned nvars)
    : num_(nvars), den_(Poly::constant(nvars, 1)) {}

Fraction::Fraction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

Fraction Fraction::from_poly(Poly p) {
    unsigned nv = p.nvars();
    return Fraction(std::move(p), Poly::constant(nv, 1));
}

Fraction Fraction::constant(unsigned nvars, const mpq_class& c) {
    return Fraction(Poly::constant(nvars, c), Poly::constant(nvars, 1));
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g.is_constant() && g.constant_value() == 1)) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    mpq_class lc = den_.leading_coeff();
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

unsigned Fraction::max_var() const {
    return std::max(num_.max_var(), den_.max_var());
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Fraction(num_ * o.den_, den_ * o.num_);
}

std::string Fraction::str(const std::vector<std::string>& var_names) const {
    if (den_.is_constant() && den_.constant_value() == 1) {
        return num_.str(var_names);
    }
    return "(" + num_.str(var_names) + ")/(" + den_.str(var_names) + ")";
}

}  // namespace mqa
