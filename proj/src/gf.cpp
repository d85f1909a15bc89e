#include "mqa/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "mqa/errors.hpp"

namespace mqa {

bool FpSpan::insert(std::vector<unsigned> v) {
    reduce(v);
    auto pivot = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
    if (pivot == v.end()) return false;
    size_t pcol = static_cast<size_t>(pivot - v.begin());
    // scale pivot to 1
    unsigned pv = *pivot;
    unsigned inv = 1;
    for (unsigned c = 1; c < p_; ++c) {
        if ((static_cast<std::uint64_t>(pv) * c) % p_ == 1) {
            inv = c;
            break;
        }
    }
    for (auto& c : v) c = static_cast<unsigned>((static_cast<std::uint64_t>(c) * inv) % p_);
    // eliminate this column from existing rows
    for (auto& row : rows_) {
        unsigned f = row[pcol];
        if (f == 0) continue;
        for (size_t j = 0; j < row.size(); ++j) {
            std::uint64_t t = row[j] + static_cast<std::uint64_t>(p_ - f) * v[j] % p_;
            row[j] = static_cast<unsigned>(t % p_);
        }
    }
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
        auto pa = std::find_if(a.begin(), a.end(), [](unsigned c) { return c != 0; });
        auto pb = std::find_if(b.begin(), b.end(), [](unsigned c) { return c != 0; });
        return (pa - a.begin()) < (pb - b.begin());
    });
    return true;
}

bool FpSpan::contains(std::vector<unsigned> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](unsigned c) { return c == 0; });
}

void FpSpan::reduce(std::vector<unsigned>& v) const {
    for (const auto& row : rows_) {
        size_t pcol = 0;
        while (pcol < row.size() && row[pcol] == 0) ++pcol;
        if (pcol == row.size()) continue;
        unsigned f = v[pcol];
        if (f == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            std::uint64_t t = v[j] + static_cast<std::uint64_t>(p_ - f) * row[j] % p_;
            v[j] = static_cast<unsigned>(t % p_);
        }
    }
}

namespace {

// Fixed primitive polynomials (Conway polynomials), ascending coefficients.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway_table() {
    static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
    };
    return table;
}

unsigned long long ipow(unsigned long long b, unsigned e) {
    unsigned long long r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<unsigned long long> prime_factors(unsigned long long m) {
    std::vector<unsigned long long> fs;
    for (unsigned long long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            fs.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

}  // namespace

GfCore::GfCore(unsigned p, std::vector<unsigned> degrees)
    : p_(p), degrees_(std::move(degrees)) {
    if (p_ < 2) throw ValidationError("finite-field tower needs a prime p >= 2");
    for (unsigned q = 2; q < p_; ++q)
        if (p_ % q == 0) throw ValidationError("finite-field characteristic must be prime");
    if (degrees_.empty()) throw ValidationError("finite-field tower needs at least one degree");
    for (size_t i = 0; i + 1 < degrees_.size(); ++i) {
        if (degrees_[i] == 0 || degrees_[i + 1] % degrees_[i] != 0)
            throw ValidationError("finite-field degrees must form a divisibility chain");
    }
    n_ = degrees_.back();
    auto it = conway_table().find({p_, n_});
    if (it == conway_table().end())
        throw UnsupportedTower("no stored primitive polynomial for p=" + std::to_string(p_) +
                               ", degree " + std::to_string(n_));
    modulus_ = it->second;
    // precompute x^n .. x^(2n-2) mod m
    xpow_.resize(n_ >= 1 ? n_ - 1 : 0);
    Elem cur(n_, 0);
    // x^n = -(m - x^n) i.e. negate lower coefficients of the monic modulus
    for (unsigned i = 0; i < n_; ++i) cur[i] = subp(0, modulus_[i]);
    for (unsigned k = 0; k + 1 < n_; ++k) {
        xpow_[k] = cur;
        // multiply by x
        Elem next(n_, 0);
        for (unsigned i = 0; i + 1 < n_; ++i) next[i + 1] = cur[i];
        unsigned top = cur[n_ - 1];
        if (top != 0) {
            for (unsigned i = 0; i < n_; ++i)
                next[i] = addp(next[i], mulp(top, subp(0, modulus_[i])));
        }
        cur = next;
    }
    check_modulus();
    build_subfield_data();
}

GfCore::Elem GfCore::one() const {
    Elem e(n_, 0);
    e[0] = 1;
    return e;
}

GfCore::Elem GfCore::x() const {
    Elem e(n_, 0);
    if (n_ == 1) {
        // K_r is the prime field; "x" is the root of the linear modulus.
        e[0] = subp(0, modulus_[0]);
    } else {
        e[1] = 1;
    }
    return e;
}

GfCore::Elem GfCore::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    Elem e(n_, 0);
    e[0] = static_cast<unsigned>(m);
    return e;
}

bool GfCore::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

GfCore::Elem GfCore::add(const Elem& a, const Elem& b) const {
    Elem r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = addp(a[i], b[i]);
    return r;
}

GfCore::Elem GfCore::sub(const Elem& a, const Elem& b) const {
    Elem r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = subp(a[i], b[i]);
    return r;
}

GfCore::Elem GfCore::neg(const Elem& a) const {
    Elem r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = subp(0, a[i]);
    return r;
}

GfCore::Elem GfCore::mul(const Elem& a, const Elem& b) const {
    std::vector<unsigned> conv(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] = addp(conv[i + j], mulp(a[i], b[j]));
        }
    }
    Elem r(n_, 0);
    for (unsigned i = 0; i < n_; ++i) r[i] = conv[i];
    for (unsigned k = n_; k < 2 * n_ - 1; ++k) {
        unsigned c = conv[k];
        if (c == 0) continue;
        const Elem& red = xpow_[k - n_];
        for (unsigned i = 0; i < n_; ++i) r[i] = addp(r[i], mulp(c, red[i]));
    }
    return r;
}

unsigned GfCore::invp(unsigned a) const {
    // Fermat
    unsigned r = 1;
    unsigned e = p_ - 2;
    unsigned b = a % p_;
    while (e) {
        if (e & 1) r = mulp(r, b);
        b = mulp(b, b);
        e >>= 1;
    }
    return r;
}

GfCore::Elem GfCore::inv(const Elem& a) const {
    if (is_zero(a)) throw DivisionByZero();
    // extended Euclid in F_p[x] on (a, modulus)
    std::vector<unsigned> r0 = modulus_;
    std::vector<unsigned> r1(a.begin(), a.end());
    std::vector<unsigned> s0(1, 0), s1(1, 1);
    auto deg = [](const std::vector<unsigned>& v) -> int {
        for (size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    };
    auto trim = [&](std::vector<unsigned>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(r1);
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<unsigned> rem = r0;
        std::vector<unsigned> q(std::max<size_t>(1, rem.size()), 0);
        int d1 = deg(r1);
        unsigned lc1inv = invp(r1[d1]);
        while (deg(rem) >= d1) {
            int dr = deg(rem);
            unsigned f = mulp(rem[dr], lc1inv);
            q[dr - d1] = addp(q[dr - d1], f);
            for (int i = 0; i <= d1; ++i)
                rem[dr - d1 + i] = subp(rem[dr - d1 + i], mulp(f, r1[i]));
        }
        trim(rem);
        // s2 = s0 - q*s1
        std::vector<unsigned> qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = addp(qs[i + j], mulp(q[i], s1[j]));
        }
        std::vector<unsigned> s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            unsigned v0 = i < s0.size() ? s0[i] : 0;
            unsigned v1 = i < qs.size() ? qs[i] : 0;
            s2[i] = subp(v0, v1);
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        trim(r1);
    }
    if (deg(r1) != 0)
        throw InternalInvariantViolation("gcd with irreducible modulus must be constant");
    unsigned c = invp(r1[0]);
    Elem out(n_, 0);
    for (size_t i = 0; i < s1.size() && i < n_; ++i) out[i] = mulp(c, s1[i]);
    // s1 may exceed degree n-1 only transiently; reduce defensively
    if (s1.size() > n_) {
        Elem acc = out;
        for (size_t k = n_; k < s1.size(); ++k) {
            if (s1[k] == 0) continue;
            const Elem& red = xpow_[k - n_];
            for (unsigned i = 0; i < n_; ++i) acc[i] = addp(acc[i], mulp(mulp(c, s1[k]), red[i]));
        }
        out = acc;
    }
    return out;
}

GfCore::Elem GfCore::pow(Elem a, unsigned long long e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

unsigned GfCore::min_level(const Elem& a) const {
    for (unsigned i = 0; i < levels(); ++i) {
        Elem b = a;
        for (unsigned k = 0; k < degrees_[i]; ++k) b = frobenius(b);
        if (b == a) return i;
    }
    throw InternalInvariantViolation("element not fixed by the top-level Frobenius");
}

void GfCore::check_modulus() const {
    // Irreducible (Rabin): x^(p^n) == x mod m and gcd-free at proper prime
    // index divisors; primitive: x has multiplicative order p^n - 1.
    Elem xe = x();
    if (n_ > 1) {
        Elem f = xe;
        for (unsigned k = 0; k < n_; ++k) f = frobenius(f);
        if (f != xe)
            throw InternalInvariantViolation("stored modulus is not irreducible");
        for (unsigned long long q : prime_factors(n_)) {
            Elem g = xe;
            for (unsigned k = 0; k < n_ / q; ++k) g = frobenius(g);
            if (g == xe)
                throw InternalInvariantViolation("stored modulus has a proper subfield root");
        }
    }
    unsigned long long order = ipow(p_, n_) - 1;
    if (pow(xe, order) != one())
        throw InternalInvariantViolation("stored modulus root is not a unit of full order");
    for (unsigned long long q : prime_factors(order)) {
        if (pow(xe, order / q) == one())
            throw InternalInvariantViolation("stored modulus is not primitive");
    }
}

void GfCore::build_subfield_data() {
    unsigned long long full = ipow(p_, n_) - 1;
    Elem xe = x();
    level_basis_.resize(levels());
    mixed_basis_inv_.resize(levels());
    for (unsigned i = 0; i < levels(); ++i) {
        unsigned d = degrees_[i];
        unsigned long long sub = ipow(p_, d) - 1;
        Elem zeta = pow(xe, full / sub);
        auto& basis = level_basis_[i];
        basis.clear();
        Elem cur = one();
        for (unsigned s = 0; s < d; ++s) {
            basis.push_back(cur);
            cur = mul(cur, zeta);
        }
        // mixed basis: zeta^s * x^j, column index j*d + s
        unsigned k = n_ / d;
        std::vector<std::vector<unsigned>> m(n_, std::vector<unsigned>(2 * n_, 0));
        for (unsigned j = 0; j < k; ++j) {
            Elem xj = pow(xe, j);
            for (unsigned s = 0; s < d; ++s) {
                Elem col = mul(basis[s], xj);
                for (unsigned row = 0; row < n_; ++row) m[row][j * d + s] = col[row];
            }
        }
        for (unsigned row = 0; row < n_; ++row) m[row][n_ + row] = 1;
        // Gauss-Jordan over F_p
        unsigned rank = 0;
        for (unsigned col = 0; col < n_ && rank < n_; ++col) {
            unsigned piv = rank;
            while (piv < n_ && m[piv][col] == 0) ++piv;
            if (piv == n_) continue;
            std::swap(m[piv], m[rank]);
            unsigned inv = invp(m[rank][col]);
            for (unsigned j2 = 0; j2 < 2 * n_; ++j2) m[rank][j2] = mulp(m[rank][j2], inv);
            for (unsigned r2 = 0; r2 < n_; ++r2) {
                if (r2 == rank || m[r2][col] == 0) continue;
                unsigned f = m[r2][col];
                for (unsigned j2 = 0; j2 < 2 * n_; ++j2)
                    m[r2][j2] = subp(m[r2][j2], mulp(f, m[rank][j2]));
            }
            ++rank;
        }
        if (rank != n_)
            throw InternalInvariantViolation("subfield mixed basis is singular");
        auto& inv = mixed_basis_inv_[i];
        inv.clear();
        for (unsigned row = 0; row < n_; ++row)
            inv.emplace_back(m[row].begin() + n_, m[row].end());
    }
}

std::vector<GfCore::Elem> GfCore::subfield_coords(const Elem& a, unsigned i) const {
    unsigned d = degrees_.at(i);
    unsigned k = n_ / d;
    const auto& inv = mixed_basis_inv_.at(i);
    std::vector<unsigned> w(n_, 0);
    for (unsigned row = 0; row < n_; ++row) {
        std::uint64_t acc = 0;
        for (unsigned col = 0; col < n_; ++col)
            acc += static_cast<std::uint64_t>(inv[row][col]) * a[col];
        w[row] = static_cast<unsigned>(acc % p_);
    }
    const auto& basis = level_basis_[i];
    std::vector<Elem> coords(k, zero());
    for (unsigned j = 0; j < k; ++j) {
        Elem c = zero();
        for (unsigned s = 0; s < d; ++s) {
            if (w[j * d + s] == 0) continue;
            Elem t = basis[s];
            for (auto& coord : t) coord = mulp(coord, w[j * d + s]);
            c = add(c, t);
        }
        coords[j] = c;
    }
    return coords;
}

std::string GfCore::to_string(const Elem& a) const {
    if (is_zero(a)) return "0";
    std::string out;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        std::string term;
        if (i == 0) {
            term = std::to_string(a[i]);
        } else {
            if (a[i] != 1) term = std::to_string(a[i]) + "*";
            term += "w";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace mqa
