#include "mqa/tower.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include <nlohmann/json.hpp>

#include "mqa/errors.hpp"

namespace mqa {

namespace detail {
struct TowerCore {
    TowerSpec spec;
    std::unique_ptr<GfCore> gf;  // finite-field only
    unsigned nvars = 0;          // rational-function: r; constant: 0
    std::vector<std::string> var_names;
};
}  // namespace detail

using detail::TowerCore;

TowerSpec TowerSpec::finite_field(unsigned p, std::vector<unsigned> degrees) {
    TowerSpec s;
    s.kind = TowerKind::finite_field;
    s.p = p;
    s.degrees = std::move(degrees);
    return s;
}

TowerSpec TowerSpec::rational_function(unsigned levels) {
    TowerSpec s;
    s.kind = TowerKind::rational_function;
    s.levels = levels;
    return s;
}

TowerSpec TowerSpec::constants(unsigned levels) {
    TowerSpec s;
    s.kind = TowerKind::constant;
    s.levels = levels;
    return s;
}

TowerSpec TowerSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("tower spec needs a \"kind\" string");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite-field") {
        if (!j.contains("p") || !j.contains("degrees"))
            throw ParseError("finite-field tower needs \"p\" and \"degrees\"");
        return finite_field(j.at("p").get<unsigned>(),
                            j.at("degrees").get<std::vector<unsigned>>());
    }
    if (kind == "rational-function") {
        if (!j.contains("levels")) throw ParseError("rational-function tower needs \"levels\"");
        return rational_function(j.at("levels").get<unsigned>());
    }
    if (kind == "constant") {
        if (!j.contains("levels")) throw ParseError("constant tower needs \"levels\"");
        return constants(j.at("levels").get<unsigned>());
    }
    throw ParseError("unknown tower kind: " + kind);
}

nlohmann::json TowerSpec::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case TowerKind::finite_field:
            j["kind"] = "finite-field";
            j["p"] = p;
            j["degrees"] = degrees;
            break;
        case TowerKind::rational_function:
            j["kind"] = "rational-function";
            j["levels"] = levels;
            break;
        case TowerKind::constant:
            j["kind"] = "constant";
            j["levels"] = levels;
            break;
    }
    return j;
}

Tower::Tower(const TowerSpec& spec) {
    auto core = std::make_shared<TowerCore>();
    core->spec = spec;
    switch (spec.kind) {
        case TowerKind::finite_field:
            core->gf = std::make_unique<GfCore>(spec.p, spec.degrees);
            break;
        case TowerKind::rational_function:
            core->nvars = spec.levels;
            for (unsigned i = 1; i <= spec.levels; ++i)
                core->var_names.push_back("t" + std::to_string(i));
            break;
        case TowerKind::constant:
            core->nvars = 0;
            break;
    }
    core_ = std::move(core);
    lo_ = 0;
    hi_ = spec.r();
}

Tower::Tower(std::shared_ptr<const TowerCore> core, unsigned lo, unsigned hi)
    : core_(std::move(core)), lo_(lo), hi_(hi) {}

TowerKind Tower::kind() const { return core_->spec.kind; }
const TowerSpec& Tower::spec() const { return core_->spec; }

Tower Tower::window(unsigned lo, unsigned hi) const {
    if (lo > hi || hi > core_->spec.r())
        throw ValidationError("tower window out of range");
    return Tower(core_, lo, hi);
}

bool Tower::same_tower(const Tower& o) const {
    return core_->spec == o.core_->spec && lo_ == o.lo_ && hi_ == o.hi_;
}

namespace {

unsigned physical_level_of(const TowerCore& core, const GfCore::Elem& ff, const Fraction& rf) {
    switch (core.spec.kind) {
        case TowerKind::finite_field:
            return core.gf->min_level(ff);
        case TowerKind::rational_function:
            return rf.max_var();
        case TowerKind::constant:
            return 0;
    }
    return 0;
}

}  // namespace

bool TowerElement::is_zero() const {
    if (tower_.kind() == TowerKind::finite_field) return tower_.core_->gf->is_zero(ff_);
    return rf_.is_zero();
}

unsigned TowerElement::physical_level() const {
    if (!cached_level_) cached_level_ = physical_level_of(*tower_.core_, ff_, rf_);
    return *cached_level_;
}

unsigned TowerElement::level() const {
    unsigned phys = physical_level();
    return phys <= tower_.lo_ ? 0 : phys - tower_.lo_;
}

bool TowerElement::member_at(unsigned level) const {
    return physical_level() <= tower_.lo_ + level;
}

void TowerElement::check_same(const TowerElement& o) const {
    if (!tower_.same_tower(o.tower_))
        throw ValidationError("tower element arithmetic across different towers");
}

TowerElement Tower::zero() const {
    TowerElement e;
    e.tower_ = *this;
    if (kind() == TowerKind::finite_field)
        e.ff_ = core_->gf->zero();
    else
        e.rf_ = Fraction(core_->nvars);
    return e;
}

TowerElement Tower::one() const { return from_int(1); }

TowerElement Tower::from_int(long long v) const {
    TowerElement e;
    e.tower_ = *this;
    if (kind() == TowerKind::finite_field) {
        e.ff_ = core_->gf->from_int(v);
    } else {
        e.rf_ = Fraction::constant(core_->nvars, mpq_class(static_cast<long>(v)));
    }
    return e;
}

TowerElement Tower::generator() const {
    if (kind() != TowerKind::finite_field)
        throw UnsupportedTower("generator w exists only for finite-field towers");
    TowerElement e;
    e.tower_ = *this;
    e.ff_ = core_->gf->x();
    return e;
}

TowerElement Tower::indeterminate(unsigned j) const {
    if (kind() != TowerKind::rational_function)
        throw UnsupportedTower("indeterminates exist only for rational-function towers");
    if (j < 1 || j > core_->nvars) throw ValidationError("indeterminate index out of range");
    TowerElement e;
    e.tower_ = *this;
    e.rf_ = Fraction::from_poly(Poly::variable(core_->nvars, j));
    return e;
}

TowerElement Tower::adopt(const TowerElement& e) const {
    if (e.tower_.core_->spec != core_->spec)
        throw ValidationError("adopt requires the same underlying field chain");
    unsigned phys = e.physical_level();
    if (phys > hi_)
        throw LevelViolation("tower window adoption", phys, hi_);
    TowerElement out = e;
    out.tower_ = *this;
    return out;
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    check_same(o);
    TowerElement r;
    r.tower_ = tower_;
    if (tower_.kind() == TowerKind::finite_field)
        r.ff_ = tower_.core_->gf->add(ff_, o.ff_);
    else
        r.rf_ = rf_ + o.rf_;
    return r;
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
    check_same(o);
    TowerElement r;
    r.tower_ = tower_;
    if (tower_.kind() == TowerKind::finite_field)
        r.ff_ = tower_.core_->gf->sub(ff_, o.ff_);
    else
        r.rf_ = rf_ - o.rf_;
    return r;
}

TowerElement TowerElement::operator-() const {
    TowerElement r;
    r.tower_ = tower_;
    if (tower_.kind() == TowerKind::finite_field)
        r.ff_ = tower_.core_->gf->neg(ff_);
    else
        r.rf_ = -rf_;
    return r;
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
    check_same(o);
    TowerElement r;
    r.tower_ = tower_;
    if (tower_.kind() == TowerKind::finite_field)
        r.ff_ = tower_.core_->gf->mul(ff_, o.ff_);
    else
        r.rf_ = rf_ * o.rf_;
    return r;
}

TowerElement TowerElement::operator/(const TowerElement& o) const {
    check_same(o);
    TowerElement r;
    r.tower_ = tower_;
    if (tower_.kind() == TowerKind::finite_field) {
        r.ff_ = tower_.core_->gf->mul(ff_, tower_.core_->gf->inv(o.ff_));
    } else {
        r.rf_ = rf_ / o.rf_;
    }
    return r;
}

TowerElement TowerElement::pow(unsigned e) const {
    TowerElement r = tower_.one();
    TowerElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool TowerElement::operator==(const TowerElement& o) const {
    if (!tower_.same_tower(o.tower_)) return false;
    if (tower_.kind() == TowerKind::finite_field) return ff_ == o.ff_;
    return rf_ == o.rf_;
}

std::string TowerElement::str() const {
    if (tower_.kind() == TowerKind::finite_field)
        return tower_.core_->gf->to_string(ff_);
    return rf_.str(tower_.core_->var_names);
}

// --- coefficient literal parser -------------------------------------------
//
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := atom ('^' uint)?
// atom   := uint | 'w' | 't<k>' | '(' expr ')' | '-' atom

namespace {

struct CoeffParser {
    const Tower& tower;
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("coefficient parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    TowerElement parse_expr() {
        TowerElement v = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                v = v + parse_term();
            } else if (eat('-')) {
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    TowerElement parse_term() {
        TowerElement v = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                v = v * parse_factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    TowerElement parse_factor() {
        TowerElement v = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("exponent must be a nonnegative integer");
            unsigned e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<unsigned>(s[pos] - '0');
                ++pos;
            }
            v = v.pow(e);
        }
        return v;
    }

    TowerElement parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            TowerElement v = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (c == '-') {
            ++pos;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            return tower.from_int(v);
        }
        if (c == 'w') {
            ++pos;
            return tower.generator();
        }
        if (c == 't') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("indeterminate needs an index, e.g. t1");
            unsigned j = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                j = j * 10 + static_cast<unsigned>(s[pos] - '0');
                ++pos;
            }
            return tower.indeterminate(j);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

TowerElement Tower::parse(std::string_view text) const {
    CoeffParser p{*this, text};
    TowerElement v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing characters in coefficient literal");
    if (v.physical_level() > hi_)
        throw LevelViolation("coefficient literal", v.physical_level(), hi_);
    return v;
}

bool Tower::linear_independent_over(std::span<const TowerElement> elems, unsigned level) const {
    // Convention: the empty family is independent.
    if (elems.empty()) return true;
    for (const auto& e : elems) {
        if (!e.tower().same_tower(*this))
            throw ValidationError("independence test across different towers");
        if (e.is_zero()) return false;
    }
    unsigned phys = lo_ + level;
    if (phys > hi_) throw ValidationError("independence level out of range");

    if (kind() == TowerKind::finite_field) {
        const GfCore& gf = *core_->gf;
        unsigned d = gf.degree(phys);
        unsigned k = gf.n() / d;
        size_t m = elems.size();
        if (m > k) return false;
        // Gaussian elimination over K_i on the m x k coordinate matrix;
        // entries live in the subfield, so K_r arithmetic stays inside it.
        std::vector<std::vector<GfCore::Elem>> rows;
        rows.reserve(m);
        for (const auto& e : elems) rows.push_back(gf.subfield_coords(e.ff_, phys));
        size_t rank = 0;
        for (unsigned col = 0; col < k && rank < m; ++col) {
            size_t piv = rank;
            while (piv < m && gf.is_zero(rows[piv][col])) ++piv;
            if (piv == m) continue;
            std::swap(rows[piv], rows[rank]);
            GfCore::Elem inv = gf.inv(rows[rank][col]);
            for (unsigned j = 0; j < k; ++j) rows[rank][j] = gf.mul(rows[rank][j], inv);
            for (size_t r2 = 0; r2 < m; ++r2) {
                if (r2 == rank || gf.is_zero(rows[r2][col])) continue;
                GfCore::Elem f = rows[r2][col];
                for (unsigned j = 0; j < k; ++j)
                    rows[r2][j] = gf.sub(rows[r2][j], gf.mul(f, rows[rank][j]));
            }
            ++rank;
        }
        return rank == m;
    }

    // Rational-function (constant towers have nvars 0, the same code path):
    // clear denominators, then group monomials by their part in the variables
    // above `level`; the coefficient matrix over K_level must have full rank.
    unsigned nv = core_->nvars;
    Poly common = Poly::constant(nv, 1);
    for (const auto& e : elems) common = common * e.rf_.den();
    std::vector<Poly> cleared;
    cleared.reserve(elems.size());
    for (const auto& e : elems)
        cleared.push_back(div_exact(e.rf_.num() * common, e.rf_.den()));

    // Columns: distinct monomials in t_{phys+1}..t_r.
    std::map<Monomial, size_t> columns;
    auto upper_part = [&](const Monomial& mo) {
        Monomial u(nv, 0);
        for (unsigned i = phys; i < nv; ++i) u[i] = mo[i];
        return u;
    };
    for (const auto& p : cleared)
        for (const auto& [mo, c] : p.terms()) {
            Monomial u = upper_part(mo);
            columns.emplace(u, columns.size());
        }
    size_t m = elems.size();
    size_t ncols = std::max<size_t>(columns.size(), 1);
    std::vector<std::vector<Fraction>> rows(m, std::vector<Fraction>(ncols, Fraction(nv)));
    for (size_t i = 0; i < m; ++i) {
        for (const auto& [mo, c] : cleared[i].terms()) {
            Monomial u = upper_part(mo);
            Monomial low = mo;
            for (unsigned v2 = phys; v2 < nv; ++v2) low[v2] = 0;
            Poly t(nv);
            t.add_term(low, c);
            size_t col = columns.at(u);
            rows[i][col] = rows[i][col] + Fraction::from_poly(t);
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && rows[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[rank]);
        Fraction inv = Fraction::constant(nv, 1) / rows[rank][col];
        for (size_t j = 0; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == rank || rows[r2][col].is_zero()) continue;
            Fraction f = rows[r2][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[r2][j] = rows[r2][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank == m;
}

unsigned Tower::dim_over_base(unsigned level) const {
    unsigned phys = lo_ + level;
    if (phys > hi_) throw ValidationError("level out of range");
    switch (kind()) {
        case TowerKind::finite_field:
            return core_->gf->degree(phys) / core_->gf->degree(lo_);
        case TowerKind::constant:
            return 1;
        case TowerKind::rational_function:
            throw UnsupportedTower("rational-function levels are infinite dimensional");
    }
    return 0;
}

unsigned Tower::prime_p() const {
    if (kind() != TowerKind::finite_field)
        throw UnsupportedTower("prime field data needs a finite-field tower");
    return core_->gf->p();
}

unsigned Tower::prime_dim() const {
    if (kind() != TowerKind::finite_field)
        throw UnsupportedTower("prime field data needs a finite-field tower");
    return core_->gf->n();
}

std::vector<TowerElement> Tower::prime_basis_of_level(unsigned level) const {
    if (kind() != TowerKind::finite_field)
        throw UnsupportedTower("prime field basis needs a finite-field tower");
    unsigned phys = lo_ + level;
    if (phys > hi_) throw ValidationError("level out of range");
    std::vector<TowerElement> out;
    for (const auto& b : core_->gf->level_basis(phys)) {
        TowerElement e;
        e.tower_ = *this;
        e.ff_ = b;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<unsigned> Tower::prime_coords(const TowerElement& e) const {
    if (kind() != TowerKind::finite_field)
        throw UnsupportedTower("prime field coordinates need a finite-field tower");
    return e.ff_;
}

TowerElement Tower::random_element(std::mt19937& rng, unsigned level) const {
    unsigned phys = std::min(lo_ + level, hi_);
    if (kind() == TowerKind::finite_field) {
        const GfCore& gf = *core_->gf;
        std::uniform_int_distribution<unsigned> coeff(0, gf.p() - 1);
        TowerElement acc = zero();
        for (const auto& b : gf.level_basis(phys)) {
            unsigned c = coeff(rng);
            if (c == 0) continue;
            TowerElement t;
            t.tower_ = *this;
            t.ff_ = b;
            acc = acc + t * from_int(c);
        }
        return acc;
    }
    if (kind() == TowerKind::constant) {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 4);
        TowerElement v = from_int(num(rng));
        return v / from_int(den(rng));
    }
    // rational-function: small polynomial in t1..t_phys, occasionally a fraction
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> nterms(1, 3);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    auto random_poly = [&]() {
        TowerElement acc = zero();
        unsigned k = nterms(rng);
        for (unsigned t = 0; t < k; ++t) {
            int c = coeff(rng);
            if (c == 0) continue;
            TowerElement term = from_int(c);
            for (unsigned j = 1; j <= phys; ++j) {
                unsigned e = expo(rng);
                if (e) term = term * indeterminate(j).pow(e);
            }
            acc = acc + term;
        }
        return acc;
    };
    TowerElement numer = random_poly();
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        TowerElement denom = random_poly();
        if (!denom.is_zero()) return numer / denom;
    }
    return numer;
}

}  // namespace mqa
