#include "mqa/mpa.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "mqa/errors.hpp"
#include "mqa/gf.hpp"

namespace mqa {

MpaElement::MpaElement(MixedDataPtr data,
                       const std::vector<std::pair<Path, TowerElement>>& terms)
    : data_(std::move(data)) {
    for (const auto& [p, c] : terms) {
        if (!c.tower().same_tower(data_->tower))
            throw ValidationError("coefficient tower differs from element tower");
        if (c.is_zero()) continue;
        unsigned required = data_->levels.level(p.dst());
        if (!c.member_at(required))
            throw LevelViolation(p.str(), c.level(), required);
        add_term(p, c);
    }
}

MpaElement MpaElement::zero(MixedDataPtr data) { return MpaElement(std::move(data)); }

MpaElement MpaElement::unit(MixedDataPtr data) {
    MpaElement e(data);
    for (int v = 0; v < data->quiver->num_vertices(); ++v)
        e.terms_.emplace(Path::trivial(data->quiver, v), data->tower.one());
    return e;
}

MpaElement MpaElement::vertex_idempotent(MixedDataPtr data, int v) {
    MpaElement e(data);
    e.terms_.emplace(Path::trivial(data->quiver, v), data->tower.one());
    return e;
}

MpaElement MpaElement::single(MixedDataPtr data, const Path& p, const TowerElement& c) {
    return MpaElement(std::move(data), {{p, c}});
}

TowerElement MpaElement::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? data_->tower.zero() : it->second;
}

void MpaElement::add_term(const Path& p, const TowerElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MpaElement MpaElement::operator+(const MpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("mixed path algebra addition across different data");
    MpaElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

MpaElement MpaElement::operator-(const MpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("mixed path algebra subtraction across different data");
    MpaElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

MpaElement MpaElement::operator-() const {
    MpaElement r(data_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

MpaElement MpaElement::operator*(const MpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("mixed path algebra product across different data");
    MpaElement r(data_);
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : o.terms_) {
            auto p = pa.concat(pb);
            if (!p) continue;
            r.add_term(*p, ca * cb);
        }
    }
    return r;
}

MpaElement MpaElement::scaled(const TowerElement& c) const {
    MpaElement r(data_);
    if (c.is_zero()) return r;
    for (const auto& [p, co] : terms_) r.add_term(p, co * c);
    return r;
}

bool MpaElement::operator==(const MpaElement& o) const {
    return *data_ == *o.data_ && terms_ == o.terms_;
}

std::vector<TowerElement> MpaElement::augmentation() const {
    std::vector<TowerElement> out(data_->quiver->num_vertices(), data_->tower.zero());
    for (const auto& [p, c] : terms_) {
        if (p.is_trivial()) out[p.base_vertex()] = c;
    }
    return out;
}

bool MpaElement::epsilon_zero() const {
    return terms_.empty() || !terms_.begin()->first.is_trivial();
}

void MpaElement::validate() const {
    for (const auto& [p, c] : terms_) {
        if (c.is_zero())
            throw InternalInvariantViolation("stored zero coefficient");
        unsigned required = data_->levels.level(p.dst());
        if (!c.member_at(required))
            throw LevelViolation(p.str(), c.level(), required);
    }
}

bool mpa_accepts(const MixedDataPtr& data,
                 const std::vector<std::pair<Path, TowerElement>>& terms) {
    for (const auto& [p, c] : terms) {
        if (c.is_zero()) continue;
        if (!c.member_at(data->levels.level(p.dst()))) return false;
    }
    return true;
}

// --- text format -------------------------------------------------------------

std::string MpaElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ") * " + p.str();
    }
    return out;
}

namespace {

struct PathAtom {
    bool trivial = false;
    bool ghost = false;
    std::string id;
};

struct ElementParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("element parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    std::string parse_id() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected an identifier");
        return std::string(s.substr(start, pos - start));
    }

    std::string parse_paren_coeff() {
        // '(' already eaten; scan to the matching ')'
        int depth = 1;
        size_t start = pos;
        while (pos < s.size() && depth > 0) {
            if (s[pos] == '(') ++depth;
            if (s[pos] == ')') --depth;
            ++pos;
        }
        if (depth != 0) fail("unbalanced parentheses in coefficient");
        return std::string(s.substr(start, pos - start - 1));
    }

    std::vector<PathAtom> parse_path() {
        std::vector<PathAtom> atoms;
        while (true) {
            PathAtom a;
            if (eat('@')) {
                a.trivial = true;
            } else if (eat('~')) {
                a.ghost = true;
            }
            a.id = parse_id();
            atoms.push_back(std::move(a));
            if (!eat('.')) break;
        }
        return atoms;
    }

    // term := '(' coeff ')' '*' path | path
    std::pair<std::string, std::vector<PathAtom>> parse_term() {
        skip_ws();
        std::string coeff = "1";
        if (eat('(')) {
            coeff = parse_paren_coeff();
            if (!eat('*')) fail("expected '*' after coefficient");
        }
        return {coeff, parse_path()};
    }
};

}  // namespace

MpaElement MpaElement::parse(MixedDataPtr data, std::string_view text) {
    ElementParser p{text};
    p.skip_ws();
    std::vector<std::pair<Path, TowerElement>> terms;
    if (p.pos < text.size() && text[p.pos] == '0') {
        size_t save = p.pos;
        ++p.pos;
        p.skip_ws();
        if (p.pos == text.size()) return MpaElement::zero(data);
        p.pos = save;
    }
    while (true) {
        auto [coeff_text, atoms] = p.parse_term();
        TowerElement c = data->tower.parse(coeff_text);
        if (atoms.size() == 1 && atoms[0].trivial) {
            terms.emplace_back(Path::trivial(data->quiver, data->quiver->vertex_index(atoms[0].id)),
                               c);
        } else {
            std::vector<int> edges;
            for (const auto& a : atoms) {
                if (a.trivial) p.fail("trivial path atom must stand alone");
                if (a.ghost) p.fail("ghost edges are not valid in a path algebra element");
                edges.push_back(data->quiver->edge_index(a.id));
            }
            terms.emplace_back(Path::of_edges(data->quiver, std::move(edges)), c);
        }
        p.skip_ws();
        if (p.pos == text.size()) break;
        if (!p.eat('+')) p.fail("expected '+' between terms");
    }
    return MpaElement(data, terms);
}

// --- membership oracle -------------------------------------------------------

namespace {

// Coefficient span admitted at one path: generators plus their F_p row space.
struct CoeffSpan {
    std::vector<TowerElement> generators;
    FpSpan span;
    explicit CoeffSpan(unsigned p) : span(p) {}
};

}  // namespace

bool oracle_membership(const MixedDataPtr& data,
                       const std::vector<std::pair<Path, TowerElement>>& candidate) {
    const Tower& tower = data->tower;
    if (tower.kind() != TowerKind::finite_field)
        throw UnsupportedTower("the membership oracle needs a finite-field tower");
    const unsigned p = tower.prime_p();
    const unsigned r = data->r();
    unsigned maxlen = 0;
    for (const auto& [path, c] : candidate) maxlen = std::max(maxlen, path.length());

    std::vector<Path> paths = all_paths(data->quiver, maxlen);
    using SpanMap = std::map<Path, CoeffSpan, PathLess>;

    auto insert_gen = [&](SpanMap& m, const Path& path, const TowerElement& g) {
        auto it = m.find(path);
        if (it == m.end()) it = m.emplace(path, CoeffSpan(p)).first;
        if (it->second.span.insert(tower.prime_coords(g)))
            it->second.generators.push_back(g);
    };

    // Stage 0: P_{K_r}(E_{H_0}) — full top field on every path inside H_0.
    SpanMap cur;
    {
        const VertexSet& h0 = data->chain.set(0);
        auto basis = tower.prime_basis_of_level(r);
        for (const auto& path : paths) {
            if (!h0.contains(path.src())) continue;
            for (const auto& b : basis) insert_gen(cur, path, b);
        }
    }

    // Stage i: P_{K_{r-i}}(E_{H_i}) + P_{K_{r-i}}(E_{H_i}) p_{H_{i-1}} P_{i-1}.
    for (unsigned i = 1; i <= r; ++i) {
        SpanMap next;
        const VertexSet& hi = data->chain.set(i);
        auto basis = tower.prime_basis_of_level(r - i);
        for (const auto& path : paths) {
            if (!hi.contains(path.src())) continue;
            for (const auto& b : basis) insert_gen(next, path, b);
        }
        for (const auto& [gamma, vspan] : cur) {
            for (const auto& beta : paths) {
                if (!hi.contains(beta.src())) continue;
                if (beta.dst() != gamma.src()) continue;
                if (beta.length() + gamma.length() > maxlen) continue;
                auto alpha = beta.concat(gamma);
                if (!alpha) continue;
                for (const auto& b : basis) {
                    for (const auto& g : vspan.generators)
                        insert_gen(next, *alpha, b * g);
                }
            }
        }
        cur = std::move(next);
    }

    for (const auto& [path, c] : candidate) {
        if (c.is_zero()) continue;
        auto it = cur.find(path);
        if (it == cur.end()) return false;
        if (!it->second.span.contains(tower.prime_coords(c))) return false;
    }
    return true;
}

unsigned graded_dimension(const MixedDataPtr& data, unsigned n,
                          std::optional<unsigned> stage) {
    const Tower& tower = data->tower;
    if (tower.kind() == TowerKind::rational_function)
        throw UnsupportedTower("graded dimension needs finite field dimensions");
    unsigned i = stage.value_or(data->r());
    if (i > data->r()) throw ValidationError("stage index out of range");
    const VertexSet& hi = data->chain.set(i);
    unsigned total = 0;
    for (const auto& path : all_paths(data->quiver, n)) {
        if (path.length() != n) continue;
        if (!hi.contains(path.src())) continue;
        total += tower.dim_over_base(data->levels.level(path.dst()));
    }
    return total;
}

}  // namespace mqa
