#include "mqa/leavitt.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "mqa/errors.hpp"

namespace mqa {

std::string LpaMonomial::str() const {
    if (real.is_trivial() && ghost.is_trivial()) return real.str();
    std::string out;
    if (!real.is_trivial()) out = real.str();
    if (!ghost.is_trivial()) {
        const auto& q = *ghost.quiver();
        const auto& edges = ghost.edges();
        for (size_t i = edges.size(); i-- > 0;) {
            if (!out.empty()) out += ".";
            out += "~" + q.edge(edges[i]).id;
        }
    }
    return out;
}

SpecialEdgeChoice SpecialEdgeChoice::least(const MixedDataPtr& data) {
    const Quiver& q = *data->quiver;
    SpecialEdgeChoice c;
    c.special_.assign(q.num_vertices(), -1);
    for (int v = 0; v < q.num_vertices(); ++v) {
        unsigned iv = data->chain.entry_index(v);
        int best = -1;
        for (int e : q.out_edges(v)) {
            if (data->chain.entry_index(q.edge(e).dst) != iv) continue;
            if (best < 0 || q.edge(e).id < q.edge(best).id) best = e;
        }
        if (best < 0 && !q.is_sink(v))
            throw InternalInvariantViolation(
                "no level-minimal out-edge at an emitter; chain member not saturated");
        c.special_[v] = best;
    }
    return c;
}

SpecialEdgeChoice SpecialEdgeChoice::explicit_map(
    const MixedDataPtr& data, const std::map<std::string, std::string>& by_vertex) {
    const Quiver& q = *data->quiver;
    SpecialEdgeChoice c = least(data);
    for (const auto& [vid, eid] : by_vertex) {
        int v = q.vertex_index(vid);
        int e = q.edge_index(eid);
        if (q.edge(e).src != v)
            throw ValidationError("special edge " + eid + " does not start at " + vid);
        if (data->chain.entry_index(q.edge(e).dst) != data->chain.entry_index(v))
            throw ValidationError("special edge " + eid +
                                  " is not level-minimal; rewriting at it would break "
                                  "coefficient levels");
        c.special_[v] = e;
    }
    return c;
}

LpaElement::LpaElement(MixedDataPtr data,
                       const std::vector<std::pair<LpaMonomial, TowerElement>>& terms)
    : data_(std::move(data)) {
    for (const auto& [m, c] : terms) {
        if (m.real.dst() != m.ghost.dst())
            throw ValidationError("monomial midpoint mismatch: " + m.str());
        if (!c.tower().same_tower(data_->tower))
            throw ValidationError("coefficient tower differs from element tower");
        if (c.is_zero()) continue;
        unsigned required = data_->levels.level(m.midpoint());
        if (!c.member_at(required)) throw LevelViolation(m.str(), c.level(), required);
        add_term(m, c);
    }
}

LpaElement LpaElement::zero(MixedDataPtr data) { return LpaElement(std::move(data)); }

LpaElement LpaElement::unit(MixedDataPtr data) {
    LpaElement e(data);
    for (int v = 0; v < data->quiver->num_vertices(); ++v) {
        Path t = Path::trivial(data->quiver, v);
        e.terms_.emplace(LpaMonomial{t, t}, data->tower.one());
    }
    return e;
}

LpaElement LpaElement::vertex_idempotent(MixedDataPtr data, int v) {
    LpaElement e(data);
    Path t = Path::trivial(data->quiver, v);
    e.terms_.emplace(LpaMonomial{t, t}, data->tower.one());
    return e;
}

LpaElement LpaElement::real_edge(MixedDataPtr data, int e) {
    Path re = Path::of_edges(data->quiver, {e});
    Path gh = Path::trivial(data->quiver, data->quiver->edge(e).dst);
    LpaElement x(data);
    x.terms_.emplace(LpaMonomial{re, gh}, data->tower.one());
    return x;
}

LpaElement LpaElement::ghost_edge(MixedDataPtr data, int e) {
    Path gh = Path::of_edges(data->quiver, {e});
    Path re = Path::trivial(data->quiver, data->quiver->edge(e).dst);
    LpaElement x(data);
    x.terms_.emplace(LpaMonomial{re, gh}, data->tower.one());
    return x;
}

LpaElement LpaElement::from_mpa(const MpaElement& a) {
    LpaElement x(a.data());
    for (const auto& [p, c] : a.terms()) {
        Path gh = Path::trivial(a.data()->quiver, p.dst());
        x.terms_.emplace(LpaMonomial{p, gh}, c);
    }
    return x;
}

LpaElement LpaElement::single(MixedDataPtr data, const LpaMonomial& m, const TowerElement& c) {
    return LpaElement(std::move(data), {{m, c}});
}

void LpaElement::add_term(const LpaMonomial& m, const TowerElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LpaElement LpaElement::operator+(const LpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("Leavitt addition across different data");
    LpaElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LpaElement LpaElement::operator-(const LpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("Leavitt subtraction across different data");
    LpaElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LpaElement LpaElement::operator-() const {
    LpaElement r(data_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LpaElement LpaElement::operator*(const LpaElement& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("Leavitt product across different data");
    LpaElement r(data_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            // (a.real a.ghost-bar)(b.real b.ghost-bar): contract a.ghost-bar
            // against b.real edge by edge via (CK1).
            if (auto gamma = mb.real.prefix_quotient(ma.ghost)) {
                auto real = ma.real.concat(*gamma);
                assert(real);
                r.add_term(LpaMonomial{*real, mb.ghost}, ca * cb);
            } else if (auto delta = ma.ghost.prefix_quotient(mb.real)) {
                auto ghost = mb.ghost.concat(*delta);
                assert(ghost);
                r.add_term(LpaMonomial{ma.real, *ghost}, ca * cb);
            }
        }
    }
    return r;
}

LpaElement LpaElement::scaled(const TowerElement& c) const {
    LpaElement r(data_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.add_term(m, co * c);
    return r;
}

bool LpaElement::operator==(const LpaElement& o) const {
    if (!(*data_ == *o.data_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first.real == jt->first.real) || !(it->first.ghost == jt->first.ghost))
            return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

void LpaElement::validate() const {
    for (const auto& [m, c] : terms_) {
        if (c.is_zero()) throw InternalInvariantViolation("stored zero coefficient");
        if (m.real.dst() != m.ghost.dst())
            throw InternalInvariantViolation("monomial midpoint mismatch");
        unsigned required = data_->levels.level(m.midpoint());
        if (!c.member_at(required)) throw LevelViolation(m.str(), c.level(), required);
    }
}

std::string LpaElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ") * " + m.str();
    }
    return out;
}

// --- reduction ---------------------------------------------------------------

namespace {

// Redex: both paths end with the designated special edge of its source.
bool is_redex(const LpaMonomial& m, const SpecialEdgeChoice& choice, const Quiver& q) {
    if (m.real.is_trivial() || m.ghost.is_trivial()) return false;
    int ea = m.real.edges().back();
    int eb = m.ghost.edges().back();
    if (ea != eb) return false;
    return choice.special_edge(q.edge(ea).src) == ea;
}

Path drop_last(const Path& p) {
    const auto& q = p.quiver();
    if (p.length() == 1) return Path::trivial(q, q->edge(p.edges().front()).src);
    return Path::of_edges(q, std::vector<int>(p.edges().begin(), p.edges().end() - 1));
}

}  // namespace

LpaElement reduce_with_strategy(const LpaElement& a, const SpecialEdgeChoice& choice,
                                std::mt19937* rng) {
    const Quiver& q = *a.data()->quiver;
    LpaElement cur = a;
    while (true) {
        std::vector<LpaMonomial> redexes;
        for (const auto& [m, c] : cur.terms_) {
            if (is_redex(m, choice, q)) {
                redexes.push_back(m);
                if (!rng) break;  // deterministic: first redex in term order
            }
        }
        if (redexes.empty()) return cur;
        const LpaMonomial& m =
            rng ? redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(*rng)]
                : redexes.front();
        TowerElement c = cur.terms_.at(m);
        int ev = m.real.edges().back();
        int v = q.edge(ev).src;
        Path real = drop_last(m.real);
        Path ghost = drop_last(m.ghost);
        cur.add_term(m, -c);
        cur.add_term(LpaMonomial{real, ghost}, c);
        for (int e : q.out_edges(v)) {
            if (e == ev) continue;
            std::vector<int> re = real.edges();
            re.push_back(e);
            std::vector<int> ge = ghost.edges();
            ge.push_back(e);
            cur.add_term(LpaMonomial{Path::of_edges(a.data()->quiver, std::move(re)),
                                     Path::of_edges(a.data()->quiver, std::move(ge))},
                         -c);
        }
    }
}

LpaElement reduce(const LpaElement& a, const SpecialEdgeChoice& choice) {
    return reduce_with_strategy(a, choice, nullptr);
}

LpaElement reduce_randomized(const LpaElement& a, const SpecialEdgeChoice& choice,
                             std::mt19937& rng) {
    return reduce_with_strategy(a, choice, &rng);
}

// --- relation suite ----------------------------------------------------------

std::vector<RelationCheck> check_relations(const MixedDataPtr& data,
                                           const SpecialEdgeChoice& choice) {
    const Quiver& q = *data->quiver;
    std::vector<RelationCheck> out;
    auto pv = [&](int v) { return LpaElement::vertex_idempotent(data, v); };
    auto re = [&](int e) { return LpaElement::real_edge(data, e); };
    auto ge = [&](int e) { return LpaElement::ghost_edge(data, e); };
    auto eq = [&](const LpaElement& x, const LpaElement& y) {
        return reduce(x, choice) == reduce(y, choice);
    };

    for (int v = 0; v < q.num_vertices(); ++v) {
        for (int w = 0; w < q.num_vertices(); ++w) {
            LpaElement lhs = pv(v) * pv(w);
            LpaElement rhs = v == w ? pv(v) : LpaElement::zero(data);
            out.push_back({"V", "p_" + q.vertex_id(v) + " p_" + q.vertex_id(w), eq(lhs, rhs)});
        }
    }
    for (int e = 0; e < q.num_edges(); ++e) {
        const auto& ed = q.edge(e);
        bool left = eq(pv(ed.src) * re(e), re(e));
        bool right = eq(re(e) * pv(ed.dst), re(e));
        out.push_back({"E1", "edge " + ed.id, left && right});
    }
    for (int e = 0; e < q.num_edges(); ++e) {
        const auto& ed = q.edge(e);
        bool left = eq(pv(ed.dst) * ge(e), ge(e));
        bool right = eq(ge(e) * pv(ed.src), ge(e));
        out.push_back({"E2", "edge " + ed.id, left && right});
    }
    for (int e = 0; e < q.num_edges(); ++e) {
        for (int f = 0; f < q.num_edges(); ++f) {
            LpaElement lhs = ge(e) * re(f);
            LpaElement rhs = e == f ? pv(q.edge(e).dst) : LpaElement::zero(data);
            out.push_back(
                {"CK1", "~" + q.edge(e).id + " " + q.edge(f).id, eq(lhs, rhs)});
        }
    }
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (q.is_sink(v)) continue;
        LpaElement sum = LpaElement::zero(data);
        for (int e : q.out_edges(v)) sum = sum + re(e) * ge(e);
        out.push_back({"CK2", "vertex " + q.vertex_id(v), eq(sum, pv(v))});
    }
    return out;
}

bool verify_mu_inverse(const MixedDataPtr& data, int v, const SpecialEdgeChoice& choice) {
    const Quiver& q = *data->quiver;
    if (q.is_sink(v)) throw SinkVertex(q.vertex_id(v));
    auto re = [&](int e) { return LpaElement::real_edge(data, e); };
    auto ge = [&](int e) { return LpaElement::ghost_edge(data, e); };
    // nu . mu = id on Rv:   sum_i (x e_i) e_i-bar = x p_v, checked on x = p_v
    LpaElement sum = LpaElement::zero(data);
    for (int e : q.out_edges(v)) sum = sum + re(e) * ge(e);
    if (!(reduce(sum, choice) == reduce(LpaElement::vertex_idempotent(data, v), choice)))
        return false;
    // mu . nu = id on the target: e_i-bar e_j = delta_ij p_{r(e_i)}
    for (int ei : q.out_edges(v)) {
        for (int ej : q.out_edges(v)) {
            LpaElement lhs = ge(ei) * re(ej);
            LpaElement rhs = ei == ej ? LpaElement::vertex_idempotent(data, q.edge(ei).dst)
                                      : LpaElement::zero(data);
            if (!(reduce(lhs, choice) == reduce(rhs, choice))) return false;
        }
    }
    return true;
}

// --- quotient map ------------------------------------------------------------

LpaElement quotient_map_to(const LpaElement& a, const MixedDataPtr& target,
                           const VertexSet& h) {
    std::vector<std::pair<LpaMonomial, TowerElement>> terms;
    for (const auto& [m, c] : a.terms()) {
        if (h.contains(m.midpoint())) continue;  // monomial meets H
        Path real = rebase_path(m.real, target->quiver);
        Path ghost = rebase_path(m.ghost, target->quiver);
        terms.emplace_back(LpaMonomial{real, ghost}, target->tower.adopt(c));
    }
    return LpaElement(target, terms);
}

LpaElement quotient_map(const LpaElement& a, const VertexSet& h) {
    MixedDataPtr target = quotient_data(a.data(), h);
    return quotient_map_to(a, target, h);
}

// --- text format ---------------------------------------------------------------

LpaElement LpaElement::parse(MixedDataPtr data, std::string_view text) {
    // Reuse the mixed-path-algebra term scanner, then split real/ghost parts.
    // Grammar: element := '0' | term (' + ' term)*,
    //          term := '(' coeff ')' '*' path | path,
    //          path := '@v' | atom ('.' atom)* with atom := id | '~' id;
    //          ghost atoms must follow all real atoms.
    struct Scanner {
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
            throw ParseError("element parse error at offset " + std::to_string(pos) + ": " +
                             msg);
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
    };

    Scanner sc{text};
    sc.skip_ws();
    if (sc.pos < text.size() && text[sc.pos] == '0') {
        size_t save = sc.pos;
        ++sc.pos;
        sc.skip_ws();
        if (sc.pos == text.size()) return LpaElement::zero(data);
        sc.pos = save;
    }
    std::vector<std::pair<LpaMonomial, TowerElement>> terms;
    while (true) {
        sc.skip_ws();
        std::string coeff_text = "1";
        if (sc.eat('(')) {
            int depth = 1;
            size_t start = sc.pos;
            while (sc.pos < text.size() && depth > 0) {
                if (text[sc.pos] == '(') ++depth;
                if (text[sc.pos] == ')') --depth;
                ++sc.pos;
            }
            if (depth != 0) sc.fail("unbalanced parentheses in coefficient");
            coeff_text = std::string(text.substr(start, sc.pos - start - 1));
            if (!sc.eat('*')) sc.fail("expected '*' after coefficient");
        }
        TowerElement c = data->tower.parse(coeff_text);
        sc.skip_ws();
        if (sc.eat('@')) {
            std::string vid = sc.parse_id();
            Path t = Path::trivial(data->quiver, data->quiver->vertex_index(vid));
            terms.emplace_back(LpaMonomial{t, t}, c);
        } else {
            std::vector<int> real_edges;
            std::vector<int> ghost_written;
            bool in_ghost = false;
            while (true) {
                if (sc.eat('~')) {
                    in_ghost = true;
                    ghost_written.push_back(data->quiver->edge_index(sc.parse_id()));
                } else {
                    if (in_ghost) sc.fail("real edge after a ghost edge");
                    real_edges.push_back(data->quiver->edge_index(sc.parse_id()));
                }
                if (!sc.eat('.')) break;
            }
            std::vector<int> ghost_edges(ghost_written.rbegin(), ghost_written.rend());
            Path real = real_edges.empty()
                            ? Path::trivial(data->quiver,
                                            data->quiver->edge(ghost_edges.back()).dst)
                            : Path::of_edges(data->quiver, std::move(real_edges));
            Path ghost = ghost_edges.empty()
                             ? Path::trivial(data->quiver, real.dst())
                             : Path::of_edges(data->quiver, std::move(ghost_edges));
            terms.emplace_back(LpaMonomial{real, ghost}, c);
        }
        sc.skip_ws();
        if (sc.pos == text.size()) break;
        if (!sc.eat('+')) sc.fail("expected '+' between terms");
    }
    return LpaElement(data, terms);
}

}  // namespace mqa
