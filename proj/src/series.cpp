#include "mqa/series.hpp"

#include <algorithm>
#include <cassert>

#include "mqa/errors.hpp"

namespace mqa {

TruncatedSeries::TruncatedSeries(MixedDataPtr data, int order)
    : data_(std::move(data)), order_(order) {
    if (order_ < 0) throw ValidationError("series order must be nonnegative");
}

TruncatedSeries::TruncatedSeries(MixedDataPtr data, int order,
                                 const std::vector<std::pair<Path, TowerElement>>& terms)
    : TruncatedSeries(std::move(data), order) {
    for (const auto& [p, c] : terms) {
        if (!c.tower().same_tower(data_->tower))
            throw ValidationError("coefficient tower differs from series tower");
        if (static_cast<int>(p.length()) > order_) continue;
        add_term(p, c);
    }
}

TruncatedSeries TruncatedSeries::from_mpa(const MpaElement& a, int order) {
    TruncatedSeries s(a.data(), order);
    for (const auto& [p, c] : a.terms()) {
        if (static_cast<int>(p.length()) > order) continue;
        s.terms_.emplace(p, c);
    }
    return s;
}

TowerElement TruncatedSeries::coeff(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? data_->tower.zero() : it->second;
}

void TruncatedSeries::add_term(const Path& p, const TowerElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (!(*data_ == *o.data_)) throw ValidationError("series addition across different data");
    TruncatedSeries r(data_, std::min(order_, o.order_));
    for (const auto& [p, c] : terms_)
        if (static_cast<int>(p.length()) <= r.order_) r.add_term(p, c);
    for (const auto& [p, c] : o.terms_)
        if (static_cast<int>(p.length()) <= r.order_) r.add_term(p, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (!(*data_ == *o.data_))
        throw ValidationError("series subtraction across different data");
    TruncatedSeries r(data_, std::min(order_, o.order_));
    for (const auto& [p, c] : terms_)
        if (static_cast<int>(p.length()) <= r.order_) r.add_term(p, c);
    for (const auto& [p, c] : o.terms_)
        if (static_cast<int>(p.length()) <= r.order_) r.add_term(p, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (!(*data_ == *o.data_)) throw ValidationError("series product across different data");
    TruncatedSeries r(data_, std::min(order_, o.order_));
    for (const auto& [pa, ca] : terms_) {
        if (static_cast<int>(pa.length()) > r.order_) continue;
        for (const auto& [pb, cb] : o.terms_) {
            if (static_cast<int>(pa.length() + pb.length()) > r.order_) continue;
            auto p = pa.concat(pb);
            if (!p) continue;
            r.add_term(*p, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const TowerElement& c) const {
    TruncatedSeries r(data_, order_);
    if (c.is_zero()) return r;
    for (const auto& [p, co] : terms_) r.add_term(p, co * c);
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return *data_ == *o.data_ && order_ == o.order_ && terms_ == o.terms_;
}

bool TruncatedSeries::agree_up_to(const TruncatedSeries& o, int order) const {
    if (order > order_ || order > o.order_)
        throw ValidationError("comparison order exceeds a series truncation order");
    for (const auto& [p, c] : terms_) {
        if (static_cast<int>(p.length()) > order) continue;
        if (!(o.coeff(p) == c)) return false;
    }
    for (const auto& [p, c] : o.terms_) {
        if (static_cast<int>(p.length()) > order) continue;
        if (!(coeff(p) == c)) return false;
    }
    return true;
}

bool TruncatedSeries::mixed_valid() const {
    for (const auto& [p, c] : terms_) {
        if (!c.member_at(data_->levels.level(p.dst()))) return false;
    }
    return true;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ") * " + p.str();
    }
    return out;
}

TruncatedSeries right_transduction(const TruncatedSeries& s, int edge) {
    if (s.order() < 1)
        throw ValidationError("transduction needs a series of order at least 1");
    const auto& q = s.data()->quiver;
    TruncatedSeries out(s.data(), s.order() - 1);
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : s.terms()) {
        if (p.is_trivial()) continue;
        if (p.edges().front() != edge) continue;
        Path rest = p.length() == 1
                        ? Path::trivial(q, q->edge(edge).dst)
                        : Path::of_edges(q, std::vector<int>(p.edges().begin() + 1,
                                                             p.edges().end()));
        terms.emplace_back(rest, c);
    }
    return TruncatedSeries(s.data(), s.order() - 1, terms);
}

TruncatedSeries left_transduction(const TruncatedSeries& s, int edge) {
    if (s.order() < 1)
        throw ValidationError("transduction needs a series of order at least 1");
    const auto& q = s.data()->quiver;
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : s.terms()) {
        if (p.is_trivial()) continue;
        if (p.edges().back() != edge) continue;
        Path rest = p.length() == 1
                        ? Path::trivial(q, q->edge(edge).src)
                        : Path::of_edges(q, std::vector<int>(p.edges().begin(),
                                                             p.edges().end() - 1));
        terms.emplace_back(rest, c);
    }
    return TruncatedSeries(s.data(), s.order() - 1, terms);
}

TruncatedSeries tau(const TruncatedSeries& s, int edge) {
    const auto& q = s.data()->quiver;
    int sv = q->edge(edge).src;
    int rv = q->edge(edge).dst;
    TowerElement c = s.coeff(Path::trivial(q, sv));
    std::vector<std::pair<Path, TowerElement>> terms;
    if (!c.is_zero()) terms.emplace_back(Path::trivial(q, rv), c);
    return TruncatedSeries(s.data(), s.order(), terms);
}

bool check_derivation_law(const TruncatedSeries& r, const TruncatedSeries& s, int edge) {
    TruncatedSeries lhs = right_transduction(r * s, edge);
    TruncatedSeries rhs =
        right_transduction(r, edge) * s + tau(r, edge) * right_transduction(s, edge);
    int common = std::min(lhs.order(), rhs.order());
    return lhs.agree_up_to(rhs, common);
}

ClosureProbe mixed_closure_probe(const TruncatedSeries& s, int edge, Side side) {
    TruncatedSeries out =
        side == Side::right ? right_transduction(s, edge) : left_transduction(s, edge);
    return ClosureProbe{out.mixed_valid(), out};
}

// --- linear representations ----------------------------------------------------

namespace {

MpaElement truncate_mpa(const MpaElement& a, int order) {
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : a.terms())
        if (static_cast<int>(p.length()) <= order) terms.emplace_back(p, c);
    return MpaElement(a.data(), terms);
}

MpaMatrix mat_mul_trunc(const MpaMatrix& a, const MpaMatrix& b, int order) {
    size_t n = a.size();
    size_t m = b.empty() ? 0 : b[0].size();
    size_t k = b.size();
    MpaMatrix r(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            MpaElement acc = MpaElement::zero(a[i][0].data());
            for (size_t t = 0; t < k; ++t) acc = acc + a[i][t] * b[t][j];
            r[i].push_back(order < 0 ? acc : truncate_mpa(acc, order));
        }
    }
    return r;
}

std::vector<bool> end_mask_of(const MpaElement& a) {
    std::vector<bool> mask(a.data()->quiver->num_vertices(), false);
    for (const auto& [p, c] : a.terms()) mask[p.dst()] = true;
    return mask;
}

}  // namespace

MpaMatrix mat_mul(const MpaMatrix& a, const MpaMatrix& b) { return mat_mul_trunc(a, b, -1); }

bool mat_is_zero(const MpaMatrix& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

LinearRep::LinearRep(MixedDataPtr data, std::vector<MpaElement> lambda, MpaMatrix b,
                     std::vector<MpaElement> rho)
    : data_(std::move(data)), lambda_(std::move(lambda)), b_(std::move(b)), rho_(std::move(rho)) {
    size_t n = lambda_.size();
    if (rho_.size() != n || b_.size() != n)
        throw ValidationError("linear representation shape mismatch");
    for (const auto& row : b_)
        if (row.size() != n) throw ValidationError("linear representation shape mismatch");
    for (const auto& e : lambda_)
        if (!(*e.data() == *data_)) throw ValidationError("lambda entry over wrong data");
    for (const auto& e : rho_)
        if (!(*e.data() == *data_)) throw ValidationError("rho entry over wrong data");
    end_masks_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        for (const auto& e : b_[i]) {
            if (!(*e.data() == *data_)) throw ValidationError("B entry over wrong data");
            end_masks_[i].push_back(end_mask_of(e));
        }
    }
}

bool LinearRep::epsilon_zero() const {
    for (const auto& row : b_)
        for (const auto& e : row)
            if (!e.epsilon_zero()) return false;
    return true;
}

TruncatedSeries expand(const LinearRep& rep, int order) {
    if (!rep.epsilon_zero()) throw EpsilonNonzero();
    MpaMatrix row(1);
    row[0] = rep.lambda();
    MpaMatrix col(rep.size());
    for (int i = 0; i < rep.size(); ++i) col[i].push_back(rep.rho()[i]);
    MpaElement acc = MpaElement::zero(rep.data());
    MpaMatrix cur = row;
    for (int k = 0; k <= order; ++k) {
        MpaMatrix prod = mat_mul_trunc(cur, col, order);
        acc = acc + prod[0][0];
        if (k < order) {
            cur = mat_mul_trunc(cur, rep.b(), order);
            bool all_zero = true;
            for (const auto& e : cur[0])
                if (!e.is_zero()) {
                    all_zero = false;
                    break;
                }
            if (all_zero) break;
        }
    }
    return TruncatedSeries::from_mpa(truncate_mpa(acc, order), order);
}

std::pair<MpaMatrix, MpaMatrix> split_b(const LinearRep& rep, const VertexSet& h) {
    if (!is_hereditary(h)) throw ValidationError("split needs a hereditary subset");
    if (!rep.epsilon_zero()) throw EpsilonNonzero();
    int n = rep.size();
    MpaMatrix b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<std::pair<Path, TowerElement>> t1, t2;
            const auto& mask = rep.end_masks()[i][j];
            bool any_in = false, any_out = false;
            for (int v = 0; v < rep.data()->quiver->num_vertices(); ++v) {
                if (!mask[v]) continue;
                (h.contains(v) ? any_in : any_out) = true;
            }
            if (!any_in) {
                b1[i].push_back(rep.b()[i][j]);
                b2[i].push_back(MpaElement::zero(rep.data()));
                continue;
            }
            if (!any_out) {
                b1[i].push_back(MpaElement::zero(rep.data()));
                b2[i].push_back(rep.b()[i][j]);
                continue;
            }
            for (const auto& [p, c] : rep.b()[i][j].terms())
                (h.contains(p.dst()) ? t2 : t1).emplace_back(p, c);
            b1[i].push_back(MpaElement(rep.data(), t1));
            b2[i].push_back(MpaElement(rep.data(), t2));
        }
    }
    if (!mat_is_zero(mat_mul(b2, b1)))
        throw InternalInvariantViolation("B2 B1 must vanish for hereditary H");
    return {std::move(b1), std::move(b2)};
}

namespace {

MpaMatrix geometric_sum(const MpaMatrix& b, const MixedDataPtr& data, int order) {
    int n = static_cast<int>(b.size());
    MpaMatrix sum(n), power(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            MpaElement diag = i == j ? MpaElement::unit(data) : MpaElement::zero(data);
            sum[i].push_back(diag);
            power[i].push_back(diag);
        }
    }
    for (int k = 1; k <= order; ++k) {
        power = mat_mul_trunc(power, b, order);
        bool all_zero = true;
        for (int i = 0; i < n && all_zero; ++i)
            for (int j = 0; j < n; ++j)
                if (!power[i][j].is_zero()) {
                    all_zero = false;
                    break;
                }
        if (all_zero) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sum[i][j] = sum[i][j] + power[i][j];
    }
    return sum;
}

}  // namespace

bool check_binverse_identity(const LinearRep& rep, const VertexSet& h, int order) {
    auto [b1, b2] = split_b(rep, h);
    MpaMatrix lhs = geometric_sum(rep.b(), rep.data(), order);
    MpaMatrix rhs =
        mat_mul_trunc(geometric_sum(b1, rep.data(), order), geometric_sum(b2, rep.data(), order),
                      order);
    int n = rep.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(truncate_mpa(lhs[i][j], order) == truncate_mpa(rhs[i][j], order))) return false;
    return true;
}

namespace {

MpaElement compress_mpa(const MpaElement& a, const VertexSet& h) {
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : a.terms())
        if (h.contains(p.src()) && h.contains(p.dst())) terms.emplace_back(p, c);
    return MpaElement(a.data(), terms);
}

MpaElement rebase_mpa(const MpaElement& a, const MixedDataPtr& target) {
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : a.terms())
        terms.emplace_back(rebase_path(p, target->quiver), target->tower.adopt(c));
    return MpaElement(target, terms);
}

}  // namespace

LinearRep corner_rep(const LinearRep& rep, const VertexSet& h) {
    if (!is_hereditary(h)) throw ValidationError("corner needs a hereditary subset");
    const MixedDataPtr& src = rep.data();
    MixedDataPtr target;
    bool found = false;
    for (unsigned i = 0; i <= src->r(); ++i) {
        if (src->chain.set(i) == h) {
            target = corner_data(src, i);
            found = true;
            break;
        }
    }
    if (!found) {
        if (src->r() != 0)
            throw ValidationError("corner of a mixed representation needs H from the chain");
        QuiverPtr tq = restriction_graph(h);
        HereditaryChain chain(tq, {VertexSet::full(tq)});
        target = make_mixed_data(tq, std::move(chain), src->tower);
    }
    auto move_entry = [&](const MpaElement& e) {
        return rebase_mpa(compress_mpa(e, h), target);
    };
    std::vector<MpaElement> lambda, rho;
    for (const auto& e : rep.lambda()) lambda.push_back(move_entry(e));
    for (const auto& e : rep.rho()) rho.push_back(move_entry(e));
    MpaMatrix b(rep.size());
    for (int i = 0; i < rep.size(); ++i)
        for (int j = 0; j < rep.size(); ++j) b[i].push_back(move_entry(rep.b()[i][j]));
    return LinearRep(target, std::move(lambda), std::move(b), std::move(rho));
}

TruncatedSeries compress(const TruncatedSeries& s, const VertexSet& h) {
    std::vector<std::pair<Path, TowerElement>> terms;
    for (const auto& [p, c] : s.terms())
        if (h.contains(p.src()) && h.contains(p.dst())) terms.emplace_back(p, c);
    return TruncatedSeries(s.data(), s.order(), terms);
}

bool check_corner_identity(const LinearRep& rep, const VertexSet& h, int order) {
    TruncatedSeries corner_side = expand(corner_rep(rep, h), order);
    TruncatedSeries full_side = compress(expand(rep, order), h);
    // The two series live over different quivers (E_H vs E); compare by the
    // printed path/coefficient pairs, which are id-based on both sides.
    std::map<std::string, std::string> a, b;
    for (const auto& [p, c] : corner_side.terms()) a[p.str()] = c.str();
    for (const auto& [p, c] : full_side.terms()) b[p.str()] = c.str();
    return a == b;
}

std::vector<TowerElement> enumerate_level_elements(const Tower& tower, unsigned level) {
    if (tower.kind() != TowerKind::finite_field)
        throw UnsupportedTower("level enumeration needs a finite-field tower");
    auto basis = tower.prime_basis_of_level(level);
    unsigned p = tower.prime_p();
    std::vector<TowerElement> out{tower.zero()};
    for (const auto& b : basis) {
        std::vector<TowerElement> next;
        for (const auto& partial : out) {
            for (unsigned c = 0; c < p; ++c)
                next.push_back(c == 0 ? partial : partial + b * tower.from_int(c));
        }
        out = std::move(next);
    }
    return out;
}

Claim2Report claim2_check(const MixedDataPtr& data, int crossing_edge,
                          const std::vector<MpaElement>& as,
                          const std::vector<TruncatedSeries>& bs, unsigned level, int order) {
    if (as.size() != bs.size() || as.empty())
        throw ValidationError("claim-2 check needs matching nonempty families");
    const auto& q = data->quiver;
    int sv = q->edge(crossing_edge).src;
    int rv = q->edge(crossing_edge).dst;
    Claim2Report report;

    // Independence of b_1..b_m over K_level: brute force over the finite
    // subfield, searching for a vanishing nontrivial combination.
    auto scalars = enumerate_level_elements(data->tower, level);
    size_t m = bs.size();
    report.bs_independent = true;
    std::vector<size_t> idx(m, 0);
    while (true) {
        bool all_zero = true;
        for (size_t i = 0; i < m; ++i)
            if (idx[i] != 0) all_zero = false;
        if (!all_zero) {
            TruncatedSeries comb(data, order);
            for (size_t i = 0; i < m; ++i) comb = comb + bs[i].scaled(scalars[idx[i]]);
            if (comb.is_zero()) {
                report.bs_independent = false;
                break;
            }
        }
        size_t k = 0;
        while (k < m && ++idx[k] == scalars.size()) idx[k++] = 0;
        if (k == m) break;
    }

    MpaElement edge_elem =
        MpaElement::single(data, Path::of_edges(q, {crossing_edge}), data->tower.one());
    report.some_ae_nonzero = false;
    for (const auto& a : as)
        if (!(a * edge_elem).is_zero()) report.some_ae_nonzero = true;

    TruncatedSeries total(data, order);
    for (size_t i = 0; i < m; ++i)
        total = total + TruncatedSeries::from_mpa(as[i] * edge_elem, order) * bs[i];
    report.sum_nonzero = !total.is_zero();

    // Coefficient equations: coeff(gamma e mu, sum a_i e b_i) =
    // sum_i a_i(gamma) b_i(mu) for r(gamma) = s(e), s(mu) = r(e).
    report.coefficients_match = true;
    std::vector<Path> gammas;
    for (const auto& a : as)
        for (const auto& [p, c] : a.terms())
            if (p.dst() == sv) gammas.push_back(p);
    std::vector<Path> mus;
    for (const auto& b : bs)
        for (const auto& [p, c] : b.terms())
            if (p.src() == rv) mus.push_back(p);
    Path epath = Path::of_edges(q, {crossing_edge});
    for (const auto& gamma : gammas) {
        for (const auto& mu : mus) {
            if (static_cast<int>(gamma.length() + 1 + mu.length()) > order) continue;
            auto ge = gamma.concat(epath);
            assert(ge);
            auto full = ge->concat(mu);
            assert(full);
            TowerElement lhs = total.coeff(*full);
            TowerElement rhs = data->tower.zero();
            for (size_t i = 0; i < m; ++i) rhs = rhs + as[i].coeff(gamma) * bs[i].coeff(mu);
            if (!(lhs == rhs)) report.coefficients_match = false;
        }
    }
    return report;
}

}  // namespace mqa
