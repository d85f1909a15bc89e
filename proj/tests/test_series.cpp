#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqa/errors.hpp"
#include "mqa/series.hpp"

using namespace mqa;
using namespace mqa::testing;

namespace {

MixedDataPtr loop1_data() {
    auto q = std::make_shared<const Quiver>(
        std::vector<std::string>{"v"},
        std::vector<std::tuple<std::string, std::string, std::string>>{{"a", "v", "v"}});
    HereditaryChain chain(q, {VertexSet::full(q)});
    return make_mixed_data(q, chain, Tower(TowerSpec::constants(0)));
}

LinearRep et_paths_rep(const MixedDataPtr& d) {
    // lambda = (p_1, 0), B = [[f, e], [0, 0]], rho = (p_1, p_2)^t
    TowerElement one = d->tower.one();
    std::vector<MpaElement> lambda{MpaElement::vertex_idempotent(d, 0), MpaElement::zero(d)};
    MpaMatrix b(2);
    b[0].push_back(MpaElement::single(d, path_of(d, {"f"}), one));
    b[0].push_back(MpaElement::single(d, path_of(d, {"e"}), one));
    b[1].push_back(MpaElement::zero(d));
    b[1].push_back(MpaElement::zero(d));
    std::vector<MpaElement> rho{MpaElement::vertex_idempotent(d, 0),
                                MpaElement::vertex_idempotent(d, 1)};
    return LinearRep(d, std::move(lambda), std::move(b), std::move(rho));
}

}  // namespace

TEST_CASE("geometric expansion of a loop") {
    auto d = loop1_data();
    TowerElement one = d->tower.one();
    std::vector<MpaElement> lambda{MpaElement::vertex_idempotent(d, 0)};
    MpaMatrix b(1);
    b[0].push_back(MpaElement::single(d, path_of(d, {"a"}), one));
    std::vector<MpaElement> rho{MpaElement::vertex_idempotent(d, 0)};
    LinearRep rep(d, lambda, b, rho);

    TruncatedSeries s = expand(rep, 3);
    CHECK(s.terms().size() == 4);  // p + a + a^2 + a^3
    CHECK(s.coeff(triv(d, "v")) == one);
    CHECK(s.coeff(path_of(d, {"a", "a", "a"})) == one);

    // stability: expanding further only appends longer terms
    TruncatedSeries s5 = expand(rep, 5);
    CHECK(s5.agree_up_to(s, 3));

    // B = 0 gives lambda rho
    MpaMatrix zero_b(1);
    zero_b[0].push_back(MpaElement::zero(d));
    LinearRep rep0(d, lambda, zero_b, rho);
    TruncatedSeries s0 = expand(rep0, 4);
    CHECK(s0.terms().size() == 1);

    // a trivial-path entry in B is rejected
    MpaMatrix bad(1);
    bad[0].push_back(MpaElement::vertex_idempotent(d, 0));
    LinearRep repbad(d, lambda, bad, rho);
    CHECK_THROWS_AS(expand(repbad, 2), EpsilonNonzero);
}

TEST_CASE("expansion of the running example") {
    auto d = et_data(f2_f4());
    LinearRep rep = et_paths_rep(d);
    TruncatedSeries s = expand(rep, 2);
    TowerElement one = d->tower.one();
    CHECK(s.coeff(triv(d, "1")) == one);
    CHECK(s.coeff(path_of(d, {"f"})) == one);
    CHECK(s.coeff(path_of(d, {"e"})) == one);
    CHECK(s.coeff(path_of(d, {"f", "f"})) == one);
    CHECK(s.coeff(path_of(d, {"f", "e"})) == one);
    CHECK(s.coeff(triv(d, "2")).is_zero());
    CHECK(s.terms().size() == 5);
    CHECK(s.mixed_valid());
}

TEST_CASE("series arithmetic carries the minimum order") {
    auto d = et_data(f2_f4());
    TruncatedSeries a = TruncatedSeries::from_mpa(MpaElement::unit(d), 4);
    TruncatedSeries b =
        TruncatedSeries::from_mpa(MpaElement::single(d, path_of(d, {"f"}), d->tower.one()), 2);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
}

TEST_CASE("split of B and the inverse factorization") {
    auto d = et_data(f2_f4());
    LinearRep rep = et_paths_rep(d);
    VertexSet h = VertexSet::of_ids(d->quiver, {"2"});
    auto [b1, b2] = split_b(rep, h);
    CHECK(b1[0][0] == MpaElement::single(d, path_of(d, {"f"}), d->tower.one()));
    CHECK(b1[0][1].is_zero());
    CHECK(b2[0][1] == MpaElement::single(d, path_of(d, {"e"}), d->tower.one()));
    CHECK(b2[0][0].is_zero());
    CHECK(mat_is_zero(mat_mul(b2, b1)));

    // H = E^0: B1 = 0, B2 = B
    auto [c1, c2] = split_b(rep, VertexSet::full(d->quiver));
    CHECK(c1[0][0].is_zero());
    CHECK(c2[0][0] == rep.b()[0][0]);

    // B = 0: both parts vanish
    MpaMatrix zb(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) zb[i].push_back(MpaElement::zero(d));
    LinearRep zrep(d, rep.lambda(), zb, rep.rho());
    auto [z1, z2] = split_b(zrep, h);
    CHECK(mat_is_zero(z1));
    CHECK(mat_is_zero(z2));
    CHECK(check_binverse_identity(zrep, h, 4));

    for (int order = 2; order <= 6; ++order) {
        CHECK(check_binverse_identity(rep, h, order));
        CHECK(check_binverse_identity(rep, VertexSet::full(d->quiver), order));
        CHECK(check_binverse_identity(rep, VertexSet::empty(d->quiver), order));
    }
}

TEST_CASE("corner representation") {
    auto d = et_data(f2_f4());
    LinearRep rep = et_paths_rep(d);
    VertexSet h = VertexSet::of_ids(d->quiver, {"2"});  // chain member H_0
    for (int order = 2; order <= 6; ++order) CHECK(check_corner_identity(rep, h, order));
    CHECK(check_corner_identity(rep, VertexSet::full(d->quiver), 4));

    // unmixed data admits corners at arbitrary hereditary subsets
    auto du = trivial_chain_data(et_quiver(), f2_f4());
    LinearRep repu = et_paths_rep(du);
    for (int order = 2; order <= 6; ++order) {
        CHECK(check_corner_identity(repu, VertexSet::of_ids(du->quiver, {"2"}), order));
        CHECK(check_corner_identity(repu, VertexSet::full(du->quiver), order));
        CHECK(check_corner_identity(repu, VertexSet::empty(du->quiver), order));
    }

    // lambda supported off H and no crossing terms: zero corner series
    TowerElement one = du->tower.one();
    std::vector<MpaElement> lambda{MpaElement::vertex_idempotent(du, 0)};
    MpaMatrix b(1);
    b[0].push_back(MpaElement::single(du, path_of(du, {"f"}), one));
    std::vector<MpaElement> rho{MpaElement::vertex_idempotent(du, 0)};
    LinearRep offh(du, lambda, b, rho);
    CHECK(expand(corner_rep(offh, VertexSet::of_ids(du->quiver, {"2"})), 4).is_zero());
}

TEST_CASE("transductions") {
    auto d = et_data(f2_f4());
    TowerElement one = d->tower.one();
    int e = d->quiver->edge_index("e");
    int f = d->quiver->edge_index("f");

    // delta~_f(2f + 3fe) = 2 p_1 + 3 e ... over F2: coefficients 1
    TruncatedSeries s(
        d, 3,
        {{path_of(d, {"f"}), one}, {path_of(d, {"f", "e"}), one}});
    TruncatedSeries out = right_transduction(s, f);
    CHECK(out.coeff(triv(d, "1")) == one);
    CHECK(out.coeff(path_of(d, {"e"})) == one);
    CHECK(out.order() == 2);

    CHECK(right_transduction(TruncatedSeries::from_mpa(MpaElement::unit(d), 2), e).is_zero());

    TruncatedSeries fe(d, 3, {{path_of(d, {"f", "e"}), one}});
    TruncatedSeries lt = left_transduction(fe, e);
    CHECK(lt.coeff(path_of(d, {"f"})) == one);
    CHECK(left_transduction(TruncatedSeries::from_mpa(MpaElement::unit(d), 2), e).is_zero());
    TruncatedSeries ff(d, 3, {{path_of(d, {"f", "f"}), one}});
    CHECK(left_transduction(ff, f).coeff(path_of(d, {"f"})) == one);

    // tau_e relabels p_{s(e)} and kills the rest
    TruncatedSeries mix(d, 2, {{triv(d, "1"), one}, {path_of(d, {"f"}), one}});
    TruncatedSeries te = tau(mix, e);
    CHECK(te.coeff(triv(d, "2")) == one);
    CHECK(te.terms().size() == 1);
    TruncatedSeries p2only(d, 2, {{triv(d, "2"), one}});
    CHECK(tau(p2only, e).is_zero());
    TowerElement w = d->tower.generator();
    TruncatedSeries scaled_p1(d, 2, {{triv(d, "1"), w}});
    CHECK(tau(scaled_p1, e).coeff(triv(d, "2")) == w);

    // tau_e is multiplicative on the trivial-path subalgebra
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries r = TruncatedSeries::from_mpa(random_mpa(d, rng), 3);
        TruncatedSeries u = TruncatedSeries::from_mpa(random_mpa(d, rng), 3);
        for (int edge = 0; edge < d->quiver->num_edges(); ++edge)
            CHECK(tau(r * u, edge) == tau(r, edge) * tau(u, edge));
    }

    // loop shift: delta~_a on sum a^k drops one power
    auto l = loop1_data();
    std::vector<std::pair<Path, TowerElement>> pows{{triv(l, "v"), l->tower.one()}};
    Path a1 = path_of(l, {"a"});
    pows.emplace_back(a1, l->tower.one());
    pows.emplace_back(path_of(l, {"a", "a"}), l->tower.one());
    pows.emplace_back(path_of(l, {"a", "a", "a"}), l->tower.one());
    TruncatedSeries geo(l, 3, pows);
    TruncatedSeries shifted = right_transduction(geo, l->quiver->edge_index("a"));
    CHECK(shifted.order() == 2);
    CHECK(shifted.terms().size() == 3);
}

TEST_CASE("derivation law") {
    std::mt19937 rng(43);
    auto d = et_data(f2_f4());
    int e = d->quiver->edge_index("e");
    int f = d->quiver->edge_index("f");

    TruncatedSeries fs =
        TruncatedSeries::from_mpa(MpaElement::single(d, path_of(d, {"f"}), d->tower.one()), 4);
    CHECK(check_derivation_law(fs, fs, f));
    CHECK(check_derivation_law(fs, fs, e));

    // r = p_{s(e)}: both sides collapse to delta~_e(s)
    TruncatedSeries p1 = TruncatedSeries::from_mpa(MpaElement::vertex_idempotent(d, 0), 4);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries s = TruncatedSeries::from_mpa(random_mpa(d, rng), 4);
        CHECK(check_derivation_law(p1, s, e));
    }

    for (const Tower& tower : {f2_f4(), q_qt()}) {
        auto dd = et_data(tower);
        for (int edge = 0; edge < dd->quiver->num_edges(); ++edge) {
            for (int trial = 0; trial < 100; ++trial) {
                TruncatedSeries r = TruncatedSeries::from_mpa(random_mpa(dd, rng), 5);
                TruncatedSeries s = TruncatedSeries::from_mpa(random_mpa(dd, rng), 5);
                CHECK(check_derivation_law(r, s, edge));
            }
        }
    }
}

TEST_CASE("transduction closure asymmetry") {
    auto d = et_data(f2_f4());
    TowerElement w = d->tower.generator();
    int e = d->quiver->edge_index("e");

    // right transductions preserve mixed validity
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        TruncatedSeries s = TruncatedSeries::from_mpa(random_mpa(d, rng), 4);
        REQUIRE(s.mixed_valid());
        for (int edge = 0; edge < d->quiver->num_edges(); ++edge) {
            auto probe = mixed_closure_probe(s, edge, Side::right);
            CHECK(probe.valid);
        }
    }

    // the left witness: delta_e(w e) = w p_1 with lev(1) = 0
    TruncatedSeries we(d, 2, {{path_of(d, {"e"}), w}});
    REQUIRE(we.mixed_valid());
    auto probe = mixed_closure_probe(we, e, Side::left);
    CHECK_FALSE(probe.valid);
    CHECK(probe.output.coeff(triv(d, "1")) == w);

    // left transductions of K_0-coefficient series stay valid
    auto k0 = trivial_chain_data(et_quiver(), Tower(TowerSpec::finite_field(2, {1})));
    TruncatedSeries plain(
        k0, 2, {{path_of(k0, {"e"}), k0->tower.one()}, {path_of(k0, {"f"}), k0->tower.one()}});
    CHECK(mixed_closure_probe(plain, k0->quiver->edge_index("e"), Side::left).valid);
}

TEST_CASE("crossing-edge independence claim") {
    auto d = et_data(f2_f4());
    TowerElement w = d->tower.generator();
    TowerElement one = d->tower.one();
    int e = d->quiver->edge_index("e");

    // b_1 = p_2, b_2 = w p_2: independent over K_0 = F_2 inside p_2 P_L((E_H))
    std::vector<TruncatedSeries> bs{TruncatedSeries(d, 4, {{triv(d, "2"), one}}),
                                    TruncatedSeries(d, 4, {{triv(d, "2"), w}})};
    std::vector<MpaElement> as{MpaElement::vertex_idempotent(d, 0),
                               MpaElement::single(d, path_of(d, {"f"}), one)};
    Claim2Report report = claim2_check(d, e, as, bs, 0, 4);
    CHECK(report.bs_independent);
    CHECK(report.some_ae_nonzero);
    CHECK(report.sum_nonzero);
    CHECK(report.coefficients_match);
    CHECK(report.conclusion_holds());

    // dependent family: conclusion not forced, premises detected as failing
    std::vector<TruncatedSeries> dep{TruncatedSeries(d, 4, {{triv(d, "2"), one}}),
                                     TruncatedSeries(d, 4, {{triv(d, "2"), one}})};
    Claim2Report r2 = claim2_check(d, e, as, dep, 0, 4);
    CHECK_FALSE(r2.bs_independent);
}
