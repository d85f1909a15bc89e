#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqa/errors.hpp"
#include "mqa/structure.hpp"

using namespace mqa;
using namespace mqa::testing;

namespace {

MixedDataPtr cyc4_r2_data() {
    QuiverPtr q = cyc4_quiver();
    HereditaryChain chain(
        q, {VertexSet::empty(q), VertexSet::of_ids(q, {"3", "4"}), VertexSet::full(q)});
    return make_mixed_data(q, chain, Tower(TowerSpec::finite_field(2, {1, 2, 4})));
}

MixedDataPtr et_r2_data() {
    QuiverPtr q = et_quiver();
    HereditaryChain chain(
        q, {VertexSet::empty(q), VertexSet::of_ids(q, {"2"}), VertexSet::full(q)});
    return make_mixed_data(q, chain, Tower(TowerSpec::finite_field(2, {1, 2, 4})));
}

}  // namespace

TEST_CASE("cut kills the ideal of the chain member") {
    auto d = et_data(f2_f4());
    TowerElement one = d->tower.one();
    TowerElement w = d->tower.generator();
    MpaElement x = MpaElement::single(d, path_of(d, {"f"}), one) +
                   MpaElement::single(d, path_of(d, {"e"}), w);
    MpaElement out = cut(x, 1);
    CHECK(out.terms().size() == 1);
    CHECK(out.terms().begin()->first.str() == "f");
    CHECK(out.data()->quiver->num_vertices() == 1);
    CHECK(out.data()->r() == 0);

    MpaElement p2 = MpaElement::vertex_idempotent(d, 1);
    CHECK(cut(p2, 1).is_zero());

    // chain with H_0 = {}: cut(.,1) kills nothing but truncates the tower
    auto d2 = et_r2_data();
    MpaElement y = MpaElement::unit(d2);
    MpaElement ycut = cut(y, 1);
    CHECK(ycut.terms().size() == 2);
    CHECK(ycut.data()->tower.r() == 1);
}

TEST_CASE("corner compresses by the chain member") {
    auto d = et_data(f2_f4());
    TowerElement one = d->tower.one();
    MpaElement x = MpaElement::vertex_idempotent(d, 1).scaled(d->tower.generator()) +
                   MpaElement::single(d, path_of(d, {"f"}), one);
    MpaElement out = corner(x, 0);
    CHECK(out.terms().size() == 1);
    CHECK(out.terms().begin()->first.str() == "@2");
    // corner at 0 exposes the top field only
    CHECK(out.data()->tower.r() == 0);
    CHECK(out.data()->tower.lo() == out.data()->tower.hi());

    // corner at r is the identity re-indexing
    MpaElement full = corner(x, d->r());
    CHECK(full.terms().size() == x.terms().size());

    // supported entirely outside H: zero
    MpaElement f_only = MpaElement::single(d, path_of(d, {"f"}), one);
    CHECK(corner(f_only, 0).is_zero());
}

TEST_CASE("cut and corner are homomorphisms with valid outputs") {
    std::mt19937 rng(53);
    for (const auto& d : {et_data(f2_f4()), et_r2_data(), cyc4_r2_data()}) {
        for (unsigned i = 1; i <= d->r(); ++i) {
            ChainReindex re = ChainReindex::cut(d, i);
            MpaElement unit_target = MpaElement::unit(re.target);
            CHECK(re.apply(MpaElement::unit(d)) == unit_target);
            for (int trial = 0; trial < 40; ++trial) {
                MpaElement a = random_mpa(d, rng);
                MpaElement b = random_mpa(d, rng);
                CHECK(re.apply(a * b) == re.apply(a) * re.apply(b));
                CHECK(re.apply(a + b) == re.apply(a) + re.apply(b));
                CHECK_NOTHROW(re.apply(a).validate());
            }
        }
        for (unsigned i = 0; i <= d->r(); ++i) {
            ChainReindex re = ChainReindex::corner(d, i);
            // corner multiplicativity: corner(a) corner(b) = corner(a p_H b)
            std::vector<std::pair<Path, TowerElement>> ph_terms;
            for (int v : d->chain.set(i).indices())
                ph_terms.emplace_back(Path::trivial(d->quiver, v), d->tower.one());
            MpaElement ph(d, ph_terms);
            CHECK(re.apply(ph) == MpaElement::unit(re.target));
            for (int trial = 0; trial < 40; ++trial) {
                MpaElement a = random_mpa(d, rng);
                MpaElement b = random_mpa(d, rng);
                CHECK(re.apply(a) * re.apply(b) == re.apply(a * ph * b));
                CHECK_NOTHROW(re.apply(a).validate());
            }
        }
    }
}

TEST_CASE("cut composition law") {
    std::mt19937 rng(59);
    for (const auto& d : {et_r2_data(), cyc4_r2_data()}) {
        // cut at 1 then cut at 1 equals cut at 2 directly
        ChainReindex first = ChainReindex::cut(d, 1);
        ChainReindex second = ChainReindex::cut(first.target, 1);
        ChainReindex direct = ChainReindex::cut(d, 2);
        CHECK(*second.target == *direct.target);
        for (int trial = 0; trial < 100; ++trial) {
            MpaElement a = random_mpa(d, rng);
            CHECK(second.apply(first.apply(a)) == direct.apply(a));
            LpaElement x = random_lpa(d, rng);
            CHECK(second.apply(first.apply(x)) == direct.apply(x));
        }
    }
}

TEST_CASE("cut and corner on Leavitt elements") {
    std::mt19937 rng(61);
    auto d = cyc4_r2_data();
    for (unsigned i = 1; i <= d->r(); ++i) {
        ChainReindex re = ChainReindex::cut(d, i);
        SpecialEdgeChoice tchoice = SpecialEdgeChoice::least(re.target);
        for (int trial = 0; trial < 60; ++trial) {
            LpaElement a = random_lpa(d, rng);
            LpaElement b = random_lpa(d, rng);
            CHECK(re.apply(a * b) == re.apply(a) * re.apply(b));
            CHECK_NOTHROW(re.apply(a).validate());
            CHECK_NOTHROW(reduce(re.apply(a), tchoice).validate());
        }
    }
    for (unsigned i = 0; i <= d->r(); ++i) {
        ChainReindex re = ChainReindex::corner(d, i);
        for (int trial = 0; trial < 60; ++trial) {
            LpaElement a = random_lpa(d, rng);
            CHECK_NOTHROW(re.apply(a).validate());
        }
    }
}

TEST_CASE("corner path identities") {
    auto d = et_data(f2_f4());
    CHECK(check_corner_path_identities(d, VertexSet::of_ids(d->quiver, {"2"}), 3));
    CHECK(check_corner_path_identities(d, VertexSet::full(d->quiver), 3));

    auto c3 = trivial_chain_data(chain3_quiver(), Tower(TowerSpec::constants(0)));
    CHECK(check_corner_path_identities(c3, VertexSet::of_ids(c3->quiver, {"2", "3"}), 4));
    CHECK(check_corner_path_identities(c3, VertexSet::of_ids(c3->quiver, {"3"}), 4));
    CHECK_THROWS_AS(check_corner_path_identities(c3, VertexSet::of_ids(c3->quiver, {"1"}), 3),
                    ValidationError);
}

TEST_CASE("index bounds") {
    auto d = et_data(f2_f4());
    CHECK_THROWS_AS(ChainReindex::cut(d, 0), ValidationError);
    CHECK_THROWS_AS(ChainReindex::cut(d, 2), ValidationError);
    CHECK_THROWS_AS(ChainReindex::corner(d, 2), ValidationError);
}
