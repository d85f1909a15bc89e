// Stress tests for the exact-arithmetic layers: multivariate gcd/fractions
// and finite-field towers near the top of the supported envelope.

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqa/errors.hpp"
#include "mqa/poly.hpp"
#include "mqa/series.hpp"

using namespace mqa;

namespace {

Poly random_poly3(std::mt19937& rng, int terms, unsigned maxexp) {
    Poly p(3);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<unsigned> e(0, maxexp);
    for (int t = 0; t < terms; ++t) p.add_term({e(rng), e(rng), e(rng)}, c(rng));
    return p;
}

}  // namespace

TEST_CASE("three variable gcd stress") {
    std::mt19937 rng(101);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Poly f = random_poly3(rng, 3, 2);
        Poly g = random_poly3(rng, 3, 2);
        Poly common = random_poly3(rng, 2, 2);
        Poly a = f * common;
        Poly b = g * common;
        Poly d = poly_gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(d.is_zero());
            continue;
        }
        // d divides both inputs exactly
        if (!a.is_zero()) CHECK(div_exact(a, d) * d == a);
        if (!b.is_zero()) CHECK(div_exact(b, d) * d == b);
        // the planted factor divides d
        if (!common.is_zero() && !a.is_zero() && !b.is_zero()) {
            Poly q = poly_gcd(d, common);
            // gcd(d, common) ~ common up to a unit: same degree profile
            CHECK(q.total_degree() == common.total_degree());
            ++nontrivial;
        }
        // commutativity and monic normalization
        Poly d2 = poly_gcd(b, a);
        CHECK(d == d2);
        if (!d.is_zero()) CHECK(d.leading_coeff() == 1);
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("fraction field axioms in three variables") {
    std::mt19937 rng(103);
    auto random_fraction = [&]() {
        Poly num = random_poly3(rng, 2, 2);
        Poly den = random_poly3(rng, 2, 1);
        if (den.is_zero()) den = Poly::constant(3, 1);
        return Fraction(num, den);
    };
    for (int trial = 0; trial < 60; ++trial) {
        Fraction a = random_fraction();
        Fraction b = random_fraction();
        Fraction c = random_fraction();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Fraction(3));
        if (!a.is_zero()) {
            Fraction inv = Fraction::constant(3, 1) / a;
            CHECK(a * inv == Fraction::constant(3, 1));
        }
        // canonical form: denominators come out monic and reduced
        if (!(a * b).is_zero()) {
            const Fraction ab = a * b;
            CHECK(ab.den().leading_coeff() == 1);
            Poly g = poly_gcd(ab.num(), ab.den());
            CHECK(g.is_constant());
        }
    }
}

TEST_CASE("independence brute force across the supported subfield sizes") {
    // |K_i| up to 16: check every level of F2 <= F4 <= F16 and F3 <= F9.
    std::mt19937 rng(107);
    for (const TowerSpec& spec : {TowerSpec::finite_field(2, {1, 2, 4}),
                                  TowerSpec::finite_field(3, {1, 2})}) {
        Tower t(spec);
        auto elems = enumerate_level_elements(t, t.r());
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            size_t m = 1 + trial % 3;
            std::vector<TowerElement> fam;
            for (size_t i = 0; i < m; ++i) fam.push_back(elems[pick(rng)]);
            for (unsigned level = 0; level <= t.r(); ++level) {
                auto scalars = enumerate_level_elements(t, level);
                bool dependent = false;
                std::vector<size_t> idx(m, 0);
                while (true) {
                    bool nontrivial = false;
                    for (size_t i = 0; i < m; ++i)
                        if (idx[i]) nontrivial = true;
                    if (nontrivial) {
                        TowerElement acc = t.zero();
                        for (size_t i = 0; i < m; ++i) acc = acc + scalars[idx[i]] * fam[i];
                        if (acc.is_zero()) {
                            dependent = true;
                            break;
                        }
                    }
                    size_t k = 0;
                    while (k < m && ++idx[k] == scalars.size()) idx[k++] = 0;
                    if (k == m) break;
                }
                CHECK(t.linear_independent_over(fam, level) == !dependent);
            }
        }
    }
}

TEST_CASE("odd characteristic tower end to end") {
    QuiverPtr q = testing::et_quiver();
    HereditaryChain chain(q, {VertexSet::of_ids(q, {"2"}), VertexSet::full(q)});
    auto d = make_mixed_data(q, chain, Tower(TowerSpec::finite_field(3, {1, 2})));
    TowerElement w = d->tower.generator();
    CHECK(w.level() == 1);
    CHECK((w + w + w).is_zero());

    // level constraints and the oracle agree over F3 <= F9 as well
    Path e = testing::path_of(d, {"e"});
    Path f = testing::path_of(d, {"f"});
    CHECK(mpa_accepts(d, {{e, w}}));
    CHECK_FALSE(mpa_accepts(d, {{f, w}}));
    CHECK(oracle_membership(d, {{e, w}}));
    CHECK_FALSE(oracle_membership(d, {{f, w}}));

    SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
    for (const auto& check : check_relations(d, choice)) CHECK(check.pass);
    CHECK(verify_mu_inverse(d, 0, choice));

    std::mt19937 rng(109);
    for (int trial = 0; trial < 60; ++trial) {
        LpaElement x = testing::random_lpa(d, rng);
        LpaElement nf = reduce(x, choice);
        CHECK(reduce_randomized(x, choice, rng) == nf);
        CHECK_NOTHROW(nf.validate());
    }
}
