#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqa/errors.hpp"
#include "mqa/poly.hpp"
#include "mqa/series.hpp"

using namespace mqa;

TEST_CASE("polynomial gcd and exact division") {
    auto t1 = Poly::variable(2, 1);
    auto t2 = Poly::variable(2, 2);
    auto one = Poly::constant(2, 1);

    Poly a = (t1 + t2) * (t1 - t2);         // t1^2 - t2^2
    Poly g = poly_gcd(a, (t1 + t2) * (t1 + one));
    CHECK(g == t1 + t2);
    CHECK(div_exact(a, g) == t1 - t2);

    CHECK(poly_gcd(Poly(2), a) == poly_gcd(a, Poly(2)));
    CHECK(poly_gcd(one * mpq_class(6), one * mpq_class(4)) == one);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        auto rand_poly = [&]() {
            Poly p(2);
            for (int t = 0; t < 3; ++t) {
                Monomial m{static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3)};
                p.add_term(m, c(rng));
            }
            return p;
        };
        Poly f = rand_poly(), h = rand_poly(), common = rand_poly();
        if (common.is_zero()) continue;
        Poly gg = poly_gcd(f * common, h * common);
        if ((f * common).is_zero() || (h * common).is_zero()) continue;
        // gcd is divisible by the planted common factor
        CHECK_NOTHROW(div_exact(gg, poly_gcd(gg, common)));
        CHECK(poly_gcd(gg, common) == poly_gcd(common, gg));
        Poly q1 = div_exact(f * common, gg);
        CHECK(q1 * gg == f * common);
    }
}

TEST_CASE("fraction canonical form") {
    auto t1 = Poly::variable(1, 1);
    auto one = Poly::constant(1, 1);
    Fraction f(t1 * t1 - one, t1 - one);  // reduces to t1 + 1
    CHECK(f == Fraction::from_poly(t1 + one));
    Fraction g(one * 2, t1 * 2);  // denominator becomes monic
    CHECK(g.den() == t1);
    CHECK(g.num() == one);
    CHECK_THROWS_AS(Fraction(one, Poly(1)), DivisionByZero);
}

TEST_CASE("finite field tower arithmetic") {
    Tower t = testing::f2_f4();
    TowerElement w = t.generator();
    CHECK((w + w).is_zero());                   // characteristic 2
    CHECK(w * w == w + t.one());                // w^2 = w + 1
    CHECK(w * w + w + t.one() == t.zero());
    CHECK((w / w) == t.one());
    CHECK_THROWS_AS(w / t.zero(), DivisionByZero);

    CHECK(t.one().level() == 0);
    CHECK(t.one().member_at(0));
    CHECK(w.level() == 1);
    CHECK_FALSE(w.member_at(0));
    CHECK(w.member_at(1));
}

TEST_CASE("rational function tower arithmetic") {
    Tower t = testing::q_qt();
    TowerElement t1 = t.indeterminate(1);
    CHECK(t1 * (t.one() / t1) == t.one());
    CHECK(t1.member_at(1));
    CHECK_FALSE(t1.member_at(0));
    CHECK(t.from_int(3).member_at(0));
    CHECK((t.from_int(3) / t.from_int(4)).level() == 0);
}

TEST_CASE("independence over sublevels") {
    Tower t = testing::f2_f4();
    TowerElement w = t.generator();
    std::vector<TowerElement> basis{t.one(), w};
    CHECK(t.linear_independent_over(basis, 0));
    std::vector<TowerElement> rep{t.one(), t.one()};
    CHECK_FALSE(t.linear_independent_over(rep, 0));
    std::vector<TowerElement> over_self{t.one(), w};
    CHECK_FALSE(t.linear_independent_over(over_self, 1));  // dim over F4 is 1
    CHECK(t.linear_independent_over({}, 0));

    Tower rf = testing::q_qt();
    TowerElement x = rf.indeterminate(1);
    std::vector<TowerElement> powers{rf.one(), x, x * x};
    CHECK(rf.linear_independent_over(powers, 0));
    CHECK_FALSE(rf.linear_independent_over(powers, 1));
}

TEST_CASE("independence agrees with brute force over small subfields") {
    Tower t = testing::f2_f4();
    auto elems = enumerate_level_elements(t, 1);  // all of F4
    std::mt19937 rng(11);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        size_t m = 1 + trial % 3;
        std::vector<TowerElement> fam;
        for (size_t i = 0; i < m; ++i) fam.push_back(elems[pick(rng)]);
        for (unsigned level = 0; level <= 1; ++level) {
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

TEST_CASE("level monotonicity and arithmetic closure") {
    std::mt19937 rng(3);
    for (const Tower& t : {testing::f2_f4(), testing::q_qt()}) {
        for (int trial = 0; trial < 50; ++trial) {
            TowerElement a = t.random_element(rng, trial % 2);
            TowerElement b = t.random_element(rng, 1);
            unsigned la = a.level(), lb = b.level();
            for (unsigned j = std::max(la, lb); j <= t.r(); ++j) {
                CHECK(a.member_at(j));
                CHECK((a + b).member_at(j));
                CHECK((a * b).member_at(j));
                CHECK((a - b).member_at(j));
            }
            // canonical-form identity: (a+b)^2 = a^2 + 2ab + b^2
            TowerElement lhs = (a + b) * (a + b);
            TowerElement rhs = a * a + (a * b + a * b) + b * b;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("stored primitive polynomials pass the construction checks") {
    for (auto [p, d] : std::vector<std::pair<unsigned, std::vector<unsigned>>>{
             {2, {1}}, {2, {1, 2}}, {2, {1, 3}}, {2, {1, 2, 4}}, {2, {1, 5}},
             {2, {1, 2, 6}}, {2, {1, 2, 4, 8}}, {3, {1, 2}}, {3, {1, 3}},
             {3, {1, 2, 4}}, {5, {1, 2}}, {5, {1, 3}}, {7, {1, 2}}, {7, {1, 3}}}) {
        CHECK_NOTHROW(Tower(TowerSpec::finite_field(p, d)));
    }
    CHECK_THROWS_AS(Tower(TowerSpec::finite_field(2, {2, 3})), ValidationError);
    CHECK_THROWS_AS(Tower(TowerSpec::finite_field(4, {1, 2})), ValidationError);
    CHECK_THROWS_AS(Tower(TowerSpec::finite_field(2, {1, 16})), UnsupportedTower);
}

TEST_CASE("tower literals round trip") {
    Tower ff = testing::f2_f4();
    for (const char* text : {"0", "1", "w", "w+1"}) {
        TowerElement e = ff.parse(text);
        CHECK(ff.parse(e.str()) == e);
    }
    CHECK(ff.parse("w^2") == ff.parse("w+1"));
    CHECK(ff.parse("(w+1)*(w+1)") == ff.parse("w"));

    Tower rf = testing::q_qt();
    for (const char* text : {"0", "3/4", "t1^2-2", "(t1+1)/(t1-1)", "-t1"}) {
        TowerElement e = rf.parse(text);
        CHECK(rf.parse(e.str()) == e);
    }
    CHECK_THROWS_AS(rf.parse("t2"), ValidationError);
    CHECK_THROWS_AS(rf.parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(rf.parse("q"), ParseError);
}

TEST_CASE("two indeterminate rational tower") {
    Tower t(TowerSpec::rational_function(2));
    TowerElement t1 = t.indeterminate(1);
    TowerElement t2 = t.indeterminate(2);
    CHECK(t1.level() == 1);
    CHECK(t2.level() == 2);
    CHECK((t1 * t2).level() == 2);
    CHECK((t2 / t2).level() == 0);
    CHECK((t2 * t1 / t2).level() == 1);  // cancellation renormalizes

    // independence over Q(t1): group by monomials in t2
    std::vector<TowerElement> fam{t.one(), t2, t2 * t2};
    CHECK(t.linear_independent_over(fam, 1));
    std::vector<TowerElement> dep{t1, t1 * t2, t2};  // t1*(t2) - (t1 t2) = 0 over Q(t1)
    CHECK_FALSE(t.linear_independent_over(dep, 1));
    CHECK(t.linear_independent_over(dep, 0));

    // mixed fractions keep exact arithmetic
    TowerElement a = (t1 + t.one()) / (t2 - t.from_int(2));
    TowerElement b = (t2 - t.from_int(2)) / (t1 + t.one());
    CHECK(a * b == t.one());
    CHECK(t.parse(a.str()) == a);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        TowerElement x = t.random_element(rng, 2);
        TowerElement y = t.random_element(rng, 1);
        TowerElement z = t.random_element(rng, 2);
        CHECK((x + y) * z == x * z + y * z);
        if (!z.is_zero()) CHECK((x / z) * z == x);
    }
}

TEST_CASE("tower windows re-tag levels") {
    Tower t(TowerSpec::finite_field(2, {1, 2, 4}));
    TowerElement w = t.generator();  // generator of F16, level 2
    CHECK(w.level() == 2);
    Tower upper = t.window(1, 2);  // F4 <= F16
    TowerElement adopted = upper.adopt(w);
    CHECK(adopted.level() == 1);
    Tower lower = t.window(0, 1);  // F2 <= F4
    CHECK_THROWS_AS(lower.adopt(w), LevelViolation);
    TowerElement one = lower.adopt(t.one());
    CHECK(one.level() == 0);
}
