#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mqa/errors.hpp"
#include "mqa/structure.hpp"

using namespace mqa;
using namespace mqa::testing;

namespace {

MixedDataPtr rose2_data() {
    QuiverPtr q = rose2_quiver();
    HereditaryChain chain(q, {VertexSet::full(q)});
    Tower t = f2_f4();
    return make_mixed_data(q, chain, t.window(1, 1));
}

}  // namespace

TEST_CASE("ghost contraction products") {
    auto d = rose2_data();
    LpaElement a = LpaElement::real_edge(d, d->quiver->edge_index("a"));
    LpaElement b = LpaElement::real_edge(d, d->quiver->edge_index("b"));
    LpaElement ga = LpaElement::ghost_edge(d, d->quiver->edge_index("a"));
    LpaElement gb = LpaElement::ghost_edge(d, d->quiver->edge_index("b"));
    LpaElement pv = LpaElement::vertex_idempotent(d, 0);

    CHECK((ga * b).is_zero());   // a-bar b = 0
    CHECK(ga * a == pv);         // a-bar a = p_v
    CHECK(gb * b == pv);

    // (a b-bar)(b c-bar) = a c-bar with c = a here
    LpaElement ab = a * gb;
    LpaElement ba = b * ga;
    CHECK(ab * ba == a * ga);
}

TEST_CASE("special edge choice") {
    auto d = et_data(f2_f4());
    SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
    // vertex 1 must pick the level-minimal loop f, not the lexicographically
    // smaller crossing edge e
    CHECK(choice.special_edge(0) == d->quiver->edge_index("f"));
    CHECK(choice.special_edge(1) == -1);  // sink

    auto dt = trivial_chain_data(et_quiver(), Tower(TowerSpec::constants(0)));
    SpecialEdgeChoice trivial_choice = SpecialEdgeChoice::least(dt);
    CHECK(trivial_choice.special_edge(0) == dt->quiver->edge_index("e"));

    CHECK_THROWS_AS(SpecialEdgeChoice::explicit_map(d, {{"1", "e"}}), ValidationError);
    CHECK_NOTHROW(SpecialEdgeChoice::explicit_map(d, {{"1", "f"}}));
    CHECK_NOTHROW(SpecialEdgeChoice::explicit_map(dt, {{"1", "e"}}));
}

TEST_CASE("reduction to normal form") {
    auto d = rose2_data();
    SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);  // special edge a
    LpaElement a = LpaElement::real_edge(d, d->quiver->edge_index("a"));
    LpaElement b = LpaElement::real_edge(d, d->quiver->edge_index("b"));
    LpaElement ga = LpaElement::ghost_edge(d, d->quiver->edge_index("a"));
    LpaElement gb = LpaElement::ghost_edge(d, d->quiver->edge_index("b"));
    LpaElement pv = LpaElement::vertex_idempotent(d, 0);

    CHECK(reduce(a * ga, choice) == pv - b * gb);  // a a-bar -> p_v - b b-bar
    CHECK(reduce(pv, choice) == pv);
    CHECK(reduce(a * ga + b * gb, choice) == pv);  // (CK2) restated

    // reduce is idempotent
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        LpaElement x = random_lpa(d, rng);
        LpaElement nf = reduce(x, choice);
        CHECK(reduce(nf, choice) == nf);
    }
}

TEST_CASE("confluence under randomized strategies") {
    std::mt19937 rng(23);
    std::vector<MixedDataPtr> datas{rose2_data(), et_data(f2_f4())};
    {
        QuiverPtr q = cyc4_quiver();
        HereditaryChain chain(q, {VertexSet::of_ids(q, {"3", "4"}), VertexSet::full(q)});
        datas.push_back(make_mixed_data(q, chain, f2_f4()));
    }
    for (const auto& d : datas) {
        SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
        for (int trial = 0; trial < 60; ++trial) {
            LpaElement x = random_lpa(d, rng);
            LpaElement nf = reduce(x, choice);
            for (int k = 0; k < 5; ++k)
                CHECK(reduce_randomized(x, choice, rng) == nf);
        }
    }
}

TEST_CASE("relation suite") {
    for (const auto& d : {rose2_data(), et_data(f2_f4())}) {
        SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
        for (const auto& check : check_relations(d, choice)) {
            INFO(check.family, " ", check.instance);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("level preservation under mul and reduce") {
    std::mt19937 rng(29);
    for (const Tower& tower : {f2_f4(), q_qt()}) {
        auto d = et_data(tower);
        SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
        for (int trial = 0; trial < 100; ++trial) {
            LpaElement x = random_lpa(d, rng);
            LpaElement y = random_lpa(d, rng);
            CHECK_NOTHROW((x + y).validate());
            CHECK_NOTHROW((x * y).validate());
            CHECK_NOTHROW(reduce(x * y, choice).validate());
        }
    }
}

TEST_CASE("associativity modulo reduction") {
    std::mt19937 rng(37);
    auto d = rose2_data();
    SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
    for (int trial = 0; trial < 40; ++trial) {
        LpaElement x = random_lpa(d, rng, 2, 2);
        LpaElement y = random_lpa(d, rng, 2, 2);
        LpaElement z = random_lpa(d, rng, 2, 2);
        CHECK((x * y) * z == x * (y * z));
        CHECK(reduce(reduce(x * y, choice) * z, choice) ==
              reduce(x * reduce(y * z, choice), choice));
    }
}

TEST_CASE("mu_v invertibility witnesses") {
    auto d = et_data(f2_f4());
    SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
    CHECK(verify_mu_inverse(d, d->quiver->vertex_index("1"), choice));
    CHECK_THROWS_AS(verify_mu_inverse(d, d->quiver->vertex_index("2"), choice), SinkVertex);

    auto r = rose2_data();
    CHECK(verify_mu_inverse(r, 0, SpecialEdgeChoice::least(r)));

    auto a2 = trivial_chain_data(a2_quiver(), Tower(TowerSpec::constants(0)));
    CHECK(verify_mu_inverse(a2, 0, SpecialEdgeChoice::least(a2)));
}

TEST_CASE("quotient map") {
    auto d = trivial_chain_data(et_quiver(), f2_f4());
    VertexSet h = VertexSet::of_ids(d->quiver, {"2"});
    LpaElement f = LpaElement::real_edge(d, d->quiver->edge_index("f"));
    LpaElement e = LpaElement::real_edge(d, d->quiver->edge_index("e"));
    LpaElement p2 = LpaElement::vertex_idempotent(d, 1);
    LpaElement p1 = LpaElement::vertex_idempotent(d, 0);
    LpaElement ge = LpaElement::ghost_edge(d, d->quiver->edge_index("e"));

    LpaElement qf = quotient_map(f, h);
    CHECK(qf.terms().size() == 1);
    CHECK(qf.terms().begin()->first.real.str() == "f");
    CHECK(quotient_map(e, h).is_zero());
    CHECK(quotient_map(p2, h).is_zero());
    CHECK(quotient_map(p1 + e * ge, h) == quotient_map(p1, h));

    // homomorphism on random pairs, with matching target data
    MixedDataPtr target = quotient_data(d, h);
    SpecialEdgeChoice tchoice = SpecialEdgeChoice::least(target);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        LpaElement x = random_lpa(d, rng);
        LpaElement y = random_lpa(d, rng);
        CHECK(quotient_map_to(x * y, target, h) ==
              quotient_map_to(x, target, h) * quotient_map_to(y, target, h));
        CHECK(reduce(quotient_map_to(x * y, target, h), tchoice) ==
              reduce(quotient_map_to(x, target, h) * quotient_map_to(y, target, h), tchoice));
    }

    // relations of L(E) map to relations of L(E/H): every surviving emitter
    // still satisfies (CK2) after the map
    for (int v = 0; v < target->quiver->num_vertices(); ++v) {
        if (target->quiver->is_sink(v)) continue;
        LpaElement sum = LpaElement::zero(target);
        for (int te : target->quiver->out_edges(v))
            sum = sum + LpaElement::real_edge(target, te) * LpaElement::ghost_edge(target, te);
        CHECK(reduce(sum, tchoice) == LpaElement::vertex_idempotent(target, v));
    }
}

TEST_CASE("normal form monomial count matches the matrix model") {
    // Acyclic quivers: L(E) is isomorphic to a direct sum of matrix algebras
    // indexed by sinks, of size (number of paths into the sink). Compare that
    // model's dimension, computed by F2 row reduction of all monomial images,
    // with the count of irreducible monomials.
    for (QuiverPtr q : {a2_quiver(), chain3_quiver(), edgeless2_quiver()}) {
        auto d = trivial_chain_data(q, Tower(TowerSpec::finite_field(2, {1})));
        SpecialEdgeChoice choice = SpecialEdgeChoice::least(d);
        unsigned maxlen = q->num_vertices();

        // model: rows indexed by (sink, path-to-sink) pairs
        std::vector<Path> paths = all_paths(q, maxlen);
        std::vector<std::pair<size_t, size_t>> cells;  // (row path idx, col path idx)
        std::vector<size_t> sink_paths;
        for (size_t i = 0; i < paths.size(); ++i)
            if (q->is_sink(paths[i].dst())) sink_paths.push_back(i);
        auto cell_index = [&](size_t a, size_t b) {
            // dense index over pairs of sink paths with equal sink
            for (size_t k = 0; k < cells.size(); ++k)
                if (cells[k] == std::make_pair(a, b)) return k;
            cells.emplace_back(a, b);
            return cells.size() - 1;
        };
        FpSpan span(2);
        unsigned count_normal = 0;
        for (const auto& alpha : paths) {
            for (const auto& beta : paths) {
                if (alpha.dst() != beta.dst()) continue;
                bool redex = !alpha.is_trivial() && !beta.is_trivial() &&
                             alpha.edges().back() == beta.edges().back() &&
                             choice.special_edge(q->edge(alpha.edges().back()).src) ==
                                 alpha.edges().back();
                if (!redex) ++count_normal;
                // model image of alpha beta-bar: sum over extensions gamma of
                // the midpoint to sinks of the matrix unit (alpha gamma, beta gamma)
                std::vector<unsigned> vec(sink_paths.size() * sink_paths.size() + 4096, 0);
                for (size_t gi : sink_paths) {
                    auto gamma = paths[gi];
                    if (gamma.src() != alpha.dst()) continue;
                    auto row = alpha.concat(gamma);
                    auto col = beta.concat(gamma);
                    if (!row || !col) continue;
                    size_t ri = 0, ci = 0;
                    for (size_t i = 0; i < paths.size(); ++i) {
                        if (paths[i].same_as(*row)) ri = i;
                        if (paths[i].same_as(*col)) ci = i;
                    }
                    size_t cell = cell_index(ri, ci);
                    vec[cell] ^= 1;
                }
                span.insert(vec);
            }
        }
        unsigned model_dim = 0;
        for (size_t i : sink_paths) {
            unsigned n = 0;
            for (size_t j : sink_paths)
                if (paths[j].dst() == paths[i].dst()) ++n;
            model_dim += 1;  // placeholder, recomputed below
            (void)n;
        }
        // closed form: sum over sinks of (paths into the sink)^2
        model_dim = 0;
        for (int v = 0; v < q->num_vertices(); ++v) {
            if (!q->is_sink(v)) continue;
            unsigned n = 0;
            for (const auto& p : paths)
                if (p.dst() == v) ++n;
            model_dim += n * n;
        }
        CHECK(span.rank() == model_dim);
        CHECK(count_normal == model_dim);
    }
}

TEST_CASE("normal form counts agree across special edge choices") {
    // The algebra does not depend on the rewriting orientation: the graded
    // count of irreducible monomials is the same for every choice.
    auto d = trivial_chain_data(rose2_quiver(), Tower(TowerSpec::finite_field(2, {1})));
    SpecialEdgeChoice choice_a = SpecialEdgeChoice::explicit_map(d, {{"v", "a"}});
    SpecialEdgeChoice choice_b = SpecialEdgeChoice::explicit_map(d, {{"v", "b"}});
    auto count_normal = [&](const SpecialEdgeChoice& choice, unsigned maxlen) {
        auto paths = all_paths(d->quiver, maxlen);
        std::map<unsigned, unsigned> by_total;
        for (const auto& alpha : paths) {
            for (const auto& beta : paths) {
                if (alpha.dst() != beta.dst()) continue;
                bool redex = !alpha.is_trivial() && !beta.is_trivial() &&
                             alpha.edges().back() == beta.edges().back() &&
                             choice.special_edge(
                                 d->quiver->edge(alpha.edges().back()).src) ==
                                 alpha.edges().back();
                if (!redex) ++by_total[alpha.length() + beta.length()];
            }
        }
        return by_total;
    };
    CHECK(count_normal(choice_a, 3) == count_normal(choice_b, 3));

    auto et = trivial_chain_data(et_quiver(), Tower(TowerSpec::finite_field(2, {1})));
    SpecialEdgeChoice et_e = SpecialEdgeChoice::explicit_map(et, {{"1", "e"}});
    SpecialEdgeChoice et_f = SpecialEdgeChoice::explicit_map(et, {{"1", "f"}});
    auto count_et = [&](const SpecialEdgeChoice& choice) {
        auto paths = all_paths(et->quiver, 3);
        std::map<unsigned, unsigned> by_total;
        for (const auto& alpha : paths) {
            for (const auto& beta : paths) {
                if (alpha.dst() != beta.dst()) continue;
                bool redex = !alpha.is_trivial() && !beta.is_trivial() &&
                             alpha.edges().back() == beta.edges().back() &&
                             choice.special_edge(
                                 et->quiver->edge(alpha.edges().back()).src) ==
                                 alpha.edges().back();
                if (!redex) ++by_total[alpha.length() + beta.length()];
            }
        }
        return by_total;
    };
    CHECK(count_et(et_e) == count_et(et_f));
}

TEST_CASE("lpa element text round trip") {
    auto d = et_data(f2_f4());
    TowerElement w = d->tower.generator();
    LpaElement x =
        LpaElement::real_edge(d, d->quiver->edge_index("e")).scaled(w) +
        LpaElement::vertex_idempotent(d, 0) +
        LpaElement::single(
            d,
            LpaMonomial{path_of(d, {"f", "e"}), path_of(d, {"e"})},
            w + d->tower.one());
    std::string text = x.str();
    CHECK(LpaElement::parse(d, text) == x);
    CHECK(LpaElement::parse(d, "(w) * ~e").terms().begin()->first.ghost.str() == "e");
    CHECK(LpaElement::parse(d, "0").is_zero());
    CHECK_THROWS_AS(LpaElement::parse(d, "(1) * ~e.f"), ParseError);
    CHECK_THROWS_AS(LpaElement::parse(d, "(1) * e.~f"), ValidationError);  // midpoints differ

    // ghost path order: a.~b means a b-bar
    auto r = rose2_data();
    LpaElement ab = LpaElement::parse(r, "(1) * a.~b");
    CHECK(ab.terms().begin()->first.real.str() == "a");
    CHECK(ab.terms().begin()->first.ghost.str() == "b");
    LpaElement two_ghost = LpaElement::parse(r, "(1) * ~a.~b");
    CHECK(two_ghost.terms().begin()->first.ghost.str() == "b.a");
    CHECK(LpaElement::parse(r, two_ghost.str()) == two_ghost);
}
