#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "graphalg/classify.hpp"
#include "graphalg/compare.hpp"
#include "graphalg/enumerate.hpp"
#include "graphalg/ktheory.hpp"
#include "support.hpp"

using namespace graphalg;
using namespace testsupport;

namespace {

bool has_just(const Verdict& v, const char* j) {
    return std::find(v.justifications.begin(), v.justifications.end(), j) !=
           v.justifications.end();
}

}  // namespace

TEST_CASE("identical purely infinite graphs compare YES") {
    Verdict v = compare(rose(2), rose(2), Relation::isomorphism, AlgebraKind::cstar);
    CHECK(v.answer == Answer::YES);
    CHECK(has_just(v, justification::kp_classification));
}

TEST_CASE("K0 mismatch settles NO") {
    Verdict v = compare(rose(2), rose(3), Relation::isomorphism, AlgebraKind::cstar);
    CHECK(v.answer == Answer::NO);
    CHECK(has_just(v, justification::k0_mismatch));
    // Z vs trivial group on the leavitt side too
    v = compare(single_loop(), rose(2), Relation::isomorphism, AlgebraKind::leavitt);
    CHECK(v.answer == Answer::NO);
    CHECK(has_just(v, justification::k0_mismatch));
    v = compare(rose(2), rose(4), Relation::isomorphism, AlgebraKind::leavitt);
    CHECK(v.answer == Answer::NO);
}

TEST_CASE("K1 mismatch settles NO") {
    // K0(single loop) = Z = K0(v->w) as groups, and the K1 check comes before
    // the unit-class check, so the loop/edge pair pins the K1 rule
    Verdict v = compare(single_loop(), single_edge(), Relation::isomorphism, AlgebraKind::cstar);
    CHECK(v.answer == Answer::NO);
    CHECK(v.justifications == std::vector<std::string>{justification::k1_mismatch});
}

TEST_CASE("finite dimensional rule") {
    Graph m2 = single_edge();
    Graph m2b("F", {"a", "b"}, {{"f", 0, 1}});
    Graph m3("G", {"u", "v", "w"}, {{"e1", 0, 1}, {"e2", 1, 2}});
    SUBCASE("equal block multisets: iso YES") {
        Verdict v = compare(m2, m2b, Relation::isomorphism, AlgebraKind::leavitt);
        CHECK(v.answer == Answer::YES);
        CHECK(has_just(v, justification::prop_structure));
    }
    SUBCASE("M2 vs M3: iso NO, morita YES") {
        // units (2) vs (3) differ, so the invariant mismatch rule fires first
        Verdict v = compare(m2, m3, Relation::isomorphism, AlgebraKind::cstar);
        CHECK(v.answer == Answer::NO);
        Verdict w = compare(m2, m3, Relation::morita, AlgebraKind::cstar);
        CHECK(w.answer == Answer::YES);
        CHECK(has_just(w, justification::morita_block_count));
    }
    SUBCASE("block count is a Morita invariant") {
        Graph two_blocks("E", {"v1", "w1", "v2", "w2"}, {{"e1", 0, 1}, {"e2", 2, 3}});
        Graph m4("F", {"a", "b", "c", "d"}, {{"f1", 0, 3}, {"f2", 1, 3}, {"f3", 2, 3}});
        Verdict v = compare(two_blocks, m4, Relation::morita, AlgebraKind::leavitt);
        CHECK(v.answer == Answer::NO);
        CHECK(has_just(v, justification::morita_block_count));
    }
    SUBCASE("equal K-theory pairs with different block multisets still separate") {
        // blocks {1,5} vs {2,3}: units (1,5) and (2,3) both have gcd 1 in
        // Z^2, so no invariant mismatch fires; the block structure decides
        Graph a("A", {"u", "x1", "x2", "x3", "x4", "t"},
                {{"e1", 1, 5}, {"e2", 2, 5}, {"e3", 3, 5}, {"e4", 4, 5}});
        Graph b("B", {"v", "w", "p", "q", "r"},
                {{"f1", 0, 1}, {"f2", 2, 3}, {"f3", 3, 4}});
        REQUIRE(finite_dimensional_structure(a) == std::vector<BigInt>{BigInt(1), BigInt(5)});
        REQUIRE(finite_dimensional_structure(b) == std::vector<BigInt>{BigInt(2), BigInt(3)});
        REQUIRE(pair_iso(k0(a), k0(b)));
        Verdict v = compare(a, b, Relation::isomorphism, AlgebraKind::cstar);
        CHECK(v.answer == Answer::NO);
        CHECK(has_just(v, justification::prop_structure));
        // two blocks on each side, so they are Morita equivalent
        Verdict w = compare(a, b, Relation::morita, AlgebraKind::leavitt);
        CHECK(w.answer == Answer::YES);
    }
}

TEST_CASE("purely infinite rule") {
    SUBCASE("rose heads: leavitt iso YES across head lengths for n = 2") {
        for (size_t k = 1; k <= 4; ++k)
            for (size_t j = 1; j <= 4; ++j) {
                Verdict v = compare(rose(2).mat_n(k), rose(2).mat_n(j), Relation::isomorphism,
                                    AlgebraKind::leavitt);
                CHECK(v.answer == Answer::YES);
                CHECK(has_just(v, justification::alps_det_sign));
            }
    }
    SUBCASE("R3 vs its head extension: unit classes differ") {
        Verdict v = compare(rose(3), rose(3).mat_n(2), Relation::isomorphism, AlgebraKind::cstar);
        CHECK(v.answer == Answer::NO);
        CHECK(has_just(v, justification::unit_mismatch));
        // but they are Morita equivalent
        Verdict w = compare(rose(3), rose(3).mat_n(2), Relation::morita, AlgebraKind::cstar);
        CHECK(w.answer == Answer::YES);
        Verdict l = compare(rose(3), rose(3).mat_n(2), Relation::morita, AlgebraKind::leavitt);
        CHECK(l.answer == Answer::YES);
    }
}

TEST_CASE("open sign question: equal pairs with opposite det signs") {
    // both purely infinite simple with K0 = Z/2 and unit class 1, but
    // det(I - A^t) = -2 versus +2
    Graph neg = rose(3);
    Graph pos = from_matrix({{3, 1}, {2, 3}});
    REQUIRE(is_purely_infinite_simple(pos));
    REQUIRE(det_sign(neg).value == DetSignValue::negative);
    REQUIRE(det_sign(pos).value == DetSignValue::positive);
    REQUIRE(pair_iso(k0(neg), k0(pos)));

    Verdict v = compare(neg, pos, Relation::isomorphism, AlgebraKind::leavitt);
    CHECK(v.answer == Answer::UNKNOWN);
    CHECK(has_just(v, justification::open_sign));
    Verdict w = compare(neg, pos, Relation::morita, AlgebraKind::leavitt);
    CHECK(w.answer == Answer::UNKNOWN);
    // the C*-side is settled either way
    Verdict c = compare(neg, pos, Relation::isomorphism, AlgebraKind::cstar);
    CHECK(c.answer == Answer::YES);
    CHECK(has_just(c, justification::kp_classification));
}

TEST_CASE("outside settled regimes") {
    // two non-simple cyclic graphs with identical invariants
    Graph a("A", {"v", "w"}, {{"e", 0, 0}, {"f", 1, 1}});
    Verdict v = compare(a, a, Relation::isomorphism, AlgebraKind::cstar);
    CHECK(v.answer == Answer::UNKNOWN);
    CHECK(has_just(v, justification::outside));
}

TEST_CASE("stabilized comparison") {
    SUBCASE("M2 vs M3 blocks stabilize to the same algebra") {
        Graph m2 = single_edge();
        Graph m3("G", {"u", "v", "w"}, {{"e1", 0, 1}, {"e2", 1, 2}});
        Verdict v = compare_stabilized(stabilize(m2), stabilize(m3), Relation::isomorphism,
                                       AlgebraKind::cstar);
        CHECK(v.answer == Answer::YES);
        CHECK(has_just(v, justification::minfty_bridge));
    }
    SUBCASE("different K0 stays NO") {
        Verdict v = compare_stabilized(stabilize(rose(2)), stabilize(rose(3)),
                                       Relation::isomorphism, AlgebraKind::leavitt);
        CHECK(v.answer == Answer::NO);
    }
    SUBCASE("self comparison") {
        Verdict v = compare_stabilized(stabilize(rose(4)), stabilize(rose(4)),
                                       Relation::isomorphism, AlgebraKind::cstar);
        CHECK(v.answer == Answer::YES);
    }
}

TEST_CASE("symmetry and monotonicity on random pairs") {
    std::mt19937 rng(5555);
    std::vector<Graph> corpus = {rose(2), rose(3), single_edge(), single_loop()};
    for (int i = 0; i < 12; ++i) corpus.push_back(random_graph(rng, 3, 5));
    for (const Graph& E : corpus)
        for (const Graph& F : corpus)
            for (int rel = 0; rel < 2; ++rel)
                for (int alg = 0; alg < 2; ++alg) {
                    Verdict ef = compare(E, F, static_cast<Relation>(rel),
                                         static_cast<AlgebraKind>(alg));
                    Verdict fe = compare(F, E, static_cast<Relation>(rel),
                                         static_cast<AlgebraKind>(alg));
                    CHECK(ef.answer == fe.answer);
                }
    for (const Graph& E : corpus)
        for (const Graph& F : corpus)
            for (int alg = 0; alg < 2; ++alg) {
                Verdict iso = compare(E, F, Relation::isomorphism, static_cast<AlgebraKind>(alg));
                Verdict mor = compare(E, F, Relation::morita, static_cast<AlgebraKind>(alg));
                if (iso.answer == Answer::YES) CHECK(mor.answer == Answer::YES);
            }
}

TEST_CASE("conjecture consistency guard on random pairs") {
    std::mt19937 rng(8080);
    std::vector<Graph> corpus;
    for (int i = 0; i < 20; ++i) corpus.push_back(random_graph(rng, 3, 5));
    HarnessReport r = conjecture_harness(corpus);
    CHECK(r.guard_violations == 0);
    CHECK(r.monotonicity_violations == 0);
    CHECK(r.pair_count == corpus.size() * corpus.size());
}

TEST_CASE("full pipeline sweep never throws on desk-scale graphs") {
    std::mt19937 rng(123123);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 4, 7);
        k0(g);
        k1(g);
        det_sign(g);
        classify(g);
        k0(stabilize(g));
        Graph h = random_graph(rng, 4, 7);
        for (int rel = 0; rel < 2; ++rel)
            for (int alg = 0; alg < 2; ++alg)
                compare(g, h, static_cast<Relation>(rel), static_cast<AlgebraKind>(alg));
    }
    CHECK(true);
}

TEST_CASE("verdict answers always carry a justification") {
    std::mt19937 rng(9191);
    for (int i = 0; i < 60; ++i) {
        Graph E = random_graph(rng, 3, 4), F = random_graph(rng, 3, 4);
        for (int rel = 0; rel < 2; ++rel)
            for (int alg = 0; alg < 2; ++alg) {
                Verdict v = compare(E, F, static_cast<Relation>(rel),
                                    static_cast<AlgebraKind>(alg));
                CHECK_FALSE(v.justifications.empty());
            }
    }
}
