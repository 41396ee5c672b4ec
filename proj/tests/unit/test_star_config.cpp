#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "starrees/errors.hpp"
#include "starrees/groebner.hpp"
#include "starrees/rees_height2.hpp"
#include "support.hpp"

using namespace starrees;
using test::P;
using test::Ps;

namespace {
const Field Q = Field::rationals();

StarConfig coordinate_cfg(int n, int c) { return StarConfig(ScalarMatrix(n, 0, Q), c); }

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("normalizing forms", "[star]") {
    RingPtr X = make_ring(VarSpace(4, 0), Q);
    auto raw_forms = Ps(X, {"x1", "x2", "x3", "x4", "x1+x2+x3+x4", "x2+2*x3+3*x4"});
    ScalarMatrix raw(6, 4, Q);
    for (int i = 0; i < 6; ++i)
        for (const auto& t : raw_forms[i].terms())
            for (int v = 0; v < 4; ++v)
                if (t.mono[v]) raw.at(i, v) = t.coeff;
    Normalization nm = normalize_forms(raw, 2);
    CHECK(nm.identity);
    CHECK(nm.cfg.n() == 4);
    CHECK(nm.cfg.U() == ScalarMatrix::from_ints(Q, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}));

    // a shuffled, rescaled input: the change of coordinates reproduces the normalized forms
    std::mt19937 rng(2);
    for (int k = 0; k < 30; ++k) {
        ScalarMatrix m(6, 4, Q);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Scalar::from_int(Q, long(rng() % 9) - 4);
        std::optional<Normalization> got;
        try {
            got = normalize_forms(m, 2);
        } catch (const Error&) {
            continue; // rank deficient draw
        }
        const Normalization& r = *got;
        ScalarMatrix prod = m * r.change_inverse;
        for (int i = 0; i < 6; ++i) {
            int pos = int(std::find(r.order.begin(), r.order.end(), i) - r.order.begin());
            REQUIRE(pos < 6);
            for (int j = 0; j < 4; ++j) {
                Scalar want = pos < 4 ? (pos == j ? Scalar::one(Q) : Scalar::zero(Q)) : r.cfg.U().at(j, pos - 4);
                CHECK(prod.at(i, j) == want);
            }
        }
    }
}

TEST_CASE("star generators", "[star]") {
    auto cfg = test::example_cfg();
    RingPtr X = cfg.x_ring();
    auto g = star_generators(cfg);
    REQUIRE(g.size() == 6);
    // g_i omits F_i, so F_i g_i is the same for every i
    auto F = cfg.forms(X);
    for (int i = 0; i + 1 < 6; ++i) CHECK(F[i] * g[i] == F[i + 1] * g[i + 1]);
    for (int t = 3; t <= 6; ++t)
        for (int c = 1; c <= t; ++c) CHECK(long(omitted_sets(t, c).size()) == binom(t, t - c + 1));
    auto g3 = star_generators(cfg.with_c(3));
    CHECK(g3.size() == 15);
}

TEST_CASE("regular sequences and the star condition", "[star]") {
    auto cfg = test::example_cfg();
    CHECK(is_regular_sequence(cfg, {1, 5, 6}));
    CHECK_FALSE(is_regular_sequence(cfg, {2, 3, 4, 6}));
    CHECK(verify_star_condition(cfg));
    CHECK(pairwise_independent(cfg));
    // {x1,x2,x3,x2+x3}: pairwise independent, but x2,x3,L1 are dependent
    auto cor = test::cfg_of({{0}, {1}, {1}});
    CHECK(pairwise_independent(cor));
    CHECK_FALSE(verify_star_condition(cor));
}

TEST_CASE("rank criterion", "[star]") {
    auto cfg = test::example_cfg();
    CHECK_FALSE(subset_rank_condition(cfg, 4));
    CHECK(subset_rank_condition(cfg, 3));
    CHECK_FALSE(all_s_subsets_regular(cfg, 4));
    CHECK(all_s_subsets_regular(cfg, 3));
}

TEST_CASE("G_s", "[star]") {
    auto cfg = test::example_cfg();
    GsResult g = check_Gs(cfg, 4);
    CHECK_FALSE(g.holds);
    CHECK(g.witness == std::vector<int>{2, 3, 4, 6});
    CHECK(check_Gs(cfg, 3).holds);
    // monotone in s
    for (int s = 2; s <= cfg.n(); ++s)
        if (!check_Gs(cfg, s).holds)
            for (int s2 = s; s2 <= cfg.n(); ++s2) CHECK_FALSE(check_Gs(cfg, s2).holds);
}

TEST_CASE("linear type", "[star]") {
    CHECK(linear_type_check(coordinate_cfg(3, 2)));
    CHECK(linear_type_check(coordinate_cfg(4, 2)));
    CHECK_FALSE(linear_type_check(coordinate_cfg(4, 3)));
    CHECK_FALSE(linear_type_check(test::example_cfg()));
    // linear type means the oracle gives back the linear relations
    for (auto cfg : {coordinate_cfg(3, 2), coordinate_cfg(4, 2)}) {
        REQUIRE(linear_type_check(cfg));
        RingPtr R = cfg.rees_ring();
        CHECK(ideal_equal(R, rees_ideal_oracle(R, star_generators(cfg)), linear_relations(cfg, R)));
    }
}

TEST_CASE("localization", "[star]") {
    auto cfg = coordinate_cfg(4, 2);
    CHECK(localize(cfg, {1}).kind == Localization::Kind::Unit);
    auto ci = localize(cfg, {1, 2});
    CHECK(ci.kind == Localization::Kind::CompleteIntersection);
    CHECK(ci.forms == std::vector<int>{1, 2});
    auto st = localize(cfg, {1, 2, 3});
    CHECK(st.kind == Localization::Kind::StarConfiguration);
    CHECK(st.forms == std::vector<int>{1, 2, 3});
    CHECK(closure(test::example_cfg(), {2, 3, 4}) == std::vector<int>{2, 3, 4, 6});
}

TEST_CASE("non-linear-type locus", "[star]") {
    auto primes = nlt_minimal_primes(test::example_cfg());
    CHECK(std::find(primes.begin(), primes.end(), std::vector<int>{2, 3, 4, 6}) != primes.end());
    CHECK(nlt_minimal_primes(test::cfg_of({{1}, {1}, {1}})).empty());
    CHECK(nlt_minimal_primes(coordinate_cfg(4, 3)).empty());
}

TEST_CASE("bad parameters", "[star]") {
    CHECK_THROWS_AS(StarConfig(ScalarMatrix::from_ints(Q, {{1}, {1}}), 0), Error);
    CHECK_THROWS_AS(StarConfig(ScalarMatrix::from_ints(Q, {{1}, {1}}), 4), Error);
}
