#include <catch2/catch_amalgamated.hpp>

#include "starrees/errors.hpp"
#include "starrees/rees_height2.hpp"
#include "support.hpp"

using namespace starrees;
using test::P;
using test::Ps;

namespace {
const Field Q = Field::rationals();
RingPtr xy(MonomialOrder o = MonomialOrder::degrevlex()) {
    return make_ring(VarSpace(2, 0, false, {}, {"x", "y"}), Q, o);
}
} // namespace

TEST_CASE("reduced bases", "[groebner]") {
    RingPtr L = xy(MonomialOrder::lex());
    auto gb = buchberger_reduced(L, Ps(L, {"x^2-1", "x*y-1"}));
    auto b = gb.basis();
    std::sort(b.begin(), b.end(), [](const Poly& p, const Poly& q) { return p.to_string() < q.to_string(); });
    CHECK(b == Ps(L, {"x - y", "y^2 - 1"}));
    CHECK(gb.member(P(L, "y^2-1")));
    CHECK(gb.member(Poly(L)));

    RingPtr R = xy();
    auto g2 = buchberger_reduced(R, Ps(R, {"y", "x"}));
    CHECK(g2.basis().size() == 2);
    CHECK_FALSE(g2.member(P(R, "1")));
    CHECK_FALSE(g2.is_unit_ideal());

    RingPtr S = make_ring(VarSpace(2, 2, false, {}, {"x", "y"}), Q);
    auto g3 = buchberger_reduced(S, Ps(S, {"x*T2-y*T1"}));
    REQUIRE(g3.basis().size() == 1);
    CHECK(test::scalar_multiple(g3.basis()[0], P(S, "x*T2-y*T1")));
}

TEST_CASE("ideal equality and containment", "[groebner]") {
    RingPtr R = xy();
    CHECK(ideal_equal(R, Ps(R, {"x", "y"}), Ps(R, {"y", "x+y"})));
    CHECK_FALSE(ideal_equal(R, Ps(R, {"x"}), Ps(R, {"x^2"})));
    CHECK(ideal_contains(R, Ps(R, {"x"}), Ps(R, {"x^2"})));
    CHECK_FALSE(ideal_contains(R, Ps(R, {"x^2"}), Ps(R, {"x"})));
}

TEST_CASE("elimination", "[groebner]") {
    RingPtr R = make_ring(VarSpace(2, 0, true, {}, {"x", "y"}), Q);
    auto e = eliminate(R, Ps(R, {"s-x", "s^2-y"}), {R->vars.aux()});
    CHECK(ideal_equal(R, e, Ps(R, {"x^2-y"})));

    RingPtr S = make_ring(VarSpace(2, 2, false, {}, {"x", "y"}), Q);
    CHECK(eliminate(S, Ps(S, {"x*T2-y*T1"}), {0, 1}).empty());

    RingPtr T = make_ring(VarSpace(3, 3, true), Q);
    auto r = eliminate(T, Ps(T, {"T1-s*x2*x3", "T2-s*x1*x3", "T3-s*x1*x2"}), {T->vars.aux()});
    auto gb = buchberger_reduced(T, r);
    CHECK(gb.member(P(T, "x1*T1-x2*T2")));
    CHECK(gb.member(P(T, "x2*T2-x3*T3")));
}

TEST_CASE("intersection", "[groebner]") {
    RingPtr R = xy();
    CHECK(ideal_equal(R, ideal_intersect(R, Ps(R, {"x"}), Ps(R, {"y"})), Ps(R, {"x*y"})));
    auto J = Ps(R, {"x^2", "x*y^3"});
    CHECK(ideal_equal(R, ideal_intersect(R, J, Ps(R, {"1"})), J));
}

TEST_CASE("Rees oracle", "[groebner]") {
    RingPtr X1 = make_ring(VarSpace(1, 0), Q);
    RingPtr R1 = make_ring(VarSpace(1, 1), Q);
    CHECK(rees_ideal_oracle(R1, Ps(X1, {"x1"})).empty());

    RingPtr X2 = make_ring(VarSpace(2, 0), Q);
    RingPtr R2 = make_ring(VarSpace(2, 2), Q);
    CHECK(ideal_equal(R2, rees_ideal_oracle(R2, Ps(X2, {"x1", "x2"})), Ps(R2, {"x1*T2-x2*T1"})));

    RingPtr X3 = make_ring(VarSpace(3, 0), Q);
    RingPtr R3 = make_ring(VarSpace(3, 3), Q);
    auto J = rees_ideal_oracle(R3, Ps(X3, {"x2*x3", "x1*x3", "x1*x2"}));
    CHECK(ideal_equal(R3, J, Ps(R3, {"x1*T1-x2*T2", "x2*T2-x3*T3"})));
    // every element vanishes after T_j -> g_j*s
    for (const auto& f : J) CHECK(rees_substitute(f, Ps(X3, {"x2*x3", "x1*x3", "x1*x2"})).is_zero());
}

TEST_CASE("all maximal minors of the example generate the closed-form ideal", "[groebner]") {
    auto cfg = test::example_cfg();
    RingPtr R = fiber_ring(cfg);
    auto minors = all_max_minors(jacobian_dual(cfg, R));
    auto closed = Ps(R, {"T1*T2*T3*T5-T1*T2*T3*T4+T1*T2*T4*T5+T1*T4*T3*T5+T4*T2*T3*T5",
                         "3*T1*T2*T3*T6-T1*T2*T3*T4+2*T1*T2*T4*T6+T1*T4*T3*T6",
                         "T1*T2*T4*T5-2*T1*T2*T4*T6-T1*T2*T5*T6+T1*T4*T5*T6+2*T2*T4*T5*T6",
                         "T1*T4*T3*T5-T1*T6*T3*T4-T1*T6*T4*T5-2*T1*T6*T3*T5+T4*T6*T3*T5",
                         "-T4*T2*T3*T5+2*T6*T2*T4*T5+T6*T4*T3*T5+3*T6*T2*T3*T5"});
    CHECK(ideal_equal(R, minors, closed));
}

TEST_CASE("limits turn into resource errors", "[groebner]") {
    RingPtr R = make_ring(VarSpace(4, 0), Q);
    GroebnerLimits tiny;
    tiny.max_basis = 2;
    try {
        buchberger_reduced(R, Ps(R, {"x1^3-x2*x3", "x2^3-x3*x4", "x3^3-x4*x1", "x4^3-x1*x2"}), tiny);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Resource);
    }
}
