#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "starrees/errors.hpp"
#include "support.hpp"

using namespace starrees;
using test::P;

namespace {
RingPtr xt_ring(int nx, int nt) { return make_ring(VarSpace(nx, nt), Field::rationals()); }
} // namespace

TEST_CASE("polynomial arithmetic", "[polyring]") {
    RingPtr R = xt_ring(4, 6);
    CHECK((P(R, "T1+T2") * P(R, "T1-T2")) == P(R, "T1^2-T2^2"));
    CHECK((P(R, "x1*T1") + P(R, "-x1*T1")).is_zero());
    CHECK((P(R, "x1+x2+x3+x4") * P(R, "T5")) == P(R, "x1*T5+x2*T5+x3*T5+x4*T5"));
    RingPtr other = xt_ring(4, 5);
    try {
        (void)(P(R, "x1") + P(other, "x1"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IncompatibleOperands);
    }
}

TEST_CASE("content monomial", "[polyring]") {
    RingPtr R = xt_ring(4, 6);
    Poly m1 = P(R, "-T2*T3*T4*T5+2*T2*T4*T5*T6+T3*T4*T5*T6+3*T2*T3*T5*T6");
    CHECK(content_monomial(m1) == P(R, "T5").lm());
    Poly m6 = P(R, "T1*T2*T3*T5-T1*T2*T3*T4+T1*T2*T4*T5+T1*T3*T4*T5+T2*T3*T4*T5");
    CHECK(content_monomial(m6).is_one());
    CHECK(content_monomial(P(R, "x1^2*T1+x1*T1^2")) == P(R, "x1*T1").lm());
    try {
        content_monomial(Poly(R));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndefinedContent);
    }
    // content(m*f) = m*content(f)
    Poly mf = P(R, "x2*T3^2") * m1;
    CHECK(content_monomial(mf) == P(R, "x2*T3^2*T5").lm());
}

TEST_CASE("bidegree", "[polyring]") {
    RingPtr R = xt_ring(4, 6);
    auto b = bidegree(P(R, "T1*T2*T3*T5-T1*T2*T3*T4+T1*T2*T4*T5+T1*T3*T4*T5+T2*T3*T4*T5"));
    REQUIRE(b);
    CHECK(*b == std::pair<long, long>(0, 4));
    CHECK(*bidegree(P(R, "x1*T1-x2*T2")) == std::pair<long, long>(1, 1));
    CHECK_FALSE(bidegree(P(R, "x1*T1+T2")));
    // weights count toward the x-degree
    RingPtr W = make_ring(VarSpace(2, 1, false, {2, 3}), Field::rationals());
    CHECK(*bidegree(P(W, "x1^3*T1-x2^2*T1")) == std::pair<long, long>(6, 1));
    // additivity
    Poly f = P(R, "x1*T1-x2*T2"), g = P(R, "x3^2*T4*T5+x1*x2*T6^2");
    auto bf = *bidegree(f), bg = *bidegree(g), bfg = *bidegree(f * g);
    CHECK(bfg.first == bf.first + bg.first);
    CHECK(bfg.second == bf.second + bg.second);
}

TEST_CASE("print and parse round trip", "[polyring]") {
    std::mt19937 rng(3);
    for (const Field& f : {Field::rationals(), Field::prime(101)}) {
        for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
            RingPtr R = make_ring(VarSpace(3, 3, true), f, order);
            for (int k = 0; k < 100; ++k) {
                std::vector<Term> terms;
                int nt = 1 + rng() % 5;
                for (int j = 0; j < nt; ++j) {
                    Monomial m(R->vars.size());
                    for (int v = 0; v < m.size(); ++v) m.e[v] = rng() % 3;
                    long num = long(rng() % 21) - 10;
                    long den = 1 + rng() % 4;
                    Scalar c = f.is_rational() ? Scalar::rational(num, den) : Scalar::from_int(f, num);
                    terms.push_back({m, c});
                }
                Poly p = Poly::from_terms(R, terms);
                CHECK(Poly::parse(R, p.to_string()) == p);
            }
        }
    }
}

TEST_CASE("orders are multiplicative and total", "[polyring]") {
    // exhaustive over exponent vectors with entries in 0..2 in 3 variables
    std::vector<Monomial> ms;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                Monomial m(3);
                m.e[0] = a, m.e[1] = b, m.e[2] = c;
                ms.push_back(m);
            }
    std::vector<MonomialOrder> orders{MonomialOrder::degrevlex(), MonomialOrder::lex(),
                                      MonomialOrder::block({0}), MonomialOrder::block({1, 2})};
    for (const auto& ord : orders) {
        for (const auto& a : ms)
            for (const auto& b : ms) {
                int s = ord.compare(a, b);
                CHECK(s == -ord.compare(b, a));
                if (a != b) CHECK(s != 0);
                for (const auto& c : ms)
                    if (s < 0) CHECK(ord.compare(a * c, b * c) < 0);
            }
    }
}

TEST_CASE("block order eliminates its block first", "[polyring]") {
    RingPtr R = make_ring(VarSpace(2, 2), Field::rationals(), MonomialOrder::block({0}));
    // x1 beats any pure monomial in the other variables
    CHECK(P(R, "x1 + x2^5*T1^4").lm() == P(R, "x1").lm());
}

TEST_CASE("substitution and embedding", "[polyring]") {
    RingPtr R = xt_ring(2, 2);
    RingPtr S = xt_ring(2, 0);
    Poly f = P(R, "x2*T1 - x1*T2");
    Poly img = substitute(f, S, {P(S, "x1"), P(S, "x2"), P(S, "x1"), P(S, "x2")});
    CHECK(img.is_zero());
    RingPtr big = xt_ring(2, 3);
    CHECK(embed(f, big, {0, 1, 3, 4}) == P(big, "x2*T2 - x1*T3"));
}
