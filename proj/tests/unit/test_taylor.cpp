#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "starrees/errors.hpp"
#include "starrees/groebner.hpp"
#include "starrees/taylor.hpp"
#include "support.hpp"

using namespace starrees;
using test::P;
using test::Ps;

namespace {
using V = std::vector<FExponent>;

// g_k built directly from the exponent vectors and the realization.
std::vector<Poly> direct_generators(const TaylorRing& tr, const RingPtr& X) {
    std::vector<Poly> out;
    for (const auto& e : tr.gens) {
        Monomial m(X->nvars());
        for (int i = 0; i < tr.t; ++i) m.e[i] = std::uint16_t(e[i] * tr.real.powers[i]);
        out.push_back(Poly::monomial(X, m, Scalar::one(X->field)));
    }
    return out;
}

bool oracle_equal(const TaylorRing& tr) {
    RingPtr X = make_ring(VarSpace(tr.t, 0, false, tr.real.weights), tr.ring->field);
    auto eq = regular_case_equations(tr);
    auto all = eq.linear;
    all.insert(all.end(), eq.quadrics.begin(), eq.quadrics.end());
    return ideal_equal(tr.ring, all, rees_ideal_oracle(tr.ring, direct_generators(tr, X)));
}
} // namespace

TEST_CASE("power generators", "[taylor]") {
    CHECK(power_generators(3, 2, 1) == V{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(power_generators(3, 2, 2) == V{{2, 2, 0}, {2, 1, 1}, {2, 0, 2}, {1, 2, 1}, {1, 1, 2}, {0, 2, 2}});
    CHECK(power_generators(4, 1, 1) == V{{1, 1, 1, 1}});
    CHECK_THROWS_AS(power_generators(3, 0, 1), Error);
    CHECK_THROWS_AS(power_generators(3, 2, 0), Error);
    // the bounded description equals the set of m-fold sums
    for (int t = 2; t <= 5; ++t)
        for (int c = 1; c <= t; ++c)
            for (int m = 1; m <= 3; ++m) {
                auto one = power_generators(t, c, 1);
                std::set<FExponent> sums{FExponent(t, 0)};
                for (int k = 0; k < m; ++k) {
                    std::set<FExponent> next;
                    for (const auto& s : sums)
                        for (const auto& g : one) {
                            FExponent e = s;
                            for (int i = 0; i < t; ++i) e[i] += g[i];
                            next.insert(e);
                        }
                    sums = next;
                }
                auto pg = power_generators(t, c, m);
                CHECK(std::set<FExponent>(pg.begin(), pg.end()) == sums);
                CHECK(power_generators_by_products(t, c, m) == pg);
            }
}

TEST_CASE("Taylor relations", "[taylor]") {
    TaylorRing tr(4, 3, 1, Realization::linear(4));
    auto rel = taylor_relation(tr, {1}, {2});
    CHECK(rel.theta == FExponent{0, 0, 1, 0});
    CHECK(rel.delta == FExponent{0, 1, 0, 0});
    CHECK(taylor_poly(tr, rel) == P(tr.ring, "x3*T1-x2*T2"));
    CHECK(taylor_poly(tr, taylor_relation(tr, {3}, {3})).is_zero());

    TaylorRing t2(3, 2, 1, Realization::linear(3));
    auto r2 = taylor_relation(t2, {1, 2}, {3, 3});
    // g1 g2 = F1^2 F2 F3, g3^2 = F2^2 F3^2
    CHECK(r2.theta == FExponent{0, 1, 1});
    CHECK(r2.delta == FExponent{2, 0, 0});
    RingPtr X = make_ring(VarSpace(3, 0), Field::rationals());
    CHECK(rees_substitute(taylor_poly(t2, r2), direct_generators(t2, X)).is_zero());
}

TEST_CASE("fiber quadrics", "[taylor]") {
    TaylorRing a(4, 3, 1, Realization::linear(4));
    auto q = fiber_quadrics(a);
    // generators: T1=F1F2, T2=F1F3, T3=F1F4, T4=F2F3, T5=F2F4, T6=F3F4
    CHECK(q.size() == 3);
    RingPtr R = a.ring;
    CHECK(ideal_equal(R, q, Ps(R, {"T1*T6-T2*T5", "T1*T6-T3*T4"})));
    CHECK(fiber_quadrics(TaylorRing(4, 2, 1, Realization::linear(4))).empty());
    TaylorRing b(3, 2, 2, Realization::linear(3));
    // (2,2,0)+(2,0,2) = (2,1,1)+(2,1,1)
    auto qb = fiber_quadrics(b);
    bool found = false;
    for (const auto& f : qb) found = found || f == P(b.ring, "T1*T3-T2^2") || f == P(b.ring, "T2^2-T1*T3");
    CHECK(found);
    for (const auto& f : qb) {
        CHECK(f.lc() == Scalar::one(f.ring()->field));
        RingPtr X = make_ring(VarSpace(3, 0), Field::rationals());
        CHECK(rees_substitute(f, direct_generators(b, X)).is_zero());
    }
}

TEST_CASE("quadrics are symmetric under permuting the F's", "[taylor]") {
    TaylorRing tr(4, 2, 2, Realization::linear(4));
    auto key = [&](const std::vector<int>& perm) {
        std::set<std::pair<std::set<FExponent>, std::set<FExponent>>> out;
        auto q = fiber_quadrics(tr);
        for (const auto& f : q) {
            std::set<FExponent> sides[2];
            for (int s = 0; s < 2; ++s) {
                const auto& mono = f.terms()[s].mono;
                std::multiset<FExponent> ms;
                for (int k = 0; k < int(tr.gens.size()); ++k)
                    for (int e = 0; e < mono[tr.ring->vars.T(k + 1)]; ++e) {
                        FExponent g(4);
                        for (int i = 0; i < 4; ++i) g[perm[i]] = tr.gens[k][i];
                        ms.insert(g);
                    }
                FExponent sum(8, 0);
                int pos = 0;
                for (const auto& g : ms) {
                    for (int i = 0; i < 4; ++i) sum[pos * 4 + i] = g[i];
                    ++pos;
                }
                sides[s].insert(sum);
            }
            if (sides[0] < sides[1]) std::swap(sides[0], sides[1]);
            out.insert({sides[0], sides[1]});
        }
        return out;
    };
    auto base = key({0, 1, 2, 3});
    CHECK(key({1, 0, 2, 3}) == base);
    CHECK(key({3, 2, 1, 0}) == base);
    CHECK(key({2, 0, 3, 1}) == base);
}

TEST_CASE("equations against the elimination oracle", "[taylor]") {
    TaylorRing a(3, 2, 1, Realization::linear(3));
    CHECK(regular_case_equations(a).quadrics.empty());
    CHECK(oracle_equal(a));
    CHECK(oracle_equal(TaylorRing(4, 3, 1, Realization::linear(4))));
    CHECK(oracle_equal(TaylorRing(3, 2, 2, Realization::linear(3))));
    CHECK(oracle_equal(TaylorRing(3, 2, 2, Realization::power(3, 2))));
    CHECK(oracle_equal(TaylorRing(3, 2, 1, Realization::weighted({1, 2, 3}, {6, 3, 2}))));
}

TEST_CASE("realizations are validated", "[taylor]") {
    CHECK_THROWS_AS(Realization::weighted({1, 1}, {1, 2}), Error);
    CHECK_THROWS_AS(Realization::weighted({1, 1}, {1}), Error);
    CHECK(Realization::weighted({2, 1}, {1, 2}).powers == std::vector<unsigned>{2, 1});
}
