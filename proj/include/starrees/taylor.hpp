#pragma once

#include <string>
#include <vector>

#include "starrees/polyring.hpp"

namespace starrees {

// A monomial in F_1..F_t.
using FExponent = std::vector<int>;

// F_i = x_i^{d_i} with weight w_i on x_i; d_i * w_i must be the same for
// every i so that the F_i share one degree.
struct Realization {
    std::vector<unsigned> powers;
    std::vector<unsigned> weights;

    static Realization linear(int t);
    static Realization power(int t, unsigned d);
    static Realization weighted(std::vector<unsigned> powers, std::vector<unsigned> weights);
    std::string to_string() const;
};

// Exponent vectors of total degree (t-c+1)*m with entries <= m, in
// decreasing lexicographic order. Generator k (1-based) is entry k-1.
std::vector<FExponent> power_generators(int t, int c, int m);

// Distinct sums of m vectors from power_generators(t, c, 1), sorted like
// power_generators. Brute force; used to cross-check the bounded description.
std::vector<FExponent> power_generators_by_products(int t, int c, int m);

struct TaylorRelation {
    std::vector<int> alpha, beta; // 1-based generator indices
    FExponent theta, delta;
};

struct TaylorRing {
    int t = 0, c = 0, m = 0;
    Realization real;
    std::vector<FExponent> gens;
    RingPtr ring; // x_1..x_t then one T per generator

    TaylorRing(int t, int c, int m, Realization real, Field field = Field::rationals());
    Poly F_power(const FExponent& e) const;
    // g_k as a polynomial in the x-block
    std::vector<Poly> generators() const;
};

TaylorRelation taylor_relation(const TaylorRing& tr, std::vector<int> alpha, std::vector<int> beta);
Poly taylor_poly(const TaylorRing& tr, const TaylorRelation& rel);

// T_iT_j - T_kT_l for distinct pairs with equal exponent sums; monic.
std::vector<Poly> fiber_quadrics(const TaylorRing& tr);

struct TaylorEquations {
    std::vector<Poly> linear;
    std::vector<Poly> quadrics;
};
TaylorEquations regular_case_equations(const TaylorRing& tr);

std::string fexponent_text(const FExponent& e);

} // namespace starrees
