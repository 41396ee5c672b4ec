// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starrees/groebner.hpp"
#include "starrees/rees_height2.hpp"
#include "starrees/suites.hpp"

using namespace starrees;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

// Values as printed for the four-variable example.
const char* kB[4][5] = {{"T1", "0", "0", "T5", "0"},
                        {"-T2", "T2", "0", "T5", "T6"},
                        {"0", "-T3", "T3", "T5", "2*T6"},
                        {"0", "0", "-T4", "T5 - T4", "3*T6 - T4"}};
const char* kM[7] = {nullptr,
                     "-T4*T2*T3*T5 + 2*T6*T2*T4*T5 + T6*T4*T3*T5 + 3*T6*T2*T3*T5",
                     "T1*T4*T3*T5 - T1*T6*T3*T4 - T1*T6*T4*T5 - 2*T1*T6*T3*T5 + T4*T6*T3*T5",
                     "T1*T2*T4*T5 - 2*T1*T2*T4*T6 - T1*T2*T5*T6 + T1*T4*T5*T6 + 2*T2*T4*T5*T6",
                     nullptr,
                     "3*T1*T2*T3*T6 - T1*T2*T3*T4 + 2*T1*T2*T4*T6 + T1*T4*T3*T6",
                     "T1*T2*T3*T5 - T1*T2*T3*T4 + T1*T2*T4*T5 + T1*T4*T3*T5 + T4*T2*T3*T5"};
// coefficients of x1..x4, L1, L2
const long kD6[6] = {1, 1, 1, 1, -1, 0};
const long kD1[6] = {0, 1, 2, 3, 0, -1};
const long kD3[6] = {2, 1, 0, -1, -2, 1};
const long kD2[6] = {1, 0, -1, -2, -1, 1};

bool up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }
bool up_to_scalar(const Poly& a, const Poly& b) {
    return !a.is_zero() && !b.is_zero() && a.monic() == b.monic();
}

bool dependency_matches(const Dependency& d, const long* want) {
    const Field Q = Field::rationals();
    Scalar ratio;
    bool set = false;
    for (int k = 1; k <= 6; ++k) {
        Scalar c = d.coefficient(k);
        if (want[k - 1] == 0) {
            if (!c.is_zero()) return false;
            continue;
        }
        Scalar q = c / Scalar::from_int(Q, want[k - 1]);
        if (!set) ratio = q, set = true;
        if (q != ratio) return false;
    }
    return set;
}

Outcome worked_example() {
    Outcome o;
    auto fail = [&](const std::string& why) {
        o.ok = false;
        o.detail += (o.detail.empty() ? "" : "; ") + why;
    };
    const Field Q = Field::rationals();
    StarConfig cfg(ScalarMatrix::from_ints(Q, {{1, 0}, {1, 1}, {1, 2}, {1, 3}}), 2);
    RingPtr R = fiber_ring(cfg);

    PolyMatrix B = jacobian_dual(cfg, R);
    if (B.rows() != 4 || B.cols() != 5) {
        fail("B has the wrong shape");
        return o;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j)
            if (B.at(i, j) != Poly::parse(R, kB[i][j]))
                fail("B[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + B.at(i, j).to_string());

    auto gens = minors_ideal_generators(cfg, R);
    std::vector<int> seen;
    for (const auto& g : gens) {
        if (g.theta.size() != 1) {
            fail("unexpected theta size");
            continue;
        }
        int k = g.theta[0];
        seen.push_back(k);
        if (k == 4 || !kM[k]) {
            fail("unexpected generator m_" + std::to_string(k));
            continue;
        }
        if (!up_to_sign(g.m, Poly::parse(R, kM[k]))) fail("m_" + std::to_string(k) + " = " + g.m.to_string());
    }
    if (seen != std::vector<int>{1, 2, 3, 5, 6}) fail("generator set differs");

    Poly m1 = Poly::parse(R, kM[1]), m5 = Poly::parse(R, kM[5]);
    Poly T5 = Poly::parse(R, "T5"), T1 = Poly::parse(R, "T1");
    auto h1 = h_theta_factor(m_theta(cfg, R, {1}));
    auto h5 = h_theta_factor(m_theta(cfg, R, {5}));
    if (!h1 || !h5) {
        fail("h_1 missing");
        return o;
    }
    if (h1->h * T5 != m1 || h5->h * T1 != m5 || h1->h != h5->h) fail("h_1 = m_1/T_5 = m_5/T_1 fails");

    auto Pg = ideal_P(cfg, R);
    std::vector<Poly> want{Poly::parse(R, kM[6]), Poly::parse(R, kM[3]), Poly::parse(R, kM[2]), h1->h};
    if (Pg.size() != 4) fail("P has " + std::to_string(Pg.size()) + " generators");
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : Pg) found = found || up_to_scalar(g, w);
        if (!found) fail("P lacks " + w.to_string());
    }

    struct Pair {
        int theta;
        const long* d;
        const char* name;
    } pairs[] = {{6, kD6, "D_6"}, {1, kD1, "D_1"}, {5, kD1, "D_5"}, {3, kD3, "D_3"}, {2, kD2, "D_2"}};
    for (const auto& p : pairs) {
        auto d = h_theta_dependency(cfg, R, {p.theta});
        if (!d || !dependency_matches(*d, p.d)) fail(std::string(p.name) + " differs");
        else if (delta(cfg, R, *d) != h_theta_factor(m_theta(cfg, R, {p.theta}))->h) fail(std::string(p.name) + ": delta is not h");
    }
    if (o.ok) o.detail = "B, five generators, h_1, P and four dependencies reproduced";
    return o;
}

Outcome from_suite(const std::string& name, std::function<void(Outcome&)> extra = {}) {
    SuiteReport rep = run_suite(name, {});
    Outcome o;
    o.ok = rep.passed();
    std::ostringstream s;
    s << "suite " << rep.name << " over " << rep.field << ", " << rep.instances << " instances, " << rep.checks
      << " checks";
    if (!rep.failures.empty()) s << ", first failure: " << rep.failures.front();
    o.detail = s.str();
    if (extra) extra(o);
    return o;
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    std::vector<Criterion> all{
        {1, "worked example reproduction", 1.0, worked_example},
        {2, "maximal minors equal the closed-form generators", 60.0, [] { return from_suite("minors-closed-form"); }},
        {3, "L + P equals the Rees ideal", 300.0, [] { return from_suite("rees-equations"); }},
        {4, "I_n(B) = Q ∩ P", 0.0,
         [] {
             return from_suite("primary-decomposition", [](Outcome& o) {
                 StarConfig cfg(ScalarMatrix::from_ints(Field::rationals(), {{1, 0}, {1, 1}, {1, 2}, {1, 3}}), 2);
                 RingPtr R = fiber_ring(cfg);
                 auto q = lambda_Q(cfg).q_polys(R);
                 if (q != std::vector<Poly>{Poly::parse(R, "T1"), Poly::parse(R, "T5")}) {
                     o.ok = false;
                     o.detail += "; example Q differs from (T1, T5)";
                 }
             });
         }},
        {5, "monomial primes", 0.0, [] { return from_suite("monomial-primes"); }},
        {6, "rank criterion against exhaustive regularity", 60.0, [] { return from_suite("rank-criterion"); }},
        {7, "powers over a regular sequence", 600.0, [] { return from_suite("regular-powers"); }},
        {8, "column-sum recursion", 0.0, [] { return from_suite("column-sum-recursion"); }},
        {9, "substitution vanishing", 0.0, [] { return from_suite("substitution"); }},
        {10, "degree bounds", 0.0, [] { return from_suite("degree-bounds"); }},
        {11, "Groebner self-checks", 0.0, [] { return from_suite("groebner-self"); }},
    };

    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.ok = false;
            o.detail += "; over the time limit";
        }
        char timing[64];
        if (c.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing << ") "
                  << o.detail << std::endl;
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
