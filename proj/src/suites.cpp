#include "starrees/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "starrees/groebner.hpp"
#include "starrees/rees_height2.hpp"
#include "starrees/taylor.hpp"

namespace starrees {

namespace {

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

StarConfig from_ints(const Field& f, const std::vector<std::vector<long>>& rows, int c = 2) {
    return StarConfig(ScalarMatrix::from_ints(f, rows), c);
}

class Checker {
  public:
    explicit Checker(SuiteReport& rep) : rep_(rep) {}
    void operator()(bool ok, const std::string& what) {
        ++rep_.checks;
        if (!ok && rep_.failures.size() < 50) rep_.failures.push_back(what);
    }

  private:
    SuiteReport& rep_;
};

std::vector<Poly> nonzero_minors_generators(const StarConfig& cfg, const RingPtr& ring) {
    std::vector<Poly> out;
    for (auto& g : minors_ideal_generators(cfg, ring))
        if (!g.zero) out.push_back(std::move(g.m));
    return out;
}

// ---- suites

void worked_example(SuiteReport& rep, const Field& field) {
    Checker check(rep);
    StarConfig cfg = worked_example_config(field);
    RingPtr R = fiber_ring(cfg);
    rep.instances = 1;
    auto P = [&](const char* s) { return Poly::parse(R, s); };

    const char* rows[4][5] = {{"T1", "0", "0", "T5", "0"},
                              {"-T2", "T2", "0", "T5", "T6"},
                              {"0", "-T3", "T3", "T5", "2*T6"},
                              {"0", "0", "-T4", "T5 - T4", "3*T6 - T4"}};
    PolyMatrix B = jacobian_dual(cfg, R);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j)
            check(B.at(i, j) == P(rows[i][j]), "B entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

    std::map<int, Poly> expected{
        {6, P("T1*T2*T3*T5 - T1*T2*T3*T4 + T1*T2*T4*T5 + T1*T3*T4*T5 + T2*T3*T4*T5")},
        {5, P("3*T1*T2*T3*T6 - T1*T2*T3*T4 + 2*T1*T2*T4*T6 + T1*T3*T4*T6")},
        {3, P("T1*T2*T4*T5 - 2*T1*T2*T4*T6 - T1*T2*T5*T6 + T1*T4*T5*T6 + 2*T2*T4*T5*T6")},
        {2, P("T1*T3*T4*T5 - T1*T3*T4*T6 - T1*T4*T5*T6 - 2*T1*T3*T5*T6 + T3*T4*T5*T6")},
        {1, P("-T2*T3*T4*T5 + 2*T2*T4*T5*T6 + T3*T4*T5*T6 + 3*T2*T3*T5*T6")}};
    for (auto& [k, e] : expected) {
        Poly m = m_theta(cfg, R, {k});
        check(m == e || m == -e, "m_" + std::to_string(k) + " matches up to sign");
    }
    auto gens = minors_ideal_generators(cfg, R);
    check(gens.size() == 5, "five closed-form generators");

    Poly h1 = P("-T2*T3*T4 + 2*T2*T4*T6 + T3*T4*T6 + 3*T2*T3*T6");
    auto f1 = h_theta_factor(m_theta(cfg, R, {1}));
    auto f5 = h_theta_factor(m_theta(cfg, R, {5}));
    check(f1 && f1->h == h1 && f1->f == Poly::parse(R, "T5").lm(), "h_1 = m_1/T5");
    check(f5 && f5->h == h1 && f5->f == Poly::parse(R, "T1").lm(), "h_1 = m_5/T1");

    auto Pgens = ideal_P(cfg, R);
    check(Pgens.size() == 4, "P has four generators");
    for (const Poly& want : {expected[6], expected[3], expected[2], h1})
        check(std::any_of(Pgens.begin(), Pgens.end(), [&](const Poly& p) { return proportional(p, want); }),
              "P contains " + want.to_string());

    // (theta, b_1..b_4, a_1, a_2) up to scale
    std::vector<std::pair<int, std::vector<long>>> deps{{6, {1, 1, 1, 1, -1, 0}},
                                                        {1, {0, 1, 2, 3, 0, -1}},
                                                        {3, {2, 1, 0, -1, -2, 1}},
                                                        {2, {1, 0, -1, -2, -1, 1}}};
    for (const auto& [th, v] : deps) {
        auto d = h_theta_dependency(cfg, R, {th});
        bool ok = d.has_value();
        if (ok) {
            ScalarMatrix two(2, 6, field);
            for (int k = 0; k < 6; ++k) {
                two.at(0, k) = d->coefficient(k + 1);
                two.at(1, k) = Scalar::from_int(field, v[k]);
            }
            ok = rank(two) == 1;
        }
        check(ok, "dependency for theta " + std::to_string(th));
    }

    auto lq = lambda_Q(cfg);
    check(lq.lambda == std::vector<std::vector<int>>{{1, 5}}, "Lambda = {{1,5}}");
    check(lq.q_generators == std::vector<std::vector<int>>{{1}, {5}}, "Q = (T1, T5)");
}

void minors_closed_form(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    for (const auto& [label, cfg] : random_minors_corpus(field, seed)) {
        ++rep.instances;
        RingPtr R = fiber_ring(cfg);
        auto minors = all_max_minors(jacobian_dual(cfg, R));
        auto closed = nonzero_minors_generators(cfg, R);
        check(ideal_equal(R, minors, closed), label + ": maximal minors = closed-form generators");
        GroebnerBasis gb = buchberger_reduced(R, closed);
        for (const auto& th : theta_sets(cfg, false)) {
            Poly m = m_theta(cfg, R, th);
            check(m.is_zero() == vanishing_by_rank(cfg, th), label + ": vanishing criterion at " + set_text(th));
            if (std::find(th.begin(), th.end(), cfg.n()) != th.end())
                check(gb.member(m), label + ": m_theta with n in theta lies in the ideal, " + set_text(th));
        }
    }
}

void rees_equations(SuiteReport& rep, const Field& field) {
    Checker check(rep);
    for (const auto& [label, cfg] : rees_corpus(field)) {
        ++rep.instances;
        RingPtr R = cfg.rees_ring();
        auto eq = rees_defining_ideal(cfg, R);
        std::vector<Poly> ours = eq.linear;
        ours.insert(ours.end(), eq.fiber.begin(), eq.fiber.end());
        auto oracle = rees_ideal_oracle(R, star_generators(cfg));
        check(ideal_equal(R, ours, oracle), label + ": L + P equals the elimination ideal");
        if (cfg.r() == 1) {
            // Closed formula when the zero entries of u come first.
            int e = 0;
            while (e < cfg.n() && cfg.U().at(e, 0).is_zero()) ++e;
            bool leading = true;
            for (int i = e; i < cfg.n(); ++i) leading = leading && !cfg.U().at(i, 0).is_zero();
            if (leading) {
                Monomial all(R->nvars());
                for (int i = e + 1; i <= cfg.n() + 1; ++i) all.e[R->vars.T(i)] = 1;
                Monomial front = all;
                front.e[R->vars.T(cfg.n() + 1)] = 0;
                Poly f = Poly::monomial(R, front, Scalar::one(field));
                for (int i = e + 1; i <= cfg.n(); ++i) {
                    Monomial q = all;
                    q.e[R->vars.T(i)] = 0;
                    f -= Poly::monomial(R, q, cfg.U().at(i - 1, 0));
                }
                check(eq.fiber.size() == 1 && proportional(eq.fiber[0], f), label + ": single fiber equation f");
            }
        }
    }
}

void primary_decomposition(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    auto corpus = rees_corpus(field);
    for (auto& c : random_minors_corpus(Field::prime(101), seed)) corpus.push_back(c);
    std::size_t skipped = 0;
    for (const auto& [label, cfg] : corpus) {
        ++rep.instances;
        auto pr = primary_decomposition_check(cfg);
        if (!pr.hypothesis) {
            ++skipped;
            continue;
        }
        check(pr.confirmed, label + ": I_n(B) = Q ∩ P");
        if (label == "worked-example")
            check(!pr.lq.unit && pr.lq.q_generators == std::vector<std::vector<int>>{{1}, {5}},
                  "worked example: Q = (T1, T5)");
    }
    rep.notes.push_back(std::to_string(skipped) + " instance(s) skipped: some m_theta vanishes");
}

void monomial_primes(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    auto corpus = rees_corpus(field);
    for (auto& c : random_minors_corpus(Field::prime(101), seed)) corpus.push_back(c);
    for (const auto& [label, cfg] : corpus) {
        ++rep.instances;
        RingPtr R = fiber_ring(cfg);
        auto gens = nonzero_minors_generators(cfg, R);
        for (auto chi : subsets(cfg.t(), cfg.r())) {
            for (auto& v : chi) ++v;
            std::vector<Poly> prime;
            for (int k : chi) prime.push_back(Poly::variable(R, R->vars.T(k)));
            GroebnerBasis gb = buchberger_reduced(R, prime);
            bool contained = std::all_of(gens.begin(), gens.end(), [&](const Poly& g) { return gb.member(g); });
            check(contained == minor_U(cfg, chi).is_zero(), label + ": prime at " + set_text(chi));
        }
    }
}

void rank_criterion(SuiteReport& rep, const Field& field) {
    Checker check(rep);
    const long vals[4] = {-1, 0, 1, 2};
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r <= 2; ++r) {
            const int cells = n * r;
            long total = 1;
            for (int k = 0; k < cells; ++k) total *= 4;
            for (long code = 0; code < total; ++code) {
                std::vector<std::vector<long>> rows(n, std::vector<long>(r));
                long c = code;
                for (int k = 0; k < cells; ++k, c /= 4) rows[k / r][k % r] = vals[c % 4];
                StarConfig cfg = from_ints(field, rows);
                ++rep.instances;
                for (int s = 2; s <= n; ++s) {
                    bool a = subset_rank_condition(cfg, s), b = all_s_subsets_regular(cfg, s);
                    if (a != b) {
                        std::ostringstream os;
                        os << "n=" << n << " r=" << r << " code=" << code << " s=" << s;
                        check(false, os.str());
                    } else {
                        check(true, "");
                    }
                }
            }
        }
}

void regular_powers(SuiteReport& rep, const Field& field) {
    Checker check(rep);
    for (int t = 3; t <= 5; ++t)
        for (int c = 2; c <= t - 1; ++c)
            for (int m = 1; m <= 2; ++m)
                for (unsigned d = 1; d <= 2; ++d) {
                    ++rep.instances;
                    TaylorRing tr(t, c, m, Realization::power(t, d), field);
                    std::string label = "t=" + std::to_string(t) + " c=" + std::to_string(c) +
                                        " m=" + std::to_string(m) + " d=" + std::to_string(d);
                    auto gens = power_generators(t, c, m);
                    check(gens == power_generators_by_products(t, c, m), label + ": generators = m-fold products");
                    auto eq = regular_case_equations(tr);
                    std::vector<Poly> ours = eq.linear;
                    ours.insert(ours.end(), eq.quadrics.begin(), eq.quadrics.end());
                    check(ideal_equal(tr.ring, ours, rees_ideal_oracle(tr.ring, tr.generators())),
                          label + ": linear + quadrics equals the elimination ideal");
                }
    for (int t = 2; t <= 5; ++t) {
        ++rep.instances;
        TaylorRing tr(t, 2, 1, Realization::linear(t), field);
        auto eq = regular_case_equations(tr);
        check(eq.quadrics.empty(), "t=" + std::to_string(t) + " c=2: no quadrics");
        check(ideal_equal(tr.ring, eq.linear, rees_ideal_oracle(tr.ring, tr.generators())),
              "t=" + std::to_string(t) + " c=2: linear type");
    }
}

void column_sum_recursion(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    for (const auto& [label, cfg] : recursion_corpus(field, seed)) {
        ++rep.instances;
        RingPtr R = fiber_ring(cfg);
        for (auto th : subsets(cfg.n() - 1, cfg.r() - 1)) {
            for (auto& v : th) ++v;
            try {
                auto r = p_theta_recursion_check(cfg, R, th);
                for (std::size_t k = 0; k < r.identities_checked; ++k) check(true, "");
                check(true, "");
            } catch (const Error& e) {
                check(false, label + " theta " + set_text(th) + ": " + e.what());
            }
        }
    }
}

void substitution(SuiteReport& rep, const Field& field) {
    Checker check(rep);
    auto vanish = [&](const Poly& f, const std::vector<Poly>& g, const std::string& what) {
        check(rees_substitute(f, g).is_zero(), what);
    };
    for (const auto& [label, cfg] : rees_corpus(field)) {
        ++rep.instances;
        RingPtr R = cfg.rees_ring();
        auto g = star_generators(cfg);
        for (const auto& l : linear_relations(cfg, R)) vanish(l, g, label + ": lambda");
        auto B = jacobian_dual(cfg, R);
        for (int j = 0; j < B.cols(); ++j) {
            Poly col(R);
            for (int i = 0; i < cfg.n(); ++i) col += Poly::variable(R, i) * B.at(i, j);
            vanish(col, g, label + ": [x]B column " + std::to_string(j + 1));
        }
        for (const auto& th : theta_sets(cfg, false)) {
            Poly m = m_theta(cfg, R, th);
            vanish(m, g, label + ": m_theta " + set_text(th));
            if (auto f = h_theta_factor(m)) vanish(f->h, g, label + ": h_theta " + set_text(th));
            if (auto d = h_theta_dependency(cfg, R, th)) vanish(delta(cfg, R, *d), g, label + ": delta for " + set_text(th));
        }
        std::vector<int> all;
        for (int k = 1; k <= cfg.t(); ++k) all.push_back(k);
        for (const auto& a : kernel_basis(cfg.coefficient_matrix(all).transpose())) {
            std::vector<Scalar> av(a.begin() + cfg.n(), a.end());
            if (std::all_of(av.begin(), av.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
            auto [d, p] = dependency_relation(cfg, R, av);
            vanish(p, g, label + ": delta of a kernel dependency");
        }
    }
    for (int t = 3; t <= 4; ++t)
        for (int c = 2; c < t; ++c)
            for (int m = 1; m <= 2; ++m) {
                ++rep.instances;
                TaylorRing tr(t, c, m, Realization::power(t, 2), field);
                auto g = tr.generators();
                std::string label = "taylor t=" + std::to_string(t) + " c=" + std::to_string(c) + " m=" + std::to_string(m);
                auto eq = regular_case_equations(tr);
                for (const auto& l : eq.linear) vanish(l, g, label + ": linear");
                for (const auto& q : eq.quadrics) vanish(q, g, label + ": quadric");
                const int mu = static_cast<int>(tr.gens.size());
                for (int a = 1; a <= mu; ++a)
                    for (int b = a; b <= mu; ++b)
                        vanish(taylor_poly(tr, taylor_relation(tr, {a, b}, {mu + 1 - a, mu + 1 - b})), g,
                               label + ": degree-2 Taylor relation");
            }
}

void degree_bounds(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    auto corpus = rees_corpus(field);
    for (auto& c : random_minors_corpus(Field::prime(101), seed)) corpus.push_back(c);
    std::size_t skipped = 0;
    for (const auto& [label, cfg] : corpus) {
        if (!verify_star_condition(cfg)) {
            ++skipped;
            continue;
        }
        ++rep.instances;
        RingPtr R = cfg.rees_ring();
        for (const auto& th : theta_sets(cfg, false)) {
            auto f = h_theta_factor(m_theta(cfg, R, th));
            if (!f) continue;
            auto bd = bidegree(f->h);
            check(bd && bd->first == 0 && bd->second >= 3 && bd->second <= cfg.n(),
                  label + ": degree of h_theta at " + set_text(th));
            auto d = h_theta_dependency(cfg, R, th);
            const int sz = d ? static_cast<int>(d->support.size()) : 0;
            check(sz >= 4 && sz <= cfg.n() + 1, label + ": support size at " + set_text(th));
        }
    }
    rep.notes.push_back(std::to_string(skipped) + " instance(s) outside the star condition skipped");
}

void groebner_self(SuiteReport& rep, const Field& field, std::uint32_t seed) {
    Checker check(rep);
    std::mt19937 rng(seed);
    std::vector<std::pair<std::string, std::vector<Poly>>> inputs;
    for (const auto& [label, cfg] : rees_corpus(field)) {
        RingPtr R = fiber_ring(cfg);
        inputs.push_back({label + " minors", all_max_minors(jacobian_dual(cfg, R))});
        RingPtr RR = cfg.rees_ring();
        auto eq = rees_defining_ideal(cfg, RR);
        eq.linear.insert(eq.linear.end(), eq.fiber.begin(), eq.fiber.end());
        inputs.push_back({label + " rees", eq.linear});
    }
    {
        TaylorRing tr(4, 3, 2, Realization::linear(4), field);
        auto eq = regular_case_equations(tr);
        eq.linear.insert(eq.linear.end(), eq.quadrics.begin(), eq.quadrics.end());
        inputs.push_back({"taylor t=4 c=3 m=2", eq.linear});
    }
    RingPtr X = make_ring(VarSpace(3, 0), field);
    for (int k = 0; k < 6; ++k) {
        std::vector<Poly> gens;
        for (int j = 0; j < 3; ++j) {
            std::vector<Term> terms;
            for (int q = 0; q < 4; ++q) {
                Monomial m(3);
                for (int v = 0; v < 3; ++v) m.e[v] = static_cast<std::uint16_t>(rng() % 3);
                terms.push_back({m, Scalar::from_int(field, long(rng() % 7) - 3)});
            }
            gens.push_back(Poly::from_terms(X, std::move(terms)));
        }
        inputs.push_back({"random " + std::to_string(k), gens});
    }
    for (auto& [label, gens] : inputs) {
        ++rep.instances;
        RingPtr R = gens.empty() ? X : gens[0].ring();
        GroebnerBasis a = buchberger_reduced(R, gens);
        std::vector<Poly> perm = gens;
        std::shuffle(perm.begin(), perm.end(), rng);
        GroebnerBasis b = buchberger_reduced(R, perm);
        check(a == b, label + ": basis independent of generator order");
        std::reverse(perm.begin(), perm.end());
        check(a == buchberger_reduced(R, perm), label + ": basis independent of reversed order");
        for (const auto& g : gens) check(a.member(g), label + ": generator reduces to zero");
    }
    // Elimination: Rees constructions and x-elimination of Rees ideals.
    for (const auto& [label, cfg] : rees_corpus(field)) {
        ++rep.instances;
        RingPtr R = cfg.rees_ring();
        RingPtr RS = make_ring(R->vars.with_aux(), field);
        auto g = star_generators(cfg);
        std::vector<int> xmap;
        for (int v = 0; v < cfg.n(); ++v) xmap.push_back(v);
        std::vector<Poly> gens;
        const int s = RS->vars.aux();
        for (int i = 1; i <= cfg.t(); ++i)
            gens.push_back(Poly::variable(RS, RS->vars.T(i)) - Poly::variable(RS, s) * embed(g[i - 1], RS, xmap));
        for (const auto& p : eliminate(RS, gens, {s})) check(!p.involves(s), label + ": s eliminated");
        auto eq = rees_defining_ideal(cfg, R);
        eq.linear.insert(eq.linear.end(), eq.fiber.begin(), eq.fiber.end());
        auto fiber = eliminate(R, eq.linear, xmap);
        for (const auto& p : fiber)
            check(std::none_of(xmap.begin(), xmap.end(), [&](int v) { return p.involves(v); }),
                  label + ": x eliminated");
        check(ideal_equal(R, fiber, eq.fiber), label + ": fiber ideal equals P");
    }
}

using Runner = std::function<void(SuiteReport&, const Field&, std::uint32_t)>;

struct Entry {
    SuiteInfo info;
    Runner run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {{"worked-example", "four-variable example with U = [[1,0],[1,1],[1,2],[1,3]]", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t) { worked_example(r, f); }},
        {{"minors-closed-form", "maximal minors of B against the closed-form generators", "Fp:101"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { minors_closed_form(r, f, s); }},
        {{"rees-equations", "L + P against the elimination Rees ideal", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t) { rees_equations(r, f); }},
        {{"primary-decomposition", "I_n(B) = Q ∩ P when no m_theta vanishes", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { primary_decomposition(r, f, s); }},
        {{"monomial-primes", "minors inside (T_k : k in chi) exactly when U_chi = 0", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { monomial_primes(r, f, s); }},
        {{"rank-criterion", "rank condition on U against exhaustive subset regularity", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t) { rank_criterion(r, f); }},
        {{"regular-powers", "powers over a regular sequence: linear + quadrics against elimination", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t) { regular_powers(r, f); }},
        {{"column-sum-recursion", "column-sum minor identity and its last term", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { column_sum_recursion(r, f, s); }},
        {{"substitution", "every emitted equation vanishes under T_j -> g_j s", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t) { substitution(r, f); }},
        {{"degree-bounds", "degrees of h_theta and dependency supports", "Q"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { degree_bounds(r, f, s); }},
        {{"groebner-self", "order independence, membership and elimination of the Groebner engine", "Fp:101"},
         [](SuiteReport& r, const Field& f, std::uint32_t s) { groebner_self(r, f, s); }},
    };
    return e;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> c = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return c;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        Field field = Field::parse(opts.field.empty() ? e.info.default_field : opts.field);
        SuiteReport rep;
        rep.name = name;
        rep.field = field.to_string();
        if (field.small_characteristic())
            rep.notes.push_back("small characteristic: minors may vanish by accident");
        auto t0 = std::chrono::steady_clock::now();
        e.run(rep, field, opts.seed);
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    fail(ErrorKind::Parameter, "unknown suite '" + name + "'");
}

StarConfig worked_example_config(const Field& field) {
    return from_ints(field, {{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

std::vector<NamedConfig> random_minors_corpus(const Field& field, std::uint32_t seed, int count) {
    std::mt19937 rng(seed);
    std::vector<NamedConfig> out;
    const long p = field.is_rational() ? 101 : static_cast<long>(std::min<std::uint64_t>(field.modulus(), 1000003));
    for (int k = 0; k < count; ++k) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int r = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<long>> rows(n, std::vector<long>(r));
        for (auto& row : rows)
            for (auto& v : row) v = static_cast<long>(rng() % static_cast<std::uint32_t>(p));
        out.push_back({"random-" + std::to_string(k + 1) + " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")",
                       from_ints(field, rows)});
    }
    return out;
}

std::vector<NamedConfig> rees_corpus(const Field& field) {
    return {
        {"worked-example", worked_example_config(field)},
        {"single-L e=1", from_ints(field, {{0}, {1}, {1}})},
        {"n=2 r=1", from_ints(field, {{1}, {1}})},
        {"n=2 r=2", from_ints(field, {{1, 1}, {1, 2}})},
        {"single-L e=0", from_ints(field, {{1}, {2}, {3}})},
        {"n=3 r=2 generic", from_ints(field, {{1, 1}, {1, 2}, {1, 3}})},
        {"n=3 r=2 zero entry", from_ints(field, {{1, 0}, {1, 1}, {1, 2}})},
        {"n=4 r=1", from_ints(field, {{1}, {1}, {1}, {1}})},
        {"single-L e=2", from_ints(field, {{0}, {0}, {1}, {1}})},
        {"n=4 r=2 generic", from_ints(field, {{1, 1}, {1, -1}, {1, 2}, {2, 1}})},
    };
}

std::vector<NamedConfig> recursion_corpus(const Field& field, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<NamedConfig> out{{"worked-example", worked_example_config(field)}};
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= std::min(3, n); ++r)
            for (int k = 0; k < 2; ++k) {
                std::vector<std::vector<long>> rows(n, std::vector<long>(r));
                for (auto& row : rows)
                    for (auto& v : row) v = static_cast<long>(rng() % 7) - 3;
                out.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r) + " #" + std::to_string(k + 1),
                               from_ints(field, rows)});
            }
    return out;
}

} // namespace starrees
