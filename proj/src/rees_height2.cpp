#include "starrees/rees_height2.hpp"

#include <algorithm>
#include <set>

#include "starrees/groebner.hpp"

namespace starrees {

namespace {

Poly T(const RingPtr& ring, int j) { return Poly::variable(ring, ring->vars.T(j)); }

Poly scalar_times_T(const RingPtr& ring, const Scalar& c, int j) {
    if (c.is_zero()) return Poly(ring);
    return Poly::monomial(ring, Monomial::variable(ring->nvars(), ring->vars.T(j)), c);
}

void require_T(const StarConfig& cfg, const RingPtr& ring) {
    if (ring->vars.nt() != cfg.t()) fail(ErrorKind::IncompatibleOperands, "ring needs one T variable per form");
    if (!(ring->field == cfg.field())) fail(ErrorKind::IncompatibleOperands, "field mismatch");
}

bool contains(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

std::vector<int> with(std::vector<int> s, int v) {
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    return s;
}

std::vector<int> complement(int t, const std::vector<int>& theta) {
    std::vector<int> out;
    for (int k = 1; k <= t; ++k)
        if (!contains(theta, k)) out.push_back(k);
    return out;
}

std::vector<std::vector<int>> one_based(int t, int k) {
    auto sets = subsets(t, k);
    for (auto& s : sets)
        for (auto& v : s) ++v;
    return sets;
}

Monomial T_product(const RingPtr& ring, const std::vector<int>& ks) {
    Monomial m(ring->nvars());
    for (int k : ks) m.e[ring->vars.T(k)] += 1;
    return m;
}

// Monic h-classes of the nonzero m_theta, deduplicated and sorted.
std::vector<Poly> h_classes(const std::vector<Poly>& ms) {
    std::vector<Poly> out;
    for (const auto& m : ms) {
        auto f = h_theta_factor(m);
        if (!f) continue;
        Poly h = f->h.monic();
        bool seen = false;
        for (const auto& p : out)
            if (proportional(p, h)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.ring()->order.compare(a.lm(), b.lm()) < 0;
    });
    return out;
}

} // namespace

RingPtr fiber_ring(const StarConfig& cfg) { return make_ring(VarSpace(0, cfg.t()), cfg.field()); }

void require_height_two(const StarConfig& cfg) {
    if (cfg.c() != 2) fail(ErrorKind::UnsupportedHeight, "Rees equations are only available for c = 2");
    if (!pairwise_independent(cfg)) fail(ErrorKind::DegenerateInput, "two of the forms are proportional");
}

PolyMatrix presentation_matrix(const StarConfig& cfg, const RingPtr& ring) {
    require_height_two(cfg);
    require_T(cfg, ring);
    const int t = cfg.t();
    PolyMatrix M(t, t - 1, ring);
    for (int i = 1; i < t; ++i) {
        M.at(i - 1, i - 1) = cfg.form(ring, i);
        M.at(i, i - 1) = -cfg.form(ring, i + 1);
    }
    return M;
}

std::vector<Poly> linear_relations(const StarConfig& cfg, const RingPtr& ring) {
    require_height_two(cfg);
    require_T(cfg, ring);
    std::vector<Poly> out;
    for (int i = 1; i < cfg.t(); ++i)
        out.push_back(cfg.form(ring, i) * T(ring, i) - cfg.form(ring, i + 1) * T(ring, i + 1));
    return out;
}

PolyMatrix jacobian_dual(const StarConfig& cfg, const RingPtr& ring) {
    require_T(cfg, ring);
    const int n = cfg.n(), r = cfg.r();
    PolyMatrix B(n, n + r - 1, ring);
    for (int k = 1; k < n; ++k) {
        B.at(k - 1, k - 1) = T(ring, k);
        B.at(k, k - 1) = -T(ring, k + 1);
    }
    for (int i = 1; i <= r; ++i) {
        const int col = n - 2 + i;
        for (int j = 1; j <= n; ++j) B.at(j - 1, col) = scalar_times_T(ring, cfg.U().at(j - 1, i - 1), n + i);
        B.at(n - 1, col) -= T(ring, n);
    }
    return B;
}

Scalar minor_U(const StarConfig& cfg, const std::vector<int>& chi) {
    const int n = cfg.n(), r = cfg.r();
    if (static_cast<int>(chi.size()) != r) fail(ErrorKind::Parameter, "U-minor index set must have r elements");
    std::vector<int> rows, cols;
    for (int v : chi) {
        if (v < 1 || v > cfg.t()) fail(ErrorKind::Parameter, "index out of range");
        if (v <= n) rows.push_back(v - 1);
    }
    for (int j = 1; j <= r; ++j)
        if (!contains(chi, n + j)) cols.push_back(j - 1);
    return minor(cfg.U(), rows, cols);
}

Poly m_theta(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta) {
    require_T(cfg, ring);
    const int n = cfg.n(), r = cfg.r();
    if (r < 1) fail(ErrorKind::Parameter, "m_theta needs r >= 1");
    if (static_cast<int>(theta.size()) != r - 1) fail(ErrorKind::Parameter, "theta must have r-1 elements");
    auto k = complement(cfg.t(), theta);
    if (static_cast<int>(k.size()) != n + 1) fail(ErrorKind::Parameter, "theta has repeated or invalid indices");
    const int h = static_cast<int>(std::count_if(k.begin(), k.end(), [n](int v) { return v <= n; }));
    std::vector<Term> terms;
    for (int i = 1; i <= n + 1; ++i) {
        Scalar u = minor_U(cfg, with(theta, k[i - 1]));
        if (u.is_zero()) continue;
        const int alpha = i <= h ? n - h + i - k[i - 1] : n + i;
        if (alpha % 2) u = -u;
        std::vector<int> rest;
        for (int l = 0; l <= n; ++l)
            if (l != i - 1) rest.push_back(k[l]);
        terms.push_back({T_product(ring, rest), u});
    }
    return Poly::from_terms(ring, std::move(terms));
}

std::vector<std::vector<int>> theta_sets(const StarConfig& cfg, bool avoid_n) {
    if (cfg.r() < 1) return {};
    std::vector<std::vector<int>> out;
    for (auto& s : one_based(cfg.t(), cfg.r() - 1))
        if (!avoid_n || !contains(s, cfg.n())) out.push_back(std::move(s));
    return out;
}

std::vector<ThetaPoly> minors_ideal_generators(const StarConfig& cfg, const RingPtr& ring) {
    std::vector<ThetaPoly> out;
    for (auto& th : theta_sets(cfg, true)) {
        Poly m = m_theta(cfg, ring, th);
        const bool z = m.is_zero();
        out.push_back({std::move(th), std::move(m), z});
    }
    return out;
}

std::optional<HFactor> h_theta_factor(const Poly& m) {
    if (m.is_zero()) return std::nullopt;
    Monomial f = content_monomial(m);
    return HFactor{f, divide_monomial(m, f)};
}

std::vector<Poly> ideal_P(const StarConfig& cfg, const RingPtr& ring) {
    std::vector<Poly> ms;
    for (const auto& th : theta_sets(cfg, true)) ms.push_back(m_theta(cfg, ring, th));
    return h_classes(ms);
}

ReesEquations rees_defining_ideal(const StarConfig& cfg, const RingPtr& ring) {
    ReesEquations eq;
    eq.linear = linear_relations(cfg, ring);
    eq.fiber = ideal_P(cfg, ring);
    return eq;
}

Scalar Dependency::coefficient(int k) const {
    const int n = static_cast<int>(b.size());
    if (k < 1 || k > n + static_cast<int>(a.size())) fail(ErrorKind::Selection, "form index out of range");
    return k <= n ? b[k - 1] : a[k - n - 1];
}

std::string Dependency::to_string(const StarConfig& cfg) const {
    std::string out;
    const RingPtr xr = cfg.x_ring();
    for (int k = 1; k <= cfg.t(); ++k) {
        Scalar c = coefficient(k);
        if (c.is_zero()) continue;
        std::string name = k <= cfg.n() ? xr->vars.name(k - 1) : "L" + std::to_string(k - cfg.n());
        std::string text = c.coefficient_text();
        bool neg = !text.empty() && text[0] == '-';
        if (neg) text.erase(0, 1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (text != "1") out += text + "*";
        out += name;
    }
    return out + " = 0";
}

Dependency make_dependency(const StarConfig& cfg, const std::vector<Scalar>& a) {
    const int n = cfg.n(), r = cfg.r();
    if (static_cast<int>(a.size()) != r) fail(ErrorKind::Parameter, "dependency needs r coefficients");
    if (std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); }))
        fail(ErrorKind::TrivialDependency, "all L-coefficients are zero");
    Dependency d;
    d.a = a;
    d.b.assign(n, Scalar::zero(cfg.field()));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) d.b[j] -= a[i] * cfg.U().at(j, i);
    for (int k = 1; k <= cfg.t(); ++k)
        if (!d.coefficient(k).is_zero()) d.support.push_back(k);
    return d;
}

Poly delta(const StarConfig& cfg, const RingPtr& ring, const Dependency& d) {
    require_T(cfg, ring);
    std::vector<Term> terms;
    for (int j : d.support) {
        std::vector<int> rest;
        for (int k : d.support)
            if (k != j) rest.push_back(k);
        terms.push_back({T_product(ring, rest), d.coefficient(j)});
    }
    return Poly::from_terms(ring, std::move(terms));
}

std::pair<Dependency, Poly> dependency_relation(const StarConfig& cfg, const RingPtr& ring,
                                                const std::vector<Scalar>& a) {
    Dependency d = make_dependency(cfg, a);
    Poly p = delta(cfg, ring, d);
    return {std::move(d), std::move(p)};
}

std::optional<Dependency> h_theta_dependency(const StarConfig& cfg, const RingPtr& ring,
                                             const std::vector<int>& theta) {
    auto f = h_theta_factor(m_theta(cfg, ring, theta));
    if (!f) return std::nullopt;
    const int n = cfg.n(), r = cfg.r();
    // Rows are the linear conditions on a: b_j = 0 or a_{j-n} = 0.
    ScalarMatrix cond(static_cast<int>(theta.size()), r, cfg.field());
    for (std::size_t q = 0; q < theta.size(); ++q) {
        const int j = theta[q];
        if (j <= n)
            for (int i = 0; i < r; ++i) cond.at(int(q), i) = cfg.U().at(j - 1, i);
        else
            cond.at(int(q), j - n - 1) = Scalar::one(cfg.field());
    }
    auto ker = kernel_basis(cond);
    if (ker.size() != 1) fail(ErrorKind::InternalConsistency, "dependency vanishing on theta is not unique");
    auto [d, p] = dependency_relation(cfg, ring, ker[0]);
    Scalar ratio;
    if (!proportional(f->h, p, &ratio)) fail(ErrorKind::InternalConsistency, "dependency does not match h_theta");
    for (auto& v : d.a) v = v * ratio;
    return make_dependency(cfg, d.a);
}

std::vector<Poly> LambdaQ::q_polys(const RingPtr& ring) const {
    std::vector<Poly> out;
    if (unit) {
        out.push_back(Poly::constant(ring, 1));
        return out;
    }
    for (const auto& g : q_generators) out.push_back(Poly::monomial(ring, T_product(ring, g), Scalar::one(ring->field)));
    return out;
}

LambdaQ lambda_Q(const StarConfig& cfg) {
    const int t = cfg.t(), r = cfg.r();
    LambdaQ out;
    if (r < 1) return out;
    std::vector<std::vector<int>> omegas = one_based(t, r);
    std::vector<char> zero(omegas.size());
    for (std::size_t q = 0; q < omegas.size(); ++q) zero[q] = minor_U(cfg, omegas[q]).is_zero();
    for (int size = 1; size <= r; ++size)
        for (const auto& chi : one_based(t, size)) {
            bool all = true;
            for (std::size_t q = 0; q < omegas.size() && all; ++q)
                if (std::includes(omegas[q].begin(), omegas[q].end(), chi.begin(), chi.end()) && !zero[q])
                    all = false;
            if (all) out.lambda.push_back(chi);
        }
    for (const auto& chi : out.lambda) {
        bool minimal = true;
        for (const auto& o : out.minimal)
            if (std::includes(chi.begin(), chi.end(), o.begin(), o.end())) minimal = false;
        if (minimal) out.minimal.push_back(chi);
    }
    if (out.minimal.empty()) return out;
    out.unit = false;
    // Minimal transversals: grow hitting sets one prime at a time, keeping
    // only inclusion-minimal ones.
    std::vector<std::vector<int>> hs{{}};
    for (const auto& p : out.minimal) {
        std::set<std::vector<int>> next;
        for (const auto& h : hs) {
            bool hit = std::any_of(p.begin(), p.end(), [&](int v) { return contains(h, v); });
            if (hit)
                next.insert(h);
            else
                for (int v : p) next.insert(with(h, v));
        }
        hs.clear();
        for (const auto& h : next) {
            bool minimal = true;
            for (const auto& o : next)
                if (o != h && o.size() < h.size() && std::includes(h.begin(), h.end(), o.begin(), o.end())) {
                    minimal = false;
                    break;
                }
            if (minimal) hs.push_back(h);
        }
    }
    std::sort(hs.begin(), hs.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    out.q_generators = std::move(hs);
    return out;
}

bool all_m_theta_nonzero(const StarConfig& cfg, const RingPtr& ring) {
    if (cfg.r() < 1) return true;
    for (const auto& th : theta_sets(cfg, false))
        if (m_theta(cfg, ring, th).is_zero()) return false;
    return true;
}

bool vanishing_by_rank(const StarConfig& cfg, const std::vector<int>& theta) {
    const int n = cfg.n(), r = cfg.r();
    std::vector<int> rows, cols;
    for (int v : theta)
        if (v <= n) rows.push_back(v - 1);
    for (int j = 1; j <= r; ++j)
        if (!contains(theta, n + j)) cols.push_back(j - 1);
    const int h = static_cast<int>(rows.size());
    if (h == 0) return false;
    return rank(cfg.U().select(rows, cols)) < h;
}

PrimaryReport primary_decomposition_check(const StarConfig& cfg) {
    PrimaryReport rep;
    RingPtr ring = fiber_ring(cfg);
    rep.lq = lambda_Q(cfg);
    if (cfg.r() < 1) {
        rep.note = "r = 0: no maximal minors";
        return rep;
    }
    rep.P = ideal_P(cfg, ring);
    for (auto& g : minors_ideal_generators(cfg, ring))
        if (!g.zero) rep.minors.push_back(std::move(g.m));
    rep.hypothesis = all_m_theta_nonzero(cfg, ring);
    if (!rep.hypothesis) {
        rep.note = "hypothesis fails: some m_theta is zero";
        return rep;
    }
    std::vector<Poly> rhs = rep.lq.unit ? rep.P : ideal_intersect(ring, rep.lq.q_polys(ring), rep.P);
    rep.confirmed = ideal_equal(ring, rep.minors, rhs);
    rep.note = rep.confirmed ? "I_n(B) = Q ∩ P confirmed" : "I_n(B) differs from Q ∩ P";
    return rep;
}

namespace {

struct Run {
    int k;
    int l;
};

std::vector<Run> runs_of(const std::vector<int>& theta) {
    std::vector<Run> out;
    for (int v : theta) {
        if (!out.empty() && out.back().k + out.back().l == v)
            ++out.back().l;
        else
            out.push_back({v, 1});
    }
    return out;
}

// Minor after removing A_k (k in theta) and folding `ops` columns into the
// slot left of each run, run by run.
Poly p_minor(const PolyMatrix& B, int n, const std::vector<int>& theta, int ops) {
    PolyMatrix W = B;
    auto runs = runs_of(theta);
    for (const auto& run : runs) {
        if (run.k == 1) continue; // the run through 1 has no column to its left
        for (int q = 0; q < run.l && ops > 0; ++q, --ops) {
            const int dst = run.k - 2, src = run.k - 1 + q; // 0-based columns A_{k-1}, A_{k+q}
            for (int i = 0; i < n; ++i) W.at(i, dst) += B.at(i, src);
        }
    }
    std::vector<int> keep;
    for (int c = 0; c < B.cols(); ++c)
        if (!(c < n - 1 && contains(theta, c + 1))) keep.push_back(c);
    return det_poly(W.select_cols(keep));
}

int ops_count(const std::vector<int>& theta) {
    int e = 0;
    for (const auto& run : runs_of(theta))
        if (run.k != 1) e += run.l;
    return e;
}

void check_theta_for_p(const StarConfig& cfg, const std::vector<int>& theta) {
    if (static_cast<int>(theta.size()) != cfg.r() - 1) fail(ErrorKind::Parameter, "theta must have r-1 elements");
    for (std::size_t q = 0; q < theta.size(); ++q)
        if (theta[q] < 1 || theta[q] > cfg.n() - 1 || (q && theta[q] <= theta[q - 1]))
            fail(ErrorKind::Parameter, "theta must be a sorted subset of 1..n-1");
}

} // namespace

PSequence p_theta_sequence(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta) {
    check_theta_for_p(cfg, theta);
    PolyMatrix B = jacobian_dual(cfg, ring);
    PSequence out{theta, {}};
    const int e = ops_count(theta) + 1;
    for (int q = 0; q < e; ++q) out.seq.push_back(p_minor(B, cfg.n(), theta, q));
    return out;
}

PRecursionReport p_theta_recursion_check(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta) {
    PRecursionReport rep;
    rep.seq = p_theta_sequence(cfg, ring, theta).seq;
    auto runs = runs_of(theta);
    int h = 0;
    for (const auto& run : runs) {
        if (run.k == 1) continue;
        for (int j = 1; j <= run.l; ++j) {
            ++h;
            std::vector<int> other;
            for (int v : theta)
                if (v != run.k + j - 1) other.push_back(v);
            other = with(other, run.k - 1);
            Poly rhs = rep.seq[h] - p_minor(jacobian_dual(cfg, ring), cfg.n(), other, h - j);
            if (rep.seq[h - 1] != rhs)
                fail(ErrorKind::InternalConsistency,
                     "column-sum identity fails at step " + std::to_string(h) + " for theta");
            ++rep.identities_checked;
        }
    }
    Poly m = m_theta(cfg, ring, theta);
    const Poly& last = rep.seq.back();
    if (m.is_zero() && last.is_zero()) {
        rep.sign = Scalar::one(cfg.field());
    } else if (last == m) {
        rep.sign = Scalar::one(cfg.field());
    } else if (last == -m) {
        rep.sign = -Scalar::one(cfg.field());
    } else {
        fail(ErrorKind::InternalConsistency, "last column-sum minor differs from m_theta");
    }
    return rep;
}

std::optional<ZeroRowReport> zero_row_reduce(const StarConfig& cfg) {
    const int n = cfg.n(), r = cfg.r();
    int zr = 0;
    for (int j = 1; j <= n && !zr; ++j) {
        bool z = true;
        for (int i = 0; i < r; ++i) z = z && cfg.U().at(j - 1, i).is_zero();
        if (z) zr = j;
    }
    if (!zr || n < 2 || r < 1) return std::nullopt;
    // Move the zero row to the top; x_1..x_n are renamed accordingly.
    ScalarMatrix U(n, r, cfg.field());
    std::vector<int> perm{zr};
    for (int j = 1; j <= n; ++j)
        if (j != zr) perm.push_back(j);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) U.at(j, i) = cfg.U().at(perm[j] - 1, i);
    StarConfig moved(U, cfg.c());
    ScalarMatrix V(n - 1, r, cfg.field());
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < r; ++i) V.at(j - 1, i) = U.at(j, i);
    StarConfig reduced(std::move(V), std::min(cfg.c(), n - 1));

    RingPtr big = fiber_ring(moved);
    RingPtr small = fiber_ring(reduced);
    std::vector<int> shift;
    for (int k = 0; k < reduced.t(); ++k) shift.push_back(k + 1);
    auto lift = [&](const std::vector<Poly>& ps) {
        std::vector<Poly> out;
        for (const auto& p : ps) out.push_back(embed(p, big, shift));
        return out;
    };

    auto lhs = all_max_minors(jacobian_dual(moved, big));
    std::vector<Poly> rhs;
    Poly t1 = T(big, 1);
    for (const auto& p : lift(all_max_minors(jacobian_dual(reduced, small)))) rhs.push_back(t1 * p);
    ZeroRowReport rep{zr, reduced, ideal_equal(big, lhs, rhs), false};
    auto P_big = ideal_P(moved, big);
    auto P_small = lift(ideal_P(reduced, small));
    rep.P_unchanged = ideal_equal(big, P_big, P_small);
    return rep;
}

} // namespace starrees
