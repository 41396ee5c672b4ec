#include "starrees/taylor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace starrees {

Realization Realization::linear(int t) { return {std::vector<unsigned>(t, 1), std::vector<unsigned>(t, 1)}; }

Realization Realization::power(int t, unsigned d) {
    return {std::vector<unsigned>(t, d), std::vector<unsigned>(t, 1)};
}

Realization Realization::weighted(std::vector<unsigned> powers, std::vector<unsigned> weights) {
    if (powers.size() != weights.size() || powers.empty()) fail(ErrorKind::Parameter, "realization size mismatch");
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (!powers[i] || !weights[i]) fail(ErrorKind::Parameter, "realization powers and weights must be positive");
        if (powers[i] * weights[i] != powers[0] * weights[0])
            fail(ErrorKind::Parameter, "realization does not give forms of one degree");
    }
    return {std::move(powers), std::move(weights)};
}

std::string Realization::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (i) out += ", ";
        out += "F" + std::to_string(i + 1) + " = x" + std::to_string(i + 1);
        if (powers[i] != 1) out += "^" + std::to_string(powers[i]);
        if (weights[i] != 1) out += " (weight " + std::to_string(weights[i]) + ")";
    }
    return out;
}

namespace {

void check_params(int t, int c, int m) {
    if (t < 1 || c < 1 || c > t) fail(ErrorKind::Parameter, "need 1 <= c <= t");
    if (m < 1) fail(ErrorKind::Parameter, "need m >= 1");
}

void fill(std::vector<FExponent>& out, FExponent& cur, int pos, int left, int cap) {
    const int t = static_cast<int>(cur.size());
    if (pos == t) {
        if (left == 0) out.push_back(cur);
        return;
    }
    if (left > cap * (t - pos)) return;
    for (int v = std::min(cap, left); v >= 0; --v) {
        cur[pos] = v;
        fill(out, cur, pos + 1, left - v, cap);
    }
    cur[pos] = 0;
}

FExponent add(const FExponent& a, const FExponent& b) {
    FExponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

FExponent sum_of(const TaylorRing& tr, const std::vector<int>& idx) {
    FExponent out(tr.t, 0);
    for (int k : idx) {
        if (k < 1 || k > static_cast<int>(tr.gens.size())) fail(ErrorKind::Selection, "generator index out of range");
        out = add(out, tr.gens[k - 1]);
    }
    return out;
}

Poly T_prod(const TaylorRing& tr, const std::vector<int>& idx) {
    Monomial m(tr.ring->nvars());
    for (int k : idx) m.e[tr.ring->vars.T(k)] += 1;
    return Poly::monomial(tr.ring, m, Scalar::one(tr.ring->field));
}

} // namespace

std::vector<FExponent> power_generators(int t, int c, int m) {
    check_params(t, c, m);
    std::vector<FExponent> out;
    FExponent cur(t, 0);
    fill(out, cur, 0, (t - c + 1) * m, m);
    return out;
}

std::vector<FExponent> power_generators_by_products(int t, int c, int m) {
    auto base = power_generators(t, c, 1);
    std::set<FExponent> cur{FExponent(t, 0)};
    for (int step = 0; step < m; ++step) {
        std::set<FExponent> next;
        for (const auto& e : cur)
            for (const auto& g : base) next.insert(add(e, g));
        cur = std::move(next);
    }
    return {cur.rbegin(), cur.rend()};
}

TaylorRing::TaylorRing(int t_, int c_, int m_, Realization real_, Field field)
    : t(t_), c(c_), m(m_), real(std::move(real_)), gens(power_generators(t_, c_, m_)) {
    if (static_cast<int>(real.powers.size()) != t) fail(ErrorKind::Parameter, "realization needs one entry per form");
    Realization::weighted(real.powers, real.weights); // validates
    ring = make_ring(VarSpace(t, static_cast<int>(gens.size()), false, real.weights), std::move(field));
}

Poly TaylorRing::F_power(const FExponent& e) const {
    Monomial mono(ring->nvars());
    for (int i = 0; i < t; ++i) {
        const unsigned p = static_cast<unsigned>(e[i]) * real.powers[i];
        if (p > 0xffff) fail(ErrorKind::Resource, "exponent overflow");
        mono.e[i] = static_cast<std::uint16_t>(p);
    }
    return Poly::monomial(ring, mono, Scalar::one(ring->field));
}

std::vector<Poly> TaylorRing::generators() const {
    std::vector<Poly> out;
    for (const auto& g : gens) out.push_back(F_power(g));
    return out;
}

TaylorRelation taylor_relation(const TaylorRing& tr, std::vector<int> alpha, std::vector<int> beta) {
    if (alpha.size() != beta.size() || alpha.empty()) fail(ErrorKind::Parameter, "index tuples must have one length s >= 1");
    FExponent ga = sum_of(tr, alpha), gb = sum_of(tr, beta);
    TaylorRelation rel{std::move(alpha), std::move(beta), FExponent(tr.t), FExponent(tr.t)};
    for (int i = 0; i < tr.t; ++i) {
        const int g = std::min(ga[i], gb[i]);
        rel.theta[i] = gb[i] - g;
        rel.delta[i] = ga[i] - g;
    }
    return rel;
}

Poly taylor_poly(const TaylorRing& tr, const TaylorRelation& rel) {
    return tr.F_power(rel.theta) * T_prod(tr, rel.alpha) - tr.F_power(rel.delta) * T_prod(tr, rel.beta);
}

std::vector<Poly> fiber_quadrics(const TaylorRing& tr) {
    const int mu = static_cast<int>(tr.gens.size());
    std::map<FExponent, std::vector<std::pair<int, int>>> by_sum;
    for (int i = 1; i <= mu; ++i)
        for (int j = i; j <= mu; ++j) by_sum[add(tr.gens[i - 1], tr.gens[j - 1])].push_back({i, j});
    std::vector<Poly> out;
    for (auto& [sum, pairs] : by_sum) {
        std::sort(pairs.rbegin(), pairs.rend());
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                Poly q = T_prod(tr, {pairs[a].first, pairs[a].second}) - T_prod(tr, {pairs[b].first, pairs[b].second});
                out.push_back(q.monic());
            }
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return a.ring()->order.compare(a.lm(), b.lm()) < 0 ||
               (a.lm() == b.lm() && a.ring()->order.compare(a.terms()[1].mono, b.terms()[1].mono) < 0);
    });
    return out;
}

TaylorEquations regular_case_equations(const TaylorRing& tr) {
    TaylorEquations eq;
    const int mu = static_cast<int>(tr.gens.size());
    for (int a = 1; a <= mu; ++a)
        for (int b = a + 1; b <= mu; ++b) eq.linear.push_back(taylor_poly(tr, taylor_relation(tr, {a}, {b})));
    eq.quadrics = fiber_quadrics(tr);
    return eq;
}

std::string fexponent_text(const FExponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += "*";
        out += "F" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace starrees
