#include "starrees/star_config.hpp"

#include <algorithm>
#include <set>

namespace starrees {

StarConfig::StarConfig(ScalarMatrix U, int c, std::vector<unsigned> x_weights, std::vector<std::string> x_names)
    : U_(std::move(U)), c_(c), x_weights_(std::move(x_weights)), x_names_(std::move(x_names)) {
    if (U_.rows() < 1) fail(ErrorKind::Parameter, "a star configuration needs at least one variable");
    if (c_ < 1 || c_ > n()) fail(ErrorKind::Parameter, "height c must satisfy 1 <= c <= n");
    if (x_weights_.empty()) x_weights_.assign(n(), 1);
    if (static_cast<int>(x_weights_.size()) != n()) fail(ErrorKind::Parameter, "x-weight count mismatch");
    // Each L_i must be homogeneous for the weights.
    for (int i = 0; i < r(); ++i) {
        unsigned w = 0;
        for (int j = 0; j < n(); ++j) {
            if (U_.at(j, i).is_zero()) continue;
            if (w && w != x_weights_[j])
                fail(ErrorKind::Parameter, "L" + std::to_string(i + 1) + " is not homogeneous for the x-weights");
            w = x_weights_[j];
        }
    }
    x_ring(); // validates names
}

StarConfig StarConfig::with_c(int c) const { return StarConfig(U_, c, x_weights_, x_names_); }

std::vector<Scalar> StarConfig::coefficients(int k) const {
    if (k < 1 || k > t()) fail(ErrorKind::Selection, "form index out of range");
    std::vector<Scalar> v(n(), Scalar::zero(field()));
    if (k <= n())
        v[k - 1] = Scalar::one(field());
    else
        for (int j = 0; j < n(); ++j) v[j] = U_.at(j, k - n() - 1);
    return v;
}

ScalarMatrix StarConfig::coefficient_matrix(const std::vector<int>& subset) const {
    ScalarMatrix m(static_cast<int>(subset.size()), n(), field());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        auto v = coefficients(subset[i]);
        for (int j = 0; j < n(); ++j) m.at(int(i), j) = v[j];
    }
    return m;
}

RingPtr StarConfig::x_ring() const { return make_ring(VarSpace(n(), 0, false, x_weights_, x_names_), field()); }

RingPtr StarConfig::rees_ring() const {
    return make_ring(VarSpace(n(), t(), false, x_weights_, x_names_), field());
}

Poly StarConfig::form(const RingPtr& ring, int k) const {
    if (ring->vars.nx() != n()) fail(ErrorKind::IncompatibleOperands, "ring has a different x-block");
    auto v = coefficients(k);
    std::vector<Term> terms;
    for (int j = 0; j < n(); ++j)
        if (!v[j].is_zero()) terms.push_back({Monomial::variable(ring->nvars(), j), v[j]});
    return Poly::from_terms(ring, std::move(terms));
}

std::vector<Poly> StarConfig::forms(const RingPtr& ring) const {
    std::vector<Poly> out;
    for (int k = 1; k <= t(); ++k) out.push_back(form(ring, k));
    return out;
}

std::string StarConfig::form_text(int k) const { return form(x_ring(), k).to_string(); }

Normalization normalize_forms(const ScalarMatrix& raw, int c, std::vector<std::string> x_names) {
    const int m = raw.rows();
    const int d = raw.cols();
    if (m == 0 || raw.is_zero()) fail(ErrorKind::DegenerateInput, "all forms are zero");
    std::vector<int> chosen;
    for (int k = 0; k < m; ++k) {
        std::vector<int> trial = chosen;
        trial.push_back(k);
        if (rank(raw.select_rows(trial)) == static_cast<int>(trial.size())) chosen = std::move(trial);
    }
    const int n = static_cast<int>(chosen.size());
    ScalarMatrix C(d, d, raw.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) C.at(i, j) = raw.at(chosen[i], j);
    // Complete the chosen forms to a basis with unit vectors.
    int row = n;
    for (int j = 0; j < d && row < d; ++j) {
        ScalarMatrix trial(row + 1, d, raw.field());
        for (int i = 0; i < row; ++i)
            for (int k = 0; k < d; ++k) trial.at(i, k) = C.at(i, k);
        trial.at(row, j) = Scalar::one(raw.field());
        if (rank(trial) == row + 1) C.at(row++, j) = Scalar::one(raw.field());
    }
    ScalarMatrix Cinv = inverse(C);
    ScalarMatrix image = raw * Cinv;
    std::vector<int> order = chosen;
    for (int k = 0; k < m; ++k)
        if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) order.push_back(k);
    const int r = m - n;
    ScalarMatrix U(n, r, raw.field());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) U.at(j, i) = image.at(order[n + i], j);
    bool identity = (d == n) && C == ScalarMatrix::identity(d, raw.field());
    for (int k = 0; k < m && identity; ++k) identity = order[k] == k;
    if (!identity || static_cast<int>(x_names.size()) != n) x_names.clear();
    return Normalization{StarConfig(std::move(U), c, {}, std::move(x_names)),
                         std::move(order), std::move(C), std::move(Cinv), identity};
}

std::vector<std::vector<int>> omitted_sets(int t, int c) {
    auto sets = subsets(t, c - 1);
    for (auto& s : sets)
        for (auto& k : s) ++k;
    return sets;
}

std::vector<Poly> star_generators(const std::vector<Poly>& forms, int c) {
    const int t = static_cast<int>(forms.size());
    if (t == 0) fail(ErrorKind::Parameter, "no forms");
    if (c < 1 || c > t) fail(ErrorKind::Parameter, "height c out of range");
    std::vector<Poly> out;
    for (const auto& omit : omitted_sets(t, c)) {
        Poly g = Poly::constant(forms[0].ring(), 1);
        for (int k = 1; k <= t; ++k)
            if (std::find(omit.begin(), omit.end(), k) == omit.end()) g *= forms[k - 1];
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Poly> star_generators(const StarConfig& cfg) {
    return star_generators(cfg.forms(cfg.x_ring()), cfg.c());
}

bool is_regular_sequence(const StarConfig& cfg, const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) > cfg.n()) return false;
    return rank(cfg.coefficient_matrix(subset)) == static_cast<int>(subset.size());
}

namespace {

std::vector<std::vector<int>> one_based_subsets(int t, int k) {
    auto sets = subsets(t, k);
    for (auto& s : sets)
        for (auto& v : s) ++v;
    return sets;
}

} // namespace

bool verify_star_condition(const StarConfig& cfg) {
    const int k = cfg.c() + 1;
    if (k > cfg.t()) return true;
    for (const auto& s : one_based_subsets(cfg.t(), k))
        if (!is_regular_sequence(cfg, s)) return false;
    return true;
}

bool pairwise_independent(const StarConfig& cfg) {
    for (int k = 1; k <= cfg.t(); ++k)
        if (!is_regular_sequence(cfg, {k})) return false;
    if (cfg.n() < 2) return cfg.t() <= 1;
    for (const auto& s : one_based_subsets(cfg.t(), 2))
        if (!is_regular_sequence(cfg, s)) return false;
    return true;
}

bool subset_rank_condition(const StarConfig& cfg, int s) {
    const int n = cfg.n(), r = cfg.r();
    if (s < 2 || s > n) fail(ErrorKind::Parameter, "s must satisfy 2 <= s <= n");
    for (int h = 1; h <= std::min(r, s); ++h) {
        const int rows = h + n - s;
        for (const auto& rs : subsets(n, rows))
            for (const auto& cs : subsets(r, h))
                if (rank(cfg.U().select(rs, cs)) < h) return false;
    }
    return true;
}

bool all_s_subsets_regular(const StarConfig& cfg, int s) {
    if (s < 2 || s > cfg.n()) fail(ErrorKind::Parameter, "s must satisfy 2 <= s <= n");
    for (const auto& sub : one_based_subsets(cfg.t(), s))
        if (!is_regular_sequence(cfg, sub)) return false;
    return true;
}

std::vector<int> closure(const StarConfig& cfg, const std::vector<int>& subset) {
    const int base = subset.empty() ? 0 : rank(cfg.coefficient_matrix(subset));
    std::vector<int> out;
    for (int k = 1; k <= cfg.t(); ++k) {
        if (std::find(subset.begin(), subset.end(), k) != subset.end()) {
            out.push_back(k);
            continue;
        }
        std::vector<int> trial = subset;
        trial.push_back(k);
        if (rank(cfg.coefficient_matrix(trial)) == base) out.push_back(k);
    }
    return out;
}

GsResult check_Gs(const StarConfig& cfg, int s) {
    if (s < 2 || s > cfg.n()) fail(ErrorKind::Parameter, "s must satisfy 2 <= s <= n");
    const int t = cfg.t();
    for (int size = 1; size <= cfg.n(); ++size) {
        for (const auto& H : one_based_subsets(t, size)) {
            const int rk = rank(cfg.coefficient_matrix(H));
            if (rk > s - 1) continue;
            if (cfg.c() == 2) {
                if (rk < size) return {false, H};
            } else if (rk == size) {
                auto q = closure(cfg, H);
                if (static_cast<int>(q.size()) > cfg.c()) return {false, q};
            }
        }
    }
    return {true, {}};
}

bool linear_type_check(const StarConfig& cfg) { return cfg.c() == 2 && cfg.t() == cfg.n(); }

Localization localize(const StarConfig& cfg, const std::vector<int>& subset) {
    auto q = closure(cfg, subset);
    const int height = subset.empty() ? 0 : rank(cfg.coefficient_matrix(subset));
    const int k = static_cast<int>(q.size());
    Localization::Kind kind = k < cfg.c()    ? Localization::Kind::Unit
                              : k == cfg.c() ? Localization::Kind::CompleteIntersection
                                             : Localization::Kind::StarConfiguration;
    return {kind, std::move(q), height};
}

std::string to_string(Localization::Kind k) {
    switch (k) {
    case Localization::Kind::Unit: return "unit";
    case Localization::Kind::CompleteIntersection: return "complete-intersection";
    case Localization::Kind::StarConfiguration: return "star-configuration";
    }
    return "?";
}

std::vector<std::vector<int>> nlt_minimal_primes(const StarConfig& cfg) {
    const int t = cfg.t();
    std::set<std::vector<int>> flats;
    for (int size = 1; size <= cfg.n(); ++size) {
        for (const auto& H : one_based_subsets(t, size)) {
            const int rk = rank(cfg.coefficient_matrix(H));
            if (rk >= cfg.n()) continue; // the maximal ideal is excluded
            if (cfg.c() == 2) {
                if (rk < size) flats.insert(closure(cfg, H));
            } else if (rk == size) {
                auto q = closure(cfg, H);
                if (static_cast<int>(q.size()) > cfg.c()) flats.insert(std::move(q));
            }
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& f : flats) {
        bool minimal = true;
        for (const auto& g : flats) {
            if (g == f || g.size() >= f.size()) continue;
            if (std::includes(f.begin(), f.end(), g.begin(), g.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace starrees
