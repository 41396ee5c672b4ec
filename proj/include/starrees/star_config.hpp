#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starrees/linalg.hpp"
#include "starrees/polyring.hpp"

namespace starrees {

// Forms are indexed 1..t: x_1..x_n first, then L_1..L_r. Column i of U holds
// the coefficients of L_i, row j the coefficient of x_j.
class StarConfig {
  public:
    StarConfig(ScalarMatrix U, int c, std::vector<unsigned> x_weights = {}, std::vector<std::string> x_names = {});

    int n() const { return U_.rows(); }
    int r() const { return U_.cols(); }
    int t() const { return n() + r(); }
    int c() const { return c_; }
    const ScalarMatrix& U() const { return U_; }
    const Field& field() const { return U_.field(); }
    const std::vector<unsigned>& x_weights() const { return x_weights_; }
    const std::vector<std::string>& x_names() const { return x_names_; }

    StarConfig with_c(int c) const;

    // coefficient vector (length n) of form k
    std::vector<Scalar> coefficients(int k) const;
    // |subset| x n coefficient matrix
    ScalarMatrix coefficient_matrix(const std::vector<int>& subset) const;

    // Ring in the x-block only.
    RingPtr x_ring() const;
    // Ring with x_1..x_n and T_1..T_t.
    RingPtr rees_ring() const;
    // Form k as a polynomial in ring (which must share the x-block).
    Poly form(const RingPtr& ring, int k) const;
    std::vector<Poly> forms(const RingPtr& ring) const;

    std::string form_text(int k) const;

  private:
    ScalarMatrix U_;
    int c_;
    std::vector<unsigned> x_weights_;
    std::vector<std::string> x_names_;
};

struct Normalization {
    StarConfig cfg;
    // Original (0-based) position of each form of cfg.
    std::vector<int> order;
    // Raw coefficient rows times change_inverse give the normalized rows;
    // change has the chosen forms as its first n rows.
    ScalarMatrix change;
    ScalarMatrix change_inverse;
    bool identity = false;
};

// raw: one row per form, one column per ambient variable.
Normalization normalize_forms(const ScalarMatrix& raw, int c, std::vector<std::string> x_names = {});

// Products of all (t-c+1)-subsets of forms, ordered lexicographically by the
// omitted index set.
std::vector<Poly> star_generators(const std::vector<Poly>& forms, int c);
std::vector<Poly> star_generators(const StarConfig& cfg);
std::vector<std::vector<int>> omitted_sets(int t, int c);

bool is_regular_sequence(const StarConfig& cfg, const std::vector<int>& subset);
bool verify_star_condition(const StarConfig& cfg);
// Every pair of forms is independent; enough for the generator formula.
bool pairwise_independent(const StarConfig& cfg);
bool subset_rank_condition(const StarConfig& cfg, int s);
// Exhaustive side of the rank criterion: every s-subset is regular.
bool all_s_subsets_regular(const StarConfig& cfg, int s);

struct GsResult {
    bool holds;
    std::vector<int> witness;
};
GsResult check_Gs(const StarConfig& cfg, int s);

bool linear_type_check(const StarConfig& cfg);

struct Localization {
    enum class Kind { Unit, CompleteIntersection, StarConfiguration };
    Kind kind;
    std::vector<int> forms; // F ∩ q
    int height;
};
Localization localize(const StarConfig& cfg, const std::vector<int>& subset);
std::string to_string(Localization::Kind k);

// Forms of F lying in span(subset).
std::vector<int> closure(const StarConfig& cfg, const std::vector<int>& subset);

// Each entry lists the forms in a minimal prime of the non-linear-type locus.
std::vector<std::vector<int>> nlt_minimal_primes(const StarConfig& cfg);

} // namespace starrees
