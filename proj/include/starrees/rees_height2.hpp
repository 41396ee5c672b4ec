#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starrees/linalg.hpp"
#include "starrees/polyring.hpp"
#include "starrees/star_config.hpp"

namespace starrees {

// Index sets in this module are 1-based and sorted: values 1..n name the
// variables x_j (rows of U), values n+1..t name L_{j-n} (columns of U).

// Ring in T_1..T_t only; enough for everything built from U alone.
RingPtr fiber_ring(const StarConfig& cfg);

// Throws UnsupportedHeight for c != 2 and DegenerateInput when two forms
// are proportional (the product formula for the generators needs every
// pair of forms to be independent).
void require_height_two(const StarConfig& cfg);

PolyMatrix presentation_matrix(const StarConfig& cfg, const RingPtr& ring);
std::vector<Poly> linear_relations(const StarConfig& cfg, const RingPtr& ring);
PolyMatrix jacobian_dual(const StarConfig& cfg, const RingPtr& ring);

Scalar minor_U(const StarConfig& cfg, const std::vector<int>& chi);
Poly m_theta(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta);

// All (r-1)-subsets of {1..t}, lexicographic; optionally those avoiding n.
std::vector<std::vector<int>> theta_sets(const StarConfig& cfg, bool avoid_n);

struct ThetaPoly {
    std::vector<int> theta;
    Poly m;
    bool zero;
};
std::vector<ThetaPoly> minors_ideal_generators(const StarConfig& cfg, const RingPtr& ring);

struct HFactor {
    Monomial f;
    Poly h;
};
// nullopt for the zero polynomial.
std::optional<HFactor> h_theta_factor(const Poly& m);

// One monic representative per associate class, sorted by (T-degree, leading
// monomial).
std::vector<Poly> ideal_P(const StarConfig& cfg, const RingPtr& ring);

struct ReesEquations {
    std::vector<Poly> linear;
    std::vector<Poly> fiber;
};
ReesEquations rees_defining_ideal(const StarConfig& cfg, const RingPtr& ring);

struct Dependency {
    std::vector<Scalar> a; // coefficients of L_1..L_r
    std::vector<Scalar> b; // coefficients of x_1..x_n
    std::vector<int> support;

    // c_k for k in 1..t
    Scalar coefficient(int k) const;
    std::string to_string(const StarConfig& cfg) const;
};

Dependency make_dependency(const StarConfig& cfg, const std::vector<Scalar>& a);
Poly delta(const StarConfig& cfg, const RingPtr& ring, const Dependency& d);
std::pair<Dependency, Poly> dependency_relation(const StarConfig& cfg, const RingPtr& ring,
                                                const std::vector<Scalar>& a);
// The dependency vanishing on theta, scaled so that its delta equals h_theta.
// nullopt when h_theta is zero.
std::optional<Dependency> h_theta_dependency(const StarConfig& cfg, const RingPtr& ring,
                                             const std::vector<int>& theta);

struct LambdaQ {
    std::vector<std::vector<int>> lambda;  // every chi with the vanishing property
    std::vector<std::vector<int>> minimal; // inclusion-minimal members
    std::vector<std::vector<int>> q_generators; // index sets of squarefree monomials
    bool unit = true;

    std::vector<Poly> q_polys(const RingPtr& ring) const;
};
LambdaQ lambda_Q(const StarConfig& cfg);

// m_theta != 0 for every theta.
bool all_m_theta_nonzero(const StarConfig& cfg, const RingPtr& ring);
// Rank side of the vanishing criterion for m_theta.
bool vanishing_by_rank(const StarConfig& cfg, const std::vector<int>& theta);

struct PrimaryReport {
    bool hypothesis = false;
    bool confirmed = false;
    LambdaQ lq;
    std::vector<Poly> P;
    std::vector<Poly> minors;
    std::string note;
};
PrimaryReport primary_decomposition_check(const StarConfig& cfg);

struct PSequence {
    std::vector<int> theta;
    std::vector<Poly> seq; // p^(1) .. p^(e)
};
PSequence p_theta_sequence(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta);

struct PRecursionReport {
    std::vector<Poly> seq;
    std::size_t identities_checked = 0;
    Scalar sign; // p^(e) = sign * m_theta
};
// Throws InternalConsistency if an identity fails.
PRecursionReport p_theta_recursion_check(const StarConfig& cfg, const RingPtr& ring, const std::vector<int>& theta);

struct ZeroRowReport {
    int zero_row; // 1-based row of U that is zero
    StarConfig reduced;
    bool minors_factor;
    bool P_unchanged;
};
// nullopt when U has no zero row.
std::optional<ZeroRowReport> zero_row_reduce(const StarConfig& cfg);

} // namespace starrees
