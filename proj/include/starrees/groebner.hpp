#pragma once

#include <cstddef>
#include <vector>

#include "starrees/polyring.hpp"

namespace starrees {

// Caps applied to every Buchberger run. STARREES_GB_MAX_BASIS and
// STARREES_GB_MAX_DEGREE override the defaults.
struct GroebnerLimits {
    std::size_t max_basis = 20000;
    unsigned max_degree = 400;

    static GroebnerLimits from_env();
};

class GroebnerBasis {
  public:
    GroebnerBasis(RingPtr ring, std::vector<Poly> basis, std::vector<Poly> source)
        : ring_(std::move(ring)), basis_(std::move(basis)), source_(std::move(source)) {}

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ring_->order; }
    // Reduced, monic, sorted by increasing leading monomial.
    const std::vector<Poly>& basis() const { return basis_; }
    const std::vector<Poly>& source() const { return source_; }

    Poly normal_form(const Poly& f) const;
    bool member(const Poly& f) const { return normal_form(f).is_zero(); }
    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return basis_.empty(); }

    bool operator==(const GroebnerBasis& o) const;

  private:
    RingPtr ring_;
    std::vector<Poly> basis_;
    std::vector<Poly> source_;
};

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis = 0;
};

// Reduced Groebner basis of the ideal generated by gens, under the order of
// `ring`. Generators are moved into `ring` first (same variables and field).
GroebnerBasis buchberger_reduced(const RingPtr& ring, const std::vector<Poly>& gens,
                                 const GroebnerLimits& limits = GroebnerLimits::from_env(),
                                 GroebnerStats* stats = nullptr);

// Normal form of f by a list of polynomials (full reduction).
Poly reduce_by(const Poly& f, const std::vector<Poly>& divisors);

bool ideal_member(const Poly& f, const GroebnerBasis& gb);

// Both sides are compared through reduced bases under degrevlex on `ring`'s
// variables.
bool ideal_equal(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);
// True when every element of b lies in the ideal of a.
bool ideal_contains(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);

// Generators of (gens) intersected with the subring free of `block`. The
// weights, when given, make the input homogeneous and speed up the run.
std::vector<Poly> eliminate(const RingPtr& ring, const std::vector<Poly>& gens, const std::vector<int>& block,
                            const std::vector<unsigned>& weights = {});

// (A) ∩ (B) via s*A + (1-s)*B with s eliminated. `ring` must not carry the
// auxiliary variable already.
std::vector<Poly> ideal_intersect(const RingPtr& ring, const std::vector<Poly>& a, const std::vector<Poly>& b);

// Kernel of T_i -> g_i*s. `target` is the x,T ring (one T per generator);
// the g_i are given in any ring with the same x-block.
std::vector<Poly> rees_ideal_oracle(const RingPtr& target, const std::vector<Poly>& g);

// Image of f under T_i -> g_i*s, as a polynomial in the x-block plus s.
Poly rees_substitute(const Poly& f, const std::vector<Poly>& g);

} // namespace starrees
