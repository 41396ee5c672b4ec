#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "starrees/scalar.hpp"

namespace starrees {

// Variables are laid out as x1..xn, then T1..Tt, then the auxiliary s.
// All public indices below are 0-based positions in that list.
class VarSpace {
  public:
    VarSpace() = default;
    VarSpace(int nx, int nt, bool aux = false, std::vector<unsigned> x_weights = {},
             std::vector<std::string> x_names = {});

    int nx() const { return nx_; }
    int nt() const { return nt_; }
    bool has_aux() const { return aux_; }
    int size() const { return nx_ + nt_ + (aux_ ? 1 : 0); }

    // 1-based helpers matching the mathematical names.
    int x(int i) const { return i - 1; }
    int T(int j) const { return nx_ + j - 1; }
    int aux() const;

    bool is_x(int v) const { return v < nx_; }
    bool is_T(int v) const { return v >= nx_ && v < nx_ + nt_; }

    unsigned x_weight(int i) const { return x_weights_[i]; }
    const std::vector<unsigned>& x_weights() const { return x_weights_; }
    const std::vector<std::string>& x_names() const { return x_names_; }

    std::string name(int v) const;
    std::optional<int> lookup(std::string_view name) const;

    VarSpace with_aux(bool aux = true) const;
    VarSpace with_nt(int nt) const;

    bool operator==(const VarSpace&) const = default;

  private:
    int nx_ = 0;
    int nt_ = 0;
    bool aux_ = false;
    std::vector<unsigned> x_weights_;
    std::vector<std::string> x_names_;
};

using Exponents = boost::container::small_vector<std::uint16_t, 16>;

struct Monomial {
    Exponents e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    static Monomial variable(int nvars, int v, unsigned power = 1);

    int size() const { return static_cast<int>(e.size()); }
    std::uint16_t operator[](int v) const { return e[v]; }
    unsigned degree() const;
    bool is_one() const;
    bool is_squarefree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o).
    Monomial quotient_of(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Plain lexicographic comparison of exponent vectors, for use in maps.
    bool operator<(const Monomial& o) const { return e < o.e; }

    std::size_t hash() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MonomialOrder {
  public:
    enum class Kind { Degrevlex, Lex, Block };

    // weights are per variable; empty means all 1.
    static MonomialOrder degrevlex(std::vector<unsigned> weights = {});
    static MonomialOrder lex();
    // Degrevlex on the block variables first, then degrevlex on the rest.
    static MonomialOrder block(std::vector<int> block_vars, std::vector<unsigned> weights = {});

    Kind kind() const { return kind_; }
    const std::vector<int>& block_vars() const { return block_; }
    const std::vector<unsigned>& weights() const { return weights_; }

    // -1, 0, 1 as a is smaller, equal, larger.
    int compare(const Monomial& a, const Monomial& b) const;

    std::string to_string() const;
    bool operator==(const MonomialOrder&) const = default;

  private:
    unsigned weight(int v) const { return v < static_cast<int>(weights_.size()) ? weights_[v] : 1; }
    bool in_block(int v) const { return v < static_cast<int>(block_mask_.size()) && block_mask_[v]; }
    int grevlex_on(const Monomial& a, const Monomial& b, bool block_part) const;

    Kind kind_ = Kind::Degrevlex;
    std::vector<int> block_;
    std::vector<char> block_mask_;
    std::vector<unsigned> weights_;
};

struct Ring {
    VarSpace vars;
    Field field = Field::rationals();
    MonomialOrder order;

    int nvars() const { return vars.size(); }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(VarSpace vars, Field field, MonomialOrder order = MonomialOrder::degrevlex());
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Terms are kept strictly decreasing under the ring's order with no zero
// coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(const RingPtr& ring, const Scalar& c);
    static Poly constant(const RingPtr& ring, long c);
    static Poly variable(const RingPtr& ring, int v);
    static Poly monomial(const RingPtr& ring, Monomial m, Scalar c);
    static Poly from_terms(const RingPtr& ring, std::vector<Term> terms);
    static Poly parse(const RingPtr& ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term& lead() const;
    const Monomial& lm() const { return lead().mono; }
    const Scalar& lc() const { return lead().coeff; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scale(const Scalar& c) const;
    Poly mul_term(const Monomial& m, const Scalar& c) const;
    // this - c*m*g, in one merge pass.
    Poly sub_mul_term(const Scalar& c, const Monomial& m, const Poly& g) const;
    Poly pow(unsigned k) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

    // Same variables and field under another order.
    Poly with_order(const MonomialOrder& order) const;
    Poly in_ring(const RingPtr& target) const;

    unsigned total_degree() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool involves(int v) const;
    // Removes the leading term in place.
    void drop_lead() { terms_.erase(terms_.begin()); }

  private:
    void check_compatible(const Poly& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

// (weighted x-degree, T-degree) when all terms agree; the auxiliary
// variable counts toward neither.
std::optional<std::pair<long, long>> bidegree(const Poly& f);

Monomial content_monomial(const Poly& f);
Poly divide_monomial(const Poly& f, const Monomial& m);
std::optional<Poly> try_divide(const Poly& f, const Poly& g);
Poly divide_exact(const Poly& f, const Poly& g);

// Ring homomorphism sending variable v of f's ring to images[v].
Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images);
// Renames variable v to var_map[v] in target (which may have more variables).
Poly embed(const Poly& f, const RingPtr& target, const std::vector<int>& var_map);

// True when a = ratio * b for a nonzero scalar ratio.
bool proportional(const Poly& a, const Poly& b, Scalar* ratio = nullptr);

std::string monomial_text(const VarSpace& vars, const Monomial& m);

} // namespace starrees
