#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "starrees/errors.hpp"

namespace starrees {

// Field descriptor: the rationals, or GF(p) for a prime p < 2^63.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    // Accepts "Q", "QQ", "Fp:101", "GF(101)".
    static Field parse(std::string_view text);

    bool is_rational() const { return modulus_ == 0; }
    std::uint64_t modulus() const { return modulus_; }

    // Small characteristics make accidental vanishing of minors likely.
    bool small_characteristic() const { return modulus_ != 0 && modulus_ < 50; }

    std::string to_string() const;

    bool operator==(const Field&) const = default;

  private:
    explicit Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

// An exact field element. Rationals are kept reduced with a positive
// denominator; residues are kept in [0, p).
class Scalar {
  public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_int(const Field& field, long value);
    static Scalar from_mpz(const Field& field, const mpz_class& value);

    // Reduced rational num/den; throws DivisionByZero when den == 0.
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar residue(std::uint64_t value, std::uint64_t p);

    // Parses "a/b", "a", "a mod p". Over GF(p) a plain rational "a/b" is
    // mapped into the field.
    static Scalar parse(std::string_view text, const Field& field);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical standalone text: "a/b", "a" or "a mod p".
    std::string to_string() const;

    // Coefficient text used inside polynomials. Residues are printed in the
    // symmetric range (-p/2, p/2].
    std::string coefficient_text() const;

    // Rational value (numerator, denominator) or residue; used by tests.
    const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }
    std::uint64_t residue_value() const;

    std::size_t hash() const;

  private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };

    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(Residue r) : value_(r) {}

    const Residue& residue_checked(const Scalar& o) const;

    std::variant<mpq_class, Residue> value_;
};

} // namespace starrees
