#include "starrees/scalar.hpp"

#include <charconv>
#include <functional>

namespace starrees {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::IncompatibleOperands: return "incompatible-operands";
    case ErrorKind::UndefinedContent: return "undefined-content";
    case ErrorKind::Selection: return "selection";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::UnsupportedHeight: return "unsupported-height";
    case ErrorKind::TrivialDependency: return "trivial-dependency";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Extended Euclid; returns x with a*x = 1 mod m, a != 0 and gcd(a, m) = 1.
u64 invmod(u64 a, u64 m) {
    __int128 old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    __int128 x = old_s % static_cast<__int128>(m);
    if (x < 0) x += m;
    return static_cast<u64>(x);
}

u64 reduce_mpz(const mpz_class& v, u64 p) {
    mpz_class r;
    mpz_class mod;
    mpz_import(mod.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    u64 out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return count == 0 ? 0 : out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    s = trim(s);
    std::string buf(s);
    if (buf.empty()) fail(ErrorKind::Parse, "empty integer");
    std::size_t start = (buf[0] == '-' || buf[0] == '+') ? 1 : 0;
    if (start == buf.size()) fail(ErrorKind::Parse, "malformed integer '" + buf + "'");
    for (std::size_t i = start; i < buf.size(); ++i)
        if (buf[i] < '0' || buf[i] > '9') fail(ErrorKind::Parse, "malformed integer '" + buf + "'");
    if (buf[0] == '+') buf.erase(0, 1);
    return mpz_class(buf, 10);
}

u64 parse_u64(std::string_view s) {
    s = trim(s);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        fail(ErrorKind::Parse, "malformed modulus '" + std::string(s) + "'");
    return v;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 63) || !is_prime(p))
        fail(ErrorKind::Parameter, "modulus " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    text = trim(text);
    if (text == "Q" || text == "QQ") return rationals();
    if (text.starts_with("Fp:")) return prime(parse_u64(text.substr(3)));
    if (text.starts_with("GF(") && text.ends_with(")"))
        return prime(parse_u64(text.substr(3, text.size() - 4)));
    fail(ErrorKind::Parse, "unknown field descriptor '" + std::string(text) + "'");
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Scalar Scalar::zero(const Field& field) { return from_int(field, 0); }
Scalar Scalar::one(const Field& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const Field& field, long value) {
    if (field.is_rational()) return Scalar(mpq_class(value));
    const u64 p = field.modulus();
    long long r = static_cast<long long>(value % static_cast<long long>(p));
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(Residue{static_cast<u64>(r), p});
}

Scalar Scalar::from_mpz(const Field& field, const mpz_class& value) {
    if (field.is_rational()) return Scalar(mpq_class(value));
    return Scalar(Residue{reduce_mpz(value, field.modulus()), field.modulus()});
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
    Field::prime(p);
    return Scalar(Residue{value % p, p});
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
    text = trim(text);
    if (auto pos = text.find("mod"); pos != std::string_view::npos) {
        const u64 p = parse_u64(text.substr(pos + 3));
        if (field.is_rational() || field.modulus() != p)
            fail(ErrorKind::IncompatibleOperands,
                 "scalar '" + std::string(text) + "' does not belong to field " + field.to_string());
        return from_mpz(field, parse_integer(text.substr(0, pos)));
    }
    mpz_class num, den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = parse_integer(text.substr(0, slash));
        den = parse_integer(text.substr(slash + 1));
    } else {
        num = parse_integer(text);
    }
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    if (field.is_rational()) return rational(num, den);
    return from_mpz(field, num) / from_mpz(field, den);
}

Field Scalar::field() const {
    if (auto r = std::get_if<Residue>(&value_)) return Field::prime(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

const Scalar::Residue& Scalar::residue_checked(const Scalar& o) const {
    auto* b = std::get_if<Residue>(&o.value_);
    if (!b || b->modulus != std::get<Residue>(value_).modulus)
        fail(ErrorKind::IncompatibleOperands, "scalars from different fields");
    return *b;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (auto a = std::get_if<Residue>(&value_)) {
        const Residue& b = residue_checked(o);
        u64 s = a->value + b.value;
        if (s >= a->modulus) s -= a->modulus;
        return Scalar(Residue{s, a->modulus});
    }
    auto* b = std::get_if<mpq_class>(&o.value_);
    if (!b) fail(ErrorKind::IncompatibleOperands, "scalars from different fields");
    return Scalar(mpq_class(std::get<mpq_class>(value_) + *b));
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (auto a = std::get_if<Residue>(&value_)) {
        const Residue& b = residue_checked(o);
        u64 s = a->value >= b.value ? a->value - b.value : a->value + (a->modulus - b.value);
        return Scalar(Residue{s, a->modulus});
    }
    auto* b = std::get_if<mpq_class>(&o.value_);
    if (!b) fail(ErrorKind::IncompatibleOperands, "scalars from different fields");
    return Scalar(mpq_class(std::get<mpq_class>(value_) - *b));
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (auto a = std::get_if<Residue>(&value_)) {
        const Residue& b = residue_checked(o);
        return Scalar(Residue{mulmod(a->value, b.value, a->modulus), a->modulus});
    }
    auto* b = std::get_if<mpq_class>(&o.value_);
    if (!b) fail(ErrorKind::IncompatibleOperands, "scalars from different fields");
    return Scalar(mpq_class(std::get<mpq_class>(value_) * *b));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (auto a = std::get_if<Residue>(&value_))
        return Scalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::NotInvertible, "zero has no inverse");
    if (auto a = std::get_if<Residue>(&value_))
        return Scalar(Residue{invmod(a->value, a->modulus), a->modulus});
    const mpq_class& q = std::get<mpq_class>(value_);
    mpq_class inv(q.get_den(), q.get_num());
    inv.canonicalize();
    return Scalar(std::move(inv));
}

bool Scalar::operator==(const Scalar& o) const {
    if (auto a = std::get_if<Residue>(&value_)) {
        auto* b = std::get_if<Residue>(&o.value_);
        return b && a->modulus == b->modulus && a->value == b->value;
    }
    auto* b = std::get_if<mpq_class>(&o.value_);
    return b && std::get<mpq_class>(value_) == *b;
}

std::string Scalar::to_string() const {
    if (auto a = std::get_if<Residue>(&value_))
        return std::to_string(a->value) + " mod " + std::to_string(a->modulus);
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::coefficient_text() const {
    if (auto a = std::get_if<Residue>(&value_)) {
        if (a->value > a->modulus / 2) return "-" + std::to_string(a->modulus - a->value);
        return std::to_string(a->value);
    }
    return to_string();
}

std::uint64_t Scalar::residue_value() const {
    if (auto a = std::get_if<Residue>(&value_)) return a->value;
    fail(ErrorKind::IncompatibleOperands, "not a prime-field scalar");
}

std::size_t Scalar::hash() const {
    if (auto a = std::get_if<Residue>(&value_)) return std::hash<u64>{}(a->value * 1000003u + a->modulus);
    return std::hash<std::string>{}(to_string());
}

} // namespace starrees
