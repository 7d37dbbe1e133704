#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields F_p (p odd).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "albert/errors.hpp"

namespace albert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest modulus accepted; keeps residue products inside int64.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

class FieldDescriptor {
public:
    enum class Kind { Rational, PrimeField };

    /// Defaults to the rationals.
    constexpr FieldDescriptor() = default;

    static constexpr FieldDescriptor rational() { return FieldDescriptor{}; }

    static FieldDescriptor prime(std::int64_t p) {
        if (p == 2) throw Char2Field();
        if (p < 3 || p > kMaxModulus || !is_prime(p))
            throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
        FieldDescriptor f;
        f.kind_ = Kind::PrimeField;
        f.p_ = p;
        return f;
    }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_rational() const { return kind_ == Kind::Rational; }
    constexpr bool is_prime_field() const { return kind_ == Kind::PrimeField; }

    /// Characteristic; 0 for the rationals.
    constexpr std::int64_t characteristic() const { return p_; }
    constexpr std::int64_t modulus() const { return p_; }

    std::string to_string() const {
        return is_rational() ? std::string("rational") : "gf " + std::to_string(p_);
    }

    friend constexpr bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

    static constexpr bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    Kind kind_ = Kind::Rational;
    std::int64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) {
    return os << f.to_string();
}

/// A field element tagged with its field. Rationals are kept in lowest terms with
/// positive denominator; residues are reduced into [0, p).
class Scalar {
public:
    Scalar() = default;

    Scalar(FieldDescriptor f, std::int64_t v) : field_(f) {
        if (f.is_rational())
            q_ = v;
        else
            r_ = reduce(v, f.modulus());
    }

    Scalar(FieldDescriptor f, const BigInt& v) : field_(f) {
        if (f.is_rational())
            q_ = v;
        else
            r_ = reduce(v, f.modulus());
    }

    /// num/den interpreted in the field; a denominator vanishing in the field is a DomainError.
    static Scalar fraction(FieldDescriptor f, const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("zero denominator");
        if (f.is_rational()) {
            Scalar s;
            s.q_ = den < 0 ? Rational(-num, -den) : Rational(num, den);
            return s;
        }
        Scalar n(f, num), d(f, den);
        if (d.is_zero())
            throw DomainError("denominator " + den.str() + " vanishes modulo " + std::to_string(f.modulus()));
        return n / d;
    }

    static Scalar from_rational(FieldDescriptor f, const Rational& q) {
        return fraction(f, boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
    }

    static Scalar zero(FieldDescriptor f) { return Scalar(f, 0); }
    static Scalar one(FieldDescriptor f) { return Scalar(f, 1); }

    /// Parses `int` or `num/den`, with optional sign, into the given field.
    static Scalar parse(FieldDescriptor f, std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto slash = text.find('/');
        auto num_text = trim(text.substr(0, slash));
        auto den_text = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
        auto num = parse_integer(num_text);
        auto den = parse_integer(den_text);
        if (!num || !den) throw DomainError("malformed scalar '" + std::string(text) + "'");
        return fraction(f, *num, *den);
    }

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    /// Rational value; only meaningful over the rationals.
    const Rational& rational() const { return q_; }
    BigInt numerator() const {
        return field_.is_rational() ? BigInt(boost::multiprecision::numerator(q_)) : BigInt(r_);
    }
    BigInt denominator() const {
        return field_.is_rational() ? BigInt(boost::multiprecision::denominator(q_)) : BigInt(1);
    }
    /// Residue in [0, p); only meaningful over F_p.
    std::int64_t residue() const { return r_; }

    Scalar operator-() const {
        Scalar s = *this;
        if (field_.is_rational())
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (field_.is_rational())
            q_ += o.q_;
        else
            r_ = (r_ + o.r_) % field_.modulus();
        return *this;
    }

    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (field_.is_rational())
            q_ *= o.q_;
        else
            r_ = (r_ * o.r_) % field_.modulus();
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        Scalar s = *this;
        if (field_.is_rational())
            s.q_ = 1 / q_;
        else
            s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
        return s;
    }

    Scalar pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar result = one(field_), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_) return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(r_);
        auto num = boost::multiprecision::numerator(q_);
        auto den = boost::multiprecision::denominator(q_);
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }

    static std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
        std::int64_t r = 1 % p;
        b %= p;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    static std::int64_t reduce(std::int64_t v, std::int64_t p) {
        v %= p;
        return v < 0 ? v + p : v;
    }

    static std::int64_t reduce(const BigInt& v, std::int64_t p) {
        BigInt m = v % p;
        if (m < 0) m += p;
        return m.convert_to<std::int64_t>();
    }

    static std::optional<BigInt> parse_integer(std::string_view s) {
        if (s.empty()) return std::nullopt;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return std::nullopt;
        BigInt v(std::string(s.substr(i)));
        return s[0] == '-' ? BigInt(-v) : v;
    }

    FieldDescriptor field_;
    Rational q_ = 0;
    std::int64_t r_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

/// Exact square root inside the field, if one exists. Rationals need both parts to be
/// perfect squares; F_p is searched exhaustively and returns the smaller root.
inline std::optional<Scalar> exact_sqrt(const Scalar& a) {
    const auto& f = a.field();
    if (a.is_zero()) return a;
    if (f.is_rational()) {
        if (a.rational() < 0) return std::nullopt;
        BigInt num = a.numerator(), den = a.denominator();
        BigInt rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
        if (rn * rn != num || rd * rd != den) return std::nullopt;
        return Scalar::fraction(f, rn, rd);
    }
    const std::int64_t p = f.modulus();
    if (p > 10'000'000) throw SearchBudgetExceeded("square-root search limited to p <= 10^7");
    for (std::int64_t x = 1; x <= p / 2; ++x)
        if (x * x % p == a.residue()) return Scalar(f, x);
    return std::nullopt;
}

/// Euler's criterion: a^((p-1)/2) == 1 for nonzero quadratic residues.
inline bool is_quadratic_residue(const Scalar& a) {
    if (!a.field().is_prime_field()) throw DomainError("Euler's criterion needs a prime field");
    if (a.is_zero()) return true;
    const auto p = a.field().modulus();
    return Scalar::pow_mod(a.residue(), (p - 1) / 2, p) == 1;
}

}  // namespace albert
