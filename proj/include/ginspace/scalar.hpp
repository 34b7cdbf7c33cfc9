#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace ginspace {

/// Arbitrary-precision rational number.  Thin value wrapper around GMP's
/// mpq_class: the wrapper pins down construction/normalization semantics and
/// keeps expression templates from leaking into `auto` deductions.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(static_cast<long int>(v)) {}
    Rational(long long v) { value_ = from_decimal(std::to_string(v)).value_; }
    explicit Rational(const mpq_class& v) : value_(v) {}
    explicit Rational(const mpz_class& v) : value_(v) {}

    /// Parse "a" or "a/b" in base 10.  GMP does not canonicalize on string
    /// construction, so we do it explicitly.
    static Rational from_decimal(const std::string& text) {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw Error("not a rational literal: '" + text + "'");
        v.canonicalize();
        return Rational(v);
    }

    static Rational from_fraction(long long num, long long den) {
        if (den == 0)
            throw DivisionByZeroError("rational with zero denominator");
        Rational r = from_decimal(std::to_string(num));
        return r / from_decimal(std::to_string(den));
    }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZeroError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.value_ < b.value_;
    }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of zero");
        return Rational(mpq_class(1 / value_));
    }

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    /// "5", "-7/3"; denominator omitted when it is 1.
    std::string to_string() const { return value_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

  private:
    mpq_class value_;
};

/// Prime field Z/p with a process-wide modulus, in the style of NTL's zz_p.
/// The modulus is configured once at startup (before any arithmetic) and is
/// intentionally not part of the value: mixing moduli in one computation is
/// not a use case this library serves.
class PrimeField {
  public:
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || !probably_prime(p))
            throw Error("modulus must be a prime >= 2");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    PrimeField() : value_(0) {}
    PrimeField(int v) : PrimeField(static_cast<long long>(v)) {}
    PrimeField(long v) : PrimeField(static_cast<long long>(v)) {}
    PrimeField(long long v) {
        const long long p = static_cast<long long>(modulus_);
        long long r = v % p;
        if (r < 0)
            r += p;
        value_ = static_cast<std::uint64_t>(r);
    }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    /// Sign is meaningless mod p; report nonzero-ness for generic code.
    int sign() const { return value_ == 0 ? 0 : 1; }

    PrimeField operator-() const {
        return raw(value_ == 0 ? 0 : modulus_ - value_);
    }

    PrimeField& operator+=(PrimeField o) {
        value_ += o.value_;
        if (value_ >= modulus_)
            value_ -= modulus_;
        return *this;
    }
    PrimeField& operator-=(PrimeField o) {
        value_ = value_ >= o.value_ ? value_ - o.value_
                                    : value_ + modulus_ - o.value_;
        return *this;
    }
    PrimeField& operator*=(PrimeField o) {
        value_ = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(value_) * o.value_) % modulus_);
        return *this;
    }
    PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }

    friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
    friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }

    friend bool operator==(PrimeField a, PrimeField b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(PrimeField a, PrimeField b) {
        return a.value_ != b.value_;
    }

    PrimeField inverse() const {
        if (value_ == 0)
            throw DivisionByZeroError("inverse of zero");
        // Extended Euclid on (value, modulus).
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus_);
        std::int64_t new_r = static_cast<std::int64_t>(value_);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0)
            t += static_cast<std::int64_t>(modulus_);
        return raw(static_cast<std::uint64_t>(t));
    }

    std::uint64_t representative() const { return value_; }

    std::string to_string() const { return std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, PrimeField v) {
        return os << v.value_;
    }

  private:
    static PrimeField raw(std::uint64_t v) {
        PrimeField f;
        f.value_ = v;
        return f;
    }

    static bool probably_prime(std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    static inline std::uint64_t modulus_ = 32003;

    std::uint64_t value_;
};

/// The scalar interface every coefficient type must provide.
template <typename F>
concept ExactField = requires(F a, F b) {
    F();
    F(1);
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { -a } -> std::convertible_to<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<F>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<PrimeField>);

} // namespace ginspace
