#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "bihom/error.hpp"

namespace bihom {

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

enum class FieldKind { Rationals, PrimeField };

/// Identifies the base field: the rationals or GF(p) for a prime p <= 2^31.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t characteristic = 0;

    static FieldDescriptor rationals() { return {FieldKind::Rationals, 0}; }

    static FieldDescriptor prime(std::uint32_t p) {
        if (!is_prime(p))
            throw InvariantViolation("field characteristic " + std::to_string(p) +
                                     " is not prime");
        return {FieldKind::PrimeField, p};
    }

    bool operator==(const FieldDescriptor&) const = default;

    std::string name() const {
        return kind == FieldKind::Rationals
                   ? "rational"
                   : "gf " + std::to_string(characteristic);
    }

    static bool is_prime(std::uint64_t p) {
        if (p < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }
};

/// Exact element of the field named by its descriptor.  Rationals are stored
/// as reduced fractions, prime-field elements as canonical residues 0..p-1.
/// Values are immutable apart from assignment and safe to share across
/// threads.
class FieldScalar {
public:
    FieldScalar() : field_(FieldDescriptor::rationals()), value_(Rational(0)) {}

    static FieldScalar zero(const FieldDescriptor& f) { return from_int(0, f); }
    static FieldScalar one(const FieldDescriptor& f) { return from_int(1, f); }

    static FieldScalar from_int(long long n, const FieldDescriptor& f) {
        FieldScalar s;
        s.field_ = f;
        if (f.kind == FieldKind::Rationals) {
            s.value_ = Rational(n);
        } else {
            const std::int64_t p = f.characteristic;
            std::int64_t r = n % p;
            if (r < 0)
                r += p;
            s.value_ = r;
        }
        return s;
    }

    static FieldScalar from_rational(const Rational& q) {
        FieldScalar s;
        s.field_ = FieldDescriptor::rationals();
        s.value_ = q;
        return s;
    }

    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const {
        if (field_.kind == FieldKind::Rationals)
            return std::get<Rational>(value_) == 0;
        return std::get<std::int64_t>(value_) == 0;
    }

    bool is_one() const {
        if (field_.kind == FieldKind::Rationals)
            return std::get<Rational>(value_) == 1;
        return std::get<std::int64_t>(value_) == 1;
    }

    /// Residue in 0..p-1; only valid over a prime field.
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }

    /// Reduced fraction; only valid over the rationals.
    const Rational& rational() const { return std::get<Rational>(value_); }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        check_same(a, b);
        if (a.field_.kind == FieldKind::Rationals)
            return from_rational(a.rational() + b.rational());
        return residue_value(a.field_, (a.residue() + b.residue()) %
                                           a.modulus());
    }

    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        check_same(a, b);
        if (a.field_.kind == FieldKind::Rationals)
            return from_rational(a.rational() - b.rational());
        return residue_value(a.field_, (a.residue() - b.residue() + a.modulus()) %
                                           a.modulus());
    }

    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        check_same(a, b);
        if (a.field_.kind == FieldKind::Rationals)
            return from_rational(a.rational() * b.rational());
        return residue_value(a.field_, (a.residue() * b.residue()) % a.modulus());
    }

    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        return a * b.inverse();
    }

    FieldScalar operator-() const {
        return zero(field_) - *this;
    }

    FieldScalar inverse() const {
        if (is_zero())
            throw DivisionByZero("division by zero in " + field_.name());
        if (field_.kind == FieldKind::Rationals)
            return from_rational(Rational(1) / rational());
        return residue_value(field_, mod_inverse(residue(), modulus()));
    }

    FieldScalar& operator+=(const FieldScalar& b) { return *this = *this + b; }
    FieldScalar& operator-=(const FieldScalar& b) { return *this = *this - b; }
    FieldScalar& operator*=(const FieldScalar& b) { return *this = *this * b; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        check_same(a, b);
        return a.value_ == b.value_;
    }

    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) {
        return !(a == b);
    }

    /// Canonical text: `-?digits(/digits)?`, fraction bar only over the
    /// rationals and only for non-integers.
    std::string str() const {
        if (field_.kind == FieldKind::PrimeField)
            return std::to_string(residue());
        const Rational& q = rational();
        std::string s = numerator(q).str();
        if (denominator(q) != 1)
            s += "/" + denominator(q).str();
        return s;
    }

    /// Parses `-?digits(/digits)?`.  Over GF(p) a fraction a/b becomes
    /// a * b^-1 and a denominator divisible by p raises DivisionByZero.
    static FieldScalar parse(const std::string& text, const FieldDescriptor& f) {
        bool negative = false;
        std::size_t pos = 0;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        std::size_t num_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == num_begin)
            throw ParseError("expected a scalar, got \"" + text + "\"", 0, 0);
        std::string num = text.substr(num_begin, pos - num_begin);
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t den_begin = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                ++pos;
            if (pos == den_begin)
                throw ParseError("expected digits after '/' in \"" + text + "\"",
                                 0, 0);
            den = text.substr(den_begin, pos - den_begin);
        }
        if (pos != text.size())
            throw ParseError("trailing characters in scalar \"" + text + "\"", 0,
                             0);

        if (f.kind == FieldKind::Rationals) {
            Integer n(num), d(den);
            if (d == 0)
                throw DivisionByZero("zero denominator in \"" + text + "\"");
            if (negative)
                n = -n;
            return from_rational(Rational(n) / Rational(d));
        }
        FieldScalar n = parse_residue(num, f);
        if (negative)
            n = -n;
        FieldScalar d = parse_residue(den, f);
        if (d.is_zero())
            throw DivisionByZero("denominator of \"" + text + "\" vanishes in " +
                                 f.name());
        return n / d;
    }

private:
    static FieldScalar residue_value(const FieldDescriptor& f, std::int64_t r) {
        FieldScalar s;
        s.field_ = f;
        s.value_ = r;
        return s;
    }

    static FieldScalar parse_residue(const std::string& digits,
                                     const FieldDescriptor& f) {
        const std::int64_t p = f.characteristic;
        std::int64_t v = 0;
        for (char c : digits)
            v = (v * 10 + (c - '0')) % p;
        return residue_value(f, v);
    }

    std::int64_t modulus() const { return field_.characteristic; }

    static void check_same(const FieldScalar& a, const FieldScalar& b) {
        if (a.field_ != b.field_)
            throw FieldMismatch("mixed-field arithmetic: " + a.field_.name() +
                                " vs " + b.field_.name());
    }

    static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
        // extended Euclid; a is nonzero mod p, p prime
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return t < 0 ? t + p : t;
    }

    FieldDescriptor field_;
    std::variant<std::int64_t, Rational> value_;
};

} // namespace bihom
