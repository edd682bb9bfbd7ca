#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "bilpair/error.hpp"

namespace bilpair {

// Either F_p (p prime, p < 2^15) or the rationals.
class Field {
public:
    enum class Kind { prime, rationals };

    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t characteristic() const { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    friend class Scalar;
    Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime_number(std::uint64_t n);

// Field element: canonical residue 0..p-1, or a reduced fraction with positive
// denominator. Elements remember their field; mixing fields throws.
class Scalar {
public:
    Scalar() : modulus_(0), value_(mpq_class(0)) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_fraction(const Field& f, const mpz_class& num, const mpz_class& den);
    static Scalar from_residue(std::uint32_t p, std::uint32_t r) { return Scalar(p, r); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    // Residue for prime-field elements.
    std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Total order used for canonical tie-breaks (residue order / rational order).
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::string to_string() const;
    std::size_t hash() const;

private:
    Scalar(std::uint32_t p, std::uint32_t r) : modulus_(p), value_(r) {}
    explicit Scalar(mpq_class q) : modulus_(0), value_(std::move(q)) {}

    std::uint32_t modulus_;  // 0 for rationals
    std::variant<std::uint32_t, mpq_class> value_;
};

Scalar inverse(const Scalar& a);

}  // namespace bilpair
