#include "bilpair/exactlin/field.hpp"

#include <cstdlib>

namespace bilpair {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::division_by_zero: return "division-by-zero";
        case ErrorCode::non_prime_modulus: return "non-prime-modulus";
        case ErrorCode::field_mismatch: return "field-mismatch";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::singular_matrix: return "singular-matrix";
        case ErrorCode::enumeration_unsupported: return "enumeration-unsupported";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::nothing_to_decompose: return "nothing-to-decompose";
        case ErrorCode::budget_exceeded: return "budget-exceeded";
        case ErrorCode::invalid_input: return "invalid-input";
        case ErrorCode::radical_overlap: return "radical-overlap";
        case ErrorCode::component_present: return "component-present";
        case ErrorCode::out_of_range: return "out-of-range";
        case ErrorCode::constraint_violation: return "constraint-violation";
        case ErrorCode::characteristic_excluded: return "characteristic-excluded";
        case ErrorCode::unknown_id: return "unknown-id";
    }
    return "unknown";
}

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 15)) {
        throw Error(ErrorCode::non_prime_modulus, "modulus " + std::to_string(p) + " exceeds 2^15");
    }
    if (!is_prime_number(p)) {
        throw Error(ErrorCode::non_prime_modulus, "modulus " + std::to_string(p) + " is not prime");
    }
    return Field(Kind::prime, p);
}

std::string Field::to_string() const {
    return is_prime() ? "F_" + std::to_string(modulus_) : "Q";
}

namespace {

void check_same(std::uint32_t ma, std::uint32_t mb) {
    if (ma != mb) throw Error(ErrorCode::field_mismatch, "scalars from different fields");
}

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long long v) {
    if (f.is_prime()) return Scalar(f.modulus(), reduce_mod(v, f.modulus()));
    return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
}

Scalar Scalar::from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
    if (f.is_prime()) {
        std::uint32_t p = f.modulus();
        std::uint32_t d = reduce_mpz(den, p);
        if (d == 0) throw Error(ErrorCode::division_by_zero, "denominator divisible by the characteristic");
        Scalar n(p, reduce_mpz(num, p));
        return n * Scalar(p, d).inverse();
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Field Scalar::field() const {
    return modulus_ ? Field(Field::Kind::prime, modulus_) : Field::rationals();
}

bool Scalar::is_zero() const {
    if (modulus_) return std::get<std::uint32_t>(value_) == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
    if (modulus_) return std::get<std::uint32_t>(value_) == 1;
    return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
    if (modulus_) {
        std::uint32_t r = std::get<std::uint32_t>(value_);
        return Scalar(modulus_, r == 0 ? 0 : modulus_ - r);
    }
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
    if (modulus_) {
        return Scalar(modulus_, pow_mod(std::get<std::uint32_t>(value_), modulus_ - 2, modulus_));
    }
    return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a.modulus_, b.modulus_);
    if (a.modulus_) {
        std::uint32_t s = std::get<std::uint32_t>(a.value_) + std::get<std::uint32_t>(b.value_);
        if (s >= a.modulus_) s -= a.modulus_;
        return Scalar(a.modulus_, s);
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same(a.modulus_, b.modulus_);
    if (a.modulus_) {
        std::uint32_t x = std::get<std::uint32_t>(a.value_);
        std::uint32_t y = std::get<std::uint32_t>(b.value_);
        return Scalar(a.modulus_, x >= y ? x - y : x + a.modulus_ - y);
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a.modulus_, b.modulus_);
    if (a.modulus_) {
        std::uint32_t x = std::get<std::uint32_t>(a.value_);
        std::uint32_t y = std::get<std::uint32_t>(b.value_);
        return Scalar(a.modulus_, x * y % a.modulus_);
    }
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.modulus_ != b.modulus_) return false;
    if (a.modulus_) return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
    check_same(a.modulus_, b.modulus_);
    if (a.modulus_) return std::get<std::uint32_t>(a.value_) < std::get<std::uint32_t>(b.value_);
    return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
    if (modulus_) return std::to_string(std::get<std::uint32_t>(value_));
    return std::get<mpq_class>(value_).get_str();
}

std::size_t Scalar::hash() const {
    if (modulus_) return std::get<std::uint32_t>(value_);
    return std::hash<std::string>{}(to_string());
}

Scalar inverse(const Scalar& a) { return a.inverse(); }

}  // namespace bilpair
