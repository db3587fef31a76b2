#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "nilcommute/errors.hpp"

namespace nilcommute {

enum class FieldKind { Rationals, PrimeField };

// Exact coefficient field: Q, or F_p for a prime p < 2^31. Residue products
// of two 31-bit values fit in uint64_t, so F_p arithmetic never overflows.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t characteristic() const { return p_; }  // 0 for Q

    bool operator==(const FieldSpec& o) const = default;

    std::string to_string() const;  // "Q" or "F_p"

private:
    FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

class Scalar {
public:
    // Default-constructed scalar is 0 in Q; mainly for container resizing.
    Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    // Integer image in the field (reduced mod p for F_p, sign handled).
    static Scalar of_int(const FieldSpec& f, long value);
    // num/den in the field; den must not map to zero.
    static Scalar fraction(const FieldSpec& f, long num, long den);
    static Scalar from_mpq(mpq_class q);                  // Q only
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;                 // DivisionByZero on 0
    Scalar pow(std::uint64_t e) const;

    // Canonical rendering: "a" or "a/b" over Q (b > 0, gcd = 1), the
    // residue in [0, p) over F_p. parse() accepts exactly these plus
    // optional sign and "a/b" with nonzero denominator.
    std::string to_string() const;
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }

    // Total order used only to make set-valued results deterministic.
    static bool less(const Scalar& a, const Scalar& b);

private:
    Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(FieldSpec f, std::uint32_t r) : field_(f), v_(r) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::variant<mpq_class, std::uint32_t> v_;
};

// Modular helpers shared by Scalar and the dense F_p elimination kernels.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);  // DivisionByZero

// Roots of w*(27w^3 - 8) in the field, sorted, always containing 0.
// UnsupportedCharacteristic in characteristic 2 or 3.
std::vector<Scalar> find_omega(const FieldSpec& f);

}  // namespace nilcommute
