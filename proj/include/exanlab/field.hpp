#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "exanlab/errors.hpp"

namespace exanlab {

/// Coefficient field descriptor: the rationals, or a prime field F_p with
/// p < 2^32. Primality is checked once, at construction, by trial division.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime_field(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t modulus() const;

    bool operator==(const Field&) const = default;

    std::string str() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_; // 0 encodes Q
};

/// Exact field element: a reduced fraction over Q, or a residue in [0, p).
/// Arithmetic is total except division by zero. Rational values are kept in
/// canonical form (lowest terms, positive denominator) at all times.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& f) : field_(f) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long v);
    static Scalar rational(mpq_class v);
    static Scalar residue(const Field& f, std::uint64_t v);

    /// Parses the serialized form: over Q "a" or "a/b"; over F_p a decimal
    /// integer (negative values are reduced mod p).
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
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

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    std::string str() const;

    const mpq_class& rational_value() const { return rat_; }
    std::uint64_t residue_value() const { return res_; }

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class rat_;          // payload over Q
    std::uint64_t res_ = 0;  // payload over F_p
};

} // namespace exanlab
