#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "adtk/field.hpp"

namespace adtk {

/// An exact field element: a rational in lowest terms (positive
/// denominator) or a residue in [0, p) of a prime field. The field tag
/// travels with the value; mixed-field arithmetic throws FieldMismatch.
class Scalar {
  public:
    /// Rational zero. Prefer zero(field) when the field is dynamic.
    Scalar() : field_(Field::rationals()), q_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(long v, const Field& f);
    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint64_t v, const Field& f);

    /// Parses the canonical string form: "a" or "a/b" over Q (sign on the
    /// numerator), a decimal residue over F_p. Throws SyntaxError.
    static Scalar parse(const std::string& text, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Canonical string form, inverse of parse().
    std::string str() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar operator-() const;
    Scalar inverse() const; // throws DivisionByZero on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rational value; only valid over Q.
    const mpq_class& rational_value() const { return q_; }
    /// Residue value; only valid over F_p.
    std::uint64_t residue_value() const { return r_; }

  private:
    Scalar(const Field& f, mpq_class q) : field_(f), q_(std::move(q)) {}
    Scalar(const Field& f, std::uint64_t r) : field_(f), r_(r) {}

    void require_same_field(const Scalar& o) const;

    Field field_;
    mpq_class q_;          // valid when field_ is rational
    std::uint64_t r_ = 0;  // valid when field_ is prime
};

} // namespace adtk
