#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "aflt/number_field.hpp"

namespace aflt {

/*
 * Exact element of a supported number field, stored in the power basis
 * 1, theta, ..., theta^{n-1} as integer numerators over one positive common
 * denominator.  The representation is always in lowest terms
 * (gcd(numerators, denominator) = 1), so equal elements compare equal
 * coordinate-wise.
 */
class FieldElement {
public:
    FieldElement(NumberField field, const std::vector<mpq_class> & coordinates);
    FieldElement(NumberField field, std::vector<mpz_class> numerators, mpz_class denominator);

    static FieldElement zero(const NumberField & field);
    static FieldElement one(const NumberField & field);
    static FieldElement rational(const NumberField & field, const mpq_class & q);
    static FieldElement integer(const NumberField & field, long v) { return rational(field, mpq_class(v)); }
    /// theta itself (sqrt(m) or zeta).
    static FieldElement generator(const NumberField & field);
    /// theta^k for any integer k.
    static FieldElement generator_power(const NumberField & field, long k);

    const NumberField & field() const { return field_; }
    int degree() const { return static_cast<int>(num_.size()); }

    const std::vector<mpz_class> & numerators() const { return num_; }
    const mpz_class & denominator() const { return den_; }
    mpq_class coordinate(int i) const;
    std::vector<mpq_class> coordinates() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Only valid when is_rational().
    mpq_class to_rational() const;

    FieldElement operator-() const;
    FieldElement & operator+=(const FieldElement & o);
    FieldElement & operator-=(const FieldElement & o);
    FieldElement & operator*=(const FieldElement & o);
    FieldElement & operator/=(const FieldElement & o);

    friend FieldElement operator+(FieldElement a, const FieldElement & b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement & b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement & b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement & b) { return a /= b; }

    /// Throws DivisionByZero for zero.
    FieldElement inverse() const;
    /// Negative exponents invert first.
    FieldElement pow(long e) const;

    /// Image under theta -> -theta (complex conjugation for imaginary quadratic fields).
    FieldElement negate_generator() const;

    bool operator==(const FieldElement & o) const;

    /// Coordinate form "c0;c1;...;c(n-1)", the solution-list wire format.
    std::string to_string() const;
    /// Human form, e.g. "1+sqrt(-5)" or "1-z^3".
    std::string pretty() const;

private:
    void normalize();
    void check_same_field(const FieldElement & o) const;

    NumberField field_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

/// Field norm N_{K/Q}(x); multiplicative, N(q) = q^n for rational q.
mpq_class norm(const FieldElement & x);

/// True iff x lies in the ring of integers Z_K.
bool is_integral(const FieldElement & x);

/// Smallest positive integer D with D*x in Z_K.
mpz_class integral_denominator(const FieldElement & x);

/// Coordinates in the integral basis (power basis, or 1, (1+theta)/2 when m = 1 mod 4).
std::vector<mpq_class> integral_basis_coordinates(const FieldElement & x);
FieldElement from_integral_basis(const NumberField & field, const std::vector<mpq_class> & coordinates);
/// The integral basis elements themselves.
std::vector<FieldElement> integral_basis(const NumberField & field);

/// Deterministic total order: lexicographic comparison of the rational coordinates.
int canonical_compare(const FieldElement & a, const FieldElement & b);
inline bool canonical_less(const FieldElement & a, const FieldElement & b)
{
    return canonical_compare(a, b) < 0;
}

/// Parse "c0;c1;..." with each coordinate an integer or p/q.  Missing trailing
/// coordinates are zero when allow_short is set.  Throws ParseError.
FieldElement parse_element(const NumberField & field, std::string_view text, bool allow_short = false);

mpq_class parse_rational(std::string_view text);

/// v_l(q) for a nonzero rational q.
long rational_valuation(const mpq_class & q, long prime);
long integer_valuation(const mpz_class & z, long prime);

}  // namespace aflt
