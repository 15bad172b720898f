#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "aflt/field_element.hpp"
#include "aflt/prime_ideal.hpp"

namespace aflt {

/*
 * Nonzero integral ideal of Z_K, stored as the Hermite normal form of its
 * Z-basis in integral-basis coordinates: row i has its pivot in column i
 * and zeros to the right; entries left of a pivot are reduced modulo the
 * pivot of their column.  The form is canonical, so equality of ideals is
 * equality of matrices.
 */
class Ideal {
public:
    /// Z_K-module generated by integral elements; throws PreconditionViolation
    /// for non-integral generators or when all generators vanish.
    static Ideal generated_by(const NumberField & field, std::span<const FieldElement> generators);
    static Ideal principal(const FieldElement & g);
    static Ideal unit(const NumberField & field);
    static Ideal of_prime(const PrimeIdeal & P);

    const NumberField & field() const { return field_; }
    const std::vector<std::vector<mpz_class>> & hnf() const { return hnf_; }
    std::vector<FieldElement> basis() const;
    /// Index [Z_K : I].
    mpz_class norm() const;

    bool contains(const FieldElement & x) const;
    bool contains(const Ideal & other) const;

    Ideal operator*(const Ideal & o) const;
    /// Image under theta -> -theta.
    Ideal negate_generator() const;

    bool operator==(const Ideal & o) const { return field_ == o.field_ && hnf_ == o.hnf_; }

private:
    Ideal(NumberField field, std::vector<std::vector<mpz_class>> hnf)
        : field_(std::move(field)), hnf_(std::move(hnf)) {}

    NumberField field_;
    std::vector<std::vector<mpz_class>> hnf_;
};

/// Canonical lower-triangular HNF of the Z-span of the rows; the lattice must
/// have full rank n.  Throws PreconditionViolation otherwise.
std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows, int n);

}  // namespace aflt
