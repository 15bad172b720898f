#include "aflt/prime_ideal.hpp"

#include <algorithm>

#include "aflt/errors.hpp"
#include "poly_mod.hpp"

namespace aflt {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

mpz_class PrimeIdeal::norm() const
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(prime), static_cast<unsigned long>(f));
    return out;
}

std::string PrimeIdeal::label() const
{
    if (unique_above && e == 1)
        return "(" + std::to_string(prime) + ")";
    if (field.kind() == FieldKind::Cyclotomic2 && prime == 2)
        return "(" + generator.pretty() + ")";
    return "(" + std::to_string(prime) + ", " + generator.pretty() + ")";
}

bool PrimeIdeal::operator==(const PrimeIdeal & o) const
{
    return field == o.field && prime == o.prime && index == o.index;
}

namespace {

FieldElement element_from_fp(const NumberField & K, const detail::PolyFp & h)
{
    std::vector<mpz_class> num(K.degree(), mpz_class(0));
    for (size_t i = 0; i < h.size() && i < num.size(); ++i)
        num[i] = static_cast<unsigned long>(h[i]);
    return FieldElement(K, std::move(num), mpz_class(1));
}

PrimeIdeal make_prime(const NumberField & K, long l, int e, int f, FieldElement gen, FieldElement cof, bool unique, int index)
{
    return PrimeIdeal{K, l, e, f, std::move(gen), std::move(cof), unique, index};
}

// Odd l not dividing the discriminant of the defining polynomial: the
// factorization of l follows the factorization of theta^n - c modulo l.
std::vector<PrimeIdeal> primes_unramified(const NumberField & K, long l)
{
    detail::FpArith F(static_cast<std::uint64_t>(l));
    detail::PolyFp f;
    for (const auto & c : K.defining_polynomial()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(l));
        f.push_back(r.get_ui());
    }
    auto factors = F.factor_squarefree(f);
    std::sort(factors.begin(), factors.end(), [](const auto & a, const auto & b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;  // lexicographic, constant term first
    });
    std::vector<PrimeIdeal> out;
    const bool unique = factors.size() == 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        const int deg = static_cast<int>(factors[i].size()) - 1;
        if (unique) {
            out.push_back(make_prime(K, l, 1, deg, FieldElement::integer(K, l), FieldElement::one(K), true, 0));
            break;
        }
        detail::PolyFp q{1};
        for (size_t j = 0; j < factors.size(); ++j)
            if (j != i)
                q = F.mul(q, factors[j]);
        out.push_back(make_prime(K, l, 1, deg, element_from_fp(K, factors[i]), element_from_fp(K, q), false,
                                 static_cast<int>(i)));
    }
    return out;
}

std::vector<PrimeIdeal> primes_above_quadratic(const NumberField & K, long l)
{
    const long m = K.parameter();
    const FieldElement theta = FieldElement::generator(K);
    const FieldElement one = FieldElement::one(K);
    if (l == 2) {
        const long r4 = ((m % 4) + 4) % 4;
        if (r4 == 2)
            return {make_prime(K, 2, 2, 1, theta, theta, true, 0)};
        if (r4 == 3)
            return {make_prime(K, 2, 2, 1, theta + one, theta + one, true, 0)};
        if (((m % 8) + 8) % 8 == 5)
            return {make_prime(K, 2, 1, 2, FieldElement::integer(K, 2), one, true, 0)};
        // m = 1 (mod 8): 2 splits as (2, w)(2, w+1) with w = (1+theta)/2.
        const FieldElement w = (one + theta) / FieldElement::integer(K, 2);
        return {make_prime(K, 2, 1, 1, w, w - one, false, 0), make_prime(K, 2, 1, 1, w + one, w, false, 1)};
    }
    if (m % l == 0)
        return {make_prime(K, l, 2, 1, theta, theta, true, 0)};
    return primes_unramified(K, l);
}

std::vector<PrimeIdeal> primes_above_cyclotomic(const NumberField & K, long l)
{
    if (l == 2) {
        const FieldElement pi = FieldElement::one(K) - FieldElement::generator(K);
        return {make_prime(K, 2, K.degree(), 1, pi, FieldElement::integer(K, 2) / pi, true, 0)};
    }
    return primes_unramified(K, l);
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const NumberField & field, long prime)
{
    if (!is_prime(prime))
        fail(ErrorKind::PreconditionViolation, std::to_string(prime) + " is not a prime");
    if (field.is_quadratic())
        return primes_above_quadratic(field, prime);
    return primes_above_cyclotomic(field, prime);
}

std::vector<PrimeIdeal> factor_two(const NumberField & field) { return primes_above(field, 2); }

namespace detail {

long ord_by_norm(const PrimeIdeal & P, const FieldElement & x)
{
    if (x.is_zero())
        fail(ErrorKind::ValuationOfZero, "ord of zero");
    if (!P.unique_above)
        fail(ErrorKind::PreconditionViolation, "norm valuation needs the unique prime above l");
    long v = rational_valuation(norm(x), P.prime);
    return v / P.f;
}

long ord_by_cofactor(const PrimeIdeal & P, const FieldElement & x)
{
    if (x.is_zero())
        fail(ErrorKind::ValuationOfZero, "ord of zero");
    // x = alpha / D with alpha in Z[theta]; ord_P(alpha) is the largest k
    // with alpha * beta^k / l^k integral.
    const mpz_class D = x.denominator();
    FieldElement y(x.field(), x.numerators(), mpz_class(1));
    const FieldElement inv_l = FieldElement::rational(x.field(), mpq_class(1, P.prime));
    long k = 0;
    while (true) {
        FieldElement z = y * P.cofactor * inv_l;
        if (!is_integral(z))
            break;
        y = std::move(z);
        ++k;
    }
    return k - P.e * integer_valuation(D, P.prime);
}

}  // namespace detail

long ord_at(const PrimeIdeal & P, const FieldElement & x)
{
    if (!(x.field() == P.field))
        fail(ErrorKind::PreconditionViolation, "prime and element from different fields");
    if (x.is_zero())
        fail(ErrorKind::ValuationOfZero, "ord of zero");
    if (P.unique_above)
        return detail::ord_by_norm(P, x);
    return detail::ord_by_cofactor(P, x);
}

long ord_at(const PrimeIdeal & P, const mpq_class & q)
{
    if (q == 0)
        fail(ErrorKind::ValuationOfZero, "ord of zero");
    return P.e * rational_valuation(q, P.prime);
}

}  // namespace aflt
