#include "aflt/class_group.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "aflt/errors.hpp"

namespace aflt {

namespace {

void require_imaginary_quadratic(const NumberField & K)
{
    if (!K.is_imaginary_quadratic())
        fail(ErrorKind::UnsupportedField, K.id() + " is not imaginary quadratic");
}

// B into (-A, A], C recomputed from the discriminant.
void normalize(QuadForm & f, const mpz_class & D)
{
    mpz_class two_a = 2 * f.a;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
    if (r > f.a)
        r -= two_a;
    f.b = r;
    f.c = (f.b * f.b - D) / (4 * f.a);
}

mpz_class to_integer(const mpq_class & q)
{
    if (q.get_den() != 1)
        fail(ErrorKind::PreconditionViolation, "expected an integer");
    return q.get_num();
}

}  // namespace

bool QuadForm::is_reduced() const
{
    if (abs(b) > a || a > c)
        return false;
    if ((abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::string QuadForm::to_string() const
{
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

QuadForm reduce(QuadForm f)
{
    const mpz_class D = f.discriminant();
    if (D >= 0 || f.a <= 0)
        fail(ErrorKind::PreconditionViolation, "form " + f.to_string() + " is not positive definite");
    normalize(f, D);
    while (f.a > f.c) {
        f = QuadForm{f.c, -f.b, f.a};
        normalize(f, D);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm principal_form(const mpz_class & D)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), D.get_mpz_t(), 4);
    if (r == 0)
        return QuadForm{1, 0, -D / 4};
    return QuadForm{1, 1, (1 - D) / 4};
}

std::vector<QuadForm> reduced_forms(const mpz_class & D)
{
    std::vector<QuadForm> out;
    for (mpz_class a = 1; 3 * a * a <= -D; ++a) {
        for (mpz_class b = -a + 1; b <= a; ++b) {
            mpz_class num = b * b - D;
            if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(4 * a).get_mpz_t()))
                continue;
            QuadForm f{a, b, num / (4 * a)};
            if (!f.is_reduced())
                continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
            if (g == 1)
                out.push_back(f);
        }
    }
    return out;
}

QuadForm ideal_to_reduced_form(const IdealIQ & I)
{
    require_imaginary_quadratic(I.field());
    const auto & H = I.hnf();
    const mpz_class & a = H[0][0];
    const mpz_class & b = H[1][0];
    const mpz_class & c = H[1][1];
    // I = c * [a/c, b/c + w]; the content c does not change the class.
    const mpz_class A = a / c;
    const mpz_class b1 = b / c;
    const mpz_class D = I.field().discriminant();
    const mpz_class B = I.field().has_half_integral_basis() ? mpz_class(-(2 * b1 + 1)) : mpz_class(-2 * b1);
    return reduce(QuadForm{A, B, (B * B - D) / (4 * A)});
}

long class_number(const NumberField & K)
{
    require_imaginary_quadratic(K);
    return static_cast<long>(reduced_forms(K.discriminant()).size());
}

std::optional<FieldElement> principal_generator(const IdealIQ & I)
{
    require_imaginary_quadratic(I.field());
    const auto basis = I.basis();
    const FieldElement & v1 = basis[0];
    const FieldElement & v2 = basis[1];
    // N(x v1 + y v2) = qa x^2 + qb xy + qc y^2, positive definite.
    const mpz_class qa = to_integer(norm(v1));
    const mpz_class qc = to_integer(norm(v2));
    const mpz_class qb = to_integer(norm(v1 + v2)) - qa - qc;
    const mpz_class target = I.norm();
    const mpz_class delta = 4 * qa * qc - qb * qb;
    mpz_class ymax = 4 * qa * target / delta;
    mpz_sqrt(ymax.get_mpz_t(), ymax.get_mpz_t());

    std::optional<FieldElement> best;
    for (mpz_class y = -ymax; y <= ymax; ++y) {
        // qa x^2 + (qb y) x + (qc y^2 - target) = 0
        mpz_class disc = qb * qb * y * y - 4 * qa * (qc * y * y - target);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
            continue;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        for (const mpz_class & num : {mpz_class(-qb * y + s), mpz_class(-qb * y - s)}) {
            if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(2 * qa).get_mpz_t()))
                continue;
            mpz_class x = num / (2 * qa);
            FieldElement g = FieldElement::rational(I.field(), mpq_class(x)) * v1 +
                             FieldElement::rational(I.field(), mpq_class(y)) * v2;
            if (!best || canonical_compare(g, *best) > 0)
                best = g;
        }
    }
    return best;
}

long class_order(const IdealIQ & I)
{
    const QuadForm one = principal_form(I.field().discriminant());
    Ideal power = I;
    for (long k = 1;; ++k) {
        if (ideal_to_reduced_form(power) == one)
            return k;
        power = power * I;
    }
}

std::vector<PrimeIdeal> representatives_H(const NumberField & K)
{
    require_imaginary_quadratic(K);
    const long h = class_number(K);
    for (long bound = 16;; bound *= 2) {
        std::vector<PrimeIdeal> candidates;
        for (long l = 3; l <= bound; l += 2) {
            if (!is_prime(l))
                continue;
            for (auto & P : primes_above(K, l))
                if (P.norm() <= bound)
                    candidates.push_back(std::move(P));
        }
        std::stable_sort(candidates.begin(), candidates.end(), [](const PrimeIdeal & x, const PrimeIdeal & y) {
            return std::make_tuple(x.norm(), x.prime, x.index) < std::make_tuple(y.norm(), y.prime, y.index);
        });
        std::vector<PrimeIdeal> reps;
        std::vector<QuadForm> seen;
        for (const auto & P : candidates) {
            QuadForm f = ideal_to_reduced_form(Ideal::of_prime(P));
            if (std::find(seen.begin(), seen.end(), f) != seen.end())
                continue;
            seen.push_back(f);
            reps.push_back(P);
            if (static_cast<long>(reps.size()) == h)
                return reps;
        }
    }
}

}  // namespace aflt
