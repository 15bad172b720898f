#include "aflt/ideal.hpp"

#include "aflt/errors.hpp"

namespace aflt {

namespace {

using Row = std::vector<mpz_class>;

void sub_multiple(Row & target, const Row & source, const mpz_class & q)
{
    if (q == 0)
        return;
    for (size_t i = 0; i < target.size(); ++i)
        target[i] -= q * source[i];
}

Row integral_row(const FieldElement & x)
{
    Row r;
    for (const auto & q : integral_basis_coordinates(x)) {
        if (q.get_den() != 1)
            fail(ErrorKind::PreconditionViolation, "ideal generator " + x.pretty() + " is not integral");
        r.push_back(q.get_num());
    }
    return r;
}

}  // namespace

std::vector<std::vector<mpz_class>> hermite_normal_form(std::vector<std::vector<mpz_class>> rows, int n)
{
    std::vector<Row> pivots(n);
    for (int col = n - 1; col >= 0; --col) {
        while (true) {
            // Row with the smallest nonzero entry in this column.
            int best = -1;
            for (int i = 0; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0 && (best < 0 || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best < 0)
                fail(ErrorKind::PreconditionViolation, "lattice does not have full rank");
            bool done = true;
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == best || rows[i][col] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t());
                sub_multiple(rows[i], rows[best], q);
                if (rows[i][col] != 0)
                    done = false;
            }
            if (done) {
                Row pivot = std::move(rows[best]);
                rows.erase(rows.begin() + best);
                if (pivot[col] < 0)
                    for (auto & v : pivot)
                        v = -v;
                pivots[col] = std::move(pivot);
                break;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), pivots[i][j].get_mpz_t(), pivots[j][j].get_mpz_t());
            sub_multiple(pivots[i], pivots[j], q);
        }
    }
    return pivots;
}

Ideal Ideal::generated_by(const NumberField & field, std::span<const FieldElement> generators)
{
    const auto basis = integral_basis(field);
    std::vector<Row> rows;
    for (const auto & g : generators) {
        if (g.is_zero())
            continue;
        for (const auto & w : basis)
            rows.push_back(integral_row(g * w));
    }
    if (rows.empty())
        fail(ErrorKind::PreconditionViolation, "zero ideal");
    return Ideal(field, hermite_normal_form(std::move(rows), field.degree()));
}

Ideal Ideal::principal(const FieldElement & g)
{
    return generated_by(g.field(), std::span<const FieldElement>(&g, 1));
}

Ideal Ideal::unit(const NumberField & field) { return principal(FieldElement::one(field)); }

Ideal Ideal::of_prime(const PrimeIdeal & P)
{
    std::vector<FieldElement> gens{FieldElement::integer(P.field, P.prime), P.generator};
    return generated_by(P.field, gens);
}

std::vector<FieldElement> Ideal::basis() const
{
    std::vector<FieldElement> out;
    for (const auto & row : hnf_) {
        std::vector<mpq_class> q(row.begin(), row.end());
        out.push_back(from_integral_basis(field_, q));
    }
    return out;
}

mpz_class Ideal::norm() const
{
    mpz_class n = 1;
    for (size_t i = 0; i < hnf_.size(); ++i)
        n *= hnf_[i][i];
    return n;
}

bool Ideal::contains(const FieldElement & x) const
{
    if (!(x.field() == field_))
        return false;
    auto coords = integral_basis_coordinates(x);
    Row v;
    for (const auto & q : coords) {
        if (q.get_den() != 1)
            return false;
        v.push_back(q.get_num());
    }
    for (int col = static_cast<int>(hnf_.size()) - 1; col >= 0; --col) {
        if (!mpz_divisible_p(v[col].get_mpz_t(), hnf_[col][col].get_mpz_t()))
            return false;
        mpz_class q = v[col] / hnf_[col][col];
        sub_multiple(v, hnf_[col], q);
    }
    return true;
}

bool Ideal::contains(const Ideal & other) const
{
    for (const auto & b : other.basis())
        if (!contains(b))
            return false;
    return true;
}

Ideal Ideal::operator*(const Ideal & o) const
{
    if (!(field_ == o.field_))
        fail(ErrorKind::PreconditionViolation, "ideals of different fields");
    std::vector<FieldElement> gens;
    for (const auto & a : basis())
        for (const auto & b : o.basis())
            gens.push_back(a * b);
    return generated_by(field_, gens);
}

Ideal Ideal::negate_generator() const
{
    std::vector<FieldElement> gens;
    for (const auto & b : basis())
        gens.push_back(b.negate_generator());
    return generated_by(field_, gens);
}

}  // namespace aflt
