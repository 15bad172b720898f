#include "poly_mod.hpp"

#include <random>

namespace aflt::detail {

namespace {
int deg(const PolyFp & a) { return static_cast<int>(a.size()) - 1; }
}  // namespace

std::uint64_t FpArith::inv(std::uint64_t a) const
{
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

void FpArith::trim(PolyFp & a) const
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

PolyFp FpArith::mul(const PolyFp & a, const PolyFp & b) const
{
    if (a.empty() || b.empty())
        return {};
    PolyFp out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = add(out[i + j], mul(a[i], b[j]));
    trim(out);
    return out;
}

PolyFp FpArith::sub(PolyFp a, const PolyFp & b) const
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
}

std::pair<PolyFp, PolyFp> FpArith::divrem(PolyFp a, const PolyFp & b) const
{
    trim(a);
    if (deg(a) < deg(b))
        return {{}, a};
    const std::uint64_t lead_inv = inv(b.back());
    PolyFp q(a.size() - b.size() + 1, 0);
    for (int k = deg(a); k >= deg(b); --k) {
        std::uint64_t coef = mul(a[k], lead_inv);
        q[k - deg(b)] = coef;
        if (coef == 0)
            continue;
        for (int j = 0; j <= deg(b); ++j)
            a[k - deg(b) + j] = sub(a[k - deg(b) + j], mul(coef, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
}

PolyFp FpArith::monic(PolyFp a) const
{
    trim(a);
    if (a.empty())
        return a;
    std::uint64_t li = inv(a.back());
    for (auto & c : a)
        c = mul(c, li);
    return a;
}

PolyFp FpArith::gcd(PolyFp a, PolyFp b) const
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyFp FpArith::powmod(PolyFp base, const mpz_class & e, const PolyFp & m) const
{
    PolyFp result{1};
    result = rem(result, m);
    base = rem(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, base), m);
    }
    return result;
}

void FpArith::split_equal_degree(const PolyFp & g, int d, std::uint64_t & state, std::vector<PolyFp> & out) const
{
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p_, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::mt19937_64 rng(state);
    while (true) {
        PolyFp a(deg(g));
        for (auto & c : a)
            c = rng() % p_;
        trim(a);
        if (deg(a) < 1)
            continue;
        PolyFp b = sub(powmod(a, e, g), PolyFp{1});
        PolyFp h = gcd(b, g);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            state = rng();
            split_equal_degree(h, d, state, out);
            split_equal_degree(divrem(g, h).first, d, state, out);
            return;
        }
    }
}

std::vector<PolyFp> FpArith::factor_squarefree(const PolyFp & f_in) const
{
    std::vector<PolyFp> out;
    PolyFp rest = monic(f_in);
    PolyFp x{0, 1};
    PolyFp h = rem(x, rest);
    std::uint64_t state = 0x5eed5eedULL;
    for (int d = 1; 2 * d <= deg(rest); ++d) {
        h = powmod(h, mpz_class(static_cast<unsigned long>(p_)), rest);
        PolyFp g = gcd(sub(h, x), rest);
        if (deg(g) > 0) {
            split_equal_degree(g, d, state, out);
            rest = divrem(rest, g).first;
            h = rem(h, rest);
        }
    }
    if (deg(rest) > 0)
        out.push_back(monic(rest));
    return out;
}

}  // namespace aflt::detail
