#pragma once

// Dense polynomials over F_p (p an odd prime below 2^63), constant term first.
// Zero is the empty vector.  Used to split defining polynomials modulo p.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace aflt::detail {

using PolyFp = std::vector<std::uint64_t>;

class FpArith {
public:
    explicit FpArith(std::uint64_t p) : p_(p) {}

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t inv(std::uint64_t a) const;

    void trim(PolyFp & a) const;
    PolyFp mul(const PolyFp & a, const PolyFp & b) const;
    PolyFp sub(PolyFp a, const PolyFp & b) const;
    /// Quotient and remainder; b nonzero.
    std::pair<PolyFp, PolyFp> divrem(PolyFp a, const PolyFp & b) const;
    PolyFp rem(const PolyFp & a, const PolyFp & b) const { return divrem(a, b).second; }
    PolyFp monic(PolyFp a) const;
    PolyFp gcd(PolyFp a, PolyFp b) const;
    PolyFp powmod(PolyFp base, const mpz_class & e, const PolyFp & m) const;

    /// Monic irreducible factors of a squarefree monic polynomial, unsorted.
    /// Deterministic (fixed-seed equal-degree splitting).
    std::vector<PolyFp> factor_squarefree(const PolyFp & f) const;

private:
    void split_equal_degree(const PolyFp & g, int d, std::uint64_t & state, std::vector<PolyFp> & out) const;

    std::uint64_t p_;
};

}  // namespace aflt::detail
