#pragma once

#include <cstdint>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization in strictly increasing prime order, exponents >= 1.
using Factorization = std::vector<PrimePower>;

// gcd(0, 0) is undefined and throws; otherwise standard nonnegative gcd.
std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

// (a * b) mod n without overflow for any uint64 operands, n >= 1.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

// (base ^ exp) mod n, n >= 1.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

// Deterministic for the full uint64 range (fixed Miller-Rabin witness set).
bool is_prime(std::uint64_t n);

// Deterministic factorization for any n >= 2: trial division for small
// primes, then Miller-Rabin + Pollard rho for the 64-bit remainder.
Factorization factorize(std::uint64_t n);

// A modulus n in [2, 2^63) with its factorization and totient precomputed.
// Everything downstream works per-modulus, so the factorization cost is
// paid once.
class Modulus {
public:
    explicit Modulus(std::uint64_t n);

    std::uint64_t value() const { return n_; }
    const Factorization& factors() const { return factors_; }
    std::uint64_t totient() const { return totient_; }
    bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }

private:
    std::uint64_t n_;
    Factorization factors_;
    std::uint64_t totient_;
};

// All residues y in [0, n) with x * y = 0 (mod n), ascending. These are the
// multiples of n / gcd(x, n). Requires x < n.
std::vector<std::uint64_t> annihilator(std::uint64_t n, std::uint64_t x);

// All x in [0, n) with a*x + b = 0 (mod n), ascending. Solvable iff
// gcd(a, n) divides b (mod n), in which case there are exactly gcd(a, n)
// solutions spaced n / gcd(a, n) apart. Requires n in [2, 2^63).
std::vector<std::uint64_t> solve_linear_congruence(std::int64_t a, std::int64_t b,
                                                   std::uint64_t n);

} // namespace zdg
