#include "zdg/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace zdg {

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) {
    if (x == 0 && y == 0) throw domain_error("gcd(0, 0) is undefined");
    return std::gcd(x, y);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    // This witness set decides primality for every 64-bit n.
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL,
                            9780504ULL, 1795265022ULL}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Deterministic Pollard rho (Floyd) for odd composite n with no prime
// factor below the trial-division bound. x0 = 2, polynomial x^2 + c with
// c = 1, 2, ... until a split is found.
std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto step = [n, c](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;  // d == n means the cycle closed; retry with next c
    }
}

constexpr std::uint64_t kTrialBound = 10'000;

void split_into_primes(std::uint64_t m, std::vector<std::uint64_t>& out) {
    if (m == 1) return;
    if (m < kTrialBound * kTrialBound || is_prime(m)) {
        out.push_back(m);
        return;
    }
    const std::uint64_t d = pollard_rho(m);
    split_into_primes(d, out);
    split_into_primes(m / d, out);
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n < 2) throw domain_error("factorize requires n >= 2");
    Factorization factors;
    std::uint64_t m = n;
    auto strip = [&](std::uint64_t p) {
        if (m % p != 0) return;
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p < kTrialBound && p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) {
        std::vector<std::uint64_t> rest;
        split_into_primes(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            factors.push_back({rest[i], static_cast<std::uint32_t>(j - i)});
            i = j;
        }
    }
    return factors;
}

Modulus::Modulus(std::uint64_t n) : n_(n) {
    if (n < 2) throw domain_error("modulus must be >= 2");
    if (n >= (1ULL << 63)) throw domain_error("modulus must be < 2^63");
    factors_ = factorize(n);
    totient_ = n;
    for (const auto& pp : factors_) totient_ = totient_ / pp.prime * (pp.prime - 1);
}

std::vector<std::uint64_t> annihilator(std::uint64_t n, std::uint64_t x) {
    if (n < 2) throw domain_error("annihilator requires n >= 2");
    if (x >= n) throw domain_error("annihilator requires x < n");
    const std::uint64_t d = x == 0 ? n : std::gcd(x, n);
    const std::uint64_t step = n / d;
    std::vector<std::uint64_t> out;
    out.reserve(d);
    for (std::uint64_t k = 0; k < d; ++k) out.push_back(k * step);
    return out;
}

namespace {

std::uint64_t normalize(std::int64_t v, std::uint64_t n) {
    std::int64_t r = v % static_cast<std::int64_t>(n);
    if (r < 0) r += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(r);
}

// Inverse of a modulo m for coprime a, m with m < 2^63.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace

std::vector<std::uint64_t> solve_linear_congruence(std::int64_t a, std::int64_t b,
                                                   std::uint64_t n) {
    if (n < 2) throw domain_error("solve_linear_congruence requires n >= 2");
    if (n >= (1ULL << 63)) throw domain_error("solve_linear_congruence requires n < 2^63");
    const std::uint64_t ua = normalize(a, n);
    const std::uint64_t ub = normalize(b, n);
    const std::uint64_t rhs = (n - ub) % n;  // a*x = -b (mod n)
    const std::uint64_t d = ua == 0 ? n : std::gcd(ua, n);
    if (rhs % d != 0) return {};
    const std::uint64_t step = n / d;
    std::uint64_t x0 = 0;
    if (step > 1) {
        const std::uint64_t inv = inverse_mod(ua / d, step);
        x0 = mulmod(inv, (rhs / d) % step, step);
    }
    std::vector<std::uint64_t> out;
    out.reserve(d);
    for (std::uint64_t k = 0; k < d; ++k) out.push_back(x0 + k * step);
    return out;
}

} // namespace zdg
