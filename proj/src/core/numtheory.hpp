#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace dio {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
    u64 prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

// Prime decomposition with primes strictly ascending and exponents >= 1.
// The empty factor list represents 1.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;
};

// Trial-division factorization; exact for any 64-bit input that fits the
// library's working ranges (cost is O(sqrt n)). Throws ArgumentError for n=0.
Factorization factorize(u64 n);

// Deterministic trial-division primality test.
bool is_prime_u64(u64 x);

u64 omega(u64 n); // count of distinct prime divisors
u64 tau(u64 n);   // count of divisors
std::vector<u64> divisors(u64 n); // ascending, starts at 1, ends at n

// Largest k with p^k | n. ArgumentError if p is not prime or n = 0.
int valuation(u64 p, u64 n);

// p^(valuation(p,n)+1), the smallest power of p not dividing n.
// RangeError if the result does not fit 64 bits.
u64 critical_prime_power(u64 p, u64 n);

// Counts critical prime powers p^(v_p(n)+1) over primes p | n lying strictly
// between x and n, where x = x_num/x_den is an exact rational threshold.
// Comparisons are cross-multiplied; no floating point. ArgumentError if x >= n
// or x_den = 0.
u64 gamma_x(u64 x_num, u64 x_den, u64 n);
inline u64 gamma_x(u64 x, u64 n) { return gamma_x(x, 1, n); }

// Sieve of Eratosthenes up to a fixed limit. Prime queries past the limit
// fail loudly with RangeError rather than falling back to slower paths.
class PrimeTable {
public:
    static constexpr u64 kDefaultLimit = 1'000'000;
    static constexpr u64 kMaxLimit = u64{1} << 30; // memory guard

    explicit PrimeTable(u64 limit = kDefaultLimit);

    u64 limit() const noexcept { return limit_; }

    bool is_prime(u64 x) const;
    u64 prime_pi(u64 x) const; // |{p prime : 2 <= p <= x}|
    std::span<const u32> primes() const noexcept { return primes_; }
    std::span<const u32> primes_upto(u64 x) const; // ascending primes <= x

private:
    u64 limit_;
    std::vector<u64> bits_; // bit i set <=> i prime, i <= limit_
    std::vector<u32> primes_;

    bool bit(u64 i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
};

inline PrimeTable sieve(u64 limit) { return PrimeTable(limit); }

} // namespace dio
