#include "numtheory.hpp"

#include <algorithm>
#include <limits>

namespace dio {

Factorization factorize(u64 n) {
    if (n == 0)
        throw ArgumentError("factorize: n must be positive");
    Factorization f;
    f.value = n;
    u64 m = n;
    auto strip = [&](u64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1)
        f.factors.push_back({m, 1});
    return f;
}

bool is_prime_u64(u64 x) {
    if (x < 2)
        return false;
    if (x % 2 == 0)
        return x == 2;
    if (x % 3 == 0)
        return x == 3;
    for (u64 d = 5; d * d <= x; d += 6) {
        if (x % d == 0 || x % (d + 2) == 0)
            return false;
    }
    return true;
}

u64 omega(u64 n) { return factorize(n).factors.size(); }

u64 tau(u64 n) {
    u64 t = 1;
    for (const auto& pp : factorize(n).factors)
        t *= static_cast<u64>(pp.exponent) + 1;
    return t;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds{1};
    for (const auto& pp : factorize(n).factors) {
        const std::size_t base = ds.size();
        u64 q = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                ds.push_back(ds[i] * q);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int valuation(u64 p, u64 n) {
    if (!is_prime_u64(p))
        throw ArgumentError("valuation: p must be prime");
    if (n == 0)
        throw ArgumentError("valuation: n must be positive");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

u64 critical_prime_power(u64 p, u64 n) {
    const int v = valuation(p, n); // validates p, n
    u64 q = p;
    for (int i = 0; i < v; ++i) {
        if (q > std::numeric_limits<u64>::max() / p)
            throw RangeError("critical_prime_power: 64-bit overflow");
        q *= p;
    }
    return q;
}

u64 gamma_x(u64 x_num, u64 x_den, u64 n) {
    if (x_den == 0)
        throw ArgumentError("gamma_x: zero denominator");
    if (n == 0)
        throw ArgumentError("gamma_x: n must be positive");
    using u128 = unsigned __int128;
    if (static_cast<u128>(x_num) >= static_cast<u128>(n) * x_den)
        throw ArgumentError("gamma_x: threshold must satisfy x < n");
    u64 count = 0;
    for (const auto& pp : factorize(n).factors) {
        u64 q = pp.prime;
        for (int i = 0; i < pp.exponent; ++i)
            q *= pp.prime; // q = p^(v_p(n)+1) <= p*n, no overflow for n < 2^32
        if (static_cast<u128>(q) * x_den > x_num && q < n)
            ++count;
    }
    return count;
}

PrimeTable::PrimeTable(u64 limit) : limit_(limit) {
    if (limit == 0)
        throw ArgumentError("sieve: limit must be >= 1");
    if (limit > kMaxLimit)
        throw ResourceError("sieve: limit exceeds memory budget of 2^30");
    bits_.assign((limit >> 6) + 1, ~u64{0});
    auto clear = [&](u64 i) { bits_[i >> 6] &= ~(u64{1} << (i & 63)); };
    clear(0);
    if (limit >= 1)
        clear(1);
    for (u64 i = 2; i * i <= limit; ++i) {
        if (bit(i)) {
            for (u64 j = i * i; j <= limit; j += i)
                clear(j);
        }
    }
    for (u64 i = 2; i <= limit; ++i) {
        if (bit(i))
            primes_.push_back(static_cast<u32>(i));
    }
}

bool PrimeTable::is_prime(u64 x) const {
    if (x > limit_)
        throw RangeError("is_prime: value past sieve limit");
    return x >= 2 && bit(x);
}

u64 PrimeTable::prime_pi(u64 x) const {
    if (x > limit_)
        throw RangeError("prime_pi: value past sieve limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<u64>(it - primes_.begin());
}

std::span<const u32> PrimeTable::primes_upto(u64 x) const {
    if (x > limit_)
        throw RangeError("primes_upto: value past sieve limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
}

} // namespace dio
