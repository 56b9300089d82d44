#pragma once

#include <cstdint>
#include <vector>

#include "trav/rational.hpp"

namespace trav {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs. Only the
// operations the exact bound predicates need: multiply, compare, bit length.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    static BigUint twoPow(std::uint64_t e);
    static BigUint pow(std::uint64_t base, std::uint64_t e);

    BigUint operator*(const BigUint& o) const;
    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const = default;

    // Number of bits in the value; 0 for zero.
    std::uint64_t bitLength() const;

private:
    void trim();
    std::vector<std::uint64_t> limbs_;
};

// ceil(n/a - n^(2/3)/b) for n >= 1, a >= 1, b >= 1, decided by cubing:
// n/a - n^(2/3)/b <= c  <=>  b*(n - a*c) <= 0  or  (b*(n - a*c))^3 <= n^2*(a*b... )
// worked in 128-bit integers, so no floating point is involved.
long long ceilLinearMinusCbrt(long long n, long long a, long long b);

// ceil(n/3), the plain cycle transversal ceiling.
long long ceilThird(long long n);

// s <= k * log2(n), decided as 2^s <= n^k in exact integers. Requires n >= 1;
// k >= 0; s may be any integer (s <= 0 is true whenever n >= 2 or s <= 0...).
bool fitsLogBound(long long s, long long k, long long n);

// s <= c * sqrt(n) * log2(n), decided exactly. For n a power of two the log is
// an integer and the comparison squares both sides; otherwise log2(n) is
// bracketed by dyadic rationals from exact integer powering, refining until the
// comparison resolves (always terminates: equality would need log2(n) to be
// algebraic, which it is not for n that are not powers of two).
bool fitsSqrtLogBound(long long s, long long c, long long n);

// s <= c * sqrt(m), decided as s^2 <= c^2 * m (s >= 0 path) in exact integers.
bool fitsSqrtBound(long long s, long long c, long long m);

// q <= sqrt(n) for rational q, decided by squaring.
bool leSqrt(const Rational& q, long long n);

// size <= paths/alpha + sqrt(alpha*n), decided by squaring the residual.
bool fitsCountingBound(long long size, std::uint64_t paths, const Rational& alpha, long long n);

// Smallest d >= 0 with (1/fraction)^d >= n, i.e. the depth ceiling for a
// recursion that shrinks instances by the given fraction. fraction in (0,1).
long long depthCeiling(long long n, const Rational& fraction);

// floor(sqrt(n)) and ceil(sqrt(n)) in exact integers.
long long floorSqrt(long long n);
long long ceilSqrt(long long n);

}  // namespace trav
