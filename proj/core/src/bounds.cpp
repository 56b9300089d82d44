#include "trav/bounds.hpp"

#include <stdexcept>

namespace trav {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::twoPow(std::uint64_t e) {
    BigUint r;
    r.limbs_.assign(e / 64 + 1, 0);
    r.limbs_.back() = 1ULL << (e % 64);
    return r;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t e) {
    BigUint acc(1);
    BigUint b(base);
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

BigUint BigUint::operator*(const BigUint& o) const {
    BigUint r;
    if (limbs_.empty() || o.limbs_.empty()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            unsigned __int128 cur = (unsigned __int128)limbs_[i] * o.limbs_[j] +
                                    r.limbs_[i + j] + carry;
            r.limbs_[i + j] = (std::uint64_t)cur;
            carry = cur >> 64;
        }
        size_t k = i + o.limbs_.size();
        while (carry != 0) {
            unsigned __int128 cur = (unsigned __int128)r.limbs_[k] + carry;
            r.limbs_[k] = (std::uint64_t)cur;
            carry = cur >> 64;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i])
            return limbs_[i] < o.limbs_[i] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::bitLength() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::uint64_t bits = 0;
    while (top != 0) { ++bits; top >>= 1; }
    return (limbs_.size() - 1) * 64 + bits;
}

namespace {

// n/a - n^(2/3)/b <= c, cubed into integers.
bool boundHolds(long long n, long long a, long long b, long long c) {
    __int128 num = (__int128)b * (n - a * c);   // compare num/a <= n^(2/3)
    if (num <= 0) return true;
    return num * num * num <= (__int128)n * n * ((__int128)a * a * a);
}

}  // namespace

long long ceilLinearMinusCbrt(long long n, long long a, long long b) {
    if (n < 1 || a < 1 || b < 1) throw std::invalid_argument("ceilLinearMinusCbrt needs positive arguments");
    long long c = (n + a - 1) / a;
    while (boundHolds(n, a, b, c - 1)) --c;
    return c;
}

long long ceilThird(long long n) {
    if (n < 0) throw std::invalid_argument("ceilThird needs n >= 0");
    return (n + 2) / 3;
}

bool fitsLogBound(long long s, long long k, long long n) {
    if (n < 1 || k < 0) throw std::invalid_argument("fitsLogBound needs n >= 1, k >= 0");
    if (s <= 0) return true;
    if (n == 1) return false;  // k*log2(1) = 0 < s
    return BigUint::twoPow((std::uint64_t)s) <= BigUint::pow((std::uint64_t)n, (std::uint64_t)k);
}

bool fitsSqrtBound(long long s, long long c, long long m) {
    if (m < 0 || c < 0) throw std::invalid_argument("fitsSqrtBound needs m, c >= 0");
    if (s <= 0) return true;
    return (__int128)s * s <= (__int128)c * c * m;
}

bool fitsSqrtLogBound(long long s, long long c, long long n) {
    if (n < 1 || c < 0) throw std::invalid_argument("fitsSqrtLogBound needs n >= 1, c >= 0");
    if (s <= 0) return true;
    if (n == 1) return false;
    if ((n & (n - 1)) == 0) {
        long long m = 0;
        for (long long v = n; v > 1; v >>= 1) ++m;
        // s <= c*m*sqrt(n)  <=>  s^2 <= c^2*m^2*n
        return (__int128)s * s <= (__int128)c * c * m * m * n;
    }
    // Bracket 2^K*log2(n) between a and a+1 via a = bitLength(n^(2^K)) - 1,
    // then compare (s*2^K)^2 against c^2*n*a^2 from both sides.
    for (std::uint64_t K = 4; K <= 22; K += 6) {
        BigUint powed = BigUint::pow((std::uint64_t)n, 1ULL << K);
        std::uint64_t a = powed.bitLength() - 1;
        BigUint lhs = BigUint((std::uint64_t)s) * BigUint::twoPow(K);
        lhs = lhs * lhs;
        BigUint scale = BigUint((std::uint64_t)(c * c)) * BigUint((std::uint64_t)n);
        BigUint lo = scale * BigUint(a) * BigUint(a);
        if (lhs <= lo) return true;
        BigUint hi = scale * BigUint(a + 1) * BigUint(a + 1);
        if (lhs > hi) return false;
    }
    throw std::logic_error("fitsSqrtLogBound failed to resolve");
}

bool leSqrt(const Rational& q, long long n) {
    if (n < 0) throw std::invalid_argument("leSqrt needs n >= 0");
    if (q <= Rational(0)) return true;
    return q * q <= Rational(n);
}

bool fitsCountingBound(long long size, std::uint64_t paths, const Rational& alpha, long long n) {
    Rational residual = Rational(size) - Rational((long long)paths) / alpha;
    if (residual <= Rational(0)) return true;
    return residual * residual <= alpha * Rational(n);
}

long long depthCeiling(long long n, const Rational& fraction) {
    if (n < 1) throw std::invalid_argument("depthCeiling needs n >= 1");
    if (!(Rational(0) < fraction && fraction < Rational(1)))
        throw std::invalid_argument("depthCeiling needs fraction in (0,1)");
    // smallest d with (den/num)^d >= n  <=>  den^d >= n * num^d
    long long d = 0;
    __int128 dp = 1, np = 1;
    while (dp < (__int128)n * np) {
        dp *= fraction.den();
        np *= fraction.num();
        ++d;
        if (d > 256) throw std::logic_error("depthCeiling runaway");
    }
    return d;
}

long long floorSqrt(long long n) {
    if (n < 0) throw std::invalid_argument("floorSqrt needs n >= 0");
    long long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long long ceilSqrt(long long n) {
    long long f = floorSqrt(n);
    return f * f == n ? f : f + 1;
}

}  // namespace trav
