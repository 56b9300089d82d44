#include <cstdint>

#include "doctest.h"
#include "testutil.hpp"
#include "trav/bounds.hpp"

using namespace trav;

TEST_CASE("big unsigned integers multiply and compare exactly") {
    CHECK(BigUint(0) == BigUint());
    CHECK(BigUint(7) * BigUint(6) == BigUint(42));
    CHECK(BigUint(1) < BigUint(2));
    CHECK(BigUint(0).bitLength() == 0);
    CHECK(BigUint(1).bitLength() == 1);
    CHECK(BigUint(255).bitLength() == 8);
    CHECK(BigUint::twoPow(0) == BigUint(1));
    CHECK(BigUint::twoPow(64).bitLength() == 65);
    CHECK(BigUint::twoPow(3) * BigUint::twoPow(200) == BigUint::twoPow(203));
    CHECK(BigUint::pow(10, 20).bitLength() == 67);  // 10^20 needs 67 bits
    CHECK(BigUint::pow(3, 40) == BigUint(12157665459056928801ULL));
    CHECK(BigUint::pow(2, 100) == BigUint::twoPow(100));
    CHECK(BigUint::pow(7, 0) == BigUint(1));
    // multiplication carries across limb boundaries
    BigUint a = BigUint(0xFFFFFFFFFFFFFFFFULL);
    CHECK((a * a).bitLength() == 128);
    CHECK(a * a < BigUint::twoPow(128));
    CHECK(BigUint::twoPow(127) < a * a);
}

TEST_CASE("quarter-minus-cube-root ceiling matches the reference table") {
    for (int n = 1; n <= 14; ++n)
        CHECK(ceilLinearMinusCbrt(n, 4, 90) == testutil::kQuarterCbrtTable[n - 1]);
}

TEST_CASE("third-minus-cube-root ceiling matches the reference table") {
    for (int n = 3; n <= 14; ++n) {
        CHECK(ceilLinearMinusCbrt(n, 3, 36) == testutil::kThirdCbrtTable[n - 3]);
        // at desk scale the correction term has not kicked in yet
        CHECK(ceilLinearMinusCbrt(n, 3, 36) == ceilThird(n));
    }
}

TEST_CASE("linear-minus-cube-root ceiling at exact cubes and large inputs") {
    // n = 90^3: n^(2/3) = 8100 exactly, so the value is 182250 - 90
    CHECK(ceilLinearMinusCbrt(729000, 4, 90) == 182160);
    CHECK(ceilLinearMinusCbrt(729001, 4, 90) == 182161);
    // n = 36^3: n^(2/3) = 1296 exactly, so the value is 15552 - 36
    CHECK(ceilLinearMinusCbrt(46656, 3, 36) == 15516);
    CHECK(ceilLinearMinusCbrt(46655, 3, 36) == 15516);
    CHECK(ceilLinearMinusCbrt(1000, 4, 90) == 249);
    CHECK(ceilLinearMinusCbrt(1000000, 4, 90) == 249889);
    CHECK(ceilLinearMinusCbrt(1000, 3, 36) == 331);
}

TEST_CASE("ceiling of a third") {
    CHECK(ceilThird(1) == 1);
    CHECK(ceilThird(2) == 1);
    CHECK(ceilThird(3) == 1);
    CHECK(ceilThird(4) == 2);
    CHECK(ceilThird(6) == 2);
    CHECK(ceilThird(7) == 3);
    CHECK(ceilThird(300) == 100);
}

TEST_CASE("log bound decided by integer powering") {
    // s <= k * log2(n)  <=>  2^s <= n^k
    CHECK(fitsLogBound(10, 1, 1024));
    CHECK(!fitsLogBound(11, 1, 1024));
    CHECK(fitsLogBound(9, 1, 1000));   // 512 <= 1000
    CHECK(!fitsLogBound(10, 1, 1000)); // 1024 > 1000
    CHECK(fitsLogBound(33, 2, 100000));  // 2^33 < 10^10
    CHECK(!fitsLogBound(34, 2, 100000)); // 2^34 > 10^10
    CHECK(fitsLogBound(0, 0, 5));
    CHECK(!fitsLogBound(1, 0, 5));
    CHECK(fitsLogBound(-3, 0, 5));
    CHECK(fitsLogBound(0, 3, 1));
    CHECK(!fitsLogBound(1, 3, 1));
    // deep exact case: 2^600 vs (2^6)^100
    CHECK(fitsLogBound(600, 100, 64));
    CHECK(!fitsLogBound(601, 100, 64));
}

TEST_CASE("sqrt-log bound boundaries frozen from high-precision evaluation") {
    // thresholds of 9*sqrt(n)*log2(n), checked to 60 decimal digits
    const struct { long long n, maxS; } rows[] = {
        {2, 12}, {3, 24}, {7, 66}, {9, 85}, {13, 120}, {100, 597},
    };
    for (auto [n, maxS] : rows) {
        CAPTURE(n);
        CHECK(fitsSqrtLogBound(maxS, 9, n));
        CHECK(!fitsSqrtLogBound(maxS + 1, 9, n));
    }
    // powers of two resolve exactly: 9*2*2 = 36 and 9*4*4 = 144 are attained
    CHECK(fitsSqrtLogBound(36, 9, 4));
    CHECK(!fitsSqrtLogBound(37, 9, 4));
    CHECK(fitsSqrtLogBound(144, 9, 16));
    CHECK(!fitsSqrtLogBound(145, 9, 16));
    CHECK(fitsSqrtLogBound(0, 9, 1));
    CHECK(!fitsSqrtLogBound(1, 9, 1));
    CHECK(fitsSqrtLogBound(-1, 9, 1));
}

TEST_CASE("sqrt bound decided by squaring") {
    CHECK(fitsSqrtBound(3, 1, 9));
    CHECK(!fitsSqrtBound(4, 1, 9));
    CHECK(fitsSqrtBound(3, 1, 10));
    CHECK(fitsSqrtBound(6, 2, 9));
    CHECK(!fitsSqrtBound(7, 2, 9));
    CHECK(fitsSqrtBound(0, 5, 0));
    CHECK(fitsSqrtBound(-2, 1, 0));
    CHECK(fitsSqrtBound(3000000000LL, 1, 9000000000000000000LL));
    CHECK(!fitsSqrtBound(3000000001LL, 1, 9000000000000000000LL));
}

TEST_CASE("rational below square root decided by squaring") {
    CHECK(leSqrt(Rational(3), 9));
    CHECK(!leSqrt(Rational(3), 8));
    CHECK(leSqrt(Rational(7, 2), 13));   // 49/4 <= 13
    CHECK(!leSqrt(Rational(7, 2), 12));  // 49/4 > 12
    CHECK(leSqrt(Rational(-5), 1));
    CHECK(leSqrt(Rational(0), 0));
    CHECK(leSqrt(Rational(141421356, 100000000), 2));
    CHECK(!leSqrt(Rational(141421357, 100000000), 2));
}

TEST_CASE("counting bound decided exactly") {
    // size <= paths/alpha + sqrt(alpha*n)
    CHECK(fitsCountingBound(4, 6, Rational(2), 4));      // 3 + sqrt(8) ~ 5.83
    CHECK(fitsCountingBound(5, 6, Rational(2), 4));
    CHECK(!fitsCountingBound(6, 6, Rational(2), 4));
    CHECK(fitsCountingBound(2, 0, Rational(2), 2));      // sqrt(4) = 2 attained
    CHECK(!fitsCountingBound(3, 0, Rational(2), 2));
    CHECK(fitsCountingBound(0, 0, Rational(2), 0));
    // fractional alpha: paths/alpha = 8/(5/2) = 16/5, sqrt(5n/2)
    CHECK(fitsCountingBound(6, 8, Rational(5, 2), 5));   // 3.2 + sqrt(12.5) ~ 6.73
    CHECK(!fitsCountingBound(7, 8, Rational(5, 2), 5));
}

TEST_CASE("depth ceiling for shrinking recursions") {
    // smallest d with (1/f)^d >= n
    CHECK(depthCeiling(1, Rational(2, 3)) == 0);
    CHECK(depthCeiling(2, Rational(2, 3)) == 2);   // (3/2)^2 = 2.25
    CHECK(depthCeiling(3, Rational(2, 3)) == 3);   // (3/2)^3 = 3.375
    CHECK(depthCeiling(8, Rational(1, 2)) == 3);
    CHECK(depthCeiling(9, Rational(1, 2)) == 4);
    CHECK(depthCeiling(1000, Rational(1, 2)) == 10);
    CHECK(depthCeiling(100, Rational(2, 3)) == 12);  // (3/2)^12 ~ 129.7, (3/2)^11 ~ 86.5
}

TEST_CASE("integer square roots") {
    CHECK(floorSqrt(0) == 0);
    CHECK(floorSqrt(1) == 1);
    CHECK(floorSqrt(3) == 1);
    CHECK(floorSqrt(4) == 2);
    CHECK(floorSqrt(15) == 3);
    CHECK(floorSqrt(16) == 4);
    CHECK(ceilSqrt(0) == 0);
    CHECK(ceilSqrt(1) == 1);
    CHECK(ceilSqrt(2) == 2);
    CHECK(ceilSqrt(4) == 2);
    CHECK(ceilSqrt(5) == 3);
    for (long long n = 0; n <= 3000; ++n) {
        long long f = floorSqrt(n), c = ceilSqrt(n);
        REQUIRE(f * f <= n);
        REQUIRE((f + 1) * (f + 1) > n);
        REQUIRE(c * c >= n);
        REQUIRE((c == 0 || (c - 1) * (c - 1) < n));
    }
    CHECK(floorSqrt(9000000000000000000LL) == 3000000000LL);
}
