#include "trav/rational.hpp"

#include <limits>

namespace trav {

namespace {

__int128 gcdWide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational overflow");
    return (long long)v;
}

}  // namespace

Rational Rational::fromWide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcdWide(n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

void Rational::normalize() {
    *this = fromWide(num_, den_);
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return Rational(n);
        }
        long long n = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("");
        std::string den = text.substr(slash + 1);
        long long d = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument("");
        return Rational(n, d);
    } catch (const std::overflow_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace trav
