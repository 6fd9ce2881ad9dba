#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bvg {

// Exact rational arithmetic over 64-bit integers.
//
// Values are kept reduced (coprime, denominator positive, zero as 0/1), so
// equality is plain member comparison. Intermediate sums and products run
// in 128 bits; a result that does not fit back into 64 bits after reduction
// throws std::overflow_error. Equilibrium predicates compare payoffs for
// exact equality, so no floating point appears anywhere in the engine.
class rational {
public:
    constexpr rational() = default;
    constexpr rational(long long n) : num_(n), den_(1) {}
    rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        *this = normalize(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    rational operator-() const {
        rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    rational operator+(const rational& o) const {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return normalize(n, d);
    }
    rational operator-(const rational& o) const { return *this + (-o); }

    rational operator*(const rational& o) const {
        __int128 n = i128(num_) * o.num_;
        __int128 d = i128(den_) * o.den_;
        return normalize(n, d);
    }

    rational operator/(const rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        __int128 n = i128(num_) * o.den_;
        __int128 d = i128(den_) * o.num_;
        return normalize(n, d);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    bool operator==(const rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::strong_ordering operator<=>(const rational& o) const {
        __int128 lhs = i128(num_) * o.den_;
        __int128 rhs = i128(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Renders "p" for integers and "p/q" otherwise.
    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Always renders "p/q", the form used in transfer serializations.
    std::string to_fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q" with an optional leading sign.
    static rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return rational(std::stoll(std::string(text)));
            long long n = std::stoll(std::string(text.substr(0, slash)));
            long long d = std::stoll(std::string(text.substr(slash + 1)));
            return rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
        } catch (const std::out_of_range&) {
            throw std::overflow_error("rational: literal out of range '" + std::string(text) + "'");
        }
    }

private:
    static constexpr __int128 i128(long long v) { return static_cast<__int128>(v); }

    static rational normalize(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            rational r;
            return r;
        }
        unsigned __int128 a = n < 0 ? static_cast<unsigned __int128>(-n)
                                    : static_cast<unsigned __int128>(n);
        unsigned __int128 b = static_cast<unsigned __int128>(d);
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        n /= static_cast<__int128>(a);
        d /= static_cast<__int128>(a);
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.to_string();
}

inline rational abs(const rational& r) { return r.is_negative() ? -r : r; }

}  // namespace bvg
