#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar and big-integer types.
 *
 * Scalar wraps GMP's mpq_class. Invariants enforced at every entry point:
 * denominator > 0 and the fraction is in lowest terms, so equality is
 * structural. Serialized form is "p" or "p/q" with decimal integers and a
 * single optional '/'.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boxdist {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& z) { return z.get_str(); }

class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(n) {}
    explicit Scalar(const BigInt& n) : v_(n) {}

    Scalar(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Scalar(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" (decimal, optional leading '-', q > 0).
    static Scalar from_string(std::string_view s) {
        auto fail = [&] {
            throw std::invalid_argument("Scalar: malformed rational string '" +
                                        std::string(s) + "'");
        };
        if (s.empty()) fail();
        std::size_t slash = s.find('/');
        std::string_view num = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
        std::string_view den =
            slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
        auto is_int = [](std::string_view t, bool allow_sign) {
            if (!t.empty() && allow_sign && t.front() == '-') t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!is_int(num, true) || !is_int(den, false)) fail();
        BigInt n{std::string(num)};
        BigInt d{std::string(den)};
        if (d == 0) throw std::domain_error("Scalar: zero denominator in '" + std::string(s) + "'");
        return Scalar(n, d);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sgn() const { return ::sgn(v_); }

    double to_double() const { return v_.get_d(); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }
    Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }
    Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }
    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(mpq_class(v_ / o.v_));
    }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }
    bool operator<=(const Scalar& o) const { return v_ <= o.v_; }
    bool operator>(const Scalar& o) const { return v_ > o.v_; }
    bool operator>=(const Scalar& o) const { return v_ >= o.v_; }

private:
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}  // already canonical
    mpq_class v_;
};

inline Scalar abs(const Scalar& x) { return x.sgn() < 0 ? -x : x; }

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace boxdist
