#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wittmod {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0.
class Rat {
public:
    Rat() = default;
    Rat(int v) : v_(v) {}
    Rat(long v) : v_(v) {}
    Rat(long long v) : v_(v) {}
    Rat(const BigInt& v) : v_(v) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// Accepts "p", "-p", "p/q"; no decimals.
    static Rat parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        return Rat(num, den);
    }

    /// "p" or "p/q", never a decimal point.
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace wittmod

#include <ostream>

namespace wittmod {
inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
}  // namespace wittmod
