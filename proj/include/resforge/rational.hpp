#ifndef RESFORGE_RATIONAL_HPP
#define RESFORGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace resforge {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Values that fit in 64 bits are kept inline;
/// anything larger is promoted to an arbitrary-precision fallback.
/// Invariant: denominator > 0 and gcd(num, den) == 1 in the inline state.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    normalize_small();
  }
  explicit Rational(const BigRational& b) { assign_big(b); }

  static Rational from_string(const std::string& num, const std::string& den) {
    BigInt n(num), d(den);
    if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
    BigRational b(n);
    b /= d;  // normalizes sign and gcd
    return Rational(b);
  }

  bool is_zero() const { return big_ ? big_->is_zero() : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  int sign() const {
    if (big_) return big_->sign();
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  Rational operator-() const {
    Rational r(*this);
    r.negate();
    return r;
  }
  void negate() {
    if (big_)
      set_big(-big_->value);
    else if (num_ == INT64_MIN)
      promote(), set_big(-big_->value);
    else
      num_ = -num_;
  }

  Rational& operator+=(const Rational& o) { return add_sub(o, false); }
  Rational& operator-=(const Rational& o) { return add_sub(o, true); }

  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      // cross-cancel first so intermediates stay small
      long long g1 = std::gcd(num_, o.den_);
      long long g2 = std::gcd(o.num_, den_);
      __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
      __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
      if (fits(n) && fits(d)) {
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
        return *this;
      }
    }
    set_big(to_big().value * o.to_big().value);
    try_demote();
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational inv;
    if (!o.big_) {
      inv.num_ = o.den_;
      inv.den_ = o.num_;
      if (inv.den_ < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
      }
    } else {
      inv.set_big(1 / o.big_->value);
    }
    return *this *= inv;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_big().value == b.to_big().value;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_big().value < b.to_big().value;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  BigInt numerator() const { return big_ ? boost::multiprecision::numerator(big_->value) : BigInt(num_); }
  BigInt denominator() const { return big_ ? boost::multiprecision::denominator(big_->value) : BigInt(den_); }

  std::string numerator_str() const { return numerator().str(); }
  std::string denominator_str() const { return denominator().str(); }

  std::string str() const {
    std::string s = numerator_str();
    if (denominator() != 1) s += "/" + denominator_str();
    return s;
  }

 private:
  struct BigBox {
    BigRational value;
    bool is_zero() const { return value.is_zero(); }
    int sign() const { return value.sign(); }
    bool operator==(int v) const { return value == v; }
  };

  static bool fits(__int128 v) {
    return v > -(static_cast<__int128>(1) << 62) && v < (static_cast<__int128>(1) << 62);
  }

  void normalize_small() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Rational& add_sub(const Rational& o, bool sub) {
    if (!big_ && !o.big_) {
      long long on = sub ? -o.num_ : o.num_;
      if (o.num_ != INT64_MIN) {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(on) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
          n /= g;
          d /= g;
        }
        if (fits(n) && fits(d)) {
          num_ = static_cast<long long>(n);
          den_ = static_cast<long long>(d);
          if (num_ == 0) den_ = 1;
          return *this;
        }
      }
    }
    if (sub)
      set_big(to_big().value - o.to_big().value);
    else
      set_big(to_big().value + o.to_big().value);
    try_demote();
    return *this;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  BigBox to_big() const {
    if (big_) return *big_;
    return BigBox{BigRational(num_, den_)};
  }

  void promote() {
    if (!big_) set_big(BigRational(num_, den_));
  }
  void set_big(BigRational v) { big_ = std::make_shared<const BigBox>(BigBox{std::move(v)}); }

  void assign_big(const BigRational& b) {
    set_big(b);
    try_demote();
  }

  void try_demote() {
    if (!big_) return;
    const BigRational& v = big_->value;
    BigInt n = boost::multiprecision::numerator(v);
    BigInt d = boost::multiprecision::denominator(v);
    static const BigInt lim = BigInt(1) << 62;
    if (n > -lim && n < lim && d < lim) {
      num_ = n.convert_to<long long>();
      den_ = d.convert_to<long long>();
      big_.reset();
    }
  }

  long long num_, den_;
  std::shared_ptr<const BigBox> big_;  // engaged only when out of 64-bit range
};

}  // namespace resforge

#endif
