#ifndef RESFORGE_MONOMIAL_HPP
#define RESFORGE_MONOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <stdexcept>

namespace resforge {

/// Sparse exponent vector: sorted (variable, exponent) pairs packed into
/// 32-bit words (var << 16 | exp), exponents always positive.
class Monomial {
 public:
  using Word = std::uint32_t;
  using Parts = boost::container::small_vector<Word, 8>;

  Monomial() = default;

  static Monomial variable(int var, int exp = 1) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp > 0) {
      m.parts_.push_back(pack(var, exp));
      m.degree_ = static_cast<std::uint32_t>(exp);
    }
    return m;
  }

  bool is_one() const { return parts_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::size_t num_vars() const { return parts_.size(); }
  int var_at(std::size_t p) const { return static_cast<int>(parts_[p] >> 16); }
  int exp_at(std::size_t p) const { return static_cast<int>(parts_[p] & 0xffff); }

  int exponent(int var) const {
    for (Word w : parts_)
      if (static_cast<int>(w >> 16) == var) return static_cast<int>(w & 0xffff);
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.parts_.reserve(a.parts_.size() + b.parts_.size());
    std::size_t i = 0, j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
      Word wa = a.parts_[i], wb = b.parts_[j];
      if ((wa >> 16) == (wb >> 16)) {
        std::uint32_t e = (wa & 0xffff) + (wb & 0xffff);
        if (e > 0xffff) throw std::overflow_error("Monomial: exponent overflow");
        r.parts_.push_back((wa & 0xffff0000u) | e);
        ++i, ++j;
      } else if ((wa >> 16) < (wb >> 16)) {
        r.parts_.push_back(wa);
        ++i;
      } else {
        r.parts_.push_back(wb);
        ++j;
      }
    }
    for (; i < a.parts_.size(); ++i) r.parts_.push_back(a.parts_[i]);
    for (; j < b.parts_.size(); ++j) r.parts_.push_back(b.parts_[j]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  bool divides(const Monomial& m) const {
    std::size_t j = 0;
    for (Word w : parts_) {
      while (j < m.parts_.size() && (m.parts_[j] >> 16) < (w >> 16)) ++j;
      if (j >= m.parts_.size() || (m.parts_[j] >> 16) != (w >> 16) || (m.parts_[j] & 0xffff) < (w & 0xffff))
        return false;
    }
    return true;
  }

  /// this / d; requires d.divides(*this).
  Monomial divide(const Monomial& d) const {
    Monomial r;
    std::size_t j = 0;
    for (Word w : parts_) {
      if (j < d.parts_.size() && (d.parts_[j] >> 16) == (w >> 16)) {
        std::uint32_t e = (w & 0xffff) - (d.parts_[j] & 0xffff);
        if (e > 0) r.parts_.push_back((w & 0xffff0000u) | e);
        ++j;
      } else {
        r.parts_.push_back(w);
      }
    }
    if (j != d.parts_.size()) throw std::domain_error("Monomial: not divisible");
    r.degree_ = degree_ - d.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    std::uint32_t deg = 0;
    while (i < a.parts_.size() || j < b.parts_.size()) {
      if (j >= b.parts_.size() || (i < a.parts_.size() && (a.parts_[i] >> 16) < (b.parts_[j] >> 16))) {
        r.parts_.push_back(a.parts_[i]);
        deg += a.parts_[i] & 0xffff;
        ++i;
      } else if (i >= a.parts_.size() || (b.parts_[j] >> 16) < (a.parts_[i] >> 16)) {
        r.parts_.push_back(b.parts_[j]);
        deg += b.parts_[j] & 0xffff;
        ++j;
      } else {
        std::uint32_t e = std::max(a.parts_[i] & 0xffff, b.parts_[j] & 0xffff);
        r.parts_.push_back((a.parts_[i] & 0xffff0000u) | e);
        deg += e;
        ++i, ++j;
      }
    }
    r.degree_ = deg;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
      if ((a.parts_[i] >> 16) == (b.parts_[j] >> 16)) return false;
      if ((a.parts_[i] >> 16) < (b.parts_[j] >> 16))
        ++i;
      else
        ++j;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Fixed structural (storage) order: by variable-wise packed words.
  /// Any total order works for canonical form; this one is cheap.
  static int cmp_canonical(const Monomial& a, const Monomial& b) {
    std::size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t p = 0; p < n; ++p) {
      if (a.parts_[p] != b.parts_[p]) return a.parts_[p] < b.parts_[p] ? -1 : 1;
    }
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size() ? -1 : 1;
    return 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Word w : parts_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static Word pack(int var, int exp) {
    if (var < 0 || var > 0xffff || exp > 0xffff) throw std::invalid_argument("Monomial: index out of range");
    return (static_cast<Word>(var) << 16) | static_cast<Word>(exp);
  }

  Parts parts_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Degrevlex, Lex };

/// Monomial order over a registry's variable numbering (variable 0 is the
/// largest in the underlying alphabet ordering x_0 > x_1 > ...).
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;

  // Returns -1 / 0 / +1 for a < b / a == b / a > b under the order.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::Degrevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      // degrevlex tie-break: scan from the least variable (largest index);
      // smaller exponent there means the larger monomial.
      std::size_t i = a.num_vars(), j = b.num_vars();
      while (i > 0 || j > 0) {
        int va = i > 0 ? a.var_at(i - 1) : -1;
        int vb = j > 0 ? b.var_at(j - 1) : -1;
        if (va == vb) {
          int ea = a.exp_at(i - 1), eb = b.exp_at(j - 1);
          if (ea != eb) return ea > eb ? -1 : 1;
          --i, --j;
        } else if (va > vb) {
          return -1;  // a has extra weight on a late variable: a smaller
        } else {
          return 1;
        }
      }
      return 0;
    }
    // lex: scan from the greatest variable (smallest index).
    std::size_t i = 0, j = 0;
    while (i < a.num_vars() || j < b.num_vars()) {
      int va = i < a.num_vars() ? a.var_at(i) : INT32_MAX;
      int vb = j < b.num_vars() ? b.var_at(j) : INT32_MAX;
      if (va == vb) {
        int ea = a.exp_at(i), eb = b.exp_at(j);
        if (ea != eb) return ea > eb ? 1 : -1;
        ++i, ++j;
      } else if (va < vb) {
        return 1;  // a has positive exponent on an earlier variable
      } else {
        return -1;
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

}  // namespace resforge

#endif
