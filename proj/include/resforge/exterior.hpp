#ifndef RESFORGE_EXTERIOR_HPP
#define RESFORGE_EXTERIOR_HPP

#include "resforge/polynomial.hpp"

#include <map>

namespace resforge {

/// Element of the exterior algebra on the F_3 basis g_1..g_m with Polynomial
/// coefficients; components keyed by index-set bitmask (bit t-1 <-> g_t).
class ExtElement {
 public:
  ExtElement(const VariableRegistry* reg, int m) : reg_(reg), m_(m) {}

  static ExtElement scalar(const VariableRegistry* reg, int m, Polynomial c) {
    ExtElement e(reg, m);
    if (!c.is_zero()) e.comps_.emplace(0u, std::move(c));
    return e;
  }
  static ExtElement zero(const VariableRegistry* reg, int m) { return ExtElement(reg, m); }

  static ExtElement basis(const VariableRegistry* reg, int m, int t) {
    ExtElement e(reg, m);
    e.comps_.emplace(1u << (t - 1), Polynomial::constant(reg, 1));
    return e;
  }

  const VariableRegistry* registry() const { return reg_; }
  int m() const { return m_; }
  bool is_zero() const { return comps_.empty(); }

  void add_component(std::uint32_t mask, const Polynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = comps_.try_emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  ExtElement operator+(const ExtElement& o) const {
    ExtElement r(*this);
    for (const auto& [mask, c] : o.comps_) r.add_component(mask, c);
    return r;
  }
  ExtElement operator-() const {
    ExtElement r(*this);
    for (auto& [mask, c] : r.comps_) c = -c;
    return r;
  }
  ExtElement operator-(const ExtElement& o) const { return *this + (-o); }

  ExtElement operator*(const Rational& c) const {
    ExtElement r(reg_, m_);
    for (const auto& [mask, p] : comps_) r.add_component(mask, p * c);
    return r;
  }
  ExtElement operator*(const Polynomial& c) const {
    ExtElement r(reg_, m_);
    for (const auto& [mask, p] : comps_) r.add_component(mask, p * c);
    return r;
  }

  /// Wedge product with shuffle signs.
  ExtElement wedge(const ExtElement& o) const {
    ExtElement r(reg_, m_);
    for (const auto& [ma, pa] : comps_)
      for (const auto& [mb, pb] : o.comps_) {
        if (ma & mb) continue;
        int s = shuffle_sign(ma, mb);
        Polynomial prod = pa * pb;
        r.add_component(ma | mb, s < 0 ? -prod : prod);
      }
    return r;
  }

  Polynomial coefficient(std::uint32_t mask) const {
    auto it = comps_.find(mask);
    return it == comps_.end() ? Polynomial::zero(reg_) : it->second;
  }

  /// Coefficient of g_1 ^ ... ^ g_m.
  Polynomial top_coefficient() const { return coefficient(m_ >= 32 ? ~0u : ((1u << m_) - 1)); }

  /// Parity of the permutation sorting the concatenation (a-bits, b-bits).
  static int shuffle_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    while (b) {
      std::uint32_t low = b & (~b + 1);
      inversions += __builtin_popcount(a & ~(low - 1) & ~low);
      b &= b - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

 private:
  const VariableRegistry* reg_;
  int m_;
  std::map<std::uint32_t, Polynomial> comps_;
};

/// d4m wedge building blocks over a registry holding b(i,j)^k and c(u,t).
struct WedgeContext {
  const VariableRegistry* reg;
  int m;

  /// G_{ij} = sum_t b(i,j)^t g_t, with literal skew reading (G_{ji} = -G_{ij}).
  ExtElement G(int i, int j) const {
    ExtElement e(reg, m);
    for (int t = 1; t <= m; ++t) {
      SignedVar sv = reg->b_var(i, j, t);
      if (sv.sign != 0) e.add_component(1u << (t - 1), Polynomial::signed_variable(reg, sv));
    }
    return e;
  }

  /// Unsigned reading: indices treated as an unordered pair.
  ExtElement G_unordered(int i, int j) const { return i <= j ? G(i, j) : G(j, i); }

  ExtElement g(int t) const { return ExtElement::basis(reg, m, t); }

  /// C = sum_{u<t} c(u,t) g_u ^ g_t.
  ExtElement C() const {
    ExtElement e(reg, m);
    for (int u = 1; u <= m; ++u)
      for (int t = u + 1; t <= m; ++t)
        e.add_component((1u << (u - 1)) | (1u << (t - 1)),
                        Polynomial::signed_variable(reg, reg->c_var(u, t)));
    return e;
  }

  /// C^(s) = C^s / s! (divided power); C^(0) = 1, C^(-1) = 0.
  ExtElement C_pow(int s) const {
    if (s < 0) return ExtElement::zero(reg, m);
    ExtElement acc = ExtElement::scalar(reg, m, Polynomial::constant(reg, 1));
    if (s == 0) return acc;
    ExtElement c = C();
    for (int k = 1; k <= s; ++k) acc = acc.wedge(c) * Rational(1, k);
    return acc;
  }
};

}  // namespace resforge

#endif
