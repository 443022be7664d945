#ifndef RESFORGE_POLYNOMIAL_HPP
#define RESFORGE_POLYNOMIAL_HPP

#include "resforge/monomial.hpp"
#include "resforge/rational.hpp"
#include "resforge/registry.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace resforge {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse exact-rational multivariate polynomial. Terms are kept strictly
/// sorted under the canonical monomial order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() : reg_(nullptr) {}
  explicit Polynomial(const VariableRegistry* reg) : reg_(reg) {}

  static Polynomial zero(const VariableRegistry* reg) { return Polynomial(reg); }

  static Polynomial constant(const VariableRegistry* reg, Rational c) {
    Polynomial p(reg);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
  }

  static Polynomial variable(const VariableRegistry* reg, int var, int exp = 1) {
    Polynomial p(reg);
    if (exp == 0) return constant(reg, 1);
    p.terms_.push_back({Monomial::variable(var, exp), Rational(1)});
    return p;
  }

  static Polynomial signed_variable(const VariableRegistry* reg, SignedVar sv) {
    if (sv.sign == 0) return zero(reg);
    Polynomial p(reg);
    p.terms_.push_back({Monomial::variable(sv.index), Rational(sv.sign)});
    return p;
  }

  static Polynomial from_terms(const VariableRegistry* reg, std::vector<Term> terms) {
    Polynomial p(reg);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VariableRegistry* registry() const { return reg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
    return terms_[0].coeff;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.reg_ ? a.reg_ : b.reg_);
    r.terms_ = merge(a.terms_, b.terms_, false);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.reg_ ? a.reg_ : b.reg_);
    r.terms_ = merge(a.terms_, b.terms_, true);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff.negate();
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const VariableRegistry* reg = a.reg_ ? a.reg_ : b.reg_;
    if (a.is_zero() || b.is_zero()) return zero(reg);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0], reg);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0], reg);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return from_terms(reg, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial operator*(const Rational& c) const {
    if (c.is_zero()) return zero(reg_);
    Polynomial r(*this);
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial r = constant(reg_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = e > 1 ? base * base : base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Evaluate at a full rational point (indexed by variable).
  Rational evaluate(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const Term& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t p = 0; p < t.mono.num_vars(); ++p) {
        const Rational& x = point.at(static_cast<std::size_t>(t.mono.var_at(p)));
        for (int e = 0; e < t.mono.exp_at(p); ++e) v *= x;
      }
      acc += v;
    }
    return acc;
  }

  /// Degree counting only variables accepted by the predicate.
  template <typename Pred>
  int degree_where(Pred pred, const Term& t) const {
    int d = 0;
    for (std::size_t p = 0; p < t.mono.num_vars(); ++p)
      if (pred(t.mono.var_at(p))) d += t.mono.exp_at(p);
    return d;
  }

  /// Checks the canonical-form invariant by traversal.
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff.is_zero()) return false;
      if (i > 0 && Monomial::cmp_canonical(terms_[i - 1].mono, terms_[i].mono) >= 0) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Term& t = *it;
      Rational c = t.coeff;
      if (!first) os << (c.sign() < 0 ? " - " : " + ");
      if (first && c.sign() < 0) os << "-";
      first = false;
      Rational a = c.sign() < 0 ? -c : c;
      bool need_coeff = !a.is_one() || t.mono.is_one();
      if (need_coeff) os << a.str();
      for (std::size_t p = 0; p < t.mono.num_vars(); ++p) {
        if (need_coeff || p > 0) os << "*";
        os << reg_->name(t.mono.var_at(p));
        if (t.mono.exp_at(p) > 1) os << "^" << t.mono.exp_at(p);
      }
    }
    return os.str();
  }

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.reg_ && b.reg_ && a.reg_ != b.reg_)
      throw std::invalid_argument("Polynomial: registry mismatch");
  }

 private:
  Polynomial times_term(const Term& t, const VariableRegistry* reg) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& u : terms_) {
      Rational c = u.coeff * t.coeff;
      if (!c.is_zero()) out.push_back({u.mono * t.mono, std::move(c)});
    }
    return from_terms(reg, std::move(out));
  }

  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool sub) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = Monomial::cmp_canonical(a[i].mono, b[j].mono);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j]);
        if (sub) out.back().coeff.negate();
        ++j;
      } else {
        Rational s = a[i].coeff;
        if (sub)
          s -= b[j].coeff;
        else
          s += b[j].coeff;
        if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      out.push_back(b[j]);
      if (sub) out.back().coeff.negate();
    }
    return out;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return Monomial::cmp_canonical(x.mono, y.mono) < 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && Monomial::cmp_canonical(out.back().mono, t.mono) == 0) {
        out.back().coeff += t.coeff;
        if (out.back().coeff.is_zero()) out.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  const VariableRegistry* reg_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// Hash-based accumulator for big sums of products; the workhorse behind
/// determinants, compositions and wedge expansion.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(const VariableRegistry* reg) : reg_(reg) { map_.reserve(64); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = map_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) map_.erase(it);
    }
  }

  void add(const Polynomial& p, const Rational& scale = Rational(1)) {
    for (const Term& t : p.terms()) add_term(t.mono, t.coeff * scale);
  }

  /// += scale * m * p
  void add_scaled(const Monomial& m, const Rational& scale, const Polynomial& p) {
    if (scale.is_zero()) return;
    for (const Term& t : p.terms()) add_term(m * t.mono, t.coeff * scale);
  }

  /// += a * b, fully expanded.
  void add_product(const Polynomial& a, const Polynomial& b) {
    if (a.num_terms() > b.num_terms()) return add_product(b, a);
    for (const Term& t : a.terms()) add_scaled(t.mono, t.coeff, b);
  }

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  Polynomial take() {
    std::vector<Term> terms;
    terms.reserve(map_.size());
    for (auto& [m, c] : map_) terms.push_back({m, std::move(c)});
    map_.clear();
    return Polynomial::from_terms(reg_, std::move(terms));
  }

 private:
  const VariableRegistry* reg_;
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

/// Variable-to-polynomial substitution over a target registry. Variables not
/// mapped are carried over to the target registry by name.
class Substitution {
 public:
  Substitution(const VariableRegistry* source, const VariableRegistry* target, std::string provenance = "")
      : source_(source), target_(target), provenance_(std::move(provenance)) {}

  const VariableRegistry* source() const { return source_; }
  const VariableRegistry* target() const { return target_; }
  const std::string& provenance() const { return provenance_; }

  void map_var(int source_var, Polynomial image) {
    Polynomial::check_same(image, Polynomial(target_));
    images_[source_var] = std::move(image);
  }
  void map_var(int source_var, Rational c) { images_[source_var] = Polynomial::constant(target_, std::move(c)); }

  Polynomial apply(const Polynomial& p) const {
    if (p.registry() != source_) throw std::invalid_argument("Substitution: polynomial not over source registry");
    PolyAccumulator acc(target_);
    std::vector<Polynomial> factors;
    for (const Term& t : p.terms()) {
      Polynomial prod = Polynomial::constant(target_, t.coeff);
      for (std::size_t pi = 0; pi < t.mono.num_vars(); ++pi) {
        const Polynomial& img = image_of(t.mono.var_at(pi));
        prod *= power_cached(t.mono.var_at(pi), img, t.mono.exp_at(pi));
        if (prod.is_zero()) break;
      }
      acc.add(prod);
    }
    return acc.take();
  }

 private:
  const Polynomial& image_of(int var) const {
    auto it = images_.find(var);
    if (it != images_.end()) return it->second;
    auto ct = carried_.find(var);
    if (ct != carried_.end()) return ct->second;
    const std::string& nm = source_->name(var);
    int tv = target_->find(nm);
    if (tv < 0)
      throw std::invalid_argument("Substitution: variable " + nm + " is unmapped and absent from target registry");
    return carried_.emplace(var, Polynomial::variable(target_, tv)).first->second;
  }

  Polynomial power_cached(int var, const Polynomial& img, int exp) const {
    if (exp == 1) return img;
    auto key = std::make_pair(var, exp);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
    Polynomial p = img.pow(exp);
    powers_.emplace(key, p);
    return p;
  }

  const VariableRegistry* source_;
  const VariableRegistry* target_;
  std::string provenance_;
  std::map<int, Polynomial> images_;
  mutable std::map<int, Polynomial> carried_;
  mutable std::map<std::pair<int, int>, Polynomial> powers_;
};

// Operation-style free functions mirroring the in-process API surface.
inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Polynomial poly_substitute(const Polynomial& p, const Substitution& s) { return s.apply(p); }

}  // namespace resforge

#endif
