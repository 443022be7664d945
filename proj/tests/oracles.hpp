#ifndef RESFORGE_TESTS_ORACLES_HPP
#define RESFORGE_TESTS_ORACLES_HPP

// Independent reference implementations used to freeze expected values.
// These stay deliberately naive and never call the code paths they check.

#include "resforge/matrix.hpp"
#include "resforge/polynomial.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracles {

using resforge::Monomial;
using resforge::PolyMatrix;
using resforge::Polynomial;
using resforge::Rational;
using resforge::Term;
using resforge::VariableRegistry;

/// Term-by-term merge with a map keyed by exponent vectors.
inline Polynomial naive_add(const Polynomial& a, const Polynomial& b) {
  std::map<std::vector<int>, Rational> acc;
  auto key = [&](const Monomial& m) {
    std::vector<int> k(a.registry() ? a.registry()->size() : b.registry()->size(), 0);
    for (std::size_t p = 0; p < m.num_vars(); ++p) k[m.var_at(p)] = m.exp_at(p);
    return k;
  };
  for (const Term& t : a.terms()) acc[key(t.mono)] += t.coeff;
  for (const Term& t : b.terms()) acc[key(t.mono)] += t.coeff;
  std::vector<Term> terms;
  for (const auto& [k, c] : acc) {
    if (c.is_zero()) continue;
    Monomial m;
    for (std::size_t v = 0; v < k.size(); ++v)
      if (k[v] > 0) m = m * Monomial::variable(static_cast<int>(v), k[v]);
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(a.registry() ? a.registry() : b.registry(), terms);
}

/// Double-loop convolution.
inline Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial acc = Polynomial::zero(a.registry() ? a.registry() : b.registry());
  for (const Term& ta : a.terms())
    for (const Term& tb : b.terms()) {
      std::vector<Term> one = {{ta.mono * tb.mono, ta.coeff * tb.coeff}};
      acc = naive_add(acc, Polynomial::from_terms(acc.registry(), one));
    }
  return acc;
}

/// Plain recursive cofactor expansion along the first row, no memoization.
inline Polynomial cofactor_det(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 0) return Polynomial::constant(m.registry(), 1);
  if (n == 1) return m.at(0, 0);
  Polynomial acc = Polynomial::zero(m.registry());
  for (int c = 0; c < n; ++c) {
    std::vector<int> rows, cols;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    for (int cc = 0; cc < n; ++cc)
      if (cc != c) cols.push_back(cc);
    Polynomial sub = cofactor_det(m.submatrix(rows, cols));
    Polynomial term = m.at(0, c) * sub;
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Pfaffian straight from the definition: signed sum over perfect matchings.
inline Polynomial matching_pfaffian(const PolyMatrix& m) {
  int n = m.rows();
  Polynomial acc = Polynomial::zero(m.registry());
  std::vector<int> left;
  for (int i = 0; i < n; ++i) left.push_back(i);
  std::function<void(std::vector<int>&, std::vector<std::pair<int, int>>&)> rec =
      [&](std::vector<int>& rest, std::vector<std::pair<int, int>>& pairs) {
        if (rest.empty()) {
          // sign of the permutation (i1 j1 i2 j2 ...)
          std::vector<int> perm;
          for (auto [i, j] : pairs) perm.push_back(i), perm.push_back(j);
          int inv = 0;
          for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
              if (perm[a] > perm[b]) ++inv;
          Polynomial prod = Polynomial::constant(m.registry(), inv % 2 == 0 ? 1 : -1);
          for (auto [i, j] : pairs) prod *= m.at(i, j);
          acc += prod;
          return;
        }
        int i = rest.front();
        for (std::size_t t = 1; t < rest.size(); ++t) {
          std::vector<int> next;
          for (std::size_t s = 1; s < rest.size(); ++s)
            if (s != t) next.push_back(rest[s]);
          pairs.push_back({i, rest[t]});
          rec(next, pairs);
          pairs.pop_back();
        }
      };
  std::vector<std::pair<int, int>> pairs;
  rec(left, pairs);
  return acc;
}

/// Deterministic random sparse polynomial.
inline Polynomial random_poly(const VariableRegistry* reg, std::mt19937_64& rng, int max_terms, int max_deg,
                              int coeff_range = 20) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> var(0, static_cast<int>(reg->size()) - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m * Monomial::variable(var(rng));
    int c = coeff(rng);
    if (c != 0) terms.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(reg, terms);
}

inline PolyMatrix random_int_matrix(const VariableRegistry* reg, std::mt19937_64& rng, int n, int range = 9) {
  std::uniform_int_distribution<int> dist(-range, range);
  PolyMatrix m(n, n, reg);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, Polynomial::constant(reg, dist(rng)));
  return m;
}

inline PolyMatrix random_skew_int_matrix(const VariableRegistry* reg, std::mt19937_64& rng, int n, int range = 9) {
  std::uniform_int_distribution<int> dist(-range, range);
  PolyMatrix m(n, n, reg);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = dist(rng);
      m.set(i, j, Polynomial::constant(reg, v));
      m.set(j, i, Polynomial::constant(reg, -v));
    }
  return m;
}

}  // namespace oracles

#endif
