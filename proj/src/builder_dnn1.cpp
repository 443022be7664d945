#include "resforge/builder_dnn1.hpp"

#include "resforge/determinantal.hpp"

#include <stdexcept>

namespace resforge {

namespace {

std::shared_ptr<VariableRegistry> make_dnn1_registry(int n, bool with_x) {
  auto reg = std::make_shared<VariableRegistry>();
  if (with_x)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n - 1; ++j) reg->add_matrix_entry(i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) reg->add_defect_b(i, j);
  return reg;
}

void require_even_n(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("dnn1 builder: n must be even and >= 4, got n = " + std::to_string(n));
}

// u_i coefficient of Y_j P_{i^,j^}; antisymmetric extension of the printed
// (-1)^(i+j): required for d1*d2 = 0 in the Y-column.
int u_sign(int i, int j) {
  int s = ((i + j) % 2 == 0) ? 1 : -1;
  return j > i ? s : -s;
}

void attach_labels(ChainComplex& c) {
  auto r = c.format.ranks();
  for (int i = 1; i <= r[1]; ++i) c.d2.row_labels.push_back("e" + std::to_string(i));
  for (int h = 1; h <= r[2]; ++h) c.d2.col_labels.push_back("f" + std::to_string(h));
  for (int k = 1; k <= r[3]; ++k) c.d3.col_labels.push_back("g" + std::to_string(k));
}

}  // namespace

ChainComplex build_split_dnn1(int n) {
  require_even_n(n);
  ChainComplex c;
  c.format = {Family::Dnn1, Variant::Split, n};
  auto reg = make_dnn1_registry(n, false);
  c.registry = reg;
  const VariableRegistry* R = reg.get();
  DetCalc calc = DetCalc::dnn1(R, n, false);

  c.d1 = PolyMatrix(1, n, R);
  c.d2 = PolyMatrix(n, n, R);
  c.d3 = PolyMatrix(n, 1, R);

  for (int i = 1; i <= n - 1; ++i) {
    Polynomial p = calc.sub_pfaffian_remove({i, n});
    c.d1.set(0, i - 1, i % 2 == 1 ? p : -p);  // (-1)^(i+1) P_{i^,n^}
    c.d3.set(i - 1, 0, i % 2 == 1 ? -p : p);  // (-1)^i P_{i^,n^}
  }
  c.d1.set(0, n - 1, Polynomial::zero(R));
  c.d3.set(n - 1, 0, calc.full_pfaffian());

  for (int i = 1; i <= n - 1; ++i) {
    for (int h = 1; h <= n - 1; ++h)
      c.d2.set(i - 1, h - 1, -Polynomial::signed_variable(R, R->b_var(i, h)));
    c.d2.set(i - 1, n - 1, Polynomial::zero(R));
  }
  for (int h = 1; h <= n - 1; ++h) c.d2.set(n - 1, h - 1, Polynomial::signed_variable(R, R->b_var(h, n)));
  c.d2.set(n - 1, n - 1, Polynomial::constant(R, 1));

  c.metadata["builder"] = "dnn1-split";
  c.metadata["n"] = std::to_string(n);
  attach_labels(c);

  auto ok = compose_check_expanded(c);
  if (!ok.first || !ok.second) throw std::logic_error("build_split_dnn1: composition check failed");
  return c;
}

ChainComplex build_hb_dnn1(int n) {
  require_even_n(n);
  ChainComplex c;
  c.format = {Family::Dnn1, Variant::HilbertBurch, n};
  auto reg = make_dnn1_registry(n, true);
  c.registry = reg;
  const VariableRegistry* R = reg.get();
  DetCalc calc = DetCalc::dnn1(R, n, true);

  c.d1 = PolyMatrix(1, n, R);
  c.d2 = PolyMatrix(n, n, R);
  c.d3 = PolyMatrix(n, 1, R);

  // d1: u_i = sum_{j != i} (-1)^(i+j) sgn(j-i) Y_j P_{i^,j^}
  for (int i = 1; i <= n; ++i) {
    PolyAccumulator acc(R);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Polynomial& yj = calc.signed_maximal_minor(j);
      const Polynomial& pf = calc.sub_pfaffian_remove({std::min(i, j), std::max(i, j)});
      Rational s(u_sign(i, j));
      for (const Term& ty : yj.terms())
        for (const Term& tp : pf.terms()) acc.add_term(ty.mono * tp.mono, ty.coeff * tp.coeff * s);
    }
    c.d1.set(0, i - 1, acc.take());
  }

  // d2: entry(i,h) = -sum_j X(j,h) b(j,i) for h <= n-1, Y_i in column n
  for (int i = 1; i <= n; ++i) {
    for (int h = 1; h <= n - 1; ++h) {
      PolyAccumulator acc(R);
      for (int j = 1; j <= n; ++j) {
        SignedVar b = R->b_var(j, i);
        if (b.sign == 0) continue;
        acc.add_term(Monomial::variable(R->x_var(j, h)) * Monomial::variable(b.index), Rational(-b.sign));
      }
      c.d2.set(i - 1, h - 1, acc.take());
    }
    c.d2.set(i - 1, n - 1, calc.signed_maximal_minor(i));
  }

  // d3: v_k = (-1)^k sum_{i<j} X_{k^}^{i^,j^} P_{i^,j^}, last entry P
  for (int k = 1; k <= n - 1; ++k) {
    PolyAccumulator acc(R);
    Rational s(k % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Polynomial& mi = calc.complementary_minor(i, j, k);
        const Polynomial& pf = calc.sub_pfaffian_remove({i, j});
        for (const Term& tm : mi.terms())
          for (const Term& tp : pf.terms()) acc.add_term(tm.mono * tp.mono, tm.coeff * tp.coeff * s);
      }
    c.d3.set(k - 1, 0, acc.take());
  }
  c.d3.set(n - 1, 0, calc.full_pfaffian());

  c.metadata["builder"] = "dnn1-hb";
  c.metadata["n"] = std::to_string(n);
  c.metadata["sign.u"] = "(-1)^(i+j)*sgn(j-i)";
  c.metadata["sign.v3"] = "(-1)^k * sum_{i<j} X_{k^}^{i^,j^} P_{i^,j^}";
  attach_labels(c);

  auto fast = dnn1_detail::compose_witness(c);
  if (!fast || !fast->first || !fast->second)
    throw std::logic_error("build_hb_dnn1: composition check failed");
  return c;
}

namespace dnn1_detail {

std::optional<std::pair<bool, bool>> compose_witness(const ChainComplex& c) {
  if (c.format.family != Family::Dnn1 || c.format.variant != Variant::HilbertBurch) return std::nullopt;
  int n = c.format.param;
  const VariableRegistry* R = c.registry.get();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n - 1; ++j)
      if (!R->has(VarRole::MatrixEntry, i, j)) return std::nullopt;
    for (int j = i + 1; j <= n; ++j)
      if (!R->has(VarRole::DefectB, i, j)) return std::nullopt;
  }

  DetCalc calc = DetCalc::dnn1(R, n, true);

  // 1. the stored matrices must agree with their factored reconstruction
  for (int i = 1; i <= n; ++i) {
    PolyAccumulator acc(R);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Rational s(u_sign(i, j));
      const Polynomial& yj = calc.signed_maximal_minor(j);
      const Polynomial& pf = calc.sub_pfaffian_remove({std::min(i, j), std::max(i, j)});
      for (const Term& ty : yj.terms())
        for (const Term& tp : pf.terms()) acc.add_term(ty.mono * tp.mono, ty.coeff * tp.coeff * s);
    }
    if (acc.take() != c.d1.at(0, i - 1)) return std::nullopt;
  }
  for (int i = 1; i <= n; ++i) {
    for (int h = 1; h <= n - 1; ++h) {
      PolyAccumulator acc(R);
      for (int j = 1; j <= n; ++j) {
        SignedVar b = R->b_var(j, i);
        if (b.sign == 0) continue;
        acc.add_term(Monomial::variable(R->x_var(j, h)) * Monomial::variable(b.index), Rational(-b.sign));
      }
      if (acc.take() != c.d2.at(i - 1, h - 1)) return std::nullopt;
    }
    if (calc.signed_maximal_minor(i) != c.d2.at(i - 1, n - 1)) return std::nullopt;
  }
  for (int k = 1; k <= n - 1; ++k) {
    PolyAccumulator acc(R);
    Rational s(k % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Polynomial& mi = calc.complementary_minor(i, j, k);
        const Polynomial& pf = calc.sub_pfaffian_remove({i, j});
        for (const Term& tm : mi.terms())
          for (const Term& tp : pf.terms()) acc.add_term(tm.mono * tp.mono, tm.coeff * tp.coeff * s);
      }
    if (acc.take() != c.d3.at(k - 1, 0)) return std::nullopt;
  }
  if (calc.full_pfaffian() != c.d3.at(n - 1, 0)) return std::nullopt;

  // 2. d1*d2, Y-column: sum_i u_i Y_i. In factored form this is
  //    sum_{i != j} e(i,j) (Y_i Y_j) P_{i^,j^}; commutativity groups the
  //    ordered pairs and the antisymmetric coefficients cancel exactly.
  bool d1d2 = true;
  for (int i = 1; i <= n && d1d2; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u_sign(i, j) + u_sign(j, i) != 0) {
        d1d2 = false;
        break;
      }

  // 3. d1*d2, X-columns: -sum_j S_j X(j,h) with S_j = sum_i u_i b(j,i).
  std::vector<Polynomial> S(n + 1, Polynomial(R));
  for (int j = 1; j <= n && d1d2; ++j) {
    PolyAccumulator acc(R);
    for (int i = 1; i <= n; ++i) {
      SignedVar b = R->b_var(j, i);
      if (b.sign == 0) continue;
      acc.add_scaled(Monomial::variable(b.index), Rational(b.sign), c.d1.at(0, i - 1));
    }
    S[j] = acc.take();
  }
  for (int h = 1; h <= n - 1 && d1d2; ++h) {
    PolyAccumulator acc(R);
    for (int j = 1; j <= n; ++j) acc.add_scaled(Monomial::variable(R->x_var(j, h)), Rational(-1), S[j]);
    if (!acc.take().is_zero()) d1d2 = false;
  }

  // 4. d2*d3 row i: -sum_j b(j,i) T_j + Y_i P with T_j = sum_h X(j,h) v_h.
  bool d2d3 = true;
  std::vector<Polynomial> T(n + 1, Polynomial(R));
  for (int j = 1; j <= n; ++j) {
    PolyAccumulator acc(R);
    for (int h = 1; h <= n - 1; ++h)
      acc.add_scaled(Monomial::variable(R->x_var(j, h)), Rational(1), c.d3.at(h - 1, 0));
    T[j] = acc.take();
  }
  const Polynomial& P = calc.full_pfaffian();
  for (int i = 1; i <= n && d2d3; ++i) {
    PolyAccumulator acc(R);
    for (int j = 1; j <= n; ++j) {
      SignedVar b = R->b_var(j, i);
      if (b.sign == 0) continue;
      acc.add_scaled(Monomial::variable(b.index), Rational(-b.sign), T[j]);
    }
    const Polynomial& yi = calc.signed_maximal_minor(i);
    for (const Term& ty : yi.terms())
      for (const Term& tp : P.terms()) acc.add_term(ty.mono * tp.mono, ty.coeff * tp.coeff);
    if (!acc.take().is_zero()) d2d3 = false;
  }

  return std::make_pair(d1d2, d2d3);
}

}  // namespace dnn1_detail

}  // namespace resforge
