#include "resforge/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace resforge {

namespace {

using Clock = std::chrono::steady_clock;

// Terms sorted leading-first under the working order.
struct OrderedPoly {
  std::vector<Term> terms;
  std::uint32_t sugar = 0;

  const Term& lt() const { return terms.front(); }
  bool zero() const { return terms.empty(); }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OrderedPoly q;
  q.terms = p.terms();
  std::sort(q.terms.begin(), q.terms.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  q.sugar = p.total_degree();
  return q;
}

Polynomial to_polynomial(const OrderedPoly& q, const VariableRegistry* reg) {
  return Polynomial::from_terms(reg, q.terms);
}

// canonical resort after arithmetic on the flat term list
void normalize(OrderedPoly& q, const MonomialOrder& ord) {
  std::sort(q.terms.begin(), q.terms.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(q.terms.size());
  for (Term& t : q.terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  q.terms = std::move(out);
}

// q -= c * m * g
void submul(OrderedPoly& q, const Rational& c, const Monomial& m, const OrderedPoly& g) {
  for (const Term& t : g.terms) {
    Rational nc = t.coeff * c;
    nc.negate();
    q.terms.push_back({t.mono * m, std::move(nc)});
  }
}

/// Full division remainder; also tracks sugar.
OrderedPoly reduce_full(OrderedPoly p, const std::vector<OrderedPoly>& basis, const MonomialOrder& ord) {
  std::vector<Term> remainder;
  std::uint32_t sugar = p.sugar;
  normalize(p, ord);
  while (!p.terms.empty()) {
    const Term lead = p.terms.front();
    bool divided = false;
    for (const OrderedPoly& g : basis) {
      if (g.zero()) continue;
      if (g.lt().mono.divides(lead.mono)) {
        Monomial q = lead.mono.divide(g.lt().mono);
        Rational c = lead.coeff / g.lt().coeff;
        submul(p, c, q, g);
        sugar = std::max(sugar, q.degree() + g.sugar);
        normalize(p, ord);
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  OrderedPoly r;
  r.terms = std::move(remainder);
  r.sugar = sugar;
  return r;
}

OrderedPoly s_poly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.lt().mono, g.lt().mono);
  Monomial mf = l.divide(f.lt().mono), mg = l.divide(g.lt().mono);
  OrderedPoly s;
  for (const Term& t : f.terms) s.terms.push_back({t.mono * mf, t.coeff / f.lt().coeff});
  for (const Term& t : g.terms) s.terms.push_back({t.mono * mg, -(t.coeff / g.lt().coeff)});
  s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
  normalize(s, ord);
  return s;
}

struct Pair {
  std::uint32_t sugar;
  std::uint32_t lcm_deg;
  std::size_t i, j;
  Monomial lcm;
  bool operator<(const Pair& o) const {
    if (sugar != o.sugar) return sugar < o.sugar;
    if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, const GroebnerBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const VariableRegistry* reg = nullptr;
  for (const Polynomial& g : gens) {
    if (g.registry()) {
      if (reg && g.registry() != reg) throw std::invalid_argument("buchberger: mixed registries");
      reg = g.registry();
    }
  }

  GroebnerBasis out;
  out.order = order;

  std::vector<OrderedPoly> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(to_ordered(g, order));
  if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

  auto deadline = Clock::now() + std::chrono::milliseconds(budget.wall_ms);
  auto capped = [&](const std::string& why) {
    out.status = GbStatus::Capped;
    out.cap_reason = why;
    out.reduced = false;
    out.gens.clear();
    for (const OrderedPoly& g : basis) out.gens.push_back(to_polynomial(g, reg));
    return out;
  };

  std::set<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].zero()) continue;
      Monomial l = Monomial::lcm(basis[i].lt().mono, basis[j].lt().mono);
      std::uint32_t sug = std::max(basis[i].sugar + l.degree() - basis[i].lt().mono.degree(),
                                   basis[j].sugar + l.degree() - basis[j].lt().mono.degree());
      pairs.insert({sug, l.degree(), i, j, l});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (Clock::now() > deadline) return capped("wall time exceeded");
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > budget.max_pairs) return capped("pair cap exceeded");
    if (p.lcm_deg > budget.max_degree) return capped("degree cap exceeded");

    const Monomial& lti = basis[p.i].lt().mono;
    const Monomial& ltj = basis[p.j].lt().mono;

    // Buchberger's first (coprimality) criterion
    if (Monomial::coprime(lti, ltj)) {
      done.insert({p.i, p.j});
      continue;
    }
    // chain criterion: some k with LT_k | lcm and both chained pairs done
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == p.i || k == p.j || basis[k].zero()) continue;
      if (!basis[k].lt().mono.divides(p.lcm)) continue;
      auto key1 = std::minmax(p.i, k), key2 = std::minmax(p.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) chained = true;
    }
    if (chained) {
      done.insert({p.i, p.j});
      continue;
    }

    OrderedPoly s = s_poly(basis[p.i], basis[p.j], order);
    OrderedPoly r = reduce_full(std::move(s), basis, order);
    done.insert({p.i, p.j});
    if (!r.zero()) {
      basis.push_back(std::move(r));
      if (basis.size() > budget.max_basis) return capped("basis cap exceeded");
      push_pairs_for(basis.size() - 1);
    }
  }

  // minimalize: drop generators whose leading term is divisible by another's
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].lt().mono.divides(basis[i].lt().mono)) {
        if (basis[i].lt().mono == basis[j].lt().mono)
          redundant = j < i;  // keep the first of equal leading terms
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce tails and make monic
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    OrderedPoly others_removed = minimal[i];
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OrderedPoly red = others.empty() ? others_removed : reduce_full(others_removed, others, order);
    Rational lc = red.lt().coeff;
    for (Term& t : red.terms) t.coeff /= lc;
    minimal[i] = std::move(red);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.cmp(a.lt().mono, b.lt().mono) < 0; });

  out.gens.clear();
  for (const OrderedPoly& g : minimal) out.gens.push_back(to_polynomial(g, reg));
  out.reduced = true;
  out.status = GbStatus::Complete;

  // post-verification: every S-polynomial of the result reduces to zero
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      OrderedPoly s = s_poly(minimal[i], minimal[j], order);
      if (!reduce_full(std::move(s), minimal, order).zero())
        throw std::logic_error("buchberger: post-verification failed (S-polynomial does not reduce to zero)");
    }
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.is_zero()) return p;
  std::vector<OrderedPoly> basis;
  for (const Polynomial& g : gb.gens)
    if (!g.is_zero()) basis.push_back(to_ordered(g, gb.order));
  OrderedPoly r = reduce_full(to_ordered(p, gb.order), basis, gb.order);
  return to_polynomial(r, p.registry());
}

namespace {

// exact minimum hitting set by branch and bound
void hit_search(const std::vector<std::vector<int>>& supports, std::set<int>& chosen, std::size_t next,
                std::size_t& best) {
  if (chosen.size() >= best) return;
  // find first uncovered support
  const std::vector<int>* uncovered = nullptr;
  for (std::size_t s = next; s < supports.size(); ++s) {
    bool hit = false;
    for (int v : supports[s])
      if (chosen.count(v)) {
        hit = true;
        break;
      }
    if (!hit) {
      uncovered = &supports[s];
      break;
    }
  }
  if (!uncovered) {
    best = chosen.size();
    return;
  }
  for (int v : *uncovered) {
    chosen.insert(v);
    hit_search(supports, chosen, next, best);
    chosen.erase(v);
  }
}

}  // namespace

int ideal_codim(const GroebnerBasis& gb) {
  if (gb.status != GbStatus::Complete)
    throw std::invalid_argument("ideal_codim: needs a completed Groebner basis");
  std::vector<std::vector<int>> supports;
  for (const Polynomial& g : gb.gens) {
    if (g.is_zero()) continue;
    // leading term under the basis order
    const Term* lead = &g.terms().front();
    for (const Term& t : g.terms())
      if (gb.order.cmp(t.mono, lead->mono) > 0) lead = &t;
    if (lead->mono.is_one()) return kInfiniteCodim;  // unit ideal
    std::vector<int> sup;
    for (std::size_t p = 0; p < lead->mono.num_vars(); ++p) sup.push_back(lead->mono.var_at(p));
    supports.push_back(std::move(sup));
  }
  if (supports.empty()) return 0;
  // drop supersets: they are hit whenever the subset is
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<int>> minimal;
  for (const auto& s : supports) {
    bool has_subset = false;
    for (const auto& t : minimal) {
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(s);
  }
  std::size_t best = 0;
  for (const auto& s : minimal) best += s.empty() ? 0 : 1;  // cheap upper bound: one var per support
  best = std::max<std::size_t>(best, 1);
  std::set<int> chosen;
  hit_search(minimal, chosen, 0, best);
  return static_cast<int>(best);
}

}  // namespace resforge
