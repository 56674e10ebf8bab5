#pragma once

#include "hkrees/exact.hpp"
#include "hkrees/monomial.hpp"

#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hkrees {

/// The hypersurface relation X_u^a - X_v^a. Monomials are ordered lex with
/// X_u > X_v > the remaining variables in index order, so X_u^a leads.
struct BinomialRelation {
  std::size_t ambient_dim = 2;
  std::size_t index_u = 0;
  std::size_t index_v = 1;
  int a = 2;

  BinomialRelation() = default;
  BinomialRelation(std::size_t dim, std::size_t u, std::size_t v, int exponent)
      : ambient_dim(dim), index_u(u), index_v(v), a(exponent) {
    if (!(u < v && v < dim)) throw std::invalid_argument("BinomialRelation: need index_u < index_v < ambient_dim");
    if (a < 2) throw std::invalid_argument("BinomialRelation: exponent must be >= 2");
  }

  Monomial lead() const { return Monomial::pure_power(ambient_dim, index_u, a); }
  Monomial tail() const { return Monomial::pure_power(ambient_dim, index_v, a); }

  /// Variable indices from most to least significant.
  std::vector<std::size_t> variable_order() const {
    std::vector<std::size_t> order{index_u, index_v};
    for (std::size_t i = 0; i < ambient_dim; ++i)
      if (i != index_u && i != index_v) order.push_back(i);
    return order;
  }
};

/// Lex comparison in the relation's variable order.
class LexOrder {
 public:
  explicit LexOrder(const BinomialRelation& rel) : order_(rel.variable_order()) {}
  bool operator()(const Monomial& x, const Monomial& y) const {
    for (std::size_t i : order_)
      if (x[i] != y[i]) return x[i] < y[i];
    return false;
  }

 private:
  std::vector<std::size_t> order_;
};

/// Groebner basis of (X_u^a - X_v^a) + (monomials). Leading terms are
/// X_u^a and the monomials themselves.
struct GroebnerBasisBM {
  BinomialRelation relation;
  std::vector<Monomial> monomials;
  bool complete = false;
};

/// Which reduction to try first when both the binomial and a monomial apply.
enum class ReductionPreference { monomials_first, binomial_first };

/// Normal form of a monomial modulo the binomial and `monomials`; nullopt
/// stands for zero. Binomial steps replace X_u^a by X_v^a, so the X_u-degree
/// drops each time and the loop terminates.
inline std::optional<Monomial> reduce_monomial(const BinomialRelation& rel, const std::vector<Monomial>& monomials,
                                               Monomial t,
                                               ReductionPreference pref = ReductionPreference::monomials_first) {
  const Monomial lead = rel.lead();
  const Monomial tail = rel.tail();
  auto in_monomials = [&](const Monomial& m) {
    for (const auto& g : monomials)
      if (g.divides(m)) return true;
    return false;
  };
  for (;;) {
    const bool binomial_applies = lead.divides(t);
    if (pref == ReductionPreference::monomials_first || !binomial_applies) {
      if (in_monomials(t)) return std::nullopt;
    }
    if (!binomial_applies) return t;
    t = (t / lead) * tail;
  }
}

namespace detail {

/// Sparse polynomial with integer coefficients, only used to run the general
/// division algorithm when checking that a basis is complete.
class SparsePoly {
 public:
  explicit SparsePoly(const LexOrder& order) : terms_(order) {}

  void add(const Monomial& m, long long c) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
    else if (std::llabs(it->second) != 1)
      throw std::logic_error("binomial Groebner: non-unit coefficient " + std::to_string(it->second) +
                             " at " + m.to_string());
  }

  bool is_zero() const { return terms_.empty(); }
  std::pair<Monomial, long long> leading() const { return *terms_.rbegin(); }

  void add_multiple(const SparsePoly& g, const Monomial& shift, long long c) {
    for (const auto& [m, k] : g.terms_) add(m * shift, c * k);
  }

 private:
  std::map<Monomial, long long, LexOrder> terms_;
};

}  // namespace detail

/// Runs the general division algorithm on every S-pair of the basis
/// (binomial-monomial, and monomial-monomial if requested) and reports whether
/// all of them reduce to zero.
inline bool verify_complete(const BinomialRelation& rel, const std::vector<Monomial>& monomials,
                            bool include_monomial_pairs = true) {
  const LexOrder order(rel);
  std::vector<detail::SparsePoly> basis;
  std::vector<Monomial> leads;
  {
    detail::SparsePoly b(order);
    b.add(rel.lead(), 1);
    b.add(rel.tail(), -1);
    basis.push_back(b);
    leads.push_back(rel.lead());
  }
  for (const auto& m : monomials) {
    detail::SparsePoly p(order);
    p.add(m, 1);
    basis.push_back(p);
    leads.push_back(m);
  }

  auto reduces_to_zero = [&](detail::SparsePoly p) {
    detail::SparsePoly remainder(order);
    while (!p.is_zero()) {
      auto [lt, lc] = p.leading();
      bool divided = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!leads[k].divides(lt)) continue;
        p.add_multiple(basis[k], lt / leads[k], -lc);
        divided = true;
        break;
      }
      if (!divided) {
        remainder.add(lt, lc);
        p.add(lt, -lc);
      }
    }
    return remainder.is_zero();
  };

  auto spoly = [&](std::size_t i, std::size_t j) {
    const Monomial l = lcm(leads[i], leads[j]);
    detail::SparsePoly s(order);
    s.add_multiple(basis[i], l / leads[i], 1);
    s.add_multiple(basis[j], l / leads[j], -1);
    return s;
  };

  for (std::size_t j = 1; j < basis.size(); ++j)
    if (!reduces_to_zero(spoly(0, j))) return false;
  if (include_monomial_pairs)
    for (std::size_t i = 1; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!reduces_to_zero(spoly(i, j))) return false;
  return true;
}

/// Buchberger completion specialised to one binomial plus monomials. The
/// S-pair of X_u^a - X_v^a with a monomial m is the monomial
/// (lcm(X_u^a, m) / X_u^a) * X_v^a; its normal form, when nonzero, joins the
/// basis. Monomial-monomial pairs are zero and are skipped here; the final
/// completeness check runs the general division algorithm on the
/// binomial-monomial pairs.
inline GroebnerBasisBM buchberger(const BinomialRelation& rel, const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty monomial generator set");
  for (const auto& g : gens)
    if (g.dim() != rel.ambient_dim) throw std::invalid_argument("buchberger: generator dimension mismatch");

  GroebnerBasisBM gb{rel, MonomialIdeal::minimalize(gens), false};
  const Monomial lead = rel.lead();
  const Monomial tail = rel.tail();
  for (;;) {
    std::vector<Monomial> fresh;
    for (const auto& m : gb.monomials) {
      const Monomial s = (lcm(lead, m) / lead) * tail;
      if (auto h = reduce_monomial(rel, gb.monomials, s)) fresh.push_back(*h);
    }
    if (fresh.empty()) break;
    fresh.insert(fresh.end(), gb.monomials.begin(), gb.monomials.end());
    gb.monomials = MonomialIdeal::minimalize(std::move(fresh));
  }
  if (!verify_complete(rel, gb.monomials, false))
    throw std::logic_error("buchberger: completed basis failed the S-pair check");
  gb.complete = true;
  return gb;
}

/// in_>(binomial + monomials) = (X_u^a) + (monomials), minimalized.
inline MonomialIdeal initial_ideal(const GroebnerBasisBM& gb) {
  if (!gb.complete) throw std::invalid_argument("initial_ideal: basis is not complete");
  std::vector<Monomial> g(gb.monomials);
  g.push_back(gb.relation.lead());
  return MonomialIdeal(gb.relation.ambient_dim, std::move(g));
}

/// length(k[x] / (X_u^a - X_v^a, gens)) via the staircase of the initial ideal.
inline ExactInt quotient_colength(const BinomialRelation& rel, const std::vector<Monomial>& gens) {
  return initial_ideal(buchberger(rel, gens)).colength();
}

inline ExactInt quotient_colength(const BinomialRelation& rel, const MonomialIdeal& ideal) {
  return quotient_colength(rel, ideal.generators());
}

}  // namespace hkrees
