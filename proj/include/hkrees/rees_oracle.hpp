#pragma once

#include "hkrees/binomial_groebner.hpp"
#include "hkrees/errors.hpp"
#include "hkrees/exact.hpp"
#include "hkrees/fitting.hpp"
#include "hkrees/monomial.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkrees {

/// I = (x_1^{a_1}, ..., x_d^{a_d}) in k[x_1..x_d].
struct ReesInstanceMonomial {
  std::vector<int> exponents;

  explicit ReesInstanceMonomial(std::vector<int> exps) : exponents(std::move(exps)) {
    if (exponents.size() < 2) throw std::invalid_argument("ReesInstanceMonomial: need d >= 2");
    for (int a : exponents)
      if (a < 1) throw std::invalid_argument("ReesInstanceMonomial: exponents must be >= 1");
  }

  int d() const { return static_cast<int>(exponents.size()); }
  ExactInt e0() const {
    ExactInt e = 1;
    for (int a : exponents) e *= a;
    return e;
  }
};

/// One graded piece length(I^n / (I,It)^[s]_n) per degree n, plus the degree T
/// at which I^[s] I^{T-s} = I^T was first observed.
struct GradedOracleSum {
  ExactInt total;
  std::vector<ExactInt> pieces;
  int stabilized_at = 0;
};

/// length(R(I) / (I,It)^[s]) by summing graded pieces:
///   n < s:   colength(I^[s] I^n)     - colength(I^n)
///   n >= s:  colength(I^[s] I^{n-s}) - colength(I^n)
/// up to the first n >= s where the two ideals coincide. The piece after that
/// is recomputed and must also vanish.
inline GradedOracleSum rees_graded_pieces_monomial(const ReesInstanceMonomial& inst, int s) {
  if (s < 1) throw std::invalid_argument("rees_colength_monomial: s must be >= 1");
  const MonomialIdeal ideal = MonomialIdeal::parameter(inst.exponents);
  const MonomialIdeal bracket = ideal.frobenius(s);

  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(ideal.ambient_dim())};
  std::vector<ExactInt> power_len{0};
  auto power = [&](int n) -> const MonomialIdeal& {
    while (static_cast<int>(powers.size()) <= n) {
      powers.push_back(powers.back() * ideal);
      power_len.push_back(powers.back().colength());
    }
    return powers[static_cast<std::size_t>(n)];
  };
  std::vector<MonomialIdeal> shifted;  // I^[s] I^k
  std::vector<ExactInt> shifted_len;
  auto bracket_times = [&](int k) -> const MonomialIdeal& {
    while (static_cast<int>(shifted.size()) <= k) {
      shifted.push_back(bracket * power(static_cast<int>(shifted.size())));
      shifted_len.push_back(shifted.back().colength());
    }
    return shifted[static_cast<std::size_t>(k)];
  };

  GradedOracleSum out;
  for (int n = 0; n < s; ++n) {
    bracket_times(n);
    power(n);
    out.pieces.push_back(shifted_len[n] - power_len[n]);
    out.total += out.pieces.back();
  }
  const int limit = (inst.d() + 1) * s;
  for (int n = s;; ++n) {
    if (n > limit)
      throw StabilizationFailure("rees_colength_monomial: I^[s] I^{n-s} != I^n up to n = " + std::to_string(limit));
    const bool equal = bracket_times(n - s) == power(n);
    out.pieces.push_back(shifted_len[n - s] - power_len[n]);
    out.total += out.pieces.back();
    if (equal) {
      out.stabilized_at = n;
      bracket_times(n + 1 - s);
      power(n + 1);
      if (shifted_len[n + 1 - s] != power_len[n + 1])
        throw StabilizationFailure("rees_colength_monomial: graded piece after stabilization is nonzero");
      break;
    }
  }
  return out;
}

inline ExactInt rees_colength_monomial(const ReesInstanceMonomial& inst, int s) {
  return rees_graded_pieces_monomial(inst, s).total;
}

// ---------------------------------------------------------------------------
// Dimension one: R = k[[X,Y]]/(X^a - Y^a)
// ---------------------------------------------------------------------------

enum class IdealSelector { maximal, principal_x };
enum class ReesSelector { rees_of_m, rees_of_x };

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

struct ReesInstanceDim1 {
  int a = 2;
  IdealSelector ideal = IdealSelector::maximal;
  ReesSelector rees = ReesSelector::rees_of_m;
  int p = 2;

  ReesInstanceDim1(int exponent, IdealSelector j, ReesSelector rs, int prime) : a(exponent), ideal(j), rees(rs), p(prime) {
    if (a < 2) throw std::invalid_argument("ReesInstanceDim1: a must be >= 2");
    if (!is_prime(p)) throw std::invalid_argument("ReesInstanceDim1: p = " + std::to_string(p) + " is not prime");
  }
};

/// Lengths of quotients of k[X,Y]/(X^a - Y^a) by monomial ideals, with the
/// Groebner data cached per ideal.
class HypersurfaceLengths {
 public:
  explicit HypersurfaceLengths(int a) : rel_(2, 0, 1, a) {}

  const BinomialRelation& relation() const { return rel_; }

  /// in_>((X^a - Y^a) + J); comparing these decides equality of ideals in R.
  MonomialIdeal normalized(const MonomialIdeal& j) const {
    if (j.is_unit()) return j;
    return initial_ideal(buchberger(rel_, j.generators()));
  }

  ExactInt length(const MonomialIdeal& j) const {
    if (j.is_unit()) return 0;
    return normalized(j).colength();
  }

 private:
  BinomialRelation rel_;
};

namespace detail {

struct MaximalIdealPowers {
  explicit MaximalIdealPowers(const HypersurfaceLengths& hl) : lengths(hl) {}

  const MonomialIdeal& power(int n) {
    while (static_cast<int>(powers.size()) <= n) powers.push_back(powers.back() * maximal);
    return powers[static_cast<std::size_t>(n)];
  }
  const ExactInt& length(int n) {
    auto it = power_len.find(n);
    if (it == power_len.end()) it = power_len.emplace(n, lengths.length(power(n))).first;
    return it->second;
  }

  const HypersurfaceLengths& lengths;
  MonomialIdeal maximal = MonomialIdeal::variables(2);
  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(2)};
  std::map<int, ExactInt> power_len;
};

}  // namespace detail

/// length(R(m) / (m,mt)^[q]) via the graded decomposition
///   sum_{n<q} [len(m^[q] m^n) - len(m^n)] + sum_{t<r} [len(m^[q] m^t) - len(m^{q+t})]
/// where r is the first t with m^[q] m^t = m^{q+t} in R, found by comparing
/// normalized ideals. Stabilization must happen by t = 2a.
inline ExactInt rees_of_m_colength(int a, const ExactInt& q_big) {
  const int q = static_cast<int>(q_big);
  HypersurfaceLengths hl(a);
  detail::MaximalIdealPowers mp(hl);
  const MonomialIdeal bracket = mp.maximal.frobenius(q);

  std::vector<ExactInt> bracket_len;  // len(m^[q] m^n)
  auto bracket_length = [&](int n) -> const ExactInt& {
    while (static_cast<int>(bracket_len.size()) <= n)
      bracket_len.push_back(hl.length(bracket * mp.power(static_cast<int>(bracket_len.size()))));
    return bracket_len[static_cast<std::size_t>(n)];
  };

  ExactInt total = 0;
  for (int n = 0; n < q; ++n) total += bracket_length(n) - mp.length(n);

  for (int t = 0;; ++t) {
    if (t > 2 * a)
      throw StabilizationFailure("rees_of_m oracle: m^[q] m^t != m^{q+t} for all t <= 2a (q = " +
                                 std::to_string(q) + ")");
    const MonomialIdeal lhs = hl.normalized(bracket * mp.power(t));
    const MonomialIdeal rhs = hl.normalized(mp.power(q + t));
    if (lhs == rhs) break;
    total += bracket_length(t) - mp.length(q + t);
  }
  return total;
}

/// length(R(x) / (m, xt)^[q]) where R(x) = k[X,Y,Z]/(X^a - Y^a), i.e. the
/// colength of (X^a - Y^a, X^q, Y^q, Z^q).
inline ExactInt rees_of_x_colength(int a, const ExactInt& q_big) {
  const int q = static_cast<int>(q_big);
  const BinomialRelation rel(3, 0, 1, a);
  return quotient_colength(rel, {Monomial{q, 0, 0}, Monomial{0, q, 0}, Monomial{0, 0, q}});
}

inline ExactInt rees_colength_dim1(const ReesInstanceDim1& inst, int e) {
  if (e < 0) throw std::invalid_argument("rees_colength_dim1: e must be >= 0");
  if (inst.ideal != IdealSelector::maximal)
    throw std::invalid_argument("rees_colength_dim1: only J = maximal ideal is supported");
  const ExactInt q = ipow(ExactInt(inst.p), static_cast<unsigned>(e));
  if (inst.rees == ReesSelector::rees_of_x) return rees_of_x_colength(inst.a, q);
  return rees_of_m_colength(inst.a, q);
}

/// alpha(n, e) = length(m^n / m^[q] m^n) - a*q for n = 0..n_max, one row per n.
struct AlphaTable {
  int a = 0;
  int p = 0;
  std::vector<int> es;
  std::vector<std::vector<ExactInt>> rows;

  const ExactInt& at(int n, int e) const {
    for (std::size_t k = 0; k < es.size(); ++k)
      if (es[k] == e) return rows.at(static_cast<std::size_t>(n)).at(k);
    throw std::out_of_range("AlphaTable: e not sampled");
  }
};

inline AlphaTable alpha_table(int a, int p, int n_max, const std::vector<int>& e_range) {
  if (e_range.empty()) throw std::invalid_argument("alpha_table: empty e range");
  if (n_max < 0) throw std::invalid_argument("alpha_table: n_max must be >= 0");
  if (!is_prime(p)) throw std::invalid_argument("alpha_table: p is not prime");
  HypersurfaceLengths hl(a);
  detail::MaximalIdealPowers mp(hl);
  AlphaTable t{a, p, e_range, std::vector<std::vector<ExactInt>>(static_cast<std::size_t>(n_max) + 1)};
  for (int e : e_range) {
    const ExactInt q = ipow(ExactInt(p), static_cast<unsigned>(e));
    const MonomialIdeal bracket = mp.maximal.frobenius(static_cast<int>(q));
    for (int n = 0; n <= n_max; ++n)
      t.rows[static_cast<std::size_t>(n)].push_back(hl.length(bracket * mp.power(n)) - mp.length(n) -
                                                    ExactInt(a) * q);
  }
  return t;
}

}  // namespace hkrees
