#pragma once

#include "hkrees/combinatorics.hpp"
#include "hkrees/exact.hpp"
#include "hkrees/hilbert_samuel.hpp"
#include "hkrees/polynomial.hpp"
#include "hkrees/quasi_polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkrees {

// ---------------------------------------------------------------------------
// Dimension one
// ---------------------------------------------------------------------------

/// Invariants of an m-primary ideal I of a one-dimensional local ring that
/// determine length(R(I) / (I,It)^[q]) for large q.
///
/// `lengths[n]` is length(R/I^n) for n = 0 .. max(r-1, rho); `alpha[n]` is the
/// periodic correction alpha_I(I^n, e) = length(I^n / I^[q] I^n) - e0*q for
/// n = 0 .. r-1. `rho` may be left empty for Cohen-Macaulay rings, where it
/// equals r - 1.
struct Dim1Input {
  ExactInt e0 = 1;
  ExactInt e1 = 0;
  int r = 0;
  std::optional<int> rho;
  std::vector<ExactInt> lengths;
  std::vector<PeriodicSequence> alpha;
  int p = 2;
};

namespace detail {

inline void validate_dim1(const Dim1Input& in, int rho) {
  if (in.r < 0) throw std::invalid_argument("dim1_hk: reduction number must be >= 0");
  if (in.e0 < 1) throw std::invalid_argument("dim1_hk: e0 must be >= 1");
  const int needed = std::max(in.r - 1, rho) + 1;
  if (static_cast<int>(in.lengths.size()) < needed)
    throw std::invalid_argument("dim1_hk: need length(R/I^n) for n = 0.." + std::to_string(needed - 1));
  if (!in.lengths.empty() && in.lengths[0] != 0) throw std::invalid_argument("dim1_hk: length(R/I^0) must be 0");
  for (std::size_t n = 1; n < in.lengths.size(); ++n)
    if (in.lengths[n] < in.lengths[n - 1]) throw std::invalid_argument("dim1_hk: lengths must be nondecreasing");
  if (static_cast<int>(in.alpha.size()) != in.r)
    throw std::invalid_argument("dim1_hk: expected one alpha sequence per n < r");
}

}  // namespace detail

/// Quasi-polynomial in q = p^e for length(R(I) / (I,It)^[q]), large e.
///   rho + 1 <= r:  e0 q^2 - e0 C(r,2) + r e1 + sum_{n<r} l_n + 2 sum_{n<r} alpha_n(e)
///   r < rho + 1:   e0 q^2 - e0 (r(r-1) - rho(rho+1)/2) + (2r-rho-1) e1 + beta + 2 sum alpha_n(e)
/// with beta = sum_{n<r} l_n - sum_{n=r}^{rho} l_n. The period is the lcm of the
/// alpha periods; no smaller period is searched for.
inline QuasiPolynomialHK dim1_hk(const Dim1Input& in) {
  const int rho = in.rho.value_or(in.r - 1);
  detail::validate_dim1(in, rho);
  const int r = in.r;

  ExactInt period = 1;
  for (const auto& a : in.alpha) period = lcm(period, ExactInt(a.period()));
  const int n_period = static_cast<int>(period);

  ExactInt below_r = 0;
  for (int n = 0; n < r; ++n) below_r += in.lengths[n];

  ExactRat constant;
  if (rho + 1 <= r) {
    constant = ExactRat(-in.e0 * binomial(r, 2) + in.e1 * r + below_r);
  } else {
    ExactInt r_to_rho = 0;
    for (int n = r; n <= rho; ++n) r_to_rho += in.lengths[n];
    const ExactInt beta = below_r - r_to_rho;
    const ExactInt shift = ExactInt(r) * (r - 1) - ExactInt(rho) * (rho + 1) / 2;
    constant = ExactRat(-in.e0 * shift + ExactInt(2 * r - rho - 1) * in.e1 + beta);
  }

  std::vector<RatPoly> polys;
  for (int c = 0; c < n_period; ++c) {
    ExactInt alpha_sum = 0;
    for (const auto& a : in.alpha) alpha_sum += a.at(c);
    polys.push_back(RatPoly{constant + ExactRat(2 * alpha_sum), ExactRat(0), ExactRat(in.e0)});
  }
  return QuasiPolynomialHK(std::move(polys), in.p);
}

/// Cohen-Macaulay case: the postulation number is r - 1.
inline QuasiPolynomialHK cordim1_hk(Dim1Input in) {
  in.rho = in.r - 1;
  return dim1_hk(in);
}

/// length(R(I) / (J,It)^[q]) = e0(J) q^2 + alpha_J(e) q for a principal
/// parameter ideal I.
inline QuasiPolynomialHK sop_dim1_hk(const ExactInt& e0J, const PeriodicSequence& alphaJ, int p) {
  std::vector<RatPoly> polys;
  for (int c = 0; c < alphaJ.period(); ++c) polys.push_back(RatPoly{ExactRat(0), ExactRat(alphaJ.at(c)), ExactRat(e0J)});
  return QuasiPolynomialHK(std::move(polys), p);
}

/// e_HK((J,It)R(I)) = e0(J) in dimension one.
inline ExactInt ehk_rees_dim1(const ExactInt& e0J) {
  if (e0J < 1) throw std::invalid_argument("ehk_rees_dim1: e0 must be >= 1");
  return e0J;
}

// ---------------------------------------------------------------------------
// Parameter ideals in Cohen-Macaulay rings of dimension d >= 2
// ---------------------------------------------------------------------------

/// s -> length(R(I) / (I,It)^[s]) for a parameter ideal I. For s < d write
/// d = k1*s + k2 with 0 <= k2 < s; the branch depends on whether k2 vanishes.
/// For s >= d the function is a polynomial in s.
class PiecewiseHKFormula {
 public:
  enum class Branch { below_d_exact, below_d_remainder, at_least_d };

  PiecewiseHKFormula(int d, ExactInt e0) : d_(d), e0_(std::move(e0)) {
    if (d_ < 2) throw std::invalid_argument("PiecewiseHKFormula: d must be >= 2");
    if (e0_ < 1) throw std::invalid_argument("PiecewiseHKFormula: e0 must be >= 1");
  }

  int d() const { return d_; }
  const ExactInt& e0() const { return e0_; }

  Branch branch(std::int64_t s) const {
    if (s < 1) throw std::invalid_argument("PiecewiseHKFormula: s must be >= 1");
    if (s >= d_) return Branch::at_least_d;
    return d_ % s == 0 ? Branch::below_d_exact : Branch::below_d_remainder;
  }

  ExactInt operator()(std::int64_t s) const {
    const std::int64_t d = d_;
    const auto ud = static_cast<unsigned>(d);
    const ExactInt sd = ipow(ExactInt(s), ud);
    const ExactInt sd1 = sd * s;
    const ExactInt tail = ExactInt(d) * binomial(s + d - 1, d + 1);

    if (branch(s) == Branch::at_least_d) {
      // (d s^{d+1} - (d-2) s^d) / 2 is an integer: one of s, s^d(d s - d + 2) is even.
      return e0_ * ((ExactInt(d) * sd1 - ExactInt(d - 2) * sd) / 2 + tail);
    }
    const std::int64_t k1 = d / s;
    const std::int64_t m = (d % s == 0) ? d - k1 + 1 : d - k1;
    ExactInt alternating = 0;
    for (std::int64_t i = 0; i <= d - 1; ++i) {
      ExactInt term = binomial(d, i) * binomial((m - i) * s + d - 1, d + 1);
      if (i % 2 == 0)
        alternating += term;
      else
        alternating -= term;
    }
    return e0_ * (ExactInt(m) * sd1 + tail - alternating);
  }

 private:
  int d_;
  ExactInt e0_;
};

inline ExactInt cm_sop_hk(int d, const ExactInt& e0, std::int64_t s) { return PiecewiseHKFormula(d, e0)(s); }

/// The s >= d branch expanded as a polynomial in s of degree d+1.
inline RatPoly cm_sop_hk_polynomial(int d, const ExactInt& e0) {
  if (d < 2) throw std::invalid_argument("cm_sop_hk_polynomial: d must be >= 2");
  RatPoly p = RatPoly::monomial(ExactRat(ExactInt(d), ExactInt(2)), static_cast<std::size_t>(d + 1)) -
              RatPoly::monomial(ExactRat(ExactInt(d - 2), ExactInt(2)), static_cast<std::size_t>(d)) +
              binomial_poly_expand(d) * ExactRat(d);
  return p * ExactRat(e0);
}

/// e_HK((I,It)R(I)) = c(d) e0(I).
inline ExactRat ehk_cm_sop(int d, const ExactInt& e0) { return c_of_d(d) * ExactRat(e0); }

/// Upper bound c(d) e0(I) on e_HK of a Rees algebra.
inline ExactRat eto_yoshida_bound(int d, const ExactInt& e0) { return c_of_d(d) * ExactRat(e0); }

enum class BoundVerdict { below, equal, violation };

inline BoundVerdict check_eto_yoshida(const ExactRat& multiplicity, int d, const ExactInt& e0) {
  const ExactRat bound = eto_yoshida_bound(d, e0);
  if (multiplicity < bound) return BoundVerdict::below;
  if (multiplicity == bound) return BoundVerdict::equal;
  return BoundVerdict::violation;
}

inline const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::below: return "below";
    case BoundVerdict::equal: return "equal";
    case BoundVerdict::violation: return "violation";
  }
  return "?";
}

/// e_HK(R(m)) = c(d) f_{d-1} for a Cohen-Macaulay Stanley-Reisner ring with
/// f_{d-1} facets.
inline ExactRat stanley_reisner_ehk(int d, const ExactInt& facets) {
  if (d < 2) throw std::invalid_argument("stanley_reisner_ehk: d must be >= 2");
  if (facets < 1) throw std::invalid_argument("stanley_reisner_ehk: need at least one facet");
  return c_of_d(d) * ExactRat(facets);
}

}  // namespace hkrees
