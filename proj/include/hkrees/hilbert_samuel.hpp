#pragma once

#include "hkrees/combinatorics.hpp"
#include "hkrees/exact.hpp"

#include <cstdint>
#include <stdexcept>

namespace hkrees {

/// Dimension and multiplicity of a parameter ideal I in a Cohen-Macaulay
/// local ring; these determine the Hilbert-Samuel function completely.
struct HilbertContext {
  int d = 1;
  ExactInt e0 = 1;

  HilbertContext() = default;
  HilbertContext(int dim, ExactInt mult) : d(dim), e0(std::move(mult)) {
    if (d < 1) throw std::invalid_argument("HilbertContext: d must be >= 1");
    if (e0 < 1) throw std::invalid_argument("HilbertContext: e0 must be >= 1");
  }
};

/// Coefficients of s^{d+1}, s^d and s^{d-1} in the eventual polynomial
/// s -> length(R(I) / (I,It)^[s]).
struct AsymptoticCoefficients {
  ExactRat c_lead;
  ExactRat c_sub;
  ExactRat c_subsub;
};

/// H(n) = length(R/I^n) = e0 * C(n+d-1, d); zero for n <= 0.
inline ExactInt hilbert_H(const HilbertContext& ctx, std::int64_t n) {
  if (n <= 0) return 0;
  return ctx.e0 * binomial(n + ctx.d - 1, ctx.d);
}

/// F(s,n) = length(I^[s] / I^[s] I^n), the Hilbert-Samuel function of the
/// module I^[s]. Three regimes:
///   1 <= n <= s              d*H(n)
///   s+1 <= n <= s(d-1)-d     sum_{i=1}^{d-1} (-1)^{i+1} C(d,i) H(n-(i-1)s)
///   n >= s(d-1)-d+1          H(n+s) - s^d e0      (here I^[s] I^n = I^{n+s})
/// When the first and last ranges overlap both expressions agree; the first wins.
inline ExactInt hilbert_F(const HilbertContext& ctx, std::int64_t s, std::int64_t n) {
  if (s < 1) throw std::invalid_argument("hilbert_F: s must be >= 1");
  if (ctx.d < 2) throw std::invalid_argument("hilbert_F: d must be >= 2");
  if (n <= 0) return 0;
  const std::int64_t d = ctx.d;
  if (n <= s) return ExactInt(d) * hilbert_H(ctx, n);
  if (n <= s * (d - 1) - d) {
    ExactInt acc = 0;
    for (std::int64_t i = 1; i <= d - 1; ++i) {
      ExactInt term = binomial(d, i) * hilbert_H(ctx, n - (i - 1) * s);
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  }
  return hilbert_H(ctx, n + s) - ipow(ExactInt(s), static_cast<unsigned>(d)) * ctx.e0;
}

/// Reduction number r(I^s) of a power of a parameter ideal.
inline int reduction_number_power(int d, int s) {
  if (d < 2 || s < 1) throw std::invalid_argument("reduction_number_power: need d >= 2, s >= 1");
  if (s >= d) return d - 1;
  const int k1 = d / s;
  const int k2 = d % s;
  return k2 == 0 ? d - k1 : d - k1 - 1;
}

/// c(d) = d/2 + d/(d+1)!
inline ExactRat c_of_d(int d) {
  if (d < 1) throw std::invalid_argument("c_of_d: d must be >= 1");
  return ExactRat(ExactInt(d), ExactInt(2)) +
         ExactRat(ExactInt(d), factorial(static_cast<unsigned>(d + 1)));
}

inline AsymptoticCoefficients asymptotic_coefficients(const HilbertContext& ctx) {
  if (ctx.d < 2) throw std::invalid_argument("asymptotic_coefficients: d must be >= 2");
  const int d = ctx.d;
  const ExactRat e0(ctx.e0);
  const ExactInt fact_dm1 = factorial(static_cast<unsigned>(d - 1));
  AsymptoticCoefficients c;
  c.c_lead = c_of_d(d) * e0;
  c.c_sub = e0 * ExactRat(ExactInt(d - 2), ExactInt(2)) * (ExactRat(ExactInt(1), fact_dm1) - 1);
  c.c_subsub = e0 * ExactRat(ExactInt(d * (d - 1) * (3 * d - 10)), 24 * fact_dm1);
  return c;
}

}  // namespace hkrees
