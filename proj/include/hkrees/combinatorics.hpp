#pragma once

#include "hkrees/exact.hpp"
#include "hkrees/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkrees {

/// C(n, k) for any integer n. Vanishes for k < 0, for 0 <= n < k and for n < 0,
/// so length formulas can be written without range guards.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  ExactInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

enum class StirlingKind { first, second };

/// Triangular table of Stirling numbers for 0 <= k <= n <= max_n, filled by the
/// standard recurrences. First kind is signed: s(n+1,k) = s(n,k-1) - n*s(n,k).
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, int max_n) : kind_(kind), max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("StirlingTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {ExactInt(1)};
    for (int n = 0; n < max_n; ++n) {
      const auto& prev = rows_[n];
      auto& row = rows_[n + 1];
      row.assign(static_cast<std::size_t>(n) + 2, ExactInt(0));
      for (int k = 1; k <= n + 1; ++k) {
        ExactInt stay = k <= n ? prev[k] : ExactInt(0);
        if (kind == StirlingKind::first)
          row[k] = prev[k - 1] - ExactInt(n) * stay;
        else
          row[k] = prev[k - 1] + ExactInt(k) * stay;
      }
    }
  }

  StirlingKind kind() const { return kind_; }
  int max_n() const { return max_n_; }

  /// Second kind returns 0 for k > n; first kind rejects it.
  const ExactInt& at(int n, int k) const {
    static const ExactInt zero = 0;
    if (n < 0 || k < 0 || n > max_n_)
      throw std::out_of_range("Stirling index (" + std::to_string(n) + "," + std::to_string(k) +
                              ") out of range");
    if (k > n) {
      if (kind_ == StirlingKind::second) return zero;
      throw std::out_of_range("Stirling first kind requires k <= n");
    }
    return rows_[n][k];
  }

 private:
  StirlingKind kind_;
  int max_n_;
  std::vector<std::vector<ExactInt>> rows_;
};

namespace detail {

/// Shared, grow-only cache. Readers hold a snapshot, so a published table is
/// never mutated.
inline std::shared_ptr<const StirlingTable> cached_stirling(StirlingKind kind, int n) {
  static std::mutex mu;
  static std::shared_ptr<const StirlingTable> first, second;
  std::lock_guard lock(mu);
  auto& slot = kind == StirlingKind::first ? first : second;
  if (!slot || slot->max_n() < n) slot = std::make_shared<const StirlingTable>(kind, std::max(n, 32));
  return slot;
}

}  // namespace detail

/// Signed Stirling number of the first kind, (-1)^(n-k) times the number of
/// permutations of n elements with exactly k cycles.
inline ExactInt stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling_first: need 0 <= k <= n");
  return detail::cached_stirling(StirlingKind::first, n)->at(n, k);
}

/// Unsigned cycle count c(n,k) = |s(n,k)|.
inline ExactInt cycle_count(int n, int k) { return boost::multiprecision::abs(stirling_first(n, k)); }

/// Number of partitions of an n-set into k blocks; zero when k > n.
inline ExactInt stirling_second(int n, int k) {
  if (n < 0 || k < 0) throw std::out_of_range("stirling_second: negative index");
  if (k > n) return 0;
  return detail::cached_stirling(StirlingKind::second, n)->at(n, k);
}

// sum_{i=0}^{d} (-1)^{d-i} C(d,i) C(i*s, d+1), summed term by term.
inline ExactInt lemma_combi_lhs(int d, std::int64_t s) {
  ExactInt acc = 0;
  for (int i = 0; i <= d; ++i) {
    ExactInt term = binomial(d, i) * binomial(i * s, d + 1);
    if ((d - i) % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// d * s^d * (s-1) / 2
inline ExactInt lemma_combi_rhs(int d, std::int64_t s) {
  return ExactInt(d) * ipow(ExactInt(s), static_cast<unsigned>(d)) * (s - 1) / 2;
}

/// C(s+d-1, d+1) as a polynomial in s: (s-1)s(s+1)...(s+d-1) / (d+1)!.
inline RatPoly binomial_poly_expand(int d) {
  if (d < 2) throw std::invalid_argument("binomial_poly_expand: d must be >= 2");
  RatPoly p = RatPoly::constant(ExactRat(1));
  for (int j = -1; j <= d - 1; ++j) p = p * RatPoly{ExactRat(j), ExactRat(1)};
  return p * ExactRat(ExactInt(1), factorial(static_cast<unsigned>(d + 1)));
}

inline ExactRat binomial_beta1(int d) { return ExactRat(ExactInt(d - 2), ExactInt(2)); }
inline ExactRat binomial_beta2(int d) { return ExactRat(ExactInt((d - 1) * (3 * d - 10)), ExactInt(24)); }

}  // namespace hkrees
