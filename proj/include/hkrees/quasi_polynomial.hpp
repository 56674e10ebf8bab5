#pragma once

#include "hkrees/exact.hpp"
#include "hkrees/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hkrees {

/// e -> values[e mod N].
class PeriodicSequence {
 public:
  PeriodicSequence() : values_{ExactInt(0)} {}
  explicit PeriodicSequence(std::vector<ExactInt> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("PeriodicSequence: period must be >= 1");
  }
  PeriodicSequence(std::initializer_list<long long> values) {
    for (long long v : values) values_.emplace_back(v);
    if (values_.empty()) throw std::invalid_argument("PeriodicSequence: period must be >= 1");
  }

  int period() const { return static_cast<int>(values_.size()); }
  const ExactInt& at(std::int64_t e) const {
    const std::int64_t n = period();
    return values_[static_cast<std::size_t>(((e % n) + n) % n)];
  }
  const std::vector<ExactInt>& values() const { return values_; }

 private:
  std::vector<ExactInt> values_;
};

/// One polynomial in q per residue class of e mod N. Evaluation at e uses
/// q = p^e. `valid_from_e`, when set, is the exponent from which the
/// quasi-polynomial is claimed to equal the actual lengths.
class QuasiPolynomialHK {
 public:
  QuasiPolynomialHK(std::vector<RatPoly> polys, std::optional<int> prime = std::nullopt)
      : polys_(std::move(polys)), prime_(prime) {
    if (polys_.empty()) throw std::invalid_argument("QuasiPolynomialHK: period must be >= 1");
    for (const auto& p : polys_)
      if (p.degree() != polys_.front().degree())
        throw std::invalid_argument("QuasiPolynomialHK: residue polynomials differ in degree");
  }

  int period() const { return static_cast<int>(polys_.size()); }
  int degree() const { return polys_.front().degree(); }
  const std::vector<RatPoly>& polys() const { return polys_; }
  const RatPoly& residue(std::int64_t e) const {
    const std::int64_t n = period();
    return polys_[static_cast<std::size_t>(((e % n) + n) % n)];
  }

  std::optional<int> prime() const { return prime_; }
  void set_prime(int p) { prime_ = p; }
  std::optional<int> valid_from_e() const { return valid_from_e_; }
  void set_valid_from_e(std::optional<int> e) { valid_from_e_ = e; }

  ExactRat at_q(std::int64_t e, const ExactInt& q) const { return residue(e)(ExactRat(q)); }

  ExactRat evaluate(int e) const {
    if (!prime_) throw std::logic_error("QuasiPolynomialHK: no prime set for evaluation");
    return at_q(e, ipow(ExactInt(*prime_), static_cast<unsigned>(e)));
  }

  friend bool operator==(const QuasiPolynomialHK& a, const QuasiPolynomialHK& b) { return a.polys_ == b.polys_; }

 private:
  std::vector<RatPoly> polys_;
  std::optional<int> prime_;
  std::optional<int> valid_from_e_;
};

}  // namespace hkrees
