#pragma once

#include "hkrees/errors.hpp"
#include "hkrees/exact.hpp"
#include "hkrees/linear_solve.hpp"
#include "hkrees/quasi_polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hkrees {

struct Sample {
  int e = 0;
  ExactInt q;
  ExactInt value;
};

/// Values sampled at q = p^e with strictly increasing e.
class SampleSet {
 public:
  explicit SampleSet(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("SampleSet: p must be >= 2");
  }

  void add(int e, ExactInt value) {
    if (e < 0) throw std::invalid_argument("SampleSet: e must be >= 0");
    if (!samples_.empty() && e <= samples_.back().e)
      throw std::invalid_argument("SampleSet: e must be strictly increasing");
    samples_.push_back({e, ipow(ExactInt(p_), static_cast<unsigned>(e)), std::move(value)});
  }

  int prime() const { return p_; }
  const std::vector<Sample>& samples() const { return samples_; }
  std::vector<Sample>& mutable_samples() { return samples_; }

 private:
  int p_;
  std::vector<Sample> samples_;
};

struct QuasiPolynomialFit {
  QuasiPolynomialHK quasi;
  /// Smallest sampled e from which every sample agrees with `quasi`.
  int threshold_e;
};

/// Fits one degree-`degree` polynomial in q per residue class of e mod
/// `period` through the newest degree+1 samples of that class, then requires
/// the next `holdout` older samples of the class to agree. Older samples may
/// disagree; the returned threshold marks where agreement starts.
inline QuasiPolynomialFit fit_quasi_polynomial(const SampleSet& set, int degree, int period, int holdout) {
  if (degree < 0 || period < 1 || holdout < 1)
    throw std::invalid_argument("fit_quasi_polynomial: need degree >= 0, period >= 1, holdout >= 1");
  std::vector<std::vector<const Sample*>> classes(static_cast<std::size_t>(period));
  for (const auto& s : set.samples()) classes[static_cast<std::size_t>(s.e % period)].push_back(&s);

  const std::size_t fit_n = static_cast<std::size_t>(degree) + 1;
  std::vector<RatPoly> polys;
  for (int c = 0; c < period; ++c) {
    const auto& cls = classes[static_cast<std::size_t>(c)];
    if (cls.size() < fit_n + static_cast<std::size_t>(holdout))
      throw InsufficientSamples("fit_quasi_polynomial: residue class " + std::to_string(c) + " has " +
                                std::to_string(cls.size()) + " samples, need " +
                                std::to_string(fit_n + static_cast<std::size_t>(holdout)));
    std::vector<ExactRat> xs, ys;
    for (std::size_t k = cls.size() - fit_n; k < cls.size(); ++k) {
      xs.emplace_back(cls[k]->q);
      ys.emplace_back(cls[k]->value);
    }
    RatPoly poly = interpolate(xs, ys);
    for (std::size_t k = cls.size() - fit_n - static_cast<std::size_t>(holdout); k < cls.size() - fit_n; ++k)
      if (poly(ExactRat(cls[k]->q)) != ExactRat(cls[k]->value))
        throw InconsistentSamples("fit_quasi_polynomial: held-out sample e=" + std::to_string(cls[k]->e) +
                                  " disagrees with the fit of residue class " + std::to_string(c));
    polys.push_back(std::move(poly));
  }

  // Degrees can only disagree when a class degenerates; report that as inconsistent.
  for (const auto& p : polys)
    if (p.degree() != polys.front().degree())
      throw InconsistentSamples("fit_quasi_polynomial: residue classes fit polynomials of different degree");

  QuasiPolynomialHK quasi(std::move(polys), set.prime());
  int threshold = set.samples().front().e;
  for (const auto& s : set.samples())
    if (quasi.at_q(s.e, s.q) != ExactRat(s.value)) threshold = s.e + 1;
  for (const auto& s : set.samples())
    if (s.e >= threshold) {
      threshold = s.e;
      break;
    }
  quasi.set_valid_from_e(threshold);
  return {std::move(quasi), threshold};
}

/// Leading coefficient of the eventual polynomial s -> values[s] of degree
/// d+1, fitted through the newest d+2 values with s >= d and checked against
/// every older value with s >= d.
inline ExactRat estimate_ehk(const std::vector<std::pair<std::int64_t, ExactInt>>& values, int d) {
  if (d < 1) throw std::invalid_argument("estimate_ehk: d must be >= 1");
  std::map<std::int64_t, ExactInt> by_s;
  for (const auto& [s, v] : values)
    if (s >= d) by_s[s] = v;
  // Keep the newest run of consecutive s.
  std::vector<std::pair<std::int64_t, ExactInt>> run;
  for (auto it = by_s.rbegin(); it != by_s.rend(); ++it) {
    if (!run.empty() && run.back().first != it->first + 1) break;
    run.emplace_back(it->first, it->second);
  }
  std::reverse(run.begin(), run.end());
  const std::size_t need = static_cast<std::size_t>(d) + 3;
  if (run.size() < need)
    throw InsufficientSamples("estimate_ehk: need " + std::to_string(need) + " consecutive values with s >= " +
                              std::to_string(d) + ", got " + std::to_string(run.size()));

  const std::size_t fit_n = static_cast<std::size_t>(d) + 2;
  std::vector<ExactRat> xs, ys;
  for (std::size_t k = run.size() - fit_n; k < run.size(); ++k) {
    xs.emplace_back(run[k].first);
    ys.emplace_back(run[k].second);
  }
  const RatPoly poly = interpolate(xs, ys);
  for (std::size_t k = 0; k < run.size() - fit_n; ++k)
    if (poly(ExactRat(run[k].first)) != ExactRat(run[k].second))
      throw NonPolynomialSamples("estimate_ehk: value at s=" + std::to_string(run[k].first) +
                                 " is off the degree-" + std::to_string(d + 1) + " fit");
  return poly.coeff(static_cast<std::size_t>(d) + 1);
}

}  // namespace hkrees
