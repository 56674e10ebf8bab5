#pragma once

#include "hkrees/errors.hpp"
#include "hkrees/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hkrees {

/// x_1^{u_1} ... x_d^{u_d}; divisibility is componentwise <=.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
  Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

  static Monomial one(std::size_t dim) { return Monomial(std::vector<int>(dim, 0)); }
  static Monomial pure_power(std::size_t dim, std::size_t var, int exp) {
    std::vector<int> v(dim, 0);
    v.at(var) = exp;
    return Monomial(std::move(v));
  }

  std::size_t dim() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const {
    int t = 0;
    for (int e : exps_) t += e;
    return t;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    std::vector<int> v(a.exps_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.exps_[i];
    return Monomial(std::move(v));
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    if (!b.divides(a)) throw std::invalid_argument("Monomial: inexact division");
    std::vector<int> v(a.exps_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.exps_[i];
    return Monomial(std::move(v));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_dim(a, b);
    std::vector<int> v(a.exps_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], b.exps_[i]);
    return Monomial(std::move(v));
  }

  Monomial scaled(int s) const {
    std::vector<int> v(exps_);
    for (int& e : v) e *= s;
    return Monomial(std::move(v));
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
    return os.str();
  }

 private:
  static void check_same_dim(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Monomial: ambient dimension mismatch");
  }

  std::vector<int> exps_;
};

/// Monomial ideal held by its (unique) minimal generating set, sorted.
/// No generators is the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t ambient_dim = 1) : dim_(ambient_dim) {
    if (dim_ == 0) throw std::invalid_argument("MonomialIdeal: ambient dimension must be >= 1");
  }

  MonomialIdeal(std::size_t ambient_dim, std::vector<Monomial> gens) : MonomialIdeal(ambient_dim) {
    for (const auto& g : gens)
      if (g.dim() != dim_) throw std::invalid_argument("MonomialIdeal: mixed ambient dimensions");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim) { return MonomialIdeal(dim, {Monomial::one(dim)}); }

  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal variables(std::size_t dim) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < dim; ++i) g.push_back(Monomial::pure_power(dim, i, 1));
    return MonomialIdeal(dim, std::move(g));
  }

  /// (x_1^{a_1}, ..., x_d^{a_d})
  static MonomialIdeal parameter(const std::vector<int>& exponents) {
    const std::size_t dim = exponents.size();
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < dim; ++i) {
      if (exponents[i] < 1) throw std::invalid_argument("parameter ideal exponents must be >= 1");
      g.push_back(Monomial::pure_power(dim, i, exponents[i]));
    }
    return MonomialIdeal(dim, std::move(g));
  }

  /// Drops every generator divisible by another one (and duplicates).
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_dim(a, b);
    std::vector<Monomial> g(a.gens_);
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.dim_, std::move(g));
  }

  friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_dim(a, b);
    std::vector<Monomial> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) g.push_back(x * y);
    return MonomialIdeal(a.dim_, std::move(g));
  }

  MonomialIdeal power(int k) const {
    if (k < 0) throw std::invalid_argument("MonomialIdeal::power: negative exponent");
    MonomialIdeal result = unit(dim_);
    MonomialIdeal base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Bracket power: every stored generator raised to the s-th power.
  MonomialIdeal frobenius(int s) const {
    if (s < 1) throw std::invalid_argument("MonomialIdeal::frobenius: s must be >= 1");
    std::vector<Monomial> g;
    for (const auto& m : gens_) g.push_back(m.scaled(s));
    return MonomialIdeal(dim_, std::move(g));
  }

  /// Smallest pure-power exponent of each variable, if every variable has one.
  std::optional<std::vector<int>> primary_box() const {
    constexpr int none = std::numeric_limits<int>::max();
    std::vector<int> box(dim_, none);
    for (const auto& g : gens_) {
      int support = -1, count = 0;
      for (std::size_t i = 0; i < dim_; ++i)
        if (g[i] > 0) {
          support = static_cast<int>(i);
          ++count;
        }
      if (count == 0) return std::vector<int>(dim_, 0);  // unit ideal
      if (count == 1) box[support] = std::min(box[support], g[support]);
    }
    for (int b : box)
      if (b == none) return std::nullopt;
    return box;
  }

  /// Number of lattice points in the primary box (0 if not primary).
  ExactInt box_volume() const {
    auto box = primary_box();
    if (!box) return 0;
    ExactInt v = 1;
    for (int b : *box) v *= b;
    return v;
  }

  /// Number of standard monomials, i.e. length(k[x]/A). Walks the first d-1
  /// coordinates of the bounding box; the last coordinate contributes the
  /// minimum last exponent among generators dividing in the others.
  ExactInt colength() const {
    auto box = primary_box();
    if (!box) throw InfiniteColength("monomial ideal is not primary to the irrelevant ideal");
    if (is_unit()) return 0;
    std::vector<const Monomial*> active;
    active.reserve(gens_.size());
    for (const auto& g : gens_) active.push_back(&g);
    std::vector<int> point(dim_, 0);
    return count_from(0, *box, active, point);
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ";" : "") + gens_[i].to_string();
    return out;
  }

 private:
  static void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("MonomialIdeal: ambient dimension mismatch");
  }

  // `active` holds generators dividing the current point in coordinates < level.
  std::uint64_t count_from(std::size_t level, const std::vector<int>& box,
                           const std::vector<const Monomial*>& active, std::vector<int>& point) const {
    const std::size_t last = dim_ - 1;
    if (level == last) {
      int cap = box[last];
      for (const Monomial* g : active) cap = std::min(cap, (*g)[last]);
      return static_cast<std::uint64_t>(cap);
    }
    std::uint64_t total = 0;
    std::vector<const Monomial*> next;
    next.reserve(active.size());
    for (int u = 0; u < box[level]; ++u) {
      point[level] = u;
      next.clear();
      bool covered = false;
      for (const Monomial* g : active) {
        if ((*g)[level] > u) continue;
        next.push_back(g);
        bool rest_zero = true;
        for (std::size_t j = level + 1; j < dim_; ++j)
          if ((*g)[j] != 0) {
            rest_zero = false;
            break;
          }
        if (rest_zero) covered = true;
      }
      if (covered) break;  // every larger u is covered as well
      total += count_from(level + 1, box, next, point);
    }
    return total;
  }

  std::size_t dim_;
  std::vector<Monomial> gens_;
};

/// Parses "2,0;1,3;0,4" into (x^2, x y^3, y^4). An empty string is rejected.
inline MonomialIdeal parse_monomial_ideal(std::string_view text) {
  std::vector<Monomial> gens;
  std::size_t dim = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tuple = text.substr(pos, end - pos);
    std::vector<int> exps;
    std::size_t p = 0;
    while (p <= tuple.size()) {
      std::size_t q = tuple.find(',', p);
      if (q == std::string_view::npos) q = tuple.size();
      std::string item(tuple.substr(p, q - p));
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent '" + item + "' in ideal text");
      }
      if (used != item.size() || v < 0) throw std::invalid_argument("bad exponent '" + item + "' in ideal text");
      exps.push_back(v);
      p = q + 1;
    }
    if (dim == 0) dim = exps.size();
    if (exps.size() != dim) throw std::invalid_argument("ideal text mixes ambient dimensions");
    gens.emplace_back(std::move(exps));
    pos = end + 1;
  }
  return MonomialIdeal(dim, std::move(gens));
}

}  // namespace hkrees
