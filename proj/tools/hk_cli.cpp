#include "hk_cli.hpp"

#include "hkrees/hkrees.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

namespace hkcli {

using hkrees::ExactInt;
using hkrees::ExactRat;
using hkrees::to_string;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long long box_cap = 100'000'000;
constexpr long long q_cap = 256;

// ---------------------------------------------------------------- parsing

ExactInt parse_big(const std::string& text, const char* what) {
  static const std::regex re(R"(\s*-?\d+\s*)");
  if (!std::regex_match(text, re)) throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  return ExactInt(text);
}

long long parse_ll(const std::string& text, const char* what) {
  const ExactInt v = parse_big(text, what);
  if (v > 1'000'000'000 || v < -1'000'000'000) throw UsageError(std::string(what) + ": out of range");
  return static_cast<long long>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

/// "2..5", "1,3,4" or "7"; sorted, duplicates removed.
std::vector<long long> parse_range(const std::string& text, const char* what) {
  std::vector<long long> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const long long lo = parse_ll(text.substr(0, dots), what), hi = parse_ll(text.substr(dots + 2), what);
    if (hi < lo) throw UsageError(std::string(what) + ": empty range " + text);
    if (hi - lo > 10'000) throw UsageError(std::string(what) + ": range too long");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    for (const auto& part : split(text, ',')) out.push_back(parse_ll(part, what));
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(static_cast<int>(parse_ll(part, what)));
  if (out.empty()) throw UsageError(std::string(what) + ": empty");
  return out;
}

std::vector<ExactInt> parse_big_list(const std::string& text, const char* what) {
  std::vector<ExactInt> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_big(part, what));
  if (out.empty()) throw UsageError(std::string(what) + ": empty");
  return out;
}

// ---------------------------------------------------------------- options

struct Options {
  std::string mode, target;
  std::optional<int> d, r, rho, p, a, period, degree, holdout, n_max;
  std::optional<std::string> e0, e1, s, e, exponents, lengths, alpha, facets, n, ideal, preset, variant;
  std::string format = "table";
  bool force = false;

  template <class T>
  static const T& need(const std::optional<T>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
  }
  int need_d() const {
    const int v = need(d, "--d");
    if (v < 2) throw UsageError("--d must be >= 2");
    return v;
  }
  ExactInt need_e0(long long fallback = 0) const {
    if (!e0 && fallback) return fallback;
    const ExactInt v = parse_big(need(e0, "--e0"), "--e0");
    if (v < 1) throw UsageError("--e0 must be >= 1");
    return v;
  }
  int need_p() const {
    const int v = p.value_or(2);
    if (!hkrees::is_prime(v)) throw UsageError("--p must be prime");
    return v;
  }
  int need_a() const {
    const int v = need(a, "--a");
    if (v < 2) throw UsageError("--a must be >= 2");
    return v;
  }
  hkrees::ReesSelector need_variant() const {
    const std::string& v = need(variant, "--variant");
    if (v == "rees-of-x") return hkrees::ReesSelector::rees_of_x;
    if (v == "rees-of-m") return hkrees::ReesSelector::rees_of_m;
    throw UsageError("--variant must be rees-of-x or rees-of-m");
  }
  std::vector<long long> s_values() const {
    auto v = parse_range(need(s, "--s"), "--s");
    if (v.front() < 1) throw UsageError("--s values must be >= 1");
    return v;
  }
  std::vector<long long> e_values() const {
    auto v = parse_range(need(e, "--e"), "--e");
    if (v.front() < 0) throw UsageError("--e values must be >= 0");
    return v;
  }
  std::vector<int> exps() const {
    auto v = parse_int_list(need(exponents, "--exponents"), "--exponents");
    if (v.size() < 2) throw UsageError("--exponents needs at least two entries");
    for (int x : v)
      if (x < 1) throw UsageError("--exponents entries must be >= 1");
    return v;
  }
};

std::string str(long long v) { return std::to_string(v); }

ExactInt power_of(int p, long long e) { return hkrees::ipow(ExactInt(p), static_cast<unsigned>(e)); }

void check_q_cap(const Options& o, int p, long long e) {
  if (o.force) return;
  if (power_of(p, e) > q_cap)
    throw ResourceCap("q = " + str(p) + "^" + str(e) + " exceeds 2^8; pass --force to run anyway");
}

void check_box_cap(const Options& o, const ExactInt& points) {
  if (!o.force && points > box_cap)
    throw ResourceCap("oracle box of " + to_string(points) + " lattice points exceeds 10^8; pass --force to run anyway");
}

// largest box visited by the graded monomial oracle: I^T with T at the stabilization bound
void check_monomial_cap(const Options& o, const std::vector<int>& exps, long long s) {
  const long long d = static_cast<long long>(exps.size());
  const long long top = s + std::max<long long>(0, d * (s - 1) - s + 1) + 1;
  ExactInt points = 1;
  for (int a : exps) points *= ExactInt(a) * top;
  check_box_cap(o, points);
}

// ---------------------------------------------------------------- dimension one data

hkrees::Dim1Input fermat5_input() {
  hkrees::Dim1Input in;
  in.e0 = 5;
  in.e1 = 10;
  in.r = 4;
  in.lengths = {0, 1, 3, 6};
  in.alpha = {hkrees::PeriodicSequence{-4, -6}, hkrees::PeriodicSequence{-3, -5}, hkrees::PeriodicSequence{-2, -3},
              hkrees::PeriodicSequence{-1}};
  in.p = 2;
  return in;
}

/// "-4,-6;-3,-5;-2,-3;-1": one periodic sequence per n, listed from e = 0 mod N.
std::vector<hkrees::PeriodicSequence> parse_alpha(const std::string& text) {
  std::vector<hkrees::PeriodicSequence> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ';')) out.emplace_back(parse_big_list(part, "--alpha"));
  return out;
}

hkrees::Dim1Input dim1_input(const Options& o) {
  if (o.preset) {
    if (*o.preset != "fermat5") throw UsageError("unknown preset '" + *o.preset + "'");
    return fermat5_input();
  }
  hkrees::Dim1Input in;
  in.e0 = o.need_e0();
  in.e1 = parse_big(Options::need(o.e1, "--e1"), "--e1");
  in.r = Options::need(o.r, "--r");
  in.rho = o.rho;
  in.lengths = o.lengths ? parse_big_list(*o.lengths, "--lengths") : std::vector<ExactInt>{};
  in.alpha = parse_alpha(o.alpha.value_or(""));
  in.p = o.need_p();
  return in;
}

/// Closed-form prediction at a single e for the hypersurface X^a = Y^a. The
/// published alpha values are used for a = 5, p = 2; otherwise alpha comes
/// from the colength oracle at that e.
ExactRat dim1_prediction(int a, int p, hkrees::ReesSelector rees, long long e) {
  const ExactInt q = power_of(p, e);
  std::vector<ExactInt> alpha;
  if (a == 5 && p == 2) {
    for (const auto& seq : fermat5_input().alpha) alpha.push_back(seq.at(e));
  } else {
    const auto t = hkrees::alpha_table(a, p, a - 2, {static_cast<int>(e)});
    for (int n = 0; n <= a - 2; ++n) alpha.push_back(t.at(n, static_cast<int>(e)));
  }
  if (rees == hkrees::ReesSelector::rees_of_x)
    return hkrees::sop_dim1_hk(a, hkrees::PeriodicSequence(std::vector<ExactInt>{alpha[0]}), p).at_q(e, q);
  hkrees::Dim1Input in;
  in.e0 = a;
  in.e1 = ExactInt(a) * (a - 1) / 2;
  in.r = a - 1;
  for (int n = 0; n < a - 1; ++n) in.lengths.push_back(ExactInt(n) * (n + 1) / 2);
  for (const auto& v : alpha) in.alpha.push_back(hkrees::PeriodicSequence(std::vector<ExactInt>{v}));
  in.p = p;
  return hkrees::dim1_hk(in).at_q(e, q);
}

ExactInt dim1_oracle(const Options& o, int a, int p, hkrees::ReesSelector rees, long long e) {
  check_q_cap(o, p, e);
  const hkrees::ReesInstanceDim1 inst(a, hkrees::IdealSelector::maximal, rees, p);
  return hkrees::rees_colength_dim1(inst, static_cast<int>(e));
}

void quasi_rows(RunReport& rep, const hkrees::QuasiPolynomialHK& hk) {
  for (int c = 0; c < hk.period(); ++c) {
    Row row;
    row.point = {{"e mod " + str(hk.period()), str(c)}};
    row.formula = hk.residue(c).to_string("q");
    rep.rows.push_back(std::move(row));
  }
}

void quasi_value_rows(RunReport& rep, const hkrees::QuasiPolynomialHK& hk, int p, const std::vector<long long>& es) {
  for (long long e : es) {
    Row row;
    row.point = {{"e", str(e)}, {"q", to_string(power_of(p, e))}};
    row.formula = to_string(hk.evaluate(static_cast<int>(e)));
    rep.rows.push_back(std::move(row));
  }
}

std::string variant_name(hkrees::ReesSelector r) {
  return r == hkrees::ReesSelector::rees_of_x ? "rees-of-x" : "rees-of-m";
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------- commands

RunReport cmd_formula(const Options& o) {
  RunReport rep{"formula", o.target, {}, {}};
  if (o.target == "cm-sop") {
    const int d = o.need_d();
    const ExactInt e0 = o.need_e0(1);
    rep.instance = {{"d", str(d)}, {"e0", to_string(e0)}};
    for (long long s : o.s_values()) rep.rows.push_back({{{"s", str(s)}}, to_string(hkrees::cm_sop_hk(d, e0, s)), {}, {}});
  } else if (o.target == "cm-sop-poly") {
    const int d = o.need_d();
    const ExactInt e0 = o.need_e0(1);
    rep.instance = {{"d", str(d)}, {"e0", to_string(e0)}, {"valid for", "s >= " + str(d)}};
    rep.rows.push_back({{{"d", str(d)}}, hkrees::cm_sop_hk_polynomial(d, e0).to_string("s"), {}, {}});
  } else if (o.target == "ehk") {
    const int d = o.need_d();
    const ExactInt e0 = o.need_e0();
    rep.instance = {{"d", str(d)}, {"e0", to_string(e0)}};
    rep.rows.push_back({{{"d", str(d)}, {"e0", to_string(e0)}}, to_string(hkrees::ehk_cm_sop(d, e0)), {}, {}});
  } else if (o.target == "dim1") {
    const auto in = dim1_input(o);
    const auto hk = hkrees::dim1_hk(in);
    rep.instance = {{"e0", to_string(in.e0)}, {"e1", to_string(in.e1)}, {"r", str(in.r)},
                    {"rho", str(in.rho.value_or(in.r - 1))}, {"p", str(in.p)}, {"period", str(hk.period())}};
    if (o.preset) rep.instance.insert(rep.instance.begin(), {"preset", *o.preset});
    if (o.e)
      quasi_value_rows(rep, hk, in.p, o.e_values());
    else
      quasi_rows(rep, hk);
  } else if (o.target == "sop-dim1") {
    const ExactInt e0 = o.need_e0();
    const auto alpha = parse_alpha(Options::need(o.alpha, "--alpha"));
    if (alpha.size() != 1) throw UsageError("--alpha for sop-dim1 takes one periodic sequence");
    const int p = o.need_p();
    const auto hk = hkrees::sop_dim1_hk(e0, alpha.front(), p);
    rep.instance = {{"e0", to_string(e0)}, {"p", str(p)}, {"period", str(hk.period())}};
    if (o.e)
      quasi_value_rows(rep, hk, p, o.e_values());
    else
      quasi_rows(rep, hk);
  } else if (o.target == "stanley-reisner") {
    const int d = o.need_d();
    const ExactInt f = parse_big(Options::need(o.facets, "--facets"), "--facets");
    rep.instance = {{"d", str(d)}, {"facets", to_string(f)}};
    rep.rows.push_back({{{"d", str(d)}, {"facets", to_string(f)}}, to_string(hkrees::stanley_reisner_ehk(d, f)), {}, {}});
  } else {
    throw UsageError("unknown formula '" + o.target + "'");
  }
  return rep;
}

RunReport cmd_oracle(const Options& o) {
  RunReport rep{"oracle", o.target, {}, {}};
  if (o.target == "monomial") {
    const auto exps = o.exps();
    const hkrees::ReesInstanceMonomial inst(exps);
    rep.instance = {{"exponents", join(exps)}, {"d", str(inst.d())}, {"e0", to_string(inst.e0())}};
    for (long long s : o.s_values()) {
      check_monomial_cap(o, exps, s);
      rep.rows.push_back({{{"s", str(s)}}, {}, to_string(hkrees::rees_colength_monomial(inst, static_cast<int>(s))), {}});
    }
  } else if (o.target == "dim1") {
    const int a = o.need_a(), p = o.need_p();
    const auto rees = o.need_variant();
    rep.instance = {{"a", str(a)}, {"p", str(p)}, {"variant", variant_name(rees)}};
    for (long long e : o.e_values())
      rep.rows.push_back({{{"e", str(e)}, {"q", to_string(power_of(p, e))}}, {}, to_string(dim1_oracle(o, a, p, rees, e)), {}});
  } else if (o.target == "alpha") {
    const int a = o.need_a(), p = o.need_p();
    const int n_max = o.n_max.value_or(a - 2);
    if (n_max < 0) throw UsageError("--n-max must be >= 0");
    const auto es = o.e_values();
    for (long long e : es) check_q_cap(o, p, e);
    rep.instance = {{"a", str(a)}, {"p", str(p)}};
    std::vector<int> ei(es.begin(), es.end());
    const auto t = hkrees::alpha_table(a, p, n_max, ei);
    for (int n = 0; n <= n_max; ++n)
      for (int e : ei) rep.rows.push_back({{{"n", str(n)}, {"e", str(e)}}, {}, to_string(t.at(n, e)), {}});
  } else if (o.target == "colength") {
    const auto ideal = hkrees::parse_monomial_ideal(Options::need(o.ideal, "--ideal"));
    check_box_cap(o, ideal.box_volume());
    rep.instance = {{"ideal", ideal.to_string()}};
    ExactInt value;
    if (o.a) {
      if (ideal.ambient_dim() < 2) throw UsageError("--a needs at least two variables");
      const hkrees::BinomialRelation rel(ideal.ambient_dim(), 0, 1, o.need_a());
      rep.instance.emplace_back("relation", "x1^" + str(rel.a) + " - x2^" + str(rel.a));
      value = hkrees::quotient_colength(rel, ideal);
    } else {
      value = ideal.colength();
    }
    rep.rows.push_back({{}, {}, to_string(value), {}});
  } else {
    throw UsageError("unknown oracle '" + o.target + "'");
  }
  return rep;
}

RunReport cmd_compare(const Options& o) {
  RunReport rep{"compare", o.target, {}, {}};
  if (o.target == "cm-sop") {
    const auto exps = o.exps();
    const hkrees::ReesInstanceMonomial inst(exps);
    rep.instance = {{"exponents", join(exps)}, {"d", str(inst.d())}, {"e0", to_string(inst.e0())}};
    for (long long s : o.s_values()) {
      check_monomial_cap(o, exps, s);
      rep.rows.push_back({{{"s", str(s)}},
                          to_string(hkrees::cm_sop_hk(inst.d(), inst.e0(), s)),
                          to_string(hkrees::rees_colength_monomial(inst, static_cast<int>(s))),
                          {}});
    }
  } else if (o.target == "dim1") {
    const int a = o.need_a(), p = o.need_p();
    const auto rees = o.need_variant();
    rep.instance = {{"a", str(a)}, {"p", str(p)}, {"variant", variant_name(rees)},
                    {"alpha source", a == 5 && p == 2 ? "published" : "oracle"}};
    for (long long e : o.e_values()) {
      const ExactInt oracle = dim1_oracle(o, a, p, rees, e);
      rep.rows.push_back({{{"e", str(e)}, {"q", to_string(power_of(p, e))}},
                          to_string(dim1_prediction(a, p, rees, e)),
                          to_string(oracle),
                          {}});
    }
  } else {
    throw UsageError("unknown comparison '" + o.target + "'");
  }
  return rep;
}

RunReport cmd_fit(const Options& o) {
  RunReport rep{"fit", o.target, {}, {}};
  if (o.target == "dim1") {
    const int a = o.need_a(), p = o.need_p();
    const auto rees = o.need_variant();
    const int period = o.period.value_or(2), degree = o.degree.value_or(2), holdout = o.holdout.value_or(1);
    hkrees::SampleSet set(p);
    for (long long e : o.e_values()) set.add(static_cast<int>(e), dim1_oracle(o, a, p, rees, e));
    const auto fit = hkrees::fit_quasi_polynomial(set, degree, period, holdout);
    rep.instance = {{"a", str(a)},
                    {"p", str(p)},
                    {"variant", variant_name(rees)},
                    {"period", str(period)},
                    {"degree", str(degree)},
                    {"threshold e", str(fit.threshold_e)}};
    for (int c = 0; c < period; ++c) {
      Row row;
      row.point = {{"e mod " + str(period), str(c)}};
      row.oracle = fit.quasi.residue(c).to_string("q");
      if (a == 5 && p == 2 && period % 2 == 0) {
        // published closed forms, period 2
        const hkrees::Dim1Input in = fermat5_input();
        const auto hk = rees == hkrees::ReesSelector::rees_of_x ? hkrees::sop_dim1_hk(5, in.alpha[0], 2)
                                                                 : hkrees::dim1_hk(in);
        row.formula = hk.residue(c).to_string("q");
      }
      rep.rows.push_back(std::move(row));
    }
  } else if (o.target == "ehk") {
    std::vector<std::pair<std::int64_t, ExactInt>> values;
    int d;
    ExactInt e0;
    if (o.exponents) {
      const auto exps = o.exps();
      const hkrees::ReesInstanceMonomial inst(exps);
      d = inst.d();
      e0 = inst.e0();
      rep.instance = {{"exponents", join(exps)}, {"source", "oracle"}};
      for (long long s : o.s_values()) {
        check_monomial_cap(o, exps, s);
        values.emplace_back(s, hkrees::rees_colength_monomial(inst, static_cast<int>(s)));
      }
    } else {
      d = o.need_d();
      e0 = o.need_e0(1);
      rep.instance = {{"d", str(d)}, {"e0", to_string(e0)}, {"source", "formula"}};
      const std::vector<long long> ss = o.s ? o.s_values() : parse_range(str(d) + ".." + str(d + 6), "--s");
      for (long long s : ss) values.emplace_back(s, hkrees::cm_sop_hk(d, e0, s));
    }
    const ExactRat estimate = hkrees::estimate_ehk(values, d);
    const ExactRat bound = hkrees::eto_yoshida_bound(d, e0);
    rep.instance.emplace_back("bound check", hkrees::to_string(hkrees::check_eto_yoshida(estimate, d, e0)));
    rep.rows.push_back({{{"d", str(d)}, {"e0", to_string(e0)}}, to_string(bound), to_string(estimate), {}});
  } else {
    throw UsageError("unknown fit '" + o.target + "'");
  }
  return rep;
}

RunReport cmd_example(const Options& o) {
  RunReport rep{"example", o.target, {}, {}};
  if (o.target == "fermat5") {
    rep.instance = {{"ring", "k[[x,y]]/(x^5 - y^5)"}, {"p", "2"}};
    const auto in = fermat5_input();
    const std::vector<int> es{3, 4, 5, 6};
    const auto t = hkrees::alpha_table(5, 2, 3, es);
    for (int n = 0; n <= 3; ++n)
      for (int e : es) {
        Row row;
        row.point = {{"item", "alpha"}, {"n", str(n)}, {"e", str(e)}};
        row.oracle = to_string(t.at(n, e));
        row.golden = to_string(in.alpha[static_cast<std::size_t>(n)].at(e));
        rep.rows.push_back(std::move(row));
      }
    const auto hk_x = hkrees::sop_dim1_hk(5, in.alpha[0], 2);
    const auto hk_m = hkrees::dim1_hk(in);
    for (long long e = 2; e <= 6; ++e) {
      const ExactInt q = power_of(2, e);
      Row row;
      row.point = {{"item", "rees-of-x"}, {"n", ""}, {"e", str(e)}};
      row.formula = to_string(hk_x.evaluate(static_cast<int>(e)));
      row.oracle = to_string(dim1_oracle(o, 5, 2, hkrees::ReesSelector::rees_of_x, e));
      row.golden = to_string(ExactInt(e % 2 == 0 ? ExactInt(5 * q * q - 4 * q) : ExactInt(5 * q * q - 6 * q)));
      rep.rows.push_back(std::move(row));
    }
    for (long long e = 3; e <= 6; ++e) {
      const ExactInt q = power_of(2, e);
      Row row;
      row.point = {{"item", "rees-of-m"}, {"n", ""}, {"e", str(e)}};
      row.formula = to_string(hk_m.evaluate(static_cast<int>(e)));
      row.oracle = to_string(dim1_oracle(o, 5, 2, hkrees::ReesSelector::rees_of_m, e));
      row.golden = to_string(ExactInt(e % 2 == 0 ? ExactInt(5 * q * q) : ExactInt(5 * q * q - 10)));
      rep.rows.push_back(std::move(row));
    }
    for (const auto& [name, hk] : {std::pair{"rees-of-x", hk_x}, std::pair{"rees-of-m", hk_m}})
      for (int c = 0; c < 2; ++c) {
        Row row;
        row.point = {{"item", std::string(name) + " poly"}, {"n", ""}, {"e", c ? "odd" : "even"}};
        row.formula = hk.residue(c).to_string("q");
        rep.rows.push_back(std::move(row));
      }
  } else if (o.target == "three-vars") {
    const auto n = parse_int_list(o.n.value_or("1,1,1"), "--n");
    if (n.size() != 3) throw UsageError("--n takes three exponents");
    for (int x : n)
      if (x < 1) throw UsageError("--n entries must be >= 1");
    const hkrees::ReesInstanceMonomial inst(n);
    check_monomial_cap(o, n, 2);
    rep.instance = {{"n", join(n)}, {"e0", to_string(inst.e0())}};
    rep.rows.push_back({{{"s", "2"}},
                        to_string(hkrees::cm_sop_hk(3, inst.e0(), 2)),
                        to_string(hkrees::rees_colength_monomial(inst, 2)),
                        to_string(ExactInt(23 * inst.e0()))});
  } else if (o.target == "xy-zn") {
    const ExactInt e0 = o.need_e0(1);
    rep.instance = {{"d", "2"}, {"e0", to_string(e0)}};
    const auto ss = o.s ? o.s_values() : parse_range("1..6", "--s");
    for (long long s : ss) {
      const ExactInt s3 = ExactInt(s) * s * s;
      rep.rows.push_back({{{"s", str(s)}},
                          to_string(hkrees::cm_sop_hk(2, e0, s)),
                          {},
                          to_string(ExactInt(e0 * (4 * s3 - s) / 3))});
    }
  } else {
    throw UsageError("unknown example '" + o.target + "'");
  }
  return rep;
}

// ---------------------------------------------------------------- output

struct Columns {
  std::vector<std::string> point;
  bool formula = false, oracle = false, golden = false, match = false;
};

Columns columns_of(const RunReport& rep) {
  Columns c;
  for (const auto& row : rep.rows) {
    for (const auto& [k, v] : row.point)
      if (std::find(c.point.begin(), c.point.end(), k) == c.point.end()) c.point.push_back(k);
    c.formula |= row.formula.has_value();
    c.oracle |= row.oracle.has_value();
    c.golden |= row.golden.has_value();
    c.match |= row.match().has_value();
  }
  return c;
}

std::string point_value(const Row& row, const std::string& key) {
  for (const auto& [k, v] : row.point)
    if (k == key) return v;
  return "";
}

std::vector<std::vector<std::string>> grid(const RunReport& rep, const Columns& c) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> header = c.point;
  if (c.formula) header.emplace_back("formula");
  if (c.oracle) header.emplace_back("oracle");
  if (c.golden) header.emplace_back("golden");
  if (c.match) header.emplace_back("match");
  out.push_back(header);
  for (const auto& row : rep.rows) {
    std::vector<std::string> line;
    for (const auto& k : c.point) line.push_back(point_value(row, k));
    if (c.formula) line.push_back(row.formula.value_or(""));
    if (c.oracle) line.push_back(row.oracle.value_or(""));
    if (c.golden) line.push_back(row.golden.value_or(""));
    if (c.match) {
      const auto m = row.match();
      line.emplace_back(m ? (*m ? "true" : "false") : "");
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::optional<bool> Row::match() const {
  std::vector<const std::string*> present;
  for (const auto* v : {&formula, &oracle, &golden})
    if (v->has_value()) present.push_back(&**v);
  if (present.size() < 2) return std::nullopt;
  for (const auto* v : present)
    if (*v != *present.front()) return false;
  return true;
}

bool RunReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match().value_or(true); });
}

void emit(const RunReport& rep, Format format, std::ostream& out) {
  const Columns cols = columns_of(rep);
  if (format == Format::json) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json inst = ordered_json::object();
    inst["mode"] = rep.mode;
    inst["target"] = rep.target;
    for (const auto& [k, v] : rep.instance) inst[k] = v;
    j["instance"] = inst;
    j["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json r;
      ordered_json pt = ordered_json::object();
      for (const auto& [k, v] : row.point) pt[k] = v;
      r["point"] = pt;
      r["formula"] = row.formula ? ordered_json(*row.formula) : ordered_json(nullptr);
      r["oracle"] = row.oracle ? ordered_json(*row.oracle) : ordered_json(nullptr);
      if (cols.golden) r["golden"] = row.golden ? ordered_json(*row.golden) : ordered_json(nullptr);
      const auto m = row.match();
      r["match"] = m ? ordered_json(*m) : ordered_json(nullptr);
      j["rows"].push_back(r);
    }
    j["verdict"] = rep.pass() ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return;
  }
  const auto g = grid(rep, cols);
  if (format == Format::csv) {
    for (const auto& line : g) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_field(line[i]);
      out << "\n";
    }
    return;
  }
  out << rep.mode << " " << rep.target << "\n";
  for (const auto& [k, v] : rep.instance) out << "  " << k << ": " << v << "\n";
  std::vector<std::size_t> width(g.front().size(), 0);
  for (const auto& line : g)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : g) {
    out << " ";
    for (std::size_t i = 0; i < line.size(); ++i) out << " " << std::left << std::setw(static_cast<int>(width[i])) << line[i];
    out << "\n";
  }
  out << "verdict: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hilbert-Kunz functions of Rees algebras: closed forms and colength oracles", "hk"};
  app.add_option("mode", o.mode, "formula | oracle | compare | fit | example")->required();
  app.add_option("target", o.target, "what to evaluate, e.g. cm-sop, dim1, monomial, fermat5")->required();
  app.add_option("--d", o.d, "dimension");
  app.add_option("--e0", o.e0, "multiplicity e0");
  app.add_option("--e1", o.e1, "Chern number e1");
  app.add_option("--r", o.r, "reduction number");
  app.add_option("--rho", o.rho, "postulation number");
  app.add_option("--lengths", o.lengths, "length(R/I^n) for n = 0, 1, ...");
  app.add_option("--alpha", o.alpha, "periodic alpha sequences, ';' between n, ',' between residues");
  app.add_option("--facets", o.facets, "facet count of a Stanley-Reisner complex");
  app.add_option("--s,--s-range", o.s, "s values: 3, 1,2,5 or 2..5");
  app.add_option("--e,--e-range", o.e, "e values for q = p^e");
  app.add_option("--exponents", o.exponents, "a_1,...,a_d of I = (x_1^a_1, ..., x_d^a_d)");
  app.add_option("--n", o.n, "exponents for the three-variable example");
  app.add_option("--n-max", o.n_max, "largest n of the alpha table");
  app.add_option("--a", o.a, "hypersurface exponent in x^a - y^a");
  app.add_option("--p", o.p, "characteristic");
  app.add_option("--variant", o.variant, "rees-of-x | rees-of-m");
  app.add_option("--preset", o.preset, "fermat5");
  app.add_option("--ideal", o.ideal, "monomial ideal, e.g. 2,0;1,3;0,4");
  app.add_option("--period", o.period, "quasi-polynomial period for fitting");
  app.add_option("--degree", o.degree, "polynomial degree for fitting");
  app.add_option("--holdout", o.holdout, "held-out samples per residue class");
  app.add_option("--format", o.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--force", o.force, "lift the resource cap");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "hk: " << e.what() << "\n";
    return exit_invalid;
  }

  const Format format = o.format == "csv" ? Format::csv : o.format == "json" ? Format::json : Format::table;
  try {
    RunReport rep;
    if (o.mode == "formula")
      rep = cmd_formula(o);
    else if (o.mode == "oracle")
      rep = cmd_oracle(o);
    else if (o.mode == "compare")
      rep = cmd_compare(o);
    else if (o.mode == "fit")
      rep = cmd_fit(o);
    else if (o.mode == "example")
      rep = cmd_example(o);
    else
      throw UsageError("unknown mode '" + o.mode + "'");
    emit(rep, format, out);
    return rep.pass() ? exit_pass : exit_mismatch;
  } catch (const ResourceCap& e) {
    err << "hk: " << e.what() << "\n";
    return exit_resource;
  } catch (const hkrees::InconsistentSamples& e) {
    err << "hk: " << e.what() << "\n";
    return exit_mismatch;
  } catch (const hkrees::NonPolynomialSamples& e) {
    err << "hk: " << e.what() << "\n";
    return exit_mismatch;
  } catch (const hkrees::StabilizationFailure& e) {
    err << "hk: " << e.what() << "\n";
    return exit_mismatch;
  } catch (const std::exception& e) {
    // UsageError, invalid_argument, InfiniteColength, InsufficientSamples, ...
    err << "hk: " << e.what() << "\n";
    return exit_invalid;
  }
}

}  // namespace hkcli
