#pragma once

#include "parallel.hpp"
#include "symbols.hpp"

#include <chrono>
#include <cstdlib>
#include <string>
#include <vector>

namespace hrg {

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string reproducer;  // first failing case
  double seconds = 0;
  bool ok() const { return failures == 0; }
};

inline std::vector<Rational> half_integer_range(int twiceMax) {
  std::vector<Rational> ms;
  for (int k = 0; k <= twiceMax; ++k) ms.push_back(half(k));
  return ms;
}

// Valid data (kappa, mu) of rank n at parameter m, mu residual or empty.
inline std::vector<InductionDatum> enumerate_data(int n, const Rational& m) {
  std::vector<InductionDatum> out;
  for (int l = 0; l <= n; ++l)
    for (const auto& mu : enumerate_partitions(l)) {
      if (l > 0 && !is_residual_point(mu, m)) continue;
      for (const auto& kappa : enumerate_partitions(n - l)) out.push_back({n, m, kappa, mu});
    }
  return out;
}

inline std::string describe(const InductionDatum& xi) {
  return "n=" + std::to_string(xi.n) + " m=" + to_string(xi.m) + " kappa=" + xi.kappa.str() + " mu=" + xi.mu.str();
}

inline int bound_from_env(int fallback) {
  if (const char* s = std::getenv("HECKE_RGROUP_BOUND_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return fallback;
}

namespace detail {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

// Runs check(i) over count cases; an empty string means pass.
template <class F>
SuiteResult run_cases(std::string name, std::size_t count, unsigned jobs, F check) {
  Timer t;
  auto msgs = parallel_map<std::string>(count, jobs, check);
  SuiteResult r{std::move(name)};
  r.cases = static_cast<long long>(count);
  for (auto& m : msgs)
    if (!m.empty()) {
      if (!r.failures) r.reproducer = m;
      ++r.failures;
    }
  r.seconds = t.seconds();
  return r;
}

}  // namespace detail

// split defined <=> root-count residual test
inline SuiteResult suite_residual(int maxL, int twiceMaxM, unsigned jobs = 1) {
  struct Case {
    Partition lam;
    Rational m;
  };
  std::vector<Case> cases;
  for (int l = 1; l <= maxL; ++l)
    for (const auto& lam : enumerate_partitions(l))
      for (const auto& m : half_integer_range(twiceMaxM)) cases.push_back({lam, m});
  return detail::run_cases("residual", cases.size(), jobs, [&](std::size_t i) -> std::string {
    const auto& c = cases[i];
    bool s = split(c.lam, c.m).has_value(), r = is_residual_point(c.lam, c.m);
    if (s == r) return {};
    return "lambda=" + c.lam.str() + " m=" + to_string(c.m) + " split " + (s ? "defined" : "undefined") + " residual " + (r ? "true" : "false");
  });
}

// can_glue <=> direct order 0 <=> geometric extension exists, and blockwise = direct
inline SuiteResult suite_gluing(int maxP, int maxL, int twiceMaxM, unsigned jobs = 1) {
  struct Case {
    Partition mu;
    Rational m;
  };
  std::vector<Case> cases;
  for (int l = 0; l <= maxL; ++l)
    for (const auto& mu : enumerate_partitions(l))
      for (const auto& m : half_integer_range(twiceMaxM))
        if (l == 0 || is_residual_point(mu, m)) cases.push_back({mu, m});
  auto r = detail::run_cases("gluing", cases.size(), jobs, [&](std::size_t i) -> std::string {
    const auto& c = cases[i];
    auto sr = split(c.mu, c.m);
    for (int p = 1; p <= maxP; ++p) {
      int direct = pole_order_short_direct(p, c.mu, c.m);
      int blockwise = pole_order_short_blockwise(p, *sr, c.m);
      bool cg = can_glue(p, c.mu, c.m);
      bool geo = !glue_strip_geometric(c.mu, p, c.m).empty();
      if (direct != blockwise || cg != (direct == 0) || cg != geo || (direct != 0 && direct != 1))
        return "p=" + std::to_string(p) + " mu=" + c.mu.str() + " m=" + to_string(c.m) + " can_glue=" + std::to_string(cg) +
               " direct=" + std::to_string(direct) + " blockwise=" + std::to_string(blockwise) + " geometric=" + std::to_string(geo);
    }
    return {};
  });
  r.cases *= maxP;
  return r;
}

inline SuiteResult suite_pairs(int maxP) {
  return detail::run_cases("pairs", static_cast<std::size_t>(maxP * maxP * 2), 1, [&](std::size_t i) -> std::string {
    int p1 = static_cast<int>(i / (2 * maxP)) + 1, p2 = static_cast<int>(i / 2 % maxP) + 1;
    Sign s = i % 2 ? Sign::Minus : Sign::Plus;
    int o = pole_order_pair(p1, p2, s);
    if (o == (p1 == p2 ? 1 : 0)) return {};
    return "p1=" + std::to_string(p1) + " p2=" + std::to_string(p2) + (s == Sign::Plus ? " +" : " -") + " order=" + std::to_string(o);
  });
}

inline std::vector<InductionDatum> sweep_data(int maxN, int twiceMaxM) {
  std::vector<InductionDatum> data;
  for (int n = 1; n <= maxN; ++n)
    for (const auto& m : half_integer_range(twiceMaxM))
      for (auto& xi : enumerate_data(n, m)) data.push_back(std::move(xi));
  return data;
}

// brute-force R(xi) and W_{xi,xi} against the constructed R-group
inline SuiteResult suite_oracle(int maxN, int twiceMaxM, unsigned jobs = 1) {
  auto data = sweep_data(maxN, twiceMaxM);
  return detail::run_cases("oracle", data.size(), jobs, [&](std::size_t i) -> std::string {
    const auto& xi = data[i];
    auto rg = r_group(xi);
    auto bf = brute_force(xi, maxN);
    std::string why;
    if (!is_elementary_abelian(bf.R)) why += " R not elementary abelian;";
    if (bf.R.size() != (std::size_t{1} << rg.d)) why += " |R|=" + std::to_string(bf.R.size()) + " d=" + std::to_string(rg.d) + ";";
    for (const auto& g : rg.generators)
      if (!std::binary_search(bf.R.begin(), bf.R.end(), g)) why += " generator " + g.word() + " missing;";
    auto w0 = restricted_root_system(xi).weyl_group_order();
    if (bf.wCount != w0 * rg.componentCount) why += " |W|=" + std::to_string(bf.wCount) + " |W0|*2^d=" + std::to_string(w0 * rg.componentCount) + ";";
    return why.empty() ? why : describe(xi) + why;
  });
}

// |Sigma(W0 r_L)| = 2^d |Sigma(W_L r_L)|, interval counts, and the m=1 quotient
inline SuiteResult suite_springer(int maxN, int twiceMaxM, unsigned jobs = 1) {
  auto data = sweep_data(maxN, twiceMaxM);
  return detail::run_cases("springer", data.size(), jobs, [&](std::size_t i) -> std::string {
    const auto& xi = data[i];
    auto v = variant_for(xi.m);
    const int d = static_cast<int>(gluable_lengths(xi).size());
    auto full = springer_correspondents(xi);
    auto part = residual_class(xi.mu, v);
    std::string why;
    if (full.members.size() != (std::size_t{1} << d) * part.members.size())
      why += " |Sigma|=" + std::to_string(full.members.size()) + " seed=" + std::to_string(part.members.size()) + " d=" + std::to_string(d) + ";";
    if (similarity_class(*full.members.begin(), v).members != full.members) why += " not a similarity class;";
    int If = interval_count(full), Ip = interval_count(part);
    if (If != Ip + d) why += " intervals " + std::to_string(If) + " vs " + std::to_string(Ip) + "+" + std::to_string(d) + ";";
    if (xi.m == 1 && If >= 1 && Ip >= 1) {
      auto a = component_group_order_m1(symbol(*full.members.begin(), v));
      auto b = component_group_order_m1(symbol(*part.members.begin(), v));
      if (a != (b << d)) why += " A(u) quotient " + std::to_string(a) + "/" + std::to_string(b) + ";";
    }
    return why.empty() ? why : describe(xi) + why;
  });
}

}  // namespace hrg
