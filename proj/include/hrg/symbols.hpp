#pragma once

#include "rgroup.hpp"
#include "splitting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrg {

struct SymbolVariant {
  enum Kind { IntM, PlusZero, MinusZero, HalfM } kind = IntM;
  Rational m;

  // l(top) - l(bottom)
  int defect() const {
    if (kind == HalfM) {
      Rational a = abs(m) + Rational(1, 2);
      int v = to_ll(num(a));
      return m > 0 ? v : -v;
    }
    return static_cast<int>(to_ll(num(m)));
  }
  int bottom_offset() const { return kind == HalfM ? 1 : 0; }
  std::string str() const {
    switch (kind) {
      case PlusZero: return "+0";
      case MinusZero: return "-0";
      default: return to_string(m);
    }
  }
  bool operator==(const SymbolVariant&) const = default;
};

// The variants attached to a parameter: two at m = 0, one otherwise.
inline std::vector<SymbolVariant> variants_for(const Rational& m) {
  if (m == 0) return {{SymbolVariant::PlusZero, 0}, {SymbolVariant::MinusZero, 0}};
  if (is_integer(m)) return {{SymbolVariant::IntM, m}};
  if (is_half_integer(m)) return {{SymbolVariant::HalfM, m}};
  throw std::invalid_argument("symbols need m in (1/2)Z, got " + to_string(m));
}

inline SymbolVariant variant_for(const Rational& m) { return variants_for(m).front(); }

struct Symbol {
  SymbolVariant variant;
  std::vector<int> topRow, bottomRow;

  std::vector<int> entries() const {
    std::vector<int> e(topRow);
    e.insert(e.end(), bottomRow.begin(), bottomRow.end());
    std::sort(e.begin(), e.end());
    return e;
  }
  std::string str() const {
    auto row = [](const std::vector<int>& r) {
      std::string s = "(";
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
      return s + ")";
    };
    return row(topRow) + "/" + row(bottomRow);
  }
};

inline Symbol symbol(const Bipartition& b, const SymbolVariant& v) {
  std::vector<int> x(b.first.parts().rbegin(), b.first.parts().rend());
  std::vector<int> y(b.second.parts().rbegin(), b.second.parts().rend());
  const int d = v.defect();
  const int lb = std::max(static_cast<int>(y.size()), static_cast<int>(x.size()) - d);
  const int lt = lb + d;
  x.insert(x.begin(), lt - x.size(), 0);
  y.insert(y.begin(), lb - y.size(), 0);
  Symbol s{v, {}, {}};
  for (int i = 0; i < lt; ++i) s.topRow.push_back(x[i] + 2 * i);
  for (int i = 0; i < lb; ++i) s.bottomRow.push_back(y[i] + 2 * i + v.bottom_offset());
  return s;
}

inline bool similar(const Bipartition& a, const Bipartition& b, const SymbolVariant& v) {
  return symbol(a, v).entries() == symbol(b, v).entries();
}

namespace detail {
inline std::int64_t pair_min_sum(std::vector<int> e) {
  std::sort(e.begin(), e.end());
  std::int64_t s = 0;
  const auto n = static_cast<std::int64_t>(e.size());
  for (std::int64_t i = 0; i < n; ++i) s += e[i] * (n - 1 - i);
  return s;
}
}  // namespace detail

inline std::int64_t a_m(const Bipartition& b, const SymbolVariant& v) {
  Symbol s = symbol(b, v);
  std::vector<int> base;
  for (std::size_t i = 0; i < s.topRow.size(); ++i) base.push_back(2 * static_cast<int>(i));
  for (std::size_t i = 0; i < s.bottomRow.size(); ++i) base.push_back(2 * static_cast<int>(i) + v.bottom_offset());
  return detail::pair_min_sum(s.entries()) - detail::pair_min_sum(base);
}

struct CharacterSet {
  std::set<Bipartition> members;
  SymbolVariant variant;
};

// All members of P(n,2) whose symbols carry the same entries as that of b.
inline CharacterSet similarity_class(const Bipartition& b, const SymbolVariant& v) {
  const Symbol s = symbol(b, v);
  const auto lt = s.topRow.size();
  std::map<int, int> mult;
  for (int e : s.entries()) ++mult[e];
  std::vector<int> doubles, singles;
  for (auto [e, c] : mult) (c == 2 ? doubles : singles).push_back(e);
  CharacterSet out{{}, v};
  if (doubles.size() > lt) return out;
  const std::size_t k = lt - doubles.size();
  if (k > singles.size()) return out;
  std::vector<char> pick(singles.size(), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> top(doubles), bot(doubles);
    for (std::size_t i = 0; i < singles.size(); ++i) (pick[i] ? top : bot).push_back(singles[i]);
    std::sort(top.begin(), top.end());
    std::sort(bot.begin(), bot.end());
    auto unshift = [](const std::vector<int>& row, int off, std::vector<int>& parts) {
      int prev = 0;
      for (std::size_t i = 0; i < row.size(); ++i) {
        int p = row[i] - 2 * static_cast<int>(i) - off;
        if (p < prev) return false;
        parts.push_back(p);
        prev = p;
      }
      return true;
    };
    std::vector<int> xp, yp;
    if (!unshift(top, 0, xp) || !unshift(bot, v.bottom_offset(), yp)) continue;
    Bipartition c{Partition(xp), Partition(yp)};
    Symbol cs = symbol(c, v);
    if (cs.topRow == top && cs.bottomRow == bot) out.members.insert(c);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Every nu above lambda with nu/lambda a horizontal strip of size k.
inline std::vector<Partition> horizontal_strips(const Partition& lambda, int k) {
  std::vector<Partition> out;
  const auto& lp = lambda.parts();
  const int L = lambda.length();
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == L) {
      int cap = L > 0 ? lp[L - 1] : rem;
      if (rem <= cap) {
        auto nu = cur;
        if (rem > 0) nu.push_back(rem);
        out.emplace_back(nu);
      }
      return;
    }
    int cap = i > 0 ? lp[i - 1] - lp[i] : rem;
    for (int add = 0; add <= std::min(cap, rem); ++add) {
      cur.push_back(lp[i] + add);
      rec(i + 1, rem - add);
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

// Induction of (trivial of S_p) x b from W(B_p) x W(B_n) by the Pieri rule.
inline std::vector<Bipartition> pieri_induct(int p, const Bipartition& b) {
  std::set<Bipartition> out;
  for (int a = 0; a <= p; ++a)
    for (const auto& x : horizontal_strips(b.first, a))
      for (const auto& y : horizontal_strips(b.second, p - a)) out.insert({x, y});
  return {out.begin(), out.end()};
}

inline CharacterSet truncated_induct(const Partition& kappa, const CharacterSet& seed) {
  if (seed.members.empty()) throw std::invalid_argument("empty seed");
  CharacterSet cur = seed;
  for (int p : kappa.parts()) {
    std::set<Bipartition> cand;
    for (const auto& b : cur.members)
      for (auto& c : pieri_induct(p, b)) cand.insert(std::move(c));
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::set<Bipartition> keep;
    for (const auto& c : cand) {
      auto a = a_m(c, cur.variant);
      if (a > best) {
        best = a;
        keep.clear();
      }
      if (a == best) keep.insert(c);
    }
    cur.members = std::move(keep);
  }
  return cur;
}

// Seed class for the discrete series part.
inline CharacterSet residual_class(const Partition& mu, const SymbolVariant& v) {
  if (mu.empty()) return {{Bipartition{}}, v};
  auto nf = normal_form(mu, v.m);
  if (!nf) throw std::invalid_argument("mu " + mu.str() + " has no normal form at m=" + to_string(v.m));
  return similarity_class(nf->bipartition, v);
}

inline CharacterSet springer_correspondents(const InductionDatum& xi) {
  auto vs = variants_for(xi.m);
  CharacterSet res = truncated_induct(xi.kappa, residual_class(xi.mu, vs.front()));
  for (std::size_t i = 1; i < vs.size(); ++i) {
    auto other = truncated_induct(xi.kappa, residual_class(xi.mu, vs[i]));
    if (other.members != res.members) throw std::logic_error("+0 and -0 Springer correspondents disagree");
  }
  return res;
}

struct Interval {
  int lo, hi;
  bool operator==(const Interval&) const = default;
};

inline std::vector<Interval> intervals(const Symbol& s) {
  std::map<int, int> mult;
  for (int e : s.entries()) ++mult[e];
  std::vector<Interval> runs;
  for (auto [e, c] : mult) {
    if (c != 1) continue;
    if (!runs.empty() && runs.back().hi == e - 1)
      runs.back().hi = e;
    else
      runs.push_back({e, e});
  }
  if (s.variant.kind == SymbolVariant::HalfM && s.variant.m == Rational(1, 2))
    std::erase_if(runs, [](const Interval& r) { return r.lo == 0; });
  return runs;
}

inline int interval_count(const CharacterSet& cs) {
  return static_cast<int>(intervals(symbol(*cs.members.begin(), cs.variant)).size());
}

inline bool interval_count_check(const InductionDatum& xi) {
  auto v = variant_for(xi.m);
  int d = static_cast<int>(gluable_lengths(xi).size());
  return interval_count(springer_correspondents(xi)) == interval_count(residual_class(xi.mu, v)) + d;
}

inline std::uint64_t component_group_order_m1(const Symbol& s) {
  if (s.variant.kind != SymbolVariant::IntM || s.variant.m != 1) throw std::invalid_argument("component group order needs m = 1");
  auto I = static_cast<int>(intervals(s).size());
  return std::uint64_t{1} << std::max(I - 1, 0);
}

inline bool cardinality_check(const InductionDatum& xi) {
  auto v = variant_for(xi.m);
  auto d = gluable_lengths(xi).size();
  return springer_correspondents(xi).members.size() == (std::size_t{1} << d) * residual_class(xi.mu, v).members.size();
}

}  // namespace hrg
