#pragma once

#include "partition.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hrg {

enum class Orientation { Horizontal, Vertical };

inline const char* to_string(Orientation o) { return o == Orientation::Horizontal ? "H" : "V"; }

struct Block {
  Orientation orientation = Orientation::Horizontal;
  std::vector<BoxCoord> boxes;  // inner end first, entries x, x+1, ..., y
  Rational entryLow, entryHigh;
  int size() const { return static_cast<int>(boxes.size()); }
};

struct SplitResult {
  std::vector<Block> blocks;  // selection order
  Bipartition bipartition;
};

namespace detail {
inline void require_nonnegative(const Rational& m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
}

inline Bipartition from_lengths(const std::vector<int>& h, const std::vector<int>& v) { return {Partition(h), Partition(v)}; }
}  // namespace detail

// Greedy splitting map. Undefined (nullopt) exactly on non-residual shapes.
inline std::optional<SplitResult> split(const Partition& lambda, const Rational& m) {
  detail::require_nonnegative(m);
  const long long D = to_ll(den(m)), M = to_ll(num(m));
  const int rows = lambda.length();
  // signed scaled value (c+m)*D, and membership of the remaining region
  std::vector<std::vector<char>> alive(rows + 1);
  for (int r = 1; r <= rows; ++r) alive[r].assign(lambda[r] + 1, 1);
  auto val = [&](int r, int c) { return static_cast<long long>(c - r) * D + M; };
  auto live = [&](int r, int c) { return r >= 1 && r <= rows && c >= 1 && c <= lambda[r] && alive[r][c]; };

  SplitResult res;
  std::vector<int> h, v;
  int remaining = lambda.weight();
  while (remaining > 0) {
    long long best = -1;
    int count = 0;
    BoxCoord at{};
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= lambda[r]; ++c) {
        if (!alive[r][c]) continue;
        long long e = std::llabs(val(r, c));
        if (e > best) {
          best = e;
          count = 1;
          at = {r, c};
        } else if (e == best) {
          ++count;
        }
      }
    if (count > 1) return std::nullopt;
    long long s = val(at.row, at.col);
    if (s == 0) return std::nullopt;
    Block blk;
    blk.orientation = s > 0 ? Orientation::Horizontal : Orientation::Vertical;
    std::vector<BoxCoord> run{at};
    BoxCoord cur = at;
    for (;;) {
      BoxCoord nb = s > 0 ? BoxCoord{cur.row, cur.col - 1} : BoxCoord{cur.row - 1, cur.col};
      if (!live(nb.row, nb.col) || std::llabs(val(nb.row, nb.col)) != std::llabs(val(cur.row, cur.col)) - D) break;
      run.push_back(nb);
      cur = nb;
    }
    for (auto b : run) alive[b.row][b.col] = 0;
    remaining -= static_cast<int>(run.size());
    blk.boxes.assign(run.rbegin(), run.rend());
    blk.entryLow = entry(blk.boxes.front(), m);
    blk.entryHigh = entry(blk.boxes.back(), m);
    (blk.orientation == Orientation::Horizontal ? h : v).push_back(blk.size());
    res.blocks.push_back(std::move(blk));
  }
  res.bipartition = detail::from_lengths(h, v);
  return res;
}

// Count of roots with alpha(gamma) = k_alpha minus count with alpha(gamma) = 0, over B_l.
inline long long residual_defect(const std::vector<Rational>& gamma, const Rational& m) {
  Scaled g = scale_to_integers(gamma, den(m));
  const long long D = g.scale, kShort = to_ll(num(m) * (D / den(m))), kLong = D;
  const std::size_t l = g.v.size();
  long long p = 0, z = 0;
  for (std::size_t i = 0; i < l; ++i) {
    for (int s : {1, -1}) {
      long long a = s * g.v[i];
      p += a == kShort;
      z += a == 0;
    }
    for (std::size_t j = i + 1; j < l; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          long long a = s1 * g.v[i] + s2 * g.v[j];
          p += a == kLong;
          z += a == 0;
        }
  }
  return p - z;
}

inline std::vector<Rational> residual_coordinates(const Partition& lambda, const Rational& m) {
  std::vector<Rational> g;
  for (auto b : boxes(lambda)) g.push_back(Rational(content(b)) + m);
  return g;
}

inline bool is_residual_point(const Partition& lambda, const Rational& m) {
  if (lambda.empty()) throw std::invalid_argument("residual test needs l >= 1");
  return residual_defect(residual_coordinates(lambda, m), m) == lambda.weight();
}

struct CentralCharacter {
  std::vector<Rational> exponents;
};

inline CentralCharacter central_character(const Partition& kappa, const Partition& mu, const Rational& m) {
  if (!mu.empty() && !is_residual_point(mu, m)) throw std::invalid_argument("mu " + mu.str() + " is not residual at m=" + to_string(m));
  CentralCharacter cc;
  for (int p : kappa.parts()) {
    auto s = strip(p);
    cc.exponents.insert(cc.exponents.end(), s.signedEntries.begin(), s.signedEntries.end());
  }
  for (auto& g : residual_coordinates(mu, m)) cc.exponents.push_back(g);
  return cc;
}

inline bool validate_datum(int n, const Rational& m, const Partition& kappa, const Partition& mu) {
  if (m < 0) return false;
  if (kappa.weight() + mu.weight() != n) return false;
  return mu.empty() || is_residual_point(mu, m);
}

// Orbit-level normal form used to seed Springer correspondents. The blocks are
// read off the entry multiset alone: first the rows above the zero diagonal, then
// alternately a column below it and a row starting next to it.
struct NormalBlock {
  Orientation orientation;
  Rational entryLow, entryHigh;
};

struct NormalForm {
  std::vector<NormalBlock> blocks;
  Bipartition bipartition;
};

inline std::optional<NormalForm> normal_form(const Partition& lambda, const Rational& m) {
  detail::require_nonnegative(m);
  std::map<Rational, int> left;
  for (auto& e : entry_multiset(lambda, m)) ++left[e];
  int remaining = lambda.weight();
  Integer k0 = num(m) / den(m);
  if (!is_integer(m)) k0 += 1;
  const Rational vlow = Rational(k0) - m, hlow = 1 - vlow;
  NormalForm nf;
  std::vector<int> h, v;
  for (Integer i = 1; remaining > 0; ++i) {
    while (left.rbegin()->second == 0) left.erase(std::prev(left.end()));
    const Rational y = left.rbegin()->first;
    NormalBlock b;
    if (i <= k0) {
      b = {Orientation::Horizontal, m - Rational(i) + 1, y};
    } else {
      bool vert = ((i - k0) % 2) == 1;
      b = {vert ? Orientation::Vertical : Orientation::Horizontal, vert ? vlow : hlow, y};
    }
    if (b.entryLow > y) return std::nullopt;
    int len = 0;
    for (Rational e = b.entryLow; e <= y; e += 1, ++len) {
      auto it = left.find(e);
      if (it == left.end() || it->second == 0) return std::nullopt;
      --it->second;
    }
    remaining -= len;
    (b.orientation == Orientation::Horizontal ? h : v).push_back(len);
    nf.blocks.push_back(b);
  }
  nf.bipartition = detail::from_lengths(h, v);
  return nf;
}

}  // namespace hrg
