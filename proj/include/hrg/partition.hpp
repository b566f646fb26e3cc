#pragma once

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrg {

// Parts are kept weakly decreasing; zero parts are dropped.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("negative part");
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](int row) const { return row >= 1 && row <= length() ? parts_[row - 1] : 0; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  // Displayed increasing.
  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) os << (it == parts_.rbegin() ? "" : ",") << *it;
    os << ')';
    return os.str();
  }

private:
  std::vector<int> parts_;
};

struct Bipartition {
  Partition first, second;
  int weight() const { return first.weight() + second.weight(); }
  auto operator<=>(const Bipartition&) const = default;
  bool operator==(const Bipartition&) const = default;
  std::string str() const { return "(" + first.str() + "," + second.str() + ")"; }
};

struct BoxCoord {
  int row = 1, col = 1;
  auto operator<=>(const BoxCoord&) const = default;
  bool operator==(const BoxCoord&) const = default;
};

inline int content(BoxCoord b) { return b.col - b.row; }

inline bool contains(const Partition& l, BoxCoord b) { return b.row >= 1 && b.col >= 1 && b.col <= l[b.row]; }

// Row-major.
inline std::vector<BoxCoord> boxes(const Partition& l) {
  std::vector<BoxCoord> out;
  out.reserve(l.weight());
  for (int r = 1; r <= l.length(); ++r)
    for (int c = 1; c <= l[r]; ++c) out.push_back({r, c});
  return out;
}

struct MTableau {
  Partition shape;
  Rational m;
  std::map<BoxCoord, Rational> entries;
};

inline Rational entry(BoxCoord b, const Rational& m) { return abs(Rational(content(b)) + m); }

inline MTableau m_tableau(const Partition& l, const Rational& m) {
  MTableau t{l, m, {}};
  for (auto b : boxes(l)) t.entries.emplace(b, entry(b, m));
  return t;
}

// Sorted multiset of the entries |c+m|.
inline std::vector<Rational> entry_multiset(const Partition& l, const Rational& m) {
  std::vector<Rational> out;
  for (auto b : boxes(l)) out.push_back(entry(b, m));
  std::sort(out.begin(), out.end());
  return out;
}

struct AStrip {
  int length = 0;
  std::vector<Rational> signedEntries;
  std::vector<Rational> absEntries;  // sorted ascending
  Rational z() const { return half(length - 1); }
};

inline AStrip strip(int p) {
  if (p < 1) throw std::invalid_argument("strip length must be positive");
  AStrip s{p, {}, {}};
  for (int k = 0; k < p; ++k) {
    Rational e = half(-(p - 1) + 2 * k);
    s.signedEntries.push_back(e);
    s.absEntries.push_back(abs(e));
  }
  std::sort(s.absEntries.begin(), s.absEntries.end());
  return s;
}

inline std::vector<BoxCoord> addable_boxes(const Partition& l) {
  std::vector<BoxCoord> out;
  for (int r = 1; r <= l.length() + 1; ++r)
    if (r == 1 || l[r - 1] > l[r]) out.push_back({r, l[r] + 1});
  return out;
}

inline Partition add_box(const Partition& l, BoxCoord b) {
  std::vector<int> p = l.parts();
  if (b.row == l.length() + 1)
    p.push_back(1);
  else
    ++p[b.row - 1];
  return Partition(std::move(p));
}

inline constexpr int kDefaultPartitionBound = 40;

namespace detail {
inline void partitions_rec(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, maxp); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Reverse lexicographic order, (n) first.
inline std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultPartitionBound) {
  if (n < 0) throw std::invalid_argument("negative weight");
  if (n > bound) throw std::out_of_range("partition weight " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

inline std::vector<Bipartition> enumerate_bipartitions(int n, int bound = kDefaultPartitionBound) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& x : enumerate_partitions(a, bound))
      for (const auto& y : enumerate_partitions(n - a, bound)) out.push_back({x, y});
  return out;
}

}  // namespace hrg
