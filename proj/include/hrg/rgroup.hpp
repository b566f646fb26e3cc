#pragma once

#include "cfun.hpp"
#include "splitting.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrg {

struct InductionDatum {
  int n = 0;
  Rational m;
  Partition kappa, mu;

  int l() const { return mu.weight(); }
  int rank() const { return kappa.length(); }
  // 0-based first coordinate of A-factor i (0-based)
  int block_start(int i) const {
    int a = 0;
    for (int k = 0; k < i; ++k) a += kappa.parts()[k];
    return a;
  }
};

// Throws std::invalid_argument naming the failed precondition.
inline InductionDatum make_datum(int n, const Rational& m, const Partition& kappa, const Partition& mu) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (kappa.weight() + mu.weight() != n)
    throw std::invalid_argument("|kappa| + |mu| = " + std::to_string(kappa.weight() + mu.weight()) + " differs from n = " + std::to_string(n));
  if (!mu.empty() && !is_residual_point(mu, m)) throw std::invalid_argument("mu " + mu.str() + " not residual at m=" + to_string(m));
  return {n, m, kappa, mu};
}

inline bool can_glue(int p, const Partition& mu, const Rational& m) {
  const Rational z = half(p - 1);
  if (!is_integer(z - m)) return false;
  if (mu.empty()) return m <= z;
  auto sr = split(mu, m);
  if (!sr) throw std::invalid_argument("mu not residual");
  const auto& bl = sr->blocks;
  auto count_low = [&](const Rational& x) {
    return std::count_if(bl.begin(), bl.end(), [&](const Block& b) { return b.entryLow == x; });
  };
  if (z == 0) return count_low(1) == (m > 0 ? 1 : 0) + count_low(0);
  for (const auto& b : bl)
    if (b.entryHigh == z) return false;
  return m <= z || count_low(z + 1) > 0;
}

// All mu' above mu whose new boxes carry exactly the absolute strip entries.
inline std::vector<Partition> glue_strip_geometric(const Partition& mu, int p, const Rational& m) {
  std::map<Rational, int> need;
  for (const auto& e : strip(p).absEntries) ++need[e];
  std::set<Partition> level{mu};
  for (int step = 0; step < p; ++step) {
    std::set<Partition> next;
    for (const auto& cur : level) {
      std::map<Rational, int> left = need;
      for (const auto& e : entry_multiset(cur, m)) --left[e];
      for (const auto& e : entry_multiset(mu, m)) ++left[e];
      for (auto b : addable_boxes(cur)) {
        auto it = left.find(entry(b, m));
        if (it != left.end() && it->second > 0) next.insert(add_box(cur, b));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

enum class FactorType { B, D, Empty };

inline const char* to_string(FactorType t) { return t == FactorType::B ? "B" : t == FactorType::D ? "D" : "Empty"; }

struct RootFactor {
  FactorType type;
  int rank;
  int length;  // common strip length of the class
};

inline std::uint64_t weyl_order(const RootFactor& f) {
  std::uint64_t fact = 1;
  for (int k = 2; k <= f.rank; ++k) fact *= k;
  switch (f.type) {
    case FactorType::B: return (std::uint64_t{1} << f.rank) * fact;
    case FactorType::D: return (std::uint64_t{1} << (f.rank - 1)) * fact;
    default: return 1;
  }
}

struct RestrictedRootSystem {
  int basisRank = 0;
  std::set<std::vector<int>> positiveRoots;  // coefficients on E_1..E_r
  std::vector<RootFactor> factors;

  std::uint64_t weyl_group_order() const {
    std::uint64_t o = 1;
    for (const auto& f : factors) o *= weyl_order(f);
    return o;
  }
};

inline RestrictedRootSystem restricted_root_system(const InductionDatum& xi) {
  const auto& k = xi.kappa.parts();
  const int r = static_cast<int>(k.size());
  RestrictedRootSystem rs;
  rs.basisRank = r;
  std::vector<char> glue(r);
  for (int i = 0; i < r; ++i) glue[i] = can_glue(k[i], xi.mu, xi.m);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (k[i] != k[j]) continue;
      for (int s : {1, -1}) {
        std::vector<int> v(r, 0);
        v[i] = 1;
        v[j] = s;
        rs.positiveRoots.insert(v);
      }
    }
    if (!glue[i]) {
      std::vector<int> v(r, 0);
      v[i] = 1;
      rs.positiveRoots.insert(v);
    }
  }
  for (int i = 0; i < r;) {
    int j = i;
    while (j < r && k[j] == k[i]) ++j;
    int cnt = j - i;
    if (!glue[i])
      rs.factors.push_back({FactorType::B, cnt, k[i]});
    else
      rs.factors.push_back({cnt == 1 ? FactorType::Empty : FactorType::D, cnt, k[i]});
    i = j;
  }
  return rs;
}

// w(e_i) = sign(images[i]) * e_|images[i]|, 1-based.
struct SignedPermutation {
  std::vector<int> images;

  static SignedPermutation identity(int n) {
    SignedPermutation w;
    for (int i = 1; i <= n; ++i) w.images.push_back(i);
    return w;
  }
  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const { return *this == identity(size()); }

  // (a * b)(e_i) = a(b(e_i))
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    SignedPermutation c;
    c.images.resize(b.images.size());
    for (std::size_t i = 0; i < b.images.size(); ++i) {
      int t = b.images[i];
      int u = a.images[std::abs(t) - 1];
      c.images[i] = t > 0 ? u : -u;
    }
    return c;
  }
  SignedPermutation inverse() const {
    SignedPermutation c;
    c.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      int t = images[i];
      c.images[std::abs(t) - 1] = t > 0 ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1;
    }
    return c;
  }
  template <class T>
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      int t = images[i];
      if (t > 0)
        out[t - 1] += v[i];
      else
        out[-t - 1] -= v[i];
    }
    return out;
  }

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

  // Signed cycle notation, fixed points omitted; "()" for the identity. A cycle
  // that returns to its start with sign -1 carries a trailing "-".
  std::string word() const {
    std::ostringstream os;
    std::vector<char> seen(images.size());
    bool any = false;
    for (std::size_t s = 0; s < images.size(); ++s) {
      if (seen[s]) continue;
      if (images[s] == static_cast<int>(s) + 1) {
        seen[s] = 1;
        continue;
      }
      any = true;
      os << '(';
      int cur = static_cast<int>(s) + 1;
      int sign = 1;
      bool first = true;
      while (!seen[cur - 1]) {
        seen[cur - 1] = 1;
        os << (first ? "" : " ") << sign * cur;
        first = false;
        int t = images[cur - 1];
        sign *= t > 0 ? 1 : -1;
        cur = std::abs(t);
      }
      os << ')';
      if (sign < 0) os << '-';
    }
    return any ? os.str() : "()";
  }
  std::string table() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < images.size(); ++i)
      os << (i ? " " : "") << "e" << i + 1 << "->" << (images[i] < 0 ? "-" : "") << "e" << std::abs(images[i]);
    return os.str();
  }
};

inline std::vector<int> gluable_lengths(const InductionDatum& xi) {
  std::vector<int> out;
  for (int p : xi.kappa.parts())
    if ((out.empty() || out.back() != p) && can_glue(p, xi.mu, xi.m)) out.push_back(p);
  return out;
}

// Involution flipping the last A-factor of the given length class.
inline SignedPermutation generator(const InductionDatum& xi, int classIndex) {
  auto gl = gluable_lengths(xi);
  if (classIndex < 0 || classIndex >= static_cast<int>(gl.size())) throw std::out_of_range("length class is not gluable");
  const int len = gl[classIndex];
  const auto& k = xi.kappa.parts();
  int last = -1;
  for (int i = 0; i < static_cast<int>(k.size()); ++i)
    if (k[i] == len) last = i;
  const int a = xi.block_start(last);
  auto w = SignedPermutation::identity(xi.n);
  for (int j = 1; j <= len; ++j) w.images[a + j - 1] = -(a + len + 1 - j);
  return w;
}

struct ComponentLabel {
  std::vector<int> J;  // glued lengths, decreasing
  std::optional<Partition> muJ;
  bool ambiguous = false;  // some gluing step had several extensions
};

struct RGroupResult {
  int d = 0;
  std::vector<int> gluableLengths;
  std::vector<SignedPermutation> generators;
  std::uint64_t componentCount = 1;
  std::vector<ComponentLabel> componentLabels;
};

inline std::vector<ComponentLabel> component_labels(const InductionDatum& xi, const std::vector<int>& gl) {
  std::vector<ComponentLabel> out;
  const int d = static_cast<int>(gl.size());
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    ComponentLabel lab;
    Partition cur = xi.mu;
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      if (!(mask >> i & 1)) continue;
      lab.J.push_back(gl[i]);
      auto ext = glue_strip_geometric(cur, gl[i], xi.m);
      if (ext.empty()) {
        ok = false;
        break;
      }
      lab.ambiguous |= ext.size() > 1;
      cur = ext.front();
    }
    if (ok) lab.muJ = cur;
    out.push_back(std::move(lab));
  }
  return out;
}

inline RGroupResult r_group(const InductionDatum& xi) {
  RGroupResult res;
  res.gluableLengths = gluable_lengths(xi);
  res.d = static_cast<int>(res.gluableLengths.size());
  for (int i = 0; i < res.d; ++i) res.generators.push_back(generator(xi, i));
  res.componentCount = std::uint64_t{1} << res.d;
  res.componentLabels = component_labels(xi, res.gluableLengths);
  return res;
}

inline constexpr int kDefaultOracleBound = 8;

struct BruteForceResult {
  std::uint64_t wCount = 0;              // |W_{xi,xi}|
  std::vector<SignedPermutation> R;      // sorted
};

// Enumerates w in W(B_n) with w(Pi_L) = Pi_L and w(gamma) = gamma modulo the
// orthogonal complement of span(R_L). The visitor sees the 1-based image table.
inline void for_each_W_xi_xi(const InductionDatum& xi, int bound, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = xi.n;
  if (n > bound) throw std::out_of_range("n = " + std::to_string(n) + " exceeds oracle bound " + std::to_string(bound));
  const auto& k = xi.kappa.parts();
  const int r = static_cast<int>(k.size());
  const int a = xi.kappa.weight();
  Scaled g = scale_to_integers(central_character(xi.kappa, xi.mu, xi.m).exponents);
  std::vector<int> blockOf(n, -1), blockLen(r);
  for (int i = 0, c = 0; i < r; ++i) {
    blockLen[i] = k[i];
    for (int j = 0; j < k[i]; ++j) blockOf[c++] = i;
  }
  // simple[t][u]: e_t - e_u is a simple root of L
  std::vector<std::vector<char>> simple(n, std::vector<char>(n, 0));
  std::vector<char> pairWithPrev(n, 0);
  for (int t = 0; t + 1 < n; ++t) {
    bool sameA = t + 1 < a && blockOf[t] == blockOf[t + 1];
    bool inB = t >= a;
    if (sameA || inB) simple[t][t + 1] = pairWithPrev[t + 1] = 1;
  }
  const bool shortRoot = xi.l() > 0;
  std::vector<long long> gsum(r, 0);
  for (int t = 0; t < a; ++t) gsum[blockOf[t]] += g.v[t];

  std::vector<int> img(n);
  std::vector<char> used(n, 0);
  std::vector<long long> wg(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<long long> wsum(r, 0);
      for (int t = 0; t < a; ++t) wsum[blockOf[t]] += wg[t];
      for (int t = 0; t < a; ++t) {
        long long kk = blockLen[blockOf[t]];
        if (kk * wg[t] - wsum[blockOf[t]] != kk * g.v[t] - gsum[blockOf[t]]) return;
      }
      visit(img);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      for (int s : {1, -1}) {
        if (pairWithPrev[i]) {
          int tp = img[i - 1], up = std::abs(tp) - 1;
          bool ok = tp > 0 ? s > 0 && simple[up][t] : s < 0 && simple[t][up];
          if (!ok) continue;
        }
        if (shortRoot && i == n - 1 && !(t == n - 1 && s > 0)) continue;
        if (t >= a && s * g.v[i] != g.v[t]) continue;
        used[t] = 1;
        img[i] = s * (t + 1);
        wg[t] = s * g.v[i];
        rec(i + 1);
        used[t] = 0;
        wg[t] = 0;
      }
    }
  };
  rec(0);
}

inline BruteForceResult brute_force(const InductionDatum& xi, int bound = kDefaultOracleBound) {
  const auto rs = restricted_root_system(xi);
  const int r = rs.basisRank;
  const int a = xi.kappa.weight();
  std::vector<int> first(r), blockOf(xi.n, -1);
  for (int i = 0; i < r; ++i) {
    first[i] = xi.block_start(i);
    for (int j = 0; j < xi.kappa.parts()[i]; ++j) blockOf[first[i] + j] = i;
  }
  // base-5 keys of positive restricted roots
  auto key = [&](const std::vector<int>& v) {
    long long kk = 0;
    for (int c : v) kk = kk * 5 + (c + 2);
    return kk;
  };
  long long space = 1;
  for (int i = 0; i < r; ++i) space *= 5;
  std::vector<char> isPos(space, 0);
  std::vector<std::vector<int>> pos(rs.positiveRoots.begin(), rs.positiveRoots.end());
  for (const auto& v : pos) isPos[key(v)] = 1;

  BruteForceResult res;
  std::vector<int> v(r);
  for_each_W_xi_xi(xi, bound, [&](const std::vector<int>& img) {
    ++res.wCount;
    for (const auto& root : pos) {
      std::fill(v.begin(), v.end(), 0);
      bool bad = false;
      for (int i = 0; i < r && !bad; ++i) {
        if (!root[i]) continue;
        int t = img[first[i]];
        int tt = std::abs(t) - 1;
        if (tt >= a) continue;
        int c = v[blockOf[tt]] + root[i] * (t > 0 ? 1 : -1);
        if (c < -2 || c > 2) bad = true;
        v[blockOf[tt]] = c;
      }
      if (bad || !isPos[key(v)]) return;
    }
    res.R.push_back(SignedPermutation{img});
  });
  std::sort(res.R.begin(), res.R.end());
  return res;
}

inline std::vector<SignedPermutation> brute_force_W_xi_xi(const InductionDatum& xi, int bound = kDefaultOracleBound) {
  std::vector<SignedPermutation> out;
  for_each_W_xi_xi(xi, bound, [&](const std::vector<int>& img) { out.push_back(SignedPermutation{img}); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SignedPermutation> brute_force_R(const InductionDatum& xi, int bound = kDefaultOracleBound) { return brute_force(xi, bound).R; }

inline bool is_elementary_abelian(const std::vector<SignedPermutation>& G) {
  if (G.empty()) return false;
  const int n = G.front().size();
  std::set<SignedPermutation> S(G.begin(), G.end());
  if (!S.count(SignedPermutation::identity(n))) return false;
  std::size_t sz = S.size();
  if (sz & (sz - 1)) return false;
  for (const auto& x : S) {
    if (!(x * x).is_identity()) return false;
    for (const auto& y : S)
      if (!S.count(x * y)) return false;
  }
  return true;
}

struct TypeBLabels {
  Rational k1, k2;
  Rational m() const { return k2 / k1; }
};

// Labels of the C_n root datum to those of B_n: the long roots +-2e_i become +-e_i.
inline TypeBLabels convert_C_labels(const Rational& k1c, const Rational& k2c) {
  if (k1c == 0) throw std::invalid_argument("k1 must be nonzero");
  return {k1c, k2c / 2};
}

}  // namespace hrg
