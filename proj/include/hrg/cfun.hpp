#pragma once

#include "splitting.hpp"

#include <algorithm>
#include <vector>

namespace hrg {

// prod(1 - q^a) / prod(1 - q^b) at generic real q > 1.
struct FactorProduct {
  std::vector<Rational> numeratorExponents;
  std::vector<Rational> denominatorExponents;

  void add(const Rational& a, const Rational& b) {
    numeratorExponents.push_back(a);
    denominatorExponents.push_back(b);
  }
};

// Positive: pole order. Negative: zero order.
inline int order(const FactorProduct& fp) {
  auto zeros = [](const std::vector<Rational>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x == 0; }));
  };
  return zeros(fp.denominatorExponents) - zeros(fp.numeratorExponents);
}

enum class Sign { Plus, Minus };

inline FactorProduct pair_factors(int p1, int p2, Sign sign) {
  FactorProduct fp;
  for (int d1 = 1; d1 <= p1; ++d1)
    for (int d2 = 1; d2 <= p2; ++d2) {
      Rational e = sign == Sign::Plus ? half(-(p1 - 1)) + (d1 - 1) + half(-(p2 - 1)) + (d2 - 1)
                                      : half(p1 - p2) - (d1 - d2);
      fp.add(e - 1, e);
    }
  return fp;
}

inline int pole_order_pair(int p1, int p2, Sign sign) { return order(pair_factors(p1, p2, sign)); }

// Factors coming from the A-factor alone: the short root against the strip, and
// the long roots inside the strip folded onto it.
inline FactorProduct a_part_factors(int p, const Rational& m) {
  FactorProduct fp;
  const auto s = strip(p);
  for (const auto& e : s.signedEntries) fp.add(e - m, e);
  for (int d1 = 1; d1 <= p; ++d1)
    for (int d2 = d1 + 1; d2 <= p; ++d2) {
      Rational e(-p + d1 + d2 - 1);
      fp.add(e - 1, e);
    }
  return fp;
}

inline int pole_order_A_part(int p, const Rational& m) { return order(a_part_factors(p, m)); }

inline int pole_order_block(int p, const Rational& x, const Rational& y) {
  const Rational z = half(p - 1);
  if (!is_integer(z - x)) return 0;
  if (z == x - 1) return -1;
  if (z == y) return 1;
  // a block reaching down to 0 meets the strip of length one in its zero
  if (z == 0 && x == 0) return 1;
  return 0;
}

inline FactorProduct short_direct_factors(int p, const Partition& mu, const Rational& m) {
  FactorProduct fp = a_part_factors(p, m);
  const auto s = strip(p);
  const auto ent = entry_multiset(mu, m);
  for (const auto& e : s.signedEntries)
    for (const auto& f : ent) {
      fp.add(-1 - e + f, -e + f);
      fp.add(-1 - e - f, -e - f);
    }
  return fp;
}

inline int pole_order_short_direct(int p, const Partition& mu, const Rational& m) { return order(short_direct_factors(p, mu, m)); }

inline int pole_order_short_blockwise(int p, const SplitResult& sr, const Rational& m) {
  int o = pole_order_A_part(p, m);
  for (const auto& b : sr.blocks) o += pole_order_block(p, b.entryLow, b.entryHigh);
  return o;
}

}  // namespace hrg
