#include <catch_amalgamated.hpp>

#include <hrg/splitting.hpp>
#include <hrg/symbols.hpp>

#include <algorithm>
#include <map>
#include <random>

using namespace hrg;

namespace {

std::vector<Rational> half_steps(int hi2) {
  std::vector<Rational> ms;
  for (int k = 0; k <= hi2; ++k) ms.push_back(half(k));
  return ms;
}

}  // namespace

TEST_CASE("split examples", "[splitting]") {
  auto s = split(Partition{1, 1, 2, 3, 4}, Rational(3));
  REQUIRE(s);
  CHECK(s->bipartition == Bipartition{Partition{2, 3, 4}, Partition{2}});
  REQUIRE(s->blocks.size() == 4);
  CHECK(s->blocks[0].entryLow == 3);
  CHECK(s->blocks[0].entryHigh == 6);
  CHECK(s->blocks[3].orientation == Orientation::Vertical);
  CHECK(s->blocks[3].entryLow == 0);
  CHECK(s->blocks[3].entryHigh == 1);

  auto t = split(Partition{2}, Rational(1));
  REQUIRE(t);
  CHECK(t->bipartition == Bipartition{Partition{2}, Partition{}});

  CHECK_FALSE(split(Partition{1, 1}, Rational(1)));
  CHECK_THROWS(split(Partition{1}, Rational(-1)));
}

TEST_CASE("residual test examples", "[splitting]") {
  CHECK(is_residual_point(Partition{1}, Rational(1)));
  // gamma = (1,0): e1, e1+e2, e1-e2 hit their labels; +-e2 vanish
  CHECK(residual_defect({Rational(1), Rational(0)}, Rational(1)) == 1);
  CHECK_FALSE(is_residual_point(Partition{1, 1}, Rational(1)));
  // gamma = (1/2, 3/2): e1 and e2-e1 hit, nothing vanishes
  CHECK(residual_defect({Rational(1, 2), Rational(3, 2)}, Rational(1, 2)) == 2);
  CHECK(is_residual_point(Partition{2}, Rational(1, 2)));
  CHECK_THROWS(is_residual_point(Partition{}, Rational(1)));
}

TEST_CASE("residual test ignores box order", "[splitting]") {
  std::mt19937 rng(7);
  for (const auto& lam : enumerate_partitions(7))
    for (auto m : half_steps(8)) {
      auto g = residual_coordinates(lam, m);
      auto base = residual_defect(g, m);
      std::shuffle(g.begin(), g.end(), rng);
      CHECK(residual_defect(g, m) == base);
    }
}

TEST_CASE("split is defined exactly on residual points", "[splitting]") {
  for (int l = 1; l <= 9; ++l)
    for (const auto& lam : enumerate_partitions(l))
      for (auto m : half_steps(12)) {
        INFO(lam.str() << " m=" << to_string(m));
        CHECK(split(lam, m).has_value() == is_residual_point(lam, m));
      }
}

TEST_CASE("block invariants", "[splitting]") {
  for (int l = 1; l <= 9; ++l)
    for (const auto& lam : enumerate_partitions(l))
      for (auto m : half_steps(12)) {
        auto s = split(lam, m);
        if (!s) continue;
        INFO(lam.str() << " m=" << to_string(m));
        int total = 0;
        for (const auto& b : s->blocks) {
          total += b.size();
          CHECK(b.entryHigh - b.entryLow + 1 == b.size());
          for (int i = 0; i < b.size(); ++i) CHECK(entry(b.boxes[i], m) == b.entryLow + i);
          CHECK_FALSE((b.size() == 1 && b.entryLow == 0));
          if (b.size() == 1) CHECK((b.orientation == Orientation::Horizontal) == (Rational(content(b.boxes[0])) > -m));
        }
        CHECK(total == l);
        CHECK(s->bipartition.weight() == l);
      }
}

TEST_CASE("split above the zero diagonal returns the rows", "[splitting]") {
  for (int l = 1; l <= 8; ++l)
    for (const auto& lam : enumerate_partitions(l)) {
      Rational m(lam[1] + lam.length() - 1);
      for (Rational mm : {m, Rational(m + Rational(1, 2)), Rational(m + 3)}) {
        auto s = split(lam, mm);
        REQUIRE(s);
        CHECK(s->bipartition == Bipartition{lam, Partition{}});
      }
    }
}

TEST_CASE("central character", "[splitting]") {
  CHECK(central_character(Partition{3}, Partition{}, Rational(5)).exponents == std::vector<Rational>{-1, 0, 1});
  CHECK(central_character(Partition{}, Partition{1}, Rational(2)).exponents == std::vector<Rational>{2});
  CHECK(central_character(Partition{2, 2}, Partition{1}, Rational(1)).exponents ==
        std::vector<Rational>{Rational(-1, 2), Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1)});
  CHECK_THROWS(central_character(Partition{}, Partition{1, 1}, Rational(1)));
}

TEST_CASE("datum validation", "[splitting]") {
  CHECK(validate_datum(36, Rational(3), Partition{11, 7, 4, 3}, Partition{4, 3, 2, 1, 1}));
  CHECK(validate_datum(2, Rational(0), Partition{1, 1}, Partition{}));
  CHECK_FALSE(validate_datum(3, Rational(1), Partition{1}, Partition{1, 1}));
  CHECK_FALSE(validate_datum(4, Rational(1), Partition{1}, Partition{1}));
}

TEST_CASE("normal form depends only on the entry multiset", "[splitting]") {
  for (auto m : half_steps(10)) {
    std::map<std::vector<Rational>, std::vector<int>> seen;
    auto v = variant_for(m);
    for (int l = 1; l <= 10; ++l)
      for (const auto& lam : enumerate_partitions(l)) {
        if (!is_residual_point(lam, m)) continue;
        INFO(lam.str() << " m=" << to_string(m));
        auto nf = normal_form(lam, m);
        REQUIRE(nf);
        auto e = symbol(nf->bipartition, v).entries();
        auto [it, fresh] = seen.emplace(entry_multiset(lam, m), e);
        if (!fresh) CHECK(it->second == e);
        if (m != Rational(1, 2))
          for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] - e[i - 1] >= 2);
      }
  }
}

TEST_CASE("normal form agrees with the greedy split on the worked example", "[splitting]") {
  auto nf = normal_form(Partition{4, 3, 2, 1, 1}, Rational(3));
  REQUIRE(nf);
  CHECK(nf->bipartition == Bipartition{Partition{4, 3, 2}, Partition{2}});
}
