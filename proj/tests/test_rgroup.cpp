#include <catch_amalgamated.hpp>

#include <hrg/rgroup.hpp>

#include <map>
#include <numeric>

using namespace hrg;

namespace {

std::vector<InductionDatum> all_data(int n, const Rational& m) {
  std::vector<InductionDatum> out;
  for (int l = 0; l <= n; ++l)
    for (const auto& mu : enumerate_partitions(l)) {
      if (l > 0 && !is_residual_point(mu, m)) continue;
      for (const auto& kappa : enumerate_partitions(n - l)) out.push_back({n, m, kappa, mu});
    }
  return out;
}

// R_0 read off root by root: a restricted ray is kept when the roots above it
// produce more vanishing denominators than vanishing numerators.
std::set<std::vector<int>> root_level_R0(const InductionDatum& xi) {
  const int n = xi.n, r = xi.rank();
  Scaled g = scale_to_integers(central_character(xi.kappa, xi.mu, xi.m).exponents, den(xi.m));
  const long long kLong = g.scale, kShort = to_ll(num(xi.m) * (g.scale / den(xi.m)));
  std::vector<int> blockOf(n, -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < xi.kappa.parts()[i]; ++j) blockOf[xi.block_start(i) + j] = i;
  std::map<std::vector<int>, int> rays;
  auto visit = [&](const std::vector<int>& alpha, long long k) {
    std::vector<int> res(r, 0);
    long long val = 0;
    for (int t = 0; t < n; ++t) {
      if (blockOf[t] >= 0) res[blockOf[t]] += alpha[t];
      val += alpha[t] * g.v[t];
    }
    int gg = 0;
    for (int c : res) gg = std::gcd(gg, std::abs(c));
    if (gg == 0) return;
    for (int& c : res) c /= gg;
    rays[res] += (val == 0 ? 1 : 0) - (val == -k ? 1 : 0);
  };
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<int> a(n, 0);
      a[i] = s;
      visit(a, kShort);
    }
    for (int j = i + 1; j < n; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          std::vector<int> a(n, 0);
          a[i] = s1;
          a[j] = s2;
          visit(a, kLong);
        }
  }
  std::set<std::vector<int>> out;
  for (auto& [ray, total] : rays)
    if (total > 0) out.insert(ray);
  return out;
}

// All mu' of weight |mu|+p containing mu with the strip multiset as difference.
std::vector<Partition> geometric_by_scan(const Partition& mu, int p, const Rational& m) {
  std::vector<Partition> out;
  auto want = strip(p).absEntries;
  auto base = entry_multiset(mu, m);
  for (const auto& lam : enumerate_partitions(mu.weight() + p)) {
    bool inside = true;
    for (int r = 1; r <= mu.length(); ++r) inside &= lam[r] >= mu[r];
    if (!inside) continue;
    std::vector<Rational> diff;
    for (auto b : boxes(lam))
      if (!contains(mu, b)) diff.push_back(entry(b, m));
    std::sort(diff.begin(), diff.end());
    if (diff == want) out.push_back(lam);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("can_glue examples", "[rgroup]") {
  Partition mu{4, 3, 2, 1, 1};
  CHECK(can_glue(7, mu, Rational(3)));
  CHECK(can_glue(11, mu, Rational(3)));
  CHECK_FALSE(can_glue(4, mu, Rational(3)));
  CHECK_FALSE(can_glue(3, mu, Rational(3)));
  CHECK(can_glue(2, Partition{2}, Rational(1, 2)));
  CHECK(can_glue(1, Partition{}, Rational(0)));
  CHECK_FALSE(can_glue(1, Partition{}, Rational(1)));
}

TEST_CASE("geometric gluing examples", "[rgroup]") {
  CHECK(glue_strip_geometric(Partition{2}, 2, Rational(1, 2)) == std::vector<Partition>{Partition{2, 2}});
  CHECK(glue_strip_geometric(Partition{4, 3, 2, 1, 1}, 3, Rational(3)).empty());
  auto g = glue_strip_geometric(Partition{}, 3, Rational(1));
  CHECK(g == std::vector<Partition>{Partition{1, 1, 1}});
}

TEST_CASE("geometric gluing matches a full scan", "[rgroup]") {
  for (int l = 0; l <= 5; ++l)
    for (const auto& mu : enumerate_partitions(l))
      for (int k = 0; k <= 8; ++k)
        for (int p = 1; p <= 5; ++p) {
          Rational m = half(k);
          INFO(mu.str() << " p=" << p << " m=" << to_string(m));
          CHECK(glue_strip_geometric(mu, p, m) == geometric_by_scan(mu, p, m));
        }
}

TEST_CASE("three-way gluing agreement on a small range", "[rgroup]") {
  for (int l = 0; l <= 7; ++l)
    for (const auto& mu : enumerate_partitions(l))
      for (int k = 0; k <= 10; ++k) {
        Rational m = half(k);
        if (l > 0 && !is_residual_point(mu, m)) continue;
        for (int p = 1; p <= 8; ++p) {
          INFO(mu.str() << " p=" << p << " m=" << to_string(m));
          bool cg = can_glue(p, mu, m);
          CHECK(cg == (pole_order_short_direct(p, mu, m) == 0));
          CHECK(cg == !glue_strip_geometric(mu, p, m).empty());
        }
      }
}

TEST_CASE("can_glue depends only on the orbit of mu", "[rgroup]") {
  for (int k = 0; k <= 8; ++k) {
    Rational m = half(k);
    std::map<std::vector<Rational>, std::vector<bool>> seen;
    for (int l = 1; l <= 8; ++l)
      for (const auto& mu : enumerate_partitions(l)) {
        if (!is_residual_point(mu, m)) continue;
        std::vector<bool> row;
        for (int p = 1; p <= 9; ++p) row.push_back(can_glue(p, mu, m));
        auto [it, fresh] = seen.emplace(entry_multiset(mu, m), row);
        if (!fresh) CHECK(it->second == row);
      }
  }
}

TEST_CASE("restricted root systems", "[rgroup]") {
  for (int n = 2; n <= 6; ++n) {
    Partition ones(std::vector<int>(n, 1));
    auto d0 = restricted_root_system({n, 0, ones, {}});
    REQUIRE(d0.factors.size() == 1);
    CHECK(d0.factors[0].type == FactorType::D);
    CHECK(d0.factors[0].rank == n);
    CHECK(d0.positiveRoots.size() == static_cast<std::size_t>(n * (n - 1)));
    auto b = restricted_root_system({n, Rational(1, 3), ones, {}});
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].type == FactorType::B);
    CHECK(b.positiveRoots.size() == static_cast<std::size_t>(n * n));
  }
  auto ex = restricted_root_system(make_datum(36, 3, Partition{11, 7, 4, 3}, Partition{4, 3, 2, 1, 1}));
  REQUIRE(ex.factors.size() == 4);
  CHECK(ex.factors[0].type == FactorType::Empty);
  CHECK(ex.factors[1].type == FactorType::Empty);
  CHECK(ex.factors[2].type == FactorType::B);
  CHECK(ex.factors[3].type == FactorType::B);
  CHECK(ex.weyl_group_order() == 4);
}

TEST_CASE("restricted roots agree with a root-level count", "[rgroup]") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 8; ++k)
      for (const auto& xi : all_data(n, half(k))) {
        INFO(xi.kappa.str() << " " << xi.mu.str() << " m=" << to_string(xi.m));
        auto rs = restricted_root_system(xi);
        std::set<std::vector<int>> full;
        for (auto v : rs.positiveRoots) {
          full.insert(v);
          for (int& c : v) c = -c;
          full.insert(v);
        }
        CHECK(full == root_level_R0(xi));
      }
}

TEST_CASE("generators", "[rgroup]") {
  auto xi = make_datum(5, 0, Partition{3, 1, 1}, Partition{});
  auto w = generator(xi, 0);
  CHECK(w.images == std::vector<int>{-3, -2, -1, 4, 5});
  CHECK(generator(xi, 1).images == std::vector<int>{1, 2, 3, 4, -5});
  CHECK((w * w).is_identity());
  auto one = generator(make_datum(1, 0, Partition{1}, Partition{}), 0);
  CHECK(one.images == std::vector<int>{-1});
  CHECK_THROWS(generator(make_datum(1, 1, Partition{1}, Partition{}), 0));
}

TEST_CASE("signed permutation algebra", "[rgroup]") {
  SignedPermutation a{{2, -1, 3}}, b{{-3, 1, 2}};
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * b).apply(std::vector<int>{1, 2, 3}) == a.apply(b.apply(std::vector<int>{1, 2, 3})));
  CHECK(SignedPermutation::identity(3).word() == "()");
  CHECK(SignedPermutation{{1, 2, -4, -3}}.word() == "(3 -4)");
}

TEST_CASE("brute force examples", "[rgroup]") {
  auto a = brute_force(make_datum(2, 0, Partition{1, 1}, Partition{}));
  CHECK(a.wCount == 8);
  CHECK(a.R.size() == 2);
  auto b = brute_force(make_datum(2, 1, Partition{1, 1}, Partition{}));
  CHECK(b.R == std::vector<SignedPermutation>{SignedPermutation::identity(2)});
  auto c = brute_force_W_xi_xi(make_datum(2, Rational(1, 2), Partition{}, Partition{2}));
  CHECK(c == std::vector<SignedPermutation>{SignedPermutation::identity(2)});
  CHECK(brute_force_R(make_datum(4, Rational(1, 2), Partition{2}, Partition{2})).size() == 2);
  CHECK_THROWS_AS(brute_force(make_datum(3, 0, Partition{1, 1, 1}, Partition{}), 2), std::out_of_range);
}

TEST_CASE("brute force agrees with the R-group on a small range", "[rgroup]") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 6; ++k)
      for (const auto& xi : all_data(n, half(k))) {
        INFO(xi.kappa.str() << " " << xi.mu.str() << " m=" << to_string(xi.m));
        auto rg = r_group(xi);
        auto bf = brute_force(xi);
        CHECK(is_elementary_abelian(bf.R));
        CHECK(bf.R.size() == (std::size_t{1} << rg.d));
        CHECK(bf.wCount == restricted_root_system(xi).weyl_group_order() * rg.componentCount);
        for (const auto& g : rg.generators) {
          CHECK(std::binary_search(bf.R.begin(), bf.R.end(), g));
          CHECK((g * g).is_identity());
          for (const auto& h : rg.generators) CHECK(g * h == h * g);
        }
      }
}

TEST_CASE("component labels of the worked example", "[rgroup]") {
  auto rg = r_group(make_datum(36, 3, Partition{11, 7, 4, 3}, Partition{4, 3, 2, 1, 1}));
  CHECK(rg.d == 2);
  CHECK(rg.gluableLengths == std::vector<int>{11, 7});
  CHECK(rg.componentCount == 4);
  REQUIRE(rg.componentLabels.size() == 4);
  for (const auto& lab : rg.componentLabels) {
    REQUIRE(lab.muJ);
    int w = 11;
    for (int j : lab.J) w += j;
    CHECK(lab.muJ->weight() == w);
  }
}

TEST_CASE("label conversion from type C", "[rgroup]") {
  auto a = convert_C_labels(1, 1);
  CHECK(a.k2 == Rational(1, 2));
  CHECK(convert_C_labels(1, 2).k2 == 1);
  auto c = convert_C_labels(2, 2);
  CHECK(c.k2 == 1);
  CHECK(c.m() == Rational(1, 2));
  CHECK_THROWS(convert_C_labels(0, 1));
}
