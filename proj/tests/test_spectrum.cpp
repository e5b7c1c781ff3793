#include <cmath>
#include <set>

#include "doctest.h"
#include "hetnet/geometry.hpp"
#include "hetnet/spectrum.hpp"

using namespace hetnet;

TEST_CASE("macro reuse splits 75 PRBs into three 25-PRB fragments") {
  const auto grid = build_macro_grid({25'000, 25'000}, 5'000);
  const auto plan = build_macro_reuse({75, 180e3}, grid, 3);
  REQUIRE(plan.fragments.size() == 3);
  CHECK(plan.fragments[0] == Fragment{0, 25});
  CHECK(plan.fragments[1] == Fragment{25, 25});
  CHECK(plan.fragments[2] == Fragment{50, 25});
  CHECK(plan.site_fragment.size() == grid.sites.size());
}

TEST_CASE("K = 1 gives one color and the whole pool") {
  const auto grid = build_macro_grid({25'000, 25'000}, 5'000);
  const auto plan = build_macro_reuse({75, 180e3}, grid, 1);
  REQUIRE(plan.fragments.size() == 1);
  CHECK(plan.fragments[0] == Fragment{0, 75});
  for (int c : plan.site_fragment) CHECK(c == 0);
}

TEST_CASE("no two hex-adjacent sites share a color") {
  for (int k : {3, 4, 5, 7}) {
    const auto grid = build_macro_grid({25'000, 25'000}, 5'000);
    const auto plan = build_macro_reuse({105 * 4, 180e3}, grid, k);
    int checked = 0;
    for (std::size_t i = 0; i < grid.sites.size(); ++i) {
      for (std::size_t j = i + 1; j < grid.sites.size(); ++j) {
        const double d = std::hypot(grid.sites[i].x - grid.sites[j].x, grid.sites[i].y - grid.sites[j].y);
        if (std::abs(d - 5'000) > 1e-6) continue;
        ++checked;
        CHECK(plan.site_fragment[i] != plan.site_fragment[j]);
      }
    }
    CHECK(checked > 30);
  }
}

TEST_CASE("indivisible K and n_f are rejected") {
  const auto grid = build_macro_grid({25'000, 25'000}, 5'000);
  CHECK_THROWS_WITH_AS(build_macro_reuse({75, 180e3}, grid, 4), "K must divide total_prbs", IndivisibleSpectrum);
  CHECK_THROWS_AS(build_femto_plan({75, 180e3}, 2), IndivisibleSpectrum);
  CHECK_THROWS_AS(build_femto_plan({75, 180e3}, 0), IndivisibleSpectrum);
}

TEST_CASE("femto plans tile the pool") {
  for (auto [nf, len] : {std::pair{1, 75}, {3, 25}, {5, 15}, {15, 5}, {25, 3}}) {
    const auto plan = build_femto_plan({75, 180e3}, nf);
    REQUIRE(plan.fragments.size() == static_cast<std::size_t>(nf));
    std::multiset<int> all;
    for (const auto& f : plan.fragments) {
      CHECK(f.len == len);
      for (int i = f.start; i < f.end(); ++i) all.insert(i);
    }
    CHECK(all.size() == 75);
    CHECK(std::set<int>(all.begin(), all.end()).size() == 75);
    CHECK(*all.begin() == 0);
    CHECK(*all.rbegin() == 74);
  }
}

TEST_CASE("fragment choice") {
  RandomStream rng(17);
  SUBCASE("single fragment is the full band") {
    const auto plan = build_femto_plan({75, 180e3}, 1);
    for (int i = 0; i < 10; ++i) CHECK(choose_femto_fragment(plan, rng) == Fragment{0, 75});
  }
  SUBCASE("n_f = 25 gives 3-PRB fragments") {
    const auto plan = build_femto_plan({75, 180e3}, 25);
    for (int i = 0; i < 100; ++i) CHECK(choose_femto_fragment(plan, rng).len == 3);
  }
  SUBCASE("n_f = 3 is uniform within 3 sigma") {
    const auto plan = build_femto_plan({75, 180e3}, 3);
    const int n = 30'000;
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < n; ++i) ++counts[choose_femto_fragment(plan, rng).start / 25];
    const double sigma = std::sqrt(n * (1.0 / 3) * (2.0 / 3));
    for (int c : counts) CHECK(std::abs(c - n / 3.0) <= 3 * sigma);
  }
}

TEST_CASE("prb overlap") {
  const PrbSet a(75, Fragment{0, 25});
  const PrbSet b(75, Fragment{25, 25});
  CHECK(prb_overlap(a, b) == 0);
  const PrbSet five(75, {3, 9, 40, 64, 70});
  CHECK(prb_overlap(five, five) == 5);
  CHECK(prb_overlap(PrbSet(75, {10, 11, 12}), PrbSet(75, Fragment{0, 15})) == 3);

  RandomStream rng(23);
  std::bernoulli_distribution coin(0.3);
  for (int t = 0; t < 200; ++t) {
    PrbSet x(75), y(75);
    std::set<int> sx, sy;
    for (int i = 0; i < 75; ++i) {
      if (coin(rng)) { x.insert(i); sx.insert(i); }
      if (coin(rng)) { y.insert(i); sy.insert(i); }
    }
    int inter = 0;
    for (int i : sx) inter += static_cast<int>(sy.count(i));
    CHECK(prb_overlap(x, y) == inter);
    CHECK(prb_overlap(x, y) == prb_overlap(y, x));
    CHECK(prb_overlap(x, x) == x.size());
    CHECK(prb_overlap(x, y) <= std::min(x.size(), y.size()));
  }
}

TEST_CASE("different macro colors never overlap under K = 3") {
  const auto grid = build_macro_grid({25'000, 25'000}, 5'000);
  const auto plan = build_macro_reuse({75, 180e3}, grid, 3);
  for (std::size_t i = 0; i < grid.sites.size(); ++i) {
    for (std::size_t j = 0; j < grid.sites.size(); ++j) {
      const PrbSet a(75, plan.fragments[static_cast<std::size_t>(plan.site_fragment[i])]);
      const PrbSet b(75, plan.fragments[static_cast<std::size_t>(plan.site_fragment[j])]);
      if (plan.site_fragment[i] != plan.site_fragment[j]) CHECK(prb_overlap(a, b) == 0);
    }
  }
}
