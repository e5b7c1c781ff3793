#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "hetnet/allocation.hpp"

using namespace hetnet;

namespace {

BaseStation macro_with(Fragment f) { return {0, Tier::Macro, {0, 0}, 20.0, f}; }

std::vector<int> ids(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("exact division") {
  RandomStream rng(1);
  const auto a = allocate_prbs(macro_with({25, 25}), ids(5), 75, rng);
  for (int x : a.alpha) CHECK(x == 5);
  CHECK(a.used == PrbSet(75, Fragment{25, 25}));
}

TEST_CASE("full load gives one PRB each") {
  RandomStream rng(1);
  const auto a = allocate_prbs(macro_with({0, 25}), ids(25), 75, rng);
  for (int x : a.alpha) CHECK(x == 1);
}

TEST_CASE("no users leaves the station silent") {
  RandomStream rng(1);
  const auto a = allocate_prbs(macro_with({0, 25}), {}, 75, rng);
  CHECK(a.users.empty());
  CHECK(a.used.empty());
}

TEST_CASE("too many users is rejected") {
  RandomStream rng(1);
  CHECK_THROWS(allocate_prbs(macro_with({0, 3}), ids(4), 75, rng));
}

TEST_CASE("remainder PRB goes to each of 4 users with frequency 1/4") {
  RandomStream rng(99);
  const int n = 10'000;
  std::vector<int> extra(4, 0);
  for (int t = 0; t < n; ++t) {
    const auto a = allocate_prbs(macro_with({0, 25}), ids(4), 75, rng);
    int sevens = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK((a.alpha[k] == 6 || a.alpha[k] == 7));
      if (a.alpha[k] == 7) {
        ++sevens;
        ++extra[k];
      }
    }
    CHECK(sevens == 1);
  }
  const double sigma = std::sqrt(n * 0.25 * 0.75);
  for (int e : extra) CHECK(std::abs(e - n / 4.0) <= 3 * sigma);
}

TEST_CASE("fairness, sum and disjointness over random allocations") {
  RandomStream rng(7);
  std::uniform_int_distribution<int> pick_len(1, 75);
  for (int t = 0; t < 1'000; ++t) {
    const int len = pick_len(rng);
    std::uniform_int_distribution<int> pick_start(0, 75 - len);
    std::uniform_int_distribution<int> pick_n(1, len);
    const Fragment f{pick_start(rng), len};
    const auto a = allocate_prbs(macro_with(f), ids(pick_n(rng)), 75, rng);
    const auto [lo, hi] = std::minmax_element(a.alpha.begin(), a.alpha.end());
    CHECK(*hi - *lo <= 1);
    CHECK(std::accumulate(a.alpha.begin(), a.alpha.end(), 0) == len);
    PrbSet seen(75);
    for (std::size_t k = 0; k < a.prbs.size(); ++k) {
      CHECK(a.prbs[k].size() == a.alpha[k]);
      CHECK(prb_overlap(seen, a.prbs[k]) == 0);
      for (int i : a.prbs[k].indices()) CHECK(f.contains(i));
      seen |= a.prbs[k];
    }
    CHECK(seen == PrbSet(75, f));
  }
}

TEST_CASE("allocation map lookups and occupancy models") {
  RandomStream rng(1);
  std::vector<BaseStation> bss = {{0, Tier::Macro, {0, 0}, 20, {0, 25}},
                                  {1, Tier::Femto, {10, 0}, 0.1, {25, 3}}};
  std::vector<StationAllocation> allocs;
  allocs.push_back(allocate_prbs(bss[0], std::vector<int>{2, 0}, 75, rng));
  allocs.push_back(allocate_prbs(bss[1], std::vector<int>{}, 75, rng));
  const AllocationMap map(std::move(allocs), 3);
  CHECK(map.serving(0) == 0);
  CHECK(map.serving(1) == -1);
  CHECK(map.alpha(1) == 0);
  CHECK(map.alpha(0) + map.alpha(2) == 25);
  const auto only = map.occupied(bss, Occupancy::AllocatedOnly, 75);
  CHECK(only[0].size() == 25);
  CHECK(only[1].empty());
  const auto whole = map.occupied(bss, Occupancy::WholeFragment, 75);
  CHECK(whole[1] == PrbSet(75, Fragment{25, 3}));
}
