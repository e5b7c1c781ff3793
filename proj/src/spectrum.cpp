#include "hetnet/spectrum.hpp"

#include <random>

namespace hetnet {

namespace {

int floor_mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

void PrbPool::validate() const {
  if (total_prbs <= 0) throw std::invalid_argument("total_prbs must be positive");
  if (!(prb_bandwidth > 0.0)) throw std::invalid_argument("prb_bandwidth must be positive");
}

PrbSet::PrbSet(int total_prbs, std::initializer_list<int> indices) : PrbSet(total_prbs) {
  for (int i : indices) insert(i);
}

PrbSet::PrbSet(int total_prbs, Fragment fragment) : PrbSet(total_prbs) { insert(fragment); }

void PrbSet::insert(int prb) {
  if (prb < 0 || prb >= capacity()) throw std::out_of_range("PRB index outside the pool");
  words_[static_cast<std::size_t>(prb) / 64] |= std::uint64_t{1} << (prb % 64);
}

void PrbSet::insert(Fragment fragment) {
  for (int i = fragment.start; i < fragment.end(); ++i) insert(i);
}

bool PrbSet::contains(int prb) const noexcept {
  if (prb < 0 || prb >= capacity()) return false;
  return (words_[static_cast<std::size_t>(prb) / 64] >> (prb % 64)) & 1U;
}

int PrbSet::size() const noexcept {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<int> PrbSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < capacity(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

PrbSet& PrbSet::operator|=(const PrbSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

int prb_overlap(const PrbSet& a, const PrbSet& b) noexcept {
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) count += std::popcount(a.words_[i] & b.words_[i]);
  return count;
}

std::vector<Fragment> split_pool(const PrbPool& pool, int count) {
  pool.validate();
  if (count <= 0 || pool.total_prbs % count != 0) {
    throw IndivisibleSpectrum(std::to_string(count) + " must divide total_prbs (" +
                              std::to_string(pool.total_prbs) + ")");
  }
  const int len = pool.total_prbs / count;
  std::vector<Fragment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back({i * len, len});
  return out;
}

int reuse_color(LatticeIndex site, int reuse_factor) noexcept {
  if (reuse_factor <= 1) return 0;
  // Axial coordinates of the odd-row-shifted lattice.
  const int r = site.row;
  const int q = site.col - floor_div(r, 2);
  // Neighbor offsets in (q, r): (+-1, 0), (0, +-1), (1, -1), (-1, 1).
  if (reuse_factor == 3) return floor_mod(r + 2 * q, 3);
  return floor_mod(q + 3 * r, reuse_factor);
}

MacroReusePlan build_macro_reuse(const PrbPool& pool, const MacroGrid& grid, int reuse_factor) {
  if (reuse_factor <= 0 || pool.total_prbs % reuse_factor != 0) {
    throw IndivisibleSpectrum("K must divide total_prbs");
  }
  MacroReusePlan plan;
  plan.reuse_factor = reuse_factor;
  plan.fragments = split_pool(pool, reuse_factor);
  plan.site_fragment.reserve(grid.lattice.size());
  for (const auto& site : grid.lattice) plan.site_fragment.push_back(reuse_color(site, reuse_factor));
  return plan;
}

FemtoFragmentPlan build_femto_plan(const PrbPool& pool, int fragment_count) {
  if (fragment_count <= 0 || pool.total_prbs % fragment_count != 0) {
    throw IndivisibleSpectrum("n_f must divide total_prbs");
  }
  return {split_pool(pool, fragment_count)};
}

Fragment choose_femto_fragment(const FemtoFragmentPlan& plan, RandomStream& rng) {
  if (plan.fragments.empty()) throw std::invalid_argument("femto fragment plan is empty");
  std::uniform_int_distribution<std::size_t> pick(0, plan.fragments.size() - 1);
  return plan.fragments[pick(rng)];
}

}  // namespace hetnet
