#ifndef HETNET_SPECTRUM_HPP
#define HETNET_SPECTRUM_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetnet/geometry.hpp"
#include "hetnet/random.hpp"

namespace hetnet {

class IndivisibleSpectrum : public std::invalid_argument {
 public:
  explicit IndivisibleSpectrum(const std::string& what) : std::invalid_argument(what) {}
};

struct PrbPool {
  int total_prbs = 75;
  double prb_bandwidth = 180e3;  // Hz

  void validate() const;
};

/// Contiguous PRB range [start, start + len).
struct Fragment {
  int start = 0;
  int len = 0;

  int end() const noexcept { return start + len; }
  bool contains(int prb) const noexcept { return prb >= start && prb < end(); }
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Set of absolute PRB indices, stored as a bitset sized to the pool.
class PrbSet {
 public:
  PrbSet() = default;
  explicit PrbSet(int total_prbs) : words_((static_cast<std::size_t>(total_prbs) + 63) / 64, 0) {}
  PrbSet(int total_prbs, std::initializer_list<int> indices);
  PrbSet(int total_prbs, Fragment fragment);

  void insert(int prb);
  void insert(Fragment fragment);
  bool contains(int prb) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  int capacity() const noexcept { return static_cast<int>(words_.size() * 64); }

  /// Ascending list of members.
  std::vector<int> indices() const;

  PrbSet& operator|=(const PrbSet& other);
  friend bool operator==(const PrbSet&, const PrbSet&) = default;

  friend int prb_overlap(const PrbSet& a, const PrbSet& b) noexcept;

 private:
  std::vector<std::uint64_t> words_;
};

/// |a ∩ b|.
int prb_overlap(const PrbSet& a, const PrbSet& b) noexcept;

/// Macro-tier hard frequency reuse: K equal fragments and a site coloring.
struct MacroReusePlan {
  int reuse_factor = 3;
  std::vector<Fragment> fragments;
  std::vector<int> site_fragment;  // parallel to MacroGrid::sites
};

/// Femto-tier split of the whole pool into n_f aligned equal fragments.
struct FemtoFragmentPlan {
  std::vector<Fragment> fragments;

  int fragment_size() const noexcept { return fragments.empty() ? 0 : fragments.front().len; }
};

/// Which PRBs a base station is taken to radiate on when it interferes.
enum class Occupancy {
  AllocatedOnly,  // PRBs handed to its own admitted users this drop
  WholeFragment,  // its entire fragment, loaded or not
};

/// Splits [0, total) into `count` contiguous equal fragments.
std::vector<Fragment> split_pool(const PrbPool& pool, int count);

/// Color of a lattice site under reuse factor K. Proper (hex neighbors
/// differ) for K = 3 and every K >= 4.
int reuse_color(LatticeIndex site, int reuse_factor) noexcept;

MacroReusePlan build_macro_reuse(const PrbPool& pool, const MacroGrid& grid, int reuse_factor);

FemtoFragmentPlan build_femto_plan(const PrbPool& pool, int fragment_count);

/// Uniform pick of one fragment.
Fragment choose_femto_fragment(const FemtoFragmentPlan& plan, RandomStream& rng);

}  // namespace hetnet

#endif  // HETNET_SPECTRUM_HPP
