#ifndef HETNET_METRICS_HPP
#define HETNET_METRICS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hetnet/network.hpp"

namespace hetnet {

enum class ServingTier { Macro, Femto, Denied };

struct RateSample {
  int user = 0;
  double rate = 0.0;  // bits/s
  ServingTier tier = ServingTier::Denied;
  bool subscriber = false;
};

/// Psi(delta) = Pr[R > delta | R > 0] over a threshold grid.
struct DistributionCurve {
  std::vector<double> deltas;        // bits/s, ascending
  std::vector<double> psi;
  std::vector<double> ci_halfwidth;  // 95% normal approximation across drops
  std::size_t n_samples = 0;         // samples in the denominator
  std::size_t n_curves = 1;
};

class EmptySampleSet : public std::runtime_error {
 public:
  explicit EmptySampleSet(const std::string& what) : std::runtime_error(what) {}
};

class GridMismatch : public std::invalid_argument {
 public:
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Which users the Psi denominator counts.
enum class PsiPopulation {
  Associated,  // Pr[R > delta | R > 0]; denied users excluded
  AllUsers,    // Pr[R > delta] with denied users counted at rate 0
};

/// `count` log-spaced thresholds from `lo` to `hi` inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

/// Empirical Psi. Under Associated, denied samples are ignored. Throws
/// EmptySampleSet when no sample has a positive rate.
DistributionCurve rate_distribution(std::span<const RateSample> samples,
                                    std::span<const double> deltas,
                                    PsiPopulation population = PsiPopulation::Associated);

/// Mean Psi per threshold and 1.96 * s / sqrt(n) with s the sample standard
/// deviation across curves.
DistributionCurve aggregate_drops(std::span<const DistributionCurve> curves);

/// One cell of the (serving tier, subscriber flag) partition.
struct TierPartition {
  ServingTier tier = ServingTier::Macro;
  bool subscriber = false;
  std::size_t count = 0;                   // samples in the cell, any rate
  std::optional<DistributionCurve> curve;  // empty when no positive rate
};

/// Psi per partition cell: macro/femto x subscriber/non-subscriber.
std::vector<TierPartition> tier_breakdown(std::span<const RateSample> samples,
                                          std::span<const double> deltas,
                                          PsiPopulation population = PsiPopulation::Associated);

std::string partition_label(ServingTier tier, bool subscriber);

}  // namespace hetnet

#endif  // HETNET_METRICS_HPP
