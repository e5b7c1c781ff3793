#include "hetnet/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace hetnet {

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("log grid needs 0 < lo < hi and at least two points");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    out.push_back(std::pow(10.0, a + (b - a) * i / (count - 1)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

DistributionCurve rate_distribution(std::span<const RateSample> samples,
                                    std::span<const double> deltas, PsiPopulation population) {
  if (!std::is_sorted(deltas.begin(), deltas.end())) {
    throw std::invalid_argument("thresholds must be ascending");
  }
  std::vector<double> rates;
  rates.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.tier != ServingTier::Denied && s.rate > 0.0) rates.push_back(s.rate);
  }
  if (rates.empty()) throw EmptySampleSet("no sample with a positive rate");
  std::sort(rates.begin(), rates.end());
  const std::size_t population_size =
      population == PsiPopulation::Associated ? rates.size() : samples.size();

  DistributionCurve curve;
  curve.deltas.assign(deltas.begin(), deltas.end());
  curve.psi.reserve(deltas.size());
  curve.ci_halfwidth.assign(deltas.size(), 0.0);
  curve.n_samples = population_size;
  const auto n = static_cast<double>(population_size);
  for (double delta : deltas) {
    const auto above = rates.end() - std::upper_bound(rates.begin(), rates.end(), delta);
    curve.psi.push_back(static_cast<double>(above) / n);
  }
  return curve;
}

DistributionCurve aggregate_drops(std::span<const DistributionCurve> curves) {
  if (curves.empty()) throw EmptySampleSet("no curves to aggregate");
  const auto& grid = curves.front().deltas;
  for (const auto& c : curves) {
    if (c.deltas != grid || c.psi.size() != grid.size()) {
      throw GridMismatch("curves have different threshold grids");
    }
  }
  const std::size_t n = curves.size();
  DistributionCurve out;
  out.deltas = grid;
  out.psi.assign(grid.size(), 0.0);
  out.ci_halfwidth.assign(grid.size(), 0.0);
  out.n_curves = n;
  for (const auto& c : curves) out.n_samples += c.n_samples;

  for (std::size_t j = 0; j < grid.size(); ++j) {
    double sum = 0.0;
    for (const auto& c : curves) sum += c.psi[j];
    const double mean = sum / static_cast<double>(n);
    out.psi[j] = mean;
    if (n < 2) continue;
    double ss = 0.0;
    for (const auto& c : curves) ss += (c.psi[j] - mean) * (c.psi[j] - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    out.ci_halfwidth[j] = 1.96 * sd / std::sqrt(static_cast<double>(n));
  }
  return out;
}

std::string partition_label(ServingTier tier, bool subscriber) {
  std::string s = tier == ServingTier::Macro ? "macro" : tier == ServingTier::Femto ? "femto" : "denied";
  return s + (subscriber ? "_subscriber" : "_nonsubscriber");
}

std::vector<TierPartition> tier_breakdown(std::span<const RateSample> samples,
                                          std::span<const double> deltas,
                                          PsiPopulation population) {
  std::vector<TierPartition> out;
  for (auto tier : {ServingTier::Macro, ServingTier::Femto}) {
    for (bool sub : {false, true}) {
      std::vector<RateSample> cell;
      for (const auto& s : samples) {
        if (s.tier == tier && s.subscriber == sub) cell.push_back(s);
      }
      TierPartition part{tier, sub, cell.size(), std::nullopt};
      try {
        part.curve = rate_distribution(cell, deltas, population);
      } catch (const EmptySampleSet&) {
      }
      out.push_back(std::move(part));
    }
  }
  return out;
}

}  // namespace hetnet
