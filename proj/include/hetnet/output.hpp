#ifndef HETNET_OUTPUT_HPP
#define HETNET_OUTPUT_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hetnet/metrics.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Header `delta_bps,psi_mean,psi_ci95,n_samples`.
void write_curve_csv(std::ostream& out, const DistributionCurve& curve);

/// `partition,delta_bps,psi_mean,psi_ci95,n_samples` rows for each non-empty cell.
void write_partitions_csv(std::ostream& out, const RunResult& result);

void write_drops_csv(std::ostream& out, const RunResult& result);

/// Config echo, per-drop seeds and warnings.
void write_manifest(std::ostream& out, const RunResult& result);

/// Writes <stem>.csv, <stem>_tiers.csv, <stem>_drops.csv and <stem>_manifest.txt
/// into `dir`.
void write_run(const std::filesystem::path& dir, const std::string& stem,
               const RunResult& result);

}  // namespace hetnet

#endif  // HETNET_OUTPUT_HPP
