#include "hetnet/output.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hetnet/config.hpp"

namespace hetnet {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_rows(std::ostream& out, const std::string& prefix, const DistributionCurve& curve) {
  for (std::size_t i = 0; i < curve.deltas.size(); ++i) {
    out << prefix << num(curve.deltas[i]) << ',' << num(curve.psi[i]) << ','
        << num(curve.ci_halfwidth[i]) << ',' << curve.n_samples << '\n';
  }
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
  return f;
}

}  // namespace

void write_curve_csv(std::ostream& out, const DistributionCurve& curve) {
  out << "delta_bps,psi_mean,psi_ci95,n_samples\n";
  write_rows(out, "", curve);
}

void write_partitions_csv(std::ostream& out, const RunResult& result) {
  out << "partition,delta_bps,psi_mean,psi_ci95,n_samples\n";
  for (std::size_t c = 0; c < result.partitions.size(); ++c) {
    if (result.partitions[c]) write_rows(out, result.partition_labels[c] + ",", *result.partitions[c]);
  }
}

void write_drops_csv(std::ostream& out, const RunResult& result) {
  out << "drop,seed,macros,femtos,users,admitted_macro,admitted_femto,denied,loaded_femtos,"
         "positive_samples\n";
  for (const auto& d : result.drops) {
    out << d.drop << ',' << d.seed << ',' << d.macros << ',' << d.femtos << ',' << d.users << ','
        << d.admitted_macro << ',' << d.admitted_femto << ',' << d.denied << ',' << d.loaded_femtos
        << ',' << d.positive_samples << '\n';
  }
}

void write_manifest(std::ostream& out, const RunResult& result) {
  out << "# config\n" << config_to_text(result.config);
  out << "# drop seeds\n";
  for (const auto& d : result.drops) out << "# drop " << d.drop << " seed " << d.seed << '\n';
  for (const auto& w : result.warnings) out << "# warning: " << w << '\n';
}

void write_run(const std::filesystem::path& dir, const std::string& stem, const RunResult& result) {
  std::filesystem::create_directories(dir);
  {
    auto f = open_out(dir / (stem + ".csv"));
    write_curve_csv(f, result.curve);
  }
  {
    auto f = open_out(dir / (stem + "_tiers.csv"));
    write_partitions_csv(f, result);
  }
  {
    auto f = open_out(dir / (stem + "_drops.csv"));
    write_drops_csv(f, result);
  }
  {
    auto f = open_out(dir / (stem + "_manifest.txt"));
    write_manifest(f, result);
  }
}

}  // namespace hetnet
