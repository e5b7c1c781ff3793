#include "hetnet/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hetnet/geometry.hpp"
#include "hetnet/radio.hpp"
#include "hetnet/random.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

DropRealization realize_drop(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  const Area area = config.area();
  const PrbPool pool = config.pool();

  DropRealization drop;
  drop.seed = seed;

  const auto grid = build_macro_grid(area, config.inter_site_distance, config.grid_anchor);
  const auto reuse = build_macro_reuse(pool, grid, config.reuse_factor);
  const auto femto_plan = build_femto_plan(pool, config.femto_fragments);

  auto femto_rng = make_stream(seed, Layer::Femto);
  auto user_rng = make_stream(seed, Layer::User);
  auto fragment_rng = make_stream(seed, Layer::Fragment);
  auto subscriber_rng = make_stream(seed, Layer::Subscriber);
  auto allocation_rng = make_stream(seed, Layer::Allocation);

  const auto femtos = sample_ppp(area, config.femto_mean_count() / area.size(), femto_rng);
  const auto users = sample_ppp(area, config.user_mean_count() / area.size(), user_rng);

  drop.macro_count = static_cast<int>(grid.sites.size());
  drop.stations.reserve(grid.sites.size() + femtos.points.size());
  for (std::size_t i = 0; i < grid.sites.size(); ++i) {
    const auto& frag = reuse.fragments[static_cast<std::size_t>(reuse.site_fragment[i])];
    drop.stations.push_back({static_cast<int>(drop.stations.size()), Tier::Macro, grid.sites[i],
                             config.macro_power(), frag});
  }
  for (const auto& p : femtos.points) {
    drop.stations.push_back({static_cast<int>(drop.stations.size()), Tier::Femto, p,
                             config.femto_power(), choose_femto_fragment(femto_plan, fragment_rng)});
  }

  drop.users.reserve(users.points.size());
  for (const auto& p : users.points) drop.users.push_back({static_cast<int>(drop.users.size()), p});

  drop.access.policy = config.access;
  drop.access.subscribers = build_subscriber_lists(drop.stations, drop.users, config.subscriber_radius,
                                                   config.subscriber_count, subscriber_rng);

  const auto strategy = config.association_strategy();
  const auto caps = fragment_capacities(drop.stations);
  drop.association = config.strategy == StrategyKind::TwoStepOffload
                         ? two_step_offload(drop.users, drop.stations, strategy, caps, drop.access)
                         : associate(drop.users, drop.stations, strategy, caps, drop.access);

  std::vector<StationAllocation> allocs;
  allocs.reserve(drop.stations.size());
  for (const auto& bs : drop.stations) {
    allocs.push_back(allocate_prbs(bs, drop.association.per_bs_admitted[static_cast<std::size_t>(bs.id)],
                                   pool.total_prbs, allocation_rng));
  }
  drop.allocation = AllocationMap(std::move(allocs), static_cast<int>(drop.users.size()));
  return drop;
}

std::vector<RateSample> evaluate_rates(const ScenarioConfig& config, const DropRealization& drop) {
  const ChannelModel channel{config.path_loss_exponent, config.noise_power, config.fading};
  const FadingField fading(combine_seed(drop.seed, static_cast<std::uint64_t>(Layer::Fading)), config.fading);
  const auto occupied = drop.allocation.occupied(drop.stations, config.occupancy, config.total_prbs);

  std::vector<bool> subscribed(drop.users.size(), false);
  for (const auto& list : drop.access.subscribers) {
    for (int u : list) subscribed[static_cast<std::size_t>(u)] = true;
  }

  std::vector<RateSample> samples;
  samples.reserve(drop.users.size());
  for (const auto& user : drop.users) {
    const auto uid = static_cast<std::size_t>(user.id);
    const auto& served = drop.association.assignment[uid];
    if (!served) {
      samples.push_back({user.id, 0.0, ServingTier::Denied, subscribed[uid]});
      continue;
    }
    const auto& bs = drop.stations[static_cast<std::size_t>(*served)];
    const double s = sinr(user, bs, drop.stations, drop.allocation, occupied, fading, channel);
    samples.push_back({user.id, rate(drop.allocation.alpha(user.id), config.prb_bandwidth, s),
                       bs.is_macro() ? ServingTier::Macro : ServingTier::Femto, subscribed[uid]});
  }
  return samples;
}

DropResult simulate_drop(const ScenarioConfig& config, int drop_index) {
  const std::uint64_t seed = drop_seed(config.base_seed, static_cast<std::uint64_t>(drop_index));
  const auto drop = realize_drop(config, seed);

  DropResult result;
  result.samples = evaluate_rates(config, drop);
  auto& st = result.stats;
  st.drop = drop_index;
  st.seed = seed;
  st.macros = drop.macro_count;
  st.femtos = static_cast<int>(drop.stations.size()) - drop.macro_count;
  st.users = static_cast<int>(drop.users.size());
  for (const auto& s : result.samples) {
    if (s.tier == ServingTier::Macro) ++st.admitted_macro;
    else if (s.tier == ServingTier::Femto) ++st.admitted_femto;
    else ++st.denied;
    if (s.tier != ServingTier::Denied && s.rate > 0.0) ++st.positive_samples;
  }
  for (const auto& bs : drop.stations) {
    if (bs.is_femto() && !drop.association.per_bs_admitted[static_cast<std::size_t>(bs.id)].empty()) {
      ++st.loaded_femtos;
    }
  }
  st.empty = st.positive_samples == 0;
  return result;
}

namespace {

struct DropSummary {
  DropStats stats;
  std::optional<DistributionCurve> curve;
  std::vector<TierPartition> partitions;
};

}  // namespace

RunResult run_scenario(const ScenarioConfig& config, int threads) {
  config.validate();
  const auto deltas = config.delta_grid();
  const int n = config.n_drops;
  std::vector<DropSummary> summaries(static_cast<std::size_t>(n));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        auto drop = simulate_drop(config, i);
        auto& out = summaries[static_cast<std::size_t>(i)];
        out.stats = drop.stats;
        if (!drop.stats.empty) out.curve = rate_distribution(drop.samples, deltas, config.psi_population);
        out.partitions = tier_breakdown(drop.samples, deltas, config.psi_population);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(threads, 1, n);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  RunResult result;
  result.config = config;
  std::vector<DistributionCurve> curves;
  for (const auto& s : summaries) {
    result.drops.push_back(s.stats);
    if (s.curve) {
      curves.push_back(*s.curve);
    } else {
      result.warnings.push_back("drop " + std::to_string(s.stats.drop) +
                                ": no associated user with positive rate; excluded");
    }
  }
  if (curves.empty()) throw EmptySampleSet("no drop produced a positive-rate sample");
  result.curve = aggregate_drops(curves);

  const std::size_t cells = summaries.front().partitions.size();
  for (std::size_t c = 0; c < cells; ++c) {
    const auto& first = summaries.front().partitions[c];
    result.partition_labels.push_back(partition_label(first.tier, first.subscriber));
    std::vector<DistributionCurve> cell;
    for (const auto& s : summaries) {
      if (s.partitions[c].curve) cell.push_back(*s.partitions[c].curve);
    }
    result.partitions.push_back(cell.empty() ? std::nullopt : std::optional(aggregate_drops(cell)));
  }
  return result;
}

}  // namespace hetnet
