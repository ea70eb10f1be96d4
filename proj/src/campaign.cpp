#include "topocat/campaign.hpp"

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <utility>

#include "topocat/errors.hpp"

namespace topocat {

void for_each_function(const FiniteSpace& x, const FiniteSpace& y,
                       const std::function<void(const SetFunction&)>& fn) {
  const int nx = x.point_count();
  const int ny = y.point_count();
  if (nx > 0 && ny == 0) return;

  SetFunction current{x, y, std::vector<int>(static_cast<std::size_t>(nx), 0)};
  for (;;) {
    fn(current);
    // Odometer increment, most significant digit first, so the mapping
    // arrays come out in lexicographic order.
    int pos = nx - 1;
    while (pos >= 0 && current.mapping[static_cast<std::size_t>(pos)] == ny - 1) {
      current.mapping[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++current.mapping[static_cast<std::size_t>(pos)];
  }
}

std::vector<SetFunction> enumerate_functions(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<SetFunction> out;
  for_each_function(x, y, [&out](const SetFunction& fn) { out.push_back(fn); });
  return out;
}

namespace detail {

namespace {

struct PairUnit {
  int na = 0;
  int nb = 0;
  int xi = 0;
  int yi = 0;
};

struct PairResult {
  std::uint64_t functions = 0;
  std::uint64_t continuous = 0;
  std::vector<CampaignMismatch> mismatches;
};

}  // namespace

CampaignReport run_campaign_with(const CampaignConfig& config, const TheoremChecker& checker) {
  const int cap = config.include_four ? 4 : 3;
  if (config.max_points < 1 || config.max_points > cap) {
    throw Error(ErrorKind::UnsupportedSize,
                "max_points must be 1.." + std::to_string(cap) + ", got " +
                    std::to_string(config.max_points));
  }
  const auto start = std::chrono::steady_clock::now();

  // Sizes run 0..max_points: the empty space exists and its (unique) maps
  // are part of the theorem's scope.
  std::vector<std::vector<FiniteSpace>> spaces_by_size;
  for (int n = 0; n <= config.max_points; ++n) spaces_by_size.push_back(enumerate_spaces(n));

  std::vector<PairUnit> units;
  for (int na = 0; na <= config.max_points; ++na) {
    for (int nb = 0; nb <= config.max_points; ++nb) {
      const int xs = static_cast<int>(spaces_by_size[static_cast<std::size_t>(na)].size());
      const int ys = static_cast<int>(spaces_by_size[static_cast<std::size_t>(nb)].size());
      for (int xi = 0; xi < xs; ++xi) {
        for (int yi = 0; yi < ys; ++yi) units.push_back(PairUnit{na, nb, xi, yi});
      }
    }
  }

  std::vector<PairResult> results(units.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) return;
      const PairUnit& unit = units[i];
      const FiniteSpace& x = spaces_by_size[static_cast<std::size_t>(unit.na)]
                                           [static_cast<std::size_t>(unit.xi)];
      const FiniteSpace& y = spaces_by_size[static_cast<std::size_t>(unit.nb)]
                                           [static_cast<std::size_t>(unit.yi)];
      PairResult& slot = results[i];
      std::uint64_t fn_index = 0;
      for_each_function(x, y, [&](const SetFunction& fn) {
        const CheckOutcome outcome = checker(fn);
        ++slot.functions;
        if (outcome.continuous) ++slot.continuous;
        if (!outcome.ok) {
          slot.mismatches.push_back(
              CampaignMismatch{unit.na, unit.nb, unit.xi, unit.yi, fn_index});
        }
        ++fn_index;
      });
    }
  };

  unsigned thread_count = config.threads > 0
                              ? static_cast<unsigned>(config.threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  thread_count = std::min<unsigned>(thread_count, static_cast<unsigned>(units.size()));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CampaignReport report;
  report.max_points = config.max_points;
  for (const auto& group : spaces_by_size) report.spaces_checked.push_back(group.size());
  std::vector<std::vector<CampaignBlock>> block_grid(
      static_cast<std::size_t>(config.max_points + 1),
      std::vector<CampaignBlock>(static_cast<std::size_t>(config.max_points + 1)));
  for (std::size_t i = 0; i < units.size(); ++i) {
    const PairUnit& unit = units[i];
    const PairResult& slot = results[i];
    CampaignBlock& block =
        block_grid[static_cast<std::size_t>(unit.na)][static_cast<std::size_t>(unit.nb)];
    block.domain_points = unit.na;
    block.codomain_points = unit.nb;
    block.functions_checked += slot.functions;
    block.continuous_count += slot.continuous;
    report.functions_checked += slot.functions;
    report.continuous_count += slot.continuous;
    for (const auto& mismatch : slot.mismatches) report.mismatches.push_back(mismatch);
  }
  for (int na = 0; na <= config.max_points; ++na) {
    for (int nb = 0; nb <= config.max_points; ++nb) {
      report.blocks.push_back(
          block_grid[static_cast<std::size_t>(na)][static_cast<std::size_t>(nb)]);
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

CampaignReport run_campaign(const CampaignConfig& config) {
  return detail::run_campaign_with(config, [](const SetFunction& fn) {
    try {
      const TheoremReport report = verify_theorem(fn);
      return detail::CheckOutcome{true, report.continuous};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TheoremViolation) throw;
      return detail::CheckOutcome{false, is_continuous(fn).continuous};
    }
  });
}

std::vector<GalleryEntry> find_discontinuous_gallery(int max_points, std::size_t limit) {
  if (max_points < 1 || max_points > 4) {
    throw Error(ErrorKind::UnsupportedSize,
                "max_points must be 1..4, got " + std::to_string(max_points));
  }
  std::vector<GalleryEntry> out;
  if (limit == 0) return out;
  std::vector<std::vector<FiniteSpace>> spaces_by_size;
  for (int n = 0; n <= max_points; ++n) spaces_by_size.push_back(enumerate_spaces(n));
  for (int na = 0; na <= max_points; ++na) {
    for (int nb = 0; nb <= max_points; ++nb) {
      for (const FiniteSpace& x : spaces_by_size[static_cast<std::size_t>(na)]) {
        for (const FiniteSpace& y : spaces_by_size[static_cast<std::size_t>(nb)]) {
          bool full = false;
          for_each_function(x, y, [&](const SetFunction& fn) {
            if (full) return;
            const ContinuityResult cont = is_continuous(fn);
            if (cont.continuous) return;
            const Mask u = fn.domain.closure_mask(preimage(fn, *cont.witness).mask);
            out.push_back(GalleryEntry{fn, *cont.witness, Subset{u, na}});
            full = out.size() >= limit;
          });
          if (full) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace topocat
