#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "topocat/continuity.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// Calls fn once per total function from x to y, in lexicographic order of
/// the mapping array. The SetFunction passed to the callback is reused
/// between calls; copy it to keep it. An empty domain yields exactly one
/// (empty) function; an empty codomain with a nonempty domain yields none.
void for_each_function(const FiniteSpace& x, const FiniteSpace& y,
                       const std::function<void(const SetFunction&)>& fn);

/// All |Y|^|X| total functions, materialized in the same order.
std::vector<SetFunction> enumerate_functions(const FiniteSpace& x, const FiniteSpace& y);

struct CampaignConfig {
  int max_points = 3;
  bool include_four = false;  // required to allow max_points == 4
  int threads = 0;            // 0 = hardware concurrency
};

// Aggregate for one (domain size, codomain size) block.
struct CampaignBlock {
  int domain_points = 0;
  int codomain_points = 0;
  std::uint64_t functions_checked = 0;
  std::uint64_t continuous_count = 0;
};

// Identifies one function whose continuity and adjointness verdicts
// disagreed. Expected to never occur.
struct CampaignMismatch {
  int domain_points = 0;
  int codomain_points = 0;
  int domain_space_index = 0;    // index into enumerate_spaces(domain_points)
  int codomain_space_index = 0;  // index into enumerate_spaces(codomain_points)
  std::uint64_t function_index = 0;

  friend bool operator==(const CampaignMismatch&, const CampaignMismatch&) = default;
};

struct CampaignReport {
  int max_points = 0;
  std::vector<std::uint64_t> spaces_checked;  // indexed by point count
  std::uint64_t functions_checked = 0;
  std::uint64_t continuous_count = 0;
  std::vector<CampaignMismatch> mismatches;
  double elapsed_seconds = 0.0;
  std::vector<CampaignBlock> blocks;  // ascending (domain size, codomain size)
};

/// Runs verify_theorem over every ordered pair of topologies with up to
/// max_points points and every function between them. Work is partitioned
/// by space pair and may run on several threads; results merge in canonical
/// block order, so the report (elapsed aside) is identical at any thread
/// count. max_points is 1..3, or 4 with include_four set.
CampaignReport run_campaign(const CampaignConfig& config);

struct GalleryEntry {
  SetFunction fn;
  Subset continuity_witness;  // closed V with non-closed preimage
  Subset constructed_u;       // closure(preimage(V)); (U, V) violates check_ddag
};

/// First `limit` discontinuous functions in campaign order, each with its
/// continuity witness and the constructed violating pair.
std::vector<GalleryEntry> find_discontinuous_gallery(int max_points, std::size_t limit);

namespace detail {

struct CheckOutcome {
  bool ok = false;          // verdicts agreed
  bool continuous = false;  // counted into continuous_count
};

using TheoremChecker = std::function<CheckOutcome(const SetFunction&)>;

/// Campaign engine with an injectable per-function checker. run_campaign
/// wires in verify_theorem; tests wire in corrupted checkers to prove the
/// harness detects disagreements.
CampaignReport run_campaign_with(const CampaignConfig& config, const TheoremChecker& checker);

}  // namespace detail

}  // namespace topocat
