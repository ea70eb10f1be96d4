#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "topocat/campaign.hpp"
#include "topocat/category.hpp"
#include "topocat/continuity.hpp"
#include "topocat/space.hpp"

namespace topocat {

// All serialization uses ordered_json so emitted field order is stable.
using Json = nlohmann::ordered_json;

/// Labels used for printing a space's points: the stored labels when
/// present, otherwise "0", "1", ....
std::vector<std::string> effective_labels(const FiniteSpace& space);

/// Label list of a subset, in point-index order.
std::vector<std::string> subset_labels(const FiniteSpace& space, Mask mask);

/// Brace rendering, e.g. "{a,b}" or "{}".
std::string render_subset(const FiniteSpace& space, Mask mask);

// Space file format:
//   {"points": ["a","b"], "closed_sets": [[], ["b"], ["a","b"]]}
// or with "open_sets" instead (exactly one of the two). Parsing validates
// the axioms; serialization always emits closed_sets in canonical order.
Json space_to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const Json& j);

// Function file format:
//   {"domain": <space>, "codomain": <space>, "map": {"a": "0", "b": "1"}}
Json set_function_to_json(const SetFunction& fn);
SetFunction set_function_from_json(const Json& j);

// Functor format: each source closed set with its image.
//   {"source": <space>, "target": <space>, "table": [[[], []], [["b"], ["b"]]]}
Json monotone_map_to_json(const MonotoneMap& map);
MonotoneMap monotone_map_from_json(const Json& j);

// {"adjoint": false, "witness": {"U": ["a"], "V": []}} — witness present
// iff not adjoint. x is Φ's source, y its target.
Json verdict_to_json(const AdjunctionVerdict& verdict,
                     const FiniteSpace& x, const FiniteSpace& y);

// {"continuous": .., "adjoint": .., "agree": .., "continuity_witness": [..],
//  "adjunction_witness": {"U": [..], "V": [..]}} — witness fields present
// only when the corresponding property fails.
Json theorem_report_to_json(const TheoremReport& report, const SetFunction& fn);

Json campaign_report_to_json(const CampaignReport& report);
Json gallery_to_json(const std::vector<GalleryEntry>& gallery);

/// {"error": "<kind>", "message": "..."} (+ "pair" when the error names an
/// offending pair of subsets and labels are available to render it).
Json error_to_json(const Error& error, const std::vector<std::string>* labels = nullptr);

/// Reads and parses a whole file; throws ParseError on I/O or syntax
/// problems.
Json load_json_file(const std::string& path);

}  // namespace topocat
