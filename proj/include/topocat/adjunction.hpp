#pragma once

#include <optional>
#include <utility>

#include "topocat/category.hpp"

namespace topocat {

// Classification of one hom pair (U, V) for functors Φ: Closed(X)→Closed(Y)
// and Ψ: Closed(Y)→Closed(X). A bijection between Hom(Φ(U), V) and
// Hom(U, Ψ(V)) exists exactly when both inclusions hold (Case1, both
// singletons) or neither does (Case2, both empty).
enum class HomCaseKind {
  Case1,
  Case2,
  NoBijection,
};

struct HomCase {
  HomCaseKind kind = HomCaseKind::NoBijection;
  bool forward_holds = false;   // Φ(U) ⊆ V
  bool backward_holds = false;  // U ⊆ Ψ(V)
};

HomCase classify_hom_case(const MonotoneMap& phi, const MonotoneMap& psi,
                          Subset u, Subset v);

struct AdjunctionVerdict {
  bool adjoint = false;
  // Present iff not adjoint: the lexicographically smallest (U, V) by
  // (mask, mask) where exactly one of the two inclusions holds.
  std::optional<std::pair<Subset, Subset>> witness;
};

/// Decides whether (phi, psi) is an adjoint pair: Φ(U) ⊆ V iff U ⊆ Ψ(V) for
/// every closed U of X and V of Y. The maps must run in opposite directions
/// between the same two spaces.
AdjunctionVerdict is_adjoint(const MonotoneMap& phi, const MonotoneMap& psi);

/// Synthesizes the right adjoint of phi when one exists: the candidate sends
/// each closed V to the union of all closed U with phi(U) ⊆ V. The union is
/// re-checked for closedness (rather than assuming join preservation) and
/// the candidate is confirmed with is_adjoint before being returned.
/// Adjoints are unique, so when any right adjoint exists this finds it.
std::optional<MonotoneMap> try_right_adjoint(const MonotoneMap& phi);

/// Composes two adjoint pairs (phi1, psi1): X⇄Y and (phi2, psi2): Y⇄Z into
/// (phi2∘phi1, psi1∘psi2): X⇄Z. Inputs are re-verified; throws
/// NotAdjointInput when either pair fails.
std::pair<MonotoneMap, MonotoneMap> compose_adjunctions(
    const MonotoneMap& phi1, const MonotoneMap& psi1,
    const MonotoneMap& phi2, const MonotoneMap& psi2);

}  // namespace topocat
