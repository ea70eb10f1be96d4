#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topocat/adjunction.hpp"
#include "topocat/category.hpp"
#include "topocat/space.hpp"

namespace topocat {

/// A total function between the point sets of two finite spaces. mapping[p]
/// is the codomain point index of domain point p. Build through
/// make_set_function, which enforces totality and range.
struct SetFunction {
  FiniteSpace domain;
  FiniteSpace codomain;
  std::vector<int> mapping;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.mapping == b.mapping;
  }
};

/// Throws MalformedFunction unless mapping is total with in-range values.
/// An empty codomain admits only the empty domain.
SetFunction make_set_function(FiniteSpace domain, FiniteSpace codomain,
                              std::vector<int> mapping);

Subset image(const SetFunction& fn, Subset s);
Subset preimage(const SetFunction& fn, Subset t);

struct ContinuityResult {
  bool continuous = false;
  // Present iff discontinuous: the smallest-mask closed V of the codomain
  // whose preimage is not closed.
  std::optional<Subset> witness;
};

/// Continuity via closed sets: the preimage of every closed set is closed.
ContinuityResult is_continuous(const SetFunction& fn);

/// The direct-image functor induced by fn: U ↦ closure(fn(U)). Monotone for
/// every fn, continuous or not.
MonotoneMap induced_direct(const SetFunction& fn);

/// The preimage functor induced by fn: V ↦ closure(fn⁻¹(V)).
MonotoneMap induced_inverse(const SetFunction& fn);

struct ImplicationResult {
  bool holds = false;
  std::optional<std::pair<Subset, Subset>> witness;
};

/// Checks, over all closed (U, V): U ⊆ closure(fn⁻¹(V)) implies fn(U) ⊆ V.
/// This is exactly adjointness of the induced pair, and exactly continuity.
/// The witness is the smallest violating (U, V).
ImplicationResult check_ddag(const SetFunction& fn);

/// One biconditional computed by three routes that must agree on every
/// closed pair (closure is the least closed superset, so asking the closure
/// or the raw image makes no difference against a closed right-hand side):
///   c2: induced_direct(U) ⊆ V      iff  U ⊆ induced_inverse(V)   (tables)
///   c3: closure(fn(U)) ⊆ V         iff  U ⊆ closure(fn⁻¹(V))     (direct)
///   c4: fn(U) ⊆ V                  iff  U ⊆ closure(fn⁻¹(V))
struct ProofConditions {
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
};

ProofConditions proof_conditions(const SetFunction& fn, Subset u, Subset v);

/// fn(U) ⊆ V implies U ⊆ closure(fn⁻¹(V)), for closed U, V. Holds for every
/// function; no continuity needed. Returns the implication's truth value.
bool forward_inclusion_lemma(const SetFunction& fn, Subset u, Subset v);

struct TheoremReport {
  bool continuous = false;
  bool adjoint = false;
  bool agree = false;
  std::optional<Subset> continuity_witness;
  // Pair violating the adjointness criterion (equivalently the implication
  // of check_ddag) in exactly one direction.
  std::optional<std::pair<Subset, Subset>> adjunction_witness;
};

/// Full verdict for one function: decides continuity, builds the induced
/// pair, decides adjointness, and cross-checks that all routes agree
/// (including the converse construction that turns a continuity witness V
/// into the violating pair (closure(fn⁻¹(V)), V)). A disagreement would be
/// an implementation bug and throws TheoremViolation.
TheoremReport verify_theorem(const SetFunction& fn);

}  // namespace topocat
