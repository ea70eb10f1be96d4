#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topocat/space.hpp"

namespace topocat {

// The closed subsets of a space form a category with at most one morphism
// between any two objects: the inclusion, present exactly when U ⊆ U'.
enum class HomSet {
  Empty,
  SingletonInclusion,
};

/// A functor between two closed-set categories, stored as an index table:
/// table[i] is the position in target.closed_family() of the image of the
/// i-th source closed set. Between poset categories, functoriality is
/// exactly monotonicity of this table; see is_functor.
///
/// Tables make functors comparable and serializable. Equality is structural
/// on both spaces plus the table.
struct MonotoneMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<int> table;

  /// Image mask of a closed source mask. Throws NotClosed for non-members.
  Mask apply_mask(Mask closed_in_source) const;
  Subset apply(Subset u) const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.source == b.source && a.target == b.target && a.table == b.table;
  }
};

/// Throws MalformedTable unless the table has one in-range entry per source
/// closed set.
void ensure_well_formed(const MonotoneMap& map);

/// The hom-set from u to u_prime in the closed-set category of `space`.
HomSet hom(const FiniteSpace& space, Subset u, Subset u_prime);

struct FunctorCheck {
  bool functor = false;
  // First pair (U, U') in ascending (mask, mask) order with U ⊆ U' but
  // map(U) ⊄ map(U').
  std::optional<std::pair<Subset, Subset>> violation;
};

/// Decides whether the table is a functor, i.e. monotone. Identity and
/// composition preservation then hold automatically (asserted by tests, not
/// assumed here).
FunctorCheck is_functor(const MonotoneMap& map);

/// g after f. Requires f.target == g.source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

MonotoneMap identity_functor(const FiniteSpace& space);

/// Verifies that the hom-set bijections behind an adjoint pair are natural:
/// pre/post-composition with inclusions lands where the bijection sends it.
/// In a poset category parallel morphisms are equal, so this holds whenever
/// the bijections exist; the check is run concretely rather than assumed.
/// Throws BijectionMissing (with the smallest offending (U, V)) when some
/// hom pair has a bijection on neither side.
bool check_naturality(const MonotoneMap& phi, const MonotoneMap& psi);

}  // namespace topocat
