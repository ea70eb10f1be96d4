#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topocat/errors.hpp"

namespace topocat {

// Points of a space are the indices 0..n-1; a subset is the bitmask with
// bit p set iff point p is a member. Bit order doubles as the canonical
// ordering everywhere: masks compare ascending, and a ⊆ b implies a <= b.
using Mask = std::uint64_t;

inline constexpr int max_point_count = 63;

// enumerate_spaces() filters every candidate family over n points, which is
// desk-scale only up to 2^16 candidates.
inline constexpr int max_enumeration_points = 4;

inline bool subset_le(Mask a, Mask b) { return (a & ~b) == 0; }

// A subset tagged with the point count of the space it lives in, so that
// operations can reject sets from the wrong space.
struct Subset {
  Mask mask = 0;
  int arity = 0;

  friend bool operator==(const Subset&, const Subset&) = default;
};

/// A finite topological space, stored as its family of closed subsets.
///
/// Construction validates the closed-set axioms: the empty and the full set
/// are members, and the family is closed under pairwise union and pairwise
/// intersection (pairwise suffices at finite size). The family is kept
/// canonical: strictly ascending mask order, no duplicates. Instances are
/// immutable and safe to share across threads.
///
/// Labels are presentation only. Equality and all set-level operations see
/// the structure (point count + closed family), never the labels.
class FiniteSpace {
 public:
  FiniteSpace(int point_count, std::vector<Mask> closed_family,
              std::vector<std::string> point_labels = {});

  int point_count() const { return n_; }
  Mask full_mask() const { return n_ == 0 ? 0 : ((Mask{1} << n_) - 1); }
  const std::vector<Mask>& closed_family() const { return family_; }
  int family_size() const { return static_cast<int>(family_.size()); }

  /// Empty when the space was built without labels.
  const std::vector<std::string>& point_labels() const { return labels_; }

  /// Index into closed_family(), or -1 when the mask is not closed.
  int index_of_closed(Mask m) const;
  bool is_closed_mask(Mask m) const { return index_of_closed(m) >= 0; }

  /// Smallest closed superset of m: the intersection of all closed sets
  /// containing m. Always a member of the family.
  Mask closure_mask(Mask m) const;

  Subset subset(Mask m) const { return Subset{m, n_}; }

  /// Structural equality: point count and closed family. Labels ignored.
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.family_ == b.family_;
  }

 private:
  int n_;
  std::vector<Mask> family_;
  std::vector<std::string> labels_;
};

/// Validates and canonicalizes a closed-set family. Throws MissingEmptySet,
/// MissingFullSet, NotClosedUnderUnion or NotClosedUnderIntersection (the
/// latter two carry the first offending pair in scan order).
FiniteSpace validate_space(int point_count, std::vector<Mask> closed_family,
                           std::vector<std::string> point_labels = {});

/// Builds a space from its open-set family by complementing every mask.
/// Errors are reported against the closed family after complementation.
FiniteSpace from_open_family(int point_count, const std::vector<Mask>& open_family,
                             std::vector<std::string> point_labels = {});

Subset closure(const FiniteSpace& space, Subset s);
bool is_closed(const FiniteSpace& space, Subset s);

/// Smallest closed-set family containing the seeds: starts from
/// {∅, full} ∪ seeds and closes under pairwise union/intersection to a
/// fixpoint.
FiniteSpace generate_from_closed_subbasis(int point_count, const std::vector<Mask>& seeds);

/// Every topology on n labeled points, exactly once, ordered by ascending
/// family encoding (see family_encoding). Hard-capped at n <= 4.
std::vector<FiniteSpace> enumerate_spaces(int point_count);

/// Canonical integer encoding of a space's family: bit k is set iff the
/// subset with mask k is closed. Defined for point counts <= 6.
std::uint64_t family_encoding(const FiniteSpace& space);

}  // namespace topocat
