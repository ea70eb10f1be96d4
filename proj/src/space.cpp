#include "topocat/space.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace topocat {

namespace {

int find_in_sorted(const std::vector<Mask>& family, Mask m) {
  auto it = std::lower_bound(family.begin(), family.end(), m);
  if (it != family.end() && *it == m) return static_cast<int>(it - family.begin());
  return -1;
}

std::string mask_to_string(Mask m, int arity) {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < arity; ++p) {
    if (m >> p & 1) {
      if (!first) out += ',';
      out += std::to_string(p);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(int point_count, std::vector<Mask> closed_family,
                         std::vector<std::string> point_labels)
    : n_(point_count), family_(std::move(closed_family)), labels_(std::move(point_labels)) {
  if (n_ < 0 || n_ > max_point_count) {
    throw Error(ErrorKind::UnsupportedSize,
                "point count must be in [0, " + std::to_string(max_point_count) +
                    "], got " + std::to_string(n_));
  }
  const Mask full = full_mask();
  for (Mask m : family_) {
    if (m & ~full) {
      throw Error(ErrorKind::MaskOutOfRange,
                  "subset mask " + std::to_string(m) + " uses bits beyond the " +
                      std::to_string(n_) + " points");
    }
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_) {
      throw Error(ErrorKind::BadLabels,
                  "expected " + std::to_string(n_) + " labels, got " +
                      std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
      throw Error(ErrorKind::BadLabels, "point labels must be distinct");
    }
  }

  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());

  if (find_in_sorted(family_, 0) < 0) {
    throw Error(ErrorKind::MissingEmptySet, "the empty set is not in the closed family");
  }
  if (find_in_sorted(family_, full) < 0) {
    throw Error(ErrorKind::MissingFullSet, "the full set is not in the closed family");
  }
  const int k = static_cast<int>(family_.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Mask u = family_[i] | family_[j];
      if (find_in_sorted(family_, u) < 0) {
        throw Error(ErrorKind::NotClosedUnderUnion,
                    "union of " + mask_to_string(family_[i], n_) + " and " +
                        mask_to_string(family_[j], n_) + " is not closed",
                    family_[i], family_[j]);
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Mask w = family_[i] & family_[j];
      if (find_in_sorted(family_, w) < 0) {
        throw Error(ErrorKind::NotClosedUnderIntersection,
                    "intersection of " + mask_to_string(family_[i], n_) + " and " +
                        mask_to_string(family_[j], n_) + " is not closed",
                    family_[i], family_[j]);
      }
    }
  }
}

int FiniteSpace::index_of_closed(Mask m) const { return find_in_sorted(family_, m); }

Mask FiniteSpace::closure_mask(Mask m) const {
  Mask acc = full_mask();
  for (Mask c : family_) {
    if (subset_le(m, c)) acc &= c;
  }
  return acc;
}

FiniteSpace validate_space(int point_count, std::vector<Mask> closed_family,
                           std::vector<std::string> point_labels) {
  return FiniteSpace(point_count, std::move(closed_family), std::move(point_labels));
}

FiniteSpace from_open_family(int point_count, const std::vector<Mask>& open_family,
                             std::vector<std::string> point_labels) {
  if (point_count < 0 || point_count > max_point_count) {
    throw Error(ErrorKind::UnsupportedSize,
                "point count must be in [0, " + std::to_string(max_point_count) +
                    "], got " + std::to_string(point_count));
  }
  const Mask full = point_count == 0 ? 0 : ((Mask{1} << point_count) - 1);
  std::vector<Mask> closed;
  closed.reserve(open_family.size());
  for (Mask m : open_family) {
    if (m & ~full) {
      throw Error(ErrorKind::MaskOutOfRange,
                  "subset mask " + std::to_string(m) + " uses bits beyond the " +
                      std::to_string(point_count) + " points");
    }
    closed.push_back(full & ~m);
  }
  return FiniteSpace(point_count, std::move(closed), std::move(point_labels));
}

namespace {

void require_arity(const FiniteSpace& space, Subset s, const char* what) {
  if (s.arity != space.point_count()) {
    throw Error(ErrorKind::ArityMismatch,
                std::string(what) + " has arity " + std::to_string(s.arity) +
                    " but the space has " + std::to_string(space.point_count()) + " points");
  }
}

}  // namespace

Subset closure(const FiniteSpace& space, Subset s) {
  require_arity(space, s, "subset");
  return Subset{space.closure_mask(s.mask), space.point_count()};
}

bool is_closed(const FiniteSpace& space, Subset s) {
  require_arity(space, s, "subset");
  return space.is_closed_mask(s.mask);
}

FiniteSpace generate_from_closed_subbasis(int point_count, const std::vector<Mask>& seeds) {
  if (point_count < 0 || point_count > max_point_count) {
    throw Error(ErrorKind::UnsupportedSize,
                "point count must be in [0, " + std::to_string(max_point_count) +
                    "], got " + std::to_string(point_count));
  }
  const Mask full = point_count == 0 ? 0 : ((Mask{1} << point_count) - 1);
  std::set<Mask> family{Mask{0}, full};
  for (Mask m : seeds) {
    if (m & ~full) {
      throw Error(ErrorKind::MaskOutOfRange,
                  "seed mask " + std::to_string(m) + " uses bits beyond the " +
                      std::to_string(point_count) + " points");
    }
    family.insert(m);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Mask> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        changed |= family.insert(snapshot[i] | snapshot[j]).second;
        changed |= family.insert(snapshot[i] & snapshot[j]).second;
      }
    }
  }
  return FiniteSpace(point_count, std::vector<Mask>(family.begin(), family.end()));
}

std::vector<FiniteSpace> enumerate_spaces(int point_count) {
  if (point_count < 0 || point_count > max_enumeration_points) {
    throw Error(ErrorKind::UnsupportedSize,
                "space enumeration supports 0 to " + std::to_string(max_enumeration_points) +
                    " points, got " + std::to_string(point_count));
  }
  const int subset_count = 1 << point_count;  // <= 16
  const std::uint64_t encodings = std::uint64_t{1} << subset_count;
  std::vector<FiniteSpace> out;
  std::vector<Mask> members;
  for (std::uint64_t enc = 0; enc < encodings; ++enc) {
    if (!(enc & 1)) continue;                              // empty set present
    if (!(enc >> (subset_count - 1) & 1)) continue;        // full set present
    members.clear();
    for (int m = 0; m < subset_count; ++m) {
      if (enc >> m & 1) members.push_back(static_cast<Mask>(m));
    }
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!(enc >> (members[i] | members[j]) & 1) ||
            !(enc >> (members[i] & members[j]) & 1)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(point_count, members);
  }
  return out;
}

std::uint64_t family_encoding(const FiniteSpace& space) {
  if (space.point_count() > 6) {
    throw Error(ErrorKind::UnsupportedSize,
                "family encoding is defined for spaces with at most 6 points");
  }
  std::uint64_t enc = 0;
  for (Mask m : space.closed_family()) enc |= std::uint64_t{1} << m;
  return enc;
}

}  // namespace topocat
