#include "topocat/category.hpp"

#include <string>

namespace topocat {

Mask MonotoneMap::apply_mask(Mask m) const {
  const int idx = source.index_of_closed(m);
  if (idx < 0) {
    throw Error(ErrorKind::NotClosed,
                "mask " + std::to_string(m) + " is not a closed set of the source space");
  }
  return target.closed_family()[static_cast<std::size_t>(table[static_cast<std::size_t>(idx)])];
}

Subset MonotoneMap::apply(Subset u) const {
  if (u.arity != source.point_count()) {
    throw Error(ErrorKind::ArityMismatch,
                "subset has arity " + std::to_string(u.arity) + " but the source space has " +
                    std::to_string(source.point_count()) + " points");
  }
  return Subset{apply_mask(u.mask), target.point_count()};
}

void ensure_well_formed(const MonotoneMap& map) {
  if (map.table.size() != map.source.closed_family().size()) {
    throw Error(ErrorKind::MalformedTable,
                "table has " + std::to_string(map.table.size()) + " entries but the source has " +
                    std::to_string(map.source.closed_family().size()) + " closed sets");
  }
  const int target_size = static_cast<int>(map.target.closed_family().size());
  for (int v : map.table) {
    if (v < 0 || v >= target_size) {
      throw Error(ErrorKind::MalformedTable,
                  "table entry " + std::to_string(v) + " is not an index into the " +
                      std::to_string(target_size) + " closed sets of the target");
    }
  }
}

HomSet hom(const FiniteSpace& space, Subset u, Subset u_prime) {
  if (u.arity != space.point_count() || u_prime.arity != space.point_count()) {
    throw Error(ErrorKind::ArityMismatch, "hom arguments must carry the space's point count");
  }
  if (!space.is_closed_mask(u.mask) || !space.is_closed_mask(u_prime.mask)) {
    throw Error(ErrorKind::NotClosed, "hom arguments must be closed sets of the space");
  }
  return subset_le(u.mask, u_prime.mask) ? HomSet::SingletonInclusion : HomSet::Empty;
}

FunctorCheck is_functor(const MonotoneMap& map) {
  ensure_well_formed(map);
  const auto& family = map.source.closed_family();
  const int n = map.source.point_count();
  // Identities and composition are automatic for a table; only order preservation can fail.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (!subset_le(family[i], family[j])) continue;
      if (!subset_le(map.apply_mask(family[i]), map.apply_mask(family[j]))) {
        return FunctorCheck{false,
                            std::make_pair(Subset{family[i], n}, Subset{family[j], n})};
      }
    }
  }
  return FunctorCheck{true, std::nullopt};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  ensure_well_formed(f);
  ensure_well_formed(g);
  if (!(f.target == g.source)) {
    throw Error(ErrorKind::SpaceMismatch,
                "cannot compose: the first map's target differs from the second map's source");
  }
  MonotoneMap out{f.source, g.target, {}};
  out.table.reserve(f.table.size());
  for (int idx : f.table) {
    out.table.push_back(g.table[static_cast<std::size_t>(idx)]);
  }
  return out;
}

MonotoneMap identity_functor(const FiniteSpace& space) {
  MonotoneMap out{space, space, {}};
  out.table.resize(space.closed_family().size());
  for (std::size_t i = 0; i < out.table.size(); ++i) out.table[i] = static_cast<int>(i);
  return out;
}

bool check_naturality(const MonotoneMap& phi, const MonotoneMap& psi) {
  if (!(phi.source == psi.target) || !(phi.target == psi.source)) {
    throw Error(ErrorKind::SpaceMismatch,
                "the two maps must run in opposite directions between the same spaces");
  }
  ensure_well_formed(phi);
  ensure_well_formed(psi);
  const auto& us = phi.source.closed_family();
  const auto& vs = phi.target.closed_family();

  for (Mask u : us) {
    for (Mask v : vs) {
      const bool forward = subset_le(phi.apply_mask(u), v);
      const bool backward = subset_le(u, psi.apply_mask(v));
      if (forward != backward) {
        throw Error(ErrorKind::BijectionMissing,
                    "hom sets disagree at U = " + std::to_string(u) + ", V = " + std::to_string(v),
                    u, v);
      }
    }
  }
  // Bijections exist everywhere; check they commute with inclusions on both sides.
  for (Mask u : us) {
    for (Mask v : vs) {
      if (!subset_le(phi.apply_mask(u), v)) continue;
      for (Mask v_prime : vs) {
        if (!subset_le(v, v_prime)) continue;
        if (!subset_le(u, psi.apply_mask(v_prime))) return false;
      }
      for (Mask u_prime : us) {
        if (!subset_le(u_prime, u)) continue;
        if (!subset_le(u_prime, psi.apply_mask(v))) return false;
      }
    }
  }
  return true;
}

}  // namespace topocat
