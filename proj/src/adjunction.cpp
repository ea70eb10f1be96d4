#include "topocat/adjunction.hpp"

#include <string>

namespace topocat {

namespace {

void require_opposed(const MonotoneMap& phi, const MonotoneMap& psi) {
  if (!(phi.source == psi.target) || !(phi.target == psi.source)) {
    throw Error(ErrorKind::SpaceMismatch,
                "the two maps must run in opposite directions between the same spaces");
  }
  ensure_well_formed(phi);
  ensure_well_formed(psi);
}

}  // namespace

HomCase classify_hom_case(const MonotoneMap& phi, const MonotoneMap& psi, Subset u, Subset v) {
  require_opposed(phi, psi);
  if (u.arity != phi.source.point_count() || v.arity != phi.target.point_count()) {
    throw Error(ErrorKind::ArityMismatch, "the subsets must carry the spaces' point counts");
  }
  if (!phi.source.is_closed_mask(u.mask)) {
    throw Error(ErrorKind::NotClosed,
                "U = " + std::to_string(u.mask) + " is not closed in the source space");
  }
  if (!phi.target.is_closed_mask(v.mask)) {
    throw Error(ErrorKind::NotClosed,
                "V = " + std::to_string(v.mask) + " is not closed in the target space");
  }
  const bool forward = subset_le(phi.apply_mask(u.mask), v.mask);
  const bool backward = subset_le(u.mask, psi.apply_mask(v.mask));
  HomCaseKind kind;
  if (forward && backward) {
    kind = HomCaseKind::Case1;
  } else if (!forward && !backward) {
    kind = HomCaseKind::Case2;
  } else {
    kind = HomCaseKind::NoBijection;
  }
  return HomCase{kind, forward, backward};
}

AdjunctionVerdict is_adjoint(const MonotoneMap& phi, const MonotoneMap& psi) {
  require_opposed(phi, psi);
  const int nu = phi.source.point_count();
  const int nv = phi.target.point_count();
  for (Mask u : phi.source.closed_family()) {
    for (Mask v : phi.target.closed_family()) {
      const bool forward = subset_le(phi.apply_mask(u), v);
      const bool backward = subset_le(u, psi.apply_mask(v));
      if (forward != backward) {
        return AdjunctionVerdict{false, std::make_pair(Subset{u, nu}, Subset{v, nv})};
      }
    }
  }
  return AdjunctionVerdict{true, std::nullopt};
}

std::optional<MonotoneMap> try_right_adjoint(const MonotoneMap& phi) {
  ensure_well_formed(phi);
  const auto check = is_functor(phi);
  if (!check.functor) return std::nullopt;
  const auto& us = phi.source.closed_family();
  const auto& vs = phi.target.closed_family();

  MonotoneMap psi{phi.target, phi.source, {}};
  psi.table.reserve(vs.size());
  for (Mask v : vs) {
    // The candidate right adjoint must send V to the largest U with phi(U) <= V,
    // which in a lattice of closed sets is the union of all of them.
    Mask best = 0;
    for (Mask u : us) {
      if (subset_le(phi.apply_mask(u), v)) best |= u;
    }
    const int idx = phi.source.index_of_closed(best);
    if (idx < 0) return std::nullopt;
    psi.table.push_back(idx);
  }
  if (!is_adjoint(phi, psi).adjoint) return std::nullopt;
  return psi;
}

std::pair<MonotoneMap, MonotoneMap> compose_adjunctions(const MonotoneMap& phi1,
                                                        const MonotoneMap& psi1,
                                                        const MonotoneMap& phi2,
                                                        const MonotoneMap& psi2) {
  if (!is_adjoint(phi1, psi1).adjoint) {
    throw Error(ErrorKind::NotAdjointInput, "the first pair is not an adjunction");
  }
  if (!is_adjoint(phi2, psi2).adjoint) {
    throw Error(ErrorKind::NotAdjointInput, "the second pair is not an adjunction");
  }
  if (!(phi1.target == phi2.source)) {
    throw Error(ErrorKind::SpaceMismatch,
                "the first pair's target space must be the second pair's source space");
  }
  return {compose(phi2, phi1), compose(psi1, psi2)};
}

}  // namespace topocat
