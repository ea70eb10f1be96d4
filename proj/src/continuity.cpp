#include "topocat/continuity.hpp"

#include <string>

namespace topocat {

SetFunction make_set_function(FiniteSpace domain, FiniteSpace codomain,
                              std::vector<int> mapping) {
  if (static_cast<int>(mapping.size()) != domain.point_count()) {
    throw Error(ErrorKind::MalformedFunction,
                "mapping has " + std::to_string(mapping.size()) + " entries but the domain has " +
                    std::to_string(domain.point_count()) + " points");
  }
  for (int p : mapping) {
    if (p < 0 || p >= codomain.point_count()) {
      throw Error(ErrorKind::MalformedFunction,
                  "mapping value " + std::to_string(p) + " is not a point of the codomain");
    }
  }
  return SetFunction{std::move(domain), std::move(codomain), std::move(mapping)};
}

namespace {

Mask image_mask(const SetFunction& fn, Mask m) {
  Mask out = 0;
  for (int p = 0; p < fn.domain.point_count(); ++p) {
    if (m >> p & 1) out |= Mask{1} << fn.mapping[static_cast<std::size_t>(p)];
  }
  return out;
}

Mask preimage_mask(const SetFunction& fn, Mask m) {
  Mask out = 0;
  for (int p = 0; p < fn.domain.point_count(); ++p) {
    if (m >> fn.mapping[static_cast<std::size_t>(p)] & 1) out |= Mask{1} << p;
  }
  return out;
}

void require_domain_arity(const SetFunction& fn, Subset s) {
  if (s.arity != fn.domain.point_count()) {
    throw Error(ErrorKind::ArityMismatch,
                "subset has arity " + std::to_string(s.arity) + " but the domain has " +
                    std::to_string(fn.domain.point_count()) + " points");
  }
}

void require_codomain_arity(const SetFunction& fn, Subset s) {
  if (s.arity != fn.codomain.point_count()) {
    throw Error(ErrorKind::ArityMismatch,
                "subset has arity " + std::to_string(s.arity) + " but the codomain has " +
                    std::to_string(fn.codomain.point_count()) + " points");
  }
}

}  // namespace

Subset image(const SetFunction& fn, Subset s) {
  require_domain_arity(fn, s);
  return Subset{image_mask(fn, s.mask), fn.codomain.point_count()};
}

Subset preimage(const SetFunction& fn, Subset s) {
  require_codomain_arity(fn, s);
  return Subset{preimage_mask(fn, s.mask), fn.domain.point_count()};
}

ContinuityResult is_continuous(const SetFunction& fn) {
  // Preimages of closed sets must be closed; scan in ascending mask order so the
  // reported witness is the smallest offending closed set of the codomain.
  for (Mask v : fn.codomain.closed_family()) {
    if (!fn.domain.is_closed_mask(preimage_mask(fn, v))) {
      return ContinuityResult{false, Subset{v, fn.codomain.point_count()}};
    }
  }
  return ContinuityResult{true, std::nullopt};
}

MonotoneMap induced_direct(const SetFunction& fn) {
  MonotoneMap out{fn.domain, fn.codomain, {}};
  out.table.reserve(fn.domain.closed_family().size());
  for (Mask u : fn.domain.closed_family()) {
    const Mask v = fn.codomain.closure_mask(image_mask(fn, u));
    out.table.push_back(fn.codomain.index_of_closed(v));
  }
  return out;
}

MonotoneMap induced_inverse(const SetFunction& fn) {
  MonotoneMap out{fn.codomain, fn.domain, {}};
  out.table.reserve(fn.codomain.closed_family().size());
  for (Mask v : fn.codomain.closed_family()) {
    const Mask u = fn.domain.closure_mask(preimage_mask(fn, v));
    out.table.push_back(fn.domain.index_of_closed(u));
  }
  return out;
}

ImplicationResult check_ddag(const SetFunction& fn) {
  const int nu = fn.domain.point_count();
  const int nv = fn.codomain.point_count();
  for (Mask u : fn.domain.closed_family()) {
    for (Mask v : fn.codomain.closed_family()) {
      const bool hypothesis = subset_le(u, fn.domain.closure_mask(preimage_mask(fn, v)));
      const bool conclusion = subset_le(image_mask(fn, u), v);
      if (hypothesis && !conclusion) {
        return ImplicationResult{false, std::make_pair(Subset{u, nu}, Subset{v, nv})};
      }
    }
  }
  return ImplicationResult{true, std::nullopt};
}

ProofConditions proof_conditions(const SetFunction& fn, Subset u, Subset v) {
  require_domain_arity(fn, u);
  require_codomain_arity(fn, v);
  if (!fn.domain.is_closed_mask(u.mask)) {
    throw Error(ErrorKind::NotClosed,
                "U = " + std::to_string(u.mask) + " is not closed in the domain");
  }
  if (!fn.codomain.is_closed_mask(v.mask)) {
    throw Error(ErrorKind::NotClosed,
                "V = " + std::to_string(v.mask) + " is not closed in the codomain");
  }
  const MonotoneMap direct = induced_direct(fn);
  const MonotoneMap inverse = induced_inverse(fn);
  ProofConditions out{};
  out.c2 = subset_le(direct.apply_mask(u.mask), v.mask) ==
           subset_le(u.mask, inverse.apply_mask(v.mask));
  out.c3 = subset_le(fn.codomain.closure_mask(image_mask(fn, u.mask)), v.mask) ==
           subset_le(u.mask, fn.domain.closure_mask(preimage_mask(fn, v.mask)));
  out.c4 = subset_le(image_mask(fn, u.mask), v.mask) ==
           subset_le(u.mask, fn.domain.closure_mask(preimage_mask(fn, v.mask)));
  return out;
}

bool forward_inclusion_lemma(const SetFunction& fn, Subset u, Subset v) {
  require_domain_arity(fn, u);
  require_codomain_arity(fn, v);
  // If the image lands inside V, the set itself sits inside the closure of the preimage.
  if (!subset_le(image_mask(fn, u.mask), v.mask)) return true;
  return subset_le(u.mask, fn.domain.closure_mask(preimage_mask(fn, v.mask)));
}

TheoremReport verify_theorem(const SetFunction& fn) {
  const ContinuityResult cont = is_continuous(fn);
  const MonotoneMap direct = induced_direct(fn);
  const MonotoneMap inverse = induced_inverse(fn);
  const AdjunctionVerdict verdict = is_adjoint(direct, inverse);
  const ImplicationResult ddag = check_ddag(fn);

  if (cont.continuous != verdict.adjoint) {
    throw Error(ErrorKind::TheoremViolation,
                "continuity and adjointness of the induced pair disagree");
  }
  if (ddag.holds != verdict.adjoint) {
    throw Error(ErrorKind::TheoremViolation,
                "the inclusion implication and adjointness disagree");
  }
  if (!cont.continuous) {
    // Rebuild the failing closed set from the continuity witness: with
    // U = cl(f^-1(V)) the image of U must escape V, otherwise every route
    // above would have accepted.
    const Mask v = cont.witness->mask;
    const Mask u = fn.domain.closure_mask(preimage_mask(fn, v));
    if (subset_le(image_mask(fn, u), v)) {
      throw Error(ErrorKind::TheoremViolation,
                  "a discontinuity witness failed to produce an adjunction failure");
    }
  }
  return TheoremReport{cont.continuous, verdict.adjoint, cont.continuous == verdict.adjoint,
                       cont.witness, verdict.witness};
}

}  // namespace topocat
