#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "test_support.hpp"
#include "topocat/campaign.hpp"
#include "topocat/continuity.hpp"

using support::discrete;
using support::indiscrete;
using support::sierpinski;
using topocat::Error;
using topocat::ErrorKind;
using topocat::FiniteSpace;
using topocat::Mask;
using topocat::MonotoneMap;
using topocat::SetFunction;

namespace {

SetFunction indiscrete_to_discrete() {
  return topocat::make_set_function(indiscrete(2), discrete(2), {0, 1});
}

// Set-theoretic image/preimage, no masks.
std::set<int> oracle_image(const SetFunction& fn, const std::set<int>& s) {
  std::set<int> out;
  for (int p : s) out.insert(fn.mapping[static_cast<std::size_t>(p)]);
  return out;
}

std::set<int> oracle_preimage(const SetFunction& fn, const std::set<int>& s) {
  std::set<int> out;
  for (int p = 0; p < fn.domain.point_count(); ++p) {
    if (s.count(fn.mapping[static_cast<std::size_t>(p)])) out.insert(p);
  }
  return out;
}

void for_all_functions_up_to(int max_points,
                             const std::function<void(const SetFunction&)>& body) {
  for (int na = 0; na <= max_points; ++na) {
    for (int nb = 0; nb <= max_points; ++nb) {
      for (const FiniteSpace& x : topocat::enumerate_spaces(na)) {
        for (const FiniteSpace& y : topocat::enumerate_spaces(nb)) {
          topocat::for_each_function(x, y, body);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("set functions must be total with in-range values") {
  try {
    topocat::make_set_function(sierpinski(), discrete(2), {0});
    FAIL("partial mapping accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedFunction);
  }
  try {
    topocat::make_set_function(sierpinski(), discrete(2), {0, 2});
    FAIL("out-of-range point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedFunction);
  }
  // Empty domain into empty codomain is the one lawful degenerate case.
  const auto empty = topocat::make_set_function(FiniteSpace(0, {0}), FiniteSpace(0, {0}), {});
  CHECK(topocat::is_continuous(empty).continuous);
}

TEST_CASE("image and preimage match the set-theoretic oracle") {
  auto gen = support::rng(31);
  for (int round = 0; round < 100; ++round) {
    const FiniteSpace x = support::random_space(gen, 3);
    const FiniteSpace y = support::random_space(gen, 2 + static_cast<int>(gen() % 2));
    const SetFunction fn = support::random_function(gen, x, y);
    for (Mask m = 0; m <= x.full_mask(); ++m) {
      CHECK(support::expand(topocat::image(fn, x.subset(m)).mask, y.point_count()) ==
            oracle_image(fn, support::expand(m, x.point_count())));
    }
    for (Mask m = 0; m <= y.full_mask(); ++m) {
      CHECK(support::expand(topocat::preimage(fn, y.subset(m)).mask, x.point_count()) ==
            oracle_preimage(fn, support::expand(m, y.point_count())));
    }
  }
  const SetFunction fn = indiscrete_to_discrete();
  try {
    topocat::image(fn, topocat::Subset{0, 3});
    FAIL("arity mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArityMismatch);
  }
}

TEST_CASE("continuity by closed preimages, with the smallest witness") {
  const auto id = topocat::make_set_function(sierpinski(), sierpinski(), {0, 1});
  CHECK(topocat::is_continuous(id).continuous);

  const auto bad = indiscrete_to_discrete();
  const auto result = topocat::is_continuous(bad);
  CHECK_FALSE(result.continuous);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->mask == 0b01);  // V = {0}, its preimage {0} is not closed
  CHECK_FALSE(bad.domain.is_closed_mask(topocat::preimage(bad, *result.witness).mask));
}

TEST_CASE("continuity agrees with the open-set characterization") {
  // Preimage commutes with complement, so closed-preimage continuity must
  // coincide with open-preimage continuity.
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    bool opens_ok = true;
    for (Mask closed : fn.codomain.closed_family()) {
      const Mask open = fn.codomain.full_mask() & ~closed;
      const Mask pre = topocat::preimage(fn, fn.codomain.subset(open)).mask;
      const Mask pre_complement = fn.domain.full_mask() & ~pre;
      opens_ok = opens_ok && fn.domain.is_closed_mask(pre_complement);
    }
    CHECK(topocat::is_continuous(fn).continuous == opens_ok);
  });
}

TEST_CASE("constant functions are always continuous") {
  for (int nb = 1; nb <= 3; ++nb) {
    for (const FiniteSpace& x : topocat::enumerate_spaces(3)) {
      for (const FiniteSpace& y : topocat::enumerate_spaces(nb)) {
        for (int c = 0; c < nb; ++c) {
          const SetFunction fn = topocat::make_set_function(
              x, y, std::vector<int>(static_cast<std::size_t>(x.point_count()), c));
          CHECK(topocat::is_continuous(fn).continuous);
        }
      }
    }
  }
}

TEST_CASE("induced functor tables on the worked examples") {
  // Constant-to-b on the Sierpinski space.
  const auto to_b = topocat::make_set_function(sierpinski(), sierpinski(), {1, 1});
  const MonotoneMap direct = topocat::induced_direct(to_b);
  CHECK(direct.apply_mask(0b00) == 0b00);
  CHECK(direct.apply_mask(0b10) == 0b10);
  CHECK(direct.apply_mask(0b11) == 0b10);

  const auto bad = indiscrete_to_discrete();
  const MonotoneMap bad_direct = topocat::induced_direct(bad);
  CHECK(bad_direct.apply_mask(0b00) == 0b00);
  CHECK(bad_direct.apply_mask(0b11) == 0b11);
  const MonotoneMap bad_inverse = topocat::induced_inverse(bad);
  CHECK(bad_inverse.apply_mask(0b00) == 0b00);
  CHECK(bad_inverse.apply_mask(0b01) == 0b11);  // closure in the indiscrete domain
  CHECK(bad_inverse.apply_mask(0b10) == 0b11);
  CHECK(bad_inverse.apply_mask(0b11) == 0b11);
}

TEST_CASE("both induced functors are monotone for every function, continuous or not") {
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    CHECK(topocat::is_functor(topocat::induced_direct(fn)).functor);
    CHECK(topocat::is_functor(topocat::induced_inverse(fn)).functor);
  });
}

TEST_CASE("the inclusion implication matches adjointness of the induced pair") {
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    const auto ddag = topocat::check_ddag(fn);
    const auto verdict =
        topocat::is_adjoint(topocat::induced_direct(fn), topocat::induced_inverse(fn));
    CHECK(ddag.holds == verdict.adjoint);
    if (!ddag.holds) {
      REQUIRE(ddag.witness.has_value());
      const auto [u, v] = *ddag.witness;
      CHECK(topocat::subset_le(
          u.mask, fn.domain.closure_mask(topocat::preimage(fn, v).mask)));
      CHECK_FALSE(topocat::subset_le(topocat::image(fn, u).mask, v.mask));
    }
  });

  const auto ddag = topocat::check_ddag(indiscrete_to_discrete());
  CHECK_FALSE(ddag.holds);
  REQUIRE(ddag.witness.has_value());
  CHECK(ddag.witness->first.mask == 0b11);
  CHECK(ddag.witness->second.mask == 0b01);
}

TEST_CASE("the three proof conditions agree on every closed pair") {
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    for (Mask u : fn.domain.closed_family()) {
      for (Mask v : fn.codomain.closed_family()) {
        const auto conditions =
            topocat::proof_conditions(fn, fn.domain.subset(u), fn.codomain.subset(v));
        CHECK(conditions.c2 == conditions.c3);
        CHECK(conditions.c3 == conditions.c4);
      }
    }
  });

  const auto fn = indiscrete_to_discrete();
  try {
    topocat::proof_conditions(fn, fn.domain.subset(0b01), fn.codomain.subset(0));
    FAIL("non-closed U accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
}

TEST_CASE("the forward inclusion holds with no continuity assumption") {
  // All subsets, closed or not: if the image lands in V, the set sits in
  // the closure of the preimage.
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    for (Mask u = 0; u <= fn.domain.full_mask(); ++u) {
      for (Mask v = 0; v <= fn.codomain.full_mask(); ++v) {
        CHECK(topocat::forward_inclusion_lemma(fn, fn.domain.subset(u),
                                               fn.codomain.subset(v)));
      }
    }
  });
}

TEST_CASE("verify_theorem cross-checks every route on the worked examples") {
  const auto id = topocat::make_set_function(sierpinski(), sierpinski(), {0, 1});
  const auto good = topocat::verify_theorem(id);
  CHECK(good.continuous);
  CHECK(good.adjoint);
  CHECK(good.agree);
  CHECK_FALSE(good.continuity_witness.has_value());
  CHECK_FALSE(good.adjunction_witness.has_value());

  const auto report = topocat::verify_theorem(indiscrete_to_discrete());
  CHECK_FALSE(report.continuous);
  CHECK_FALSE(report.adjoint);
  CHECK(report.agree);
  REQUIRE(report.continuity_witness.has_value());
  CHECK(report.continuity_witness->mask == 0b01);
  REQUIRE(report.adjunction_witness.has_value());
  CHECK(report.adjunction_witness->first.mask == 0b11);
  CHECK(report.adjunction_witness->second.mask == 0b01);
}

TEST_CASE("verify_theorem never reports disagreement across the small sweep") {
  for_all_functions_up_to(2, [](const SetFunction& fn) {
    const auto report = topocat::verify_theorem(fn);
    CHECK(report.agree);
    CHECK(report.continuous == report.adjoint);
    CHECK(report.continuity_witness.has_value() == !report.continuous);
    CHECK(report.adjunction_witness.has_value() == !report.adjoint);
  });
}
