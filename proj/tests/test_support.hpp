#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "topocat/category.hpp"
#include "topocat/continuity.hpp"
#include "topocat/space.hpp"

// Fixtures and independent oracles shared by the test binaries. The oracles
// deliberately use std::set machinery instead of the library's bit tricks,
// so they can disagree with a buggy implementation.
namespace support {

using topocat::FiniteSpace;
using topocat::Mask;
using topocat::MonotoneMap;
using topocat::SetFunction;

// ---- fixture spaces ----

inline FiniteSpace sierpinski() { return FiniteSpace(2, {0b00, 0b10, 0b11}, {"a", "b"}); }

inline FiniteSpace discrete(int n) {
  std::vector<Mask> family;
  const Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
  for (Mask m = 0; m <= full; ++m) family.push_back(m);
  return FiniteSpace(n, family);
}

inline FiniteSpace indiscrete(int n) {
  const Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
  return FiniteSpace(n, {0, full});
}

// ---- set-theoretic oracles ----

inline std::set<int> expand(Mask m, int n) {
  std::set<int> out;
  for (int p = 0; p < n; ++p) {
    if (m >> p & 1) out.insert(p);
  }
  return out;
}

inline std::set<std::set<int>> as_set_family(const FiniteSpace& space) {
  std::set<std::set<int>> out;
  for (Mask m : space.closed_family()) out.insert(expand(m, space.point_count()));
  return out;
}

inline bool oracle_is_topology(int n, const std::set<std::set<int>>& family) {
  std::set<int> full;
  for (int p = 0; p < n; ++p) full.insert(p);
  if (family.count(std::set<int>{}) == 0 || family.count(full) == 0) return false;
  for (const auto& a : family) {
    for (const auto& b : family) {
      std::set<int> united = a;
      united.insert(b.begin(), b.end());
      std::set<int> meet;
      for (int p : a) {
        if (b.count(p)) meet.insert(p);
      }
      if (family.count(united) == 0 || family.count(meet) == 0) return false;
    }
  }
  return true;
}

// Among all closed supersets of m, the unique one contained in every other;
// ~0 when no such set exists (never expected for a valid space).
inline Mask oracle_closure(const FiniteSpace& space, Mask m) {
  std::vector<Mask> candidates;
  for (Mask c : space.closed_family()) {
    if ((m & ~c) == 0) candidates.push_back(c);
  }
  for (Mask c : candidates) {
    bool least = true;
    for (Mask other : candidates) {
      if ((c & ~other) != 0) {
        least = false;
        break;
      }
    }
    if (least) return c;
  }
  return ~Mask{0};
}

// ---- exhaustive monotone-map enumeration ----

// Backtracking over the source family in ascending mask order. Ascending
// mask order extends the subset order, so every subset of row i is already
// placed; the row's image must contain the union of their images, and
// nothing else constrains it yet.
inline void for_each_monotone_map(const FiniteSpace& source, const FiniteSpace& target,
                                  const std::function<void(const MonotoneMap&)>& fn) {
  const auto& sf = source.closed_family();
  const auto& tf = target.closed_family();
  std::vector<int> table(sf.size(), 0);
  MonotoneMap map{source, target, {}};
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == sf.size()) {
      map.table = table;
      fn(map);
      return;
    }
    Mask lower = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (topocat::subset_le(sf[j], sf[i])) lower |= tf[static_cast<std::size_t>(table[j])];
    }
    for (std::size_t t = 0; t < tf.size(); ++t) {
      if (!topocat::subset_le(lower, tf[t])) continue;
      table[i] = static_cast<int>(t);
      place(i + 1);
    }
  };
  place(0);
}

inline std::vector<MonotoneMap> enumerate_monotone_maps(const FiniteSpace& source,
                                                        const FiniteSpace& target) {
  std::vector<MonotoneMap> out;
  for_each_monotone_map(source, target, [&out](const MonotoneMap& m) { out.push_back(m); });
  return out;
}

// ---- seeded random generators ----

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline FiniteSpace random_space(std::mt19937_64& gen, int n) {
  const Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
  std::uniform_int_distribution<Mask> masks(0, full);
  std::uniform_int_distribution<int> count(0, n + 2);
  std::vector<Mask> seeds;
  const int k = count(gen);
  for (int i = 0; i < k; ++i) seeds.push_back(masks(gen));
  return topocat::generate_from_closed_subbasis(n, seeds);
}

inline SetFunction random_function(std::mt19937_64& gen, const FiniteSpace& x,
                                   const FiniteSpace& y) {
  std::vector<int> mapping(static_cast<std::size_t>(x.point_count()));
  std::uniform_int_distribution<int> points(0, y.point_count() - 1);
  for (auto& v : mapping) v = points(gen);
  return topocat::make_set_function(x, y, mapping);
}

// Random greedy fill with the same row constraint the enumerator uses; the
// full set always qualifies, so every row has a candidate.
inline MonotoneMap random_monotone_map(std::mt19937_64& gen, const FiniteSpace& source,
                                       const FiniteSpace& target) {
  const auto& sf = source.closed_family();
  const auto& tf = target.closed_family();
  std::vector<int> table(sf.size(), 0);
  for (std::size_t i = 0; i < sf.size(); ++i) {
    Mask lower = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (topocat::subset_le(sf[j], sf[i])) lower |= tf[static_cast<std::size_t>(table[j])];
    }
    std::vector<int> candidates;
    for (std::size_t t = 0; t < tf.size(); ++t) {
      if (topocat::subset_le(lower, tf[t])) candidates.push_back(static_cast<int>(t));
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    table[i] = candidates[pick(gen)];
  }
  return MonotoneMap{source, target, table};
}

}  // namespace support
