#ifndef AMENITY_TESTS_TEST_UTIL_HPP_
#define AMENITY_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "amenity/group.hpp"
#include "amenity/measure.hpp"

namespace amenity::testutil {

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rat random_rat(Rng& rng, int max_num = 6, int max_den = 6) {
  return Rat(pick(rng, 1, max_num), pick(rng, 1, max_den));
}

inline Elem random_elem(Rng& rng, const GroupPtr& g, int size) {
  switch (g->family()) {
    case Group::Family::FreeAbelian: {
      std::vector<std::int64_t> c;
      for (int i = 0; i < g->rank(); ++i) c.push_back(pick(rng, -size, size));
      return g->vec(std::move(c));
    }
    case Group::Family::Free: {
      Elem::Word w;
      int len = static_cast<int>(pick(rng, 0, size));
      for (int i = 0; i < len; ++i) {
        std::int32_t l = static_cast<std::int32_t>(pick(rng, 1, g->rank()));
        if (pick(rng, 0, 1)) l = -l;
        w.push_back(l);
      }
      return g->word_letters(std::move(w));
    }
    case Group::Family::Cyclic:
      return g->residue(pick(rng, 0, g->order() - 1));
    case Group::Family::Finite:
      return g->table_elem(static_cast<std::uint32_t>(pick(rng, 0, g->order() - 1)));
    case Group::Family::LampSum: {
      std::vector<std::int64_t> lit;
      for (std::int64_t p = -size; p <= size; ++p)
        if (pick(rng, 0, 2) == 0) lit.push_back(p);
      return g->lamps(std::move(lit));
    }
    case Group::Family::Semidirect:
      return g->pair(random_elem(rng, g->normal_part(), size),
                     random_elem(rng, g->acting_part(), size));
  }
  return g->identity();
}

inline GFn random_fn(Rng& rng, const GroupPtr& g, int atoms, int size,
                     bool nonneg = true) {
  GFn f;
  for (int i = 0; i < atoms; ++i) {
    Rat w = random_rat(rng);
    if (!nonneg && pick(rng, 0, 1)) w = -w;
    f.add(random_elem(rng, g, size), w);
  }
  return f;
}

inline GFn random_prob(Rng& rng, const GroupPtr& g, int atoms, int size) {
  GFn f = random_fn(rng, g, atoms, size, true);
  if (f.empty()) f.set(g->identity(), Rat(1));
  return normalize(f);
}

}  // namespace amenity::testutil

#endif  // AMENITY_TESTS_TEST_UTIL_HPP_
