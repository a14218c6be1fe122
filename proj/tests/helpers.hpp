#pragma once

#include <random>
#include <set>
#include <vector>

#include "og/combinators.hpp"
#include "og/equilibrium.hpp"

namespace ogtest {

using namespace og;

inline TypePtr random_small_type(std::mt19937& rng, int max_card = 3) {
  int card = 2 + int(rng() % (max_card - 1));
  if (rng() % 2 == 0) {
    std::vector<std::string> names;
    for (int i = 0; i < card; ++i) names.push_back(std::string(1, char('a' + i)) +
                                                   std::to_string(rng() % 97));
    return FiniteType::labels(std::move(names));
  }
  int lo = int(rng() % 5) - 2;
  return FiniteType::int_range(lo, lo + card - 1);
}

// A random total function dom -> cod as a covariant lift.
inline GamePtr random_fn(std::mt19937& rng, const TypePtr& dom, const TypePtr& cod) {
  std::vector<std::uint64_t> table(dom->cardinality());
  for (auto& v : table) v = rng() % cod->cardinality();
  return covariant({dom}, {cod}, [cod, table](const Value& x) {
    return Value{cod, table[x.ord]};
  });
}

// A random context Y -> R as a table-backed continuation.
inline Continuation random_context(std::mt19937& rng, const TypePtr& y, const TypePtr& r) {
  std::vector<std::uint64_t> table(y->cardinality());
  for (auto& v : table) v = rng() % r->cardinality();
  return Continuation{y, [r, table](const Value& v) { return Value{r, table[v.ord]}; }};
}

inline std::set<std::uint64_t> eq_set(const GamePtr& g, const Value& x, const Continuation& k) {
  std::set<std::uint64_t> out;
  EvalCtx ctx;
  for (std::uint64_t i = 0; i < g->sigma->cardinality(); ++i)
    if (g->eq_fn(*profile_at(g->sigma, i), x, k, ctx)) out.insert(i);
  return out;
}

// Pointwise equality of play on all profiles and observations.
inline bool same_play(const GamePtr& a, const GamePtr& b) {
  if (a->sigma->cardinality() != b->sigma->cardinality()) return false;
  for (std::uint64_t i = 0; i < a->sigma->cardinality(); ++i) {
    auto pa = profile_at(a->sigma, i);
    auto pb = profile_at(b->sigma, i);
    for (const auto& x : enumerate_values(a->normal.x)) {
      Value xb{b->normal.x, x.ord};
      if (a->play_fn(*pa, x).ord != b->play_fn(*pb, xb).ord) return false;
    }
  }
  return true;
}

inline bool same_coplay(const GamePtr& a, const GamePtr& b) {
  if (a->sigma->cardinality() != b->sigma->cardinality()) return false;
  for (std::uint64_t i = 0; i < a->sigma->cardinality(); ++i) {
    auto pa = profile_at(a->sigma, i);
    auto pb = profile_at(b->sigma, i);
    for (const auto& x : enumerate_values(a->normal.x))
      for (const auto& r : enumerate_values(a->normal.r)) {
        Value xb{b->normal.x, x.ord}, rb{b->normal.r, r.ord};
        if (a->coplay_fn(*pa, x, r).ord != b->coplay_fn(*pb, xb, rb).ord) return false;
      }
  }
  return true;
}

}  // namespace ogtest
