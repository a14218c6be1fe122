#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "og/continuation.hpp"
#include "og/interface.hpp"
#include "og/strategy.hpp"
#include "og/types.hpp"

namespace og {

// One row of deviation diagnostics: what a player leaf saw at one
// observation while its equilibrium condition was evaluated.
struct DeviationRow {
  std::string player;
  Value obs;
  Value chosen;
  bool ok = true;
  bool numeric = false;  // realized/best meaningful (argmax goals)
  double realized = 0.0;
  double best = 0.0;
  Value best_choice;
  std::string goal;
};

struct Reporter {
  std::vector<DeviationRow> rows;

  void add(DeviationRow row) {
    for (auto& r : rows)
      if (r.player == row.player && r.obs == row.obs) return;
    rows.push_back(std::move(row));
  }
};

struct EvalStats {
  std::uint64_t eq_calls = 0;
};

// Per-evaluation context: the argmax tie tolerance, optional deviation
// reporting and optional call accounting. One context per worker; games
// themselves are immutable and freely shared across threads.
struct EvalCtx {
  double tol = 1e-9;
  Reporter* reporter = nullptr;
  EvalStats* stats = nullptr;

  void count() {
    if (stats) ++stats->eq_calls;
  }
};

class OpenGame;
using GamePtr = std::shared_ptr<const OpenGame>;

// The 4-tuple (Sigma, P, C, E) of an open game, plus the exact image of the
// play function over the whole strategy space (used by the sequential
// equilibrium condition) and a static bound on equilibrium-check cost (used
// by the budget guard).
class OpenGame {
 public:
  Interface iface;
  NormalInterface normal;
  SpacePtr sigma;

  std::function<Value(const StrategyProfile&, const Value&)> play_fn;
  std::function<Value(const StrategyProfile&, const Value&, const Value&)> coplay_fn;
  std::function<bool(const StrategyProfile&, const Value&, const Continuation&, EvalCtx&)>
      eq_fn;
  // Exact image { play(sigma', x) : sigma' in Sigma }, sorted by ordinal.
  std::function<std::vector<Value>(const Value&)> reach_fn;

  std::uint64_t reach_bound = 1;  // max |reach(x)| over x
  std::uint64_t eq_cost = 1;      // eq_member invocations for one membership check
};

inline void check_profile_shape(const OpenGame& g, const StrategyProfile& p) {
  if (!space_equal(*g.sigma, *p.space))
    throw TypeError("strategy profile does not fit this game's strategy space");
}

inline void check_value(const TypePtr& expect, const Value& v, const char* what) {
  if (!type_equal(expect, v.type))
    throw TypeError(std::string(what) + " has type " + type_name(*v.type) + ", expected " +
                    type_name(*expect));
}

// [OP] play
inline Value play(const OpenGame& g, const StrategyProfile& p, const Value& x) {
  check_profile_shape(g, p);
  check_value(g.normal.x, x, "observation");
  return g.play_fn(p, x);
}

// [OP] coplay
inline Value coplay(const OpenGame& g, const StrategyProfile& p, const Value& x,
                    const Value& r) {
  check_profile_shape(g, p);
  check_value(g.normal.x, x, "observation");
  check_value(g.normal.r, r, "outcome");
  return g.coplay_fn(p, x, r);
}

// [OP] eq_member: characteristic function of the equilibrium set E(x, k).
inline bool eq_member(const OpenGame& g, const StrategyProfile& p, const Value& x,
                      const Continuation& k, EvalCtx& ctx) {
  check_profile_shape(g, p);
  check_value(g.normal.x, x, "observation");
  if (!type_equal(k.y, g.normal.y))
    throw TypeError("continuation domain " + type_name(*k.y) + " does not match " +
                    type_name(*g.normal.y));
  return g.eq_fn(p, x, k, ctx);
}

inline bool eq_member(const OpenGame& g, const StrategyProfile& p, const Value& x,
                      const Continuation& k) {
  EvalCtx ctx;
  return eq_member(g, p, x, k, ctx);
}

inline std::vector<Value> reach(const OpenGame& g, const Value& x) {
  check_value(g.normal.x, x, "observation");
  return g.reach_fn(x);
}

}  // namespace og
