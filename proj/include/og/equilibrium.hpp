#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "og/combinators.hpp"
#include "og/game.hpp"

namespace og {

struct Config {
  double tol = 1e-9;
  std::uint64_t budget = 10'000'000;  // eq_member invocations, statically bounded
  unsigned workers = 0;               // 0 = available parallelism
};

inline unsigned effective_workers(const Config& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("OG_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

inline bool is_closed(const OpenGame& g) { return is_closed_interface(g.normal); }

inline void require_closed(const OpenGame& g) {
  if (!is_closed(g))
    throw TypeError("not a closed game: interface is " + render_interface(g.iface));
}

// Deterministic refusal: one membership check costs at most eq_cost
// invocations, so a full enumeration costs at most |Sigma| * eq_cost.
inline void check_enumeration_budget(const OpenGame& g, const Config& cfg) {
  if (g.sigma->cardinality_saturated())
    throw BudgetError("strategy space cardinality exceeds 2^64; enumeration refused");
  std::uint64_t total = sat_mul(g.sigma->cardinality(), g.eq_cost);
  if (total > cfg.budget)
    throw BudgetError("budget exceeded: |Sigma| = " + std::to_string(g.sigma->cardinality()) +
                      ", bounded cost " +
                      (total == kCardMax ? std::string("2^64") : std::to_string(total)) +
                      " eq_member evaluations > budget " + std::to_string(cfg.budget));
}

inline void check_single_budget(const OpenGame& g, const Config& cfg) {
  if (g.eq_cost > cfg.budget)
    throw BudgetError("budget exceeded: one membership check is bounded by " +
                      (g.eq_cost == kCardMax ? std::string("2^64")
                                             : std::to_string(g.eq_cost)) +
                      " eq_member evaluations > budget " + std::to_string(cfg.budget));
}

// [OP] equilibria: exactly the profiles sigma with sigma in E(*, trivial k),
// in canonical index order. The index range is statically partitioned across
// the worker pool; verdicts are independent, so the output does not depend
// on the worker count.
inline std::vector<std::uint64_t> equilibrium_indices(const OpenGame& g, const Config& cfg) {
  require_closed(g);
  check_enumeration_budget(g, cfg);
  std::uint64_t n = g.sigma->cardinality();
  unsigned workers = effective_workers(cfg);
  if (workers > n && n > 0) workers = static_cast<unsigned>(n);
  if (workers == 0) workers = 1;

  std::vector<std::vector<std::uint64_t>> found(workers);
  auto run = [&](unsigned w) {
    EvalCtx ctx;
    ctx.tol = cfg.tol;
    Continuation k = trivial_continuation();
    Value star = unit_value();
    std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) {
      auto p = profile_at(g.sigma, i);
      if (g.eq_fn(*p, star, k, ctx)) found[w].push_back(i);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

inline std::vector<ProfilePtr> equilibria(const OpenGame& g, const Config& cfg = {}) {
  std::vector<ProfilePtr> out;
  for (auto i : equilibrium_indices(g, cfg)) out.push_back(profile_at(g.sigma, i));
  return out;
}

// [OP] check_profile: membership of one profile at the trivial context.
// Available even when Sigma is too large to enumerate.
inline bool check_profile(const OpenGame& g, const StrategyProfile& p, const Config& cfg = {},
                          Reporter* reporter = nullptr) {
  require_closed(g);
  check_profile_shape(g, p);
  check_single_budget(g, cfg);
  EvalCtx ctx;
  ctx.tol = cfg.tol;
  ctx.reporter = reporter;
  Continuation k = trivial_continuation();
  return g.eq_fn(p, unit_value(), k, ctx);
}

// ---------------------------------------------------------------------
// Independent oracles. These never evaluate compositional games; they work
// on plain utility specifications and exist to validate the compositional
// semantics against textbook definitions.
// ---------------------------------------------------------------------

// A normal-form game: one choice type and one utility function per player.
struct NormalFormSpec {
  std::vector<TypePtr> choices;
  // utils[i](profile values) -> player i's payoff
  std::vector<std::function<double(const std::vector<Value>&)>> utils;
};

// [OP] nash_oracle: all pure profiles with no strictly improving unilateral
// deviation (improvement must exceed tol; ties never break equilibria).
inline std::vector<std::vector<Value>> nash_oracle(const NormalFormSpec& spec,
                                                   double tol = 1e-9,
                                                   std::uint64_t max_profiles = 1'000'000) {
  std::size_t n = spec.choices.size();
  if (spec.utils.size() != n) throw TypeError("normal-form spec arity mismatch");
  std::uint64_t total = 1;
  for (auto& c : spec.choices) total = sat_mul(total, c->cardinality());
  if (total > max_profiles)
    throw BudgetError("nash_oracle: " + std::to_string(total) + " profiles exceed limit");

  std::vector<std::vector<Value>> eqs;
  std::vector<Value> prof;
  for (auto& c : spec.choices) prof.push_back(value_at(c, 0));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = n; i-- > 0;) {
      prof[i] = Value{spec.choices[i], rem % spec.choices[i]->cardinality()};
      rem /= spec.choices[i]->cardinality();
    }
    bool eq = true;
    for (std::size_t i = 0; i < n && eq; ++i) {
      double base = spec.utils[i](prof);
      auto dev = prof;
      for (const auto& alt : enumerate_values(spec.choices[i])) {
        dev[i] = alt;
        if (spec.utils[i](dev) > base + tol) {
          eq = false;
          break;
        }
      }
    }
    if (eq) eqs.push_back(prof);
  }
  return eqs;
}

// A two-stage game: the leader picks y1, the follower observes it and picks
// y2; payoffs are U1, U2 over (y1, y2).
struct SequentialSpec {
  TypePtr y1, y2;
  std::function<double(const Value&, const Value&)> u1, u2;
};

struct SpeProfile {
  Value leader;
  std::vector<std::uint32_t> follower;  // choice ordinal per leader choice

  friend bool operator==(const SpeProfile& a, const SpeProfile& b) {
    return a.leader == b.leader && a.follower == b.follower;
  }
};

// [OP] spe_oracle: all (y1, follower table) satisfying
//   U2(y1, t(y1)) = max_{y2} U2(y1, y2)   for all y1
//   U1(s1, t(s1)) = max_{y1} U1(y1, t(y1))
// with equality read up to tol. Pure backward induction, no composition.
inline std::vector<SpeProfile> spe_oracle(const SequentialSpec& spec, double tol = 1e-9,
                                          std::uint64_t budget = 10'000'000) {
  std::uint64_t n1 = spec.y1->cardinality(), n2 = spec.y2->cardinality();
  std::uint64_t tables = 1;
  for (std::uint64_t i = 0; i < n1; ++i) tables = sat_mul(tables, n2);
  if (sat_mul(tables, n1) > budget)
    throw BudgetError("spe_oracle: follower table space exceeds budget");

  auto vals1 = enumerate_values(spec.y1);
  auto vals2 = enumerate_values(spec.y2);
  std::vector<SpeProfile> out;
  for (std::uint64_t t = 0; t < tables; ++t) {
    std::vector<std::uint32_t> table(n1);
    std::uint64_t rem = t;
    for (std::size_t i = n1; i-- > 0;) {
      table[i] = static_cast<std::uint32_t>(rem % n2);
      rem /= n2;
    }
    bool follower_ok = true;
    for (std::size_t i = 0; i < n1 && follower_ok; ++i) {
      double got = spec.u2(vals1[i], vals2[table[i]]);
      for (const auto& alt : vals2)
        if (spec.u2(vals1[i], alt) > got + tol) {
          follower_ok = false;
          break;
        }
    }
    if (!follower_ok) continue;
    for (const auto& y1 : vals1) {
      double got = spec.u1(y1, vals2[table[y1.ord]]);
      bool leader_ok = true;
      for (const auto& alt : vals1)
        if (spec.u1(alt, vals2[table[alt.ord]]) > got + tol) {
          leader_ok = false;
          break;
        }
      if (leader_ok) out.push_back(SpeProfile{y1, table});
    }
  }
  std::sort(out.begin(), out.end(), [](const SpeProfile& a, const SpeProfile& b) {
    if (a.leader.ord != b.leader.ord) return a.leader.ord < b.leader.ord;
    return a.follower < b.follower;
  });
  return out;
}

}  // namespace og
