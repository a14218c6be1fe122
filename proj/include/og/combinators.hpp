#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "og/game.hpp"
#include "og/selection.hpp"

namespace og {

inline Value pair_value(const TypePtr& composite, const Value& a, const Value& b) {
  // composite is the flat product of the two normal halves; b is minor.
  return Value{composite, a.ord * b.type->cardinality() + b.ord};
}

inline std::pair<Value, Value> split_value(const Value& v, const TypePtr& left,
                                           const TypePtr& right) {
  std::uint64_t rc = right->cardinality();
  return {Value{left, v.ord / rc}, Value{right, v.ord % rc}};
}

// Strategically trivial game: singleton strategy space, equilibrium
// condition constantly true, defined entirely by play and coplay over the
// reduced interface.
inline GamePtr make_trivial(Interface iface,
                            std::function<Value(const Value&)> play,
                            std::function<Value(const Value&, const Value&)> coplay) {
  auto g = std::make_shared<OpenGame>();
  g->iface = std::move(iface);
  g->normal = reduce_interface(g->iface);
  g->sigma = StrategySpace::trivial();
  auto p = std::move(play);
  g->play_fn = [p](const StrategyProfile&, const Value& x) { return p(x); };
  auto c = std::move(coplay);
  g->coplay_fn = [c](const StrategyProfile&, const Value& x, const Value& r) {
    return c(x, r);
  };
  g->eq_fn = [](const StrategyProfile&, const Value&, const Continuation&, EvalCtx& ctx) {
    ctx.count();
    return true;
  };
  g->reach_fn = [p](const Value& x) { return std::vector<Value>{p(x)}; };
  g->reach_bound = 1;
  g->eq_cost = 0;  // the constant-true condition is free under the budget
  return g;
}

// [OP] lift_player: the pregame of a single player with the given goal.
// Sigma is the set of total tables obs -> choice; play applies the table;
// coplay is trivial; the equilibrium condition is sigma(x) in eps(k).
inline GamePtr player(const std::string& name, TypePtr obs, TypePtr choice, TypePtr outcome,
                      SelectionFunction sel) {
  if (choice->cardinality() == 0) throw TypeError("player '" + name + "' has empty choice type");
  if (std::holds_alternative<Fixpoint>(sel) && !type_equal(choice, outcome))
    throw TypeError("fixpoint player '" + name + "' needs choice and outcome types equal");
  if (std::holds_alternative<MatchObservation>(sel)) {
    if (!type_equal(obs, choice))
      throw TypeError("match player '" + name + "' needs observation and choice types equal");
    if (!outcome->is_unit())
      throw TypeError("match player '" + name + "' takes no outcome wire");
  }
  if (std::holds_alternative<Argmax>(sel) && !outcome->numeric())
    throw TypeError("argmax player '" + name + "' needs a numeric outcome type, got " +
                    type_name(*outcome));

  auto g = std::make_shared<OpenGame>();
  g->iface.fwd_in = obs->is_unit() ? std::vector<TypePtr>{} : std::vector<TypePtr>{obs};
  g->iface.fwd_out = {choice};
  g->iface.bwd_in = outcome->is_unit() ? std::vector<TypePtr>{} : std::vector<TypePtr>{outcome};
  g->normal = reduce_interface(g->iface);
  g->sigma = StrategySpace::player(name, obs, choice);

  g->play_fn = [](const StrategyProfile& p, const Value& x) { return p.apply(x); };
  g->coplay_fn = [](const StrategyProfile&, const Value&, const Value&) {
    return unit_value();
  };
  g->eq_fn = [sel, name](const StrategyProfile& p, const Value& x, const Continuation& k,
                         EvalCtx& ctx) {
    ctx.count();
    Value chosen = p.apply(x);
    bool ok;
    DeviationRow row;
    row.player = name;
    row.obs = x;
    row.chosen = chosen;
    row.goal = selection_name(sel);
    row.best_choice = chosen;
    if (std::holds_alternative<MatchObservation>(sel)) {
      ok = chosen.ord == x.ord;
      row.best_choice = Value{chosen.type, x.ord};
    } else {
      auto chosen_set = select(sel, k, ctx.tol);
      ok = std::find(chosen_set.begin(), chosen_set.end(), chosen) != chosen_set.end();
      if (!chosen_set.empty()) row.best_choice = chosen_set.front();
      if (std::holds_alternative<Argmax>(sel)) {
        row.numeric = true;
        row.realized = real_value(k(chosen));
        row.best = real_value(k(row.best_choice));
      }
    }
    row.ok = ok;
    if (ctx.reporter) ctx.reporter->add(std::move(row));
    return ok;
  };
  TypePtr ch = choice;
  g->reach_fn = [ch](const Value&) { return enumerate_values(ch); };
  g->reach_bound = choice->cardinality();
  g->eq_cost = 1;
  return g;
}

// [OP] lift_covariant: a computation flowing with the diagram.
inline GamePtr covariant(std::vector<TypePtr> ins, std::vector<TypePtr> outs,
                         std::function<Value(const Value&)> f) {
  Interface iface;
  iface.fwd_in = std::move(ins);
  iface.fwd_out = std::move(outs);
  return make_trivial(std::move(iface), std::move(f),
                      [](const Value&, const Value&) { return unit_value(); });
}

// [OP] lift_contravariant: the same function on the backward strands;
// play is trivial and coplay applies f to what arrives from below.
inline GamePtr contravariant(std::vector<TypePtr> domain, std::vector<TypePtr> codomain,
                             std::function<Value(const Value&)> f) {
  Interface iface;
  iface.bwd_in = std::move(domain);
  iface.bwd_out = std::move(codomain);
  return make_trivial(
      std::move(iface), [](const Value&) { return unit_value(); },
      [f](const Value&, const Value& r) { return f(r); });
}

// [OP] counit: the only permitted string bend, routing a forward value
// backwards: P(x) = *, C(x, *) = x.
inline GamePtr counit(TypePtr t) {
  Interface iface;
  iface.fwd_in = {t};
  iface.bwd_out = {t};
  return make_trivial(
      std::move(iface), [](const Value&) { return unit_value(); },
      [](const Value& x, const Value&) { return x; });
}

inline GamePtr identity(TypePtr t) {
  return covariant({t}, {t}, [](const Value& x) { return x; });
}

inline GamePtr identity_bwd(TypePtr t) {
  return contravariant({t}, {t}, [](const Value& r) { return r; });
}

inline GamePtr copy(TypePtr t) {
  auto out = FiniteType::product({t, t});
  return covariant({t}, {t, t},
                   [out](const Value& x) { return tuple_value(out, {x, x}); });
}

inline GamePtr copy_bwd(TypePtr t) {
  auto out = FiniteType::product({t, t});
  return contravariant({t}, {t, t},
                       [out](const Value& r) { return tuple_value(out, {r, r}); });
}

inline GamePtr discard(TypePtr t) {
  return covariant({t}, {}, [](const Value&) { return unit_value(); });
}

inline GamePtr discard_bwd(TypePtr t) {
  return contravariant({t}, {}, [](const Value&) { return unit_value(); });
}

inline GamePtr constant(Value v) {
  return covariant({}, {v.type}, [v](const Value&) { return v; });
}

inline GamePtr constant_bwd(Value v) {
  return contravariant({}, {v.type}, [v](const Value&) { return v; });
}

// One strand of a braid's top boundary.
struct Strand {
  TypePtr type;
  bool backward = false;
};

// [OP] braid: a permutation of strands. to_bottom[i] is the bottom position
// of top strand i. Forward strands are reordered by play, backward strands
// by coplay; the game is strategically trivial.
inline GamePtr braid(std::vector<Strand> top, std::vector<std::size_t> to_bottom) {
  std::size_t n = top.size();
  if (to_bottom.size() != n) throw TypeError("braid permutation arity mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : to_bottom) {
    if (p >= n || seen[p]) throw TypeError("braid permutation is not a bijection");
    seen[p] = true;
  }
  std::vector<int> bottom_src(n);
  for (std::size_t i = 0; i < n; ++i) bottom_src[to_bottom[i]] = static_cast<int>(i);

  Interface iface;
  std::vector<std::size_t> top_fwd, top_bwd, bot_fwd, bot_bwd;
  for (std::size_t i = 0; i < n; ++i) {
    if (top[i].backward) {
      iface.bwd_out.push_back(top[i].type);
      top_bwd.push_back(i);
    } else {
      iface.fwd_in.push_back(top[i].type);
      top_fwd.push_back(i);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i = bottom_src[j];
    if (top[i].backward) {
      iface.bwd_in.push_back(top[i].type);
      bot_bwd.push_back(i);
    } else {
      iface.fwd_out.push_back(top[i].type);
      bot_fwd.push_back(i);
    }
  }

  NormalInterface normal = reduce_interface(iface);
  // play: top forward tuple -> bottom forward tuple
  auto play = [normal, top_fwd, bot_fwd](const Value& x) {
    if (top_fwd.empty()) return unit_value();
    std::vector<Value> comps =
        top_fwd.size() == 1 ? std::vector<Value>{x} : tuple_components(x);
    std::vector<Value> out;
    out.reserve(bot_fwd.size());
    for (auto src : bot_fwd) {
      auto it = std::find(top_fwd.begin(), top_fwd.end(), src);
      out.push_back(comps[it - top_fwd.begin()]);
    }
    if (out.size() == 1) return out[0];
    return tuple_value(normal.y, out);
  };
  auto coplay = [normal, top_bwd, bot_bwd](const Value&, const Value& r) {
    if (top_bwd.empty()) return unit_value();
    std::vector<Value> comps =
        bot_bwd.size() == 1 ? std::vector<Value>{r} : tuple_components(r);
    std::vector<Value> out;
    out.reserve(top_bwd.size());
    for (auto strand : top_bwd) {
      auto it = std::find(bot_bwd.begin(), bot_bwd.end(), strand);
      out.push_back(comps[it - bot_bwd.begin()]);
    }
    if (out.size() == 1) return out[0];
    return tuple_value(normal.s, out);
  };
  auto g = make_trivial(std::move(iface), std::move(play), std::move(coplay));
  return g;
}

// Forward-only braid over the given strand types.
inline GamePtr braid_fwd(std::vector<TypePtr> types, std::vector<std::size_t> to_bottom) {
  std::vector<Strand> top;
  top.reserve(types.size());
  for (auto& t : types) top.push_back(Strand{std::move(t), false});
  return braid(std::move(top), std::move(to_bottom));
}

// [OP] compose_seq: G drawn above H, strings joined; the categorical
// composite H o G. Requires G's bottom boundary to equal H's top boundary
// exactly, braidings must be inserted explicitly.
inline GamePtr seq(GamePtr g, GamePtr h) {
  if (!type_lists_equal(g->iface.fwd_out, h->iface.fwd_in) ||
      !type_lists_equal(g->iface.bwd_in, h->iface.bwd_out))
    throw TypeError("cannot compose: bottom of first is " +
                    render_boundary(g->iface.fwd_out, g->iface.bwd_in) +
                    " but top of second is " +
                    render_boundary(h->iface.fwd_in, h->iface.bwd_out));

  auto out = std::make_shared<OpenGame>();
  out->iface.fwd_in = g->iface.fwd_in;
  out->iface.bwd_out = g->iface.bwd_out;
  out->iface.fwd_out = h->iface.fwd_out;
  out->iface.bwd_in = h->iface.bwd_in;
  out->normal = reduce_interface(out->iface);
  out->sigma = StrategySpace::pair(g->sigma, h->sigma);

  out->play_fn = [g, h](const StrategyProfile& p, const Value& x) {
    return h->play_fn(*p.right, g->play_fn(*p.left, x));
  };
  out->coplay_fn = [g, h](const StrategyProfile& p, const Value& x, const Value& r) {
    return g->coplay_fn(*p.left, x,
                        h->coplay_fn(*p.right, g->play_fn(*p.left, x), r));
  };
  out->eq_fn = [g, h](const StrategyProfile& p, const Value& x, const Continuation& k,
                      EvalCtx& ctx) {
    ctx.count();
    const StrategyProfile& s1 = *p.left;
    const StrategyProfile& s2 = *p.right;
    // k'(y) = C_H(s2, y, k(P_H(s2, y)))
    Continuation kprime{g->normal.y, [h, &s2, &k](const Value& y) {
                          return h->coplay_fn(s2, y, k(h->play_fn(s2, y)));
                        }};
    bool first = g->eq_fn(s1, x, kprime, ctx);
    if (!first && !ctx.reporter) return false;
    // for all s1' in Sigma_G: s2 in E_H(P_G(s1', x), k). The condition
    // depends on s1' only through its play, so we quantify over the exact
    // play image instead of iterating Sigma_G itself.
    bool second = true;
    for (const auto& y : g->reach_fn(x)) {
      if (!h->eq_fn(s2, y, k, ctx)) {
        second = false;
        if (!ctx.reporter) return false;
      }
    }
    return first && second;
  };
  out->reach_fn = [g, h](const Value& x) {
    std::vector<Value> acc;
    for (const auto& y : g->reach_fn(x)) {
      for (auto& z : h->reach_fn(y)) acc.push_back(z);
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
  };
  out->reach_bound = std::min(sat_mul(g->reach_bound, h->reach_bound),
                              out->normal.y->cardinality());
  std::uint64_t inner = sat_add(g->eq_cost, sat_mul(g->reach_bound, h->eq_cost));
  out->eq_cost = inner == 0 ? 0 : sat_add(1, inner);
  return out;
}

// [OP] tensor: side-by-side juxtaposition, simultaneous play. Any two games
// may be tensored.
inline GamePtr tensor(GamePtr g, GamePtr h) {
  auto out = std::make_shared<OpenGame>();
  auto cat = [](const std::vector<TypePtr>& a, const std::vector<TypePtr>& b) {
    std::vector<TypePtr> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  };
  out->iface.fwd_in = cat(g->iface.fwd_in, h->iface.fwd_in);
  out->iface.bwd_out = cat(g->iface.bwd_out, h->iface.bwd_out);
  out->iface.fwd_out = cat(g->iface.fwd_out, h->iface.fwd_out);
  out->iface.bwd_in = cat(g->iface.bwd_in, h->iface.bwd_in);
  out->normal = reduce_interface(out->iface);
  out->sigma = StrategySpace::pair(g->sigma, h->sigma);

  NormalInterface gn = g->normal, hn = h->normal, cn = out->normal;

  out->play_fn = [g, h, gn, hn, cn](const StrategyProfile& p, const Value& x) {
    auto [x1, x2] = split_value(x, gn.x, hn.x);
    return pair_value(cn.y, g->play_fn(*p.left, x1), h->play_fn(*p.right, x2));
  };
  out->coplay_fn = [g, h, gn, hn, cn](const StrategyProfile& p, const Value& x,
                                      const Value& r) {
    auto [x1, x2] = split_value(x, gn.x, hn.x);
    auto [r1, r2] = split_value(r, gn.r, hn.r);
    return pair_value(cn.s, g->coplay_fn(*p.left, x1, r1),
                      h->coplay_fn(*p.right, x2, r2));
  };
  out->eq_fn = [g, h, gn, hn, cn](const StrategyProfile& p, const Value& x,
                                  const Continuation& k, EvalCtx& ctx) {
    ctx.count();
    auto [x1, x2] = split_value(x, gn.x, hn.x);
    const StrategyProfile& s1 = *p.left;
    const StrategyProfile& s2 = *p.right;
    Value played2 = h->play_fn(s2, x2);
    Continuation k1{gn.y, [&](const Value& y1) {
                      Value r = k(pair_value(cn.y, y1, played2));
                      return split_value(r, gn.r, hn.r).first;
                    }};
    bool first = g->eq_fn(s1, x1, k1, ctx);
    if (!first && !ctx.reporter) return false;
    Value played1 = g->play_fn(s1, x1);
    Continuation k2{hn.y, [&](const Value& y2) {
                      Value r = k(pair_value(cn.y, played1, y2));
                      return split_value(r, gn.r, hn.r).second;
                    }};
    bool second = h->eq_fn(s2, x2, k2, ctx);
    return first && second;
  };
  out->reach_fn = [g, h, gn, hn, cn](const Value& x) {
    auto [x1, x2] = split_value(x, gn.x, hn.x);
    std::vector<Value> acc;
    for (const auto& y1 : g->reach_fn(x1))
      for (const auto& y2 : h->reach_fn(x2)) acc.push_back(pair_value(cn.y, y1, y2));
    return acc;
  };
  out->reach_bound = std::min(sat_mul(g->reach_bound, h->reach_bound),
                              out->normal.y->cardinality());
  std::uint64_t inner = sat_add(g->eq_cost, h->eq_cost);
  out->eq_cost = inner == 0 ? 0 : sat_add(1, inner);
  return out;
}

inline GamePtr tensor_all(const std::vector<GamePtr>& gs) {
  if (gs.empty()) throw TypeError("empty tensor");
  GamePtr acc = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) acc = tensor(acc, gs[i]);
  return acc;
}

inline GamePtr seq_all(const std::vector<GamePtr>& gs) {
  if (gs.empty()) throw TypeError("empty composition");
  GamePtr acc = gs[0];
  for (std::size_t i = 1; i < gs.size(); ++i) acc = seq(acc, gs[i]);
  return acc;
}

}  // namespace og
