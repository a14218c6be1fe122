#pragma once

// Programmatic builders for the worked example games: bimatrix games,
// Meeting in New York, coordination loops, the ultimatum game, Cournot and
// Stackelberg duopolies, the repeated duopoly and the upstream-monopolist
// market. Each builder mirrors the wiring of the corresponding diagram; the
// shipped .og fixtures elaborate to the same games.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "og/combinators.hpp"
#include "og/equilibrium.hpp"

namespace og::games {

// Exact grid holding the given real values; the denominator is discovered by
// scanning small scales (payoff arithmetic in the examples stays on halves,
// thirds and similar).
inline TypePtr image_grid(const std::vector<double>& vals, std::string name = "") {
  static const std::int64_t denoms[] = {1,   2,   3,   4,   5,   6,   8,   10,  12,
                                        16,  20,  24,  25,  32,  40,  48,  50,  64,
                                        80,  100, 120, 125, 128, 200, 250, 256, 400,
                                        500, 512, 1000};
  for (auto d : denoms) {
    bool ok = true;
    std::vector<std::int64_t> ticks;
    ticks.reserve(vals.size());
    for (double v : vals) {
      double scaled = v * static_cast<double>(d);
      double r = std::nearbyint(scaled);
      if (std::abs(scaled - r) > 1e-6 * std::max(1.0, std::abs(scaled))) {
        ok = false;
        break;
      }
      ticks.push_back(static_cast<std::int64_t>(r));
    }
    if (ok) return FiniteType::grid_ticks(std::move(ticks), d, std::move(name));
  }
  throw TypeError("no exact grid denominator found for image type");
}

inline TypePtr image_of2(const TypePtr& a, const TypePtr& b,
                         const std::function<double(double, double)>& f,
                         std::string name = "") {
  std::vector<double> vals;
  for (const auto& va : enumerate_values(a))
    for (const auto& vb : enumerate_values(b)) vals.push_back(f(real_value(va), real_value(vb)));
  return image_grid(vals, std::move(name));
}

inline TypePtr image_of1(const TypePtr& a, const std::function<double(double)>& f,
                         std::string name = "") {
  std::vector<double> vals;
  for (const auto& va : enumerate_values(a)) vals.push_back(f(real_value(va)));
  return image_grid(vals, std::move(name));
}

// Covariant lift of a binary real function with an exact image codomain.
inline GamePtr fn2(const TypePtr& a, const TypePtr& b, const TypePtr& cod,
                   std::function<double(double, double)> f) {
  return covariant({a, b}, {cod}, [cod, f](const Value& x) {
    auto c = tuple_components(x);
    return numeric_value(cod, f(real_value(c[0]), real_value(c[1])));
  });
}

inline GamePtr fn1(const TypePtr& a, const TypePtr& cod, std::function<double(double)> f) {
  return covariant({a}, {cod},
                   [cod, f](const Value& x) { return numeric_value(cod, f(real_value(x))); });
}

// ---------------------------------------------------------------------
// Bimatrix games (simultaneous play)
// ---------------------------------------------------------------------

using Payoff2 = std::function<double(const Value&, const Value&)>;

inline TypePtr payoff_image(const TypePtr& y1, const TypePtr& y2, const Payoff2& u) {
  std::vector<double> vals;
  for (const auto& a : enumerate_values(y1))
    for (const auto& b : enumerate_values(y2)) vals.push_back(u(a, b));
  return image_grid(vals);
}

// [OP] bimatrix: P1 (x) P2, choices copied into both utility functions,
// utilities bent back by counits.
inline GamePtr bimatrix(const TypePtr& y1, const TypePtr& y2, const Payoff2& u1,
                        const Payoff2& u2) {
  auto t1 = payoff_image(y1, y2, u1);
  auto t2 = payoff_image(y1, y2, u2);
  auto p1 = player("P1", FiniteType::unit(), y1, t1, Argmax{});
  auto p2 = player("P2", FiniteType::unit(), y2, t2, Argmax{});
  auto lift = [&](const TypePtr& cod, const Payoff2& u) {
    return covariant({y1, y2}, {cod}, [cod, u](const Value& x) {
      auto c = tuple_components(x);
      return numeric_value(cod, u(c[0], c[1]));
    });
  };
  auto layer0 = tensor(p1, p2);
  auto layer1 = tensor_all({copy(y1), copy(y2), identity_bwd(t1), identity_bwd(t2)});
  auto layer2 = tensor_all(
      {braid_fwd({y1, y1, y2, y2}, {0, 2, 1, 3}), identity_bwd(t1), identity_bwd(t2)});
  auto layer3 = tensor_all({lift(t1, u1), lift(t2, u2), identity_bwd(t1), identity_bwd(t2)});
  auto layer4 = tensor(counit(t1), counit(t2));
  return seq_all({layer0, layer1, layer2, layer3, layer4});
}

// [OP] meeting_ny: the shared-utility variant with one U and a copy dot.
inline GamePtr meeting_ny() {
  auto y = FiniteType::labels({"GCT", "ES"}, "Loc");
  auto t = image_grid({0, 2}, "Pay");
  auto u = covariant({y, y}, {t}, [t](const Value& x) {
    auto c = tuple_components(x);
    return numeric_value(t, c[0].ord == c[1].ord ? 2.0 : 0.0);
  });
  auto p1 = player("P1", FiniteType::unit(), y, t, Argmax{});
  auto p2 = player("P2", FiniteType::unit(), y, t, Argmax{});
  return seq_all({tensor(p1, p2),
                  tensor_all({u, identity_bwd(t), identity_bwd(t)}),
                  tensor_all({copy(t), identity_bwd(t), identity_bwd(t)}),
                  tensor(counit(t), counit(t))});
}

// ---------------------------------------------------------------------
// Coordination / differentiation (fixpoint goals)
// ---------------------------------------------------------------------

enum class CoordinationVariant { Asymmetric, Symmetric };

// [OP] coordination: G1 chooses with a fixpoint goal, G2 answers. In the
// asymmetric reading G2 simply matches its observation (the figure gives it
// no outcome wire); the symmetric reading gives G2 a fixpoint goal fed by a
// copy of G1's choice. Both have the same equilibria.
inline GamePtr coordination(const TypePtr& t,
                            CoordinationVariant variant = CoordinationVariant::Asymmetric) {
  auto g1 = player("G1", FiniteType::unit(), t, t, Fixpoint{});
  if (variant == CoordinationVariant::Asymmetric) {
    auto g2 = player("G2", t, t, FiniteType::unit(), MatchObservation{});
    return seq_all({g1, tensor(g2, identity_bwd(t)), counit(t)});
  }
  auto g2 = player("G2", t, t, t, Fixpoint{});
  auto s1 = tensor(copy(t), identity_bwd(t));
  auto s2 = tensor_all({g2, identity(t), identity_bwd(t)});
  auto s3 = tensor_all({identity(t), identity(t),
                        braid({Strand{t, true}, Strand{t, true}}, {1, 0})});
  auto s4 = tensor(counit(t), counit(t));
  return seq_all({g1, s1, s2, s3, s4});
}

// ---------------------------------------------------------------------
// Ultimatum game (sequential play)
// ---------------------------------------------------------------------

struct UltimatumParams {
  int pie = 3;
};

enum class UltimatumVariant { SplitUtilities, CombinedUtility };

inline GamePtr ultimatum(const UltimatumParams& params,
                         UltimatumVariant variant = UltimatumVariant::CombinedUtility) {
  if (params.pie < 1) throw TypeError("ultimatum needs a pie of at least 1");
  int n = params.pie;
  auto y1 = FiniteType::int_range(0, n, "Offer");
  auto y2 = FiniteType::labels({"A", "R"}, "Reply");
  auto u1 = [](const Value& o, const Value& a) {
    return a.ord == 0 ? static_cast<double>(int_value(o)) : 0.0;
  };
  auto u2 = [n](const Value& o, const Value& a) {
    return a.ord == 0 ? static_cast<double>(n - int_value(o)) : 0.0;
  };
  auto t1 = payoff_image(y1, y2, u1);
  auto t2 = payoff_image(y1, y2, u2);
  auto p1 = player("P1", FiniteType::unit(), y1, t1, Argmax{});
  auto p2 = player("P2", y1, y2, t2, Argmax{});

  auto head = seq_all({p1, tensor(copy(y1), identity_bwd(t1)),
                       tensor_all({identity(y1), identity_bwd(t1), p2})});
  // head bottom: down [y1, y2], up in [t1, t2]
  if (variant == UltimatumVariant::CombinedUtility) {
    auto ucomb = covariant({y1, y2}, {t1, t2}, [=](const Value& x) {
      auto c = tuple_components(x);
      auto out = FiniteType::product({t1, t2});
      return tuple_value(out, {numeric_value(t1, u1(c[0], c[1])),
                               numeric_value(t2, u2(c[0], c[1]))});
    });
    return seq_all({head, tensor_all({ucomb, identity_bwd(t1), identity_bwd(t2)}),
                    tensor(counit(t1), counit(t2))});
  }
  auto lift1 = covariant({y1, y2}, {t1}, [=](const Value& x) {
    auto c = tuple_components(x);
    return numeric_value(t1, u1(c[0], c[1]));
  });
  auto lift2 = covariant({y1, y2}, {t2}, [=](const Value& x) {
    auto c = tuple_components(x);
    return numeric_value(t2, u2(c[0], c[1]));
  });
  return seq_all({head,
                  tensor_all({copy(y1), copy(y2), identity_bwd(t1), identity_bwd(t2)}),
                  tensor_all({braid_fwd({y1, y1, y2, y2}, {0, 2, 1, 3}), identity_bwd(t1),
                              identity_bwd(t2)}),
                  tensor_all({lift1, lift2, identity_bwd(t1), identity_bwd(t2)}),
                  tensor(counit(t1), counit(t2))});
}

inline SequentialSpec ultimatum_spec(const UltimatumParams& params) {
  int n = params.pie;
  auto y1 = FiniteType::int_range(0, n, "Offer");
  auto y2 = FiniteType::labels({"A", "R"}, "Reply");
  return SequentialSpec{
      y1, y2,
      [](const Value& o, const Value& a) {
        return a.ord == 0 ? static_cast<double>(int_value(o)) : 0.0;
      },
      [n](const Value& o, const Value& a) {
        return a.ord == 0 ? static_cast<double>(n - int_value(o)) : 0.0;
      }};
}

// ---------------------------------------------------------------------
// Cournot / Stackelberg duopolies and the shared profit box
// ---------------------------------------------------------------------

struct CournotParams {
  double a = 13;
  double b = 1;
  double c = 1;
  TypePtr grid;  // quantity grid
};

struct ProfitBox {
  GamePtr box;     // down [Q, C, Q], up out [U, U], nothing below
  TypePtr sum;     // q1 + q2
  TypePtr price;   // a - b * s
  TypePtr margin;  // price - marginal cost
  TypePtr util;    // margin * quantity
};

// The boxed demand-and-profit diagram: quantities and the cost parameter
// flow in from above, the two profits are computed through +, P, c1, c2, -,
// x nodes and bent back out of the top. Strategically trivial; its coplay is
// exactly the pair of profit functions.
inline ProfitBox make_profit_box(const TypePtr& qty, const TypePtr& cost_t, double a, double b) {
  auto sum = image_of2(qty, qty, [](double x, double y) { return x + y; }, "QtySum");
  auto price = image_of1(sum, [a, b](double s) { return a - b * s; }, "Price");
  // c1, c2 return the marginal cost (their quantity input is kept to mirror
  // the diagram, the functional form does not use it)
  auto margin_cost = cost_t;
  auto margin = image_of2(price, margin_cost, [](double p, double mc) { return p - mc; },
                          "Margin");
  auto util = image_of2(qty, margin, [](double q, double m) { return q * m; }, "Profit");

  auto c1 = fn2(qty, cost_t, margin_cost, [](double, double c) { return c; });
  auto c2 = fn2(cost_t, qty, margin_cost, [](double c, double) { return c; });
  auto add = fn2(qty, qty, sum, [](double x, double y) { return x + y; });
  auto pfn = fn1(sum, price, [a, b](double s) { return a - b * s; });
  auto sub1 = fn2(price, margin_cost, margin, [](double p, double mc) { return p - mc; });
  auto sub2 = fn2(price, margin_cost, margin, [](double p, double mc) { return p - mc; });
  auto mul1 = fn2(qty, margin, util, [](double q, double m) { return q * m; });
  auto mul2 = fn2(margin, qty, util, [](double m, double q) { return m * q; });

  auto ub = [&] { return identity_bwd(util); };
  std::vector<GamePtr> layers;
  // [q1, c, q2]
  layers.push_back(tensor_all({copy(qty), copy(cost_t), copy(qty), ub(), ub()}));
  // [q1,q1, c,c, q2,q2]
  layers.push_back(tensor_all(
      {copy(qty), identity(qty), identity(cost_t), identity(cost_t), copy(qty),
       identity(qty), ub(), ub()}));
  // [q1x,q1y,q1b,ca,cb,q2x,q2y,q2b] -> [q1x, q1y,ca, q1b,q2x, cb,q2y, q2b]
  layers.push_back(tensor_all(
      {braid_fwd({qty, qty, qty, cost_t, cost_t, qty, qty, qty}, {0, 1, 3, 2, 5, 4, 6, 7}),
       ub(), ub()}));
  // -> [q1x, mc1, s, mc2, q2b]
  layers.push_back(tensor_all({identity(qty), c1, add, c2, identity(qty), ub(), ub()}));
  // -> [q1x, mc1, p, mc2, q2b]
  layers.push_back(tensor_all(
      {identity(qty), identity(margin_cost), pfn, identity(margin_cost), identity(qty), ub(),
       ub()}));
  // -> [q1x, mc1, pa, pb, mc2, q2b]
  layers.push_back(tensor_all(
      {identity(qty), identity(margin_cost), copy(price), identity(margin_cost), identity(qty),
       ub(), ub()}));
  // -> [q1x, pa, mc1, pb, mc2, q2b]
  layers.push_back(tensor_all(
      {braid_fwd({qty, margin_cost, price, price, margin_cost, qty}, {0, 2, 1, 3, 4, 5}),
       ub(), ub()}));
  // -> [q1x, m1, m2, q2b]
  layers.push_back(tensor_all({identity(qty), sub1, sub2, identity(qty), ub(), ub()}));
  // -> [u1, u2]
  layers.push_back(tensor_all({mul1, mul2, ub(), ub()}));
  layers.push_back(tensor(counit(util), counit(util)));
  return ProfitBox{seq_all(layers), sum, price, margin, util};
}

// [OP] cournot: both quantity setters move simultaneously above the shared
// profit box.
inline GamePtr cournot(const CournotParams& params) {
  auto cost_t = image_grid({params.c}, "Cost");
  auto box = make_profit_box(params.grid, cost_t, params.a, params.b);
  auto p1 = player("P1", FiniteType::unit(), params.grid, box.util, Argmax{});
  auto p2 = player("P2", FiniteType::unit(), params.grid, box.util, Argmax{});
  auto top = tensor_all({p1, constant(numeric_value(cost_t, params.c)), p2});
  return seq(top, box.box);
}

inline NormalFormSpec cournot_spec(const CournotParams& params) {
  auto profit = [params](double qi, double qj) {
    return (params.a - params.b * (qi + qj) - params.c) * qi;
  };
  NormalFormSpec spec;
  spec.choices = {params.grid, params.grid};
  spec.utils = {[profit](const std::vector<Value>& p) {
                  return profit(real_value(p[0]), real_value(p[1]));
                },
                [profit](const std::vector<Value>& p) {
                  return profit(real_value(p[1]), real_value(p[0]));
                }};
  return spec;
}

// [OP] stackelberg: the leader's quantity is observed by the follower; the
// profit box is exactly the Cournot one.
inline GamePtr stackelberg(const CournotParams& params) {
  auto cost_t = image_grid({params.c}, "Cost");
  auto box = make_profit_box(params.grid, cost_t, params.a, params.b);
  auto q = params.grid;
  auto leader = player("P1", FiniteType::unit(), q, box.util, Argmax{});
  auto follower = player("P2", q, q, box.util, Argmax{});
  auto ub = [&] { return identity_bwd(box.util); };
  return seq_all({leader, tensor(copy(q), ub()),
                  tensor_all({identity(q), ub(), follower}),
                  tensor_all({identity(q), constant(numeric_value(cost_t, params.c)),
                              identity(q), ub(), ub()}),
                  box.box});
}

inline SequentialSpec stackelberg_spec(const CournotParams& params) {
  auto profit = [params](double qi, double qj) {
    return (params.a - params.b * (qi + qj) - params.c) * qi;
  };
  return SequentialSpec{params.grid, params.grid,
                        [profit](const Value& l, const Value& f) {
                          return profit(real_value(l), real_value(f));
                        },
                        [profit](const Value& l, const Value& f) {
                          return profit(real_value(f), real_value(l));
                        }};
}

// ---------------------------------------------------------------------
// Repeated Cournot duopoly
// ---------------------------------------------------------------------

struct RepeatedParams {
  CournotParams stage;
  int periods = 2;
  double beta = 0.5;
};

// Discounted payoff-sum types, innermost first: sums[0] = {0} is the
// terminal seed, sums[k+1] = sums[k] union { u + beta * s }. Each period has
// its own wire type; a single finite type cannot be closed under the
// discounting recursion.
inline std::vector<TypePtr> discounted_sum_types(const TypePtr& util, double beta,
                                                 int periods) {
  std::vector<std::vector<double>> levels;
  levels.push_back({0.0});
  std::vector<double> us;
  for (const auto& u : enumerate_values(util)) us.push_back(real_value(u));
  for (int k = 0; k < periods; ++k) {
    std::vector<double> next = levels.back();
    for (double u : us)
      for (double s : levels.back()) next.push_back(u + beta * s);
    levels.push_back(std::move(next));
  }
  std::vector<TypePtr> out;
  for (int k = 0; k <= periods; ++k)
    out.push_back(image_grid(levels[k], "PaySum" + std::to_string(k)));
  return out;
}

// The stage profit box with the cost parameter baked in: down [Q, Q],
// up out [U, U].
inline GamePtr make_stage_profit_box(const TypePtr& qty, const TypePtr& util, double a,
                                     double b, double c) {
  auto profit = [a, b, c](double qi, double qj) { return (a - b * (qi + qj) - c) * qi; };
  auto pi1 = fn2(qty, qty, util, profit);
  auto pi2 = fn2(qty, qty, util, [profit](double q1, double q2) { return profit(q2, q1); });
  auto ub = [&] { return identity_bwd(util); };
  return seq_all({tensor_all({copy(qty), copy(qty), ub(), ub()}),
                  tensor_all({braid_fwd({qty, qty, qty, qty}, {0, 2, 1, 3}), ub(), ub()}),
                  tensor_all({pi1, pi2, ub(), ub()}),
                  tensor(counit(util), counit(util))});
}

// One stage: history copied to both players and to cons; chosen quantities
// extend the history and feed the profit box; profits are discounted into
// the incoming future payoffs and the sums go both up and into the players.
inline GamePtr make_stage(const TypePtr& hist, const TypePtr& qty, const TypePtr& util,
                          const TypePtr& s_in, const TypePtr& s_out, double a, double b,
                          double c, double beta, const std::string& p1_name,
                          const std::string& p2_name) {
  auto pair_t = hist->list_elem();
  auto p1 = player(p1_name, hist, qty, s_out, Argmax{});
  auto p2 = player(p2_name, hist, qty, s_out, Argmax{});
  auto step = covariant({hist, qty, qty}, {hist}, [pair_t](const Value& x) {
    auto comp = tuple_components(x);
    return list_cons(comp[0], tuple_value(pair_t, {comp[1], comp[2]}));
  });
  auto back = [&] {
    return contravariant({util, s_in}, {s_out}, [s_out, beta](const Value& r) {
      auto comp = tuple_components(r);
      return numeric_value(s_out, real_value(comp[0]) + beta * real_value(comp[1]));
    });
  };
  auto pi_box = make_stage_profit_box(qty, util, a, b, c);
  auto so = [&] { return identity_bwd(s_out); };

  GamePtr back_block =
      seq_all({braid({Strand{s_out, true}, Strand{s_out, true}, Strand{s_out, true},
                      Strand{s_out, true}},
                     {0, 2, 1, 3}),
               tensor(copy_bwd(s_out), copy_bwd(s_out)),
               tensor(back(), back()),
               braid({Strand{util, true}, Strand{s_in, true}, Strand{util, true},
                      Strand{s_in, true}},
                     {0, 2, 1, 3})});

  std::vector<GamePtr> layers;
  layers.push_back(tensor_all({copy(hist), so(), so()}));
  layers.push_back(tensor_all({identity(hist), copy(hist), so(), so()}));
  layers.push_back(tensor_all({identity(hist), p1, p2, so(), so()}));
  layers.push_back(tensor_all({identity(hist), copy(qty), copy(qty), so(), so(), so(), so()}));
  layers.push_back(tensor_all(
      {braid_fwd({hist, qty, qty, qty, qty}, {0, 1, 3, 2, 4}), so(), so(), so(), so()}));
  layers.push_back(tensor_all({step, identity(qty), identity(qty), back_block}));
  layers.push_back(
      tensor_all({identity(hist), pi_box, identity_bwd(s_in), identity_bwd(s_in)}));
  return seq_all(layers);
}

// [OP] repeated: `periods` boxed stage games composed end to end, the
// initial history constant on top, terminal coutility 0 at the bottom.
inline GamePtr repeated(const RepeatedParams& params) {
  if (params.periods < 1) throw TypeError("repeated game needs at least one period");
  const auto& qty = params.stage.grid;
  auto util = image_of2(qty, qty,
                        [p = params.stage](double qi, double qj) {
                          return (p.a - p.b * (qi + qj) - p.c) * qi;
                        },
                        "StageProfit");
  auto pair_t = FiniteType::product({qty, qty});
  auto hist = FiniteType::bounded_list(pair_t, params.periods, "History");
  auto sums = discounted_sum_types(util, params.beta, params.periods);

  auto deepest = sums[params.periods];
  std::vector<GamePtr> chain;
  chain.push_back(tensor_all({constant(list_value(hist, {})), discard_bwd(deepest),
                              discard_bwd(deepest)}));
  for (int k = 0; k < params.periods; ++k) {
    auto s_out = sums[params.periods - k];
    auto s_in = sums[params.periods - k - 1];
    chain.push_back(make_stage(hist, qty, util, s_in, s_out, params.stage.a, params.stage.b,
                               params.stage.c, params.beta, "P1", "P2"));
  }
  auto zero = numeric_value(sums[0], 0.0);
  chain.push_back(tensor_all({discard(hist), constant_bwd(zero), constant_bwd(zero)}));
  return seq_all(chain);
}

// The single-player specialisation: a repeated decision problem.
inline GamePtr repeated_decision(const RepeatedParams& params) {
  if (params.periods < 1) throw TypeError("repeated decision needs at least one period");
  const auto& qty = params.stage.grid;
  auto util = image_of1(qty,
                        [p = params.stage](double q) { return (p.a - p.b * q - p.c) * q; },
                        "StageProfit");
  auto hist = FiniteType::bounded_list(qty, params.periods, "History");
  auto sums = discounted_sum_types(util, params.beta, params.periods);

  auto pi = fn1(qty, util, [p = params.stage](double q) { return (p.a - p.b * q - p.c) * q; });
  std::vector<GamePtr> chain;
  chain.push_back(
      tensor(constant(list_value(hist, {})), discard_bwd(sums[params.periods])));
  for (int k = 0; k < params.periods; ++k) {
    auto s_out = sums[params.periods - k];
    auto s_in = sums[params.periods - k - 1];
    auto pl = player("D", hist, qty, s_out, Argmax{});
    auto step = covariant({hist, qty}, {hist}, [](const Value& x) {
      auto comp = tuple_components(x);
      return list_cons(comp[0], comp[1]);
    });
    auto back = contravariant({util, s_in}, {s_out}, [s_out, b = params.beta](const Value& r) {
      auto comp = tuple_components(r);
      return numeric_value(s_out, real_value(comp[0]) + b * real_value(comp[1]));
    });
    auto pi_box = seq(tensor(pi, identity_bwd(util)), counit(util));
    auto so = [&] { return identity_bwd(s_out); };
    chain.push_back(seq_all(
        {tensor(copy(hist), so()),
         tensor_all({identity(hist), pl, so()}),
         tensor_all({identity(hist), copy(qty), so(), so()}),
         tensor_all({step, identity(qty), seq(copy_bwd(s_out), back)}),
         tensor_all({identity(hist), pi_box, identity_bwd(s_in)})}));
  }
  chain.push_back(tensor(discard(hist), constant_bwd(numeric_value(sums[0], 0.0))));
  return seq_all(chain);
}

// ---------------------------------------------------------------------
// Upstream monopolist, downstream duopoly
// ---------------------------------------------------------------------

struct MonopolistParams {
  double a = 12;
  double b = 1;
  TypePtr price_grid;
  TypePtr qty_grid;
};

// [OP] monopolist_duopoly: the monopolist sets the input price first; both
// duopolists observe it, their cost parameter is the price, and the
// monopolist's profit p*(q1+q2) is computed below and bent back up to it.
inline GamePtr monopolist_duopoly(const MonopolistParams& params) {
  const auto& pg = params.price_grid;
  const auto& qg = params.qty_grid;
  auto box = make_profit_box(qg, pg, params.a, params.b);
  auto um = image_of2(pg, box.sum, [](double p, double s) { return p * s; }, "MonopolyProfit");

  auto m = player("M", FiniteType::unit(), pg, um, Argmax{});
  auto p1 = player("P1", pg, qg, box.util, Argmax{});
  auto p2 = player("P2", pg, qg, box.util, Argmax{});
  auto add = fn2(qg, qg, box.sum, [](double x, double y) { return x + y; });
  auto mul_m = fn2(pg, box.sum, um, [](double p, double s) { return p * s; });

  auto ud = [&] { return identity_bwd(box.util); };
  auto umb = [&] { return identity_bwd(um); };
  std::vector<GamePtr> layers;
  layers.push_back(m);
  layers.push_back(tensor(copy(pg), umb()));
  layers.push_back(tensor_all({copy(pg), identity(pg), umb()}));
  layers.push_back(tensor_all({identity(pg), identity(pg), copy(pg), umb()}));
  layers.push_back(tensor_all({identity(pg), p1, p2, identity(pg), umb()}));
  layers.push_back(
      tensor_all({identity(pg), copy(qg), copy(qg), identity(pg), ud(), ud(), umb()}));
  layers.push_back(tensor_all(
      {braid_fwd({pg, qg, qg, qg, qg, pg}, {0, 1, 3, 2, 5, 4}), ud(), ud(), umb()}));
  layers.push_back(tensor_all(
      {identity(pg), add, identity(qg), identity(pg), identity(qg), ud(), ud(), umb()}));
  layers.push_back(
      tensor_all({mul_m, identity(qg), identity(pg), identity(qg), ud(), ud(), umb()}));
  layers.push_back(tensor_all({identity(um), box.box, umb()}));
  layers.push_back(counit(um));
  return seq_all(layers);
}

}  // namespace og::games
