#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "og/combinators.hpp"
#include "og/equilibrium.hpp"

using namespace og;

namespace {

TypePtr loc() { return FiniteType::labels({"GCT", "ES"}); }
TypePtr pay() { return FiniteType::int_range(0, 3); }

// Table 1, Meeting in New York: 2 on the diagonal, 0 off it.
int meet_pay(const Value& a, const Value& b) { return a.ord == b.ord ? 2 : 0; }

}  // namespace

TEST_CASE("player atom plays its table and has trivial coplay") {
  auto p = player("P", loc(), loc(), pay(), Argmax{});
  REQUIRE(p->sigma->cardinality() == 4);
  auto sigma = profile_at(p->sigma, 1);  // GCT -> GCT, ES -> ES... table digits (0,1)
  auto x = value_at(loc(), 1);
  REQUIRE(play(*p, *sigma, x) == value_at(loc(), 1));
  REQUIRE(coplay(*p, *sigma, x, value_at(pay(), 2)) == unit_value());
}

TEST_CASE("argmax player equilibrium keeps exactly the maximising choices") {
  auto cd = FiniteType::labels({"C", "D"});
  auto p = player("Row", FiniteType::unit(), cd, pay(), Argmax{});
  // PD row context against D: C -> 0, D -> 1
  Continuation k{cd, [](const Value& v) {
                   return int_value_of(pay(), label_name(v) == "C" ? 0 : 1);
                 }};
  auto plays_c = profile_at(p->sigma, 0);
  auto plays_d = profile_at(p->sigma, 1);
  REQUIRE(eq_member(*p, *plays_d, unit_value(), k));
  REQUIRE_FALSE(eq_member(*p, *plays_c, unit_value(), k));
}

TEST_CASE("argmax player counts strategies over observations") {
  auto p = player("P", loc(), FiniteType::labels({"a", "b"}), pay(), Argmax{});
  REQUIRE(p->sigma->cardinality() == 4);  // 2^2
}

TEST_CASE("fixpoint player selects exactly the fixed points") {
  auto t = FiniteType::int_range(0, 2);
  auto p = player("F", FiniteType::unit(), t, t, Fixpoint{});
  Continuation ident{t, [](const Value& v) { return v; }};
  for (std::uint64_t i = 0; i < 3; ++i)
    REQUIRE(eq_member(*p, *profile_at(p->sigma, i), unit_value(), ident));
  Continuation shifted{t, [t](const Value& v) {
                         return int_value_of(t, (int_value(v) + 1) % 3);
                       }};
  for (std::uint64_t i = 0; i < 3; ++i)
    REQUIRE_FALSE(eq_member(*p, *profile_at(p->sigma, i), unit_value(), shifted));
}

TEST_CASE("select implements argmax, ties, fixpoints and affine invariance") {
  auto ab = FiniteType::labels({"A", "B"});
  auto r = FiniteType::int_range(-20, 20);
  auto ctx = [&](int va, int vb) {
    return Continuation{ab, [=](const Value& v) {
                          return int_value_of(r, v.ord == 0 ? va : vb);
                        }};
  };
  SECTION("argmax over [(A,2),(B,0)] is {A}") {
    auto s = select(Argmax{}, ctx(2, 0), 1e-9);
    REQUIRE(s.size() == 1);
    REQUIRE(label_name(s[0]) == "A");
  }
  SECTION("argmax tie keeps both") {
    auto s = select(Argmax{}, ctx(1, 1), 1e-9);
    REQUIRE(s.size() == 2);
  }
  SECTION("fixpoint over the identity keeps the whole type") {
    auto t = FiniteType::int_range(0, 2);
    Continuation ident{t, [](const Value& v) { return v; }};
    REQUIRE(select(Fixpoint{}, ident, 1e-9).size() == 3);
  }
  SECTION("positive affine rescaling never changes the argmax set") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      int va = int(rng() % 9) - 4, vb = int(rng() % 9) - 4;
      int a = 1 + int(rng() % 3), b = int(rng() % 5) - 2;
      auto base = select(Argmax{}, ctx(va, vb), 1e-9);
      auto scaled = select(Argmax{}, ctx(a * va + b, a * vb + b), 1e-9);
      REQUIRE(base.size() == scaled.size());
      for (std::size_t i = 0; i < base.size(); ++i) REQUIRE(base[i] == scaled[i]);
    }
  }
}

TEST_CASE("covariant and contravariant computations implement the lifted function") {
  auto t3 = FiniteType::int_range(0, 2);
  auto t6 = FiniteType::int_range(0, 4);
  auto dbl = covariant({t3}, {t6}, [t6](const Value& v) {
    return int_value_of(t6, 2 * int_value(v));
  });
  REQUIRE(int_value(play(*dbl, *trivial_profile(), value_at(t3, 2))) == 4);
  REQUIRE(coplay(*dbl, *trivial_profile(), value_at(t3, 1), unit_value()) == unit_value());

  auto dbl_star = contravariant({t3}, {t6}, [t6](const Value& v) {
    return int_value_of(t6, 2 * int_value(v));
  });
  REQUIRE(play(*dbl_star, *trivial_profile(), unit_value()) == unit_value());
  REQUIRE(int_value(coplay(*dbl_star, *trivial_profile(), unit_value(), value_at(t3, 2))) == 4);
}

TEST_CASE("utility table of Meeting in New York lifts covariantly") {
  auto y = loc();
  auto u = FiniteType::int_range(0, 2);
  auto lift = covariant({y, y}, {u}, [u](const Value& v) {
    auto c = tuple_components(v);
    return int_value_of(u, meet_pay(c[0], c[1]));
  });
  auto x = tuple_value(lift->normal.x, {value_at(y, 0), value_at(y, 0)});
  REQUIRE(int_value(play(*lift, *trivial_profile(), x)) == 2);
}

TEST_CASE("counit routes the forward value backwards") {
  auto t = loc();
  auto tau = counit(t);
  auto gct = value_at(t, 0);
  REQUIRE(play(*tau, *trivial_profile(), gct) == unit_value());
  REQUIRE(coplay(*tau, *trivial_profile(), gct, unit_value()) == gct);

  SECTION("unit counit is fully trivial") {
    auto tu = counit(FiniteType::unit());
    REQUIRE(coplay(*tu, *trivial_profile(), unit_value(), unit_value()) == unit_value());
  }
}

TEST_CASE("copy, delete, const and braid behave as their functions") {
  auto t = FiniteType::labels({"A", "B"});
  auto c = copy(t);
  auto copied = play(*c, *trivial_profile(), value_at(t, 0));
  auto comps = tuple_components(copied);
  REQUIRE(label_name(comps[0]) == "A");
  REQUIRE(label_name(comps[1]) == "A");

  REQUIRE(play(*discard(t), *trivial_profile(), value_at(t, 1)) == unit_value());

  auto three = constant(int_value_of(pay(), 3));
  REQUIRE(int_value(play(*three, *trivial_profile(), unit_value())) == 3);
  auto three_star = constant_bwd(int_value_of(pay(), 3));
  REQUIRE(int_value(coplay(*three_star, *trivial_profile(), unit_value(), unit_value())) == 3);

  auto x = FiniteType::int_range(0, 1);
  auto sw = braid_fwd({x, t}, {1, 0});
  auto in = tuple_value(sw->normal.x, {value_at(x, 1), value_at(t, 0)});
  auto swapped = tuple_components(play(*sw, *trivial_profile(), in));
  REQUIRE(label_name(swapped[0]) == "A");
  REQUIRE(int_value(swapped[1]) == 1);

  SECTION("mixed braid reorders backward strands in coplay") {
    // top [ ^a, ^b ] -> bottom [ ^b, ^a ]
    auto b = braid({Strand{x, true}, Strand{t, true}}, {1, 0});
    auto r = tuple_value(b->normal.r, {value_at(t, 1), value_at(x, 0)});
    auto s = tuple_components(coplay(*b, *trivial_profile(), unit_value(), r));
    REQUIRE(int_value(s[0]) == 0);
    REQUIRE(label_name(s[1]) == "B");
  }
}

TEST_CASE("sequential composition chains play and threads coplay") {
  auto a = FiniteType::int_range(0, 2);
  auto b = FiniteType::int_range(0, 4);
  auto c = FiniteType::int_range(0, 9);
  auto f = covariant({a}, {b}, [b](const Value& v) { return int_value_of(b, 2 * int_value(v)); });
  auto g = covariant({b}, {c}, [c](const Value& v) { return int_value_of(c, int_value(v) + 1); });
  auto fg = seq(f, g);
  REQUIRE(int_value(play(*fg, *profile_at(fg->sigma, 0), value_at(a, 2))) == 5);

  SECTION("composition type error names both boundaries") {
    try {
      seq(g, f);
      FAIL("expected a type error");
    } catch (const TypeError& e) {
      std::string msg = e.what();
      REQUIRE(msg.find("int(0..9)") != std::string::npos);
      REQUIRE(msg.find("int(0..2)") != std::string::npos);
    }
  }
}

TEST_CASE("decision: player then utility then counit selects argmax strategies") {
  // The simplest decision problem: P : X -> Y (x) R*, utility U lifted
  // covariantly, counit closing the loop. Equilibria are the argmax tables.
  auto x = FiniteType::labels({"lo", "hi"});
  auto y = FiniteType::int_range(0, 2);
  auto u = FiniteType::int_range(-10, 10);
  auto pl = player("P", x, y, u, Argmax{});
  // utility: payoff = y if observation is lo, -y if hi; per-observation argmax
  auto util = covariant({y}, {u}, [u](const Value& v) {
    return int_value_of(u, int_value(v));
  });
  auto game = seq(pl, seq(tensor(util, identity_bwd(u)), counit(u)));
  REQUIRE(game->normal.y->is_unit());
  // open game: x is still an observation; equilibrium at each x requires the
  // table to pick argmax(y) = 2 at that observation.
  Continuation k = trivial_continuation();
  int eq_count = 0;
  for (std::uint64_t i = 0; i < game->sigma->cardinality(); ++i) {
    auto p = profile_at(game->sigma, i);
    bool at_lo = eq_member(*game, *p, value_at(x, 0), k);
    auto table = p->left->table;
    REQUIRE(at_lo == (table[0] == 2));
    if (at_lo) ++eq_count;
  }
  REQUIRE(eq_count == 3);  // the unconstrained entry at "hi" stays free
}

TEST_CASE("tensor runs components side by side") {
  auto a = FiniteType::int_range(0, 1);
  auto b = FiniteType::int_range(0, 3);
  auto f = covariant({a}, {b}, [b](const Value& v) { return int_value_of(b, 3 * int_value(v)); });
  auto g = covariant({a}, {b}, [b](const Value& v) { return int_value_of(b, 1 + int_value(v)); });
  auto fg = tensor(f, g);
  auto in = tuple_value(fg->normal.x, {value_at(a, 1), value_at(a, 1)});
  auto out = tuple_components(play(*fg, *profile_at(fg->sigma, 0), in));
  REQUIRE(int_value(out[0]) == 3);
  REQUIRE(int_value(out[1]) == 2);
}

TEST_CASE("tensor of two players is mutual best response") {
  auto y = loc();
  auto u = FiniteType::int_range(0, 2);
  auto p1 = player("P1", FiniteType::unit(), y, u, Argmax{});
  auto p2 = player("P2", FiniteType::unit(), y, u, Argmax{});
  auto both = tensor(p1, p2);
  // context: the Meeting-in-New-York payoffs for both players
  Continuation k{both->normal.y, [&](const Value& v) {
                   auto c = tuple_components(v);
                   int pay = meet_pay(c[0], c[1]);
                   auto rt = both->normal.r;
                   return tuple_value(rt, {int_value_of(u, pay), int_value_of(u, pay)});
                 }};
  std::vector<std::uint64_t> eqs;
  for (std::uint64_t i = 0; i < 4; ++i)
    if (eq_member(*both, *profile_at(both->sigma, i), unit_value(), k)) eqs.push_back(i);
  REQUIRE(eqs == std::vector<std::uint64_t>{0, 3});  // (GCT,GCT) and (ES,ES)
}

TEST_CASE("strategically trivial games stay trivial under composition and tensor") {
  auto t = FiniteType::int_range(0, 1);
  auto f = identity(t);
  auto g = copy(t);
  auto both = tensor(f, identity_bwd(t));
  auto chain = seq(f, g);
  for (const auto& game : {both, chain}) {
    std::vector<SpacePtr> leaves;
    collect_player_leaves(game->sigma, leaves);
    REQUIRE(leaves.empty());
    REQUIRE(game->sigma->cardinality() == 1);
  }
}

TEST_CASE("reach is the exact play image over the strategy space") {
  auto y = loc();
  auto u = FiniteType::int_range(0, 2);
  auto p1 = player("P1", FiniteType::unit(), y, u, Argmax{});
  auto dup = seq(p1, tensor(copy(y), identity_bwd(u)));
  // brute force the image over all profiles and compare
  std::vector<Value> brute;
  for (std::uint64_t i = 0; i < dup->sigma->cardinality(); ++i) {
    auto v = play(*dup, *profile_at(dup->sigma, i), unit_value());
    if (std::find(brute.begin(), brute.end(), v) == brute.end()) brute.push_back(v);
  }
  std::sort(brute.begin(), brute.end());
  auto img = reach(*dup, unit_value());
  REQUIRE(img.size() == brute.size());
  for (std::size_t i = 0; i < img.size(); ++i) REQUIRE(img[i] == brute[i]);
}

TEST_CASE("play and coplay are total over small games") {
  auto t = FiniteType::int_range(0, 1);
  auto u = FiniteType::int_range(0, 3);
  auto pl = player("P", t, t, u, Argmax{});
  auto piece = seq(pl, tensor(copy(t), identity_bwd(u)));
  for (std::uint64_t s = 0; s < piece->sigma->cardinality(); ++s) {
    auto p = profile_at(piece->sigma, s);
    for (const auto& x : enumerate_values(piece->normal.x)) {
      REQUIRE_NOTHROW(play(*piece, *p, x));
      for (const auto& r : enumerate_values(piece->normal.r))
        REQUIRE_NOTHROW(coplay(*piece, *p, x, r));
    }
  }
}

TEST_CASE("prefer players maximise in the outcome type's canonical order") {
  auto outcome = FiniteType::labels({"lose", "draw", "win"});
  auto choice = FiniteType::int_range(0, 2);
  auto p = player("P", FiniteType::unit(), choice, outcome, Prefer{});
  // context: choice 0 -> draw, 1 -> win, 2 -> lose
  Continuation k{choice, [outcome](const Value& v) {
                   std::uint64_t map[] = {1, 2, 0};
                   return Value{outcome, map[v.ord]};
                 }};
  REQUIRE(select(Prefer{}, k, 1e-9).size() == 1);
  REQUIRE_FALSE(eq_member(*p, *profile_at(p->sigma, 0), unit_value(), k));
  REQUIRE(eq_member(*p, *profile_at(p->sigma, 1), unit_value(), k));
  REQUIRE_FALSE(eq_member(*p, *profile_at(p->sigma, 2), unit_value(), k));
}

TEST_CASE("lift-time validation rejects ill-typed goals") {
  auto a = FiniteType::int_range(0, 2);
  auto b = FiniteType::int_range(0, 5);
  auto labels = FiniteType::labels({"x", "y"});
  SECTION("fixpoint needs choice = outcome") {
    REQUIRE_THROWS_AS(player("F", FiniteType::unit(), a, b, Fixpoint{}), TypeError);
    REQUIRE_NOTHROW(player("F", FiniteType::unit(), a, a, Fixpoint{}));
  }
  SECTION("match needs observation = choice and no outcome wire") {
    REQUIRE_THROWS_AS(player("M", a, b, FiniteType::unit(), MatchObservation{}), TypeError);
    REQUIRE_THROWS_AS(player("M", a, a, b, MatchObservation{}), TypeError);
    REQUIRE_NOTHROW(player("M", a, a, FiniteType::unit(), MatchObservation{}));
  }
  SECTION("argmax needs a numeric outcome") {
    REQUIRE_THROWS_AS(player("A", FiniteType::unit(), a, labels, Argmax{}), TypeError);
  }
  SECTION("empty choice types are rejected") {
    auto empty = FiniteType::labels({});
    REQUIRE_THROWS_AS(player("E", FiniteType::unit(), empty, b, Argmax{}), TypeError);
    Continuation k{empty, [](const Value& v) { return v; }};
    REQUIRE_THROWS_AS(select(Argmax{}, k, 1e-9), TypeError);
  }
}

TEST_CASE("play, coplay and eq_member reject ill-typed arguments") {
  auto loc2 = loc();
  auto other = FiniteType::labels({"X", "Y", "Z"});
  auto p = player("P", loc2, loc2, pay(), Argmax{});
  auto prof = profile_at(p->sigma, 0);
  SECTION("wrong observation type") {
    REQUIRE_THROWS_AS(play(*p, *prof, value_at(other, 0)), TypeError);
  }
  SECTION("wrong outcome type in coplay") {
    REQUIRE_THROWS_AS(coplay(*p, *prof, value_at(loc2, 0), value_at(other, 0)), TypeError);
  }
  SECTION("profile from another game's space") {
    auto q = player("Q", other, other, pay(), Argmax{});
    auto wrong = profile_at(q->sigma, 0);
    REQUIRE_THROWS_AS(play(*p, *wrong, value_at(loc2, 0)), TypeError);
  }
  SECTION("continuation over the wrong choice type") {
    Continuation k{other, [](const Value& v) { return v; }};
    REQUIRE_THROWS_AS(eq_member(*p, *prof, value_at(loc2, 0), k), TypeError);
  }
}
