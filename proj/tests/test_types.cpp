#include <catch2/catch_amalgamated.hpp>

#include "og/continuation.hpp"
#include "og/interface.hpp"
#include "og/strategy.hpp"
#include "og/types.hpp"

using namespace og;

TEST_CASE("unit type has exactly one inhabitant") {
  auto u = FiniteType::unit();
  REQUIRE(cardinality(u) == 1);
  auto vals = enumerate_values(u);
  REQUIRE(vals.size() == 1);
  REQUIRE(render_value(vals[0]) == "*");
}

TEST_CASE("labels enumerate in declaration order") {
  auto loc = FiniteType::labels({"GCT", "ES"});
  auto vals = enumerate_values(loc);
  REQUIRE(vals.size() == 2);
  REQUIRE(label_name(vals[0]) == "GCT");
  REQUIRE(label_name(vals[1]) == "ES");
  REQUIRE_THROWS_AS(FiniteType::labels({"A", "A"}), TypeError);
}

TEST_CASE("int range enumerates ascending") {
  auto t = FiniteType::int_range(0, 3);
  auto vals = enumerate_values(t);
  REQUIRE(vals.size() == 4);
  for (int i = 0; i <= 3; ++i) REQUIRE(int_value(vals[i]) == i);
}

TEST_CASE("grids hold exact scaled points") {
  auto g = FiniteType::grid_range_ticks(0, 24, 1, 2);  // 0, 0.5, ..., 12
  REQUIRE(cardinality(g) == 25);
  REQUIRE(real_value(value_at(g, 1)) == 0.5);
  auto sparse = FiniteType::grid_ticks({0, 2, 3, 4, 6}, 1);
  REQUIRE(cardinality(sparse) == 5);
  REQUIRE(real_value(value_at(sparse, 4)) == 6.0);
  REQUIRE(numeric_value(sparse, 3.0).ord == 2);
  REQUIRE_FALSE(try_numeric_value(sparse, 5.0).has_value());
  REQUIRE_FALSE(try_numeric_value(sparse, 3.25).has_value());
}

TEST_CASE("product ordinals are lexicographic, first component major") {
  auto a = FiniteType::labels({"x", "y"});
  auto b = FiniteType::int_range(0, 2);
  auto p = FiniteType::product({a, b});
  REQUIRE(cardinality(p) == 6);
  auto v = value_at(p, 4);  // (y, 1)
  auto comps = tuple_components(v);
  REQUIRE(label_name(comps[0]) == "y");
  REQUIRE(int_value(comps[1]) == 1);
  REQUIRE(tuple_value(p, comps) == v);
}

TEST_CASE("bounded lists enumerate shorter-first then lexicographically") {
  auto e = FiniteType::int_range(0, 1);
  auto l = FiniteType::bounded_list(e, 2);
  REQUIRE(cardinality(l) == 1 + 2 + 4);
  REQUIRE(list_items(value_at(l, 0)).empty());
  auto v3 = value_at(l, 3);  // first length-2 list: [0,0]
  auto items = list_items(v3);
  REQUIRE(items.size() == 2);
  REQUIRE(int_value(items[0]) == 0);
  REQUIRE(int_value(items[1]) == 0);
  auto rebuilt = list_value(l, items);
  REQUIRE(rebuilt == v3);
}

TEST_CASE("list cons appends and saturates at max length") {
  auto e = FiniteType::int_range(0, 2);
  auto l = FiniteType::bounded_list(e, 2);
  auto empty = list_value(l, {});
  auto one = list_cons(empty, int_value_of(e, 1));
  REQUIRE(list_items(one).size() == 1);
  auto two = list_cons(one, int_value_of(e, 2));
  REQUIRE(render_value(two) == "[1,2]");
  auto three = list_cons(two, int_value_of(e, 0));
  REQUIRE(render_value(three) == "[2,0]");  // oldest dropped, stays total
}

TEST_CASE("enumerate_values matches cardinality with distinct stable values") {
  auto types = std::vector<TypePtr>{
      FiniteType::unit(), FiniteType::labels({"a", "b", "c"}), FiniteType::int_range(-2, 2),
      FiniteType::grid_ticks({0, 1, 3}, 2),
      FiniteType::product({FiniteType::int_range(0, 1), FiniteType::labels({"l", "r"})}),
      FiniteType::bounded_list(FiniteType::int_range(0, 1), 3)};
  for (const auto& t : types) {
    auto vals = enumerate_values(t);
    REQUIRE(vals.size() == cardinality(t));
    for (std::size_t i = 0; i < vals.size(); ++i) {
      REQUIRE(vals[i].ord == i);
      for (std::size_t j = i + 1; j < vals.size(); ++j) REQUIRE(vals[i] != vals[j]);
    }
  }
}

TEST_CASE("reduce_interface forms products in declared order") {
  auto a = FiniteType::labels({"a1", "a2"});
  auto b = FiniteType::labels({"b1"});
  auto c = FiniteType::int_range(0, 1);
  auto d = FiniteType::int_range(0, 3);

  SECTION("mixed example") {
    Interface i{{a, c}, {b}, {}, {d}};
    auto n = reduce_interface(i);
    REQUIRE(n.x->kind() == TypeKind::Product);
    REQUIRE(type_equal(n.x->parts()[0], a));
    REQUIRE(type_equal(n.x->parts()[1], c));
    REQUIRE(type_equal(n.s, b));
    REQUIRE(n.y->is_unit());
    REQUIRE(type_equal(n.r, d));
  }
  SECTION("all empty is the closed interface") {
    auto n = reduce_interface(Interface{});
    REQUIRE(is_closed_interface(n));
  }
  SECTION("single forward string") {
    Interface i{{a}, {}, {}, {}};
    auto n = reduce_interface(i);
    REQUIRE(type_equal(n.x, a));
    REQUIRE(n.s->is_unit());
    REQUIRE(n.y->is_unit());
    REQUIRE(n.r->is_unit());
  }
  SECTION("reducing an already four-string interface is stable") {
    Interface i{{a}, {b}, {c}, {d}};
    auto n1 = reduce_interface(i);
    Interface i2{{n1.x}, {n1.s}, {n1.y}, {n1.r}};
    auto n2 = reduce_interface(i2);
    REQUIRE(normal_equal(n1, n2));
  }
}

TEST_CASE("strategy spaces count and index profiles") {
  auto obs = FiniteType::labels({"L", "R"});
  auto choice = FiniteType::labels({"a", "b"});
  auto leaf = StrategySpace::player("P", obs, choice);
  REQUIRE(leaf->cardinality() == 4);  // 2^2

  auto pair = StrategySpace::pair(leaf, StrategySpace::player("Q", FiniteType::unit(), choice));
  REQUIRE(pair->cardinality() == 8);

  for (std::uint64_t i = 0; i < pair->cardinality(); ++i) {
    auto p = profile_at(pair, i);
    REQUIRE(profile_index(*p) == i);
  }
  // leaf tables enumerate lexicographically over observations
  auto p1 = profile_at(leaf, 1);
  REQUIRE(label_name(p1->apply(value_at(obs, 0))) == "a");
  REQUIRE(label_name(p1->apply(value_at(obs, 1))) == "b");
}

TEST_CASE("player slots get unique instance names") {
  auto u = FiniteType::unit();
  auto c = FiniteType::labels({"x", "y"});
  auto s = StrategySpace::pair(StrategySpace::player("P", u, c),
                               StrategySpace::pair(StrategySpace::trivial(),
                                                   StrategySpace::player("P", u, c)));
  auto slots = player_slots(s);
  REQUIRE(slots.size() == 2);
  REQUIRE(slots[0].instance == "P");
  REQUIRE(slots[1].instance == "P#2");
}

TEST_CASE("tabulate_continuation lists |Y| pairs in canonical order") {
  SECTION("constant over labels") {
    auto y = FiniteType::labels({"A", "B"});
    auto r = FiniteType::int_range(0, 1);
    Continuation k{y, [r](const Value&) { return int_value_of(r, 0); }};
    auto tab = tabulate_continuation(k);
    REQUIRE(tab.size() == 2);
    REQUIRE(label_name(tab[0].first) == "A");
    REQUIRE(int_value(tab[0].second) == 0);
    REQUIRE(int_value(tab[1].second) == 0);
  }
  SECTION("identity as outcome") {
    auto y = FiniteType::int_range(0, 2);
    Continuation k{y, [](const Value& v) { return v; }};
    auto tab = tabulate_continuation(k);
    for (int i = 0; i <= 2; ++i) {
      REQUIRE(int_value(tab[i].first) == i);
      REQUIRE(int_value(tab[i].second) == i);
    }
  }
  SECTION("prisoner's dilemma column context against D") {
    // U_col(D, C) = 0, U_col(D, D) = 1 from the PD payoff table
    auto y = FiniteType::labels({"C", "D"});
    auto r = FiniteType::int_range(0, 3);
    Continuation k{y, [r](const Value& v) {
                     return int_value_of(r, label_name(v) == "C" ? 0 : 1);
                   }};
    auto tab = tabulate_continuation(k);
    REQUIRE(label_name(tab[0].first) == "C");
    REQUIRE(int_value(tab[0].second) == 0);
    REQUIRE(label_name(tab[1].first) == "D");
    REQUIRE(int_value(tab[1].second) == 1);
  }
}
