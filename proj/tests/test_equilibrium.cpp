#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "og/stdgames.hpp"

using namespace og;
using namespace og::games;

namespace {

Payoff2 table2(std::vector<std::vector<double>> rows) {
  return [rows](const Value& a, const Value& b) { return rows[a.ord][b.ord]; };
}

// PD payoffs: (C,C)=(2,2), (D,D)=(1,1), (C,D)=(0,3), (D,C)=(3,0)
Payoff2 pd_row() { return table2({{2, 0}, {3, 1}}); }
Payoff2 pd_col() { return table2({{2, 3}, {0, 1}}); }

NormalFormSpec spec2(const TypePtr& y1, const TypePtr& y2, Payoff2 u1, Payoff2 u2) {
  NormalFormSpec s;
  s.choices = {y1, y2};
  s.utils = {[u1](const std::vector<Value>& p) { return u1(p[0], p[1]); },
             [u2](const std::vector<Value>& p) { return u2(p[0], p[1]); }};
  return s;
}

}  // namespace

TEST_CASE("nash_oracle finds the textbook equilibria") {
  auto loc = FiniteType::labels({"GCT", "ES"});
  SECTION("Table 1: meeting in New York") {
    auto meet = table2({{2, 0}, {0, 2}});
    auto eqs = nash_oracle(spec2(loc, loc, meet, meet));
    REQUIRE(eqs.size() == 2);
    REQUIRE(label_name(eqs[0][0]) == "GCT");
    REQUIRE(label_name(eqs[0][1]) == "GCT");
    REQUIRE(label_name(eqs[1][0]) == "ES");
    REQUIRE(label_name(eqs[1][1]) == "ES");
  }
  SECTION("zero utilities everywhere: every profile is an equilibrium") {
    auto zero = table2({{0, 0}, {0, 0}});
    REQUIRE(nash_oracle(spec2(loc, loc, zero, zero)).size() == 4);
  }
  SECTION("prisoner's dilemma: defection only") {
    auto cd = FiniteType::labels({"C", "D"});
    auto eqs = nash_oracle(spec2(cd, cd, pd_row(), pd_col()));
    REQUIRE(eqs.size() == 1);
    REQUIRE(label_name(eqs[0][0]) == "D");
    REQUIRE(label_name(eqs[0][1]) == "D");
  }
  SECTION("profile count beyond the limit is refused") {
    auto big = FiniteType::int_range(0, 2000);
    REQUIRE_THROWS_AS(nash_oracle(spec2(big, big, pd_row(), pd_row())), BudgetError);
  }
}

TEST_CASE("spe_oracle applies the two sequential optimality conditions") {
  SECTION("ultimatum N=3: the derived set, not the paper's worked list") {
    auto spec = ultimatum_spec(UltimatumParams{3});
    auto eqs = spe_oracle(spec);
    REQUIRE(eqs.size() == 2);
    // canonical order: offer 2 with accept-iff-below-3, then offer 3 accept-all
    REQUIRE(int_value(eqs[0].leader) == 2);
    REQUIRE(eqs[0].follower == std::vector<std::uint32_t>{0, 0, 0, 1});
    REQUIRE(int_value(eqs[1].leader) == 3);
    REQUIRE(eqs[1].follower == std::vector<std::uint32_t>{0, 0, 0, 0});
  }
  SECTION("ultimatum N=1 includes the zero-indifference equilibrium") {
    auto eqs = spe_oracle(ultimatum_spec(UltimatumParams{1}));
    REQUIRE(eqs.size() == 3);
    REQUIRE(int_value(eqs[0].leader) == 0);
    REQUIRE(eqs[0].follower == std::vector<std::uint32_t>{0, 1});
    REQUIRE(int_value(eqs[1].leader) == 1);
    REQUIRE(eqs[1].follower == std::vector<std::uint32_t>{0, 0});
    REQUIRE(int_value(eqs[2].leader) == 1);
    REQUIRE(eqs[2].follower == std::vector<std::uint32_t>{0, 1});
  }
  SECTION("constant utilities: every profile") {
    auto y1 = FiniteType::int_range(0, 1);
    auto y2 = FiniteType::int_range(0, 1);
    SequentialSpec s{y1, y2, [](const Value&, const Value&) { return 1.0; },
                     [](const Value&, const Value&) { return 1.0; }};
    REQUIRE(spe_oracle(s).size() == 2 * 4);
  }
  SECTION("stackelberg sparse grid: leader 6, follower answers 3") {
    auto grid = FiniteType::grid_ticks({0, 2, 3, 4, 6}, 1);
    auto eqs = spe_oracle(stackelberg_spec(CournotParams{13, 1, 1, grid}));
    REQUIRE(eqs.size() == 2);  // follower may tie at observation 2
    for (const auto& e : eqs) {
      REQUIRE(real_value(e.leader) == 6.0);
      REQUIRE(real_value(Value{grid, e.follower[4]}) == 3.0);  // at obs 6
    }
  }
}

TEST_CASE("equilibria of closed games enumerate the E relation") {
  SECTION("meeting in New York") {
    auto g = meeting_ny();
    auto idx = equilibrium_indices(*g, {});
    REQUIRE(idx == std::vector<std::uint64_t>{0, 3});
  }
  SECTION("prisoner's dilemma vs the oracle") {
    auto cd = FiniteType::labels({"C", "D"});
    auto g = bimatrix(cd, cd, pd_row(), pd_col());
    auto idx = equilibrium_indices(*g, {});
    REQUIRE(idx == std::vector<std::uint64_t>{3});  // (D, D)
  }
  SECTION("a closed trivial game has the single trivial equilibrium") {
    auto t = FiniteType::labels({"A", "B"});
    auto g = seq_all({constant(value_at(t, 0)), discard(t)});
    REQUIRE(is_closed(*g));
    auto eqs = equilibria(*g, {});
    REQUIRE(eqs.size() == 1);
  }
  SECTION("open games are rejected") {
    auto t = FiniteType::labels({"A", "B"});
    auto g = identity(t);
    REQUIRE_THROWS_AS(equilibrium_indices(*g, {}), TypeError);
  }
  SECTION("budget refusal reports the strategy-space size") {
    auto big = FiniteType::int_range(0, 9);
    auto obs = FiniteType::int_range(0, 9);
    auto u = FiniteType::int_range(0, 1);
    auto pl = player("P", obs, big, u, Argmax{});
    auto g = seq_all({constant(value_at(obs, 0)), pl,
                      tensor(discard(big), identity_bwd(u)),
                      contravariant({}, {u}, [u](const Value&) { return value_at(u, 0); })});
    REQUIRE(is_closed(*g));
    Config tight;
    tight.budget = 10;
    try {
      equilibrium_indices(*g, tight);
      FAIL("expected budget refusal");
    } catch (const BudgetError& e) {
      REQUIRE(std::string(e.what()).find("10000000000") != std::string::npos);
    }
  }
}

TEST_CASE("check_profile agrees with enumeration membership") {
  auto g = meeting_ny();
  Config cfg;
  auto idx = equilibrium_indices(*g, cfg);
  for (std::uint64_t i = 0; i < g->sigma->cardinality(); ++i) {
    bool member = std::find(idx.begin(), idx.end(), i) != idx.end();
    REQUIRE(check_profile(*g, *profile_at(g->sigma, i), cfg) == member);
  }
}

TEST_CASE("oracle equivalence: random bimatrix games") {
  std::mt19937 rng(4242);
  for (int inst = 0; inst < 50; ++inst) {
    int n1 = 2 + int(rng() % 3), n2 = 2 + int(rng() % 3);
    auto y1 = FiniteType::int_range(0, n1 - 1);
    auto y2 = FiniteType::int_range(0, n2 - 1);
    std::vector<std::vector<double>> u1(n1, std::vector<double>(n2));
    std::vector<std::vector<double>> u2(n1, std::vector<double>(n2));
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        u1[i][j] = double(int(rng() % 11)) - 5;
        u2[i][j] = double(int(rng() % 11)) - 5;
      }
    auto g = bimatrix(y1, y2, table2(u1), table2(u2));
    auto comp = equilibrium_indices(*g, {});
    auto oracle = nash_oracle(spec2(y1, y2, table2(u1), table2(u2)));
    std::vector<std::uint64_t> oracle_idx;
    for (const auto& prof : oracle) oracle_idx.push_back(prof[0].ord * n2 + prof[1].ord);
    REQUIRE(comp == oracle_idx);
  }
}

TEST_CASE("oracle equivalence: random sequential games") {
  std::mt19937 rng(777);
  for (int inst = 0; inst < 50; ++inst) {
    int n1 = 2 + int(rng() % 2), n2 = 2 + int(rng() % 2);
    auto y1 = FiniteType::int_range(0, n1 - 1);
    auto y2 = FiniteType::int_range(0, n2 - 1);
    std::vector<std::vector<double>> u1(n1, std::vector<double>(n2));
    std::vector<std::vector<double>> u2(n1, std::vector<double>(n2));
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j) {
        u1[i][j] = double(int(rng() % 9)) - 4;
        u2[i][j] = double(int(rng() % 9)) - 4;
      }
    // generic leader-follower build: same wiring as the ultimatum game
    auto t1 = payoff_image(y1, y2, table2(u1));
    auto t2 = payoff_image(y1, y2, table2(u2));
    auto p1 = player("P1", FiniteType::unit(), y1, t1, Argmax{});
    auto p2 = player("P2", y1, y2, t2, Argmax{});
    auto ucomb = covariant({y1, y2}, {t1, t2}, [=](const Value& x) {
      auto c = tuple_components(x);
      auto out = FiniteType::product({t1, t2});
      return tuple_value(out, {numeric_value(t1, u1[c[0].ord][c[1].ord]),
                               numeric_value(t2, u2[c[0].ord][c[1].ord])});
    });
    auto g = seq_all({p1, tensor(copy(y1), identity_bwd(t1)),
                      tensor_all({identity(y1), identity_bwd(t1), p2}),
                      tensor_all({ucomb, identity_bwd(t1), identity_bwd(t2)}),
                      tensor(counit(t1), counit(t2))});
    auto comp = equilibrium_indices(*g, {});

    SequentialSpec s{y1, y2,
                     [u1](const Value& a, const Value& b) { return u1[a.ord][b.ord]; },
                     [u2](const Value& a, const Value& b) { return u2[a.ord][b.ord]; }};
    auto oracle = spe_oracle(s);
    std::vector<std::uint64_t> oracle_idx;
    std::uint64_t tables = 1;
    for (int i = 0; i < n1; ++i) tables *= n2;
    for (const auto& e : oracle) {
      std::uint64_t t = 0;
      for (auto c : e.follower) t = t * n2 + c;
      oracle_idx.push_back(e.leader.ord * tables + t);
    }
    std::sort(oracle_idx.begin(), oracle_idx.end());
    REQUIRE(comp == oracle_idx);
  }
}

TEST_CASE("partition determinism: worker counts do not change the output") {
  auto grid = FiniteType::grid_range_ticks(0, 12, 1, 1);
  auto g = cournot(CournotParams{13, 1, 1, grid});
  Config c1, c2, c8;
  c1.workers = 1;
  c2.workers = 2;
  c8.workers = 8;
  auto r1 = equilibrium_indices(*g, c1);
  auto r2 = equilibrium_indices(*g, c2);
  auto r8 = equilibrium_indices(*g, c8);
  REQUIRE(r1 == r2);
  REQUIRE(r1 == r8);
  REQUIRE_FALSE(r1.empty());
}
