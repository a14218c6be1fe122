#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "og/types.hpp"

namespace og {

class StrategySpace;
using SpacePtr = std::shared_ptr<const StrategySpace>;

// Tree-shaped strategy space mirroring the composition syntax. Leaves are
// either the singleton space of a strategically trivial game or the space of
// total observation -> choice tables of one player.
class StrategySpace {
 public:
  enum class Kind { Trivial, Player, Pair };

  static SpacePtr trivial() {
    static const SpacePtr t = std::make_shared<StrategySpace>(Private{}, Kind::Trivial);
    return t;
  }

  static SpacePtr player(std::string name, TypePtr obs, TypePtr choice) {
    auto s = std::make_shared<StrategySpace>(Private{}, Kind::Player);
    s->name_ = std::move(name);
    s->obs_ = std::move(obs);
    s->choice_ = std::move(choice);
    if (s->choice_->cardinality() == 0) throw TypeError("player with empty choice type");
    std::uint64_t card = 1;
    if (s->obs_->cardinality_saturated()) {
      card = kCardMax;
    } else {
      for (std::uint64_t i = 0; i < s->obs_->cardinality() && card != kCardMax; ++i)
        card = sat_mul(card, s->choice_->cardinality());
    }
    s->card_ = card;
    return s;
  }

  static SpacePtr pair(SpacePtr l, SpacePtr r) {
    auto s = std::make_shared<StrategySpace>(Private{}, Kind::Pair);
    s->card_ = sat_mul(l->card_, r->card_);
    s->left_ = std::move(l);
    s->right_ = std::move(r);
    return s;
  }

  Kind kind() const { return kind_; }
  std::uint64_t cardinality() const { return card_; }
  bool cardinality_saturated() const { return card_ == kCardMax; }
  const std::string& player_name() const { return name_; }
  const TypePtr& obs() const { return obs_; }
  const TypePtr& choice() const { return choice_; }
  const SpacePtr& left() const { return left_; }
  const SpacePtr& right() const { return right_; }

  struct Private {};
  StrategySpace(Private, Kind k) : kind_(k) {}

 private:
  Kind kind_;
  std::string name_;
  TypePtr obs_, choice_;
  SpacePtr left_, right_;
  std::uint64_t card_ = 1;
};

inline bool space_equal(const StrategySpace& a, const StrategySpace& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case StrategySpace::Kind::Trivial:
      return true;
    case StrategySpace::Kind::Player:
      return a.player_name() == b.player_name() && type_equal(a.obs(), b.obs()) &&
             type_equal(a.choice(), b.choice());
    case StrategySpace::Kind::Pair:
      return space_equal(*a.left(), *b.left()) && space_equal(*a.right(), *b.right());
  }
  return false;
}

struct StrategyProfile;
using ProfilePtr = std::shared_ptr<const StrategyProfile>;

struct StrategyProfile {
  SpacePtr space;
  std::vector<std::uint32_t> table;  // player leaf: choice ordinal per obs ordinal
  ProfilePtr left, right;

  bool is_pair() const { return space->kind() == StrategySpace::Kind::Pair; }

  Value apply(const Value& x) const {
    if (space->kind() != StrategySpace::Kind::Player)
      throw TypeError("profile leaf expected");
    if (!type_equal(x.type, space->obs()))
      throw TypeError("observation type mismatch for player " + space->player_name());
    return Value{space->choice(), table[x.ord]};
  }
};

inline ProfilePtr trivial_profile() {
  static const ProfilePtr p = std::make_shared<StrategyProfile>(
      StrategyProfile{StrategySpace::trivial(), {}, nullptr, nullptr});
  return p;
}

inline ProfilePtr table_profile(SpacePtr leaf, std::vector<std::uint32_t> table) {
  if (leaf->kind() != StrategySpace::Kind::Player) throw TypeError("not a player leaf");
  if (table.size() != leaf->obs()->cardinality()) throw TypeError("table not total");
  for (auto c : table)
    if (c >= leaf->choice()->cardinality()) throw TypeError("choice ordinal out of range");
  return std::make_shared<StrategyProfile>(
      StrategyProfile{std::move(leaf), std::move(table), nullptr, nullptr});
}

inline ProfilePtr pair_profile(SpacePtr space, ProfilePtr l, ProfilePtr r) {
  return std::make_shared<StrategyProfile>(
      StrategyProfile{std::move(space), {}, std::move(l), std::move(r)});
}

// Every profile is addressable by a single integer in [0, |Sigma|).
// Pairs are left-major; a leaf table is read as a big-endian number whose
// digits are choice ordinals in canonical observation order.
inline ProfilePtr profile_at(const SpacePtr& space, std::uint64_t index) {
  if (space->cardinality_saturated())
    throw BudgetError("strategy space too large to index");
  if (index >= space->cardinality()) throw TypeError("profile index out of range");
  switch (space->kind()) {
    case StrategySpace::Kind::Trivial:
      return trivial_profile();
    case StrategySpace::Kind::Player: {
      std::uint64_t n_obs = space->obs()->cardinality();
      std::uint64_t n_choice = space->choice()->cardinality();
      std::vector<std::uint32_t> table(n_obs, 0);
      for (std::size_t i = n_obs; i-- > 0;) {
        table[i] = static_cast<std::uint32_t>(index % n_choice);
        index /= n_choice;
      }
      return table_profile(space, std::move(table));
    }
    case StrategySpace::Kind::Pair: {
      std::uint64_t rc = space->right()->cardinality();
      auto l = profile_at(space->left(), index / rc);
      auto r = profile_at(space->right(), index % rc);
      return pair_profile(space, std::move(l), std::move(r));
    }
  }
  throw TypeError("unreachable");
}

inline std::uint64_t profile_index(const StrategyProfile& p) {
  switch (p.space->kind()) {
    case StrategySpace::Kind::Trivial:
      return 0;
    case StrategySpace::Kind::Player: {
      std::uint64_t idx = 0;
      for (auto c : p.table) idx = idx * p.space->choice()->cardinality() + c;
      return idx;
    }
    case StrategySpace::Kind::Pair:
      return profile_index(*p.left) * p.space->right()->cardinality() +
             profile_index(*p.right);
  }
  throw TypeError("unreachable");
}

// Player leaves in left-to-right order with unique instance names: repeated
// base names get #2, #3, ... suffixes.
struct PlayerSlot {
  std::string instance;
  SpacePtr leaf;
};

inline void collect_player_leaves(const SpacePtr& s, std::vector<SpacePtr>& out) {
  switch (s->kind()) {
    case StrategySpace::Kind::Trivial:
      return;
    case StrategySpace::Kind::Player:
      out.push_back(s);
      return;
    case StrategySpace::Kind::Pair:
      collect_player_leaves(s->left(), out);
      collect_player_leaves(s->right(), out);
      return;
  }
}

inline std::vector<PlayerSlot> player_slots(const SpacePtr& space) {
  std::vector<SpacePtr> leaves;
  collect_player_leaves(space, leaves);
  std::vector<PlayerSlot> out;
  for (const auto& leaf : leaves) {
    std::string base = leaf->player_name();
    int n = 1;
    std::string inst = base;
    auto taken = [&](const std::string& s) {
      for (auto& p : out)
        if (p.instance == s) return true;
      return false;
    };
    while (taken(inst)) inst = base + "#" + std::to_string(++n);
    out.push_back(PlayerSlot{inst, leaf});
  }
  return out;
}

inline void collect_leaf_profiles(const ProfilePtr& p, std::vector<ProfilePtr>& out) {
  switch (p->space->kind()) {
    case StrategySpace::Kind::Trivial:
      return;
    case StrategySpace::Kind::Player:
      out.push_back(p);
      return;
    case StrategySpace::Kind::Pair:
      collect_leaf_profiles(p->left, out);
      collect_leaf_profiles(p->right, out);
      return;
  }
}

// Rebuilds a profile tree from one table per player slot (in slot order).
inline ProfilePtr profile_from_tables(const SpacePtr& space,
                                      const std::vector<std::vector<std::uint32_t>>& tables,
                                      std::size_t& next) {
  switch (space->kind()) {
    case StrategySpace::Kind::Trivial:
      return trivial_profile();
    case StrategySpace::Kind::Player: {
      if (next >= tables.size()) throw TypeError("too few player tables for profile");
      return table_profile(space, tables[next++]);
    }
    case StrategySpace::Kind::Pair: {
      auto l = profile_from_tables(space->left(), tables, next);
      auto r = profile_from_tables(space->right(), tables, next);
      return pair_profile(space, std::move(l), std::move(r));
    }
  }
  throw TypeError("unreachable");
}

inline ProfilePtr profile_from_tables(const SpacePtr& space,
                                      const std::vector<std::vector<std::uint32_t>>& tables) {
  std::size_t next = 0;
  auto p = profile_from_tables(space, tables, next);
  if (next != tables.size()) throw TypeError("too many player tables for profile");
  return p;
}

}  // namespace og
