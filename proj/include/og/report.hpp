#pragma once

#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "og/equilibrium.hpp"
#include "og/strategy.hpp"

namespace og {

using json = nlohmann::ordered_json;

// Values render to JSON as: labels -> strings, numerics -> numbers (integral
// numbers stay integers), unit -> "*", tuples and lists -> arrays.
inline json value_to_json(const Value& v) {
  switch (v.type->kind()) {
    case TypeKind::Unit:
      return "*";
    case TypeKind::Labels:
      return label_name(v);
    case TypeKind::IntRange:
      return int_value(v);
    case TypeKind::Grid: {
      std::int64_t tick = v.type->grid_points()[v.ord];
      std::int64_t denom = v.type->grid_denom();
      if (tick % denom == 0) return tick / denom;
      return static_cast<double>(tick) / static_cast<double>(denom);
    }
    case TypeKind::Product: {
      json arr = json::array();
      for (const auto& c : tuple_components(v)) arr.push_back(value_to_json(c));
      return arr;
    }
    case TypeKind::List: {
      json arr = json::array();
      for (const auto& c : list_items(v)) arr.push_back(value_to_json(c));
      return arr;
    }
  }
  return nullptr;
}

inline Value value_from_json(const json& j, const TypePtr& t) {
  switch (t->kind()) {
    case TypeKind::Unit:
      return unit_value();
    case TypeKind::Labels:
      if (!j.is_string()) throw TypeError("expected a label string for " + type_name(*t));
      return label_value(t, j.get<std::string>());
    case TypeKind::IntRange:
    case TypeKind::Grid:
      if (!j.is_number()) throw TypeError("expected a number for " + type_name(*t));
      return numeric_value(t, j.get<double>());
    case TypeKind::Product: {
      if (!j.is_array() || j.size() != t->parts().size())
        throw TypeError("expected a " + std::to_string(t->parts().size()) +
                        "-element array for " + type_name(*t));
      std::vector<Value> comps;
      for (std::size_t i = 0; i < j.size(); ++i)
        comps.push_back(value_from_json(j[i], t->parts()[i]));
      return tuple_value(t, comps);
    }
    case TypeKind::List: {
      if (!j.is_array()) throw TypeError("expected an array for " + type_name(*t));
      std::vector<Value> items;
      for (const auto& e : j) items.push_back(value_from_json(e, t->list_elem()));
      return list_value(t, items);
    }
  }
  throw TypeError("unreachable");
}

// A profile is a flat object keyed by player instance name; each table is a
// sorted array of [observation, choice] pairs.
inline json profile_to_json(const SpacePtr& space, const StrategyProfile& prof) {
  auto slots = player_slots(space);
  std::vector<ProfilePtr> leaves;
  {
    std::vector<ProfilePtr> tmp;
    auto root = std::make_shared<StrategyProfile>(prof);
    collect_leaf_profiles(root, tmp);
    leaves = std::move(tmp);
  }
  json out = json::object();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    json table = json::array();
    for (const auto& obs : enumerate_values(slots[i].leaf->obs())) {
      Value choice{slots[i].leaf->choice(), leaves[i]->table[obs.ord]};
      table.push_back(json::array({value_to_json(obs), value_to_json(choice)}));
    }
    out[slots[i].instance] = std::move(table);
  }
  return out;
}

// Tables may be given exhaustively or with a default:
//   [[obs, choice], ...]
//   {"default": choice}
//   {"default": choice, "entries": [[obs, choice], ...]}
inline ProfilePtr profile_from_json(const SpacePtr& space, const json& j) {
  if (!j.is_object()) throw TypeError("profile must be a JSON object keyed by player name");
  auto slots = player_slots(space);
  std::vector<std::vector<std::uint32_t>> tables;
  std::set<std::string> used;
  for (const auto& slot : slots) {
    if (!j.contains(slot.instance))
      throw TypeError("profile is missing player '" + slot.instance + "'");
    const json& tj = j.at(slot.instance);
    used.insert(slot.instance);
    std::uint64_t n_obs = slot.leaf->obs()->cardinality();
    std::vector<std::int64_t> table(n_obs, -1);
    auto put = [&](const json& entry) {
      if (!entry.is_array() || entry.size() != 2)
        throw TypeError("table entries for '" + slot.instance + "' must be [obs, choice] pairs");
      Value obs = value_from_json(entry[0], slot.leaf->obs());
      Value choice = value_from_json(entry[1], slot.leaf->choice());
      table[obs.ord] = static_cast<std::int64_t>(choice.ord);
    };
    if (tj.is_array()) {
      for (const auto& entry : tj) put(entry);
    } else if (tj.is_object()) {
      if (tj.contains("entries"))
        for (const auto& entry : tj.at("entries")) put(entry);
      if (tj.contains("default")) {
        Value dflt = value_from_json(tj.at("default"), slot.leaf->choice());
        for (auto& cell : table)
          if (cell < 0) cell = static_cast<std::int64_t>(dflt.ord);
      }
    } else {
      throw TypeError("table for '" + slot.instance + "' must be an array or an object");
    }
    std::vector<std::uint32_t> final_table;
    for (std::uint64_t i = 0; i < n_obs; ++i) {
      if (table[i] < 0)
        throw TypeError("table for '" + slot.instance + "' is not total: missing observation " +
                        render_value(Value{slot.leaf->obs(), i}));
      final_table.push_back(static_cast<std::uint32_t>(table[i]));
    }
    tables.push_back(std::move(final_table));
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!used.count(it.key()))
      throw TypeError("profile names unknown player '" + it.key() + "'");
  return profile_from_tables(space, tables);
}

inline json sigma_cardinality_json(const SpacePtr& space) {
  if (space->cardinality_saturated()) return "overflow";
  return space->cardinality();
}

inline json deviation_row_to_json(const DeviationRow& row) {
  json r = json::object();
  r["name"] = row.player;
  r["observation"] = value_to_json(row.obs);
  r["chosen"] = value_to_json(row.chosen);
  r["goal"] = row.goal;
  r["ok"] = row.ok;
  if (row.numeric) {
    r["realized"] = row.realized;
    r["best"] = row.best;
  }
  r["best_choice"] = value_to_json(row.best_choice);
  return r;
}

}  // namespace og
