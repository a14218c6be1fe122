#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "og/types.hpp"

namespace og {

// A pure total mapping from a game's choices Y to outcomes R, together with
// the finite Y so it can be tabulated. Encapsulates the entire downstream
// environment of an open game.
struct Continuation {
  TypePtr y;
  std::function<Value(const Value&)> fn;

  Value operator()(const Value& v) const { return fn(v); }
};

inline Continuation trivial_continuation() {
  return Continuation{FiniteType::unit(), [](const Value&) { return unit_value(); }};
}

inline Continuation constant_continuation(TypePtr y, Value r) {
  return Continuation{std::move(y), [r](const Value&) { return r; }};
}

// [OP] tabulate_continuation: |Y| pairs in canonical order.
inline std::vector<std::pair<Value, Value>> tabulate_continuation(const Continuation& k) {
  std::vector<std::pair<Value, Value>> out;
  out.reserve(k.y->cardinality());
  for (const auto& v : enumerate_values(k.y)) out.emplace_back(v, k(v));
  return out;
}

}  // namespace og
