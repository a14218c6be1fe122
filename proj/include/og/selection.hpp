#pragma once

#include <string>
#include <variant>
#include <vector>

#include "og/continuation.hpp"
#include "og/types.hpp"

namespace og {

// Multi-valued selection functions defining player goals.
//
//   Argmax           maximise a real-valued outcome
//   Prefer           maximal outcomes under the canonical total order of the
//                    (finite) outcome type
//   Fixpoint         choices y with k(y) = y; requires Y = R as types
//   MatchObservation choose y equal to the observed x; requires X = Y and
//                    ignores the context entirely
struct Argmax {};
struct Prefer {};
struct Fixpoint {};
struct MatchObservation {};

using SelectionFunction = std::variant<Argmax, Prefer, Fixpoint, MatchObservation>;

inline std::string selection_name(const SelectionFunction& s) {
  if (std::holds_alternative<Argmax>(s)) return "argmax";
  if (std::holds_alternative<Prefer>(s)) return "prefer";
  if (std::holds_alternative<Fixpoint>(s)) return "fixpoint";
  return "match";
}

// [OP] select: the subset of Y picked out by the selection function for a
// tabulated context. tol applies only to Argmax on real payoffs; discrete
// selections use exact value equality and order.
inline std::vector<Value> select(const SelectionFunction& sel, const Continuation& k,
                                 double tol) {
  if (k.y->cardinality() == 0) throw TypeError("selection over empty choice type");
  std::vector<Value> out;
  if (std::holds_alternative<Argmax>(sel)) {
    auto tab = tabulate_continuation(k);
    double best = real_value(tab.front().second);
    for (const auto& [y, r] : tab) best = std::max(best, real_value(r));
    for (const auto& [y, r] : tab)
      if (real_value(r) >= best - tol) out.push_back(y);
  } else if (std::holds_alternative<Prefer>(sel)) {
    auto tab = tabulate_continuation(k);
    std::uint64_t best = 0;
    for (const auto& [y, r] : tab) best = std::max(best, r.ord);
    for (const auto& [y, r] : tab)
      if (r.ord == best) out.push_back(y);
  } else if (std::holds_alternative<Fixpoint>(sel)) {
    for (const auto& y : enumerate_values(k.y))
      if (k(y) == y) out.push_back(y);
  } else {
    throw TypeError("match selection has no context-based subset");
  }
  return out;
}

}  // namespace og
