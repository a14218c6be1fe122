#pragma once

#include <string>
#include <vector>

#include "og/types.hpp"

namespace og {

// The four-directional port signature of a diagram. Within each direction
// the strand order is significant; the interleaving of forward and backward
// strands is not part of the signature (port braiding is a drawing
// convention, not data).
struct Interface {
  std::vector<TypePtr> fwd_in;   // strings entering the top, flowing down
  std::vector<TypePtr> bwd_out;  // strings leaving the top, flowing up (S)
  std::vector<TypePtr> fwd_out;  // strings leaving the bottom, flowing down (Y)
  std::vector<TypePtr> bwd_in;   // strings entering the bottom, flowing up (R)
};

struct NormalInterface {
  TypePtr x, s, y, r;
};

inline TypePtr product_or_unit(const std::vector<TypePtr>& ts) {
  if (ts.empty()) return FiniteType::unit();
  if (ts.size() == 1) return ts[0];
  return FiniteType::product(ts);
}

// [OP] reduce_interface: empty direction becomes the dummy set I.
inline NormalInterface reduce_interface(const Interface& i) {
  return NormalInterface{product_or_unit(i.fwd_in), product_or_unit(i.bwd_out),
                         product_or_unit(i.fwd_out), product_or_unit(i.bwd_in)};
}

inline bool type_lists_equal(const std::vector<TypePtr>& a, const std::vector<TypePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!type_equal(a[i], b[i])) return false;
  return true;
}

inline std::string render_type_list(const std::vector<TypePtr>& ts) {
  if (ts.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) s += " @ ";
    s += type_name(*ts[i]);
  }
  return s;
}

inline std::string render_boundary(const std::vector<TypePtr>& fwd,
                                   const std::vector<TypePtr>& bwd) {
  return "[down: " + render_type_list(fwd) + " | up: " + render_type_list(bwd) + "]";
}

inline std::string render_interface(const Interface& i) {
  return render_boundary(i.fwd_in, i.bwd_out) + " -> " + render_boundary(i.fwd_out, i.bwd_in);
}

inline bool normal_equal(const NormalInterface& a, const NormalInterface& b) {
  return type_equal(a.x, b.x) && type_equal(a.s, b.s) && type_equal(a.y, b.y) &&
         type_equal(a.r, b.r);
}

inline bool is_closed_interface(const NormalInterface& n) {
  return n.x->is_unit() && n.s->is_unit() && n.y->is_unit() && n.r->is_unit();
}

}  // namespace og
