#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace og {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class TypeError : public Error {
 public:
  explicit TypeError(const std::string& msg) : Error(msg) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

class FiniteType;
using TypePtr = std::shared_ptr<const FiniteType>;

enum class TypeKind { Unit, Labels, IntRange, Grid, Product, List };

// Saturating multiply/add used for cardinalities. Saturated counts are kept
// as a flag so enumeration can refuse instead of overflowing.
constexpr std::uint64_t kCardMax = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCardMax / b) return kCardMax;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  if (a > kCardMax - b) return kCardMax;
  return a + b;
}

// A finite wire type: every inhabitant is addressable by an ordinal in
// [0, cardinality). Ordinal order is the canonical value order: declaration
// order for labels, ascending for numerics, length-then-lexicographic for
// lists, lexicographic (first component most significant) for products.
class FiniteType : public std::enable_shared_from_this<FiniteType> {
 public:
  static const TypePtr& unit() {
    static const TypePtr t = std::make_shared<FiniteType>(Private{}, TypeKind::Unit);
    return t;
  }

  static TypePtr labels(std::vector<std::string> names, std::string display = "") {
    auto t = std::make_shared<FiniteType>(Private{}, TypeKind::Labels);
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw TypeError("duplicate label '" + names[i] + "'");
    t->labels_ = std::move(names);
    t->card_ = t->labels_.size();
    t->display_ = std::move(display);
    return t;
  }

  static TypePtr int_range(std::int64_t lo, std::int64_t hi, std::string display = "") {
    if (lo > hi) throw TypeError("int range with lo > hi");
    auto t = std::make_shared<FiniteType>(Private{}, TypeKind::IntRange);
    t->lo_ = lo;
    t->hi_ = hi;
    t->card_ = static_cast<std::uint64_t>(hi - lo) + 1;
    t->display_ = std::move(display);
    return t;
  }

  // Grid over exact scaled integers: the inhabitants are ticks[i] / denom.
  static TypePtr grid_ticks(std::vector<std::int64_t> ticks, std::int64_t denom,
                            std::string display = "") {
    if (denom <= 0) throw TypeError("grid denominator must be positive");
    if (ticks.empty()) throw TypeError("grid needs at least one point");
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    auto t = std::make_shared<FiniteType>(Private{}, TypeKind::Grid);
    t->ticks_ = std::move(ticks);
    t->denom_ = denom;
    t->card_ = t->ticks_.size();
    t->display_ = std::move(display);
    return t;
  }

  static TypePtr grid_range_ticks(std::int64_t lo, std::int64_t hi, std::int64_t step,
                                  std::int64_t denom, std::string display = "") {
    if (step <= 0) throw TypeError("grid step must be positive");
    if (lo > hi) throw TypeError("grid with lo > hi");
    if ((hi - lo) % step != 0) throw TypeError("grid span is not a multiple of the step");
    std::vector<std::int64_t> ticks;
    for (std::int64_t v = lo; v <= hi; v += step) ticks.push_back(v);
    return grid_ticks(std::move(ticks), denom, std::move(display));
  }

  static TypePtr product(std::vector<TypePtr> parts, std::string display = "") {
    if (parts.size() < 2) throw TypeError("product needs at least two components");
    auto t = std::make_shared<FiniteType>(Private{}, TypeKind::Product);
    t->card_ = 1;
    for (auto& p : parts) t->card_ = sat_mul(t->card_, p->cardinality());
    t->parts_ = std::move(parts);
    t->display_ = std::move(display);
    return t;
  }

  static TypePtr bounded_list(TypePtr elem, std::size_t max_len, std::string display = "") {
    auto t = std::make_shared<FiniteType>(Private{}, TypeKind::List);
    std::uint64_t card = 0, pow = 1;
    for (std::size_t k = 0; k <= max_len; ++k) {
      card = sat_add(card, pow);
      pow = sat_mul(pow, elem->cardinality());
    }
    t->card_ = card;
    t->elem_ = std::move(elem);
    t->max_len_ = max_len;
    t->display_ = std::move(display);
    return t;
  }

  TypeKind kind() const { return kind_; }
  std::uint64_t cardinality() const { return card_; }
  bool cardinality_saturated() const { return card_ == kCardMax; }
  bool is_unit() const { return kind_ == TypeKind::Unit; }

  const std::vector<std::string>& label_names() const { return labels_; }
  std::int64_t int_lo() const { return lo_; }
  std::int64_t int_hi() const { return hi_; }
  const std::vector<std::int64_t>& grid_points() const { return ticks_; }
  std::int64_t grid_denom() const { return denom_; }
  const std::vector<TypePtr>& parts() const { return parts_; }
  const TypePtr& list_elem() const { return elem_; }
  std::size_t list_max_len() const { return max_len_; }
  const std::string& display_name() const { return display_; }

  bool numeric() const { return kind_ == TypeKind::IntRange || kind_ == TypeKind::Grid; }

  struct Private {};
  FiniteType(Private, TypeKind k) : kind_(k) {}

 private:
  TypeKind kind_;
  std::string display_;
  std::vector<std::string> labels_;
  std::int64_t lo_ = 0, hi_ = 0;
  std::vector<std::int64_t> ticks_;
  std::int64_t denom_ = 1;
  std::vector<TypePtr> parts_;
  TypePtr elem_;
  std::size_t max_len_ = 0;
  std::uint64_t card_ = 1;
};

// Structural equality; display names are documentation only.
inline bool type_equal(const FiniteType& a, const FiniteType& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Unit:
      return true;
    case TypeKind::Labels:
      return a.label_names() == b.label_names();
    case TypeKind::IntRange:
      return a.int_lo() == b.int_lo() && a.int_hi() == b.int_hi();
    case TypeKind::Grid:
      return a.grid_denom() == b.grid_denom() && a.grid_points() == b.grid_points();
    case TypeKind::Product: {
      if (a.parts().size() != b.parts().size()) return false;
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        if (!type_equal(*a.parts()[i], *b.parts()[i])) return false;
      return true;
    }
    case TypeKind::List:
      return a.list_max_len() == b.list_max_len() && type_equal(*a.list_elem(), *b.list_elem());
  }
  return false;
}

inline bool type_equal(const TypePtr& a, const TypePtr& b) { return type_equal(*a, *b); }

std::string type_name(const FiniteType& t);

inline std::string type_name_structural(const FiniteType& t) {
  std::ostringstream os;
  switch (t.kind()) {
    case TypeKind::Unit:
      os << "unit";
      break;
    case TypeKind::Labels: {
      os << "{";
      bool first = true;
      for (auto& l : t.label_names()) {
        if (!first) os << ",";
        os << l;
        first = false;
      }
      os << "}";
      break;
    }
    case TypeKind::IntRange:
      os << "int(" << t.int_lo() << ".." << t.int_hi() << ")";
      break;
    case TypeKind::Grid: {
      os << "grid{";
      for (std::size_t i = 0; i < t.grid_points().size(); ++i) {
        if (i) os << ",";
        if (t.grid_points()[i] % t.grid_denom() == 0)
          os << t.grid_points()[i] / t.grid_denom();
        else
          os << static_cast<double>(t.grid_points()[i]) / static_cast<double>(t.grid_denom());
      }
      os << "}";
      break;
    }
    case TypeKind::Product: {
      os << "(";
      for (std::size_t i = 0; i < t.parts().size(); ++i) {
        if (i) os << "*";
        os << type_name(*t.parts()[i]);
      }
      os << ")";
      break;
    }
    case TypeKind::List:
      os << "list(" << type_name(*t.list_elem()) << "," << t.list_max_len() << ")";
      break;
  }
  return os.str();
}

inline std::string type_name(const FiniteType& t) {
  if (!t.display_name().empty()) return t.display_name();
  return type_name_structural(t);
}

// An inhabitant of a FiniteType, identified by its canonical ordinal.
struct Value {
  TypePtr type;
  std::uint64_t ord = 0;

  bool same_type(const Value& other) const { return type_equal(type, other.type); }
};

inline bool operator==(const Value& a, const Value& b) {
  return a.ord == b.ord && type_equal(a.type, b.type);
}
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }
inline bool operator<(const Value& a, const Value& b) { return a.ord < b.ord; }

inline Value unit_value() { return Value{FiniteType::unit(), 0}; }

inline Value value_at(const TypePtr& t, std::uint64_t ord) {
  if (t->cardinality_saturated()) throw TypeError("type too large to index: " + type_name(*t));
  if (ord >= t->cardinality())
    throw TypeError("ordinal " + std::to_string(ord) + " out of range for " + type_name(*t));
  return Value{t, ord};
}

inline std::uint64_t cardinality(const TypePtr& t) { return t->cardinality(); }

// [OP] enumerate_values: all inhabitants in canonical order.
inline std::vector<Value> enumerate_values(const TypePtr& t) {
  if (t->cardinality_saturated())
    throw TypeError("type too large to enumerate: " + type_name(*t));
  std::vector<Value> out;
  out.reserve(t->cardinality());
  for (std::uint64_t i = 0; i < t->cardinality(); ++i) out.push_back(Value{t, i});
  return out;
}

// --- structured access -------------------------------------------------

inline std::int64_t int_value(const Value& v) {
  if (v.type->kind() != TypeKind::IntRange) throw TypeError("not an integer value");
  return v.type->int_lo() + static_cast<std::int64_t>(v.ord);
}

inline double real_value(const Value& v) {
  switch (v.type->kind()) {
    case TypeKind::IntRange:
      return static_cast<double>(int_value(v));
    case TypeKind::Grid:
      return static_cast<double>(v.type->grid_points()[v.ord]) /
             static_cast<double>(v.type->grid_denom());
    default:
      throw TypeError("value of type " + type_name(*v.type) + " is not numeric");
  }
}

inline const std::string& label_name(const Value& v) {
  if (v.type->kind() != TypeKind::Labels) throw TypeError("not a label value");
  return v.type->label_names()[v.ord];
}

inline std::vector<Value> tuple_components(const Value& v) {
  if (v.type->kind() != TypeKind::Product) throw TypeError("not a tuple value");
  const auto& parts = v.type->parts();
  std::vector<Value> out(parts.size(), unit_value());
  std::uint64_t rem = v.ord;
  for (std::size_t i = parts.size(); i-- > 0;) {
    std::uint64_t c = parts[i]->cardinality();
    out[i] = Value{parts[i], rem % c};
    rem /= c;
  }
  return out;
}

inline std::vector<Value> list_items(const Value& v) {
  if (v.type->kind() != TypeKind::List) throw TypeError("not a list value");
  const auto& elem = v.type->list_elem();
  std::uint64_t n = elem->cardinality();
  std::uint64_t rem = v.ord, block = 1;
  std::size_t len = 0;
  while (rem >= block) {
    rem -= block;
    block = sat_mul(block, n);
    ++len;
  }
  std::vector<Value> out(len, unit_value());
  for (std::size_t i = len; i-- > 0;) {
    out[i] = Value{elem, rem % n};
    rem /= n;
  }
  return out;
}

// --- construction -------------------------------------------------------

inline Value label_value(const TypePtr& t, const std::string& name) {
  if (t->kind() != TypeKind::Labels)
    throw TypeError("type " + type_name(*t) + " has no labels");
  const auto& names = t->label_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return Value{t, i};
  throw TypeError("label '" + name + "' not in " + type_name(*t));
}

inline Value int_value_of(const TypePtr& t, std::int64_t n) {
  if (t->kind() != TypeKind::IntRange) throw TypeError(type_name(*t) + " is not an int range");
  if (n < t->int_lo() || n > t->int_hi())
    throw TypeError("integer " + std::to_string(n) + " outside " + type_name(*t));
  return Value{t, static_cast<std::uint64_t>(n - t->int_lo())};
}

inline std::optional<Value> try_numeric_value(const TypePtr& t, double x) {
  if (t->kind() == TypeKind::IntRange) {
    double r = std::nearbyint(x);
    if (std::abs(x - r) > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
    auto n = static_cast<std::int64_t>(r);
    if (n < t->int_lo() || n > t->int_hi()) return std::nullopt;
    return Value{t, static_cast<std::uint64_t>(n - t->int_lo())};
  }
  if (t->kind() == TypeKind::Grid) {
    double scaled = x * static_cast<double>(t->grid_denom());
    double r = std::nearbyint(scaled);
    if (std::abs(scaled - r) > 1e-9 * std::max(1.0, std::abs(scaled))) return std::nullopt;
    auto tick = static_cast<std::int64_t>(r);
    const auto& pts = t->grid_points();
    auto it = std::lower_bound(pts.begin(), pts.end(), tick);
    if (it == pts.end() || *it != tick) return std::nullopt;
    return Value{t, static_cast<std::uint64_t>(it - pts.begin())};
  }
  return std::nullopt;
}

inline Value numeric_value(const TypePtr& t, double x) {
  auto v = try_numeric_value(t, x);
  if (!v)
    throw TypeError("value " + std::to_string(x) + " not an inhabitant of " + type_name(*t));
  return *v;
}

inline Value tuple_value(const TypePtr& t, const std::vector<Value>& comps) {
  if (t->kind() != TypeKind::Product) throw TypeError(type_name(*t) + " is not a product");
  const auto& parts = t->parts();
  if (parts.size() != comps.size()) throw TypeError("tuple arity mismatch");
  std::uint64_t ord = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!type_equal(parts[i], comps[i].type))
      throw TypeError("tuple component " + std::to_string(i) + " has type " +
                      type_name(*comps[i].type) + ", expected " + type_name(*parts[i]));
    ord = ord * parts[i]->cardinality() + comps[i].ord;
  }
  return Value{t, ord};
}

inline Value list_value(const TypePtr& t, const std::vector<Value>& items) {
  if (t->kind() != TypeKind::List) throw TypeError(type_name(*t) + " is not a list");
  if (items.size() > t->list_max_len())
    throw TypeError("list longer than max length " + std::to_string(t->list_max_len()));
  const auto& elem = t->list_elem();
  std::uint64_t n = elem->cardinality();
  std::uint64_t ord = 0, block = 1;
  for (std::size_t k = 0; k < items.size(); ++k) {
    ord += block;
    block = sat_mul(block, n);
  }
  std::uint64_t digits = 0;
  for (const auto& it : items) {
    if (!type_equal(elem, it.type)) throw TypeError("list element type mismatch");
    digits = digits * n + it.ord;
  }
  return Value{t, ord + digits};
}

// Appends an element; when the list is already at max length the oldest
// entry is dropped so the function stays total on its finite domain.
inline Value list_cons(const Value& lst, const Value& elem) {
  auto items = list_items(lst);
  items.push_back(elem);
  if (items.size() > lst.type->list_max_len()) items.erase(items.begin());
  return list_value(lst.type, items);
}

inline std::string render_value(const Value& v);

inline std::string render_number(std::int64_t tick, std::int64_t denom) {
  if (tick % denom == 0) return std::to_string(tick / denom);
  std::ostringstream os;
  os << static_cast<double>(tick) / static_cast<double>(denom);
  return os.str();
}

inline std::string render_value(const Value& v) {
  switch (v.type->kind()) {
    case TypeKind::Unit:
      return "*";
    case TypeKind::Labels:
      return label_name(v);
    case TypeKind::IntRange:
      return std::to_string(int_value(v));
    case TypeKind::Grid:
      return render_number(v.type->grid_points()[v.ord], v.type->grid_denom());
    case TypeKind::Product: {
      std::string s = "(";
      auto comps = tuple_components(v);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ",";
        s += render_value(comps[i]);
      }
      return s + ")";
    }
    case TypeKind::List: {
      std::string s = "[";
      auto items = list_items(v);
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ",";
        s += render_value(items[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace og
