#pragma once

#include <memory>
#include <string>
#include <vector>

#include "og/types.hpp"

namespace og::dsl {

struct Pos {
  int line = 0;
  int col = 0;
};

class ParseError : public Error {
 public:
  ParseError(Pos p, const std::string& msg)
      : Error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg), pos(p) {}
  Pos pos;
};

// Exact decimal literal: mant * 10^exp. Grids stay exact by construction.
struct Num {
  long long mant = 0;
  int exp = 0;  // <= 0 for decimals

  double to_double() const {
    double v = static_cast<double>(mant);
    for (int i = 0; i < -exp; ++i) v /= 10.0;
    for (int i = 0; i < exp; ++i) v *= 10.0;
    return v;
  }
};

inline bool operator==(const Num& a, const Num& b) {
  // compare normalised decimals
  Num x = a, y = b;
  while (x.exp < y.exp) {
    y.mant *= 10;
    --y.exp;
  }
  while (y.exp < x.exp) {
    x.mant *= 10;
    --x.exp;
  }
  return x.mant == y.mant;
}

struct TypeExpr;
using TypeExprPtr = std::shared_ptr<TypeExpr>;

struct TypeExpr {
  enum class Kind { Unit, Labels, IntRange, GridRange, GridPoints, Product, List, Ref };
  Kind kind = Kind::Unit;
  Pos pos;
  std::vector<std::string> labels;
  long long lo = 0, hi = 0;  // IntRange / List max_len in hi
  Num glo, ghi, gstep;
  std::vector<Num> points;
  std::vector<TypeExprPtr> parts;
  TypeExprPtr elem;
  std::string name;  // Ref
};

struct ValueLit;
using ValueLitPtr = std::shared_ptr<ValueLit>;

struct ValueLit {
  enum class Kind { Name, Number, Tuple, List };
  Kind kind = Kind::Name;
  Pos pos;
  std::string name;
  Num num;
  std::vector<ValueLitPtr> items;
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  enum class Kind { Number, Param, Add, Sub, Mul, Div, Neg, Max, Min, If, Tuple, Cons };
  enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };
  Kind kind = Kind::Number;
  Pos pos;
  Num num;
  std::string param;  // Param: parameter or label name, resolved at typecheck
  std::vector<ExprPtr> args;
  Cmp cmp = Cmp::Eq;  // If: condition args[0] cmp args[1], then args[2] else args[3]
};

struct TableRow {
  ValueLitPtr key;
  ValueLitPtr value;
};

struct Diag;
using DiagPtr = std::shared_ptr<Diag>;

struct Diag {
  enum class Kind { Seq, Par, Ref, Atom };
  enum class AtomKind { Copy, Delete, Id, Counit, Unit, Braid, Const };
  Kind kind = Kind::Ref;
  Pos pos;
  DiagPtr left, right;        // Seq / Par
  std::string name;           // Ref
  bool contra = false;        // Ref with ^* or contravariant atom
  AtomKind atom = AtomKind::Id;
  std::vector<TypeExprPtr> type_args;       // atom types / braid strand types
  std::vector<bool> strand_backward;        // braid direction markers
  std::vector<std::size_t> perm;            // braid target positions (0-based)
  ValueLitPtr value;                        // const
};

struct Decl {
  enum class Kind { Type, Fun, Player, Let };
  Kind kind = Kind::Type;
  Pos pos;
  std::string name;
  // Type
  TypeExprPtr type;
  // Fun
  std::vector<std::pair<std::string, TypeExprPtr>> params;
  TypeExprPtr codomain;
  ExprPtr body;                 // arithmetic body (null if table)
  std::vector<TableRow> table;  // table body
  bool is_table = false;
  // Player
  TypeExprPtr obs, choice, outcome;  // outcome null for fixpoint/match
  enum class Goal { Argmax, Prefer, Fixpoint, Match };
  Goal goal = Goal::Argmax;
  // Let
  DiagPtr diag;
};

struct Program {
  std::vector<Decl> decls;
  DiagPtr diagram;
};

// --- structural equality (used by the parse/print round-trip property) ---

inline bool equal(const TypeExprPtr& a, const TypeExprPtr& b);
inline bool equal(const ValueLitPtr& a, const ValueLitPtr& b);
inline bool equal(const ExprPtr& a, const ExprPtr& b);
inline bool equal(const DiagPtr& a, const DiagPtr& b);

inline bool equal(const TypeExprPtr& a, const TypeExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeExpr::Kind::Unit:
      return true;
    case TypeExpr::Kind::Labels:
      return a->labels == b->labels;
    case TypeExpr::Kind::IntRange:
      return a->lo == b->lo && a->hi == b->hi;
    case TypeExpr::Kind::GridRange:
      return a->glo == b->glo && a->ghi == b->ghi && a->gstep == b->gstep;
    case TypeExpr::Kind::GridPoints: {
      if (a->points.size() != b->points.size()) return false;
      for (std::size_t i = 0; i < a->points.size(); ++i)
        if (!(a->points[i] == b->points[i])) return false;
      return true;
    }
    case TypeExpr::Kind::Product: {
      if (a->parts.size() != b->parts.size()) return false;
      for (std::size_t i = 0; i < a->parts.size(); ++i)
        if (!equal(a->parts[i], b->parts[i])) return false;
      return true;
    }
    case TypeExpr::Kind::List:
      return a->hi == b->hi && equal(a->elem, b->elem);
    case TypeExpr::Kind::Ref:
      return a->name == b->name;
  }
  return false;
}

inline bool equal(const ValueLitPtr& a, const ValueLitPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueLit::Kind::Name:
      return a->name == b->name;
    case ValueLit::Kind::Number:
      return a->num == b->num;
    case ValueLit::Kind::Tuple:
    case ValueLit::Kind::List: {
      if (a->items.size() != b->items.size()) return false;
      for (std::size_t i = 0; i < a->items.size(); ++i)
        if (!equal(a->items[i], b->items[i])) return false;
      return true;
    }
  }
  return false;
}

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  if (a->kind == Expr::Kind::Number) return a->num == b->num;
  if (a->kind == Expr::Kind::Param) return a->param == b->param;
  if (a->kind == Expr::Kind::If && a->cmp != b->cmp) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!equal(a->args[i], b->args[i])) return false;
  return true;
}

inline bool equal(const DiagPtr& a, const DiagPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Diag::Kind::Seq:
    case Diag::Kind::Par:
      return equal(a->left, b->left) && equal(a->right, b->right);
    case Diag::Kind::Ref:
      return a->name == b->name && a->contra == b->contra;
    case Diag::Kind::Atom: {
      if (a->atom != b->atom || a->contra != b->contra) return false;
      if (a->type_args.size() != b->type_args.size()) return false;
      for (std::size_t i = 0; i < a->type_args.size(); ++i)
        if (!equal(a->type_args[i], b->type_args[i])) return false;
      return a->strand_backward == b->strand_backward && a->perm == b->perm &&
             equal(a->value, b->value);
    }
  }
  return false;
}

inline bool equal(const Program& a, const Program& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    const Decl &x = a.decls[i], &y = b.decls[i];
    if (x.kind != y.kind || x.name != y.name) return false;
    switch (x.kind) {
      case Decl::Kind::Type:
        if (!equal(x.type, y.type)) return false;
        break;
      case Decl::Kind::Fun: {
        if (x.params.size() != y.params.size() || x.is_table != y.is_table) return false;
        for (std::size_t j = 0; j < x.params.size(); ++j)
          if (x.params[j].first != y.params[j].first ||
              !equal(x.params[j].second, y.params[j].second))
            return false;
        if (!equal(x.codomain, y.codomain)) return false;
        if (x.is_table) {
          if (x.table.size() != y.table.size()) return false;
          for (std::size_t j = 0; j < x.table.size(); ++j)
            if (!equal(x.table[j].key, y.table[j].key) ||
                !equal(x.table[j].value, y.table[j].value))
              return false;
        } else if (!equal(x.body, y.body)) {
          return false;
        }
        break;
      }
      case Decl::Kind::Player:
        if (x.goal != y.goal || !equal(x.obs, y.obs) || !equal(x.choice, y.choice) ||
            !equal(x.outcome, y.outcome))
          return false;
        break;
      case Decl::Kind::Let:
        if (!equal(x.diag, y.diag)) return false;
        break;
    }
  }
  return equal(a.diagram, b.diagram);
}

}  // namespace og::dsl
