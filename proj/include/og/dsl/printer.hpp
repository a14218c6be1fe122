#pragma once

#include <sstream>
#include <string>

#include "og/dsl/ast.hpp"

namespace og::dsl {

inline std::string print_num(const Num& n) {
  if (n.exp >= 0) {
    long long v = n.mant;
    for (int i = 0; i < n.exp; ++i) v *= 10;
    return std::to_string(v);
  }
  std::string digits = std::to_string(n.mant < 0 ? -n.mant : n.mant);
  int frac = -n.exp;
  while (static_cast<int>(digits.size()) <= frac) digits.insert(digits.begin(), '0');
  digits.insert(digits.end() - frac, '.');
  return (n.mant < 0 ? "-" : "") + digits;
}

inline std::string print_type(const TypeExprPtr& t) {
  std::ostringstream os;
  switch (t->kind) {
    case TypeExpr::Kind::Unit:
      os << "unit";
      break;
    case TypeExpr::Kind::Labels: {
      os << "{";
      for (std::size_t i = 0; i < t->labels.size(); ++i)
        os << (i ? ", " : "") << t->labels[i];
      os << "}";
      break;
    }
    case TypeExpr::Kind::IntRange:
      os << "int(" << t->lo << ".." << t->hi << ")";
      break;
    case TypeExpr::Kind::GridRange:
      os << "grid(" << print_num(t->glo) << ", " << print_num(t->ghi) << ", "
         << print_num(t->gstep) << ")";
      break;
    case TypeExpr::Kind::GridPoints: {
      os << "grid{";
      for (std::size_t i = 0; i < t->points.size(); ++i)
        os << (i ? ", " : "") << print_num(t->points[i]);
      os << "}";
      break;
    }
    case TypeExpr::Kind::Product: {
      os << "(";
      for (std::size_t i = 0; i < t->parts.size(); ++i)
        os << (i ? " * " : "") << print_type(t->parts[i]);
      os << ")";
      break;
    }
    case TypeExpr::Kind::List:
      os << "list(" << print_type(t->elem) << ", " << t->hi << ")";
      break;
    case TypeExpr::Kind::Ref:
      os << t->name;
      break;
  }
  return os.str();
}

inline std::string print_lit(const ValueLitPtr& v) {
  std::ostringstream os;
  switch (v->kind) {
    case ValueLit::Kind::Name:
      os << v->name;
      break;
    case ValueLit::Kind::Number:
      os << print_num(v->num);
      break;
    case ValueLit::Kind::Tuple: {
      os << "(";
      for (std::size_t i = 0; i < v->items.size(); ++i)
        os << (i ? ", " : "") << print_lit(v->items[i]);
      os << ")";
      break;
    }
    case ValueLit::Kind::List: {
      os << "[";
      for (std::size_t i = 0; i < v->items.size(); ++i)
        os << (i ? ", " : "") << print_lit(v->items[i]);
      os << "]";
      break;
    }
  }
  return os.str();
}

inline std::string print_expr(const ExprPtr& e) {
  std::ostringstream os;
  switch (e->kind) {
    case Expr::Kind::Number:
      os << print_num(e->num);
      break;
    case Expr::Kind::Param:
      os << e->param;
      break;
    case Expr::Kind::Add:
      os << "(" << print_expr(e->args[0]) << " + " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Sub:
      os << "(" << print_expr(e->args[0]) << " - " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Mul:
      os << "(" << print_expr(e->args[0]) << " * " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Div:
      os << "(" << print_expr(e->args[0]) << " / " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Neg:
      os << "(-" << print_expr(e->args[0]) << ")";
      break;
    case Expr::Kind::Max:
      os << "max(" << print_expr(e->args[0]) << ", " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Min:
      os << "min(" << print_expr(e->args[0]) << ", " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::Cons:
      os << "cons(" << print_expr(e->args[0]) << ", " << print_expr(e->args[1]) << ")";
      break;
    case Expr::Kind::If: {
      const char* op = "==";
      switch (e->cmp) {
        case Expr::Cmp::Eq: op = "=="; break;
        case Expr::Cmp::Ne: op = "!="; break;
        case Expr::Cmp::Lt: op = "<"; break;
        case Expr::Cmp::Le: op = "<="; break;
        case Expr::Cmp::Gt: op = ">"; break;
        case Expr::Cmp::Ge: op = ">="; break;
      }
      os << "if " << print_expr(e->args[0]) << " " << op << " " << print_expr(e->args[1])
         << " then " << print_expr(e->args[2]) << " else " << print_expr(e->args[3]);
      break;
    }
    case Expr::Kind::Tuple: {
      os << "(";
      for (std::size_t i = 0; i < e->args.size(); ++i)
        os << (i ? ", " : "") << print_expr(e->args[i]);
      os << ")";
      break;
    }
  }
  return os.str();
}

inline std::string print_diag(const DiagPtr& d) {
  std::ostringstream os;
  switch (d->kind) {
    case Diag::Kind::Seq:
      os << "(" << print_diag(d->left) << " >> " << print_diag(d->right) << ")";
      break;
    case Diag::Kind::Par:
      os << "(" << print_diag(d->left) << " || " << print_diag(d->right) << ")";
      break;
    case Diag::Kind::Ref:
      os << d->name << (d->contra ? "^*" : "");
      break;
    case Diag::Kind::Atom: {
      switch (d->atom) {
        case Diag::AtomKind::Copy: os << "copy"; break;
        case Diag::AtomKind::Delete: os << "delete"; break;
        case Diag::AtomKind::Id: os << "id"; break;
        case Diag::AtomKind::Counit: os << "counit"; break;
        case Diag::AtomKind::Unit: os << "unit"; break;
        case Diag::AtomKind::Braid: os << "braid"; break;
        case Diag::AtomKind::Const: os << "const"; break;
      }
      if (d->contra) os << "^*";
      os << "[";
      if (d->atom == Diag::AtomKind::Braid) {
        for (std::size_t i = 0; i < d->perm.size(); ++i)
          os << (i ? " " : "") << (d->perm[i] + 1);
        os << "; ";
        for (std::size_t i = 0; i < d->type_args.size(); ++i) {
          os << (i ? ", " : "") << (d->strand_backward[i] ? "^" : "")
             << print_type(d->type_args[i]);
        }
      } else {
        os << print_type(d->type_args[0]);
      }
      os << "]";
      if (d->atom == Diag::AtomKind::Const) os << "(" << print_lit(d->value) << ")";
      break;
    }
  }
  return os.str();
}

// deterministic canonical text; parse(print(p)) is structurally equal to p
inline std::string print_program(const Program& p) {
  std::ostringstream os;
  for (const auto& d : p.decls) {
    switch (d.kind) {
      case Decl::Kind::Type:
        os << "type " << d.name << " = " << print_type(d.type) << "\n";
        break;
      case Decl::Kind::Fun: {
        os << "fun " << d.name << "(";
        for (std::size_t i = 0; i < d.params.size(); ++i)
          os << (i ? ", " : "") << d.params[i].first << ": " << print_type(d.params[i].second);
        os << ") -> " << print_type(d.codomain) << " = ";
        if (d.is_table) {
          os << "table {";
          for (std::size_t i = 0; i < d.table.size(); ++i)
            os << (i ? ", " : " ") << print_lit(d.table[i].key) << ": "
               << print_lit(d.table[i].value);
          os << " }";
        } else {
          os << print_expr(d.body);
        }
        os << "\n";
        break;
      }
      case Decl::Kind::Player: {
        os << "player " << d.name << " : " << print_type(d.obs) << " -> "
           << print_type(d.choice) << " ";
        switch (d.goal) {
          case Decl::Goal::Argmax:
            os << "argmax[" << print_type(d.outcome) << "]";
            break;
          case Decl::Goal::Prefer:
            os << "prefer[" << print_type(d.outcome) << "]";
            break;
          case Decl::Goal::Fixpoint:
            os << "fixpoint";
            break;
          case Decl::Goal::Match:
            os << "match";
            break;
        }
        os << "\n";
        break;
      }
      case Decl::Kind::Let:
        os << "let " << d.name << " = " << print_diag(d.diag) << "\n";
        break;
    }
  }
  os << "diagram = " << print_diag(p.diagram) << "\n";
  return os.str();
}

}  // namespace og::dsl
