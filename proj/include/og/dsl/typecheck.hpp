#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "og/combinators.hpp"
#include "og/dsl/ast.hpp"

namespace og::dsl {

struct FunInfo {
  std::vector<std::string> param_names;
  std::vector<TypePtr> param_types;
  TypePtr domain;    // product of params (or the single / unit type)
  TypePtr codomain;  // full codomain, possibly a product
  std::vector<TypePtr> out_strands;
  std::function<Value(const Value&)> eval;
};

struct PlayerInfo {
  TypePtr obs, choice, outcome;
  SelectionFunction sel;
};

struct TDiag;
using TDiagPtr = std::shared_ptr<TDiag>;

// Typed diagram node: every node carries its Interface and NormalInterface.
struct TDiag {
  enum class Kind { Seq, Par, Atom, Box };
  enum class AtomOp { Player, Fun, Copy, Delete, Id, Counit, Braid, Const };

  Kind kind = Kind::Atom;
  Pos pos;
  TDiagPtr left, right;  // Seq / Par
  // Atom
  AtomOp op = AtomOp::Id;
  bool contra = false;
  std::string name;  // player or fun or box name
  std::vector<TypePtr> types;
  std::vector<bool> strand_backward;
  std::vector<std::size_t> perm;
  Value const_value;
  // Box
  TDiagPtr body;

  Interface iface;
  NormalInterface normal;
};

struct TypedProgram {
  std::map<std::string, TypePtr> types;
  std::map<std::string, FunInfo> funs;
  std::map<std::string, PlayerInfo> players;
  std::map<std::string, TDiagPtr> lets;
  std::vector<std::string> let_order;
  TDiagPtr diagram;
};

namespace detail {

constexpr std::uint64_t kFunDomainLimit = 1u << 20;

struct Checker {
  const Program& prog;
  TypedProgram out;
  std::set<std::string> names;

  explicit Checker(const Program& p) : prog(p) {}

  [[noreturn]] void fail(Pos pos, const std::string& msg) { throw ParseError(pos, msg); }

  void declare(Pos pos, const std::string& name) {
    if (!names.insert(name).second) fail(pos, "duplicate identifier '" + name + "'");
  }

  // --- types ---

  TypePtr resolve(const TypeExprPtr& te) {
    switch (te->kind) {
      case TypeExpr::Kind::Unit:
        return FiniteType::unit();
      case TypeExpr::Kind::Labels:
        return FiniteType::labels(te->labels);
      case TypeExpr::Kind::IntRange: {
        if (te->lo > te->hi) fail(te->pos, "int range with lo > hi");
        return FiniteType::int_range(te->lo, te->hi);
      }
      case TypeExpr::Kind::GridRange: {
        int prec = std::max({-te->glo.exp, -te->ghi.exp, -te->gstep.exp, 0});
        std::int64_t denom = 1;
        for (int i = 0; i < prec; ++i) denom *= 10;
        auto tick = [&](const Num& n) {
          std::int64_t v = n.mant;
          for (int i = 0; i < prec + n.exp; ++i) v *= 10;
          return v;
        };
        std::int64_t lo = tick(te->glo), hi = tick(te->ghi), step = tick(te->gstep);
        if (step <= 0) fail(te->pos, "grid step must be positive");
        if (lo > hi) fail(te->pos, "grid with lo > hi");
        if ((hi - lo) % step != 0)
          fail(te->pos, "grid bounds are not an exact multiple of the step");
        return FiniteType::grid_range_ticks(lo, hi, step, denom);
      }
      case TypeExpr::Kind::GridPoints: {
        int prec = 0;
        for (const auto& n : te->points) prec = std::max(prec, -n.exp);
        std::int64_t denom = 1;
        for (int i = 0; i < prec; ++i) denom *= 10;
        std::vector<std::int64_t> ticks;
        for (const auto& n : te->points) {
          std::int64_t v = n.mant;
          for (int i = 0; i < prec + n.exp; ++i) v *= 10;
          ticks.push_back(v);
        }
        return FiniteType::grid_ticks(std::move(ticks), denom);
      }
      case TypeExpr::Kind::Product: {
        std::vector<TypePtr> parts;
        for (const auto& p : te->parts) parts.push_back(resolve(p));
        return FiniteType::product(std::move(parts));
      }
      case TypeExpr::Kind::List:
        return FiniteType::bounded_list(resolve(te->elem), static_cast<std::size_t>(te->hi));
      case TypeExpr::Kind::Ref: {
        auto it = out.types.find(te->name);
        if (it == out.types.end()) fail(te->pos, "undeclared type '" + te->name + "'");
        return it->second;
      }
    }
    fail(te->pos, "unreachable type kind");
  }

  // --- value literals ---

  Value lit_value(const ValueLitPtr& v, const TypePtr& expect) {
    switch (v->kind) {
      case ValueLit::Kind::Name: {
        if (expect->kind() != TypeKind::Labels)
          fail(v->pos, "'" + v->name + "' used where a " + type_name(*expect) + " is needed");
        try {
          return label_value(expect, v->name);
        } catch (const TypeError& e) {
          fail(v->pos, e.what());
        }
      }
      case ValueLit::Kind::Number: {
        auto got = try_numeric_value(expect, v->num.to_double());
        if (!got)
          fail(v->pos, "literal " + std::to_string(v->num.to_double()) +
                           " is not an inhabitant of " + type_name(*expect) +
                           (expect->kind() == TypeKind::Grid
                                ? " (not an exact multiple of the declared step)"
                                : ""));
        return *got;
      }
      case ValueLit::Kind::Tuple: {
        if (expect->kind() != TypeKind::Product ||
            expect->parts().size() != v->items.size())
          fail(v->pos, "tuple literal does not fit " + type_name(*expect));
        std::vector<Value> comps;
        for (std::size_t i = 0; i < v->items.size(); ++i)
          comps.push_back(lit_value(v->items[i], expect->parts()[i]));
        return tuple_value(expect, comps);
      }
      case ValueLit::Kind::List: {
        if (expect->kind() != TypeKind::List)
          fail(v->pos, "list literal does not fit " + type_name(*expect));
        if (v->items.size() > expect->list_max_len())
          fail(v->pos, "list literal longer than the declared bound");
        std::vector<Value> items;
        for (const auto& it : v->items) items.push_back(lit_value(it, expect->list_elem()));
        return list_value(expect, items);
      }
    }
    fail(v->pos, "unreachable literal kind");
  }

  // --- fun bodies ---

  struct RtVal {
    bool numeric = false;
    double num = 0;
    std::optional<Value> val;
    std::vector<RtVal> tuple;
    std::string pending_label;  // bare name awaiting a peer label type
  };

  struct FunCtx {
    const std::vector<std::string>& names;
    const std::vector<TypePtr>& types;
    const std::vector<Value>& args;
  };

  RtVal eval_expr(const ExprPtr& e, const FunCtx& ctx) {
    switch (e->kind) {
      case Expr::Kind::Number: {
        RtVal r;
        r.numeric = true;
        r.num = e->num.to_double();
        return r;
      }
      case Expr::Kind::Param: {
        for (std::size_t i = 0; i < ctx.names.size(); ++i)
          if (ctx.names[i] == e->param) {
            RtVal r;
            r.val = ctx.args[i];
            if (ctx.types[i]->numeric()) {
              r.numeric = true;
              r.num = real_value(ctx.args[i]);
            }
            return r;
          }
        RtVal r;
        r.pending_label = e->param;
        return r;
      }
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
      case Expr::Kind::Mul:
      case Expr::Kind::Div: {
        double a = num_of(eval_expr(e->args[0], ctx), e);
        double b = num_of(eval_expr(e->args[1], ctx), e);
        RtVal r;
        r.numeric = true;
        switch (e->kind) {
          case Expr::Kind::Add: r.num = a + b; break;
          case Expr::Kind::Sub: r.num = a - b; break;
          case Expr::Kind::Mul: r.num = a * b; break;
          default:
            if (b == 0) fail(e->pos, "division by zero in fun body");
            r.num = a / b;
        }
        return r;
      }
      case Expr::Kind::Neg: {
        RtVal r;
        r.numeric = true;
        r.num = -num_of(eval_expr(e->args[0], ctx), e);
        return r;
      }
      case Expr::Kind::Max:
      case Expr::Kind::Min: {
        double a = num_of(eval_expr(e->args[0], ctx), e);
        double b = num_of(eval_expr(e->args[1], ctx), e);
        RtVal r;
        r.numeric = true;
        r.num = e->kind == Expr::Kind::Max ? std::max(a, b) : std::min(a, b);
        return r;
      }
      case Expr::Kind::If: {
        bool cond = eval_cmp(e, ctx);
        return eval_expr(e->args[cond ? 2 : 3], ctx);
      }
      case Expr::Kind::Tuple: {
        RtVal r;
        for (const auto& a : e->args) r.tuple.push_back(eval_expr(a, ctx));
        return r;
      }
      case Expr::Kind::Cons: {
        RtVal lst = eval_expr(e->args[0], ctx);
        if (!lst.val || lst.val->type->kind() != TypeKind::List)
          fail(e->pos, "cons needs a list-typed first argument");
        RtVal el = eval_expr(e->args[1], ctx);
        Value elem = encode(el, lst.val->type->list_elem(), e->pos);
        RtVal r;
        r.val = list_cons(*lst.val, elem);
        return r;
      }
    }
    fail(e->pos, "unreachable expression kind");
  }

  double num_of(const RtVal& r, const ExprPtr& e) {
    if (!r.numeric) {
      if (!r.pending_label.empty())
        fail(e->pos, "'" + r.pending_label + "' is not a parameter of this fun");
      fail(e->pos, "arithmetic on a non-numeric value");
    }
    return r.num;
  }

  bool eval_cmp(const ExprPtr& e, const FunCtx& ctx) {
    RtVal a = eval_expr(e->args[0], ctx);
    RtVal b = eval_expr(e->args[1], ctx);
    // bare names compare against the label type of the peer side
    auto resolve_pending = [&](RtVal& x, const RtVal& peer) {
      if (!x.pending_label.empty()) {
        if (!peer.val || peer.val->type->kind() != TypeKind::Labels)
          fail(e->pos, "'" + x.pending_label + "' is not a parameter of this fun");
        x.val = label_value(peer.val->type, x.pending_label);
      }
    };
    resolve_pending(a, b);
    resolve_pending(b, a);
    bool both_numeric = a.numeric && b.numeric;
    if (!both_numeric) {
      if (!a.val || !b.val || !type_equal(a.val->type, b.val->type))
        fail(e->pos, "comparison between incompatible values");
      if (e->cmp != Expr::Cmp::Eq && e->cmp != Expr::Cmp::Ne)
        fail(e->pos, "ordered comparison needs numeric operands");
      bool eq = a.val->ord == b.val->ord;
      return e->cmp == Expr::Cmp::Eq ? eq : !eq;
    }
    switch (e->cmp) {
      case Expr::Cmp::Eq: return a.num == b.num;
      case Expr::Cmp::Ne: return a.num != b.num;
      case Expr::Cmp::Lt: return a.num < b.num;
      case Expr::Cmp::Le: return a.num <= b.num;
      case Expr::Cmp::Gt: return a.num > b.num;
      case Expr::Cmp::Ge: return a.num >= b.num;
    }
    fail(e->pos, "unreachable comparison");
  }

  Value encode(const RtVal& r, const TypePtr& t, Pos pos) {
    if (!r.tuple.empty()) {
      if (t->kind() != TypeKind::Product || t->parts().size() != r.tuple.size())
        fail(pos, "tuple result does not fit " + type_name(*t));
      std::vector<Value> comps;
      for (std::size_t i = 0; i < r.tuple.size(); ++i)
        comps.push_back(encode(r.tuple[i], t->parts()[i], pos));
      return tuple_value(t, comps);
    }
    if (r.val && type_equal(r.val->type, t)) return *r.val;
    if (r.numeric) {
      auto got = try_numeric_value(t, r.num);
      if (got) return *got;
      fail(pos, "value " + std::to_string(r.num) + " escapes the codomain " + type_name(*t));
    }
    if (!r.pending_label.empty() && t->kind() == TypeKind::Labels)
      return label_value(t, r.pending_label);
    if (r.val)
      fail(pos, "result of type " + type_name(*r.val->type) + " does not fit codomain " +
                    type_name(*t));
    fail(pos, "expression does not produce a value of " + type_name(*t));
  }

  void check_fun(const Decl& d) {
    FunInfo info;
    std::set<std::string> seen;
    for (const auto& [pname, ptype] : d.params) {
      if (!seen.insert(pname).second)
        fail(d.pos, "duplicate parameter '" + pname + "' in fun " + d.name);
      info.param_names.push_back(pname);
      info.param_types.push_back(resolve(ptype));
    }
    info.domain = product_or_unit(info.param_types);
    info.codomain = resolve(d.codomain);
    if (info.codomain->kind() == TypeKind::Product)
      info.out_strands = info.codomain->parts();
    else
      info.out_strands = {info.codomain};

    std::uint64_t dom_card = info.domain->cardinality();
    if (dom_card > kFunDomainLimit)
      fail(d.pos, "fun " + d.name + " has a domain too large to verify (" +
                      std::to_string(dom_card) + " points)");

    auto unpack = [info](const Value& x) {
      if (info.param_types.size() <= 1) return std::vector<Value>{x};
      return tuple_components(x);
    };

    if (d.is_table) {
      std::vector<std::int64_t> table(dom_card, -1);
      for (const auto& row : d.table) {
        Value key = d.params.size() == 1
                        ? lit_value(row.key, info.param_types[0])
                        : lit_value(row.key, info.domain);
        if (table[key.ord] >= 0)
          fail(row.key->pos, "duplicate table key " + render_value(key) + " in fun " + d.name);
        Value val = lit_value(row.value, info.codomain);
        table[key.ord] = static_cast<std::int64_t>(val.ord);
      }
      for (std::uint64_t i = 0; i < dom_card; ++i)
        if (table[i] < 0)
          fail(d.pos, "non-total table in fun " + d.name + ": missing key " +
                          render_value(Value{info.domain, i}));
      auto cod = info.codomain;
      info.eval = [table, cod](const Value& x) {
        return Value{cod, static_cast<std::uint64_t>(table[x.ord])};
      };
    } else {
      // evaluate the arithmetic body over the whole domain now: this is the
      // codomain-closure check
      auto body = d.body;
      auto names = info.param_names;
      auto types = info.param_types;
      auto cod = info.codomain;
      std::vector<std::uint64_t> table(dom_card);
      for (std::uint64_t i = 0; i < dom_card; ++i) {
        Value x{info.domain, i};
        auto args = unpack(x);
        FunCtx ctx{names, types, args};
        table[i] = encode(eval_expr(body, ctx), cod, body->pos).ord;
      }
      info.eval = [table, cod](const Value& x) { return Value{cod, table[x.ord]}; };
    }
    out.funs.emplace(d.name, std::move(info));
  }

  void check_player(const Decl& d) {
    PlayerInfo info;
    info.obs = resolve(d.obs);
    info.choice = resolve(d.choice);
    if (info.choice->cardinality() == 0) fail(d.pos, "player with empty choice type");
    switch (d.goal) {
      case Decl::Goal::Argmax:
        info.outcome = resolve(d.outcome);
        if (!info.outcome->numeric())
          fail(d.pos, "argmax player '" + d.name + "' needs a numeric outcome type");
        info.sel = Argmax{};
        break;
      case Decl::Goal::Prefer:
        info.outcome = resolve(d.outcome);
        info.sel = Prefer{};
        break;
      case Decl::Goal::Fixpoint:
        info.outcome = info.choice;
        info.sel = Fixpoint{};
        break;
      case Decl::Goal::Match:
        if (!type_equal(info.obs, info.choice))
          fail(d.pos, "match player '" + d.name + "' needs observation = choice types");
        info.outcome = FiniteType::unit();
        info.sel = MatchObservation{};
        break;
    }
    out.players.emplace(d.name, std::move(info));
  }

  // --- diagrams ---

  TDiagPtr check_diag(const DiagPtr& d) {
    auto t = std::make_shared<TDiag>();
    t->pos = d->pos;
    switch (d->kind) {
      case Diag::Kind::Seq: {
        t->kind = TDiag::Kind::Seq;
        t->left = check_diag(d->left);
        t->right = check_diag(d->right);
        if (!type_lists_equal(t->left->iface.fwd_out, t->right->iface.fwd_in) ||
            !type_lists_equal(t->left->iface.bwd_in, t->right->iface.bwd_out))
          fail(d->pos,
               "cannot compose: bottom of the first part is " +
                   render_boundary(t->left->iface.fwd_out, t->left->iface.bwd_in) +
                   " but top of the second part is " +
                   render_boundary(t->right->iface.fwd_in, t->right->iface.bwd_out));
        t->iface.fwd_in = t->left->iface.fwd_in;
        t->iface.bwd_out = t->left->iface.bwd_out;
        t->iface.fwd_out = t->right->iface.fwd_out;
        t->iface.bwd_in = t->right->iface.bwd_in;
        break;
      }
      case Diag::Kind::Par: {
        t->kind = TDiag::Kind::Par;
        t->left = check_diag(d->left);
        t->right = check_diag(d->right);
        auto cat = [](const std::vector<TypePtr>& a, const std::vector<TypePtr>& b) {
          auto r = a;
          r.insert(r.end(), b.begin(), b.end());
          return r;
        };
        t->iface.fwd_in = cat(t->left->iface.fwd_in, t->right->iface.fwd_in);
        t->iface.bwd_out = cat(t->left->iface.bwd_out, t->right->iface.bwd_out);
        t->iface.fwd_out = cat(t->left->iface.fwd_out, t->right->iface.fwd_out);
        t->iface.bwd_in = cat(t->left->iface.bwd_in, t->right->iface.bwd_in);
        break;
      }
      case Diag::Kind::Ref: {
        if (auto it = out.players.find(d->name); it != out.players.end()) {
          if (d->contra) fail(d->pos, "players have no contravariant form");
          t->kind = TDiag::Kind::Atom;
          t->op = TDiag::AtomOp::Player;
          t->name = d->name;
          const auto& p = it->second;
          if (!p.obs->is_unit()) t->iface.fwd_in = {p.obs};
          t->iface.fwd_out = {p.choice};
          if (!p.outcome->is_unit()) t->iface.bwd_in = {p.outcome};
          break;
        }
        if (auto it = out.funs.find(d->name); it != out.funs.end()) {
          t->kind = TDiag::Kind::Atom;
          t->op = TDiag::AtomOp::Fun;
          t->name = d->name;
          t->contra = d->contra;
          const auto& f = it->second;
          if (d->contra) {
            t->iface.bwd_in = f.param_types;
            t->iface.bwd_out = f.out_strands;
          } else {
            t->iface.fwd_in = f.param_types;
            t->iface.fwd_out = f.out_strands;
          }
          break;
        }
        if (auto it = out.lets.find(d->name); it != out.lets.end()) {
          if (d->contra) fail(d->pos, "boxes have no contravariant form");
          t->kind = TDiag::Kind::Box;
          t->name = d->name;
          t->body = it->second;
          t->iface = it->second->iface;
          break;
        }
        fail(d->pos, "undeclared identifier '" + d->name + "'");
      }
      case Diag::Kind::Atom: {
        t->kind = TDiag::Kind::Atom;
        t->contra = d->contra;
        switch (d->atom) {
          case Diag::AtomKind::Unit:
            fail(d->pos,
                 "upward bend not permitted: a unit is not a well-formed open game");
          case Diag::AtomKind::Copy: {
            auto ty = resolve(d->type_args[0]);
            t->op = TDiag::AtomOp::Copy;
            t->types = {ty};
            if (d->contra) {
              t->iface.bwd_in = {ty};
              t->iface.bwd_out = {ty, ty};
            } else {
              t->iface.fwd_in = {ty};
              t->iface.fwd_out = {ty, ty};
            }
            break;
          }
          case Diag::AtomKind::Delete: {
            auto ty = resolve(d->type_args[0]);
            t->op = TDiag::AtomOp::Delete;
            t->types = {ty};
            if (d->contra)
              t->iface.bwd_in = {ty};
            else
              t->iface.fwd_in = {ty};
            break;
          }
          case Diag::AtomKind::Id: {
            auto ty = resolve(d->type_args[0]);
            t->op = TDiag::AtomOp::Id;
            t->types = {ty};
            if (d->contra) {
              t->iface.bwd_in = {ty};
              t->iface.bwd_out = {ty};
            } else {
              t->iface.fwd_in = {ty};
              t->iface.fwd_out = {ty};
            }
            break;
          }
          case Diag::AtomKind::Counit: {
            if (d->contra) fail(d->pos, "the counit has no contravariant form");
            auto ty = resolve(d->type_args[0]);
            t->op = TDiag::AtomOp::Counit;
            t->types = {ty};
            t->iface.fwd_in = {ty};
            t->iface.bwd_out = {ty};
            break;
          }
          case Diag::AtomKind::Const: {
            auto ty = resolve(d->type_args[0]);
            t->op = TDiag::AtomOp::Const;
            t->types = {ty};
            t->const_value = lit_value(d->value, ty);
            if (d->contra)
              t->iface.bwd_out = {ty};
            else
              t->iface.fwd_out = {ty};
            break;
          }
          case Diag::AtomKind::Braid: {
            t->op = TDiag::AtomOp::Braid;
            if (d->perm.size() != d->type_args.size())
              fail(d->pos, "braid permutation arity does not match the strand list");
            std::vector<bool> seen(d->perm.size(), false);
            for (auto p : d->perm) {
              if (p >= d->perm.size() || seen[p])
                fail(d->pos, "braid permutation is not a bijection");
              seen[p] = true;
            }
            t->perm = d->perm;
            t->strand_backward = d->strand_backward;
            for (const auto& ta : d->type_args) t->types.push_back(resolve(ta));
            std::size_t n = t->types.size();
            std::vector<std::size_t> bottom_src(n);
            for (std::size_t i = 0; i < n; ++i) bottom_src[t->perm[i]] = i;
            for (std::size_t i = 0; i < n; ++i) {
              if (t->strand_backward[i])
                t->iface.bwd_out.push_back(t->types[i]);
              else
                t->iface.fwd_in.push_back(t->types[i]);
            }
            for (std::size_t j = 0; j < n; ++j) {
              std::size_t i = bottom_src[j];
              if (t->strand_backward[i])
                t->iface.bwd_in.push_back(t->types[i]);
              else
                t->iface.fwd_out.push_back(t->types[i]);
            }
            break;
          }
        }
        break;
      }
    }
    t->normal = reduce_interface(t->iface);
    return t;
  }

  TypedProgram run() {
    for (const auto& d : prog.decls) {
      declare(d.pos, d.name);
      switch (d.kind) {
        case Decl::Kind::Type:
          out.types.emplace(d.name, resolve(d.type));
          break;
        case Decl::Kind::Fun:
          check_fun(d);
          break;
        case Decl::Kind::Player:
          check_player(d);
          break;
        case Decl::Kind::Let:
          out.lets.emplace(d.name, check_diag(d.diag));
          out.let_order.push_back(d.name);
          break;
      }
    }
    out.diagram = check_diag(prog.diagram);
    return std::move(out);
  }
};

}  // namespace detail

// [OP] typecheck: annotate every node with its interface, verify boundary
// matches, reject unit bends, verify fun totality and codomain closure.
inline TypedProgram typecheck(const Program& prog) {
  detail::Checker c(prog);
  return c.run();
}

// [OP] elaborate: build the OpenGame through the combinators. Let-bound
// boxes are elaborated once and the same game value is spliced at every
// occurrence.
inline GamePtr elaborate(const TypedProgram& prog, const TDiagPtr& node,
                         std::map<std::string, GamePtr>& box_cache) {
  switch (node->kind) {
    case TDiag::Kind::Seq:
      return seq(elaborate(prog, node->left, box_cache),
                 elaborate(prog, node->right, box_cache));
    case TDiag::Kind::Par:
      return tensor(elaborate(prog, node->left, box_cache),
                    elaborate(prog, node->right, box_cache));
    case TDiag::Kind::Box: {
      auto it = box_cache.find(node->name);
      if (it != box_cache.end()) return it->second;
      auto g = elaborate(prog, node->body, box_cache);
      box_cache.emplace(node->name, g);
      return g;
    }
    case TDiag::Kind::Atom: {
      switch (node->op) {
        case TDiag::AtomOp::Player: {
          const auto& p = prog.players.at(node->name);
          return player(node->name, p.obs, p.choice, p.outcome, p.sel);
        }
        case TDiag::AtomOp::Fun: {
          const auto& f = prog.funs.at(node->name);
          if (node->contra) return contravariant(f.param_types, f.out_strands, f.eval);
          return covariant(f.param_types, f.out_strands, f.eval);
        }
        case TDiag::AtomOp::Copy:
          return node->contra ? copy_bwd(node->types[0]) : copy(node->types[0]);
        case TDiag::AtomOp::Delete:
          return node->contra ? discard_bwd(node->types[0]) : discard(node->types[0]);
        case TDiag::AtomOp::Id:
          return node->contra ? identity_bwd(node->types[0]) : identity(node->types[0]);
        case TDiag::AtomOp::Counit:
          return counit(node->types[0]);
        case TDiag::AtomOp::Const:
          return node->contra ? constant_bwd(node->const_value)
                              : constant(node->const_value);
        case TDiag::AtomOp::Braid: {
          std::vector<Strand> top;
          for (std::size_t i = 0; i < node->types.size(); ++i)
            top.push_back(Strand{node->types[i], node->strand_backward[i]});
          return braid(std::move(top), node->perm);
        }
      }
      throw TypeError("unreachable atom");
    }
  }
  throw TypeError("unreachable node");
}

inline GamePtr elaborate(const TypedProgram& prog) {
  std::map<std::string, GamePtr> cache;
  return elaborate(prog, prog.diagram, cache);
}

}  // namespace og::dsl
