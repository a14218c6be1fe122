#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "og/dsl/ast.hpp"

namespace og::dsl {

enum class Tok {
  Ident,
  Number,
  Assign,    // =
  Colon,     // :
  Arrow,     // ->
  Comma,
  Semi,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Star,      // *
  Slash,
  Plus,
  Minus,
  Caret,     // ^ (strand direction marker)
  ContraMark,  // ^*
  SeqOp,     // >>
  ParOp,     // ||
  EqEq,
  NotEq,
  Le,
  Ge,
  Lt,
  Gt,
  DotDot,
  End,
};

struct Token {
  Tok kind = Tok::End;
  Pos pos;
  std::string text;
  Num num;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = pos();
      if (i_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = src_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t s = i_;
        while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                                    src_[i_] == '_'))
          advance();
        t.kind = Tok::Ident;
        t.text = src_.substr(s, i_ - s);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        t.num = lex_number();
      } else {
        t.kind = lex_symbol(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  Pos pos() const { return Pos{line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    for (;;) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
      if (i_ < src_.size() && src_[i_] == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  Num lex_number() {
    Num n{0, 0};
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      n.mant = n.mant * 10 + (src_[i_] - '0');
      advance();
    }
    if (i_ + 1 < src_.size() && src_[i_] == '.' && src_[i_ + 1] != '.') {
      if (std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))) {
        advance();  // consume '.'
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
          n.mant = n.mant * 10 + (src_[i_] - '0');
          --n.exp;
          advance();
        }
      }
    }
    return n;
  }

  Tok lex_symbol(Token& t) {
    char c = src_[i_];
    auto two = [&](char a, char b) {
      return c == a && i_ + 1 < src_.size() && src_[i_ + 1] == b;
    };
    if (two('-', '>')) {
      advance();
      advance();
      return Tok::Arrow;
    }
    if (two('>', '>')) {
      advance();
      advance();
      return Tok::SeqOp;
    }
    if (two('|', '|')) {
      advance();
      advance();
      return Tok::ParOp;
    }
    if (two('^', '*')) {
      advance();
      advance();
      return Tok::ContraMark;
    }
    if (two('=', '=')) {
      advance();
      advance();
      return Tok::EqEq;
    }
    if (two('!', '=')) {
      advance();
      advance();
      return Tok::NotEq;
    }
    if (two('<', '=')) {
      advance();
      advance();
      return Tok::Le;
    }
    if (two('>', '=')) {
      advance();
      advance();
      return Tok::Ge;
    }
    if (two('.', '.')) {
      advance();
      advance();
      return Tok::DotDot;
    }
    advance();
    switch (c) {
      case '=': return Tok::Assign;
      case ':': return Tok::Colon;
      case ',': return Tok::Comma;
      case ';': return Tok::Semi;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case '{': return Tok::LBrace;
      case '}': return Tok::RBrace;
      case '[': return Tok::LBracket;
      case ']': return Tok::RBracket;
      case '*': return Tok::Star;
      case '/': return Tok::Slash;
      case '+': return Tok::Plus;
      case '-': return Tok::Minus;
      case '^': return Tok::Caret;
      case '<': return Tok::Lt;
      case '>': return Tok::Gt;
      default:
        throw ParseError(t.pos, std::string("unknown token '") + c + "'");
    }
  }

  const std::string& src_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program prog;
    for (;;) {
      if (at(Tok::End)) throw ParseError(cur().pos, "missing 'diagram =' declaration");
      if (!at(Tok::Ident)) throw ParseError(cur().pos, "expected a declaration");
      const std::string& kw = cur().text;
      if (kw == "type")
        prog.decls.push_back(parse_type_decl());
      else if (kw == "fun")
        prog.decls.push_back(parse_fun_decl());
      else if (kw == "player")
        prog.decls.push_back(parse_player_decl());
      else if (kw == "let")
        prog.decls.push_back(parse_let_decl());
      else if (kw == "diagram")
        break;
      else
        throw ParseError(cur().pos, "expected type/fun/player/let/diagram, got '" + kw + "'");
    }
    expect_ident("diagram");
    expect(Tok::Assign, "'='");
    prog.diagram = parse_diag();
    if (!at(Tok::End)) throw ParseError(cur().pos, "trailing input after the diagram");
    return prog;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& peek(std::size_t n = 1) const {
    return toks_[std::min(i_ + n, toks_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_ident(const char* s) const { return at(Tok::Ident) && cur().text == s; }
  Token take() { return toks_[i_++]; }

  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(cur().pos, std::string("expected ") + what +
                                      (at(Tok::End) ? " at end of input"
                                                    : ", got '" + describe(cur()) + "'"));
    return take();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return t.text;
    if (t.kind == Tok::Number) return "number";
    return "symbol";
  }

  void expect_ident(const char* s) {
    if (!at_ident(s)) throw ParseError(cur().pos, std::string("expected '") + s + "'");
    take();
  }

  std::string ident(const char* what) {
    if (!at(Tok::Ident)) throw ParseError(cur().pos, std::string("expected ") + what);
    return take().text;
  }

  Num signed_number() {
    bool neg = false;
    if (at(Tok::Minus)) {
      take();
      neg = true;
    }
    Token t = expect(Tok::Number, "a number");
    Num n = t.num;
    if (neg) n.mant = -n.mant;
    return n;
  }

  long long integer(const char* what) {
    Num n = signed_number();
    if (n.exp != 0) throw ParseError(cur().pos, std::string(what) + " must be an integer");
    return n.mant;
  }

  // --- types ---

  TypeExprPtr parse_type() {
    auto t = std::make_shared<TypeExpr>();
    t->pos = cur().pos;
    if (at_ident("unit")) {
      take();
      t->kind = TypeExpr::Kind::Unit;
    } else if (at(Tok::LBrace)) {
      take();
      t->kind = TypeExpr::Kind::Labels;
      t->labels.push_back(ident("a label"));
      while (at(Tok::Comma)) {
        take();
        t->labels.push_back(ident("a label"));
      }
      expect(Tok::RBrace, "'}'");
    } else if (at_ident("int")) {
      take();
      expect(Tok::LParen, "'('");
      t->kind = TypeExpr::Kind::IntRange;
      t->lo = integer("int bound");
      expect(Tok::DotDot, "'..'");
      t->hi = integer("int bound");
      expect(Tok::RParen, "')'");
    } else if (at_ident("grid")) {
      take();
      if (at(Tok::LParen)) {
        take();
        t->kind = TypeExpr::Kind::GridRange;
        t->glo = signed_number();
        expect(Tok::Comma, "','");
        t->ghi = signed_number();
        expect(Tok::Comma, "','");
        t->gstep = signed_number();
        expect(Tok::RParen, "')'");
      } else {
        expect(Tok::LBrace, "'(' or '{'");
        t->kind = TypeExpr::Kind::GridPoints;
        t->points.push_back(signed_number());
        while (at(Tok::Comma)) {
          take();
          t->points.push_back(signed_number());
        }
        expect(Tok::RBrace, "'}'");
      }
    } else if (at_ident("list")) {
      take();
      expect(Tok::LParen, "'('");
      t->kind = TypeExpr::Kind::List;
      t->elem = parse_type();
      expect(Tok::Comma, "','");
      t->hi = integer("list length");
      expect(Tok::RParen, "')'");
    } else if (at(Tok::LParen)) {
      take();
      t->kind = TypeExpr::Kind::Product;
      t->parts.push_back(parse_type());
      expect(Tok::Star, "'*'");
      t->parts.push_back(parse_type());
      while (at(Tok::Star)) {
        take();
        t->parts.push_back(parse_type());
      }
      expect(Tok::RParen, "')'");
    } else if (at(Tok::Ident)) {
      t->kind = TypeExpr::Kind::Ref;
      t->name = take().text;
    } else {
      throw ParseError(cur().pos, "expected a type");
    }
    return t;
  }

  // --- declarations ---

  Decl parse_type_decl() {
    Decl d;
    d.kind = Decl::Kind::Type;
    d.pos = cur().pos;
    take();  // 'type'
    d.name = ident("a type name");
    expect(Tok::Assign, "'='");
    d.type = parse_type();
    return d;
  }

  Decl parse_fun_decl() {
    Decl d;
    d.kind = Decl::Kind::Fun;
    d.pos = cur().pos;
    take();  // 'fun'
    d.name = ident("a function name");
    expect(Tok::LParen, "'('");
    for (;;) {
      std::string pname = ident("a parameter name");
      expect(Tok::Colon, "':'");
      d.params.emplace_back(pname, parse_type());
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Arrow, "'->'");
    d.codomain = parse_type();
    expect(Tok::Assign, "'='");
    if (at_ident("table")) {
      take();
      d.is_table = true;
      expect(Tok::LBrace, "'{'");
      for (;;) {
        TableRow row;
        row.key = parse_value_lit();
        expect(Tok::Colon, "':'");
        row.value = parse_value_lit();
        d.table.push_back(std::move(row));
        if (!at(Tok::Comma)) break;
        take();
      }
      expect(Tok::RBrace, "'}'");
    } else {
      d.body = parse_expr();
    }
    return d;
  }

  Decl parse_player_decl() {
    Decl d;
    d.kind = Decl::Kind::Player;
    d.pos = cur().pos;
    take();  // 'player'
    d.name = ident("a player name");
    expect(Tok::Colon, "':'");
    d.obs = parse_type();
    expect(Tok::Arrow, "'->'");
    d.choice = parse_type();
    std::string goal = ident("a goal (argmax/prefer/fixpoint/match)");
    if (goal == "argmax" || goal == "prefer") {
      d.goal = goal == "argmax" ? Decl::Goal::Argmax : Decl::Goal::Prefer;
      expect(Tok::LBracket, "'['");
      d.outcome = parse_type();
      expect(Tok::RBracket, "']'");
    } else if (goal == "fixpoint") {
      d.goal = Decl::Goal::Fixpoint;
    } else if (goal == "match") {
      d.goal = Decl::Goal::Match;
    } else {
      throw ParseError(d.pos, "unknown player goal '" + goal + "'");
    }
    return d;
  }

  Decl parse_let_decl() {
    Decl d;
    d.kind = Decl::Kind::Let;
    d.pos = cur().pos;
    take();  // 'let'
    d.name = ident("a box name");
    expect(Tok::Assign, "'='");
    d.diag = parse_diag();
    return d;
  }

  // --- value literals ---

  ValueLitPtr parse_value_lit() {
    auto v = std::make_shared<ValueLit>();
    v->pos = cur().pos;
    if (at(Tok::Ident)) {
      v->kind = ValueLit::Kind::Name;
      v->name = take().text;
    } else if (at(Tok::Number) || at(Tok::Minus)) {
      v->kind = ValueLit::Kind::Number;
      v->num = signed_number();
    } else if (at(Tok::LParen)) {
      take();
      v->kind = ValueLit::Kind::Tuple;
      v->items.push_back(parse_value_lit());
      while (at(Tok::Comma)) {
        take();
        v->items.push_back(parse_value_lit());
      }
      expect(Tok::RParen, "')'");
      if (v->items.size() < 2) throw ParseError(v->pos, "tuple literal needs two components");
    } else if (at(Tok::LBracket)) {
      take();
      v->kind = ValueLit::Kind::List;
      if (!at(Tok::RBracket)) {
        v->items.push_back(parse_value_lit());
        while (at(Tok::Comma)) {
          take();
          v->items.push_back(parse_value_lit());
        }
      }
      expect(Tok::RBracket, "']'");
    } else {
      throw ParseError(cur().pos, "expected a value literal");
    }
    return v;
  }

  // --- arithmetic expressions ---

  ExprPtr parse_expr() { return parse_add(); }

  ExprPtr mk(Expr::Kind k, Pos pos, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr parse_add() {
    auto lhs = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      auto op = take();
      auto rhs = parse_mul();
      lhs = mk(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, {lhs, rhs});
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    auto lhs = parse_factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      auto op = take();
      auto rhs = parse_factor();
      lhs = mk(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, {lhs, rhs});
    }
    return lhs;
  }

  Expr::Cmp parse_cmp() {
    switch (take().kind) {
      case Tok::EqEq: return Expr::Cmp::Eq;
      case Tok::NotEq: return Expr::Cmp::Ne;
      case Tok::Lt: return Expr::Cmp::Lt;
      case Tok::Le: return Expr::Cmp::Le;
      case Tok::Gt: return Expr::Cmp::Gt;
      case Tok::Ge: return Expr::Cmp::Ge;
      default: throw ParseError(cur().pos, "expected a comparison operator");
    }
  }

  ExprPtr parse_factor() {
    Pos pos = cur().pos;
    if (at(Tok::Minus)) {
      take();
      return mk(Expr::Kind::Neg, pos, {parse_factor()});
    }
    if (at(Tok::Number)) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = pos;
      e->num = take().num;
      return e;
    }
    if (at(Tok::LParen)) {
      take();
      auto first = parse_expr();
      if (at(Tok::Comma)) {
        std::vector<ExprPtr> items{first};
        while (at(Tok::Comma)) {
          take();
          items.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        return mk(Expr::Kind::Tuple, pos, std::move(items));
      }
      expect(Tok::RParen, "')'");
      return first;
    }
    if (at_ident("max") || at_ident("min")) {
      bool is_max = cur().text == "max";
      take();
      expect(Tok::LParen, "'('");
      auto a = parse_expr();
      expect(Tok::Comma, "','");
      auto b = parse_expr();
      expect(Tok::RParen, "')'");
      return mk(is_max ? Expr::Kind::Max : Expr::Kind::Min, pos, {a, b});
    }
    if (at_ident("cons")) {
      take();
      expect(Tok::LParen, "'('");
      auto a = parse_expr();
      expect(Tok::Comma, "','");
      auto b = parse_expr();
      expect(Tok::RParen, "')'");
      return mk(Expr::Kind::Cons, pos, {a, b});
    }
    if (at_ident("if")) {
      take();
      auto lhs = parse_expr();
      auto cmp = parse_cmp();
      auto rhs = parse_expr();
      expect_ident("then");
      auto then_e = parse_expr();
      expect_ident("else");
      auto else_e = parse_expr();
      auto e = mk(Expr::Kind::If, pos, {lhs, rhs, then_e, else_e});
      e->cmp = cmp;
      return e;
    }
    if (at(Tok::Ident)) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Param;
      e->pos = pos;
      e->param = take().text;
      return e;
    }
    throw ParseError(pos, "expected an expression");
  }

  // --- diagrams ---

  DiagPtr parse_diag() {
    auto lhs = parse_dterm();
    while (at(Tok::SeqOp)) {
      Pos pos = take().pos;
      auto rhs = parse_dterm();
      auto d = std::make_shared<Diag>();
      d->kind = Diag::Kind::Seq;
      d->pos = pos;
      d->left = lhs;
      d->right = rhs;
      lhs = d;
    }
    return lhs;
  }

  DiagPtr parse_dterm() {
    auto lhs = parse_dfactor();
    while (at(Tok::ParOp)) {
      Pos pos = take().pos;
      auto rhs = parse_dfactor();
      auto d = std::make_shared<Diag>();
      d->kind = Diag::Kind::Par;
      d->pos = pos;
      d->left = lhs;
      d->right = rhs;
      lhs = d;
    }
    return lhs;
  }

  bool at_atom() const {
    if (!at(Tok::Ident)) return false;
    const std::string& s = cur().text;
    return s == "copy" || s == "delete" || s == "id" || s == "counit" || s == "unit" ||
           s == "braid" || s == "const";
  }

  DiagPtr parse_dfactor() {
    if (at(Tok::LParen)) {
      take();
      auto d = parse_diag();
      expect(Tok::RParen, "')'");
      return d;
    }
    if (at_atom()) return parse_atom();
    if (at(Tok::Ident)) {
      auto d = std::make_shared<Diag>();
      d->kind = Diag::Kind::Ref;
      d->pos = cur().pos;
      d->name = take().text;
      if (at(Tok::ContraMark)) {
        take();
        d->contra = true;
      }
      return d;
    }
    throw ParseError(cur().pos, "expected a diagram atom, name or '('");
  }

  DiagPtr parse_atom() {
    auto d = std::make_shared<Diag>();
    d->kind = Diag::Kind::Atom;
    d->pos = cur().pos;
    std::string kw = take().text;
    if (at(Tok::ContraMark)) {
      take();
      d->contra = true;
    }
    if (kw == "braid") {
      d->atom = Diag::AtomKind::Braid;
      expect(Tok::LBracket, "'['");
      while (at(Tok::Number)) {
        long long p = integer("a strand position");
        if (p < 1) throw ParseError(d->pos, "braid positions are 1-based");
        d->perm.push_back(static_cast<std::size_t>(p - 1));
      }
      expect(Tok::Semi, "';'");
      for (;;) {
        bool back = false;
        if (at(Tok::Caret)) {
          take();
          back = true;
        }
        d->strand_backward.push_back(back);
        d->type_args.push_back(parse_type());
        if (!at(Tok::Comma)) break;
        take();
      }
      expect(Tok::RBracket, "']'");
      return d;
    }
    if (kw == "const") {
      d->atom = Diag::AtomKind::Const;
      expect(Tok::LBracket, "'['");
      d->type_args.push_back(parse_type());
      expect(Tok::RBracket, "']'");
      expect(Tok::LParen, "'('");
      d->value = parse_value_lit();
      expect(Tok::RParen, "')'");
      return d;
    }
    if (kw == "copy")
      d->atom = Diag::AtomKind::Copy;
    else if (kw == "delete")
      d->atom = Diag::AtomKind::Delete;
    else if (kw == "id")
      d->atom = Diag::AtomKind::Id;
    else if (kw == "counit")
      d->atom = Diag::AtomKind::Counit;
    else
      d->atom = Diag::AtomKind::Unit;
    expect(Tok::LBracket, "'['");
    d->type_args.push_back(parse_type());
    expect(Tok::RBracket, "']'");
    return d;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

inline Program parse(const std::string& source) {
  Lexer lex(source);
  Parser p(lex.run());
  return p.run();
}

}  // namespace og::dsl
