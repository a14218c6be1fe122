#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "og/dsl/typecheck.hpp"

namespace og::dsl {

namespace detail_dot {

// Every string of the diagram becomes one wire record; `from` is the end
// producing the value, `to` the end consuming it (for backward strings the
// producer sits below the consumer). Identities and braids only alias
// wires; counits merge a forward wire with a backward one into a bend.
struct WireTable {
  struct Wire {
    int parent = -1;
    std::string from, to;
    std::string type;
    bool backward = false;
    bool bend = false;
    bool dead = false;
  };
  std::vector<Wire> wires;

  int fresh(const std::string& type, bool backward) {
    wires.push_back(Wire{});
    wires.back().type = type;
    wires.back().backward = backward;
    return static_cast<int>(wires.size()) - 1;
  }

  int root(int w) {
    while (wires[w].parent >= 0) w = wires[w].parent;
    return w;
  }

  void set_from(int w, const std::string& node) { wires[root(w)].from = node; }
  void set_to(int w, const std::string& node) { wires[root(w)].to = node; }

  // join two records of the same string (sequential composition boundary)
  void unify(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return;
    auto& wa = wires[a];
    auto& wb = wires[b];
    if (wa.from.empty()) wa.from = wb.from;
    if (wa.to.empty()) wa.to = wb.to;
    wa.bend = wa.bend || wb.bend;
    wb.parent = a;
    wb.dead = true;
  }
};

struct Ports {
  std::vector<int> top_fwd, top_bwd, bot_fwd, bot_bwd;
};

struct DotWalker {
  WireTable table;
  std::vector<std::string> nodes;
  int next_node = 0;

  std::string add_node(const std::string& label, const std::string& shape) {
    std::string id = "a" + std::to_string(next_node++);
    nodes.push_back(id + " [label=\"" + label + "\", shape=" + shape + "]");
    return id;
  }

  Ports walk(const TDiagPtr& d) {
    switch (d->kind) {
      case TDiag::Kind::Seq: {
        Ports a = walk(d->left);
        Ports b = walk(d->right);
        for (std::size_t i = 0; i < a.bot_fwd.size(); ++i) table.unify(a.bot_fwd[i], b.top_fwd[i]);
        for (std::size_t i = 0; i < a.bot_bwd.size(); ++i) table.unify(a.bot_bwd[i], b.top_bwd[i]);
        Ports out;
        out.top_fwd = a.top_fwd;
        out.top_bwd = a.top_bwd;
        out.bot_fwd = b.bot_fwd;
        out.bot_bwd = b.bot_bwd;
        return out;
      }
      case TDiag::Kind::Par: {
        Ports a = walk(d->left);
        Ports b = walk(d->right);
        auto cat = [](std::vector<int> x, const std::vector<int>& y) {
          x.insert(x.end(), y.begin(), y.end());
          return x;
        };
        Ports out;
        out.top_fwd = cat(a.top_fwd, b.top_fwd);
        out.top_bwd = cat(a.top_bwd, b.top_bwd);
        out.bot_fwd = cat(a.bot_fwd, b.bot_fwd);
        out.bot_bwd = cat(a.bot_bwd, b.bot_bwd);
        return out;
      }
      case TDiag::Kind::Box:
        // a box is drawn as its contents; every occurrence repeats them
        return walk(d->body);
      case TDiag::Kind::Atom:
        return walk_atom(d);
    }
    throw TypeError("unreachable");
  }

  Ports walk_atom(const TDiagPtr& d) {
    Ports out;
    auto fresh_list = [&](const std::vector<TypePtr>& ts, bool backward) {
      std::vector<int> ws;
      for (const auto& t : ts) ws.push_back(table.fresh(type_name(*t), backward));
      return ws;
    };
    switch (d->op) {
      case TDiag::AtomOp::Id: {
        int w = table.fresh(type_name(*d->types[0]), d->contra);
        if (d->contra) {
          out.top_bwd = {w};
          out.bot_bwd = {w};
        } else {
          out.top_fwd = {w};
          out.bot_fwd = {w};
        }
        return out;
      }
      case TDiag::AtomOp::Braid: {
        std::size_t n = d->types.size();
        std::vector<int> ws;
        for (std::size_t i = 0; i < n; ++i)
          ws.push_back(table.fresh(type_name(*d->types[i]), d->strand_backward[i]));
        std::vector<int> bottom_src(n);
        for (std::size_t i = 0; i < n; ++i) bottom_src[d->perm[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < n; ++i)
          (d->strand_backward[i] ? out.top_bwd : out.top_fwd).push_back(ws[i]);
        for (std::size_t j = 0; j < n; ++j) {
          int i = bottom_src[j];
          (d->strand_backward[i] ? out.bot_bwd : out.bot_fwd).push_back(ws[i]);
        }
        return out;
      }
      case TDiag::AtomOp::Counit: {
        // one bent string: producer from above, consumer up the backward side
        int w = table.fresh(type_name(*d->types[0]), false);
        table.wires[table.root(w)].bend = true;
        out.top_fwd = {w};
        out.top_bwd = {w};
        return out;
      }
      case TDiag::AtomOp::Player: {
        bool one_sided = d->iface.fwd_in.empty();
        std::string id = add_node(d->name, one_sided ? "triangle" : "circle");
        out.top_fwd = fresh_list(d->iface.fwd_in, false);
        out.top_bwd = fresh_list(d->iface.bwd_out, true);
        out.bot_fwd = fresh_list(d->iface.fwd_out, false);
        out.bot_bwd = fresh_list(d->iface.bwd_in, true);
        attach(out, id);
        return out;
      }
      case TDiag::AtomOp::Fun: {
        std::string id = add_node(d->name, "circle");
        out.top_fwd = fresh_list(d->iface.fwd_in, false);
        out.top_bwd = fresh_list(d->iface.bwd_out, true);
        out.bot_fwd = fresh_list(d->iface.fwd_out, false);
        out.bot_bwd = fresh_list(d->iface.bwd_in, true);
        attach(out, id);
        return out;
      }
      case TDiag::AtomOp::Copy:
      case TDiag::AtomOp::Delete: {
        std::string id = add_node("", "point");
        out.top_fwd = fresh_list(d->iface.fwd_in, false);
        out.top_bwd = fresh_list(d->iface.bwd_out, true);
        out.bot_fwd = fresh_list(d->iface.fwd_out, false);
        out.bot_bwd = fresh_list(d->iface.bwd_in, true);
        attach(out, id);
        return out;
      }
      case TDiag::AtomOp::Const: {
        std::string id =
            add_node(render_value(d->const_value), d->contra ? "invtriangle" : "triangle");
        out.top_bwd = fresh_list(d->iface.bwd_out, true);
        out.bot_fwd = fresh_list(d->iface.fwd_out, false);
        attach(out, id);
        return out;
      }
    }
    throw TypeError("unreachable");
  }

  void attach(const Ports& p, const std::string& id) {
    for (int w : p.top_fwd) table.set_to(w, id);       // value arrives from above
    for (int w : p.top_bwd) table.set_from(w, id);     // node emits upward
    for (int w : p.bot_fwd) table.set_from(w, id);     // node emits downward
    for (int w : p.bot_bwd) table.set_to(w, id);       // value arrives from below
  }
};

}  // namespace detail_dot

// [OP] export_dot: deterministic DOT rendering of the diagram structure.
// One node per atom (identities, braids and counits are strings, not
// nodes), one edge per string with a direction attribute; bent strings
// carry bend=true.
inline std::string export_dot(const TypedProgram& prog, const std::string& name = "diagram") {
  detail_dot::DotWalker walker;
  auto ports = walker.walk(prog.diagram);

  // open boundary strings get explicit port pseudo-nodes
  int port_id = 0;
  std::ostringstream boundary;
  auto close_port = [&](int w, bool at_top, bool as_producer) {
    std::string id = (at_top ? "top_" : "bot_") + std::to_string(port_id++);
    boundary << "  " << id << " [label=\"\", shape=none]\n";
    if (as_producer)
      walker.table.set_from(w, id);
    else
      walker.table.set_to(w, id);
  };
  for (int w : ports.top_fwd) close_port(w, true, true);
  for (int w : ports.top_bwd) close_port(w, true, false);
  for (int w : ports.bot_fwd) close_port(w, false, false);
  for (int w : ports.bot_bwd) close_port(w, false, true);

  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& n : walker.nodes) os << "  " << n << "\n";
  os << boundary.str();
  for (const auto& w : walker.table.wires) {
    if (w.dead) continue;
    os << "  " << w.from << " -> " << w.to << " [label=\"" << w.type << "\", dir="
       << (w.backward ? "back" : "forward") << (w.bend ? ", bend=true" : "") << "]\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace og::dsl
