// og: typecheck game files, compute and verify equilibria, export DOT.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "og/dsl/dot.hpp"
#include "og/dsl/parser.hpp"
#include "og/dsl/typecheck.hpp"
#include "og/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParseType = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string file;
  std::string profile_path;
  std::string out_path;
  std::string format = "json";
  double tol = 1e-9;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + opt.out_path);
  out << text;
}

std::string game_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

struct Loaded {
  og::dsl::TypedProgram typed;
  og::GamePtr game;
};

Loaded load(const std::string& path) {
  auto source = read_file(path);
  auto ast = og::dsl::parse(source);
  Loaded l;
  l.typed = og::dsl::typecheck(ast);
  l.game = og::dsl::elaborate(l.typed);
  return l;
}

og::Config make_config(const Options& opt) {
  og::Config cfg;
  cfg.tol = opt.tol;
  cfg.budget = opt.budget;
  cfg.workers = opt.workers;
  return cfg;
}

int cmd_check(const Options& opt) {
  auto l = load(opt.file);
  const auto& g = *l.game;
  if (opt.format == "json") {
    og::json out;
    out["game"] = game_name(opt.file);
    out["ok"] = true;
    out["interface"] = og::render_interface(g.iface);
    out["closed"] = og::is_closed(g);
    out["sigma_cardinality"] = og::sigma_cardinality_json(g.sigma);
    og::json players = og::json::array();
    for (const auto& slot : og::player_slots(g.sigma)) players.push_back(slot.instance);
    out["players"] = std::move(players);
    write_output(opt, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << game_name(opt.file) << ": ok\n"
       << "  interface: " << og::render_interface(g.iface)
       << (og::is_closed(g) ? " (closed game I -> I)" : "") << "\n"
       << "  strategy profiles: " << og::sigma_cardinality_json(g.sigma).dump() << "\n";
    write_output(opt, os.str());
  }
  return kExitOk;
}

int cmd_eq(const Options& opt) {
  auto l = load(opt.file);
  auto cfg = make_config(opt);
  auto start = std::chrono::steady_clock::now();
  auto indices = og::equilibrium_indices(*l.game, cfg);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  og::json out;
  out["game"] = game_name(opt.file);
  out["sigma_cardinality"] = og::sigma_cardinality_json(l.game->sigma);
  og::json eqs = og::json::array();
  for (auto i : indices)
    eqs.push_back(og::profile_to_json(l.game->sigma, *og::profile_at(l.game->sigma, i)));
  out["count"] = indices.size();
  out["equilibria"] = std::move(eqs);
  out["elapsed_ms"] = elapsed;

  if (opt.format == "json") {
    write_output(opt, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << game_name(opt.file) << ": " << indices.size() << " equilibria over "
       << out["sigma_cardinality"].dump() << " profiles (" << elapsed << " ms)\n";
    for (const auto& e : out["equilibria"]) os << "  " << e.dump() << "\n";
    write_output(opt, os.str());
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  auto l = load(opt.file);
  auto cfg = make_config(opt);
  og::json prof_json;
  {
    std::istringstream in(read_file(opt.profile_path));
    in >> prof_json;
  }
  auto prof = og::profile_from_json(l.game->sigma, prof_json);
  og::Reporter reporter;
  auto start = std::chrono::steady_clock::now();
  bool ok = og::check_profile(*l.game, *prof, cfg, &reporter);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  og::json out;
  out["game"] = game_name(opt.file);
  out["equilibrium"] = ok;
  out["sigma_cardinality"] = og::sigma_cardinality_json(l.game->sigma);
  og::json rows = og::json::array();
  og::json violations = og::json::array();
  for (const auto& row : reporter.rows) {
    rows.push_back(og::deviation_row_to_json(row));
    if (!row.ok) {
      std::ostringstream msg;
      msg << row.player << " at " << og::render_value(row.obs) << ": "
          << og::render_value(row.best_choice) << " improves on "
          << og::render_value(row.chosen);
      if (row.numeric) msg << " (" << row.best << " > " << row.realized << ")";
      violations.push_back(msg.str());
    }
  }
  out["players"] = std::move(rows);
  out["violations"] = std::move(violations);
  out["elapsed_ms"] = elapsed;

  if (opt.format == "json") {
    write_output(opt, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << game_name(opt.file) << ": " << (ok ? "equilibrium" : "NOT an equilibrium") << "\n";
    for (const auto& v : out["violations"]) os << "  deviation: " << v.get<std::string>() << "\n";
    write_output(opt, os.str());
  }
  return kExitOk;
}

int cmd_dot(const Options& opt) {
  auto source = read_file(opt.file);
  auto typed = og::dsl::typecheck(og::dsl::parse(source));
  write_output(opt, og::dsl::export_dot(typed, game_name(opt.file)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional game engine"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_profile) {
    cmd->add_option("file", opt.file, "game file (.og)")->required();
    if (with_profile)
      cmd->add_option("profile", opt.profile_path, "strategy profile (JSON)")->required();
    cmd->add_option("--tol", opt.tol, "argmax tie tolerance");
    cmd->add_option("--budget", opt.budget, "equilibrium-evaluation budget");
    cmd->add_option("--workers", opt.workers, "worker threads (0 = auto)");
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "parse and typecheck a game file");
  add_common(check, false);
  auto* eq = app.add_subcommand("eq", "enumerate equilibria of a closed game");
  add_common(eq, false);
  auto* verify = app.add_subcommand("verify", "check one strategy profile");
  add_common(verify, true);
  auto* dot = app.add_subcommand("dot", "export the diagram as DOT");
  add_common(dot, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (eq->parsed()) return cmd_eq(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (dot->parsed()) return cmd_dot(opt);
    return kExitUsage;
  } catch (const og::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const og::dsl::ParseError& e) {
    std::cerr << opt.file << ":" << e.what() << "\n";
    return kExitParseType;
  } catch (const og::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseType;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseType;
  }
}
