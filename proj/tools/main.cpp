// plsc: command-line front end for the partial Latin square toolkit.
//
// Exit codes: 0 success / condition holds, 1 proven not completable,
// 2 invalid input or usage, 3 inconclusive (an analysis bound was exceeded).

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plsc/board.hpp"
#include "plsc/bug.hpp"
#include "plsc/compact_brick.hpp"
#include "plsc/completion.hpp"
#include "plsc/error.hpp"
#include "plsc/extension.hpp"
#include "plsc/io.hpp"
#include "plsc/oracle.hpp"

namespace {

using namespace plsc;

constexpr int kOk = 0;
constexpr int kNotCompletable = 1;
constexpr int kInvalid = 2;
constexpr int kInconclusive = 3;

std::string cell_str(const Cell& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
}

std::string cells_str(const std::vector<Cell>& cells) {
  std::string s;
  for (std::size_t x = 0; x < cells.size(); ++x) s += (x ? " " : "") + cell_str(cells[x]);
  return s;
}

void print_board(const Plsc& b, const std::string& format) {
  if (format == "pls")
    std::cout << serialize_pls(b);
  else if (format == "candidates")
    std::cout << render_candidates(b);
  else
    std::cout << serialize_plsc(b);
}

// Rows 1..r filled and the rest empty.
std::optional<int> full_rows(const Grid& g) {
  const int n = static_cast<int>(g.size());
  int r = 0;
  while (r < n && std::all_of(g[r].begin(), g[r].end(), [](int v) { return v != 0; })) ++r;
  for (int i = r; i < n; ++i)
    if (std::any_of(g[i].begin(), g[i].end(), [](int v) { return v != 0; })) return std::nullopt;
  return r;
}

// Filled cells are exactly a top-left r x s rectangle.
std::optional<std::pair<int, int>> corner_rectangle(const Grid& g) {
  const int n = static_cast<int>(g.size());
  int s = 0;
  while (s < n && g[0][s] != 0) ++s;
  int r = 0;
  while (r < n && g[r][0] != 0) ++r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((g[i][j] != 0) != (i < r && j < s)) return std::nullopt;
  return std::make_pair(r, s);
}

Grid top_left(const Grid& g, int r, int s) {
  Grid out(r, std::vector<int>(s));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) out[i][j] = g[i][j];
  return out;
}

Box box_from(const Plsc& b, const std::vector<int>& dims) {
  const int n = b.order();
  if (!dims.empty()) {
    if (dims.size() != 3) throw InvalidInput("--box needs three values r,s,t");
    return Box::corner(n, dims[0], dims[1], dims[2]);
  }
  // Smallest corner box holding every rook.
  std::array<int, 3> d{1, 1, 1};
  for (const Cell& c : b.rooks())
    for (int a = 0; a < 3; ++a) d[a] = std::max(d[a], c[a]);
  return Box::corner(n, d[0], d[1], d[2]);
}

int run_cruse(const Plsc& board, const std::vector<int>& dims, const std::string& format) {
  Box box = box_from(board, dims);
  CruseReport rep = cruse_check(board, box);
  std::cout << rep.summary() << "\n";
  if (!rep.pass()) return kNotCompletable;
  Grid g = cruse_embed(board, box);
  if (format == "plsc")
    std::cout << serialize_plsc(from_pls(g));
  else
    std::cout << serialize_pls(g);
  return kOk;
}

int cmd_complete(const std::string& path, const std::string& method, const std::vector<int>& dims,
                 const std::string& format) {
  Plsc board = read_board_file(path);
  Grid g = to_pls(board).grid;
  const int n = board.order();
  std::string m = method;
  if (m == "auto") {
    auto fr = full_rows(g);
    if (fr && *fr >= 1 && *fr < n)
      m = "hall";
    else if (corner_rectangle(g))
      m = "ryser";
    else
      m = "cruse";
  }
  auto emit = [&](const Grid& out) {
    if (format == "plsc")
      std::cout << serialize_plsc(from_pls(out));
    else
      std::cout << serialize_pls(out);
  };
  if (m == "hall") {
    auto fr = full_rows(g);
    if (!fr || *fr < 1 || *fr >= n) throw InvalidInput("--hall needs r full rows (1 <= r < n) and nothing else");
    emit(hall_complete(top_left(g, *fr, n)));
    return kOk;
  }
  if (m == "ryser") {
    auto rc = corner_rectangle(g);
    if (!rc || rc->first < 1 || rc->second < 1)
      throw InvalidInput("--ryser needs the filled cells to form a top-left rectangle");
    Grid rect = top_left(g, rc->first, rc->second);
    if (auto w = ryser_violation(rect, n)) {
      std::cout << "not extendable: symbol " << w->symbol << " occurs " << w->occurrences
                << " times, needs " << w->required << "\n";
      return kNotCompletable;
    }
    emit(ryser_extend(rect, n));
    return kOk;
  }
  return run_cruse(board, dims, format);
}

void print_report(const ExtensionReport& rep) {
  std::cout << "outcome: " << to_string(rep.outcome) << "\n";
  std::cout << "treated: " << rep.treated.size() << (rep.treated.empty() ? "" : " " + cells_str(rep.treated)) << "\n";
  std::cout << "auto-eliminated dots: " << rep.eliminated.size() << "\n";
  std::cout << "deceptive dots eliminated: " << rep.deceptive_eliminated.size() << "\n";
  std::cout << "rounds: " << rep.rounds << "\n";
  if (rep.capacity_violation) std::cout << "capacity violated: " << rep.capacity_violation->describe() << "\n";
  if (!rep.exhaustive) std::cout << "note: box searches were not exhaustive at this order\n";
}

int cmd_extend(const std::string& path, bool primary_only, const std::string& format) {
  Plsc board = read_board_file(path);
  auto [out, rep] = primary_only ? primary_extend(board) : secondary_extend(board);
  print_report(rep);
  print_board(out, format);
  return rep.outcome == ExtensionOutcome::NotCompletable ? kNotCompletable : kOk;
}

int cmd_bug_check(const std::string& path) {
  Plsc board = read_board_file(path);
  auto [pss, rep] = secondary_extend(board);
  std::cout << "secondary extension: " << to_string(rep.outcome) << "\n";
  if (rep.outcome == ExtensionOutcome::NotCompletable) {
    if (rep.capacity_violation) std::cout << "capacity violated: " << rep.capacity_violation->describe() << "\n";
    else std::cout << "an empty file appeared during elimination\n";
    std::cout << "verdict: not completable\n";
    return kNotCompletable;
  }
  if (rep.outcome == ExtensionOutcome::Completed) {
    std::cout << "verdict: completed\n";
    return kOk;
  }
  BugVerdict v = bug_condition(pss);
  std::cout << "mCS: " << (v.mcs ? "yes" : "no") << "\n";
  std::cout << v.summary() << "\n";
  if (!v.pass) {
    std::cout << "odd cycle length " << v.odd_cycle->size() << ": " << cells_str(*v.odd_cycle) << "\n";
    std::cout << "verdict: not completable\n";
    return kNotCompletable;
  }
  if (!rep.exhaustive) {
    std::cout << "verdict: inconclusive (box searches not exhaustive)\n";
    return kInconclusive;
  }
  std::cout << "verdict: BUG condition holds\n";
  return kOk;
}

int cmd_embed_compact(const std::string& path, int n, const std::vector<int>& dims, bool dots_only,
                      const std::string& format) {
  Plsc board = read_board_file(path);
  std::optional<Box> box;
  if (!dims.empty()) box = box_from(board, dims);
  else box = closure_hull(board, dots_only);
  if (!box) throw InvalidInput("board has nothing to take a hull of");
  CompactBrick brick = CompactBrick::extract(board, *box);
  CompactCruseReport rep = compact_cruse_check(brick, n);
  std::cout << rep.summary() << "\n";
  if (!rep.pass()) return kNotCompletable;
  print_board(embed_compact(brick, n), format);
  return kOk;
}

int cmd_cap(int n, int r, int s, int t, bool oracle) {
  std::cout << "cap " << cap(n, r, s, t) << "\n";
  std::cout << "forms " << cap_form_rs(n, r, s, t) << " " << cap_form_st(n, r, s, t) << " "
            << cap_form_rt(n, r, s, t) << "\n";
  std::cout << "effective_cap " << effective_cap(n, r, s, t) << "\n";
  std::cout << "rbc_capacity " << rbc_capacity(n, r, s, t) << "\n";
  if (oracle) {
    std::cout << "max_box_rooks " << max_box_rooks(n, r, s, t) << "\n";
    std::cout << "max_rbc_rooks " << max_rbc_rooks(n, r, s, t) << "\n";
  }
  return kOk;
}

int cmd_oracle(const std::string& path, std::uint64_t limit, bool list) {
  Plsc board = read_board_file(path);
  if (board.order() > kOracleMaxOrder && limit == 0) {
    std::cout << "order " << board.order() << " needs --limit for counting\n";
    return kInconclusive;
  }
  OracleResult res = count_completions(board, limit, list);
  std::cout << "completions " << res.count << (res.limit_reached ? " (limit reached)" : "") << "\n";
  for (const Grid& g : res.completions) std::cout << serialize_pls(g) << "\n";
  return res.count == 0 ? kNotCompletable : kOk;
}

int cmd_conjugate(const std::string& path, const std::string& perm, const std::string& format) {
  Plsc board = read_board_file(path);
  print_board(conjugate(board, RolePerm::parse(perm)), format);
  return kOk;
}

int cmd_render(const std::string& path, bool graph) {
  Plsc board = read_board_file(path);
  std::cout << render_candidates(board);
  if (graph) std::cout << export_graph(is_mcs(board) ? dot_graph(board) : eligible_dot_graph(board));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Latin square completion toolkit"};
  app.require_subcommand(1);

  std::string file, method = "auto", perm;
  std::string fmt_complete = "pls", fmt_extend = "plsc", fmt_cruse = "pls", fmt_compact = "plsc",
              fmt_conj = "plsc";
  std::vector<int> dims;
  bool primary_only = false, dots_only = false, oracle_flag = false, list = false, graph = false;
  int order = 0, r = 0, s = 0, t = 0;
  std::uint64_t limit = 0;

  auto* complete = app.add_subcommand("complete", "Complete a board with the constructive pipelines");
  complete->add_option("file", file, "PLS or PLSC file")->required();
  auto* g = complete->add_option_group("method");
  g->add_flag_callback("--hall", [&] { method = "hall"; }, "Latin rectangle completion");
  g->add_flag_callback("--ryser", [&] { method = "ryser"; }, "Corner rectangle extension");
  g->add_flag_callback("--cruse", [&] { method = "cruse"; }, "Corner brick embedding");
  g->require_option(0, 1);
  complete->add_option("--box", dims, "Corner box r s t for --cruse")->delimiter(',')->expected(3);
  complete->add_option("--format", fmt_complete, "Output format")->check(CLI::IsMember({"pls", "plsc"}));

  auto* extend = app.add_subcommand("extend", "Primary or secondary extension");
  extend->add_option("file", file)->required();
  extend->add_flag("--primary", primary_only, "Stop after primary extension");
  extend->add_option("--format", fmt_extend)->check(CLI::IsMember({"pls", "plsc", "candidates"}));

  auto* bug = app.add_subcommand("bug-check", "Secondary extension followed by the BUG condition");
  bug->add_option("file", file)->required();

  auto* ecruse = app.add_subcommand("embed-cruse", "Embed the rooks of a corner box");
  ecruse->add_option("file", file)->required();
  ecruse->add_option("--box", dims, "Corner box r,s,t")->delimiter(',')->expected(3);
  ecruse->add_option("--format", fmt_cruse)->check(CLI::IsMember({"pls", "plsc"}));

  auto* ecompact = app.add_subcommand("embed-compact", "Full extension of a compact brick");
  ecompact->add_option("file", file)->required();
  ecompact->add_option("-n,--order", order, "Target order")->required()->check(CLI::Range(1, kMaxOrder));
  ecompact->add_option("--box", dims, "Corner box r,s,t (default: closure hull)")->delimiter(',')->expected(3);
  ecompact->add_flag("--dots-only", dots_only, "Hull of the dots only");
  ecompact->add_option("--format", fmt_compact)->check(CLI::IsMember({"pls", "plsc", "candidates"}));

  auto* capc = app.add_subcommand("cap", "Capacity formulas for a corner box");
  capc->add_option("n", order)->required()->check(CLI::Range(1, kMaxOrder));
  capc->add_option("r", r)->required()->check(CLI::PositiveNumber);
  capc->add_option("s", s)->required()->check(CLI::PositiveNumber);
  capc->add_option("t", t)->required()->check(CLI::PositiveNumber);
  capc->add_flag("--oracle", oracle_flag, "Also maximise by search (n <= 7)");

  auto* orc = app.add_subcommand("oracle", "Count completions by exhaustive search");
  orc->add_option("file", file)->required();
  orc->add_option("--limit", limit, "Stop after this many completions");
  orc->add_flag("--list", list, "Print the completions");

  auto* conj = app.add_subcommand("conjugate", "Permute coordinate roles");
  conj->add_option("file", file)->required();
  conj->add_option("perm", perm, "One of ijk ikj jik jki kij kji")->required();
  conj->add_option("--format", fmt_conj)->check(CLI::IsMember({"pls", "plsc", "candidates"}));

  auto* render = app.add_subcommand("render", "Candidate rendering and dot-graph export");
  render->add_option("file", file)->required();
  render->add_flag("--graph", graph, "Export the dot graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*complete) return cmd_complete(file, method, dims, fmt_complete);
    if (*extend) return cmd_extend(file, primary_only, fmt_extend);
    if (*bug) return cmd_bug_check(file);
    if (*ecruse) return run_cruse(read_board_file(file), dims, fmt_cruse);
    if (*ecompact) return cmd_embed_compact(file, order, dims, dots_only, fmt_compact);
    if (*capc) return cmd_cap(order, r, s, t, oracle_flag);
    if (*orc) return cmd_oracle(file, limit, list);
    if (*conj) return cmd_conjugate(file, perm, fmt_conj);
    if (*render) return cmd_render(file, graph);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidMove& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
