// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "plsc/bug.hpp"
#include "plsc/compact_brick.hpp"
#include "plsc/completion.hpp"
#include "plsc/error.hpp"
#include "plsc/extension.hpp"
#include "plsc/io.hpp"
#include "plsc/matching.hpp"
#include "plsc/oracle.hpp"
#include "test_util.hpp"

#ifndef PLSC_CLI
#define PLSC_CLI "plsc"
#endif
#ifndef PLSC_FIXTURE_DIR
#define PLSC_FIXTURE_DIR "fixtures"
#endif

using namespace plsc;
using plsc::testkit::Rng;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << detail << std::endl;
  if (!ok) ++failures;
}

// Runs a criterion, turning an escaped exception into a failure line.
void run(int id, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(id, ok, detail);
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

BinMatrix random_regular(int n, int k, Rng& rng) {
  Grid g = testkit::random_latin_square(n, rng);
  BinMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, g[i][j] <= k);
  return m;
}

// 2-colouring of the cells under "share a file", computed from scratch.
bool bipartite(const std::vector<Cell>& cells) {
  std::vector<int> color(cells.size(), -1);
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y = 0; y < cells.size(); ++y) {
        if (hamming_distance(cells[x], cells[y]) != 1) continue;
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct BugTally {
  int bugs = 0, bad = 0;
};

void tally_bugs(const Plsc& board, BugTally& t) {
  DotGraph g = eligible_dot_graph(board);
  for (const auto& comp : bugs(g)) {
    bool cubic = true;
    for (int v : comp) cubic = cubic && g.adj[v].size() == 3;
    if (!cubic) continue;
    ++t.bugs;
    std::vector<Cell> cells;
    for (int v : comp) cells.push_back(g.vertices[v]);
    BugSolutionSet s = solve_bug(g, comp);
    auto covers = testkit::count_exact_covers(cells);
    bool ok = (covers == 0 || covers == 2) && s.solutions.size() == covers &&
              s.solvable() == bipartite(cells);
    if (ok && s.solvable()) {
      std::set<Cell> a(s.solutions[0].begin(), s.solutions[0].end());
      for (const Cell& c : s.solutions[1]) ok = ok && !a.count(c);
    }
    if (!ok) ++t.bad;
  }
}

Grid isotope(const Grid& g, Rng& rng) {
  const int n = static_cast<int>(g.size());
  std::vector<int> pr(n), pc(n), ps(n + 1);
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::iota(ps.begin(), ps.end(), 0);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  std::shuffle(ps.begin() + 1, ps.end(), rng);
  Grid out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[pr[i]][pc[j]] = ps[g[i][j]];
  return out;
}

Plsc overlay(const Grid& A, const Grid& B) {
  const int n = static_cast<int>(A.size());
  Plsc b = detail::BoardEditor::make(n, CellState::Empty);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A[i][j] == B[i][j]) {
        detail::BoardEditor::set(b, {i + 1, j + 1, A[i][j]}, CellState::Rook);
      } else {
        detail::BoardEditor::set(b, {i + 1, j + 1, A[i][j]}, CellState::Dot);
        detail::BoardEditor::set(b, {i + 1, j + 1, B[i][j]}, CellState::Dot);
      }
    }
  return b;
}

struct Proc {
  int status = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  Proc p;
  std::string cmd = std::string("\"") + PLSC_CLI + "\" " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), got);
  int st = pclose(f);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

// ---------------------------------------------------------------------------

std::pair<bool, std::string> hall() {
  Rng rng(1001);
  int total = 0, ok = 0;
  double spent = 0;
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r < n; ++r)
      for (int rep = 0; rep < 200; ++rep) {
        Grid ls = testkit::random_latin_square(n, rng);
        Grid rect(ls.begin(), ls.begin() + r);
        auto t0 = Clock::now();
        Grid g = hall_complete(rect);
        spent += seconds_since(t0);
        ++total;
        ok += testkit::latin_square(g) && testkit::contains(g, rect);
      }
  std::ostringstream os;
  os << "Hall completion " << ok << "/" << total << " rectangles (1<=r<n<=7), " << spent
     << " s (< 5 s)";
  return {ok == total && spent < 5.0, os.str()};
}

std::pair<bool, std::string> ryser() {
  Rng rng(1002);
  int total = 0, agree = 0, failing = 0;
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        for (int rep = 0; rep < 40; ++rep) {
          Grid rect = testkit::random_latin_rectangle(r, s, n, rng);
          auto cnt = testkit::symbol_counts(rect, n);
          bool cond = true;
          for (int v = 1; v <= n; ++v) cond = cond && cnt[v] >= r + s - n;
          bool extended = false;
          try {
            Grid g = ryser_extend(rect, n);
            extended = testkit::latin_square(g) && testkit::contains(g, testkit::pad(rect, n));
          } catch (const InvalidInput&) {
          }
          bool oracle = count_completions(from_pls(testkit::pad(rect, n)), 1).count > 0;
          ++total;
          failing += !cond;
          agree += extended == cond && oracle == cond;
        }
  std::ostringstream os;
  os << "Ryser condition, extension and oracle agree on " << agree << "/" << total
     << " rectangles (" << failing << " failing the condition)";
  return {agree == total && failing > 0, os.str()};
}

std::pair<bool, std::string> cruse() {
  Rng rng(1003);
  int total = 0, agree = 0, positive = 0;
  for (int rep = 0; rep < 1500; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    int r = 1 + static_cast<int>(rng() % (n - 1)), s = 1 + static_cast<int>(rng() % (n - 1)),
        t = 1 + static_cast<int>(rng() % (n - 1));
    Grid part = testkit::random_brick_fill(n, r, s, t, static_cast<int>(rng() % (r * s + 1)), rng);
    Plsc b = from_pls(part);
    Box box = Box::corner(n, r, s, t);
    bool check = cruse_check(b, box).pass();
    bool embed = false;
    try {
      Grid g = cruse_embed(b, box);
      embed = testkit::latin_square(g);
      for (int i = 1; i <= n && embed; ++i)
        for (int j = 1; j <= n && embed; ++j) {
          int v = g[i - 1][j - 1], p = part[i - 1][j - 1];
          embed = p ? v == p : !box.contains({i, j, v});
        }
    } catch (const InvalidInput&) {
    }
    bool oracle = count_completions(brick_embedding_board(b, box), 1).count > 0;
    ++total;
    positive += oracle;
    agree += check == embed && embed == oracle;
  }
  std::ostringstream os;
  os << "cruse_check, cruse_embed and oracle agree on " << agree << "/" << total << " bricks ("
     << positive << " embeddable)";
  return {agree == total && positive > 0 && positive < total, os.str()};
}

std::pair<bool, std::string> caps() {
  int bad_forms = 0, bad_box = 0, bad_rbc = 0, shapes = 0;
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          long c = cap(n, r, s, t);
          bad_forms += cap_form_rs(n, r, s, t) != c || cap_form_st(n, r, s, t) != c ||
                       cap_form_rt(n, r, s, t) != c;
        }
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t) {
          ++shapes;
          bad_box += max_box_rooks(n, r, s, t) != effective_cap(n, r, s, t);
          bad_rbc += max_rbc_rooks(n, r, s, t) != rbc_capacity(n, r, s, t);
        }
  bool fixed = cap(6, 4, 4, 4) == 12 && rbc_capacity(6, 4, 4, 4) == 12;
  std::ostringstream os;
  os << "cap forms mismatches " << bad_forms << " (n<=12); cap(6,4,4,4)=" << cap(6, 4, 4, 4)
     << ", rbc_capacity(6,4,4,4)=" << rbc_capacity(6, 4, 4, 4) << "; oracle mismatches over "
     << shapes << " shapes: box " << bad_box << ", couple " << bad_rbc;
  return {bad_forms == 0 && bad_box == 0 && bad_rbc == 0 && fixed, os.str()};
}

std::pair<bool, std::string> matching_suites() {
  Rng rng(1005);
  int bad_k = 0, bad_l = 0, bad_a = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8), k = 1 + static_cast<int>(rng() % n);
    BinMatrix m = random_regular(n, k, rng);
    auto parts = koenig_decompose(m, k);
    std::vector<int> sum(n * n, 0);
    bool ok = static_cast<int>(parts.size()) == k;
    for (const auto& p : parts) {
      ok = ok && p.is_permutation_matrix();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum[i * n + j] += p.get(i, j);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ok = ok && sum[i * n + j] == (m.get(i, j) ? 1 : 0);
    bad_k += !ok;
  }
  for (int done = 0; done < 1000;) {
    int p = 1 + static_cast<int>(rng() % 8), q = 1 + static_cast<int>(rng() % 8);
    int m = static_cast<int>(rng() % (p + 1));
    int M = m + static_cast<int>(rng() % (p - m + 1));
    long lo = static_cast<long>(m) * q, hi = std::min<long>(static_cast<long>(M) * q, p * q);
    if (lo > hi) continue;
    long total = lo + static_cast<long>(rng() % (hi - lo + 1));
    std::vector<int> c(p, 0);
    for (long x = 0; x < total;) {
      int j = static_cast<int>(rng() % p);
      if (c[j] < q) {
        ++c[j];
        ++x;
      }
    }
    bool ok = true;
    try {
      BinMatrix t = staircase_fill(p, q, c, m, M);
      for (int j = 0; j < p; ++j) ok = ok && t.col_sum(j) == c[j];
      for (int i = 0; i < q; ++i) ok = ok && t.row_sum(i) >= m && t.row_sum(i) <= M;
    } catch (const std::exception&) {
      ok = false;
    }
    bad_l += !ok;
    ++done;
  }
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8), k = static_cast<int>(rng() % (n + 1));
    int r = static_cast<int>(rng() % (n + 1));
    BinMatrix full = k ? random_regular(n, k, rng) : BinMatrix(n, n);
    BinMatrix a(r, n);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) a.set(i, j, full.get(i, j));
    bool ok = true;
    try {
      BinMatrix out = ryser_adjoin(a, k);
      for (int i = 0; i < n; ++i) ok = ok && out.row_sum(i) == k && out.col_sum(i) == k;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) ok = ok && out.get(i, j) == a.get(i, j);
    } catch (const std::exception&) {
      ok = false;
    }
    bad_a += !ok;
  }
  std::ostringstream os;
  os << "failures: koenig_decompose " << bad_k << "/1000, staircase_fill " << bad_l
     << "/1000, ryser_adjoin " << bad_a << "/1000";
  return {bad_k + bad_l + bad_a == 0, os.str()};
}

std::pair<bool, std::string> confluence() {
  Rng rng(1006);
  int mismatches = 0, comparisons = 0, stopped = 0;
  for (int board = 0; board < 100; ++board) {
    int n = 2 + static_cast<int>(rng() % 5);
    Plsc b = from_pls(testkit::random_board(n, rng));
    auto [ref, rref] = primary_extend(b);
    stopped += rref.outcome == ExtensionOutcome::NotCompletable;
    for (int order = 0; order < 10; ++order) {
      Rng pr(rng());
      auto pick = [&](const std::vector<Cell>& d) { return static_cast<std::size_t>(pr() % d.size()); };
      auto [p, rep] = primary_extend(b, pick);
      ++comparisons;
      if (rep.outcome != rref.outcome ||
          (rep.outcome != ExtensionOutcome::NotCompletable && serialize_plsc(p) != serialize_plsc(ref)))
        ++mismatches;
    }
  }
  std::ostringstream os;
  os << mismatches << " mismatches in " << comparisons << " random treatment orders over 100 boards ("
     << stopped << " boards end not completable; compared by outcome)";
  return {mismatches == 0, os.str()};
}

std::pair<bool, std::string> soundness() {
  Rng rng(1007);
  int diff = 0, unsafe = 0, deceptive = 0;
  for (int board = 0; board < 200; ++board) {
    int n = 2 + static_cast<int>(rng() % 4);
    Plsc b = from_pls(testkit::random_board(n, rng));
    auto ref = count_completions(b, 0, true).completions;
    auto [p1, r1] = primary_extend(b);
    auto [p2, r2] = secondary_extend(b);
    diff += count_completions(p1, 0, true).completions != ref;
    diff += count_completions(p2, 0, true).completions != ref;
    for (const Plsc& s : r2.snapshots) {
      if (has_eliminated_file(s)) continue;
      for (const auto& d : deceptive_dots(s).dots) {
        ++deceptive;
        unsafe += !elimination_safe(s, d.dot);
      }
    }
  }
  std::ostringstream os;
  os << "completion sets differ on " << diff << " of 400 comparisons; " << unsafe << " of "
     << deceptive << " deceptive dots unsafe";
  return {diff == 0 && unsafe == 0 && deceptive > 0, os.str()};
}

std::pair<bool, std::string> bug_components() {
  Rng rng(1008);
  BugTally t;
  for (int rep = 0; rep < 10; ++rep) {
    Plsc gw = from_pls(isotope(fixtures::gw6(), rng));
    Plsc cr = secondary_extend(from_pls(isotope(fixtures::cruse(), rng))).first;
    for (const RolePerm& p : RolePerm::all()) {
      tally_bugs(conjugate(gw, p), t);
      tally_bugs(conjugate(cr, p), t);
    }
  }
  for (int rep = 0; rep < 300; ++rep) {
    int n = 2 + static_cast<int>(rng() % 7);
    tally_bugs(overlay(testkit::random_latin_square(n, rng), testkit::random_latin_square(n, rng)), t);
  }
  for (int rep = 0; rep < 300; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    tally_bugs(secondary_extend(from_pls(testkit::random_board(n, rng))).first, t);
  }
  std::ostringstream os;
  os << t.bad << " violations among " << t.bugs
     << " BUGs (0 or 2 solutions, disjoint, solvable iff bipartite)";
  return {t.bad == 0 && t.bugs > 0, os.str()};
}

std::pair<bool, std::string> fixtures_check() {
  auto t0 = Clock::now();
  std::vector<std::string> problems;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  Plsc gw = from_pls(fixtures::gw6());
  need(is_mcs(gw), "GW6 mCS");
  DotGraph g = dot_graph(gw);
  need(g.component_count == 1 && g.regular(3), "GW6 graph connected and 3-regular");
  BugSolutionSet gs = solve_bug(g, bugs(g)[0]);
  need(!gs.solvable() && gs.odd_cycle && gs.odd_cycle->size() == 9, "GW6 odd cycle 9");
  need(count_completions(gw).count == 0, "GW6 completions 0");
  auto gc = fractional_certificate(gw);
  need(gc && gc->verify(), "GW6 certificate");

  Plsc cr = from_pls(fixtures::cruse());
  need(desolate_cells(cr).empty() && primary_extend(cr).first == cr, "Cruse P* = P");
  auto [c2, rep] = secondary_extend(cr);
  bool bivalue = is_mcs(c2);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      int d = popcount(c2.dot_mask(i, j));
      bivalue = bivalue && (d == 0 || d == 2);
    }
  need(bivalue, "Cruse P** bivalue mCS");
  DotGraph cg = dot_graph(c2);
  auto odd = shortest_odd_cycle(cg, bugs(cg)[0]);
  need(cg.component_count == 1 && odd && odd->size() == 7, "Cruse shortest odd cycle 7");
  std::vector<Cell> listed{{1, 2, 5}, {1, 6, 5}, {1, 6, 4}, {5, 6, 4},
                           {5, 2, 4}, {5, 2, 6}, {1, 2, 6}};
  need(is_cycle(cg, listed), "listed 7-cycle");
  need(count_completions(cr).count == 0, "Cruse completions 0");
  auto cc = fractional_certificate(c2);
  need(cc && cc->verify(), "Cruse certificate");
  double spent = seconds_since(t0);
  need(spent < 10.0, "runtime");

  std::ostringstream os;
  os << "GW6 (mCS, 3-regular, odd cycle " << (gs.odd_cycle ? gs.odd_cycle->size() : 0)
     << ", 0 completions, certificate) and Cruse (P*=P, bivalue P**, odd cycle "
     << (odd ? odd->size() : 0) << ", listed cycle, 0 completions, certificate) in " << spent
     << " s (< 10 s)";
  for (const auto& p : problems) os << "; failed: " << p;
  return {problems.empty(), os.str()};
}

std::pair<bool, std::string> compact() {
  Plsc gw = from_pls(fixtures::gw6());
  CompactBrick t = CompactBrick::extract(gw, *closure_hull(gw, true));
  Compactness c = is_compact(t);
  bool checks = true;
  for (int n = 6; n <= 9; ++n) checks = checks && compact_cruse_check(t, n).pass();
  bool embeds = true;
  for (int n = 7; n <= 9; ++n) embeds = embeds && testkit::full_extension_ok(t, c.potential, embed_compact(t, n));
  bool unsolved = !solve_compact(t);
  std::ostringstream os;
  os << "GW6 hull " << t.dim(0) << "x" << t.dim(1) << "x" << t.dim(2) << " compact=" << c.compact
     << " p0=" << c.potential << "; check n=6..9 " << (checks ? "pass" : "FAIL")
     << "; full extensions n=7,8,9 " << (embeds ? "valid" : "INVALID") << "; solve_compact "
     << (unsolved ? "none" : "FOUND");
  return {c.compact && c.potential == 12 && checks && embeds && unsolved, os.str()};
}

std::pair<bool, std::string> cli() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("plsc-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Rng rng(1011);
  int lib_ok = 0, cli_ok = 0;
  for (int rep = 0; rep < 100; ++rep) {
    int n = 2 + static_cast<int>(rng() % 6);
    Plsc b = from_pls(testkit::random_board(n, rng));
    if (rep % 2) b = secondary_extend(b).first;
    std::string text = serialize_plsc(b);
    lib_ok += parse_plsc(text) == b && serialize_plsc(parse_plsc(text)) == text &&
              parse_pls(serialize_pls(b)) == from_pls(to_pls(b).grid);
    fs::path f = dir / ("b" + std::to_string(rep) + ".plsc");
    std::ofstream(f) << text;
    Proc p = run_cli("conjugate \"" + f.string() + "\" ijk --format plsc");
    cli_ok += p.status == 0 && p.out == text;
  }
  Proc g = run_cli(std::string("bug-check \"") + PLSC_FIXTURE_DIR + "/gw6.pls\"");
  Proc c = run_cli(std::string("bug-check \"") + PLSC_FIXTURE_DIR + "/cruse.pls\"");
  fs::remove_all(dir);
  bool gw_ok = g.status == 1 && g.out.find("odd cycle length 9") != std::string::npos;
  bool cr_ok = c.status == 1 && c.out.find("odd cycle length 7") != std::string::npos;
  std::ostringstream os;
  os << "round trips: library " << lib_ok << "/100, CLI " << cli_ok << "/100; bug-check exit "
     << g.status << " (GW6, cycle 9 " << (gw_ok ? "reported" : "MISSING") << "), exit " << c.status
     << " (Cruse, cycle 7 " << (cr_ok ? "reported" : "MISSING") << ")";
  return {lib_ok == 100 && cli_ok == 100 && gw_ok && cr_ok, os.str()};
}

}  // namespace

int main() {
  run(1, hall);
  run(2, ryser);
  run(3, cruse);
  run(4, caps);
  run(5, matching_suites);
  run(6, confluence);
  run(7, soundness);
  run(8, bug_components);
  run(9, fixtures_check);
  run(10, compact);
  run(11, cli);
  std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
