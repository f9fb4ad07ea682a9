#include "plsc/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "plsc/error.hpp"

namespace plsc {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Significant lines, tokenised on whitespace.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line l{number, {}};
    std::string tok;
    while (ls >> tok) l.tokens.push_back(tok);
    if (l.tokens.empty() || l.tokens.front()[0] == '#') continue;
    out.push_back(std::move(l));
  }
  return out;
}

int to_int(const std::string& tok, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

Grid parse_pls_grid(std::string_view text) {
  auto lines = significant_lines(text);
  const int n = static_cast<int>(lines.size());
  if (n == 0) throw ParseError(0, "empty square");
  if (n > kMaxOrder) throw ParseError(lines.back().number, "order exceeds " + std::to_string(kMaxOrder));
  Grid g(n, std::vector<int>(n, 0));
  std::vector<std::set<int>> cols(n);
  for (int i = 0; i < n; ++i) {
    const Line& l = lines[i];
    if (static_cast<int>(l.tokens.size()) != n)
      throw ParseError(l.number, "expected " + std::to_string(n) + " tokens, found " +
                                     std::to_string(l.tokens.size()));
    std::set<int> row;
    for (int j = 0; j < n; ++j) {
      const std::string& tok = l.tokens[j];
      if (tok == ".") continue;
      int v = to_int(tok, l.number, "token");
      if (v < 1 || v > n) throw ParseError(l.number, "symbol " + tok + " out of range 1.." + std::to_string(n));
      if (!row.insert(v).second) throw ParseError(l.number, "symbol " + tok + " repeated in row");
      if (!cols[j].insert(v).second)
        throw ParseError(l.number, "symbol " + tok + " repeated in column " + std::to_string(j + 1));
      g[i][j] = v;
    }
  }
  return g;
}

Plsc parse_pls(std::string_view text) { return from_pls(parse_pls_grid(text)); }

std::string serialize_pls(const Grid& grid) {
  std::string out;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j] ? std::to_string(row[j]) : ".";
    }
    out += '\n';
  }
  return out;
}

std::string serialize_pls(const Plsc& board) { return serialize_pls(to_pls(board).grid); }

Plsc parse_plsc(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "missing PLSC header");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != "PLSC") throw ParseError(h.number, "expected 'PLSC <n>'");
  int n = to_int(h.tokens[1], h.number, "order");
  if (n < 1 || n > kMaxOrder) throw ParseError(h.number, "order out of range");
  Plsc b = detail::BoardEditor::make(n, CellState::Empty);
  // Rooks per file, to reject attacks and dots in rook files.
  std::vector<int> rook_line(3 * n * n, 0);
  auto key = [n](const FileId& f) {
    return static_cast<int>(f.axis) * n * n + (f.a - 1) * n + (f.b - 1);
  };
  std::vector<std::pair<Cell, int>> dots;
  for (std::size_t x = 1; x < lines.size(); ++x) {
    const Line& l = lines[x];
    if (l.tokens.size() != 4 || (l.tokens[0] != "rook" && l.tokens[0] != "dot"))
      throw ParseError(l.number, "expected 'rook i j k' or 'dot i j k'");
    Cell c{to_int(l.tokens[1], l.number, "index"), to_int(l.tokens[2], l.number, "index"),
           to_int(l.tokens[3], l.number, "index")};
    if (!b.in_range(c)) throw ParseError(l.number, "index out of range 1.." + std::to_string(n));
    if (b.at(c) != CellState::Empty) throw ParseError(l.number, "cell declared twice");
    if (l.tokens[0] == "rook") {
      for (const FileId& f : files_through(c))
        if (rook_line[key(f)]++) throw ParseError(l.number, "rook attacks an earlier rook");
      detail::BoardEditor::set(b, c, CellState::Rook);
    } else {
      detail::BoardEditor::set(b, c, CellState::Dot);
      dots.emplace_back(c, l.number);
    }
  }
  for (const auto& [c, line] : dots)
    for (const FileId& f : files_through(c))
      if (rook_line[key(f)]) throw ParseError(line, "dot in a file that holds a rook");
  return b;
}

std::string serialize_plsc(const Plsc& board) {
  std::ostringstream os;
  os << "PLSC " << board.order() << '\n';
  for (const Cell& c : board.rooks()) os << "rook " << c.i << ' ' << c.j << ' ' << c.k << '\n';
  for (const Cell& c : board.dots()) os << "dot " << c.i << ' ' << c.j << ' ' << c.k << '\n';
  return os.str();
}

Plsc parse_board(std::string_view text) {
  auto lines = significant_lines(text);
  if (!lines.empty() && lines.front().tokens.front() == "PLSC") return parse_plsc(text);
  return parse_pls(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Plsc read_board_file(const std::string& path) { return parse_board(read_text_file(path)); }

std::string render_candidates(const Plsc& board) {
  const int n = board.order();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto cand = candidate_set(board, i, j);
      std::string s;
      if (!cand) {
        for (int k = 1; k <= n; ++k)
          if (board.is_rook(Cell{i, j, k})) s = std::to_string(k);
      } else {
        s = "(";
        for (std::size_t x = 0; x < cand->size(); ++x) {
          if (x && n >= 10) s += ',';
          s += std::to_string((*cand)[x]);
        }
        s += ")";
      }
      width = std::max(width, s.size());
      cells[i - 1][j - 1] = s;
    }
  std::string out;
  for (const auto& row : cells) {
    for (int j = 0; j < n; ++j) {
      std::string s = row[j];
      if (j + 1 < n) s.resize(width, ' ');
      out += s;
      if (j + 1 < n) out += ' ';
    }
    out += '\n';
  }
  return out;
}

std::string export_graph(const DotGraph& g) {
  auto edges = g.edges();
  std::ostringstream os;
  os << "GRAPH " << g.vertices.size() << ' ' << edges.size() << '\n';
  for (const Cell& c : g.vertices) os << "v " << c.i << ' ' << c.j << ' ' << c.k << '\n';
  for (auto [a, b] : edges) os << "e " << a << ' ' << b << '\n';
  return os.str();
}

namespace fixtures {

Grid gw6() {
  return {{1, 2, 3, 4, 5, 6}, {2, 3, 5, 6, 1, 4}, {5, 4, 6, 1, 2, 3},
          {0, 0, 0, 0, 3, 1}, {0, 0, 0, 0, 6, 2}, {0, 0, 0, 0, 4, 5}};
}

Grid cruse() {
  return {{3, 0, 2, 1, 0, 0}, {4, 1, 0, 0, 0, 0}, {0, 3, 4, 2, 0, 0},
          {0, 2, 0, 4, 0, 0}, {0, 0, 0, 0, 5, 0}, {0, 0, 0, 0, 0, 6}};
}

}  // namespace fixtures

}  // namespace plsc
