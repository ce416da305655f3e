#include "loopforge/table_io.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <vector>

#include "loopforge/errors.hpp"

namespace loopforge {

namespace {

struct Token {
  long value;
  int line;
};

std::vector<Token> lex(std::istream& in) {
  std::vector<Token> toks;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(word, &used);
      } catch (const std::exception&) {
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected an integer, got '" + word + "'");
      }
      if (used != word.size())
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": trailing characters in '" + word + "'");
      toks.push_back({v, lineno});
    }
  }
  return toks;
}

}  // namespace

LoopTable read_table(std::istream& in) {
  std::vector<Token> toks = lex(in);
  if (toks.empty()) fail(Errc::parse_error, "empty table: no order given");
  long n = toks.front().value;
  if (n < 1) fail(Errc::parse_error, "line " + std::to_string(toks.front().line) + ": order must be at least 1");
  if (n > max_loop_order())
    fail(Errc::order_cap_exceeded,
         "order " + std::to_string(n) + " exceeds cap " + std::to_string(max_loop_order()));
  std::size_t want = 1 + static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (toks.size() < want)
    fail(Errc::parse_error, "table ends early: expected " + std::to_string(want - 1) + " entries, got " + std::to_string(toks.size() - 1));
  if (toks.size() > want)
    fail(Errc::parse_error, "line " + std::to_string(toks[want].line) + ": extra data after the table");

  std::vector<int> cells(want - 1);
  for (std::size_t i = 1; i < want; ++i) {
    long v = toks[i].value;
    if (v < 1 || v > n)
      fail(Errc::parse_error, "line " + std::to_string(toks[i].line) + ": entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    cells[i - 1] = static_cast<int>(v - 1);
  }
  return LoopTable::from_cells(static_cast<int>(n), std::move(cells));
}

LoopTable read_table_text(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

LoopTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  return read_table(in);
}

std::string format_table(const LoopTable& L) {
  std::ostringstream out;
  int n = L.size();
  out << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << L.mul(x, y) + 1;
    }
    out << '\n';
  }
  return out.str();
}

void write_table_file(const std::string& path, const LoopTable& L) {
  std::ofstream out(path);
  if (!out) fail(Errc::parse_error, "cannot open '" + path + "' for writing");
  out << format_table(L);
  if (!out) fail(Errc::parse_error, "failed writing '" + path + "'");
}

}  // namespace loopforge
