#include "rainbowlab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Non-blank lines not starting with '#'.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.emplace_back(line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("malformed ") + what + ": '" + tok + "'");
  }
  if (used != tok.size() || v < INT32_MIN || v > INT32_MAX)
    throw InputError(std::string("malformed ") + what + ": '" + tok + "'");
  return static_cast<int>(v);
}

int parse_index(const std::string& tok) {
  const int v = parse_int(tok, "index");
  if (v < 0) throw InputError("negative index: '" + tok + "'");
  return v;
}

}  // namespace

PointSet parse_pointset(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("point set: missing header line 'd n'");
  const auto header = tokens(lines[0]);
  if (header.size() != 2) throw InputError("point set: header must be 'd n'");
  const int d = parse_int(header[0], "dimension");
  const int n = parse_int(header[1], "point count");
  if (d < 1) throw InputError("point set: dimension must be >= 1");
  if (n < 0) throw InputError("point set: point count must be >= 0");
  if (static_cast<int>(lines.size()) - 1 != n)
    throw InputError("point set: header announces " + std::to_string(n) + " points, found " +
                     std::to_string(lines.size() - 1));
  PointSet X(d);
  for (int i = 0; i < n; ++i) {
    const auto toks = tokens(lines[static_cast<std::size_t>(i + 1)]);
    if (static_cast<int>(toks.size()) != d)
      throw InputError("point set: point " + std::to_string(i) + " has " + std::to_string(toks.size()) +
                       " coordinates, expected " + std::to_string(d));
    RationalPoint p;
    for (const auto& t : toks) p.coords.push_back(parse_rational(t));
    X.push_back(std::move(p));
  }
  return X;
}

std::string format_pointset(const PointSet& X) {
  std::string out = std::to_string(X.dim()) + " " + std::to_string(X.size()) + "\n";
  for (const auto& p : X.points()) {
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
      if (k) out += ' ';
      out += to_string(p.coords[k]);
    }
    out += '\n';
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<IndexSet> classes;
  int total = 0;
  for (const auto& line : content_lines(text)) {
    IndexSet cls;
    for (const auto& t : tokens(line)) cls.push_back(parse_index(t));
    total += static_cast<int>(cls.size());
    classes.push_back(std::move(cls));
  }
  return Partition(total, std::move(classes));
}

std::string format_partition(const std::vector<IndexSet>& classes) {
  std::string out;
  for (const auto& c : classes) out += format_index_set(c) + "\n";
  return out;
}

std::string format_partition(const Partition& E) { return format_partition(E.classes()); }

Coloring parse_coloring(std::string_view text, std::optional<int> colors) {
  std::vector<std::pair<IndexSet, Color>> entries;
  int r = -1;
  int n = 0;
  Color max_color = 0;
  for (const auto& line : content_lines(text)) {
    const auto toks = tokens(line);
    if (toks.size() < 2) throw InputError("coloring: each line needs indices and a color");
    if (r == -1) r = static_cast<int>(toks.size()) - 1;
    if (static_cast<int>(toks.size()) - 1 != r) throw InputError("coloring: lines disagree on arity");
    IndexSet s;
    for (int i = 0; i < r; ++i) s.push_back(parse_index(toks[static_cast<std::size_t>(i)]));
    if (!strictly_increasing(s)) throw InputError("coloring: indices must be strictly increasing: '" + line + "'");
    const int col = parse_int(toks.back(), "color");
    if (col < 0) throw InputError("coloring: negative color");
    n = std::max(n, s.back() + 1);
    max_color = std::max(max_color, static_cast<Color>(col));
    entries.emplace_back(std::move(s), static_cast<Color>(col));
  }
  if (entries.empty()) throw InputError("coloring: no entries");
  const int c = colors.value_or(static_cast<int>(max_color) + 1);
  if (static_cast<int>(max_color) >= c) throw InputError("coloring: color outside the declared range");
  Coloring g(n, r, c);
  if (entries.size() != g.size())
    throw InputError("coloring: " + std::to_string(entries.size()) + " entries, but C(" + std::to_string(n) + ", " +
                     std::to_string(r) + ") = " + std::to_string(g.size()) + " subsets");
  std::vector<bool> filled(g.size(), false);
  for (const auto& [s, col] : entries) {
    const auto k = g.rank(s);
    if (filled[k]) throw InputError("coloring: subset listed twice: " + format_index_set(s));
    filled[k] = true;
    g.set(s, col);
  }
  return g;
}

std::string format_coloring(const Coloring& g) {
  std::string out;
  const auto colors = g.lex_colors();
  std::size_t i = 0;
  for_each_combination(g.n(), g.r(), [&](std::span<const Index> s) {
    out += format_index_set(s) + " " + std::to_string(colors[i++]) + "\n";
    return true;
  });
  return out;
}

std::vector<BinaryWord> parse_words(std::string_view text) {
  std::vector<BinaryWord> out;
  for (const auto& line : content_lines(text)) {
    const auto toks = tokens(line);
    if (toks.size() != 1) throw InputError("word file: one bit string per line");
    out.emplace_back(toks[0]);
  }
  return out;
}

std::string format_words(std::span<const BinaryWord> words) {
  std::string out;
  for (const auto& w : words) out += w.str() + "\n";
  return out;
}

IndexSet parse_index_set(std::string_view text) {
  IndexSet out;
  for (const auto& t : tokens(text)) out.push_back(parse_index(t));
  return out;
}

std::string format_index_set(std::span<const Index> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rainbowlab
