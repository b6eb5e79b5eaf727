#include "repvar/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "repvar/errors.hpp"

namespace repvar {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  int pos = 0;  // within the line

  int col() const { return pos + 1; }
  bool done() const { return pos >= static_cast<int>(s.size()); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c)
      throw ParseError("expected '" + std::string(1, c) + "' " + what, line,
                       col());
    ++pos;
  }
  std::string ident() {
    skip_ws();
    int start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                       s[pos] == '_'))
      ++pos;
    if (pos == start)
      throw ParseError("expected an identifier", line, col());
    return s.substr(start, pos - start);
  }
  long long integer(const std::string& what) {
    skip_ws();
    int start = pos;
    if (peek() == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && s[start] == '-'))
      throw ParseError("expected an integer for " + what, line, col());
    return std::stoll(s.substr(start, pos - start));
  }
  void end_of_line() {
    skip_ws();
    if (!done() && peek() != '#')
      throw ParseError("unexpected trailing text", line, col());
  }
};

}  // namespace

TruncatedAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  long long vertices = -1, loewy = -1;
  std::vector<Arrow> arrows;
  std::set<std::string> names;

  while (std::getline(in, raw)) {
    ++lineno;
    Cursor c{raw, lineno};
    c.skip_ws();
    if (c.done() || c.peek() == '#') continue;
    std::string key = c.ident();
    if (key == "vertices") {
      c.expect(':', "after 'vertices'");
      vertices = c.integer("the vertex count");
      if (vertices < 0)
        throw ParseError("vertex count must be non-negative", lineno, 1);
      c.end_of_line();
    } else if (key == "arrow") {
      if (vertices < 0)
        throw ParseError("'vertices:' must come before arrows", lineno, 1);
      std::string name = c.ident();
      if (!names.insert(name).second)
        throw ParseError("duplicate arrow name '" + name + "'", lineno,
                         c.col());
      c.expect(':', "after the arrow name");
      int scol = c.col();
      long long src = c.integer("the source vertex");
      c.expect('-', "in '->'");
      c.expect('>', "in '->'");
      int tcol = c.col();
      long long tgt = c.integer("the target vertex");
      c.end_of_line();
      if (src < 1 || src > vertices)
        throw ParseError("arrow '" + name + "' starts at unknown vertex " +
                             std::to_string(src),
                         lineno, scol);
      if (tgt < 1 || tgt > vertices)
        throw ParseError("arrow '" + name + "' ends at unknown vertex " +
                             std::to_string(tgt),
                         lineno, tcol);
      arrows.push_back(
          Arrow{name, static_cast<int>(src), static_cast<int>(tgt)});
    } else if (key == "loewy_bound") {
      c.expect(':', "after 'loewy_bound'");
      int vcol = c.col();
      loewy = c.integer("the Loewy bound");
      if (loewy < 0)
        throw ParseError("loewy_bound must be non-negative", lineno, vcol);
      c.end_of_line();
    } else {
      throw ParseError("unknown directive '" + key + "'", lineno, 1);
    }
  }
  if (vertices < 0) throw ParseError("missing 'vertices:' line", lineno, 1);
  if (loewy < 0) throw ParseError("missing 'loewy_bound:' line", lineno, 1);
  return TruncatedAlgebra(
      Quiver(static_cast<int>(vertices), std::move(arrows)),
      static_cast<int>(loewy));
}

TruncatedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string format_algebra(const TruncatedAlgebra& a) {
  std::ostringstream os;
  os << "vertices: " << a.quiver.n << "\n";
  for (const Arrow& ar : a.quiver.arrows)
    os << "arrow " << ar.name << ": " << ar.source << " -> " << ar.target
       << "\n";
  os << "loewy_bound: " << a.loewy_bound << "\n";
  return os.str();
}

DimVector parse_dim_vector(const std::string& text, int expected_size) {
  std::vector<int> entries;
  Cursor c{text, 1};
  while (true) {
    long long v = c.integer("a dimension entry");
    if (v < 0) throw ParseError("dimension entries must be >= 0", 1, c.col());
    entries.push_back(static_cast<int>(v));
    c.skip_ws();
    if (c.done()) break;
    c.expect(',', "between dimension entries");
  }
  if (expected_size >= 0 && static_cast<int>(entries.size()) != expected_size)
    throw ParseError("dimension vector has " +
                         std::to_string(entries.size()) + " entries, quiver has " +
                         std::to_string(expected_size) + " vertices",
                     1, 1);
  return DimVector(std::move(entries));
}

SemisimpleSequence parse_layering(const std::string& text, int vertex_count,
                                  int loewy_bound) {
  std::vector<std::string> segments;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      segments.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  segments.push_back(cur);
  if (static_cast<int>(segments.size()) != loewy_bound + 1)
    throw ParseError("layering has " + std::to_string(segments.size()) +
                         " layers, expected " + std::to_string(loewy_bound + 1),
                     1, 1);
  SemisimpleSequence s = SemisimpleSequence::zeros(vertex_count, loewy_bound);
  for (size_t l = 0; l < segments.size(); ++l) {
    Cursor c{segments[l], 1};
    c.skip_ws();
    if (c.done()) continue;  // zero layer
    while (true) {
      long long vtx = c.integer("a vertex id");
      if (vtx < 1 || vtx > vertex_count)
        throw ParseError("layering references unknown vertex " +
                             std::to_string(vtx),
                         1, c.col());
      c.expect(':', "between vertex and multiplicity");
      long long mult = c.integer("a multiplicity");
      if (mult < 0)
        throw ParseError("multiplicities must be >= 0", 1, c.col());
      s.layers[l][static_cast<int>(vtx) - 1] += static_cast<int>(mult);
      c.skip_ws();
      if (c.done()) break;
      c.expect(',', "between layer entries");
    }
  }
  return s;
}

}  // namespace repvar
