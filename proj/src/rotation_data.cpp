#include "a3/rotation_data.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "a3/errors.hpp"

namespace a3 {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("rotation tables, line " + std::to_string(line) + ": " + msg);
}

// term := INT | [INT] ('t0'|'t1'|'t2')
void parse_term(Cursor& c, int sign, Affine& out, int line) {
  c.skip_ws();
  long long coef = 1;
  bool saw_int = false;
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coef = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek())))
      coef = coef * 10 + (c.s[c.pos++] - '0');
    saw_int = true;
  }
  c.skip_ws();
  if (c.pos + 1 < c.s.size() + 1 && c.pos < c.s.size() && c.peek() == 't') {
    if (c.pos + 1 >= c.s.size() || c.s[c.pos + 1] < '0' || c.s[c.pos + 1] > '2')
      fail(line, "expected t0, t1 or t2");
    int var = c.s[c.pos + 1] - '0';
    c.pos += 2;
    (var == 0 ? out.k0 : var == 1 ? out.k1 : out.k2) += sign * coef;
    return;
  }
  if (!saw_int) fail(line, "expected integer or variable");
  out.c0 += sign * coef;
}

Affine parse_affine(const std::string& text, int line) {
  Affine out;
  Cursor c{text};
  int sign = +1;
  c.skip_ws();
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    sign = c.peek() == '-' ? -1 : +1;
    ++c.pos;
  }
  parse_term(c, sign, out, line);
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-') fail(line, "expected '+' or '-' in expression");
    ++c.pos;
    parse_term(c, op == '-' ? -1 : +1, out, line);
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string strip_parens(std::string s) {
  s = strip(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // only strip a fully enclosing pair
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) return s;  // e.g. "(a)-(b)"
    }
    return strip(s.substr(1, s.size() - 2));
  }
  return s;
}

Component parse_component(std::string text, int line) {
  Component comp;
  text = strip(text);
  bool pos_mark = text.rfind("+-", 0) == 0;
  bool neg_mark = text.rfind("-+", 0) == 0;
  if (pos_mark || neg_mark) text = strip(text.substr(2));
  text = strip_parens(text);
  if (text.rfind("range", 0) == 0) {
    std::string inner = strip(text.substr(5));
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
      fail(line, "range needs parentheses");
    inner = inner.substr(1, inner.size() - 2);
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        comma = i;
        break;
      }
    }
    if (comma == std::string::npos) fail(line, "range needs two endpoints");
    comp.kind = pos_mark ? CompKind::signed_range
                         : (neg_mark ? CompKind::anti_range : CompKind::range);
    comp.a = parse_affine(strip_parens(inner.substr(0, comma)), line);
    comp.b = parse_affine(strip_parens(inner.substr(comma + 1)), line);
    return comp;
  }
  comp.kind = pos_mark ? CompKind::signed_pos
                       : (neg_mark ? CompKind::signed_neg : CompKind::fixed);
  comp.a = parse_affine(text, line);
  return comp;
}

Guard parse_guard(const std::string& text, int line) {
  Guard g;
  std::size_t op_pos;
  if ((op_pos = text.find("<=")) != std::string::npos)
    g.op = -1;
  else if ((op_pos = text.find(">=")) != std::string::npos)
    g.op = +1;
  else if ((op_pos = text.find('=')) != std::string::npos)
    g.op = 0;
  else
    fail(line, "guard needs <=, >= or =");
  std::string lhs = strip(text.substr(0, op_pos));
  std::string rhs = strip(text.substr(op_pos + (g.op == 0 ? 1 : 2)));
  if (lhs.size() != 2 || lhs[0] != 't' || lhs[1] < '0' || lhs[1] > '2')
    fail(line, "guard left side must be t0, t1 or t2");
  g.var = lhs[1] - '0';
  try {
    g.bound = std::stoll(rhs);
  } catch (const std::exception&) {
    fail(line, "guard bound must be an integer");
  }
  return g;
}

}  // namespace

std::vector<BranchTable> parse_rotation_tables(const std::string& text) {
  std::vector<BranchTable> tables;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  BranchTable* current = nullptr;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("table ", 0) == 0) {
      tables.push_back(BranchTable{});
      current = &tables.back();
      current->id = strip(s.substr(6));
      if (current->id.empty()) fail(line, "table needs an id");
      continue;
    }
    if (!current) fail(line, "content before first table");
    if (s.rfind("guard ", 0) == 0) {
      std::string rest = s.substr(6);
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        std::string one =
            comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
        if (!strip(one).empty()) current->guards.push_back(parse_guard(strip(one), line));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (current->guards.empty()) fail(line, "empty guard");
      continue;
    }
    if (s == "ambient tight") {
      current->tight = true;
      continue;
    }
    if (s == "ambient overtwisted") {
      current->tight = false;
      continue;
    }
    if (s.rfind("pattern ", 0) == 0) {
      std::string rest = s.substr(8);
      TablePattern pat;
      std::size_t at = rest.find('@');
      if (at != std::string::npos) {
        pat.decoration = strip(rest.substr(at + 1));
        rest = rest.substr(0, at);
      }
      std::vector<std::string> parts;
      std::size_t start = 0;
      while (true) {
        std::size_t bar = rest.find('|', start);
        parts.push_back(strip(bar == std::string::npos ? rest.substr(start)
                                                       : rest.substr(start, bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (parts.size() != 4) fail(line, "pattern needs r0 | r1 | r2 | d3");
      for (int i = 0; i < 3; ++i) pat.r[i] = parse_component(parts[i], line);
      pat.d3 = parse_rat(parts[3]);
      current->patterns.push_back(std::move(pat));
      continue;
    }
    fail(line, "unrecognized line: " + s);
  }
  for (const auto& t : tables) {
    if (t.guards.empty()) throw ParseError("table '" + t.id + "' has no guard");
    if (t.patterns.empty()) throw ParseError("table '" + t.id + "' has no patterns");
  }
  return tables;
}

const std::vector<BranchTable>& rotation_tables() {
  static const std::vector<BranchTable> tables = [] {
    const char* override_path = std::getenv("A3_ROTATION_TABLES");
    if (override_path && *override_path) {
      std::ifstream f(override_path);
      if (!f) throw ParseError(std::string("cannot open A3_ROTATION_TABLES file ") + override_path);
      std::ostringstream buf;
      buf << f.rdbuf();
      return parse_rotation_tables(buf.str());
    }
    return parse_rotation_tables(default_rotation_tables_text());
  }();
  return tables;
}

}  // namespace a3
