#include "formalcalc/parse.hpp"

#include "formalcalc/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace formalcalc {

namespace {

// Recursive-descent parser over a single expression string.
// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := '-'? atom ('^' nat)? ; atom := rational | var | '(' expr ')'.
class ExprParser {
public:
  ExprParser(const std::string& text, const Shape& shape, unsigned order,
             const VarScheme& scheme)
      : text_(text), shape_(shape), order_(order), scheme_(scheme) {}

  Fps parse() {
    Fps e = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void error(const std::string& what) {
    fail(errc::parse_error, what + " at column " + std::to_string(pos_ + 1) +
                                " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  unsigned natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      error("expected a number");
    unsigned long v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (pos_ - start > 9) error("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Fps expr() {
    Fps e = term();
    while (true) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        return e;
    }
  }

  Fps term() {
    Fps t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }

  Fps factor() {
    bool neg = eat('-');
    Fps a = atom();
    if (eat('^')) a = a.pow(natural());
    return neg ? Rational(-1) * a : a;
  }

  bool starts_with_prefix(const std::string& prefix) {
    skip_ws();
    if (text_.compare(pos_, prefix.size(), prefix) != 0) return false;
    std::size_t after = pos_ + prefix.size();
    return after < text_.size() && std::isdigit(static_cast<unsigned char>(text_[after]));
  }

  Fps atom() {
    skip_ws();
    if (eat('(')) {
      Fps e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (starts_with_prefix(scheme_.smooth_prefix)) {
      pos_ += scheme_.smooth_prefix.size();
      unsigned i = natural();
      if (i == 0 || i > shape_.n) error("smooth variable index out of range");
      return Fps::smooth_variable(shape_.n, shape_.k, order_, i - 1);
    }
    if (starts_with_prefix(scheme_.formal_prefix)) {
      pos_ += scheme_.formal_prefix.size();
      unsigned j = natural();
      if (j == 0 || j > shape_.k) error("formal variable index out of range");
      return Fps::formal_variable(shape_.n, shape_.k, order_, j - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned num = natural();
      if (eat('/')) {
        unsigned den = natural();
        if (den == 0) error("zero denominator");
        return Fps::constant(shape_.n, shape_.k, order_, Rational(num, den));
      }
      return Fps::constant(shape_.n, shape_.k, order_, Rational(num));
    }
    error("expected a rational, a variable or '('");
  }

  const std::string& text_;
  Shape shape_;
  unsigned order_;
  VarScheme scheme_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses "<label>: <key1>=<int> <key2>=<int>".
void parse_header(const std::string& line, const std::string& label,
                  const std::string& key1, const std::string& key2,
                  std::size_t& out1, std::size_t& out2, std::size_t lineno) {
  std::istringstream is(line);
  std::string tag, kv1, kv2;
  is >> tag >> kv1 >> kv2;
  auto bad = [&] {
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected '" +
                                label + ": " + key1 + "=<int> " + key2 + "=<int>'");
  };
  if (tag != label + ":") bad();
  auto take = [&](const std::string& kv, const std::string& key) -> std::size_t {
    if (kv.compare(0, key.size() + 1, key + "=") != 0) bad();
    std::string num = kv.substr(key.size() + 1);
    if (num.empty()) bad();
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    return static_cast<std::size_t>(std::stoul(num));
  };
  out1 = take(kv1, key1);
  out2 = take(kv2, key2);
  std::string rest;
  if (is >> rest) bad();
}

} // namespace

Fps parse_expression(const std::string& text, const Shape& shape, unsigned order,
                     const VarScheme& scheme) {
  return ExprParser(text, shape, order, scheme).parse();
}

Morphism parse_morphism(const std::string& text, unsigned order) {
  std::istringstream is(text);
  std::string raw;
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (!is_blank(line)) lines.emplace_back(lineno, line);
  }
  if (lines.size() < 2)
    fail(errc::parse_error, "missing source/target header lines");

  std::size_t np, kp, n, k;
  parse_header(lines[0].second, "source", "n'", "k'", np, kp, lines[0].first);
  parse_header(lines[1].second, "target", "n", "k", n, k, lines[1].first);
  Shape src{np, kp}, tgt{n, k};

  std::vector<Fps> cx(n, Fps(np, kp, order)), cy(k, Fps(np, kp, order));
  std::vector<bool> seen(n + k, false);
  for (std::size_t l = 2; l < lines.size(); ++l) {
    const std::string& line = lines[l].second;
    std::string where = "line " + std::to_string(lines[l].first);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(errc::parse_error, where + ": expected '<coordinate> = <expression>'");
    std::istringstream lhs_in(line.substr(0, eq));
    std::string lhs;
    lhs_in >> lhs;
    std::string extra;
    if (lhs.empty() || (lhs_in >> extra))
      fail(errc::parse_error, where + ": malformed assignment left-hand side");
    bool formal = lhs[0] == 'y';
    if (lhs[0] != 'x' && lhs[0] != 'y')
      fail(errc::parse_error, where + ": assignments must target x<i> or y<j>");
    unsigned idx = 0;
    for (std::size_t p = 1; p < lhs.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(lhs[p])))
        fail(errc::parse_error, where + ": malformed coordinate name '" + lhs + "'");
      idx = idx * 10 + static_cast<unsigned>(lhs[p] - '0');
    }
    std::size_t limit = formal ? k : n;
    if (lhs.size() == 1 || idx == 0 || idx > limit)
      fail(errc::parse_error, where + ": coordinate '" + lhs + "' out of range");
    std::size_t slot = (formal ? n : 0) + idx - 1;
    if (seen[slot])
      fail(errc::parse_error, where + ": coordinate '" + lhs + "' assigned twice");
    seen[slot] = true;
    Fps e = parse_expression(line.substr(eq + 1), src, order, VarScheme{});
    if (formal)
      cy[idx - 1] = e;
    else
      cx[idx - 1] = e;
  }
  for (std::size_t i = 0; i < n + k; ++i)
    if (!seen[i]) {
      std::string name = i < n ? "x" + std::to_string(i + 1)
                               : "y" + std::to_string(i - n + 1);
      fail(errc::parse_error, "coordinate '" + name + "' is never assigned");
    }
  return Morphism(src, tgt, std::move(cx), std::move(cy));
}

std::string print_morphism(const Morphism& m) {
  std::ostringstream os;
  os << "source: n'=" << m.src().n << " k'=" << m.src().k << "\n";
  os << "target: n=" << m.tgt().n << " k=" << m.tgt().k << "\n";
  for (std::size_t i = 0; i < m.tgt().n; ++i)
    os << "x" << (i + 1) << " = " << m.cx()[i].to_string("u", "z") << "\n";
  for (std::size_t j = 0; j < m.tgt().k; ++j)
    os << "y" << (j + 1) << " = " << m.cy()[j].to_string("u", "z") << "\n";
  return os.str();
}

Point parse_point(const std::string& text) {
  Point out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - start);
    // Trim whitespace around the entry.
    std::size_t a = piece.find_first_not_of(" \t");
    std::size_t b = piece.find_last_not_of(" \t");
    if (a == std::string::npos)
      fail(errc::parse_error, "empty entry in point '" + text + "'");
    out.push_back(rational_from_string(piece.substr(a, b - a + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace formalcalc
