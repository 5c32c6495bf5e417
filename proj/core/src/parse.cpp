#include "lagc/parse.hpp"

#include <cctype>
#include <sstream>

#include "lagc/error.hpp"

namespace lagc {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Expression parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expression e = parse_expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    throw ParseError("syntax error at column " + std::to_string(pos + 1) + ": " + what, 0,
                     pos + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int read_small_int(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail(std::string("expected ") + what);
    if (digits.size() > 6) fail_at(std::string(what) + " too large", start);
    return std::stoi(digits);
  }

  Expression parse_expr() {
    Expression e = parse_term();
    while (true) {
      skip_space();
      if (accept('+')) {
        e += parse_term();
      } else if (peek() == '-') {
        ++pos_;
        e -= parse_term();
      } else {
        return e;
      }
    }
  }

  Expression parse_term() {
    Expression e = parse_unary();
    while (accept('*')) e = e * parse_unary();
    return e;
  }

  Expression parse_unary() {
    skip_space();
    if (accept('-')) return -parse_unary();
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (accept('^')) {
      const int k = read_small_int("exponent");
      return power(base, static_cast<unsigned>(k));
    }
    return base;
  }

  Expression parse_primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (c == '(') {
      ++pos_;
      Expression e = parse_expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail(std::string("unexpected '") + c + "'");
  }

  Expression parse_number() {
    std::string num = read_digits();
    const std::size_t save = pos_;
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      const std::string den = read_digits();
      if (den.empty()) fail("expected denominator");
      Rational q(num + "/" + den);
      if (q.get_den() == 0) fail_at("zero denominator", den_pos);
      q.canonicalize();
      return Expression::constant(sig_, q);
    }
    pos_ = save;
    return Expression::constant(sig_, Rational(num));
  }

  Expression parse_name() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    const std::string digits = read_digits();
    const std::string full = word + digits;
    auto unknown = [&]() { fail_at("unknown symbol '" + full + "'", start); };
    if (digits.empty() || digits.size() > 6) unknown();
    const int k = std::stoi(digits);
    if (k < 1) unknown();

    if (word == "t" || word == "tau") {
      const bool odd = word == "tau";
      if (k > (odd ? sig_.s : sig_.r)) unknown();
      return Expression::time(sig_, odd ? sig_.r + k : k);
    }
    if (word != "x" && word != "th") unknown();
    const bool odd = word == "th";
    if (k > (odd ? sig_.m : sig_.n)) unknown();
    const int coord = odd ? sig_.n + k : k;

    std::vector<int> indices;
    skip_space();
    if (peek() == '[') {
      ++pos_;
      while (true) {
        skip_space();
        if (at_end()) fail("expected ']'");
        if (peek() == ']') {
          ++pos_;
          break;
        }
        const std::size_t idx_pos = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail(std::string("unexpected '") + peek() + "' in jet index");
        }
        const int f = read_small_int("time index");
        if (!sig_.valid_time(f)) fail_at("time index " + std::to_string(f) + " out of range", idx_pos);
        indices.push_back(f);
      }
    }
    return Expression::jet(sig_, coord, indices);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

std::string print_term(const Signature& sig, const Term& term, const Rational& magnitude) {
  std::string out;
  const bool unit = magnitude == 1;
  if (term.empty()) return to_string(magnitude);
  if (!unit) out = to_string(magnitude);
  for (const auto& f : term) {
    if (!out.empty()) out += '*';
    out += to_string(sig, f.symbol);
    if (f.power > 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

ParseError with_line(const ParseError& e, std::size_t line, std::size_t column_offset) {
  std::string msg = e.what();
  return ParseError("line " + std::to_string(line) + ": " + msg, line, e.column() + column_offset);
}

}  // namespace

Expression parse(std::string_view text, const Signature& sig) { return Parser(text, sig).parse_all(); }

std::string print(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, c] : e.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += print_term(e.signature(), term, magnitude);
    first = false;
  }
  return out;
}

Signature parse_signature(std::string_view text) {
  std::string s = trim(text);
  if (s.rfind("sig", 0) == 0 && (s.size() == 3 || std::isspace(static_cast<unsigned char>(s[3])))) {
    s = trim(std::string_view(s).substr(3));
  }
  int n = 0, m = 0, r = 0, t = 0;
  char bar1 = 0, bar2 = 0;
  std::istringstream in(s);
  if (!(in >> n >> bar1 >> m >> r >> bar2 >> t) || bar1 != '|' || bar2 != '|') {
    throw ParseError("malformed signature '" + s + "' (expected n|m r|s)", 0, 1);
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing text after signature: '" + rest + "'", 0, 1);
  return Signature(n, m, r, t);
}

Document read_document(std::istream& in, const std::optional<Signature>& sig_override) {
  Document doc;
  std::string raw;
  std::size_t number = 0;
  bool header_done = false;
  while (std::getline(in, raw)) {
    ++number;
    std::string text = raw.substr(0, raw.find('#'));
    text = trim(text);
    if (text.empty()) continue;
    if (!header_done) {
      if (text.rfind("sig", 0) == 0 && !doc.sig) {
        try {
          doc.sig = parse_signature(text);
        } catch (const ParseError& e) {
          throw with_line(e, number, 0);
        }
        continue;
      }
      if (text == "path" || text == "homotopy" || text == "form" || text == "change") {
        doc.section = text;
        header_done = true;
        continue;
      }
      header_done = true;
    }
    doc.body.push_back(Document::Line{number, text});
  }
  if (sig_override) doc.sig = sig_override;
  if (!doc.sig) throw ParseError("line 1: missing signature header 'sig n|m r|s'", 1, 1);
  return doc;
}

std::vector<Expression> parse_lines(const Document& doc) {
  std::vector<Expression> out;
  for (const auto& line : doc.body) {
    try {
      out.push_back(parse(line.text, *doc.sig));
    } catch (const ParseError& e) {
      throw with_line(e, line.number, 0);
    }
  }
  return out;
}

std::pair<int, Expression> parse_binding(const Document::Line& line, const Signature& sig) {
  const auto eq = line.text.find('=');
  if (eq == std::string::npos) {
    throw ParseError("line " + std::to_string(line.number) + ": expected 'name = expression'",
                     line.number, 1);
  }
  const std::string name = trim(std::string_view(line.text).substr(0, eq));
  int coord = 0;
  try {
    const Expression lhs = parse(name, sig);
    if (lhs.size() == 1 && lhs.terms().begin()->second == 1) {
      const Term& t = lhs.terms().begin()->first;
      if (t.size() == 1 && t[0].power == 1 && t[0].symbol.is_jet() && t[0].symbol.mindex().empty()) {
        coord = t[0].symbol.coord();
      }
    }
  } catch (const ParseError&) {
  }
  if (coord == 0) {
    throw ParseError("line " + std::to_string(line.number) + ": '" + name +
                         "' is not a coordinate name",
                     line.number, 1);
  }
  try {
    return {coord, parse(std::string_view(line.text).substr(eq + 1), sig)};
  } catch (const ParseError& e) {
    throw with_line(e, line.number, eq + 1);
  }
}

std::vector<Expression> parse_bindings(const Document& doc, const Signature& sig) {
  std::vector<std::optional<Expression>> slots(static_cast<std::size_t>(sig.coordinates()));
  for (const auto& line : doc.body) {
    auto [coord, e] = parse_binding(line, sig);
    auto& slot = slots[static_cast<std::size_t>(coord - 1)];
    if (slot) {
      throw ParseError("line " + std::to_string(line.number) + ": coordinate " +
                           coordinate_name(sig, coord) + " bound twice",
                       line.number, 1);
    }
    slot = std::move(e);
  }
  std::vector<Expression> out;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    if (!slots[a]) {
      throw ParseError("unbound coordinate " + coordinate_name(sig, static_cast<int>(a) + 1), 0, 0);
    }
    out.push_back(std::move(*slots[a]));
  }
  return out;
}

}  // namespace lagc
