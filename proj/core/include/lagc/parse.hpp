#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagc/expression.hpp"
#include "lagc/signature.hpp"

namespace lagc {

/// Parses one expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INT)?
///   primary := INT ('/' INT)? | name ('[' INT* ']')? | '(' expr ')'
///   name    := 'x'INT | 'th'INT | 't'INT | 'tau'INT
///
/// A jet suffix [F1 ... Fk] means D_{F1} ... D_{Fk} applied to the coordinate.
/// Throws ParseError with a 1-based column (line 0).
Expression parse(std::string_view text, const Signature& sig);

/// Canonical text. parse(print(e), e.signature()) == e.
std::string print(const Expression& e);

/// "n|m r|s", optionally prefixed by the keyword "sig".
Signature parse_signature(std::string_view text);

/// Line-oriented input file: an optional `sig n|m r|s` header, an optional
/// section keyword (path, homotopy, form, change) and body lines. Blank lines
/// and `#` comments are skipped.
struct Document {
  struct Line {
    std::size_t number = 0;
    std::string text;
  };

  std::optional<Signature> sig;
  std::string section;
  std::vector<Line> body;
};

/// Reads a document; `sig_override`, when given, replaces the header.
/// Throws ParseError when neither is present.
Document read_document(std::istream& in, const std::optional<Signature>& sig_override = {});

/// Parses every body line as an expression, rethrowing errors with the line
/// number filled in.
std::vector<Expression> parse_lines(const Document& doc);

/// Parses a line "name = expr" where name is a coordinate (x1, th2). Returns
/// the coordinate index and the expression, parsed under `sig`.
std::pair<int, Expression> parse_binding(const Document::Line& line, const Signature& sig);

/// Reads a full binding table (one line per coordinate, each exactly once).
std::vector<Expression> parse_bindings(const Document& doc, const Signature& sig);

}  // namespace lagc
