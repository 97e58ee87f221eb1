#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewcat {

/// 1-based position in the input. Positions never take part in document
/// equality, so a printed and re-parsed document compares equal.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

/// One declaration, block entry or directive. `form` names the statement
/// shape (see the grammar in dsl.cpp) and `args` holds its names in order.
struct Statement {
  std::string form;
  std::vector<std::string> args;
  std::vector<Statement> body;
  SourcePos pos;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct SpecDocument {
  std::vector<Statement> declarations;
  std::vector<Statement> directives;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// Rejected input. Every kind maps to exit status 2.
class InputError : public std::runtime_error {
 public:
  enum class Kind { syntax, resolution, totality, structure };

  InputError(Kind kind, SourcePos pos, const std::string& message);

  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  SourcePos pos_;
  std::string detail_;
};

const char* to_string(InputError::Kind k);

/// Syntax only; names are resolved by resolve() in driver.hpp.
///
///   category C { objects 0 1; mor f: 0 -> 1; comp f id0 = f }
///   map xi: U -> C { u |-> 0; v |-> 0 }
///   run lift-comonad C xi
///
/// Statements end at ';', a newline or '}'. '#' starts a comment. Names
/// that are not plain identifiers are written in double quotes, with \" and
/// \\ as the only escapes.
SpecDocument parse(std::string_view text);

/// Canonical text; parse(print(d)) == d.
std::string print(const SpecDocument& doc);

/// Whether `name` lexes as a single unquoted identifier.
bool is_identifier(std::string_view name);

}  // namespace skewcat
