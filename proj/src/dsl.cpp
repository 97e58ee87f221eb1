#include "skewcat/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>

namespace skewcat {

InputError::InputError(Kind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + message),
      kind_(kind),
      pos_(pos),
      detail_(message) {}

const char* to_string(InputError::Kind k) {
  switch (k) {
    case InputError::Kind::syntax: return "syntax";
    case InputError::Kind::resolution: return "resolution";
    case InputError::Kind::totality: return "totality";
    case InputError::Kind::structure: return "structure";
  }
  return "input";
}

namespace {

// ---- Grammar ---------------------------------------------------------------
//
// Each statement is a flat token sequence matched against a pattern, with an
// optional block of statements from the named context. In a pattern, `$` is
// one identifier and `$*` the remaining identifiers; anything else is a
// keyword or punctuation that must appear literally.

struct Form {
  std::string_view context;
  std::string_view name;
  std::string_view pattern;
  std::string_view block;  // context of the body, empty when none is allowed
};

constexpr std::array kForms{
    Form{"top", "category", "category $", "category"},
    Form{"top", "map", "map $ : $ -> $", "map"},
    Form{"top", "fibred", "fibred $ over $", "fibred"},
    Form{"top", "functor", "functor $ : $ -> $", "functor"},
    Form{"top", "adjunction", "adjunction $ : $ -| $", "adjunction"},
    Form{"top", "reflection", "adjunction $ = reflect $ onto $*", ""},
    Form{"top", "skew", "skew $ on $", "skew"},
    Form{"top", "warping", "warping $ = $ $", ""},
    Form{"top", "comonad", "comonad $ on $", "comonad"},
    Form{"top", "run", "run $ $*", ""},

    Form{"category", "objects", "objects $*", ""},
    Form{"category", "identity", "identity $ = $", ""},
    Form{"category", "mor", "mor $ : $ -> $", ""},
    Form{"category", "comp", "comp $ $ = $", ""},

    Form{"map", "assign", "$ |-> $", ""},
    Form{"functor", "assign", "$ |-> $", ""},
    Form{"fibred", "fibre", "$ : $*", ""},

    Form{"adjunction", "unit", "unit $ = $", ""},
    Form{"adjunction", "counit", "counit $ = $", ""},

    Form{"skew", "unit", "unit $", ""},
    Form{"skew", "tensor", "tensor $ $ = $", ""},
    Form{"skew", "tensor-map", "tensor-map $ $ = $", ""},
    Form{"skew", "alpha", "alpha $ $ $ = $", ""},
    Form{"skew", "lambda", "lambda $ = $", ""},
    Form{"skew", "rho", "rho $ = $", ""},

    Form{"comonad", "assign", "$ |-> $", ""},
    Form{"comonad", "delta", "delta $ = $", ""},
    Form{"comonad", "eps", "eps $ = $", ""},
    Form{"comonad", "gamma", "gamma $ $ = $", ""},
};

std::vector<std::string_view> words(std::string_view pattern) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < pattern.size()) {
    auto j = pattern.find(' ', i);
    if (j == std::string_view::npos) j = pattern.size();
    out.push_back(pattern.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

const Form* find_form(std::string_view context, std::string_view name) {
  for (const auto& f : kForms)
    if (f.context == context && f.name == name) return &f;
  return nullptr;
}

// ---- Lexer -----------------------------------------------------------------

enum class Tok { ident, punct, sep, lbrace, rbrace, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  bool quoted = false;  // quoted names never match keywords
};

bool ident_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '\'' || c == '.' || u >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      const SourcePos at{line_, col_};
      if (c == '\n') {
        out.push_back({Tok::sep, "\n", at});
        advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
      } else if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance(1);
      } else if (c == ';') {
        out.push_back({Tok::sep, ";", at});
        advance(1);
      } else if (c == '{') {
        out.push_back({Tok::lbrace, "{", at});
        advance(1);
      } else if (c == '}') {
        out.push_back({Tok::rbrace, "}", at});
        advance(1);
      } else if (c == ':' || c == '=') {
        out.push_back({Tok::punct, std::string(1, c), at});
        advance(1);
      } else if (starts("->") || starts("-|")) {
        out.push_back({Tok::punct, std::string(s_.substr(i_, 2)), at});
        advance(2);
      } else if (starts("|->")) {
        out.push_back({Tok::punct, "|->", at});
        advance(3);
      } else if (c == '"') {
        out.push_back({Tok::ident, quoted(at), at, true});
      } else if (ident_char(c)) {
        const auto start = i_;
        while (i_ < s_.size() && (ident_char(s_[i_]) || (s_[i_] == '-' && hyphen_continues()))) advance(1);
        out.push_back({Tok::ident, std::string(s_.substr(start, i_ - start)), at});
      } else {
        throw InputError(InputError::Kind::syntax, at, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({Tok::end, "", SourcePos{line_, col_}});
    return out;
  }

 private:
  std::string quoted(SourcePos at) {
    std::string text;
    advance(1);
    for (;;) {
      if (i_ >= s_.size() || s_[i_] == '\n') throw InputError(InputError::Kind::syntax, at, "unterminated quoted name");
      const char c = s_[i_];
      if (c == '"') {
        advance(1);
        return text;
      }
      if (c == '\\') {
        if (i_ + 1 >= s_.size() || (s_[i_ + 1] != '"' && s_[i_ + 1] != '\\'))
          throw InputError(InputError::Kind::syntax, SourcePos{line_, col_}, "bad escape in quoted name");
        advance(1);
      }
      text += s_[i_];
      advance(1);
    }
  }

  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }
  bool hyphen_continues() const { return i_ + 1 < s_.size() && ident_char(s_[i_ + 1]); }
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i_) {
      if (s_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---- Parser ----------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  SpecDocument document() {
    SpecDocument doc;
    for (auto& st : block("top", false)) {
      if (st.form == "run") doc.directives.push_back(std::move(st));
      else doc.declarations.push_back(std::move(st));
    }
    return doc;
  }

 private:
  const Token& peek() const { return t_[i_]; }

  void skip_separators() {
    while (peek().kind == Tok::sep) ++i_;
  }

  std::vector<Statement> block(std::string_view context, bool braced) {
    std::vector<Statement> out;
    for (;;) {
      skip_separators();
      const auto& tok = peek();
      if (tok.kind == Tok::end) {
        if (braced) throw InputError(InputError::Kind::syntax, tok.pos, "unterminated block, expected '}'");
        return out;
      }
      if (tok.kind == Tok::rbrace) {
        if (!braced) throw InputError(InputError::Kind::syntax, tok.pos, "unexpected '}'");
        ++i_;
        return out;
      }
      out.push_back(statement(context));
    }
  }

  Statement statement(std::string_view context) {
    const SourcePos start = peek().pos;
    std::vector<Token> line;
    while (peek().kind == Tok::ident || peek().kind == Tok::punct) line.push_back(t_[i_++]);
    if (line.empty()) throw InputError(InputError::Kind::syntax, peek().pos, "unexpected '" + peek().text + "'");

    const Form* form = nullptr;
    std::vector<std::string> args;
    std::size_t best = 0;
    for (const auto& f : kForms) {
      if (f.context != context) continue;
      std::size_t reached = 0;
      auto m = match(f, line, reached);
      if (m) {
        form = &f;
        args = std::move(*m);
        break;
      }
      best = std::max(best, reached);
    }
    if (form == nullptr) {
      const SourcePos at = best < line.size() ? line[best].pos : line.back().pos;
      const std::string near = best < line.size() ? "'" + line[best].text + "'" : "end of statement";
      throw InputError(InputError::Kind::syntax, at, "unexpected " + near + " in " + std::string(context) + " statement");
    }

    Statement st{std::string(form->name), std::move(args), {}, start};
    // A block may open on the next line.
    const auto save = i_;
    skip_separators();
    if (peek().kind == Tok::lbrace) {
      if (form->block.empty())
        throw InputError(InputError::Kind::syntax, peek().pos, "'" + std::string(form->name) + "' takes no block");
      ++i_;
      st.body = block(form->block, true);
    } else {
      i_ = save;
      if (peek().kind == Tok::lbrace || peek().kind == Tok::end || peek().kind == Tok::rbrace) return st;
      if (peek().kind != Tok::sep)
        throw InputError(InputError::Kind::syntax, peek().pos, "expected end of statement");
    }
    return st;
  }

  // Matches a whole statement; `reached` reports how far a failed match got.
  static std::optional<std::vector<std::string>> match(const Form& f, const std::vector<Token>& line,
                                                       std::size_t& reached) {
    std::vector<std::string> args;
    std::size_t k = 0;
    for (auto w : words(f.pattern)) {
      if (w == "$*") {
        while (k < line.size() && line[k].kind == Tok::ident) args.push_back(line[k++].text);
        continue;
      }
      if (k >= line.size()) {
        reached = k;
        return std::nullopt;
      }
      const auto& tok = line[k];
      const bool ok = w == "$" ? tok.kind == Tok::ident : !tok.quoted && tok.text == w;
      if (!ok) {
        reached = k;
        return std::nullopt;
      }
      if (w == "$") args.push_back(tok.text);
      ++k;
    }
    reached = k;
    if (k != line.size()) return std::nullopt;
    return args;
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

// ---- Printer ---------------------------------------------------------------

std::string name_text(const std::string& name) {
  if (is_identifier(name)) return name;
  if (name.find('\n') != std::string::npos) throw std::invalid_argument("a name cannot contain a newline");
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void print_statement(std::ostringstream& out, std::string_view context, const Statement& st, int depth) {
  const Form* f = find_form(context, st.form);
  if (f == nullptr) throw std::invalid_argument("no statement form '" + st.form + "' in " + std::string(context));
  std::string line;
  std::size_t a = 0;
  auto append = [&line](std::string_view w) {
    if (!line.empty() && w != ":") line += ' ';
    line += w;
  };
  for (auto w : words(f->pattern)) {
    if (w == "$*") {
      while (a < st.args.size()) append(name_text(st.args[a++]));
    } else if (w == "$") {
      if (a >= st.args.size()) throw std::invalid_argument("statement '" + st.form + "' is missing arguments");
      append(name_text(st.args[a++]));
    } else {
      append(w);
    }
  }
  if (a != st.args.size()) throw std::invalid_argument("statement '" + st.form + "' has extra arguments");

  out << std::string(2 * depth, ' ') << line;
  if (!f->block.empty()) {
    out << " {\n";
    for (const auto& b : st.body) print_statement(out, f->block, b, depth + 1);
    out << std::string(2 * depth, ' ') << "}";
  } else if (!st.body.empty()) {
    throw std::invalid_argument("statement '" + st.form + "' cannot carry a block");
  }
  out << "\n";
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_char(name.front())) return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (ident_char(name[i])) continue;
    if (name[i] == '-' && i + 1 < name.size() && ident_char(name[i + 1])) continue;
    return false;
  }
  return true;
}

SpecDocument parse(std::string_view text) { return Parser(Lexer(text).run()).document(); }

std::string print(const SpecDocument& doc) {
  std::ostringstream out;
  for (const auto& d : doc.declarations) print_statement(out, "top", d, 0);
  if (!doc.declarations.empty() && !doc.directives.empty()) out << "\n";
  for (const auto& d : doc.directives) print_statement(out, "top", d, 0);
  return out.str();
}

}  // namespace skewcat
