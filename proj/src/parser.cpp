#include "assoform/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace assoform {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

constexpr unsigned kMaxExponent = 1000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t column;  // 1-based
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && (text[j] == '.' || text[j] == 'e' || text[j] == 'E')) {
        throw ParseError(ParseError::Kind::Lexical, line, j + 1,
                         "only integer and rational literals are supported");
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
    } else {
      Tok type;
      switch (c) {
        case '+': type = Tok::Plus; break;
        case '-': type = Tok::Minus; break;
        case '*': type = Tok::Star; break;
        case '/': type = Tok::Slash; break;
        case '^': type = Tok::Caret; break;
        case '(': type = Tok::LParen; break;
        case ')': type = Tok::RParen; break;
        default:
          throw ParseError(ParseError::Kind::Lexical, line, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({type, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::span<const std::string> variables, Space space, std::size_t line)
      : tokens_(std::move(tokens)), variables_(variables), space_(space), line_(line) {}

  Polynomial parse() {
    if (peek().type == Tok::End) fail(ParseError::Kind::Syntax, peek(), "empty expression");
    Polynomial out = expression();
    const Token& t = peek();
    if (t.type == Tok::Number || t.type == Tok::Ident || t.type == Tok::LParen) {
      fail(ParseError::Kind::Syntax, t, "implicit multiplication is not allowed; use '*'");
    }
    if (t.type != Tok::End) fail(ParseError::Kind::Syntax, t, "unexpected '" + t.text + "'");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(ParseError::Kind kind, const Token& at, const std::string& message) const {
    throw ParseError(kind, line_, at.column, message);
  }

  Polynomial expression() {
    Polynomial out = term();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const bool minus = advance().type == Tok::Minus;
      Polynomial rhs = term();
      if (minus) {
        out -= rhs;
      } else {
        out += rhs;
      }
    }
    return out;
  }

  Polynomial term() {
    Polynomial out = factor();
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      const bool divide = advance().type == Tok::Slash;
      const Token& at = peek();
      Polynomial rhs = factor();
      if (!divide) {
        out = out * rhs;
        continue;
      }
      if (rhs.degree().value_or(0) != 0) fail(ParseError::Kind::Syntax, at, "division by a non-constant");
      if (rhs.is_zero()) fail(ParseError::Kind::Syntax, at, "division by zero");
      out *= rhs.terms().begin()->second.inverse();
    }
    return out;
  }

  Polynomial factor() {
    if (peek().type == Tok::Minus) {
      advance();
      return -factor();
    }
    if (peek().type == Tok::Plus) {
      advance();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().type != Tok::Caret) return base;
    advance();
    const unsigned e = exponent();
    if (peek().type == Tok::Caret) fail(ParseError::Kind::Syntax, peek(), "chained exponents are ambiguous; add parentheses");
    return base.pow(e);
  }

  unsigned exponent() {
    const Token& t = peek();
    bool parenthesized = false;
    if (t.type == Tok::LParen) {
      parenthesized = true;
      advance();
    }
    const Token& num = peek();
    if (num.type != Tok::Number) {
      fail(ParseError::Kind::NonIntegerExponent, num, "exponent must be a non-negative integer literal");
    }
    advance();
    if (parenthesized) {
      if (peek().type != Tok::RParen) {
        fail(ParseError::Kind::NonIntegerExponent, peek(), "exponent must be a non-negative integer literal");
      }
      advance();
    }
    if (num.text.size() > 4 || std::stoul(num.text) > kMaxExponent) {
      fail(ParseError::Kind::NonIntegerExponent, num, "exponent is too large");
    }
    return static_cast<unsigned>(std::stoul(num.text));
  }

  Polynomial primary() {
    const Token& t = peek();
    const std::size_t n = variables_.size();
    switch (t.type) {
      case Tok::Number: {
        advance();
        return Polynomial::constant(n, Rational::parse(t.text), space_);
      }
      case Tok::Ident: {
        advance();
        for (std::size_t i = 0; i < n; ++i) {
          if (variables_[i] == t.text) return Polynomial::variable(n, i, space_);
        }
        fail(ParseError::Kind::UndeclaredVariable, t, "undeclared variable '" + t.text + "'");
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = expression();
        if (peek().type != Tok::RParen) fail(ParseError::Kind::Syntax, peek(), "expected ')'");
        advance();
        return inner;
      }
      case Tok::End:
        fail(ParseError::Kind::Syntax, t, "unexpected end of expression");
      default:
        fail(ParseError::Kind::Syntax, t, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::span<const std::string> variables_;
  Space space_;
  std::size_t line_;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables, Space space,
                            std::size_t line) {
  Parser parser(tokenize(text, line), variables, space, line);
  return parser.parse();
}

InputSystem parse_system(std::string_view text) {
  InputSystem out;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    ++line_no;
    const std::string_view line = strip_comment(raw);
    if (is_blank(line)) continue;

    if (!have_header) {
      const auto first = line.find_first_not_of(" \t");
      if (line.substr(first, 5) != "vars:") {
        throw ParseError(ParseError::Kind::MissingHeader, line_no, first + 1,
                         "expected a header line 'vars: x1 x2 ...'");
      }
      std::set<std::string> seen;
      std::size_t i = first + 5;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        std::string name(line.substr(i, j - i));
        if (!is_ident_start(name[0]) || !std::all_of(name.begin(), name.end(), is_ident_char)) {
          throw ParseError(ParseError::Kind::Lexical, line_no, i + 1, "invalid variable name '" + name + "'");
        }
        if (!seen.insert(name).second) {
          throw ParseError(ParseError::Kind::Syntax, line_no, i + 1, "variable '" + name + "' declared twice");
        }
        out.variables.push_back(std::move(name));
        i = j;
      }
      if (out.variables.empty()) {
        throw ParseError(ParseError::Kind::MissingHeader, line_no, line.size() + 1, "no variables declared");
      }
      have_header = true;
      continue;
    }
    out.polynomials.push_back(parse_polynomial(line, out.variables, Space::Primal, line_no));
    out.source_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(ParseError::Kind::MissingHeader, 1, 1, "expected a header line 'vars: x1 x2 ...'");
  return out;
}

}  // namespace assoform
