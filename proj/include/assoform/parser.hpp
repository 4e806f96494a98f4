#ifndef ASSOFORM_PARSER_HPP
#define ASSOFORM_PARSER_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "assoform/polynomial.hpp"

namespace assoform {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { MissingHeader, Lexical, Syntax, UndeclaredVariable, NonIntegerExponent };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// A parsed input file:
//
//   vars: x1 x2 x3
//   x1^2 + x2^2 - (1/2)*x3^2
//   x1*x2 - 3*x3^2
//
// One polynomial per nonblank line after the header; '#' starts a comment.
struct InputSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
  std::vector<std::size_t> source_lines;  // 1-based line of each polynomial

  [[nodiscard]] std::size_t nvars() const { return variables.size(); }
};

InputSystem parse_system(std::string_view text);

// Parses one expression over the given variables. `line` is used in error
// positions.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables,
                            Space space = Space::Primal, std::size_t line = 1);

}  // namespace assoform

#endif  // ASSOFORM_PARSER_HPP
