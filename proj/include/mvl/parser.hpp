#ifndef MVL_PARSER_HPP
#define MVL_PARSER_HPP

#include <stdexcept>
#include <string>

#include "mvl/formula.hpp"

namespace mvl {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t column)
        : std::runtime_error(message + " (column " + std::to_string(column) + ")"),
          column_(column) {}

    // 1-based position of the offending token in the input line.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// Grammar (whitespace-insensitive):
//   formula := iff
//   iff     := imp ("<->" imp)*              left-assoc
//   imp     := or ["->" imp]                 right-assoc
//   or      := and ("\/" and)*
//   and     := strg ("/\" strg)*
//   strg    := unary ("&" unary)*
//   unary   := "~" unary | "(" formula ")" | "0" | "1"
//            | ("forall"|"exists") IDENT "." unary
//            | IDENT ["(" term ("," term)*")"] ["^" NAT]
//   term    := IDENT ["(" term ("," term)* ")"]
// With strict = true, any free variable is rejected (sentences only).
FormulaPtr parse_formula(const std::string& text, bool strict = false);

TermPtr parse_term(const std::string& text);

// One formula per line; '#' begins a comment line; blank lines ignored.
// Errors are tagged with "<name>:<line>:".
Theory load_theory(const std::string& path, bool strict = false);
Theory parse_theory(const std::string& text, const std::string& name, bool strict = false);

}  // namespace mvl

#endif
