#ifndef K0_PARSER_HPP
#define K0_PARSER_HPP

#include <stdexcept>
#include <string>

#include "k0/formula.hpp"

namespace k0 {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    size_t position;
};

// Grammar:
//   formula := "true" | "false" | atom | "~" formula | formula "&" formula
//            | formula "|" formula | ("E"|"A") var "." formula | "(" formula ")"
//   atom    := term ("=" | "!=") term
//   term    := var | const | param | "f" "(" term ")" | "f^" nat "(" term ")"
//   const   := "c" nat                      (1 <= nat <= N)
//   param   := "g:" ident [ "@" int ]
//   var     := ident
// Precedence: ~ > & > | ; quantifier bodies extend maximally right.
//
// Every variable in an atom must be bound by exactly one enclosing
// quantifier or listed in the interface; quantifiers may not shadow.
FormulaPtr parse(const std::string& text, const Context& ctx);

Term parse_term_text(const std::string& text, const Context& ctx);

}  // namespace k0

#endif
