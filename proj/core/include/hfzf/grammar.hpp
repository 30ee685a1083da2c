#ifndef HFZF_GRAMMAR_HPP
#define HFZF_GRAMMAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hfzf/hset.hpp"

namespace hfzf {

// Surface syntax tree for the set grammar:
//   set := "{" [set ("," set)*] "}" | "<" set "," set ">" | NAT
// Numerals denote von Neumann ordinals, <x,y> the Kuratowski pair.
struct SetExpr {
  enum class Kind : std::uint8_t { Braces, Pair, Numeral };
  Kind kind = Kind::Braces;
  std::uint32_t numeral = 0;
  std::vector<SetExpr> children;  // Braces: any arity; Pair: exactly two
};

// Whitespace is insignificant; syntax errors carry the byte offset.
SetExpr parse_set_expr(std::string_view text);
HSet eval_set_expr(Ctx& ctx, const SetExpr& expr);

// parse_set = eval_set_expr after parse_set_expr.
HSet parse_set(Ctx& ctx, std::string_view text);

// Canonical printer: numerals for ordinals, pair brackets for Kuratowski
// pairs, braces otherwise. parse_set(print_set(s)) == s.
std::string print_set(HSet s);

}  // namespace hfzf

#endif
