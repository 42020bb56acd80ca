#ifndef CB_ORDINAL_TEXT_HPP
#define CB_ORDINAL_TEXT_HPP

#include <string>
#include <string_view>

#include "cb/ordinal.hpp"

namespace cb {

/// Parses the ordinal notation
///   expr := sum
///   sum  := prod ('+' prod)*
///   prod := atom ('*' nat)?
///   atom := 'w' ('^' atom)? | nat | '(' expr ')'
/// Whitespace is allowed between tokens. The result is normalized to CNF via
/// ordinal addition, so "w + w" parses to the same value as "w*2".
/// Throws ParseError with the offending position.
Ordinal parse_ordinal(std::string_view text);

/// Prints canonical CNF, e.g. "w^(w^2*3+1)*2 + w*4 + 7". Top-level summands
/// are separated by " + "; exponents print compactly and are parenthesized
/// exactly when they are not a single atom. parse_ordinal(print_ordinal(a))
/// == a for every a.
std::string print_ordinal(const Ordinal& a);

}  // namespace cb

#endif
