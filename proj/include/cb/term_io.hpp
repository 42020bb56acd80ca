#ifndef CB_TERM_IO_HPP
#define CB_TERM_IO_HPP

#include <iosfwd>
#include <string>

#include "cb/setterm.hpp"

namespace cb {

/// Term as a JSON tree: variant tag in "kind", rationals as "num/den"
/// strings, ordinals in the w-notation. deserialize(serialize(t)) == t.
std::string serialize_term(const SetTerm& t, bool pretty = true);

/// Parses and validates a term produced by serialize_term.
/// Throws ParseError on malformed JSON and InvalidTerm on bad structure.
SetTerm deserialize_term(const std::string& json_text);

/// CSV rendering of an enumeration: header point_num,point_den,address,rank;
/// addresses as dot-separated child indices, ranks in w-notation.
void write_enumeration_csv(std::ostream& os, const Enumeration& rows);

/// Reads one rational per line ("num/den" or "num"); blank lines ignored.
std::vector<Rational> read_rationals(std::istream& is);

}  // namespace cb

#endif
