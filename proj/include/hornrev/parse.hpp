#ifndef HORNREV_PARSE_HPP
#define HORNREV_PARSE_HPP

#include <string>

#include "hornrev/errors.hpp"
#include "hornrev/kb.hpp"

namespace hornrev {

// Text format:
//   %% immutable / %% updatable / %% constraints   section headers
//   head :- b1, b2.        rule
//   head.                  fact
//   :- b1, b2, X != Y.     denial constraint (equalities allowed here only)
//   % comment to end of line
// Constants/predicates match [a-z][a-zA-Z0-9_]*, variables [A-Z][a-zA-Z0-9_]*.
// Throws ParseError on syntax errors and on any KB invariant violation.
KnowledgeBase parse_kb(const std::string& text);

// Round-trips through parse_kb (clause order preserved).
std::string serialize_kb(const KnowledgeBase& kb);

// One atom, e.g. "p" or "staff_chair(delhibabu, aravindan)".
Atom parse_atom(const std::string& text);

// One clause in the format above, without section context.
HornClause parse_clause(const std::string& text);

}  // namespace hornrev

#endif
