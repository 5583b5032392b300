#ifndef BORSUK_EXPR_HPP
#define BORSUK_EXPR_HPP

#include <string>

#include "borsuk/spaces.hpp"

namespace borsuk {

/// Parse a space expression. Grammar (whitespace insignificant; products
/// bind tighter than wedges; parentheses accepted):
///
///   expr    := product ('v' product)*            wedge sum
///   product := repeat ('x' repeat)*              only sphere x sphere valid
///   repeat  := atom ('*' count)?                 wedge repetition, count >= 1
///   atom    := 'pt' | 'S'n | 'RP'n | '(' expr ')'
///            | 'M(' group ',' n ')'              Moore space, n >= 2
///            | 'K(' group ',' n ')'              Eilenberg-MacLane space
///            | 'L(' p ',' q ')'                  lens space
///            | 'Sg(' g ')' | 'Ng(' g ')'         orientable / non-orientable surface
///            | 'ZC(' n ';' r ')'                 Z_n-complex, rank H_2 = r
///            | 'P(' n ')'                        pseudo projective plane
///            | 'F(' g ';' r ')'                  free-pi1 2-complex
///   group   := '0' | term ('+' term)*,  term := 'Z' | 'Z^'k | 'Z/'n
///
/// Structural violations (a product of non-spheres, gcd(p,q) != 1, ...)
/// raise InvalidDescriptor; everything else raises ParseError with the
/// offset and the expected-token set. The result is not normalized.
SpaceDescriptor parse_expression(const std::string& text);

/// Canonical printer; inverse of parse_expression on normalized
/// descriptors.
std::string render_descriptor(const SpaceDescriptor& d);

}  // namespace borsuk

#endif  // BORSUK_EXPR_HPP
