#pragma once

#include <string>

#include "nczar/algebra.hpp"

namespace nczar {

/// Parses an algebra expression into normal form.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' integer | dagger)*
///   atom   := generator | scalar | rational | '(' expr ')' | 'adj(' expr ')'
///
/// Generators: X W Y Z F G E (as available in the algebra); scalars:
/// eps, delta, alpha, beta, a, b, i.  The dagger is the UTF-8 character
/// or the adj(...) form.  Negative powers are allowed exactly where an
/// inverse exists.  Throws runtime_error with a position on bad input.
OpElement parse_element(AlgebraKind kind, int N, const std::string& text);

}  // namespace nczar
