#pragma once

#include <hanging/circuit.hpp>

#include <string_view>

namespace hanging
{

/*! \brief Parse a monotone formula into a circuit.
 *
 * Grammar (whitespace is ignored):
 *
 *     or      := and ( '|' and )*
 *     and     := primary ( '&' primary )*
 *     primary := 'r' INT | 'true' | 'false' | '(' or ')'
 *              | 'atleast' '(' INT ';' or ( ',' or )* ')'
 *
 * Chains associate left. `atleast(k; ...)` is expanded through a sorting
 * network and needs 1 <= k <= number of arguments. When `n` is 0 the variable
 * count is the largest index used; otherwise every index must be <= n.
 * Constants are kept; call `folded()` to remove them.
 *
 * \throws parse_error with the offending position
 */
monotone_circuit parse_formula( std::string_view text, int n = 0 );

} // namespace hanging
