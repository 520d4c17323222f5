#pragma once

#include <hanging/expr.hpp>
#include <hanging/word.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace hanging
{

/*! \brief S_n = [S_{n-1}, x_n] with S_1 = x_1; falls when any one of nails 1..n
 *  is removed. Length 2^n + 2^{n-1} - 2 for n >= 2. */
expr s_expr( int n );
word build_s( int n );

/*! \brief Balanced commutator E over the given distinct nails.
 *
 * A singleton gives its generator; otherwise the list is split with the first
 * half rounded up and E(first) and E(second) are commuted. Falls when any
 * listed nail is removed.
 */
expr e_expr( std::span<const int> indices );
word build_e( std::span<const int> indices );
word build_e( std::initializer_list<int> indices );
/* E(1:n) */
word build_e( int n );

/* The same balanced recursion over arbitrary parts (used for supernails and
 * for the clause words of the compiler). `parts` must be nonempty. */
expr balanced_commutator( std::span<const expr> parts );

/* |E(1:n)| = (2^a)^2 + b (2^{a+2} - 2^a) with n = 2^a + b, 0 <= b < 2^a */
std::uint64_t e_length_formula( int n );
/* 2^n + 2^{n-1} - 2 for n >= 2, 1 for n = 1 */
std::uint64_t s_length_formula( int n );

/*! \brief Disjoint-class construction: every class acts as one supernail.
 *
 * Class i becomes w_i, the product of its nails in ascending order, and the
 * words are combined by the balanced commutator recursion in the given class
 * order. The classes must be nonempty, pairwise disjoint and cover 1..n where
 * n is the total number of nails. Falls iff some class is entirely removed.
 */
expr disjoint_expr( std::span<const std::vector<int>> partition );
word build_disjoint( std::span<const std::vector<int>> partition );

} // namespace hanging
