#pragma once

#include <hanging/compiler.hpp>
#include <hanging/truth_table.hpp>
#include <hanging/word.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hanging
{

/*! \brief Smallest set of nails whose removal fells `w`.
 *
 * Subsets are tried by increasing size; within a size the first one in
 * lexicographic order of the ascending member list wins ({1,4} before {2,3}).
 * The full set always falls, so an answer exists.
 */
nail_subset min_fell_exact( const word& w, int n, int limit = default_exhaustive_limit );

/*! \brief Largest set of nails that can be removed while `w` still hangs.
 *  Same tie-break. \throws std::invalid_argument when w is already trivial */
nail_subset max_survive_exact( const word& w, int n, int limit = default_exhaustive_limit );

/*! \brief Repeatedly remove the nail (among those still occurring) that
 *  leaves the shortest reduced word, lowest index on ties, until it falls. */
nail_subset greedy_min_fell( const word& w, int n );

/* universe u_1..u_m; sets[i-1] is S_i, listing element indices in 1..m */
struct set_cover_instance
{
  int m = 0;
  std::vector<std::vector<int>> sets;
};

/* nail i stands for set S_i */
struct set_cover_hanging
{
  word result;
  int n = 0;
  /* "gadget" (balanced AND tree) or "clausal" */
  std::string construction;
  verification_status verification = verification_status::unverified;
  std::optional<nail_subset> gadget_witness;
};

/*! \brief Hanging that falls iff the removed nails index a set cover.
 *
 * Element u_j gives E over {i : u_j in S_i}, and the m words are joined by a
 * balanced tree of AND gadgets (auxiliaries x_1, x_2). The word is checked
 * against the cover predicate when n is within the exhaustive limit and
 * replaced by the clausal construction if the check fails.
 * \throws std::invalid_argument for an uncovered element or bad indices
 */
set_cover_hanging set_cover_to_hanging( const set_cover_instance& instance, const compile_options& options = {} );

/* table[s] = the sets indexed by s cover the universe */
truth_table cover_table( const set_cover_instance& instance, int limit = default_exhaustive_limit );

} // namespace hanging
