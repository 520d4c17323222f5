#pragma once

#include <hanging/circuit.hpp>
#include <hanging/truth_table.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hanging
{

/* falls iff some listed subset is entirely removed */
struct subset_list
{
  std::vector<std::vector<int>> subsets;
};

/* falls iff at least k nails are removed; k = 0 means always fallen */
struct threshold
{
  int k = 0;
};

/*! \brief A fall specification over nails 1..n. */
struct puzzle_spec
{
  int n = 0;
  std::variant<monotone_circuit, subset_list, threshold> body;
  /* source text when the circuit came from a formula, kept for printing */
  std::optional<std::string> formula_text;

  static puzzle_spec from_subsets( int n, std::vector<std::vector<int>> subsets );
  static puzzle_spec from_threshold( int n, int k );
  static puzzle_spec from_formula( int n, const std::string& text );
  static puzzle_spec from_circuit( monotone_circuit c );
};

struct normalized_subsets
{
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> notices;
};

/*! \brief Sort members, drop duplicates and drop every subset that contains
 *  another listed subset. The result is ordered by (size, members).
 *  \throws std::invalid_argument for an empty list, an empty subset or a
 *  nail outside 1..n */
normalized_subsets normalize_subsets( int n, const std::vector<std::vector<int>>& subsets );

/*! \brief Balanced OR over balanced ANDs: true iff some S_i is contained in
 *  the assignment. Same errors as `normalize_subsets`; no normalization. */
monotone_circuit subsets_to_circuit( const std::vector<std::vector<int>>& subsets, int n );

/* Circuit for any spec body, not folded. Threshold k > n yields constant
 * false; k = 0 constant true. */
monotone_circuit spec_circuit( const puzzle_spec& spec );

struct validation_report
{
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notices;
  /* folded circuit of the (normalized) spec; constant when f is constant */
  monotone_circuit circuit;
};

/*! \brief Realizability and normalization check.
 *
 * A fall function must be monotone, true when every nail is removed, and
 * true with nothing removed only if it is constantly true. Circuits and
 * subset lists are monotone by construction, so after constant folding the
 * only possible violation is a constantly false function.
 */
validation_report validate_spec( const puzzle_spec& spec );

/* f over all 2^n subsets */
truth_table spec_table( const puzzle_spec& spec, int limit = default_exhaustive_limit );

/* Human-readable body: "subsets {1},{2,3}", "threshold k=2", "formula ..." */
std::string describe( const puzzle_spec& spec );

} // namespace hanging
