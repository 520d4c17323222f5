#pragma once

#include <hanging/word.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hanging
{

/* Exhaustive oracles enumerate 2^n subsets; refuse above this n by default. */
inline constexpr int default_exhaustive_limit = 20;

/*! \brief A Boolean function of the removed-nail set, one bit per subset.
 *
 * Bit `mask` is the value on the subset whose members are the set bits of
 * `mask` (bit i-1 for nail i).
 */
class truth_table
{
public:
  truth_table() = default;
  explicit truth_table( int n );

  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{ 1 } << n_; }

  bool operator[]( std::uint64_t mask ) const { return bits_[mask] != 0u; }
  bool at( const nail_subset& s ) const { return ( *this )[s.mask()]; }
  void set( std::uint64_t mask, bool value ) { bits_[mask] = value ? 1u : 0u; }

  std::uint64_t count() const noexcept;
  bool is_monotone() const noexcept;
  /* smallest mask where the tables disagree; tables must have equal n */
  std::optional<std::uint64_t> first_difference( const truth_table& other ) const;

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/* n must lie in 0..limit, else limit_exceeded. */
void check_exhaustive_limit( int n, int limit );

/*! \brief Brute-force fall function: table[s] = falls(w, s) for all 2^n s.
 *
 * Requires n >= w.max_nail(). Large tables are evaluated on several threads;
 * the result does not depend on scheduling.
 */
truth_table fall_table( const word& w, int n, int limit = default_exhaustive_limit );

} // namespace hanging
