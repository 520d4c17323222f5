#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hanging
{

/*! \brief One wrap of the rope around a nail.
 *
 * Stored as a nonzero signed integer: +i is a clockwise wrap around nail i
 * (x_i), -i a counterclockwise wrap (the inverse symbol).
 */
class letter
{
public:
  /*! \throws std::invalid_argument on 0 */
  static letter from_signed( std::int32_t value );
  static letter clockwise( int nail );
  static letter counterclockwise( int nail );

  int nail() const noexcept { return value_ < 0 ? -value_ : value_; }
  int orientation() const noexcept { return value_ < 0 ? -1 : 1; }
  bool is_clockwise() const noexcept { return value_ > 0; }
  letter inverse() const noexcept { return letter( -value_ ); }
  std::int32_t value() const noexcept { return value_; }

  friend bool operator==( letter a, letter b ) noexcept = default;

private:
  explicit constexpr letter( std::int32_t value ) noexcept : value_( value ) {}

  std::int32_t value_;
};

/*! \brief A picture hanging: a finite sequence of letters in the free group.
 *
 * The sequence is kept exactly as constructed. `is_reduced()` reports whether
 * it is already in free-group normal form; `reduce()` produces that form.
 * Equality (`==`) compares reduced forms, i.e. group elements; use
 * `same_sequence` to compare the literal letters.
 */
class word
{
public:
  word() = default;
  explicit word( std::vector<letter> letters );
  word( std::initializer_list<std::int32_t> values );

  static word from_signed( std::span<const std::int32_t> values );

  std::span<const letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_reduced() const noexcept { return reduced_; }

  /* largest nail index used, 0 for the empty word */
  int max_nail() const noexcept;
  std::vector<std::int32_t> to_signed() const;

  bool same_sequence( const word& other ) const noexcept { return letters_ == other.letters_; }
  friend bool operator==( const word& a, const word& b );

private:
  friend word reduce( const word& w );
  struct already_reduced_tag
  {
  };
  word( std::vector<letter> letters, already_reduced_tag ) : letters_( std::move( letters ) ), reduced_( true ) {}

  std::vector<letter> letters_;
  bool reduced_ = true;
};

/*! \brief A set of removed nails over 1..n, n <= 64, stored as a bitmask
 *  (bit i-1 set iff nail i is removed). */
class nail_subset
{
public:
  nail_subset() = default;
  nail_subset( int n, std::uint64_t mask );

  static nail_subset of( int n, std::span<const int> members );
  static nail_subset of( int n, std::initializer_list<int> members );
  static nail_subset none( int n ) { return nail_subset( n, 0u ); }
  static nail_subset all( int n );

  int n() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains( int nail ) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0u; }
  bool is_subset_of( const nail_subset& other ) const noexcept { return ( mask_ & ~other.mask_ ) == 0u; }
  std::vector<int> members() const;

  /* "{1,3}" */
  std::string to_string() const;

  friend bool operator==( const nail_subset&, const nail_subset& ) noexcept = default;

private:
  int n_ = 0;
  std::uint64_t mask_ = 0u;
};

/* Free reduction with a single stack pass. Idempotent. */
word reduce( const word& w );
/* reduce(a b) */
word concat( const word& a, const word& b );
/* Reverse the sequence and flip every orientation. Preserves reducedness. */
word inverse( const word& w );
/* w^k, negative k uses the inverse; result reduced */
word power( const word& w, long k );
/* reduce(a b a^-1 b^-1) */
word commutator( const word& a, const word& b );
/* Delete every letter on a removed nail, then reduce. */
word remove_nails( const word& w, const nail_subset& removed );
/* remove_nails(w, removed) is the empty word */
bool falls( const word& w, const nail_subset& removed );

/* Hot-loop form of `falls`: letters on nails whose bit is set in `mask` are
 * dropped. Nails above 64 are never dropped. */
bool falls_mask( std::span<const letter> letters, std::uint64_t mask );
/* Length of the reduced word left after dropping the nails in `mask`. */
std::size_t residual_length( std::span<const letter> letters, std::uint64_t mask );

/* Text format: whitespace-separated `x<k>` (clockwise) / `X<k>` (counterclockwise). */
word parse_word( std::string_view text );
std::string format_word( const word& w );

/* Letters per nail (both orientations), index 0 unused. */
std::vector<std::size_t> nail_tallies( const word& w, int n );

} // namespace hanging
