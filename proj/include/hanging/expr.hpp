#pragma once

#include <hanging/word.hpp>

#include <cstdint>
#include <memory>

namespace hanging
{

/*! \brief Deferred word assembly.
 *
 * An immutable tree of concatenation, inversion and power nodes over word
 * leaves. Building a node is O(1) and shares its children, so recursive
 * constructions cost time proportional to the emitted word only when
 * `flatten` or `reduced` walks the tree once. `length` is the as-constructed
 * letter count (saturating at UINT64_MAX) and never materializes letters.
 */
class expr
{
public:
  /* the empty word */
  expr();
  explicit expr( word w );
  explicit expr( letter l );

  std::uint64_t length() const noexcept;

  expr inverse() const;
  expr pow( long k ) const;
  friend expr operator*( const expr& a, const expr& b );

  /* The as-constructed sequence, with no cancellation. */
  word flatten() const;
  /* Free-reduced form, reduced on the fly (memory bounded by the result). */
  word reduced() const;

private:
  struct node;
  explicit expr( std::shared_ptr<const node> root );

  template<class Sink>
  void walk( Sink&& sink ) const;

  std::shared_ptr<const node> root_;
};

/* a b a^-1 b^-1 */
expr commutator( const expr& a, const expr& b );

/* saturating helpers shared by the length accountants */
inline std::uint64_t sat_add( std::uint64_t a, std::uint64_t b ) noexcept
{
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline std::uint64_t sat_mul( std::uint64_t a, std::uint64_t b ) noexcept
{
  if ( a == 0u || b == 0u )
  {
    return 0u;
  }
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

} // namespace hanging
