#include <hanging/constructions.hpp>
#include <hanging/error.hpp>
#include <hanging/spectator.hpp>

#include <stdexcept>
#include <string>

namespace hanging
{

namespace
{

void check_word_fits( const word& w, int n )
{
  if ( n < 0 || n > 64 )
  {
    throw std::invalid_argument( "nail count must be in 0..64" );
  }
  if ( w.max_nail() > n )
  {
    throw std::invalid_argument( "word uses nail " + std::to_string( w.max_nail() ) + " but n = " +
                                 std::to_string( n ) );
  }
}

/* visit the r-subsets of {1..n} in lexicographic order of member lists;
 * stops when `visit` returns true */
template<class Visit>
std::optional<std::uint64_t> first_combination( int n, int r, Visit&& visit )
{
  std::vector<int> idx( static_cast<std::size_t>( r ) );
  for ( int i = 0; i < r; ++i )
  {
    idx[static_cast<std::size_t>( i )] = i;
  }
  while ( true )
  {
    std::uint64_t mask = 0;
    for ( auto i : idx )
    {
      mask |= std::uint64_t{ 1 } << i;
    }
    if ( visit( mask ) )
    {
      return mask;
    }
    int pos = r - 1;
    while ( pos >= 0 && idx[static_cast<std::size_t>( pos )] == n - r + pos )
    {
      --pos;
    }
    if ( pos < 0 )
    {
      return std::nullopt;
    }
    ++idx[static_cast<std::size_t>( pos )];
    for ( int i = pos + 1; i < r; ++i )
    {
      idx[static_cast<std::size_t>( i )] = idx[static_cast<std::size_t>( i - 1 )] + 1;
    }
  }
}

/* AND tree over parts[lo, hi) with eager reduction */
word and_tree( const std::vector<word>& parts, std::size_t lo, std::size_t hi )
{
  if ( hi - lo == 1u )
  {
    return parts[lo];
  }
  const auto mid = lo + ( hi - lo + 1u ) / 2u;
  return gadget_and( and_tree( parts, lo, mid ), and_tree( parts, mid, hi ) );
}

std::uint64_t and_tree_estimate( const std::vector<word>& parts, std::size_t lo, std::size_t hi )
{
  if ( hi - lo == 1u )
  {
    return parts[lo].size();
  }
  const auto mid = lo + ( hi - lo + 1u ) / 2u;
  const auto t = gadget_and_counts();
  return sat_add( sat_add( sat_mul( t.p, and_tree_estimate( parts, lo, mid ) ),
                           sat_mul( t.q, and_tree_estimate( parts, mid, hi ) ) ),
                  t.aux );
}

} // namespace

nail_subset min_fell_exact( const word& w, int n, int limit )
{
  check_exhaustive_limit( n, limit );
  check_word_fits( w, n );
  const auto letters = w.letters();
  for ( int r = 0; r <= n; ++r )
  {
    if ( const auto hit = first_combination( n, r, [&]( std::uint64_t m ) { return falls_mask( letters, m ); } ) )
    {
      return nail_subset( n, *hit );
    }
  }
  return nail_subset::all( n );
}

nail_subset max_survive_exact( const word& w, int n, int limit )
{
  check_exhaustive_limit( n, limit );
  check_word_fits( w, n );
  const auto letters = w.letters();
  for ( int r = n; r >= 0; --r )
  {
    if ( const auto hit = first_combination( n, r, [&]( std::uint64_t m ) { return !falls_mask( letters, m ); } ) )
    {
      return nail_subset( n, *hit );
    }
  }
  throw std::invalid_argument( "the word is already trivial: no removal leaves it hanging" );
}

nail_subset greedy_min_fell( const word& w, int n )
{
  check_word_fits( w, n );
  auto residual = reduce( w );
  std::uint64_t removed = 0;
  while ( !residual.empty() )
  {
    int best = 0;
    std::size_t best_length = 0;
    for ( int i = 1; i <= n; ++i )
    {
      const auto bit = std::uint64_t{ 1 } << ( i - 1 );
      if ( ( removed & bit ) != 0u )
      {
        continue;
      }
      bool present = false;
      for ( auto l : residual.letters() )
      {
        present = present || l.nail() == i;
      }
      if ( !present )
      {
        continue;
      }
      const auto length = residual_length( residual.letters(), bit );
      if ( best == 0 || length < best_length )
      {
        best = i;
        best_length = length;
      }
    }
    removed |= std::uint64_t{ 1 } << ( best - 1 );
    residual = remove_nails( residual, nail_subset( n, std::uint64_t{ 1 } << ( best - 1 ) ) );
  }
  return nail_subset( n, removed );
}

truth_table cover_table( const set_cover_instance& instance, int limit )
{
  const int n = static_cast<int>( instance.sets.size() );
  check_exhaustive_limit( n, limit );
  if ( instance.m < 1 || instance.m > 64 )
  {
    throw std::invalid_argument( "universe size must be in 1..64" );
  }
  std::vector<std::uint64_t> covers;
  for ( const auto& s : instance.sets )
  {
    covers.push_back( nail_subset::of( instance.m, s ).mask() );
  }
  const auto universe = nail_subset::all( instance.m ).mask();
  truth_table t( n );
  for ( std::uint64_t mask = 0; mask < t.size(); ++mask )
  {
    std::uint64_t covered = 0;
    for ( int i = 0; i < n; ++i )
    {
      if ( ( mask >> i ) & 1u )
      {
        covered |= covers[static_cast<std::size_t>( i )];
      }
    }
    t.set( mask, covered == universe );
  }
  return t;
}

set_cover_hanging set_cover_to_hanging( const set_cover_instance& instance, const compile_options& options )
{
  const int n = static_cast<int>( instance.sets.size() );
  if ( instance.m < 1 )
  {
    throw std::invalid_argument( "universe must have at least one element" );
  }
  if ( n < 1 || n > 64 )
  {
    throw std::invalid_argument( "set count must be in 1..64" );
  }
  std::vector<std::vector<int>> holders( static_cast<std::size_t>( instance.m ) );
  for ( int i = 1; i <= n; ++i )
  {
    for ( auto u : instance.sets[static_cast<std::size_t>( i - 1 )] )
    {
      if ( u < 1 || u > instance.m )
      {
        throw std::invalid_argument( "element " + std::to_string( u ) + " outside 1.." + std::to_string( instance.m ) );
      }
      auto& h = holders[static_cast<std::size_t>( u - 1 )];
      if ( h.empty() || h.back() != i )
      {
        h.push_back( i );
      }
    }
  }
  std::vector<word> parts;
  for ( int j = 1; j <= instance.m; ++j )
  {
    const auto& h = holders[static_cast<std::size_t>( j - 1 )];
    if ( h.empty() )
    {
      throw std::invalid_argument( "element " + std::to_string( j ) + " is not covered by any set" );
    }
    parts.push_back( build_e( h ) );
  }

  set_cover_hanging result;
  result.n = n;
  const bool exhaustive = n <= options.exhaustive_limit && n <= 30;
  if ( parts.size() == 1u || n >= 2 )
  {
    const auto estimate = and_tree_estimate( parts, 0, parts.size() );
    if ( estimate > options.budget )
    {
      throw budget_exceeded( estimate, options.budget );
    }
    result.result = and_tree( parts, 0, parts.size() );
    result.construction = "gadget";
    if ( !exhaustive )
    {
      return result;
    }
    const auto expected = cover_table( instance, options.exhaustive_limit );
    const auto diff = fall_table( result.result, n, options.exhaustive_limit ).first_difference( expected );
    if ( !diff )
    {
      result.verification = verification_status::verified;
      return result;
    }
    result.gadget_witness = nail_subset( n, *diff );
  }
  if ( !exhaustive )
  {
    throw limit_exceeded( "the clausal construction needs the full cover table", options.exhaustive_limit );
  }
  const auto expected = cover_table( instance, options.exhaustive_limit );
  const auto estimate = clausal_estimate( expected );
  if ( estimate > options.budget )
  {
    throw budget_exceeded( estimate, options.budget );
  }
  result.result = clausal_word( expected );
  result.construction = "clausal";
  result.verification = fall_table( result.result, n, options.exhaustive_limit ) == expected
                            ? verification_status::verified
                            : verification_status::mismatch;
  return result;
}

} // namespace hanging
