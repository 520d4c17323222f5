#include <hanging/error.hpp>
#include <hanging/truth_table.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace hanging
{

truth_table::truth_table( int n ) : n_( n )
{
  if ( n < 0 || n > 30 )
  {
    throw std::invalid_argument( "truth table arity must be in 0..30" );
  }
  bits_.assign( std::size_t{ 1 } << n, 0u );
}

std::uint64_t truth_table::count() const noexcept
{
  return static_cast<std::uint64_t>( std::count( bits_.begin(), bits_.end(), std::uint8_t{ 1 } ) );
}

bool truth_table::is_monotone() const noexcept
{
  for ( std::uint64_t m = 0; m < size(); ++m )
  {
    if ( !bits_[m] )
    {
      continue;
    }
    for ( int i = 0; i < n_; ++i )
    {
      if ( !bits_[m | ( std::uint64_t{ 1 } << i )] )
      {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::uint64_t> truth_table::first_difference( const truth_table& other ) const
{
  if ( other.n_ != n_ )
  {
    throw std::invalid_argument( "comparing truth tables of different arity" );
  }
  for ( std::uint64_t m = 0; m < size(); ++m )
  {
    if ( bits_[m] != other.bits_[m] )
    {
      return m;
    }
  }
  return std::nullopt;
}

void check_exhaustive_limit( int n, int limit )
{
  if ( n < 0 )
  {
    throw std::invalid_argument( "nail count must be non-negative" );
  }
  if ( n > limit || n > 30 )
  {
    throw limit_exceeded( "refusing to enumerate 2^" + std::to_string( n ) + " subsets", limit );
  }
}

truth_table fall_table( const word& w, int n, int limit )
{
  check_exhaustive_limit( n, limit );
  if ( w.max_nail() > n )
  {
    throw std::invalid_argument( "word uses nail " + std::to_string( w.max_nail() ) + " but n = " +
                                 std::to_string( n ) );
  }
  truth_table table( n );
  const auto letters = w.letters();
  const auto total = table.size();

  /* each worker owns a contiguous block of masks */
  const auto work = static_cast<double>( total ) * static_cast<double>( std::max<std::size_t>( w.size(), 1u ) );
  const auto hw = std::max( 1u, std::thread::hardware_concurrency() );
  const auto workers = work < 4e6 ? 1u : static_cast<unsigned>( std::min<std::uint64_t>( hw, total ) );

  if ( workers == 1u )
  {
    for ( std::uint64_t m = 0; m < total; ++m )
    {
      table.set( m, falls_mask( letters, m ) );
    }
    return table;
  }

  std::vector<std::uint8_t> results( total, 0u );
  {
    std::vector<std::jthread> pool;
    const auto block = ( total + workers - 1u ) / workers;
    for ( unsigned t = 0; t < workers; ++t )
    {
      const auto begin = t * block;
      const auto end = std::min<std::uint64_t>( total, begin + block );
      pool.emplace_back( [&results, letters, begin, end] {
        for ( auto m = begin; m < end; ++m )
        {
          results[m] = falls_mask( letters, m ) ? 1u : 0u;
        }
      } );
    }
  }
  for ( std::uint64_t m = 0; m < total; ++m )
  {
    table.set( m, results[m] != 0u );
  }
  return table;
}

} // namespace hanging
