#include <hanging/constructions.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace hanging
{

expr s_expr( int n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "S_n needs n >= 1" );
  }
  expr s( letter::clockwise( 1 ) );
  for ( int i = 2; i <= n; ++i )
  {
    s = commutator( s, expr( letter::clockwise( i ) ) );
  }
  return s;
}

word build_s( int n )
{
  return s_expr( n ).flatten();
}

expr balanced_commutator( std::span<const expr> parts )
{
  if ( parts.empty() )
  {
    throw std::invalid_argument( "balanced commutator over an empty list" );
  }
  if ( parts.size() == 1u )
  {
    return parts.front();
  }
  const auto half = ( parts.size() + 1u ) / 2u;
  return commutator( balanced_commutator( parts.first( half ) ), balanced_commutator( parts.subspan( half ) ) );
}

expr e_expr( std::span<const int> indices )
{
  if ( indices.empty() )
  {
    throw std::invalid_argument( "E needs at least one nail" );
  }
  std::set<int> seen;
  std::vector<expr> parts;
  parts.reserve( indices.size() );
  for ( auto i : indices )
  {
    if ( !seen.insert( i ).second )
    {
      throw std::invalid_argument( "duplicate nail " + std::to_string( i ) + " in E" );
    }
    parts.emplace_back( letter::clockwise( i ) );
  }
  return balanced_commutator( parts );
}

word build_e( std::span<const int> indices )
{
  return e_expr( indices ).flatten();
}

word build_e( std::initializer_list<int> indices )
{
  return build_e( std::span<const int>( indices.begin(), indices.size() ) );
}

word build_e( int n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "E(1:n) needs n >= 1" );
  }
  std::vector<int> indices( static_cast<std::size_t>( n ) );
  for ( int i = 0; i < n; ++i )
  {
    indices[static_cast<std::size_t>( i )] = i + 1;
  }
  return build_e( indices );
}

std::uint64_t e_length_formula( int n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "E(1:n) needs n >= 1" );
  }
  const auto un = static_cast<std::uint64_t>( n );
  const auto pow_a = std::bit_floor( un );
  const auto b = un - pow_a;
  return pow_a * pow_a + b * ( 4u * pow_a - pow_a );
}

std::uint64_t s_length_formula( int n )
{
  if ( n < 1 || n > 62 )
  {
    throw std::invalid_argument( "S_n length formula needs 1 <= n <= 62" );
  }
  if ( n == 1 )
  {
    return 1u;
  }
  return ( std::uint64_t{ 1 } << n ) + ( std::uint64_t{ 1 } << ( n - 1 ) ) - 2u;
}

expr disjoint_expr( std::span<const std::vector<int>> partition )
{
  if ( partition.empty() )
  {
    throw std::invalid_argument( "partition has no classes" );
  }
  std::set<int> seen;
  std::size_t total = 0;
  std::vector<expr> parts;
  for ( const auto& cls : partition )
  {
    if ( cls.empty() )
    {
      throw std::invalid_argument( "partition has an empty class" );
    }
    auto sorted = cls;
    std::sort( sorted.begin(), sorted.end() );
    expr w;
    for ( auto nail : sorted )
    {
      if ( nail < 1 )
      {
        throw std::invalid_argument( "nail indices must be >= 1" );
      }
      if ( !seen.insert( nail ).second )
      {
        throw std::invalid_argument( "nail " + std::to_string( nail ) + " appears in more than one class" );
      }
      w = w * expr( letter::clockwise( nail ) );
    }
    total += sorted.size();
    parts.push_back( w );
  }
  if ( *seen.rbegin() != static_cast<int>( total ) )
  {
    throw std::invalid_argument( "partition does not cover nails 1.." + std::to_string( total ) );
  }
  return balanced_commutator( parts );
}

word build_disjoint( std::span<const std::vector<int>> partition )
{
  return disjoint_expr( partition ).flatten();
}

} // namespace hanging
