#include "test_support.hpp"

#include <hanging/constructions.hpp>
#include <hanging/truth_table.hpp>

#include <doctest.h>

#include <numeric>

using namespace hanging;

namespace
{

/* E straight from its definition on plain integer lists */
oracle::letters reference_e( const std::vector<int>& idx )
{
  if ( idx.size() == 1u )
  {
    return { idx[0] };
  }
  const auto half = static_cast<long>( ( idx.size() + 1u ) / 2u );
  return oracle::comm( reference_e( { idx.begin(), idx.begin() + half } ),
                       reference_e( { idx.begin() + half, idx.end() } ) );
}

std::vector<int> iota_list( int n )
{
  std::vector<int> v( static_cast<std::size_t>( n ) );
  std::iota( v.begin(), v.end(), 1 );
  return v;
}

} // namespace

TEST_SUITE( "constructions" )
{

TEST_CASE( "S_n examples" )
{
  CHECK( format_word( build_s( 2 ) ) == "x1 x2 X1 X2" );
  CHECK( format_word( build_s( 3 ) ) == "x1 x2 X1 X2 x3 x2 x1 X2 X1 X3" );
  CHECK( build_s( 4 ).size() == 22u );
  CHECK( build_s( 1 ).same_sequence( word{ 1 } ) );
  CHECK_THROWS_AS( build_s( 0 ), std::invalid_argument );
}

TEST_CASE( "S_n length and fall table" )
{
  for ( int n = 2; n <= 10; ++n )
  {
    const std::uint64_t expected = ( 1u << n ) + ( 1u << ( n - 1 ) ) - 2u;
    CHECK( build_s( n ).size() == expected );
    CHECK( s_length_formula( n ) == expected );
  }
  for ( int n = 1; n <= 8; ++n )
  {
    CHECK( oracle::as_vector( fall_table( build_s( n ), n ) ) == oracle::threshold_table( n, 1 ) );
  }
}

TEST_CASE( "E examples" )
{
  CHECK( format_word( build_e( { 1, 2, 3, 4 } ) ) == "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3" );
  CHECK( build_e( { 7 } ).same_sequence( word{ 7 } ) );
  CHECK( build_e( 5 ).size() == 28u );
  CHECK( e_length_formula( 5 ) == 28u );
  CHECK_THROWS_AS( build_e( { 1, 2, 1 } ), std::invalid_argument );
  CHECK_THROWS_AS( build_e( std::vector<int>{} ), std::invalid_argument );
}

TEST_CASE( "E lengths, occurrence bound and agreement with the definition" )
{
  for ( int n = 1; n <= 64; ++n )
  {
    const auto w = build_e( n );
    /* closed formula evaluated independently */
    int a = 0;
    while ( ( 2 << a ) <= n )
    {
      ++a;
    }
    const std::uint64_t p = 1u << a;
    const std::uint64_t b = static_cast<std::uint64_t>( n ) - p;
    CHECK( w.size() == p * p + b * ( 4 * p - p ) );
    CHECK( w.size() <= 2u * static_cast<std::uint64_t>( n ) * static_cast<std::uint64_t>( n ) );
    const auto tallies = nail_tallies( w, n );
    for ( int i = 1; i <= n; ++i )
    {
      CHECK( tallies[static_cast<std::size_t>( i )] <= 2u * static_cast<std::size_t>( n ) );
    }
    if ( n <= 16 )
    {
      CHECK( oracle::of( w ) == reference_e( iota_list( n ) ) );
    }
  }
}

TEST_CASE( "S and E have the 1-out-of-n table" )
{
  for ( int n = 1; n <= 10; ++n )
  {
    const auto expected = oracle::threshold_table( n, 1 );
    CHECK( oracle::as_vector( fall_table( build_e( n ), n ) ) == expected );
    CHECK( oracle::as_vector( fall_table( build_s( n ), n ) ) == expected );
  }
  CHECK( oracle::naive_table( oracle::of( build_e( 4 ) ), 4 ) == oracle::threshold_table( 4, 1 ) );
}

TEST_CASE( "E over arbitrary indices" )
{
  const auto w = build_e( { 5, 2, 9 } );
  CHECK( oracle::of( w ) == reference_e( { 5, 2, 9 } ) );
  CHECK( falls( w, nail_subset::of( 9, { 9 } ) ) );
  CHECK_FALSE( falls( w, nail_subset::of( 9, { 1, 3, 4, 6, 7, 8 } ) ) );
}

TEST_CASE( "disjoint classes" )
{
  const std::vector<std::vector<int>> two{ { 1 }, { 2 } };
  CHECK( format_word( build_disjoint( two ) ) == "x1 x2 X1 X2" );
  const std::vector<std::vector<int>> seven{ { 1, 2 }, { 3, 4 } };
  CHECK( format_word( build_disjoint( seven ) ) == "x1 x2 x3 x4 X2 X1 X4 X3" );
  const std::vector<std::vector<int>> one{ { 1, 2, 3 } };
  const auto w = build_disjoint( one );
  CHECK( format_word( w ) == "x1 x2 x3" );
  CHECK( oracle::as_vector( fall_table( w, 3 ) ) == oracle::dnf_table( 3, one ) );
  const std::vector<std::vector<int>> unsorted{ { 3, 1 }, { 2 } };
  CHECK( format_word( build_disjoint( unsorted ) ) == "x1 x3 x2 X3 X1 X2" );

  const std::vector<std::vector<int>> overlap{ { 1, 2 }, { 2, 3 } };
  const std::vector<std::vector<int>> empty_class{ { 1, 2 }, {} };
  const std::vector<std::vector<int>> gap{ { 1 }, { 3 } };
  CHECK_THROWS_AS( build_disjoint( overlap ), std::invalid_argument );
  CHECK_THROWS_AS( build_disjoint( empty_class ), std::invalid_argument );
  CHECK_THROWS_AS( build_disjoint( gap ), std::invalid_argument );
}

TEST_CASE( "disjoint classes: length bound and table on random partitions" )
{
  std::mt19937 rng( 55 );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 12 );
    auto nails = iota_list( n );
    std::shuffle( nails.begin(), nails.end(), rng );
    const int k = 1 + static_cast<int>( rng() % n );
    std::vector<std::vector<int>> partition( static_cast<std::size_t>( k ) );
    for ( int i = 0; i < n; ++i )
    {
      partition[static_cast<std::size_t>( i < k ? i : static_cast<int>( rng() % k ) )].push_back( nails[i] );
    }
    const auto w = build_disjoint( partition );
    CHECK( w.size() <= 2u * static_cast<std::size_t>( k ) * static_cast<std::size_t>( n ) );
    CHECK( oracle::as_vector( fall_table( w, n ) ) == oracle::dnf_table( n, partition ) );
  }
}

TEST_CASE( "disjoint classes degenerate to E for singletons" )
{
  for ( int n = 1; n <= 9; ++n )
  {
    std::vector<std::vector<int>> singles;
    for ( int i = 1; i <= n; ++i )
    {
      singles.push_back( { i } );
    }
    CHECK( build_disjoint( singles ).same_sequence( build_e( n ) ) );
  }
}

}
