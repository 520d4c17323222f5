#include "test_support.hpp"

#include <hanging/sortnet.hpp>

#include <doctest.h>

#include <bit>

using namespace hanging;

namespace
{

/* sorted ascending: the lowest (width - popcount) wires hold 0 */
std::uint64_t sorted_bits( std::uint64_t input, int width )
{
  const int ones = std::popcount( input );
  return ones == 0 ? 0u : ( ( ( std::uint64_t{ 1 } << ones ) - 1u ) << ( width - ones ) );
}

} // namespace

TEST_SUITE( "sortnet" )
{

TEST_CASE( "small networks" )
{
  CHECK( batcher_network( 1 ).size() == 0u );
  const auto two = batcher_network( 2 );
  REQUIRE( two.size() == 1u );
  CHECK( two.layers[0][0] == comparator{ 1, 2 } );
  const auto four = batcher_network( 4 );
  CHECK( four.size() == 5u );
  CHECK( four.depth() == 3u );
  CHECK_THROWS_AS( batcher_network( 0 ), std::invalid_argument );
}

TEST_CASE( "zero-one principle for n up to 16" )
{
  for ( int n = 1; n <= 16; ++n )
  {
    const auto net = batcher_network( n );
    net.validate();
    bool all_sorted = true;
    for ( std::uint64_t in = 0; in < ( std::uint64_t{ 1 } << n ); ++in )
    {
      all_sorted = all_sorted && apply( net, in ) == sorted_bits( in, n );
    }
    CHECK_MESSAGE( all_sorted, "n = " << n );
  }
}

TEST_CASE( "network validation" )
{
  comparator_network bad;
  bad.width = 3;
  bad.layers = { { { 1, 2 }, { 2, 3 } } };
  CHECK_THROWS_AS( bad.validate(), std::invalid_argument );
  bad.layers = { { { 1, 4 } } };
  CHECK_THROWS_AS( bad.validate(), std::invalid_argument );
}

TEST_CASE( "comparator conversion" )
{
  const auto two = batcher_network( 2 );
  const auto top = network_to_circuit( two, 1 );
  CHECK( top.at( top.output() ).kind == gate_kind::and_gate );
  const auto bottom = network_to_circuit( two, 2 );
  CHECK( bottom.at( bottom.output() ).kind == gate_kind::or_gate );
  CHECK( oracle::as_vector( circuit_table( network_to_circuit( batcher_network( 3 ), 2 ) ) ) ==
         oracle::threshold_table( 3, 2 ) );
  CHECK_THROWS_AS( network_to_circuit( two, 3 ), std::invalid_argument );
}

TEST_CASE( "circuits follow network semantics for width up to 8" )
{
  for ( int width = 1; width <= 8; ++width )
  {
    const auto net = batcher_network( width );
    for ( int wire = 1; wire <= width; ++wire )
    {
      const auto c = network_to_circuit( net, wire );
      CHECK( static_cast<std::size_t>( c.depth() ) <= net.depth() );
      const auto t = circuit_table( c );
      for ( std::uint64_t in = 0; in < t.size(); ++in )
      {
        CHECK( t[in] == ( ( ( apply( net, in ) >> ( wire - 1 ) ) & 1u ) != 0u ) );
      }
    }
  }
}

TEST_CASE( "threshold circuits" )
{
  for ( int n = 1; n <= 9; ++n )
  {
    for ( int k = 1; k <= n; ++k )
    {
      const auto c = threshold_circuit( k, n );
      CHECK_FALSE( c.has_constants() );
      CHECK( oracle::as_vector( circuit_table( c ) ) == oracle::threshold_table( n, k ) );
    }
  }
  CHECK_THROWS_AS( threshold_circuit( 0, 3 ), std::invalid_argument );
  CHECK_THROWS_AS( threshold_circuit( 4, 3 ), std::invalid_argument );
}

TEST_CASE( "k-out-of-n hangings" )
{
  const auto r12 = build_k_of_n( 1, 2 );
  CHECK( r12.verification == verification_status::verified );
  CHECK( fall_table( r12.result, 2 ) == fall_table( word{ 1, 2, -1, -2 }, 2 ) );
  const auto r23 = build_k_of_n( 2, 3 );
  CHECK( oracle::as_vector( fall_table( r23.result, 3 ) ) == oracle::naive_table( { 1, 2, 3, -1, -2, -3 }, 3 ) );
  const auto r33 = build_k_of_n( 3, 3 );
  CHECK( oracle::naive_table( oracle::of( r33.result ), 3 ) == oracle::threshold_table( 3, 3 ) );
  CHECK_THROWS_AS( build_k_of_n( 0, 3 ), std::invalid_argument );
  CHECK_THROWS_AS( build_k_of_n( 1, 1 ), std::invalid_argument );
}

}
