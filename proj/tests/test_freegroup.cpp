#include "test_support.hpp"

#include <hanging/error.hpp>
#include <hanging/expr.hpp>
#include <hanging/truth_table.hpp>
#include <hanging/word.hpp>

#include <doctest.h>

using namespace hanging;

TEST_SUITE( "freegroup" )
{

TEST_CASE( "letters" )
{
  const auto l = letter::counterclockwise( 3 );
  CHECK( l.nail() == 3 );
  CHECK( l.orientation() == -1 );
  CHECK( l.inverse() == letter::clockwise( 3 ) );
  CHECK_THROWS_AS( letter::from_signed( 0 ), std::invalid_argument );
  CHECK_THROWS_AS( letter::clockwise( 0 ), std::invalid_argument );
}

TEST_CASE( "reduce examples" )
{
  CHECK( reduce( word{ 1, -1 } ).empty() );
  CHECK( reduce( word{ 1, 2, -2, -1 } ).empty() );
  const word c{ 1, 2, -1, -2 };
  CHECK( c.is_reduced() );
  CHECK( reduce( c ).same_sequence( c ) );
  CHECK_FALSE( word( { 1, 2, -2 } ).is_reduced() );
}

TEST_CASE( "concat, inverse, power, commutator examples" )
{
  CHECK( concat( word{ 1 }, word{ -1 } ).empty() );
  CHECK( concat( word{ 1, 2 }, word{ -2, 3 } ).same_sequence( word{ 1, 3 } ) );
  CHECK( concat( word{}, word{ 1, -1, 2 } ).same_sequence( word{ 2 } ) );
  CHECK( inverse( word{ 1, 2 } ).same_sequence( word{ -2, -1 } ) );
  CHECK( inverse( word{} ).empty() );
  CHECK( inverse( word{ 1, 2, -1, -2 } ).same_sequence( word{ 2, 1, -2, -1 } ) );
  CHECK( power( word{ 1 }, 2 ).same_sequence( word{ 1, 1 } ) );
  CHECK( power( word{ 1, 2 }, 0 ).empty() );
  /* oracle: inverse then repeat, then reduce */
  const auto inv = oracle::naive_inverse( { 1, 2, -1, -2 } );
  CHECK( oracle::of( power( word{ 1, 2, -1, -2 }, -2 ) ) == oracle::naive_reduce( oracle::cat( inv, inv ) ) );
  CHECK( oracle::of( power( word{ 1, 2, -1, -2 }, -2 ) ) == oracle::letters{ 2, 1, -2, -1, 2, 1, -2, -1 } );
  CHECK( commutator( word{ 1 }, word{ 2 } ).same_sequence( word{ 1, 2, -1, -2 } ) );
  CHECK( commutator( word{ 1, 2, -3 }, word{ 1, 2, -3 } ).empty() );
  CHECK( commutator( word{ 1, 2, -1, -2 }, word{ 3 } ).same_sequence( parse_word( "x1 x2 X1 X2 x3 x2 x1 X2 X1 X3" ) ) );
}

TEST_CASE( "nail removal and falling" )
{
  const word c{ 1, 2, -1, -2 };
  CHECK( remove_nails( c, nail_subset::of( 2, { 1 } ) ).empty() );
  CHECK( remove_nails( c, nail_subset::none( 2 ) ).same_sequence( c ) );
  const auto s3 = parse_word( "x1 x2 X1 X2 x3 x2 x1 X2 X1 X3" );
  CHECK( remove_nails( s3, nail_subset::of( 3, { 3 } ) ).empty() );
  CHECK( falls( c, nail_subset::of( 2, { 2 } ) ) );
  CHECK_FALSE( falls( c, nail_subset::none( 2 ) ) );
  CHECK_FALSE( falls( word{ 1, 2, 3, -1, -2, -3 }, nail_subset::of( 3, { 1 } ) ) );
}

TEST_CASE( "fall tables" )
{
  const auto t1 = fall_table( word{ 1 }, 1 );
  CHECK_FALSE( t1[0] );
  CHECK( t1[1] );
  CHECK( oracle::as_vector( fall_table( word{ 1, 2, -1, -2 }, 2 ) ) == std::vector<bool>{ false, true, true, true } );
  CHECK( oracle::as_vector( fall_table( word{ 1, 2, 3, -1, -2, -3 }, 3 ) ) == oracle::threshold_table( 3, 2 ) );
  CHECK_THROWS_AS( fall_table( word{ 1 }, 21 ), limit_exceeded );
  CHECK( fall_table( word{ 1 }, 21, 21 ).count() == ( std::uint64_t{ 1 } << 20 ) );
  CHECK_THROWS_AS( fall_table( word{ 3 }, 2 ), std::invalid_argument );
}

TEST_CASE( "fall table on many threads equals the sequential oracle" )
{
  std::mt19937 rng( 7 );
  /* long enough to cross the parallel threshold */
  auto w = oracle::random_letters( rng, 12, 0 );
  while ( w.size() < 1200 )
  {
    const auto chunk = oracle::random_letters( rng, 12, 40 );
    w = oracle::cat( w, oracle::comm( chunk, { static_cast<int>( w.size() % 12 ) + 1 } ) );
  }
  const auto hw = word::from_signed( std::vector<std::int32_t>( w.begin(), w.end() ) );
  const auto t = fall_table( hw, 12 );
  std::mt19937 pick( 11 );
  std::uniform_int_distribution<std::uint64_t> mask( 0, 4095 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const auto m = mask( pick );
    CHECK( t[m] == oracle::naive_falls( w, m ) );
  }
}

TEST_CASE( "word text format" )
{
  const auto w = parse_word( "x1 x2  X1\tX2\n" );
  CHECK( format_word( w ) == "x1 x2 X1 X2" );
  CHECK( parse_word( "" ).empty() );
  CHECK_THROWS_AS( parse_word( "x1 y2" ), parse_error );
  CHECK_THROWS_AS( parse_word( "x" ), parse_error );
  CHECK_THROWS_AS( parse_word( "x0" ), parse_error );
  CHECK_THROWS_AS( parse_word( "x01" ), parse_error );
  CHECK_THROWS_AS( parse_word( "x1x2" ), parse_error );
  try
  {
    parse_word( "x1 x2 q3" );
    FAIL( "expected a parse error" );
  }
  catch ( const parse_error& e )
  {
    CHECK( e.position() == 6u );
  }
}

TEST_CASE( "nail subsets" )
{
  const auto s = nail_subset::of( 5, { 4, 1 } );
  CHECK( s.to_string() == "{1,4}" );
  CHECK( s.size() == 2 );
  CHECK( s.members() == std::vector<int>{ 1, 4 } );
  CHECK( s.is_subset_of( nail_subset::all( 5 ) ) );
  CHECK_THROWS_AS( nail_subset::of( 3, { 4 } ), std::invalid_argument );
  CHECK( nail_subset::all( 64 ).size() == 64 );
}

TEST_CASE( "deferred assembly matches direct assembly" )
{
  std::mt19937 rng( 3 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const auto a = oracle::random_letters( rng, 4, 8 );
    const auto b = oracle::random_letters( rng, 4, 8 );
    const auto wa = word::from_signed( std::vector<std::int32_t>( a.begin(), a.end() ) );
    const auto wb = word::from_signed( std::vector<std::int32_t>( b.begin(), b.end() ) );
    const auto e = commutator( expr( wa ).pow( 2 ), expr( wb ).inverse() ) * expr( wa ).pow( -3 );
    const auto direct = oracle::cat( oracle::comm( oracle::cat( a, a ), oracle::naive_inverse( b ) ),
                                     oracle::naive_inverse( oracle::cat( oracle::cat( a, a ), a ) ) );
    CHECK( oracle::of( e.flatten() ) == direct );
    CHECK( e.length() == direct.size() );
    CHECK( oracle::of( e.reduced() ) == oracle::naive_reduce( direct ) );
  }
  CHECK( expr().length() == 0u );
  CHECK( expr( word{ 1, 2 } ).inverse().inverse().flatten().same_sequence( word{ 1, 2 } ) );
}

TEST_CASE( "property: reduction confluence" )
{
  std::mt19937 rng( 1001 );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    auto w = oracle::random_letters( rng, 5, 20 );
    const auto base = reduce( word::from_signed( std::vector<std::int32_t>( w.begin(), w.end() ) ) );
    std::uniform_int_distribution<std::size_t> at( 0, w.size() );
    std::uniform_int_distribution<int> nail( 1, 5 );
    const int x = nail( rng ) * ( rng() % 2 ? 1 : -1 );
    const auto pos = static_cast<long>( at( rng ) );
    w.insert( w.begin() + pos, { x, -x } );
    const auto modified = word::from_signed( std::vector<std::int32_t>( w.begin(), w.end() ) );
    CHECK( reduce( modified ).same_sequence( base ) );
    CHECK( oracle::of( base ) == oracle::naive_reduce( w ) );
    CHECK( reduce( base ).same_sequence( base ) );
  }
}

TEST_CASE( "property: inverse law and homomorphism" )
{
  std::mt19937 rng( 2002 );
  for ( int trial = 0; trial < 1000; ++trial )
  {
    const auto a = oracle::random_letters( rng, 6, 16 );
    const auto b = oracle::random_letters( rng, 6, 16 );
    const auto wa = word::from_signed( std::vector<std::int32_t>( a.begin(), a.end() ) );
    const auto wb = word::from_signed( std::vector<std::int32_t>( b.begin(), b.end() ) );
    CHECK( concat( wa, inverse( wa ) ).empty() );
    CHECK( concat( inverse( wa ), wa ).empty() );
    const nail_subset s( 6, rng() % 64 );
    CHECK( remove_nails( concat( wa, wb ), s ) == concat( remove_nails( wa, s ), remove_nails( wb, s ) ) );
    CHECK( remove_nails( inverse( wa ), s ) == inverse( remove_nails( wa, s ) ) );
  }
}

TEST_CASE( "property: fall tables are monotone and fall on all nails" )
{
  std::mt19937 rng( 3003 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 8 );
    const auto w = oracle::random_letters( rng, n, 30 );
    const auto t = fall_table( word::from_signed( std::vector<std::int32_t>( w.begin(), w.end() ) ), n );
    CHECK( t.is_monotone() );
    CHECK( t[t.size() - 1u] );
    for ( std::uint64_t m = 0; m < t.size(); m += 7 )
    {
      CHECK( t[m] == oracle::naive_falls( w, m ) );
    }
  }
}

}
