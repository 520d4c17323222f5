#include "test_support.hpp"

#include <hanging/error.hpp>
#include <hanging/fixtures.hpp>
#include <hanging/io.hpp>

#include <doctest.h>

using namespace hanging;

TEST_SUITE( "fixtures" )
{

TEST_CASE( "eleven fixtures verify against their puzzle statements" )
{
  const auto& all = load_fixtures();
  REQUIRE( all.size() == 11u );
  for ( const auto& f : all )
  {
    const auto& subsets = std::get<subset_list>( f.spec.body ).subsets;
    CHECK_MESSAGE( oracle::naive_table( oracle::parse( f.text ), f.n ) == oracle::dnf_table( f.n, subsets ),
                   "puzzle " << f.id );
    CHECK( fall_table( f.solution, f.n ) == spec_table( f.spec ) );
  }
}

TEST_CASE( "fixture words and specs" )
{
  CHECK( fixture( 1 ).text == "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2" );
  CHECK( fixture( 7 ).text == "x1 x2 x3 x4 X2 X1 X4 X3" );
  CHECK( std::get<subset_list>( fixture( 3 ).spec.body ).subsets == std::vector<std::vector<int>>{ { 1 }, { 2, 3 } } );
  CHECK( fixture( 5 ).solution.size() == 80u );
  CHECK( fixture( 11 ).solution.size() == 320u );
  CHECK_THROWS_AS( fixture( 12 ), std::out_of_range );
}

TEST_CASE( "long solutions equal their commutator expressions" )
{
  using oracle::comm;
  const auto s5 = comm( comm( { 1, 2 }, comm( { 1, 3 }, { 1, 4 } ) ), comm( { 2, 3 }, comm( { 2, 4 }, { 3, 4 } ) ) );
  CHECK( oracle::of( fixture( 5 ).solution ) == s5 );
  const auto s11 = comm( comm( comm( { 1, 3 }, comm( { 2, 4 }, { 1, 5 } ) ), comm( { 3, 6 }, comm( { 1, 4 }, { 2, 3 } ) ) ),
                         comm( comm( { 1, 6 }, comm( { 2, 5 }, { 4, 6 } ) ), comm( { 3, 5 }, comm( { 2, 6 }, { 4, 5 } ) ) ) );
  CHECK( oracle::of( fixture( 11 ).solution ) == s11 );
}

TEST_CASE( "text round trip is byte-identical" )
{
  for ( const auto& f : load_fixtures() )
  {
    CHECK( format_word( parse_word( f.text ) ) == f.text );
    CHECK( read_word( word_to_json( f.solution ).dump() ).same_sequence( f.solution ) );
  }
}

TEST_CASE( "spec JSON" )
{
  const auto s = parse_spec_json( R"({"n": 3, "subsets": [[1], [2, 3]]})" );
  CHECK( s.n == 3 );
  CHECK( spec_to_json( s ).dump() == R"({"n":3,"subsets":[[1],[2,3]]})" );
  CHECK( parse_spec_json( R"({"n": 4, "threshold_k": 2})" ).n == 4 );
  const auto f = parse_spec_json( R"j({"n": 3, "formula": "r1 & (r2 | r3)"})j" );
  CHECK( spec_to_json( f )["formula"] == "r1 & (r2 | r3)" );
  CHECK_THROWS_AS( parse_spec_json( "{" ), parse_error );
  CHECK_THROWS_AS( parse_spec_json( R"({"subsets": [[1]]})" ), parse_error );
  CHECK_THROWS_AS( parse_spec_json( R"({"n": 2, "subsets": [[1]], "threshold_k": 1})" ), parse_error );
  CHECK_THROWS_AS( parse_spec_json( R"({"n": "x", "subsets": [[1]]})" ), parse_error );
  CHECK_THROWS_AS( read_word( "[1, 0]" ), parse_error );
  CHECK_THROWS_AS( read_word( "[1, \"a\"]" ), parse_error );
  CHECK( read_word( " [1, -2]" ).same_sequence( word{ 1, -2 } ) );
}

}
