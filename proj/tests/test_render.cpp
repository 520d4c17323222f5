#include <hanging/constructions.hpp>
#include <hanging/render.hpp>

#include <doctest.h>

using namespace hanging;

TEST_SUITE( "render" )
{

TEST_CASE( "empty word as text" )
{
  const auto text = to_diagram( word{}, 2, diagram_format::text );
  CHECK( text.find( "0 letters" ) != std::string::npos );
  CHECK( text.find( "nail 1: 0 wraps" ) != std::string::npos );
  CHECK( text.find( "nail 2: 0 wraps" ) != std::string::npos );
  CHECK( text.find( '>' ) == std::string::npos );
}

TEST_CASE( "commutator as SVG" )
{
  const auto svg = to_diagram( word{ 1, 2, -1, -2 }, 2, diagram_format::svg );
  CHECK( svg.rfind( "<svg", 0 ) == 0u );
  CHECK( svg.find( "</svg>" ) != std::string::npos );
  /* four wraps, two arcs each; sweep 1 for clockwise */
  std::size_t arcs = 0;
  for ( auto pos = svg.find( " A " ); pos != std::string::npos; pos = svg.find( " A ", pos + 1 ) )
  {
    ++arcs;
  }
  CHECK( arcs == 8u );
  const auto first = svg.find( "x1 cw" );
  const auto second = svg.find( "x2 cw" );
  const auto third = svg.find( "X1 ccw" );
  const auto fourth = svg.find( "X2 ccw" );
  CHECK( first < second );
  CHECK( second < third );
  CHECK( third < fourth );
  CHECK( svg.find( "4 letters" ) != std::string::npos );
}

TEST_CASE( "legend tallies" )
{
  const auto text = to_diagram( build_e( 4 ), 4, diagram_format::text );
  CHECK( text.find( "16 letters" ) != std::string::npos );
  for ( int i = 1; i <= 4; ++i )
  {
    CHECK( text.find( "nail " + std::to_string( i ) + ": 4 wraps (2 cw, 2 ccw)" ) != std::string::npos );
  }
}

TEST_CASE( "deterministic output and errors" )
{
  const auto w = build_s( 3 );
  CHECK( to_diagram( w, 3, diagram_format::svg ) == to_diagram( w, 3, diagram_format::svg ) );
  CHECK( to_diagram( w, 3, diagram_format::text ) == to_diagram( w, 3, diagram_format::text ) );
  CHECK_THROWS_AS( parse_diagram_format( "png" ), std::invalid_argument );
  CHECK_THROWS_AS( to_diagram( w, 2, diagram_format::text ), std::invalid_argument );
}

}
