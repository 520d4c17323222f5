#include <hanging/fixtures.hpp>

#include <stdexcept>
#include <string>

namespace hanging
{

namespace
{

struct raw_fixture
{
  int id;
  int n;
  const char* title;
  const char* text;
  std::vector<std::vector<int>> subsets;
  const char* statement;
};

std::vector<puzzle_fixture> make_fixtures()
{
  const std::vector<raw_fixture> raw = {
    { 1, 3, "1-out-of-3",
        "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2",
      {{1},{2},{3}},
      "removing any one of the three nails fells the picture" },
    { 2, 3, "2-out-of-3",
        "x1 x2 x3 X1 X2 X3",
      {{1,2},{1,3},{2,3}},
      "removing any two of the three nails fells the picture, removing one does not" },
    { 3, 3, "1+2-out-of-3",
        "x1 x2 x3 X1 X3 X2",
      {{1},{2,3}},
      "removing the first nail fells the picture, or removing both of the other two" },
    { 4, 4, "1-out-of-4",
        "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3",
      {{1},{2},{3},{4}},
      "removing any one of the four nails fells the picture" },
    { 5, 4, "2-out-of-4",
        "x1 x2 x1 x3 x1 x4 X3 X1 X4 X1 X2 X1 x1 x4 x1 x3 X4 X1 X3 X1 x2 x3 x2 x4 x3 x4 X4 X2 X4 X3 "
        "X3 X2 x3 x4 x2 x4 X4 X3 X4 X2 x1 x3 x1 x4 X3 X1 X4 X1 x1 x2 x1 x4 x1 x3 X4 X1 X3 X1 X2 X1 "
        "x2 x4 x3 x4 X4 X2 X4 X3 x2 x3 x3 x4 x2 x4 X4 X3 X4 X2 X3 X2",
      {{1,2},{1,3},{1,4},{2,3},{2,4},{3,4}},
      "removing any two of the four nails fells the picture, removing one does not" },
    { 6, 4, "3-out-of-4",
        "x1 x2 x3 x4 X1 X2 X3 X4",
      {{1,2,3},{1,2,4},{1,3,4},{2,3,4}},
      "removing any three of the four nails fells the picture, removing two does not" },
    { 7, 4, "2+2-out-of-2+2",
        "x1 x2 x3 x4 X2 X1 X4 X3",
      {{1,2},{3,4}},
      "two red and two blue nails: removing both red nails or both blue nails fells the picture" },
    { 8, 4, "1+2-out-of-2+2",
        "x1 x2 X1 X2 x3 x4 x2 x1 X2 X1 X4 X3",
      {{1},{2},{3,4}},
      "removing either red nail fells the picture, or removing both blue nails" },
    { 9, 6, "1+3-out-of-3+3",
        "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2 x4 x5 x6 x2 x3 X2 X3 x1 x3 x2 X3 X2 X1 X6 X5 X4",
      {{1},{2},{3},{4,5,6}},
      "removing any one red nail fells the picture, or removing all three blue nails" },
    { 10, 6, "1+2-out-of-3+3",
        "x1 x2 x3 X2 X3 X1 x3 x2 X3 X2 x4 x5 x6 X4 X5 X6 x2 x3 X2 X3 x1 x3 x2 X3 X2 X1 x6 x5 x4 X6 "
        "X5 X4",
      {{1},{2},{3},{4,5},{4,6},{5,6}},
      "removing any one red nail fells the picture, or removing any two of the three blue nails" },
    { 11, 6, "1+1-out-of-2+2+2",
        "x1 x3 x2 x4 x1 x5 X4 X2 X5 X1 X3 X1 x1 x5 x2 x4 X5 X1 X4 X2 x3 x6 x1 x4 x2 x3 X4 X1 X3 X2 "
        "X6 X3 x2 x3 x1 x4 X3 X2 X4 X1 x2 x4 x1 x5 X4 X2 X5 X1 x1 x3 x1 x5 x2 x4 X5 X1 X4 X2 X3 X1 "
        "x1 x4 x2 x3 X4 X1 X3 X2 x3 x6 x2 x3 x1 x4 X3 X2 X4 X1 X6 X3 x1 x6 x2 x5 x4 x6 X5 X2 X6 X4 "
        "X6 X1 x4 x6 x2 x5 X6 X4 X5 X2 x3 x5 x2 x6 x4 x5 X6 X2 X5 X4 X5 X3 x4 x5 x2 x6 X5 X4 X6 X2 "
        "x2 x5 x4 x6 X5 X2 X6 X4 x1 x6 x4 x6 x2 x5 X6 X4 X5 X2 X6 X1 x2 x6 x4 x5 X6 X2 X5 X4 x3 x5 "
        "x4 x5 x2 x6 X5 X4 X6 X2 X5 X3 x3 x6 x1 x4 x2 x3 X4 X1 X3 X2 X6 X3 x2 x3 x1 x4 X3 X2 X4 X1 "
        "x1 x3 x2 x4 x1 x5 X4 X2 X5 X1 X3 X1 x1 x5 x2 x4 X5 X1 X4 X2 x1 x4 x2 x3 X4 X1 X3 X2 x3 x6 "
        "x2 x3 x1 x4 X3 X2 X4 X1 X6 X3 x2 x4 x1 x5 X4 X2 X5 X1 x1 x3 x1 x5 x2 x4 X5 X1 X4 X2 X3 X1 "
        "x3 x5 x2 x6 x4 x5 X6 X2 X5 X4 X5 X3 x4 x5 x2 x6 X5 X4 X6 X2 x1 x6 x2 x5 x4 x6 X5 X2 X6 X4 "
        "X6 X1 x4 x6 x2 x5 X6 X4 X5 X2 x2 x6 x4 x5 X6 X2 X5 X4 x3 x5 x4 x5 x2 x6 X5 X4 X6 X2 X5 X3 "
        "x2 x5 x4 x6 X5 X2 X6 X4 x1 x6 x4 x6 x2 x5 X6 X4 X5 X2 X6 X1",
      {{1,3},{1,4},{1,5},{1,6},{2,3},{2,4},{2,5},{2,6},{3,5},{3,6},{4,5},{4,6}},
      "three colors, two nails each: removing two nails of different colors fells the picture, removing both nails of one color does not" },
  };
  std::vector<puzzle_fixture> out;
  for ( const auto& r : raw )
  {
    puzzle_fixture f;
    f.id = r.id;
    f.n = r.n;
    f.title = r.title;
    f.text = r.text;
    f.solution = parse_word( f.text );
    f.spec = puzzle_spec::from_subsets( r.n, r.subsets );
    f.statement = r.statement;
    out.push_back( std::move( f ) );
  }
  return out;
}

} // namespace

const std::vector<puzzle_fixture>& load_fixtures()
{
  static const auto fixtures = make_fixtures();
  return fixtures;
}

const puzzle_fixture& fixture( int id )
{
  if ( id < 1 || id > 11 )
  {
    throw std::out_of_range( "puzzle id " + std::to_string( id ) + " outside 1..11" );
  }
  return load_fixtures()[static_cast<std::size_t>( id - 1 )];
}

} // namespace hanging
