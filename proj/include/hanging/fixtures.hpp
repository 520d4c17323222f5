#pragma once

#include <hanging/puzzle_spec.hpp>
#include <hanging/word.hpp>

#include <string>
#include <vector>

namespace hanging
{

/*! \brief One of the eleven puzzles with its published solution word.
 *
 * `text` is the solution exactly as printed (some are not freely reduced);
 * `spec` encodes the puzzle statement as minimal fell-subsets. Colored nails
 * are numbered class by class: red first, then blue (then green/blue for the
 * three-color puzzle, classes {1,2}, {3,4}, {5,6}).
 */
struct puzzle_fixture
{
  int id = 0;
  int n = 0;
  std::string title;
  std::string text;
  word solution;
  puzzle_spec spec;
  std::string statement;
};

const std::vector<puzzle_fixture>& load_fixtures();
/* \throws std::out_of_range for ids outside 1..11 */
const puzzle_fixture& fixture( int id );

} // namespace hanging
