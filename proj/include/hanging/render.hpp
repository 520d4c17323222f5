#pragma once

#include <hanging/word.hpp>

#include <string>

namespace hanging
{

enum class diagram_format
{
  svg,
  text
};

/* "svg" or "text"; \throws std::invalid_argument otherwise */
diagram_format parse_diagram_format( const std::string& name );

/*! \brief Schematic weaving diagram.
 *
 * Nails 1..n sit left to right; the rope makes one loop per letter, in word
 * order, clockwise for x_i and counterclockwise for X_i. The legend gives the
 * letter count and per-nail wrap counts. Output depends only on the inputs.
 * Requires n >= w.max_nail().
 */
std::string to_diagram( const word& w, int n, diagram_format format );

} // namespace hanging
