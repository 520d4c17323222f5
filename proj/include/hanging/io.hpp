#pragma once

#include <hanging/compiler.hpp>
#include <hanging/puzzle_spec.hpp>
#include <hanging/spectator.hpp>
#include <hanging/word.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace hanging
{

/* Word file contents: a JSON array of nonzero integers when the first
 * non-blank character is '[', the text format otherwise. */
word read_word( std::string_view content );
nlohmann::json word_to_json( const word& w );

/*! \brief Spec JSON: {"n", "subsets"}, {"n", "formula"} or {"n", "threshold_k"}.
 *  \throws parse_error for malformed JSON or a missing/ill-typed field */
puzzle_spec parse_spec_json( std::string_view content );
nlohmann::json spec_to_json( const puzzle_spec& spec );

/* {"m": int, "sets": [[int, ...], ...]} */
set_cover_instance parse_set_cover_json( std::string_view content );

nlohmann::json report_to_json( const compile_report& report );

/* whole file; \throws std::runtime_error when it cannot be read */
std::string read_file( const std::string& path );

} // namespace hanging
