#include <hanging/error.hpp>
#include <hanging/io.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace hanging
{

namespace
{

nlohmann::json parse_json( std::string_view content )
{
  try
  {
    return nlohmann::json::parse( content );
  }
  catch ( const nlohmann::json::parse_error& e )
  {
    throw parse_error( std::string( "malformed JSON: " ) + e.what(), e.byte > 0 ? e.byte - 1u : 0u );
  }
}

template<class T>
T field( const nlohmann::json& j, const char* name )
{
  if ( !j.is_object() || !j.contains( name ) )
  {
    throw parse_error( std::string( "missing field \"" ) + name + "\"", 0 );
  }
  try
  {
    return j.at( name ).get<T>();
  }
  catch ( const nlohmann::json::exception& )
  {
    throw parse_error( std::string( "field \"" ) + name + "\" has the wrong type", 0 );
  }
}

} // namespace

word read_word( std::string_view content )
{
  const auto first = content.find_first_not_of( " \t\r\n" );
  if ( first == std::string_view::npos || content[first] != '[' )
  {
    return parse_word( content );
  }
  const auto j = parse_json( content );
  if ( !j.is_array() )
  {
    throw parse_error( "word JSON must be an array of integers", first );
  }
  std::vector<std::int32_t> values;
  for ( std::size_t i = 0; i < j.size(); ++i )
  {
    const auto& v = j[i];
    if ( !v.is_number_integer() || v.get<std::int64_t>() == 0 || v.get<std::int64_t>() > INT32_MAX ||
         v.get<std::int64_t>() < -INT32_MAX )
    {
      throw parse_error( "word JSON entries must be nonzero 32-bit integers (entry " + std::to_string( i ) + ")",
                         first );
    }
    values.push_back( static_cast<std::int32_t>( v.get<std::int64_t>() ) );
  }
  return word::from_signed( values );
}

nlohmann::json word_to_json( const word& w )
{
  return nlohmann::json( w.to_signed() );
}

puzzle_spec parse_spec_json( std::string_view content )
{
  const auto j = parse_json( content );
  const auto n = field<int>( j, "n" );
  if ( n < 1 || n > 64 )
  {
    throw parse_error( "\"n\" must be in 1..64", 0 );
  }
  const int bodies = static_cast<int>( j.contains( "subsets" ) ) + static_cast<int>( j.contains( "formula" ) ) +
                     static_cast<int>( j.contains( "threshold_k" ) );
  if ( bodies != 1 )
  {
    throw parse_error( "spec needs exactly one of \"subsets\", \"formula\", \"threshold_k\"", 0 );
  }
  if ( j.contains( "subsets" ) )
  {
    return puzzle_spec::from_subsets( n, field<std::vector<std::vector<int>>>( j, "subsets" ) );
  }
  if ( j.contains( "formula" ) )
  {
    return puzzle_spec::from_formula( n, field<std::string>( j, "formula" ) );
  }
  return puzzle_spec::from_threshold( n, field<int>( j, "threshold_k" ) );
}

nlohmann::json spec_to_json( const puzzle_spec& spec )
{
  nlohmann::json j;
  j["n"] = spec.n;
  if ( const auto* s = std::get_if<subset_list>( &spec.body ) )
  {
    j["subsets"] = s->subsets;
  }
  else if ( const auto* t = std::get_if<threshold>( &spec.body ) )
  {
    j["threshold_k"] = t->k;
  }
  else
  {
    j["formula"] = spec.formula_text ? *spec.formula_text : to_formula( std::get<monotone_circuit>( spec.body ) );
  }
  return j;
}

set_cover_instance parse_set_cover_json( std::string_view content )
{
  const auto j = parse_json( content );
  set_cover_instance instance;
  instance.m = field<int>( j, "m" );
  instance.sets = field<std::vector<std::vector<int>>>( j, "sets" );
  return instance;
}

nlohmann::json report_to_json( const compile_report& report )
{
  nlohmann::json j;
  j["n"] = report.n;
  j["construction"] = report.construction;
  j["as_constructed_length"] = report.as_constructed_length;
  j["reduced_length"] = report.reduced_length;
  j["estimate"] = report.estimate;
  j["gadget_estimate"] = report.gadget_estimate;
  j["depth"] = report.depth;
  j["bound"] = report.bound;
  j["verification"] = to_string( report.verification );
  j["gadget_witness"] = report.gadget_witness ? nlohmann::json( report.gadget_witness->members() ) : nlohmann::json();
  j["notes"] = report.notes;
  return j;
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot read " + path );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace hanging
