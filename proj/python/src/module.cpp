#include <hanging/compiler.hpp>
#include <hanging/constructions.hpp>
#include <hanging/error.hpp>
#include <hanging/fixtures.hpp>
#include <hanging/formula.hpp>
#include <hanging/render.hpp>
#include <hanging/sortnet.hpp>
#include <hanging/spectator.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hanging;

namespace
{

/* words cross the boundary as lists of signed nail indices (+i = x_i, -i = X_i) */
using signed_word = std::vector<std::int32_t>;

word from_list( const signed_word& w )
{
  return word::from_signed( w );
}

nail_subset subset_of( const word& w, int n, const std::vector<int>& members )
{
  return nail_subset::of( std::max( n, w.max_nail() ), members );
}

py::dict report_dict( const compile_report& r )
{
  py::dict d;
  d["word"] = r.result.to_signed();
  d["n"] = r.n;
  d["construction"] = r.construction;
  d["as_constructed_length"] = r.as_constructed_length;
  d["reduced_length"] = r.reduced_length;
  d["estimate"] = r.estimate;
  d["gadget_estimate"] = r.gadget_estimate;
  d["depth"] = r.depth;
  d["verification"] = to_string( r.verification );
  d["gadget_witness"] = r.gadget_witness ? py::cast( r.gadget_witness->members() ) : py::none();
  d["notes"] = r.notes;
  return d;
}

compile_options options_of( const std::string& strategy, std::uint64_t budget )
{
  compile_options options;
  options.strategy = parse_strategy( strategy );
  options.budget = budget;
  return options;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "Picture-hanging puzzles: free-group words, constructions, compiler and solvers";

  py::register_exception<parse_error>( m, "ParseError", PyExc_ValueError );
  py::register_exception<limit_exceeded>( m, "LimitExceeded", PyExc_ValueError );
  py::register_exception<budget_exceeded>( m, "BudgetExceeded", PyExc_ValueError );
  py::register_exception<unrealizable>( m, "Unrealizable", PyExc_ValueError );

  m.def( "parse_word", []( const std::string& text ) { return parse_word( text ).to_signed(); }, py::arg( "text" ) );
  m.def( "format_word", []( const signed_word& w ) { return format_word( from_list( w ) ); }, py::arg( "word" ) );
  m.def( "reduce", []( const signed_word& w ) { return reduce( from_list( w ) ).to_signed(); }, py::arg( "word" ) );
  m.def(
      "remove_nails",
      []( const signed_word& w, const std::vector<int>& removed ) {
        const auto x = from_list( w );
        return remove_nails( x, subset_of( x, 0, removed ) ).to_signed();
      },
      py::arg( "word" ), py::arg( "removed" ) );
  m.def(
      "falls",
      []( const signed_word& w, const std::vector<int>& removed ) {
        const auto x = from_list( w );
        return falls( x, subset_of( x, 0, removed ) );
      },
      py::arg( "word" ), py::arg( "removed" ) );
  m.def(
      "fall_table",
      []( const signed_word& w, int n ) {
        const auto t = fall_table( from_list( w ), n );
        std::vector<bool> out;
        for ( std::uint64_t s = 0; s < t.size(); ++s )
        {
          out.push_back( t[s] );
        }
        return out;
      },
      py::arg( "word" ), py::arg( "n" ) );

  m.def( "build_s", []( int n ) { return build_s( n ).to_signed(); }, py::arg( "n" ) );
  m.def( "build_e", []( int n ) { return build_e( n ).to_signed(); }, py::arg( "n" ) );
  m.def(
      "build_disjoint", []( const std::vector<std::vector<int>>& partition ) { return build_disjoint( partition ).to_signed(); },
      py::arg( "partition" ) );

  m.def(
      "compile_formula",
      []( const std::string& formula, int n, const std::string& strategy, std::uint64_t budget ) {
        return report_dict( compile( parse_formula( formula, n ), options_of( strategy, budget ) ) );
      },
      py::arg( "formula" ), py::arg( "n" ) = 0, py::arg( "strategy" ) = "auto",
      py::arg( "budget" ) = compile_options{}.budget );
  m.def(
      "estimate_length", []( const std::string& formula, int n ) { return estimate_length( parse_formula( formula, n ) ); },
      py::arg( "formula" ), py::arg( "n" ) = 0 );
  m.def(
      "build_k_of_n",
      []( int k, int n, const std::string& strategy, std::uint64_t budget ) {
        return report_dict( build_k_of_n( k, n, options_of( strategy, budget ) ) );
      },
      py::arg( "k" ), py::arg( "n" ), py::arg( "strategy" ) = "auto", py::arg( "budget" ) = compile_options{}.budget );

  m.def(
      "min_fell", []( const signed_word& w, int n ) { return min_fell_exact( from_list( w ), n ).members(); },
      py::arg( "word" ), py::arg( "n" ) );
  m.def(
      "max_survive", []( const signed_word& w, int n ) { return max_survive_exact( from_list( w ), n ).members(); },
      py::arg( "word" ), py::arg( "n" ) );
  m.def(
      "greedy_min_fell", []( const signed_word& w, int n ) { return greedy_min_fell( from_list( w ), n ).members(); },
      py::arg( "word" ), py::arg( "n" ) );
  m.def(
      "set_cover",
      []( int universe, const std::vector<std::vector<int>>& sets ) {
        const auto h = set_cover_to_hanging( { universe, sets } );
        py::dict d;
        d["word"] = h.result.to_signed();
        d["n"] = h.n;
        d["construction"] = h.construction;
        d["verification"] = to_string( h.verification );
        return d;
      },
      py::arg( "m" ), py::arg( "sets" ) );

  m.def(
      "render",
      []( const signed_word& w, int n, const std::string& format ) {
        return to_diagram( from_list( w ), n, parse_diagram_format( format ) );
      },
      py::arg( "word" ), py::arg( "n" ), py::arg( "format" ) = "text" );

  m.def( "fixture_ids", [] {
    std::vector<int> ids;
    for ( const auto& f : load_fixtures() )
    {
      ids.push_back( f.id );
    }
    return ids;
  } );
  m.def(
      "fixture",
      []( int id ) {
        const auto& f = fixture( id );
        py::dict d;
        d["id"] = f.id;
        d["n"] = f.n;
        d["title"] = f.title;
        d["text"] = f.text;
        d["word"] = f.solution.to_signed();
        d["statement"] = f.statement;
        return d;
      },
      py::arg( "id" ) );
}
