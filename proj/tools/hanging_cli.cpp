#include <hanging/compiler.hpp>
#include <hanging/constructions.hpp>
#include <hanging/error.hpp>
#include <hanging/fixtures.hpp>
#include <hanging/io.hpp>
#include <hanging/puzzle_spec.hpp>
#include <hanging/render.hpp>
#include <hanging/sortnet.hpp>
#include <hanging/spectator.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hanging;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

/* thrown for bad argument combinations found after CLI11 parsing */
struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list( const std::string& text )
{
  std::vector<int> out;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    std::size_t used = 0;
    int v = 0;
    try
    {
      v = std::stoi( item, &used );
    }
    catch ( const std::exception& )
    {
      throw usage_error( "bad integer '" + item + "' in list '" + text + "'" );
    }
    if ( used != item.size() )
    {
      throw usage_error( "bad integer '" + item + "' in list '" + text + "'" );
    }
    out.push_back( v );
  }
  if ( out.empty() )
  {
    throw usage_error( "empty list" );
  }
  return out;
}

void write_output( const std::string& path, const std::string& content )
{
  if ( path.empty() )
  {
    std::cout << content;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw std::runtime_error( "cannot write " + path );
  }
  out << content;
}

void print_report_summary( const compile_report& r )
{
  std::cerr << "construction: " << r.construction << ", as-constructed length " << r.as_constructed_length
            << ", reduced length " << r.reduced_length << ", estimate " << r.estimate << ", depth " << r.depth
            << ", verification " << to_string( r.verification ) << '\n';
  for ( const auto& note : r.notes )
  {
    std::cerr << "note: " << note << '\n';
  }
}

int emit_compile( const compile_report& r, bool json, const std::string& report_path )
{
  if ( json )
  {
    nlohmann::json j;
    j["word"] = word_to_json( r.result );
    j["report"] = report_to_json( r );
    std::cout << j.dump() << '\n';
  }
  else
  {
    std::cout << format_word( r.result ) << '\n';
    print_report_summary( r );
  }
  if ( !report_path.empty() )
  {
    write_output( report_path, report_to_json( r ).dump( 2 ) + "\n" );
  }
  return r.verification == verification_status::mismatch ? exit_mismatch : exit_ok;
}

std::string subset_line( const nail_subset& s )
{
  return s.to_string() + " (size " + std::to_string( s.size() ) + ")";
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Picture-hanging words: constructions, compiler, verifier, spectator solver, diagrams" };
  app.require_subcommand( 1 );
  std::function<int()> action;

  /* construct */
  auto* construct = app.add_subcommand( "construct", "Emit a hand-built hanging" );
  construct->require_subcommand( 1 );

  int one_n = 0;
  std::string family = "balanced";
  auto* one_of = construct->add_subcommand( "one-of", "Falls when any one nail is removed" );
  one_of->add_option( "--n", one_n, "Nail count" )->required();
  one_of->add_option( "--family", family, "balanced (E) or exponential (S)" )
      ->check( CLI::IsMember( { "balanced", "exponential" } ) );
  one_of->callback( [&] {
    action = [&] {
      const auto w = family == "balanced" ? build_e( one_n ) : build_s( one_n );
      std::cout << format_word( w ) << '\n';
      return exit_ok;
    };
  } );

  int kof_k = 0;
  int kof_n = 0;
  std::uint64_t budget = compile_options{}.budget;
  int limit = default_exhaustive_limit;
  std::string strategy_name = "auto";
  bool json = false;
  std::string report_path;
  auto* k_of = construct->add_subcommand( "k-of", "Falls when any k nails are removed" );
  k_of->add_option( "--k", kof_k, "Threshold" )->required();
  k_of->add_option( "--n", kof_n, "Nail count" )->required();
  k_of->add_option( "--budget", budget, "Letter budget" );
  k_of->add_option( "--limit", limit, "Exhaustive verification limit on n" );
  k_of->add_option( "--strategy", strategy_name, "auto, gadget or clausal" );
  k_of->add_flag( "--json", json, "Print word and report as JSON" );
  k_of->add_option( "--report", report_path, "Write the JSON report to a file" );
  k_of->callback( [&] {
    action = [&] {
      compile_options options;
      options.budget = budget;
      options.exhaustive_limit = limit;
      options.strategy = parse_strategy( strategy_name );
      return emit_compile( build_k_of_n( kof_k, kof_n, options ), json, report_path );
    };
  } );

  std::vector<std::string> classes;
  auto* by_class = construct->add_subcommand( "classes", "Falls iff some class of nails is fully removed" );
  by_class->add_option( "--class", classes, "Comma-separated nails of one class (repeatable)" )->required();
  by_class->callback( [&] {
    action = [&] {
      std::vector<std::vector<int>> partition;
      for ( const auto& c : classes )
      {
        partition.push_back( parse_int_list( c ) );
      }
      std::cout << format_word( build_disjoint( partition ) ) << '\n';
      return exit_ok;
    };
  } );

  /* compile */
  std::string spec_path;
  std::string formula;
  int formula_n = 0;
  auto* compile_cmd = app.add_subcommand( "compile", "Compile a fall specification into a hanging" );
  auto* spec_opt = compile_cmd->add_option( "--spec", spec_path, "Spec JSON file" );
  auto* formula_opt = compile_cmd->add_option( "--formula", formula, "Monotone formula, e.g. 'r1 & (r2 | r3)'" );
  spec_opt->excludes( formula_opt );
  compile_cmd->add_option( "--n", formula_n, "Nail count for --formula (default: largest variable)" );
  compile_cmd->add_option( "--budget", budget, "Letter budget" );
  compile_cmd->add_option( "--limit", limit, "Exhaustive verification limit on n" );
  compile_cmd->add_option( "--strategy", strategy_name, "auto, gadget or clausal" );
  compile_cmd->add_flag( "--json", json, "Print word and report as JSON" );
  compile_cmd->add_option( "--report", report_path, "Write the JSON report to a file" );
  compile_cmd->callback( [&] {
    action = [&] {
      if ( spec_path.empty() == formula.empty() )
      {
        throw usage_error( "compile needs exactly one of --spec or --formula" );
      }
      const auto spec =
          spec_path.empty() ? puzzle_spec::from_formula( formula_n, formula ) : parse_spec_json( read_file( spec_path ) );
      const auto validation = validate_spec( spec );
      for ( const auto& notice : validation.notices )
      {
        std::cerr << "notice: " << notice << '\n';
      }
      if ( !validation.ok )
      {
        throw unrealizable( validation.violations.front() );
      }
      compile_options options;
      options.budget = budget;
      options.exhaustive_limit = limit;
      options.strategy = parse_strategy( strategy_name );
      return emit_compile( compile( validation.circuit, options ), json, report_path );
    };
  } );

  /* verify */
  std::string word_path;
  auto* verify_cmd = app.add_subcommand( "verify", "Check a word's fall table against a spec" );
  verify_cmd->add_option( "--word", word_path, "Word file (text or JSON array)" )->required();
  verify_cmd->add_option( "--spec", spec_path, "Spec JSON file" )->required();
  verify_cmd->add_option( "--limit", limit, "Exhaustive limit on n" );
  verify_cmd->callback( [&] {
    action = [&] {
      const auto w = read_word( read_file( word_path ) );
      const auto spec = parse_spec_json( read_file( spec_path ) );
      const auto expected = spec_table( spec, limit );
      const auto got = fall_table( w, spec.n, limit );
      if ( const auto diff = got.first_difference( expected ) )
      {
        const nail_subset s( spec.n, *diff );
        std::cout << "mismatch at " << s.to_string() << ": word " << ( got[*diff] ? "falls" : "hangs" )
                  << ", spec expects " << ( expected[*diff] ? "falls" : "hangs" ) << '\n';
        return exit_mismatch;
      }
      std::cout << "verified: " << got.size() << " subsets\n";
      return exit_ok;
    };
  } );

  /* solve */
  int solve_n = 0;
  auto* solve = app.add_subcommand( "solve", "Spectator problems" );
  solve->require_subcommand( 1 );
  const auto add_word_solver = [&]( const char* name, const char* help, auto solver ) {
    auto* sub = solve->add_subcommand( name, help );
    sub->add_option( "--word", word_path, "Word file" )->required();
    sub->add_option( "--n", solve_n, "Nail count" )->required();
    sub->add_option( "--limit", limit, "Exhaustive limit on n" );
    sub->add_flag( "--json", json, "JSON output" );
    sub->callback( [&, solver] {
      action = [&, solver] {
        const auto s = solver( read_word( read_file( word_path ) ), solve_n, limit );
        if ( json )
        {
          std::cout << nlohmann::json{ { "subset", s.members() }, { "size", s.size() } }.dump() << '\n';
        }
        else
        {
          std::cout << subset_line( s ) << '\n';
        }
        return exit_ok;
      };
    } );
  };
  add_word_solver( "min-fell", "Fewest nails whose removal fells the picture",
                   []( const word& w, int n, int lim ) { return min_fell_exact( w, n, lim ); } );
  add_word_solver( "max-survive", "Most nails removable while the picture hangs",
                   []( const word& w, int n, int lim ) { return max_survive_exact( w, n, lim ); } );
  add_word_solver( "greedy", "Greedy felling set (no optimality guarantee)",
                   []( const word& w, int n, int ) { return greedy_min_fell( w, n ); } );

  std::string instance_path;
  auto* set_cover = solve->add_subcommand( "set-cover", "Hanging that falls iff the removed nails index a set cover" );
  set_cover->add_option( "--instance", instance_path, "Instance JSON {\"m\": int, \"sets\": [[...], ...]}" )->required();
  set_cover->add_option( "--budget", budget, "Letter budget" );
  set_cover->add_option( "--limit", limit, "Exhaustive limit on the number of sets" );
  set_cover->add_flag( "--json", json, "JSON output" );
  set_cover->callback( [&] {
    action = [&] {
      const auto instance = parse_set_cover_json( read_file( instance_path ) );
      compile_options options;
      options.budget = budget;
      options.exhaustive_limit = limit;
      const auto h = set_cover_to_hanging( instance, options );
      std::optional<nail_subset> optimum;
      if ( h.n <= limit )
      {
        optimum = min_fell_exact( h.result, h.n, limit );
      }
      if ( json )
      {
        nlohmann::json j;
        j["word"] = word_to_json( h.result );
        j["n"] = h.n;
        j["construction"] = h.construction;
        j["verification"] = to_string( h.verification );
        j["min_cover"] = optimum ? nlohmann::json( optimum->members() ) : nlohmann::json();
        std::cout << j.dump() << '\n';
      }
      else
      {
        std::cout << format_word( h.result ) << '\n';
        std::cerr << "nail i stands for set S_i; construction: " << h.construction
                  << ", verification: " << to_string( h.verification ) << '\n';
        if ( optimum )
        {
          std::cerr << "minimum cover: " << subset_line( *optimum ) << '\n';
        }
      }
      return h.verification == verification_status::mismatch ? exit_mismatch : exit_ok;
    };
  } );

  /* render */
  int render_n = 0;
  std::string format = "text";
  std::string out_path;
  auto* render = app.add_subcommand( "render", "Draw a schematic weaving diagram" );
  render->add_option( "--word", word_path, "Word file" )->required();
  render->add_option( "--n", render_n, "Nail count" )->required();
  render->add_option( "--format", format, "svg or text" );
  render->add_option( "--out", out_path, "Output file (default stdout)" );
  render->callback( [&] {
    action = [&] {
      const auto w = read_word( read_file( word_path ) );
      write_output( out_path, to_diagram( w, render_n, parse_diagram_format( format ) ) );
      return exit_ok;
    };
  } );

  /* puzzles */
  int puzzle_id = 0;
  auto* puzzles = app.add_subcommand( "puzzles", "List the eleven puzzles and their published solutions" );
  puzzles->add_option( "--id", puzzle_id, "Only this puzzle (1..11)" );
  puzzles->add_flag( "--json", json, "JSON output" );
  puzzles->callback( [&] {
    action = [&] {
      std::vector<const puzzle_fixture*> chosen;
      if ( puzzle_id != 0 )
      {
        if ( puzzle_id < 1 || puzzle_id > 11 )
        {
          throw usage_error( "--id must be in 1..11" );
        }
        chosen.push_back( &fixture( puzzle_id ) );
      }
      else
      {
        for ( const auto& f : load_fixtures() )
        {
          chosen.push_back( &f );
        }
      }
      if ( json )
      {
        auto arr = nlohmann::json::array();
        for ( const auto* f : chosen )
        {
          arr.push_back( { { "id", f->id },
                           { "title", f->title },
                           { "statement", f->statement },
                           { "word", f->text },
                           { "spec", spec_to_json( f->spec ) } } );
        }
        std::cout << ( puzzle_id != 0 ? arr.front() : arr ).dump() << '\n';
        return exit_ok;
      }
      bool first = true;
      for ( const auto* f : chosen )
      {
        if ( !first )
        {
          std::cout << '\n';
        }
        first = false;
        std::cout << "puzzle " << f->id << " (" << f->title << "): " << f->statement << '\n'
                  << f->text << '\n'
                  << "spec: " << describe( f->spec ) << '\n';
      }
      return exit_ok;
    };
  } );

  /* table */
  int table_n = 0;
  auto* table = app.add_subcommand( "table", "Print the fall table of a word or a spec" );
  auto* table_word = table->add_option( "--word", word_path, "Word file" );
  auto* table_spec = table->add_option( "--spec", spec_path, "Spec JSON file" );
  table_word->excludes( table_spec );
  table->add_option( "--n", table_n, "Nail count (with --word)" );
  table->add_option( "--limit", limit, "Exhaustive limit on n" );
  table->callback( [&] {
    action = [&] {
      truth_table t;
      if ( !word_path.empty() )
      {
        if ( table_n < 1 )
        {
          throw usage_error( "table --word needs --n" );
        }
        t = fall_table( read_word( read_file( word_path ) ), table_n, limit );
      }
      else if ( !spec_path.empty() )
      {
        t = spec_table( parse_spec_json( read_file( spec_path ) ), limit );
      }
      else
      {
        throw usage_error( "table needs --word or --spec" );
      }
      for ( std::uint64_t m = 0; m < t.size(); ++m )
      {
        std::cout << nail_subset( t.n(), m ).to_string() << ' ' << ( t[m] ? "falls" : "hangs" ) << '\n';
      }
      return exit_ok;
    };
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::CallForAllHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_input;
  }

  try
  {
    return action ? action() : exit_input;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
