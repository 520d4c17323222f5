#include <hanging/compiler.hpp>
#include <hanging/constructions.hpp>
#include <hanging/error.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hanging
{

namespace
{

/* letter-steps above which a compile result is left unverified */
constexpr double verify_work_limit = 4e10;

constexpr int placeholder_p = 1'000'001;
constexpr int placeholder_q = 1'000'002;

expr x( int nail )
{
  return expr( letter::clockwise( nail ) );
}

template_counts count_template( const expr& e )
{
  template_counts counts;
  const auto flat = e.flatten();
  for ( auto l : flat.letters() )
  {
    if ( l.nail() == placeholder_p )
    {
      ++counts.p;
    }
    else if ( l.nail() == placeholder_q )
    {
      ++counts.q;
    }
    else
    {
      ++counts.aux;
    }
  }
  return counts;
}

struct built_word
{
  word result;
  std::uint64_t as_constructed = 0;
};

built_word finish( const expr& e )
{
  return { e.reduced(), e.length() };
}

void check_realizable( const truth_table& f )
{
  if ( !f.is_monotone() )
  {
    throw unrealizable( "fall function is not monotone" );
  }
  if ( !f[f.size() - 1u] )
  {
    throw unrealizable( "the picture must fall once every nail is removed" );
  }
  if ( f[0] && f.count() != f.size() )
  {
    throw unrealizable( "only the always-fallen function falls with no nail removed" );
  }
}

/* visits the clauses last to first, flagging the last one */
template<class Step>
void clause_chain( const std::vector<std::vector<int>>& clauses, Step&& step )
{
  for ( auto i = clauses.size(); i-- > 0; )
  {
    step( clauses[i], i + 1u == clauses.size() );
  }
}

built_word clausal_build( const truth_table& f )
{
  check_realizable( f );
  const auto clauses = minimal_clauses( f );
  if ( clauses.empty() )
  {
    return {};
  }
  built_word rest;
  clause_chain( clauses, [&]( const std::vector<int>& clause, bool last ) {
    const auto p = e_expr( clause );
    if ( last )
    {
      rest = finish( p );
      return;
    }
    const expr r( rest.result );
    const auto u = clause.size() >= 2u ? x( clause.front() ) : r;
    rest = finish( gadget_and_expr( p, r, u, u ) );
  } );
  return rest;
}

double pow_bound( int depth )
{
  return std::pow( 1078.0, depth );
}

/* sets report.verification; returns the first disagreeing subset */
std::optional<nail_subset> verify_into( compile_report& report, const truth_table& expected, int limit )
{
  const auto work = std::ldexp( static_cast<double>( std::max<std::uint64_t>( report.result.size(), 1u ) ), report.n );
  if ( work > verify_work_limit )
  {
    report.verification = verification_status::unverified;
    report.notes.push_back( "verification skipped: 2^n * length exceeds the work limit" );
    return std::nullopt;
  }
  const auto got = fall_table( report.result, report.n, limit );
  const auto diff = got.first_difference( expected );
  report.verification = diff ? verification_status::mismatch : verification_status::verified;
  if ( diff )
  {
    return nail_subset( report.n, *diff );
  }
  return std::nullopt;
}

} // namespace

expr gadget_and_expr( const expr& p, const expr& q, const expr& u, const expr& v )
{
  const auto p2 = p * p;
  const auto inner = q * v * q * v.inverse();
  return p2 * u * p2 * u.inverse() * inner.pow( -2 );
}

expr gadget_and_expr( const expr& p, const expr& q )
{
  return gadget_and_expr( p, q, x( 1 ), x( 2 ) );
}

expr gadget_or_expr( const expr& p, const expr& q )
{
  const auto a = [&]( int s ) {
    const auto xs = x( 1 ).pow( s );
    return p * xs * p * xs.inverse();
  };
  const auto b = [&]( int t ) {
    const auto xt = x( 2 ).pow( t );
    return q * xt * q * xt.inverse();
  };
  return gadget_and_expr( gadget_and_expr( commutator( a( 1 ), b( 1 ) ), commutator( a( 1 ), b( -1 ) ) ),
                          gadget_and_expr( commutator( a( -1 ), b( 1 ) ), commutator( a( -1 ), b( -1 ) ) ) );
}

word gadget_and( const word& p, const word& q )
{
  return gadget_and_expr( expr( p ), expr( q ) ).reduced();
}

word gadget_or( const word& p, const word& q )
{
  return gadget_or_expr( expr( p ), expr( q ) ).reduced();
}

template_counts gadget_and_counts()
{
  return count_template( gadget_and_expr( x( placeholder_p ), x( placeholder_q ) ) );
}

template_counts gadget_or_counts()
{
  return count_template( gadget_or_expr( x( placeholder_p ), x( placeholder_q ) ) );
}

std::uint64_t estimate_length( const monotone_circuit& c )
{
  const auto f = c.folded();
  if ( f.constant_value() )
  {
    return 0u;
  }
  static const auto and_counts = gadget_and_counts();
  static const auto or_counts = gadget_or_counts();
  std::vector<std::uint64_t> est( f.size(), 0u );
  for ( node_id id = 0; id < f.size(); ++id )
  {
    const auto& g = f.at( id );
    if ( g.kind == gate_kind::input )
    {
      est[id] = 1u;
      continue;
    }
    const auto& t = g.kind == gate_kind::and_gate ? and_counts : or_counts;
    est[id] = sat_add( sat_add( sat_mul( t.p, est[g.lhs] ), sat_mul( t.q, est[g.rhs] ) ), t.aux );
  }
  return est[f.output()];
}

std::vector<std::vector<int>> minimal_clauses( const truth_table& f )
{
  std::vector<std::vector<int>> clauses;
  const int n = f.n();
  for ( std::uint64_t m = 0; m < f.size(); ++m )
  {
    if ( f[m] )
    {
      continue;
    }
    bool maximal = true;
    for ( int i = 0; i < n && maximal; ++i )
    {
      const auto up = m | ( std::uint64_t{ 1 } << i );
      maximal = up == m || f[up];
    }
    if ( maximal )
    {
      std::vector<int> clause;
      for ( int i = 0; i < n; ++i )
      {
        if ( ( ( m >> i ) & 1u ) == 0u )
        {
          clause.push_back( i + 1 );
        }
      }
      clauses.push_back( std::move( clause ) );
    }
  }
  std::sort( clauses.begin(), clauses.end(), []( const auto& a, const auto& b ) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  } );
  return clauses;
}

word clausal_word( const truth_table& f )
{
  return clausal_build( f ).result;
}

std::uint64_t clausal_estimate( const truth_table& f )
{
  check_realizable( f );
  const auto clauses = minimal_clauses( f );
  std::uint64_t rest = 0;
  clause_chain( clauses, [&]( const std::vector<int>& clause, bool last ) {
    const auto p = e_length_formula( static_cast<int>( clause.size() ) );
    if ( last )
    {
      rest = p;
      return;
    }
    /* u = v is a single letter or the rest of the chain */
    const auto u = clause.size() >= 2u ? std::uint64_t{ 1 } : rest;
    rest = sat_add( sat_add( sat_mul( 4u, p ), sat_mul( 4u, rest ) ), sat_mul( 6u, u ) );
  } );
  return rest;
}

compile_report compile( const monotone_circuit& c, const compile_options& options )
{
  compile_report report;
  report.n = c.n();
  const auto folded = c.folded();
  report.depth = folded.depth();
  report.bound = pow_bound( report.depth );
  report.gadget_estimate = estimate_length( folded );

  if ( const auto value = folded.constant_value() )
  {
    if ( !*value )
    {
      throw unrealizable( "constantly false specification: the picture must fall once every nail is removed" );
    }
    report.construction = "empty";
    report.verification = verification_status::verified;
    return report;
  }

  const bool exhaustive = report.n <= options.exhaustive_limit && report.n <= 30;
  std::optional<truth_table> expected;
  const auto table = [&]() -> const truth_table& {
    if ( !expected )
    {
      expected = circuit_table( folded, options.exhaustive_limit );
    }
    return *expected;
  };

  const auto run_clausal = [&]( const std::string& why ) {
    if ( !why.empty() )
    {
      report.notes.push_back( why );
    }
    const auto estimate = clausal_estimate( table() );
    if ( estimate > options.budget )
    {
      throw budget_exceeded( estimate, options.budget );
    }
    auto built = clausal_build( table() );
    report.construction = "clausal";
    report.result = std::move( built.result );
    report.as_constructed_length = built.as_constructed;
    report.estimate = estimate;
    report.reduced_length = report.result.size();
    if ( const auto bad = verify_into( report, table(), options.exhaustive_limit ) )
    {
      report.notes.push_back( "clausal word fails on " + bad->to_string() );
    }
  };

  if ( options.strategy == compile_strategy::clausal )
  {
    check_exhaustive_limit( report.n, options.exhaustive_limit );
    run_clausal( "" );
    return report;
  }

  if ( folded.at( folded.output() ).kind == gate_kind::input )
  {
    report.construction = "leaf";
    report.result = word( { folded.at( folded.output() ).variable } );
    report.as_constructed_length = 1u;
    report.reduced_length = 1u;
    report.estimate = 1u;
    if ( exhaustive )
    {
      verify_into( report, table(), options.exhaustive_limit );
    }
    return report;
  }

  if ( report.n < 2 )
  {
    if ( options.strategy == compile_strategy::gadget )
    {
      throw std::invalid_argument( "the gadget construction needs n >= 2 for its auxiliary nails" );
    }
    run_clausal( "gadget auxiliaries need n >= 2; used the clausal construction" );
    return report;
  }

  if ( report.gadget_estimate > options.budget )
  {
    if ( options.strategy == compile_strategy::automatic && exhaustive )
    {
      run_clausal( "gadget estimate " + std::to_string( report.gadget_estimate ) +
                   " exceeds the budget; used the clausal construction" );
      return report;
    }
    throw budget_exceeded( report.gadget_estimate, options.budget );
  }

  /* gadget construction, bottom-up in topological order */
  std::vector<word> words( folded.size() );
  std::uint64_t top_length = 0;
  for ( node_id id = 0; id < folded.size(); ++id )
  {
    const auto& g = folded.at( id );
    if ( g.kind == gate_kind::input )
    {
      words[id] = word( { g.variable } );
      continue;
    }
    const expr p( words[g.lhs] );
    const expr q( words[g.rhs] );
    const auto e = g.kind == gate_kind::and_gate ? gadget_and_expr( p, q ) : gadget_or_expr( p, q );
    words[id] = e.reduced();
    top_length = e.length();
  }
  report.construction = "gadget";
  report.result = std::move( words[folded.output()] );
  report.as_constructed_length = top_length;
  report.reduced_length = report.result.size();
  report.estimate = report.gadget_estimate;

  if ( !exhaustive )
  {
    report.notes.push_back( "n exceeds the exhaustive limit; word not verified" );
    return report;
  }
  report.gadget_witness = verify_into( report, table(), options.exhaustive_limit );
  if ( report.verification != verification_status::mismatch || options.strategy == compile_strategy::gadget )
  {
    return report;
  }
  const auto gadget_result = report;
  try
  {
    run_clausal( "gadget word fails on " + report.gadget_witness->to_string() + "; used the clausal construction" );
  }
  catch ( const budget_exceeded& e )
  {
    report = gadget_result;
    report.notes.push_back( std::string( "clausal fallback skipped: " ) + e.what() );
  }
  return report;
}

std::string to_string( compile_strategy s )
{
  switch ( s )
  {
  case compile_strategy::automatic:
    return "auto";
  case compile_strategy::gadget:
    return "gadget";
  case compile_strategy::clausal:
    return "clausal";
  }
  return "auto";
}

std::string to_string( verification_status s )
{
  switch ( s )
  {
  case verification_status::verified:
    return "verified";
  case verification_status::mismatch:
    return "mismatch";
  case verification_status::unverified:
    return "unverified";
  }
  return "unverified";
}

compile_strategy parse_strategy( const std::string& text )
{
  if ( text == "auto" )
  {
    return compile_strategy::automatic;
  }
  if ( text == "gadget" )
  {
    return compile_strategy::gadget;
  }
  if ( text == "clausal" )
  {
    return compile_strategy::clausal;
  }
  throw std::invalid_argument( "unknown strategy '" + text + "' (expected auto, gadget or clausal)" );
}

} // namespace hanging
