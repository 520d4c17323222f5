#include <hanging/circuit.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hanging
{

monotone_circuit::monotone_circuit( int n ) : n_( n )
{
  if ( n < 0 )
  {
    throw std::invalid_argument( "variable count must be non-negative" );
  }
}

void monotone_circuit::check_node( node_id id ) const
{
  if ( id >= gates_.size() )
  {
    throw std::invalid_argument( "node " + std::to_string( id ) + " does not exist" );
  }
}

node_id monotone_circuit::add_input( int variable )
{
  if ( variable < 1 || variable > n_ )
  {
    throw std::invalid_argument( "variable r" + std::to_string( variable ) + " outside r1..r" + std::to_string( n_ ) );
  }
  gate g;
  g.kind = gate_kind::input;
  g.variable = variable;
  gates_.push_back( g );
  return static_cast<node_id>( gates_.size() - 1u );
}

node_id monotone_circuit::add_constant( bool value )
{
  gate g;
  g.kind = gate_kind::constant;
  g.value = value;
  gates_.push_back( g );
  return static_cast<node_id>( gates_.size() - 1u );
}

node_id monotone_circuit::add_gate( gate_kind kind, node_id a, node_id b )
{
  if ( kind != gate_kind::and_gate && kind != gate_kind::or_gate )
  {
    throw std::invalid_argument( "add_gate expects AND or OR" );
  }
  check_node( a );
  check_node( b );
  gate g;
  g.kind = kind;
  g.lhs = a;
  g.rhs = b;
  gates_.push_back( g );
  return static_cast<node_id>( gates_.size() - 1u );
}

node_id monotone_circuit::add_and( node_id a, node_id b )
{
  return add_gate( gate_kind::and_gate, a, b );
}

node_id monotone_circuit::add_or( node_id a, node_id b )
{
  return add_gate( gate_kind::or_gate, a, b );
}

node_id monotone_circuit::add_balanced( gate_kind kind, std::span<const node_id> operands )
{
  if ( operands.empty() )
  {
    throw std::invalid_argument( "balanced gate tree needs at least one operand" );
  }
  if ( operands.size() == 1u )
  {
    return operands.front();
  }
  const auto half = ( operands.size() + 1u ) / 2u;
  const auto left = add_balanced( kind, operands.first( half ) );
  const auto right = add_balanced( kind, operands.subspan( half ) );
  return add_gate( kind, left, right );
}

node_id monotone_circuit::add_subcircuit( const monotone_circuit& other, node_id root, std::span<const node_id> inputs )
{
  other.check_node( root );
  if ( inputs.size() < static_cast<std::size_t>( other.n() ) )
  {
    throw std::invalid_argument( "subcircuit input map is too short" );
  }
  std::unordered_map<node_id, node_id> mapped;
  /* nodes are topologically ordered, so a forward sweep over the cone suffices */
  std::vector<bool> in_cone( other.size(), false );
  in_cone[root] = true;
  for ( auto id = static_cast<std::int64_t>( root ); id >= 0; --id )
  {
    const auto& g = other.gates_[static_cast<std::size_t>( id )];
    if ( in_cone[static_cast<std::size_t>( id )] &&
         ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate ) )
    {
      in_cone[g.lhs] = true;
      in_cone[g.rhs] = true;
    }
  }
  for ( node_id id = 0; id <= root; ++id )
  {
    if ( !in_cone[id] )
    {
      continue;
    }
    const auto& g = other.gates_[id];
    switch ( g.kind )
    {
    case gate_kind::input:
      mapped[id] = inputs[static_cast<std::size_t>( g.variable - 1 )];
      break;
    case gate_kind::constant:
      mapped[id] = add_constant( g.value );
      break;
    default:
      mapped[id] = add_gate( g.kind, mapped.at( g.lhs ), mapped.at( g.rhs ) );
      break;
    }
  }
  return mapped.at( root );
}

void monotone_circuit::set_output( node_id id )
{
  check_node( id );
  output_ = id;
}

node_id monotone_circuit::output() const
{
  if ( !output_ )
  {
    throw std::logic_error( "circuit has no output" );
  }
  return *output_;
}

bool monotone_circuit::eval( std::uint64_t mask ) const
{
  std::vector<std::uint8_t> value( gates_.size() + 0u, 0u );
  const auto out = output();
  for ( node_id id = 0; id <= out; ++id )
  {
    const auto& g = gates_[id];
    switch ( g.kind )
    {
    case gate_kind::input:
      value[id] = ( mask >> ( g.variable - 1 ) ) & 1u;
      break;
    case gate_kind::constant:
      value[id] = g.value ? 1u : 0u;
      break;
    case gate_kind::and_gate:
      value[id] = value[g.lhs] & value[g.rhs];
      break;
    case gate_kind::or_gate:
      value[id] = value[g.lhs] | value[g.rhs];
      break;
    }
  }
  return value[out] != 0u;
}

bool monotone_circuit::eval( const nail_subset& assignment ) const
{
  if ( assignment.n() != n_ )
  {
    throw std::invalid_argument( "assignment arity differs from the circuit" );
  }
  return eval( assignment.mask() );
}

int monotone_circuit::depth() const
{
  std::vector<int> d( gates_.size(), 0 );
  const auto out = output();
  for ( node_id id = 0; id <= out; ++id )
  {
    const auto& g = gates_[id];
    if ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate )
    {
      d[id] = 1 + std::max( d[g.lhs], d[g.rhs] );
    }
  }
  return d[out];
}

std::optional<bool> monotone_circuit::constant_value() const
{
  const auto& g = gates_.at( output() );
  if ( g.kind == gate_kind::constant )
  {
    return g.value;
  }
  return std::nullopt;
}

bool monotone_circuit::has_constants() const
{
  return std::any_of( gates_.begin(), gates_.end(), []( const gate& g ) { return g.kind == gate_kind::constant; } );
}

std::size_t monotone_circuit::gate_count() const
{
  return static_cast<std::size_t>( std::count_if( gates_.begin(), gates_.end(), []( const gate& g ) {
    return g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate;
  } ) );
}

monotone_circuit monotone_circuit::folded() const
{
  const auto out = output();

  /* pass 1: resolve every node to a constant or to a surviving node */
  struct resolved
  {
    bool is_constant;
    bool value;
    node_id node;
  };
  std::vector<resolved> res( gates_.size() );
  for ( node_id id = 0; id <= out; ++id )
  {
    const auto& g = gates_[id];
    switch ( g.kind )
    {
    case gate_kind::input:
      res[id] = { false, false, id };
      break;
    case gate_kind::constant:
      res[id] = { true, g.value, id };
      break;
    default:
    {
      const auto a = res[g.lhs];
      const auto b = res[g.rhs];
      const bool is_and = g.kind == gate_kind::and_gate;
      /* absorbing element: 0 for AND, 1 for OR */
      const bool absorbing = !is_and;
      if ( ( a.is_constant && a.value == absorbing ) || ( b.is_constant && b.value == absorbing ) )
      {
        res[id] = { true, absorbing, id };
      }
      else if ( a.is_constant )
      {
        res[id] = b;
      }
      else if ( b.is_constant )
      {
        res[id] = a;
      }
      else
      {
        res[id] = { false, false, id };
      }
      break;
    }
    }
  }

  monotone_circuit result( n_ );
  if ( res[out].is_constant )
  {
    result.set_output( result.add_constant( res[out].value ) );
    return result;
  }

  /* pass 2: rebuild the live cone in topological order */
  std::vector<bool> live( gates_.size(), false );
  live[res[out].node] = true;
  for ( auto id = static_cast<std::int64_t>( out ); id >= 0; --id )
  {
    const auto u = static_cast<node_id>( id );
    if ( !live[u] || res[u].node != u )
    {
      continue;
    }
    const auto& g = gates_[u];
    if ( g.kind == gate_kind::and_gate || g.kind == gate_kind::or_gate )
    {
      live[res[g.lhs].node] = true;
      live[res[g.rhs].node] = true;
    }
  }
  std::vector<node_id> remap( gates_.size(), 0 );
  for ( node_id id = 0; id <= out; ++id )
  {
    if ( !live[id] || res[id].node != id )
    {
      continue;
    }
    const auto& g = gates_[id];
    if ( g.kind == gate_kind::input )
    {
      remap[id] = result.add_input( g.variable );
    }
    else
    {
      remap[id] = result.add_gate( g.kind, remap[res[g.lhs].node], remap[res[g.rhs].node] );
    }
  }
  result.set_output( remap[res[out].node] );
  return result;
}

truth_table circuit_table( const monotone_circuit& c, int limit )
{
  check_exhaustive_limit( c.n(), limit );
  const int n = c.n();
  truth_table table( n );
  const auto total = table.size();
  const auto out = c.output();
  const auto gates = c.gates();

  /* bit-parallel evaluation over blocks of up to 4096 assignments */
  const std::uint64_t block = std::min<std::uint64_t>( total, 4096u );
  const std::size_t words = static_cast<std::size_t>( ( block + 63u ) / 64u );
  std::vector<std::uint64_t> values( static_cast<std::size_t>( out + 1u ) * words );
  static constexpr std::uint64_t low_patterns[6] = { 0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull,
                                                     0xf0f0f0f0f0f0f0f0ull, 0xff00ff00ff00ff00ull,
                                                     0xffff0000ffff0000ull, 0xffffffff00000000ull };

  for ( std::uint64_t base = 0; base < total; base += block )
  {
    for ( node_id id = 0; id <= out; ++id )
    {
      const auto& g = gates[id];
      auto* v = &values[static_cast<std::size_t>( id ) * words];
      for ( std::size_t w = 0; w < words; ++w )
      {
        switch ( g.kind )
        {
        case gate_kind::input:
        {
          const int bit = g.variable - 1;
          if ( bit < 6 )
          {
            v[w] = low_patterns[bit];
          }
          else
          {
            v[w] = ( ( ( base + 64u * w ) >> bit ) & 1u ) ? ~std::uint64_t{ 0 } : 0u;
          }
          break;
        }
        case gate_kind::constant:
          v[w] = g.value ? ~std::uint64_t{ 0 } : 0u;
          break;
        case gate_kind::and_gate:
          v[w] = values[g.lhs * words + w] & values[g.rhs * words + w];
          break;
        case gate_kind::or_gate:
          v[w] = values[g.lhs * words + w] | values[g.rhs * words + w];
          break;
        }
      }
    }
    const auto* v = &values[static_cast<std::size_t>( out ) * words];
    for ( std::uint64_t m = 0; m < block; ++m )
    {
      table.set( base + m, ( ( v[m / 64u] >> ( m % 64u ) ) & 1u ) != 0u );
    }
  }
  return table;
}

namespace
{

void print_node( const monotone_circuit& c, node_id id, std::string& out )
{
  const auto& g = c.at( id );
  switch ( g.kind )
  {
  case gate_kind::input:
    out += 'r';
    out += std::to_string( g.variable );
    return;
  case gate_kind::constant:
    out += g.value ? "true" : "false";
    return;
  default:
    break;
  }
  const auto is_gate = []( const gate& h ) { return h.kind == gate_kind::and_gate || h.kind == gate_kind::or_gate; };
  const auto& l = c.at( g.lhs );
  const auto& r = c.at( g.rhs );
  /* '&' binds tighter than '|'; chains associate left */
  const bool paren_left = g.kind == gate_kind::and_gate && l.kind == gate_kind::or_gate;
  const bool paren_right = is_gate( r ) && ( g.kind == gate_kind::and_gate || r.kind == g.kind );
  if ( paren_left )
  {
    out += '(';
  }
  print_node( c, g.lhs, out );
  if ( paren_left )
  {
    out += ')';
  }
  out += g.kind == gate_kind::and_gate ? " & " : " | ";
  if ( paren_right )
  {
    out += '(';
  }
  print_node( c, g.rhs, out );
  if ( paren_right )
  {
    out += ')';
  }
}

} // namespace

std::string to_formula( const monotone_circuit& c )
{
  std::string out;
  print_node( c, c.output(), out );
  return out;
}

} // namespace hanging
