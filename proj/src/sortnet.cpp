#include <hanging/sortnet.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hanging
{

std::size_t comparator_network::size() const noexcept
{
  std::size_t total = 0;
  for ( const auto& layer : layers )
  {
    total += layer.size();
  }
  return total;
}

void comparator_network::validate() const
{
  for ( const auto& layer : layers )
  {
    std::vector<bool> used( static_cast<std::size_t>( width ) + 1u, false );
    for ( const auto& cmp : layer )
    {
      for ( auto wire : { cmp.top, cmp.bottom } )
      {
        if ( wire < 1 || wire > width )
        {
          throw std::invalid_argument( "comparator wire " + std::to_string( wire ) + " outside 1.." +
                                       std::to_string( width ) );
        }
        if ( used[static_cast<std::size_t>( wire )] )
        {
          throw std::invalid_argument( "wire " + std::to_string( wire ) + " used twice in one layer" );
        }
        used[static_cast<std::size_t>( wire )] = true;
      }
    }
  }
}

comparator_network batcher_network( int n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "sorting network needs n >= 1" );
  }
  comparator_network net;
  net.width = n;
  const int padded = static_cast<int>( std::bit_ceil( static_cast<unsigned>( n ) ) );
  /* 0-based wires inside the loops */
  for ( int p = 1; p < padded; p *= 2 )
  {
    for ( int k = p; k > 0; k /= 2 )
    {
      std::vector<comparator> layer;
      for ( int j = k % p; j + k < padded; j += 2 * k )
      {
        for ( int i = 0; i < std::min( k, padded - j - k ); ++i )
        {
          const int a = i + j;
          const int b = i + j + k;
          if ( a / ( 2 * p ) == b / ( 2 * p ) && b < n )
          {
            layer.push_back( { a + 1, b + 1 } );
          }
        }
      }
      if ( !layer.empty() )
      {
        net.layers.push_back( std::move( layer ) );
      }
    }
  }
  return net;
}

std::uint64_t apply( const comparator_network& net, std::uint64_t bits )
{
  for ( const auto& layer : net.layers )
  {
    for ( const auto& cmp : layer )
    {
      const auto a = ( bits >> ( cmp.top - 1 ) ) & 1u;
      const auto b = ( bits >> ( cmp.bottom - 1 ) ) & 1u;
      const auto lo = a & b;
      const auto hi = a | b;
      bits &= ~( ( std::uint64_t{ 1 } << ( cmp.top - 1 ) ) | ( std::uint64_t{ 1 } << ( cmp.bottom - 1 ) ) );
      bits |= ( lo << ( cmp.top - 1 ) ) | ( hi << ( cmp.bottom - 1 ) );
    }
  }
  return bits;
}

namespace
{

/* wire values after running the network on the given node per wire */
std::vector<node_id> run_on_circuit( monotone_circuit& c, const comparator_network& net, std::vector<node_id> wires )
{
  for ( const auto& layer : net.layers )
  {
    for ( const auto& cmp : layer )
    {
      const auto a = wires[static_cast<std::size_t>( cmp.top - 1 )];
      const auto b = wires[static_cast<std::size_t>( cmp.bottom - 1 )];
      wires[static_cast<std::size_t>( cmp.top - 1 )] = c.add_and( a, b );
      wires[static_cast<std::size_t>( cmp.bottom - 1 )] = c.add_or( a, b );
    }
  }
  return wires;
}

} // namespace

monotone_circuit network_to_circuit( const comparator_network& net, int output_wire )
{
  if ( output_wire < 1 || output_wire > net.width )
  {
    throw std::invalid_argument( "output wire " + std::to_string( output_wire ) + " outside 1.." +
                                 std::to_string( net.width ) );
  }
  net.validate();
  monotone_circuit c( net.width );
  std::vector<node_id> wires;
  for ( int i = 1; i <= net.width; ++i )
  {
    wires.push_back( c.add_input( i ) );
  }
  wires = run_on_circuit( c, net, std::move( wires ) );
  c.set_output( wires[static_cast<std::size_t>( output_wire - 1 )] );
  return c.folded();
}

node_id add_threshold( monotone_circuit& c, int k, std::span<const node_id> operands )
{
  const auto m = static_cast<int>( operands.size() );
  if ( k < 1 || k > m )
  {
    throw std::invalid_argument( "threshold k = " + std::to_string( k ) + " outside 1.." + std::to_string( m ) );
  }
  const int padded = static_cast<int>( std::bit_ceil( static_cast<unsigned>( m ) ) );
  std::vector<node_id> wires;
  wires.reserve( static_cast<std::size_t>( padded ) );
  if ( padded > m )
  {
    const auto zero = c.add_constant( false );
    wires.assign( static_cast<std::size_t>( padded - m ), zero );
  }
  wires.insert( wires.end(), operands.begin(), operands.end() );
  wires = run_on_circuit( c, batcher_network( padded ), std::move( wires ) );
  return wires[static_cast<std::size_t>( padded - k )];
}

monotone_circuit threshold_circuit( int k, int n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "threshold circuit needs n >= 1" );
  }
  monotone_circuit c( n );
  std::vector<node_id> inputs;
  for ( int i = 1; i <= n; ++i )
  {
    inputs.push_back( c.add_input( i ) );
  }
  c.set_output( add_threshold( c, k, inputs ) );
  return c.folded();
}

compile_report build_k_of_n( int k, int n, const compile_options& options )
{
  if ( n < 2 )
  {
    throw std::invalid_argument( "k-out-of-n needs n >= 2" );
  }
  if ( k < 1 || k > n )
  {
    throw std::invalid_argument( "k = " + std::to_string( k ) + " outside 1.." + std::to_string( n ) );
  }
  return compile( threshold_circuit( k, n ), options );
}

} // namespace hanging
