#pragma once

#include <hanging/circuit.hpp>
#include <hanging/compiler.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace hanging
{

/* min goes to `top`, max to `bottom`; wires are 1-based */
struct comparator
{
  int top;
  int bottom;

  friend bool operator==( const comparator&, const comparator& ) = default;
};

/*! \brief Layered comparator network; wires sort ascending from wire 1. */
struct comparator_network
{
  int width = 0;
  std::vector<std::vector<comparator>> layers;

  std::size_t size() const noexcept;
  std::size_t depth() const noexcept { return layers.size(); }
  /* throws std::invalid_argument on a wire out of range or reused in a layer */
  void validate() const;
};

/*! \brief Batcher odd-even mergesort on n wires.
 *
 * Built for the next power of two; comparators touching wires above n are
 * dropped, which is the same as padding with values larger than every input.
 */
comparator_network batcher_network( int n );

/* Run the network on a 0/1 input: bit i-1 of `bits` is the value on wire i. */
std::uint64_t apply( const comparator_network& net, std::uint64_t bits );

/*! \brief Circuit for one output wire: inputs r_1..r_width sit on wires
 *  1..width, each comparator's top output is AND and its bottom output OR.
 *  The result is constant-folded and pruned to the cone of the output. */
monotone_circuit network_to_circuit( const comparator_network& net, int output_wire );

/*! \brief Append a "at least k of operands" subcircuit to `c`.
 *
 * Uses a Batcher network of the next power-of-two width P; the first P - m
 * wires carry constant FALSE and the m operands sit on the remaining wires,
 * so wire P - k + 1 is 1 iff at least k operands are 1. Requires
 * 1 <= k <= operands.size(). Constants are left for `folded()` to remove.
 */
node_id add_threshold( monotone_circuit& c, int k, std::span<const node_id> operands );

/* Folded threshold circuit "at least k of r_1..r_n", 1 <= k <= n. */
monotone_circuit threshold_circuit( int k, int n );

/*! \brief Hanging that falls iff at least k of nails 1..n are removed:
 *  `compile` applied to `threshold_circuit(k, n)`.
 *  Requires 1 <= k <= n and n >= 2. */
compile_report build_k_of_n( int k, int n, const compile_options& options = {} );

} // namespace hanging
