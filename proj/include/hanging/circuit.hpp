#pragma once

#include <hanging/truth_table.hpp>
#include <hanging/word.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hanging
{

using node_id = std::uint32_t;

enum class gate_kind : std::uint8_t
{
  input,
  constant,
  and_gate,
  or_gate
};

struct gate
{
  gate_kind kind = gate_kind::constant;
  int variable = 0;   /* input gates: 1-based variable r_i */
  bool value = false; /* constant gates */
  node_id lhs = 0;
  node_id rhs = 0;
};

/*! \brief DAG of two-input AND/OR gates over r_1..r_n.
 *
 * Nodes are appended in topological order (children before parents), so the
 * graph is acyclic by construction. Constants are allowed while building and
 * removed by `folded()`.
 */
class monotone_circuit
{
public:
  explicit monotone_circuit( int n = 0 );

  node_id add_input( int variable );
  node_id add_constant( bool value );
  node_id add_and( node_id a, node_id b );
  node_id add_or( node_id a, node_id b );
  node_id add_gate( gate_kind kind, node_id a, node_id b );
  /* balanced binary tree over `operands` (split at the midpoint, first half
   * rounded up); one operand is returned as is */
  node_id add_balanced( gate_kind kind, std::span<const node_id> operands );
  /* copy the cone of `root` in `other`, mapping its input r_i to inputs[i-1] */
  node_id add_subcircuit( const monotone_circuit& other, node_id root, std::span<const node_id> inputs );

  void set_output( node_id id );
  node_id output() const;
  bool has_output() const noexcept { return output_.has_value(); }

  int n() const noexcept { return n_; }
  std::span<const gate> gates() const noexcept { return gates_; }
  const gate& at( node_id id ) const { return gates_.at( id ); }
  std::size_t size() const noexcept { return gates_.size(); }

  bool eval( std::uint64_t mask ) const;
  bool eval( const nail_subset& assignment ) const;

  /* longest input-to-output path counted in AND/OR gates */
  int depth() const;
  /* value of the output when it is a constant node */
  std::optional<bool> constant_value() const;
  bool has_constants() const;
  std::size_t gate_count() const;

  /* Constant folding to a fixpoint plus removal of nodes unreachable from
   * the output. AND(x,0)=0, OR(x,0)=x, AND(x,1)=x, OR(x,1)=1. */
  monotone_circuit folded() const;

private:
  void check_node( node_id id ) const;

  int n_;
  std::vector<gate> gates_;
  std::optional<node_id> output_;
};

/* table[s] = eval(c, s) for all 2^n subsets */
truth_table circuit_table( const monotone_circuit& c, int limit = default_exhaustive_limit );

/* Print as a formula accepted by parse_formula (shared nodes are expanded). */
std::string to_formula( const monotone_circuit& c );

} // namespace hanging
