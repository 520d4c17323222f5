#pragma once

#include <hanging/circuit.hpp>
#include <hanging/expr.hpp>
#include <hanging/truth_table.hpp>
#include <hanging/word.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hanging
{

/* letters per template instance, by what they stand for */
struct template_counts
{
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t aux = 0;

  std::uint64_t recursive() const noexcept { return p + q; }
  std::uint64_t total() const noexcept { return p + q + aux; }
};

/*! \brief AND gadget p^2 u p^2 u^-1 (q v q v^-1)^-2, assembled without
 *  reduction. The standard auxiliaries are u = x_1 and v = x_2. */
expr gadget_and_expr( const expr& p, const expr& q, const expr& u, const expr& v );
expr gadget_and_expr( const expr& p, const expr& q );

/*! \brief OR gadget: with A_s = p x_1^s p x_1^-s and B_t = q x_2^t q x_2^-t,
 *  AND(AND([A_+,B_+],[A_+,B_-]), AND([A_-,B_+],[A_-,B_-])). */
expr gadget_or_expr( const expr& p, const expr& q );

/* reduced gadget words */
word gadget_and( const word& p, const word& q );
word gadget_or( const word& p, const word& q );

/* Counted by instantiating the templates with placeholder generators. */
template_counts gadget_and_counts();
template_counts gadget_or_counts();

/*! \brief Upper bound on the as-constructed length of the gadget compile:
 *  leaf 1, AND 4 l_p + 4 l_q + 6, OR 256 l_p + 256 l_q + 566 (saturating).
 *  The circuit is folded first; a constant circuit has estimate 0. */
std::uint64_t estimate_length( const monotone_circuit& c );

enum class compile_strategy
{
  automatic, /* gadget construction, replaced by the clausal one when it fails verification */
  gadget,    /* gadget construction only, whatever the verifier says */
  clausal    /* clausal construction only (needs n within the exhaustive limit) */
};

enum class verification_status
{
  verified,
  mismatch,
  unverified
};

struct compile_options
{
  std::uint64_t budget = 10'000'000;
  int exhaustive_limit = default_exhaustive_limit;
  compile_strategy strategy = compile_strategy::automatic;
};

struct compile_report
{
  int n = 0;
  word result;
  /* "empty", "leaf", "gadget" or "clausal" */
  std::string construction;
  /* letters of the final construction step before its reduction */
  std::uint64_t as_constructed_length = 0;
  std::uint64_t reduced_length = 0;
  /* dry-run bound for the construction that was emitted */
  std::uint64_t estimate = 0;
  /* estimate_length of the folded circuit */
  std::uint64_t gadget_estimate = 0;
  int depth = 0;
  /* 1078^depth */
  double bound = 1.0;
  verification_status verification = verification_status::unverified;
  /* first subset where the gadget word disagreed with the circuit */
  std::optional<nail_subset> gadget_witness;
  std::vector<std::string> notes;
};

/*! \brief Clausal construction for a realizable monotone function.
 *
 * The clauses are the complements of the maximal false points, ordered by
 * (size, members). Clause T becomes the balanced commutator E(T); the clause
 * words are joined right to left as AND(E(T_i), R) using the AND template
 * with u = v = x_min(T_i) when |T_i| >= 2 and u = v = R otherwise, reducing
 * after every step. A constantly true function gives the empty word.
 * \throws unrealizable when f is not monotone, is constantly false, or is
 * true on the empty set without being constant
 */
word clausal_word( const truth_table& f );
/* dry-run upper bound on the unreduced clausal length */
std::uint64_t clausal_estimate( const truth_table& f );
/* the ordered clause list used above */
std::vector<std::vector<int>> minimal_clauses( const truth_table& f );

/*! \brief Compile a monotone circuit to a hanging whose fall function is the
 *  circuit.
 *
 * Leaves r_i become x_i, gates become gadget words bottom-up (shared nodes
 * are compiled once and reused, which equals duplicating them) with eager
 * reduction. When n is within the exhaustive limit the word is verified
 * against the circuit table.
 * \throws budget_exceeded when the dry-run estimate exceeds the budget
 * \throws unrealizable for a constantly false circuit
 */
compile_report compile( const monotone_circuit& c, const compile_options& options = {} );

std::string to_string( compile_strategy s );
std::string to_string( verification_status s );
compile_strategy parse_strategy( const std::string& text );

} // namespace hanging
