/* ufb.hpp -- Deciding whether two fuzzy automata are linked by a uniform
 * forward bisimulation, and reducing automata by their greatest forward
 * bisimulation equivalence.
 *
 * Two automata are UFB-equivalent when some uniform forward bisimulation
 * exists between them. The decision procedure factors each automaton by its
 * greatest forward bisimulation equivalence and searches for an isomorphism
 * of the factor automata that also preserves the induced fuzzy equalities on
 * classes; such an isomorphism exists exactly when the automata are
 * UFB-equivalent, and from it a witness relation with prescribed kernel and
 * co-kernel is reconstructed and re-verified.
 */

#ifndef FUZZAUT_UFB_HPP_
#define FUZZAUT_UFB_HPP_

#include "fuzzaut/bisim.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fuzzaut {

enum class UfbOutcome { equivalent, not_equivalent, undecided };

/// Serialized as "equivalent", "not-equivalent", "undecided".
std::string to_string(UfbOutcome outcome);

/// Full result of a UFB-equivalence decision. `undecided` arises only when a
/// greatest-equivalence fixpoint hits its iteration cap (possible on the
/// product lattice); it is never used for a definite negative.
struct UfbVerdict {
    UfbOutcome outcome = UfbOutcome::undecided;
    std::optional<FuzzyRelation> e;         ///< greatest forward bisim equivalence on a
    std::optional<FuzzyRelation> f;         ///< greatest forward bisim equivalence on b
    std::optional<FactorAutomaton> factor_a;
    std::optional<FactorAutomaton> factor_b;
    std::optional<std::vector<std::size_t>> iso; ///< class map factor_a -> factor_b
    std::optional<FuzzyRelation> witness;   ///< uniform forward bisimulation a -> b
};

/// Decides UFB-equivalence of a and b. On success the witness is uniform,
/// passes the forward-bisimulation check, and has kernel e and co-kernel f;
/// these facts are re-verified and a std::logic_error is thrown if any of
/// them ever failed.
UfbVerdict ufb_equivalent(const Lattice& lattice, const FuzzyAutomaton& a,
                          const FuzzyAutomaton& b, std::size_t iteration_cap = 1000);

/// Reduction of an automaton by its greatest forward bisimulation
/// equivalence. `factor` is absent exactly when the equivalence fixpoint did
/// not converge; `equivalence_report` always carries the iteration data.
struct ReduceResult {
    std::optional<FactorAutomaton> factor;
    FixpointReport equivalence_report;
};

/// Factors a by its greatest forward bisimulation equivalence. The quotient
/// is UFB-equivalent to a and no further reduction of the same kind shrinks
/// it again.
ReduceResult reduce(const Lattice& lattice, const FuzzyAutomaton& a,
                    std::size_t iteration_cap = 1000);

/// The natural relation between an automaton's states and the classes of a
/// fuzzy equivalence e on them: phi(a1, class_j) = e(a1, representative_j).
/// Always a uniform relation with kernel e, and always both a forward and a
/// backward simulation from a to the factor automaton; it is a forward
/// bisimulation exactly when e is one.
FuzzyRelation natural_uniform_relation(const Lattice& lattice, const FuzzyAutomaton& a,
                                       const FuzzyRelation& e);

/// The equivalence g/e induced on the classes of e by a coarser equivalence
/// g >= e: (g/e)(class_i, class_j) = g(representative_i, representative_j).
/// Throws Error unless e <= g pointwise and both are fuzzy equivalences on
/// a's states.
FuzzyRelation relative_quotient(const Lattice& lattice, const FuzzyAutomaton& a,
                                const FuzzyRelation& e, const FuzzyRelation& g);

} // namespace fuzzaut

#endif // FUZZAUT_UFB_HPP_
