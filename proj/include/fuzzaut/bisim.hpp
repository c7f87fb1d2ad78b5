/* bisim.hpp -- Simulation and bisimulation checkers and greatest-relation
 * solvers for fuzzy automata.
 *
 * For automata A and B and a non-empty relation phi between their state
 * sets, the six supported kinds are defined by inequality systems over the
 * initial vectors, the letter relations, and the terminal vectors:
 *
 *   forward simulation   sigma^A <= sigma^B o inv(phi)
 *                        inv(phi) o delta_x^A <= delta_x^B o inv(phi)
 *                        inv(phi) o tau^A <= tau^B
 *   backward simulation  sigma^A o phi <= sigma^B
 *                        delta_x^A o phi <= phi o delta_x^B
 *                        tau^A <= phi o tau^B
 *
 * A forward (backward) bisimulation is a phi such that phi and inv(phi) are
 * both forward (backward) simulations; a forward-backward bisimulation is a
 * forward simulation whose inverse is a backward simulation (turning the
 * forward inequalities into equalities), and a backward-forward bisimulation
 * is the dual. A relation is a backward-kind morphism between A and B exactly
 * when it is the corresponding forward-kind morphism between the reverse
 * automata; the solvers exploit this, while check_relation evaluates every
 * kind natively so that reported conditions live on the original automata.
 *
 * The greatest relation of each kind is computed by a decreasing fixpoint:
 * start from the pointwise residuum bound imposed by the terminal (and, for
 * heterotypic kinds, initial) vectors, then repeatedly intersect with the
 * greatest solutions of the letter inequalities, which are residuals. The
 * iteration is exact and stops when an update round leaves the relation
 * unchanged; the reported iteration count includes that confirming round.
 * Conditions not enforced by the iteration (the initial-vector inequalities
 * and, for the heterotypic kinds, one terminal direction) are isotone in phi,
 * so checking them once at the fixpoint decides existence.
 */

#ifndef FUZZAUT_BISIM_HPP_
#define FUZZAUT_BISIM_HPP_

#include "fuzzaut/automaton.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace fuzzaut {

enum class BisimKind {
    forward_sim,
    backward_sim,
    forward_bisim,
    backward_bisim,
    backward_forward,
    forward_backward,
};

/// Hyphenated kind names used by the command line: "forward-sim", ...
std::string to_string(BisimKind kind);
BisimKind bisim_kind_from_string(const std::string& name);

/// First violated condition of an inequality system. `condition` is
/// "initial", "letter <x>" or "terminal", with an " (inverse)" suffix for the
/// conditions imposed on the inverse relation; `expression` spells out the
/// violated inequality. For matrix conditions both coordinates are set; for
/// vector conditions only the row is meaningful and `col_label` stays empty.
struct Violation {
    std::string condition;
    std::string expression;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string row_label;
    std::string col_label;
    Value lhs;
    Value rhs;
};

struct CheckResult {
    bool holds = false;
    std::optional<Violation> violation;
};

/// Evaluates the defining system of `kind` for phi between a and b, exactly.
/// Conditions are checked in a fixed order (initial, letters in alphabet
/// order, terminal; the plain direction before the inverse direction) and the
/// first violation is reported. Throws Error for an empty phi (simulations
/// are non-empty by definition) and DimensionError/LatticeError for shape or
/// lattice mismatches.
CheckResult check_relation(const Lattice& lattice, const FuzzyAutomaton& a,
                           const FuzzyAutomaton& b, const FuzzyRelation& phi, BisimKind kind);

enum class FailureReason { none, sigma_check, empty_result, iteration_cap };

/// Serialized as "sigma-check", "empty-result", "iteration-cap".
std::string to_string(FailureReason reason);

/// Outcome of a greatest-relation computation.
///  - converged && result:  the greatest relation of the requested kind.
///  - converged && !result: no relation of the kind exists; `failure` says
///    whether the fixpoint came out empty or a final isotone check failed
///    (sigma_check also covers the terminal direction checked last for the
///    heterotypic kinds).
///  - !converged: the iteration cap was hit (possible on structures that are
///    not locally finite); `result` then holds the unconverged iterate, which
///    is an upper bound on every relation of the kind but is not itself one.
struct FixpointReport {
    std::optional<FuzzyRelation> result;
    std::size_t iterations = 0;
    bool converged = false;
    FailureReason failure = FailureReason::none;
};

/// Greatest forward or backward simulation from a to b.
/// `kind` must be forward_sim or backward_sim.
FixpointReport greatest_simulation(const Lattice& lattice, const FuzzyAutomaton& a,
                                   const FuzzyAutomaton& b, BisimKind kind,
                                   std::size_t iteration_cap = 1000);

/// Greatest bisimulation of the given kind from a to b.
/// `kind` must be one of the four bisimulation kinds.
FixpointReport greatest_bisimulation(const Lattice& lattice, const FuzzyAutomaton& a,
                                     const FuzzyAutomaton& b, BisimKind kind,
                                     std::size_t iteration_cap = 1000);

/// Greatest fuzzy equivalence on a's states that is a bisimulation of the
/// given kind from a to itself. `kind` must be forward_bisim or
/// backward_bisim. Unlike the two-automata solvers this always yields a
/// relation when it converges (the crisp equality is a candidate), so a
/// converged report always carries a result.
FixpointReport greatest_bisim_equivalence(const Lattice& lattice, const FuzzyAutomaton& a,
                                          BisimKind kind, std::size_t iteration_cap = 1000);

enum class InvariantSide { right, left };

/// Greatest strongly right (left) invariant fuzzy equivalence: the greatest
/// equivalence E with E o delta_x <= delta_x for every letter and
/// E o tau <= tau (right side; the left side constrains delta_x o E and
/// sigma o E, and is computed on the reverse automaton). Closed-form: the
/// symmetrized meet of the letter residuals and the terminal residuum bound.
FuzzyRelation greatest_strongly_invariant(const Lattice& lattice, const FuzzyAutomaton& a,
                                          InvariantSide side);

/// For a uniform phi, checks the six-equality characterization of forward
/// bisimulations:
///   sigma^A o phi o inv(phi) = sigma^B o inv(phi)
///   sigma^A o phi            = sigma^B o inv(phi) o phi
///   delta_x^A o phi o inv(phi) = phi o delta_x^B o inv(phi)   for every x
///   inv(phi) o delta_x^A o phi = delta_x^B o inv(phi) o phi   for every x
///   tau^A            = phi o tau^B
///   inv(phi) o tau^A = tau^B
/// holds exactly when phi is a forward bisimulation. Violations are named
/// "initial/letter <x>/terminal (A-side|B-side)". Throws Error when phi is
/// not uniform.
CheckResult verify_uniform_fb_equalities(const Lattice& lattice, const FuzzyAutomaton& a,
                                         const FuzzyAutomaton& b, const FuzzyRelation& phi);

} // namespace fuzzaut

#endif // FUZZAUT_BISIM_HPP_
