/* automaton.hpp -- Fuzzy automata: word semantics, reverse and factor
 * constructions, bounded language comparison, and isomorphism search.
 *
 * A fuzzy automaton over a lattice L consists of a fuzzy set of initial
 * states (sigma, used as a row vector), a fuzzy set of terminal states (tau,
 * used as a column vector) and one square fuzzy transition relation per
 * alphabet symbol. The transition relation of a word is the composition of
 * the letter relations, with the crisp identity for the empty word, and the
 * degree to which a word is accepted is sigma o delta_u o tau.
 */

#ifndef FUZZAUT_AUTOMATON_HPP_
#define FUZZAUT_AUTOMATON_HPP_

#include "fuzzaut/relation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fuzzaut {

/// A word is a finite sequence of alphabet symbols; empty means the empty word.
using Word = std::vector<std::string>;

/// A fuzzy automaton. `delta[i]` is the transition relation of `alphabet[i]`.
struct FuzzyAutomaton {
    LatticeDescriptor desc;
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<FuzzyRelation> delta;
    FuzzySet sigma;
    FuzzySet tau;

    std::size_t size() const { return states.size(); }

    /// Index of a symbol in the alphabet; throws Error for unknown symbols.
    std::size_t letter_index(const std::string& symbol) const;

    bool operator==(const FuzzyAutomaton&) const = default;
};

/// Checks shape consistency (matrix sizes, vector lengths, one relation per
/// letter, a single lattice descriptor throughout) and value membership.
/// Throws LatticeError / DimensionError naming the offending component.
void validate_automaton(const Lattice& lattice, const FuzzyAutomaton& a);

/// A factor automaton together with the data that produced it.
struct FactorAutomaton {
    FuzzyAutomaton quotient;   ///< states are the equivalence classes
    FuzzyRelation equivalence; ///< the fuzzy equivalence E on the base states
    FactorSet partition;       ///< crisp classes of E with least-index representatives
    FuzzyRelation tilde;       ///< the fuzzy equality induced by E on the classes
};

/// The transition relation of a word: identity for the empty word, otherwise
/// the composition of the letter relations in order.
FuzzyRelation transition_relation(const Lattice& lattice, const FuzzyAutomaton& a, const Word& u);

/// Degree to which the automaton accepts the word: sigma o delta_u o tau.
Value language_value(const Lattice& lattice, const FuzzyAutomaton& a, const Word& u);

/// The reverse automaton: transitions transposed, sigma and tau swapped.
FuzzyAutomaton reverse(const FuzzyAutomaton& a);

/// Factor automaton by a fuzzy equivalence E:
///   delta(E_a, x, E_b) = (E o delta_x o E)(a, b)
///   sigma(E_a) = (sigma o E)(a),  tau(E_a) = (E o tau)(a),
/// evaluated at class representatives. Class states are named by listing
/// their members, e.g. "{p,q}". Throws unless E is a fuzzy equivalence on
/// the automaton's state set.
FactorAutomaton factor_automaton(const Lattice& lattice, const FuzzyAutomaton& a,
                                 const FuzzyRelation& e);

/// Verdict of a bounded language comparison. When a word of length at most
/// the bound separates the automata, the least such word in
/// length-lexicographic order is reported together with both values.
struct LanguageComparison {
    bool equal = false;
    std::optional<Word> counterexample;
    Value lhs;
    Value rhs;
};

/// Compares accepted-word values for every word of length <= max_len.
/// A positive verdict is a bounded approximation, not a proof of language
/// equality. Throws Error when the alphabets or lattices differ.
LanguageComparison language_equal_bounded(const Lattice& lattice, const FuzzyAutomaton& a,
                                          const FuzzyAutomaton& b, std::size_t max_len = 6);

/// Searches for an isomorphism from a onto b: a bijection of states matching
/// sigma, tau and every letter relation entrywise. When `compat` is given,
/// the mapping must additionally preserve the pair of square relations
/// (first on a's states, second on b's states) entrywise — used to demand
/// that factor-automaton isomorphisms respect the induced fuzzy equalities.
/// Deterministic: candidates are tried in state-index order, so the returned
/// map is the least one in lexicographic order. Returns std::nullopt when no
/// isomorphism exists.
std::optional<std::vector<std::size_t>> isomorphism_search(
    const Lattice& lattice, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
    const std::optional<std::pair<FuzzyRelation, FuzzyRelation>>& compat = std::nullopt);

/// Entrywise verification that `map` is an isomorphism from a onto b (and
/// preserves `compat` when given).
bool is_isomorphism(const Lattice& lattice, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                    const std::vector<std::size_t>& map,
                    const std::optional<std::pair<FuzzyRelation, FuzzyRelation>>& compat =
                        std::nullopt);

} // namespace fuzzaut

#endif // FUZZAUT_AUTOMATON_HPP_
