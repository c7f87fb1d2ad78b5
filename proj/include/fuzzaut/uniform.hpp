/* uniform.hpp -- Uniform fuzzy relations: kernels, crisp descriptions,
 * classification, and the bijection they induce between factor sets.
 *
 * A relation phi between sets A and B is an L-function when every row reaches
 * 1, surjective when every column does, and a partial fuzzy function when
 * phi o inv(phi) o phi <= phi. A surjective L-function satisfying
 * phi o inv(phi) o phi = phi is called uniform. Uniform relations behave like
 * fuzzified surjective functions: they induce fuzzy equivalences on both
 * sides (kernel and co-kernel) and a bijection between the corresponding
 * factor sets, and they are exactly the relations reconstructible as
 * phi(a,b) = F(psi(a), b) from a crisp function psi.
 */

#ifndef FUZZAUT_UNIFORM_HPP_
#define FUZZAUT_UNIFORM_HPP_

#include "fuzzaut/relation.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fuzzaut {

/// Outcome of classifying a relation against the uniformity predicates.
/// When a predicate fails, `failed_check` names the first failing one and
/// `witness` holds the offending coordinate(s): a row index for the
/// L-function check, a column index for surjectivity, and a (row, column)
/// pair for the composition checks.
struct UniformClassification {
    bool is_L_function = false;
    bool is_surjective = false;
    bool is_partial_fuzzy_function = false;
    bool is_uniform = false;
    std::string failed_check;
    std::vector<std::size_t> witness;
};

/// A crisp description of an L-function phi: a map psi with phi(a, psi(a)) = 1
/// for every a.
struct CrispDescription {
    std::vector<std::size_t> map;

    bool operator==(const CrispDescription&) const = default;
};

/// Kernel and co-kernel of phi: the fuzzy equivalences
///   E(a1,a2) = inf_b phi(a1,b) <-> phi(a2,b)   (on the row set)
///   F(b1,b2) = inf_a phi(a,b1) <-> phi(a,b2)   (on the column set).
/// For uniform phi these coincide with phi o inv(phi) and inv(phi) o phi.
std::pair<FuzzyRelation, FuzzyRelation> induced_equivalences(const Lattice& lattice,
                                                             const FuzzyRelation& phi);

/// Evaluates the uniformity predicates. Throws Error on an all-zero relation.
UniformClassification classify(const Lattice& lattice, const FuzzyRelation& phi);

/// All crisp descriptions of phi in lexicographic order. Throws Error when
/// phi is not an L-function, or when more than `cap` descriptions exist.
std::vector<CrispDescription> crisp_descriptions(const Lattice& lattice, const FuzzyRelation& phi,
                                                 std::size_t cap = 10000);

/// The bijection the uniform relation phi induces from the factor set of its
/// kernel onto the factor set of its co-kernel: class k of the kernel maps to
/// class result[k] of the co-kernel. Throws Error when phi is not uniform.
std::vector<std::size_t> induced_bijection(const Lattice& lattice, const FuzzyRelation& phi);

/// Rebuilds a uniform relation from factor-set data: given fuzzy equivalences
/// E (on A) and F (on B) and a bijection iso between their factor sets,
/// returns phi(a,b) = F(psi(a), b) where psi sends a to the representative of
/// iso[class of a]. Throws Error when iso is not a bijection between the two
/// factor sets.
FuzzyRelation uniform_from_isomorphism(const Lattice& lattice, const FuzzyRelation& e,
                                       const FuzzyRelation& f,
                                       const std::vector<std::size_t>& iso);

} // namespace fuzzaut

#endif // FUZZAUT_UNIFORM_HPP_
