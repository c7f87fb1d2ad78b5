/* relation.hpp -- Fuzzy sets and relations as exact matrices.
 *
 * A fuzzy relation between finite sets is a rows x cols matrix of lattice
 * values, composed by sup-tensor products. Because every supported lattice is
 * linearly ordered and the sets are finite, suprema and infima are max and min
 * over finitely many exact values, so all results here are exact.
 *
 * Residuals are the relational lifting of the adjunction between tensor and
 * residuum: right_residual(W, V) is the greatest U with U o V <= W, and
 * left_residual(V, W) the greatest U with V o U <= W.
 */

#ifndef FUZZAUT_RELATION_HPP_
#define FUZZAUT_RELATION_HPP_

#include "fuzzaut/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fuzzaut {

/// A fuzzy subset of a finite set: one lattice value per element.
struct FuzzySet {
    LatticeDescriptor desc;
    std::vector<Value> values;

    std::size_t size() const { return values.size(); }
    const Value& at(std::size_t i) const { return values.at(i); }
    Value& at(std::size_t i) { return values.at(i); }

    bool operator==(const FuzzySet&) const = default;
};

/// A fuzzy relation between two finite sets, stored row-major.
struct FuzzyRelation {
    LatticeDescriptor desc;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Value> entries;

    const Value& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
    Value& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }

    bool operator==(const FuzzyRelation&) const = default;
};

/// Zero-filled set of the given size.
FuzzySet make_set(const Lattice& lattice, std::size_t n);
/// Set from explicit values (validated against the lattice).
FuzzySet make_set(const Lattice& lattice, const std::vector<Value>& values);

/// Zero-filled rows x cols relation.
FuzzyRelation make_relation(const Lattice& lattice, std::size_t rows, std::size_t cols);
/// The crisp identity relation on n elements.
FuzzyRelation identity_relation(const Lattice& lattice, std::size_t n);

/// True when every entry is 0.
bool is_empty(const FuzzyRelation& rel);

/// Sup-tensor composition of relations: (A o B)(a,c) = sup_b A(a,b)(*)B(b,c).
FuzzyRelation compose(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b);
/// Row vector times matrix: (f o R)(b) = sup_a f(a)(*)R(a,b).
FuzzySet compose(const Lattice& lattice, const FuzzySet& f, const FuzzyRelation& r);
/// Matrix times column vector: (R o f)(a) = sup_b R(a,b)(*)f(b).
FuzzySet compose(const Lattice& lattice, const FuzzyRelation& r, const FuzzySet& f);
/// Degree of overlapping of two fuzzy sets: sup_a f(a)(*)g(a).
Value compose(const Lattice& lattice, const FuzzySet& f, const FuzzySet& g);

/// Inverse (transpose): inv(R)(b,a) = R(a,b).
FuzzyRelation inverse(const FuzzyRelation& r);

/// Pointwise meet / join of equally shaped relations or sets.
FuzzyRelation meet(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b);
FuzzyRelation join(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b);
FuzzySet meet(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b);
FuzzySet join(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b);

/// Pointwise order on relations / sets.
bool leq(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b);
bool leq(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b);

/// First coordinate (row-major) where a > b, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_excess(
    const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b);
std::optional<std::size_t> first_excess(const Lattice& lattice, const FuzzySet& a,
                                        const FuzzySet& b);

/// Greatest U with U o V <= W; U(a,b) = inf_c V(b,c) -> W(a,c).
/// Shapes: W is A x C, V is B x C, result A x B.
FuzzyRelation right_residual(const Lattice& lattice, const FuzzyRelation& w,
                             const FuzzyRelation& v);
/// Greatest U with V o U <= W; U(b,c) = inf_a V(a,b) -> W(a,c).
/// Shapes: V is A x B, W is A x C, result B x C.
FuzzyRelation left_residual(const Lattice& lattice, const FuzzyRelation& v,
                            const FuzzyRelation& w);

/// Entry 1 where the value equals 1, else 0 (same lattice).
FuzzyRelation crisp_part(const Lattice& lattice, const FuzzyRelation& r);
FuzzySet crisp_part(const Lattice& lattice, const FuzzySet& f);

/// Report of the reflexive / symmetric / transitive checks on a square
/// relation. `violation` holds the first offending coordinates in scan order
/// (a), (a,b) or (a,b,c) depending on the failed property.
struct EquivalenceReport {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    std::string failed_property;
    std::vector<std::size_t> violation;

    bool is_equivalence() const { return reflexive && symmetric && transitive; }
};

EquivalenceReport classify_equivalence(const Lattice& lattice, const FuzzyRelation& r);

/// Throws Error naming the violated property unless r is a fuzzy equivalence.
void validate_equivalence(const Lattice& lattice, const FuzzyRelation& r,
                          const std::string& what = "relation");

/// Partition of a set by the crisp part of a fuzzy equivalence. Classes are
/// numbered in order of their least member; `representatives[k]` is that least
/// member and `class_of[a]` the class index of element a.
struct FactorSet {
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> class_of;

    std::size_t index() const { return representatives.size(); }
};

/// Computes the factor set of a validated fuzzy equivalence. Two elements
/// share a class exactly when E(a,b) = 1 (equivalently: identical E-rows).
FactorSet factor_set(const Lattice& lattice, const FuzzyRelation& e);

/// The equivalence classes as fuzzy sets: class k is the row E(rep_k, .).
std::vector<FuzzySet> factor_classes(const Lattice& lattice, const FuzzyRelation& e,
                                     const FactorSet& fs);

/// The fuzzy equality induced on the factor set: tilde(i,j) = E(rep_i, rep_j).
FuzzyRelation factor_tilde(const Lattice& lattice, const FuzzyRelation& e,
                           const FactorSet& fs);

} // namespace fuzzaut

#endif // FUZZAUT_RELATION_HPP_
