/* sampling.hpp -- deterministic random generation of lattice values, sets,
 * relations and automata for the property suites. All generators take an
 * explicitly seeded engine so every run samples the same cases. */

#ifndef FUZZAUT_TESTS_SAMPLING_HPP_
#define FUZZAUT_TESTS_SAMPLING_HPP_

#include "fuzzaut/automaton.hpp"

#include <random>
#include <string>
#include <vector>

namespace sampling {

/// A value of the lattice: for unit-interval structures a fraction p/q with
/// small denominator (biased toward the endpoints so checks hit the
/// degenerate cases often), for chains an index, for Booleans a bit.
inline fuzzaut::Value random_value(const fuzzaut::Lattice& lattice, std::mt19937& rng)
{
    using fuzzaut::LatticeKind;
    using fuzzaut::Rational;
    switch (lattice.kind()) {
    case LatticeKind::boolean: {
        std::uniform_int_distribution<int> bit(0, 1);
        return lattice.make(Rational(bit(rng)));
    }
    case LatticeKind::chain: {
        std::uniform_int_distribution<int> idx(0, lattice.descriptor().size - 1);
        return lattice.make(Rational(idx(rng)));
    }
    default: {
        std::uniform_int_distribution<int> den(1, 8);
        const int q = den(rng);
        std::uniform_int_distribution<int> num(0, q);
        return lattice.make(Rational(num(rng), q));
    }
    }
}

inline fuzzaut::FuzzySet random_set(const fuzzaut::Lattice& lattice, std::size_t n,
                                    std::mt19937& rng)
{
    fuzzaut::FuzzySet out = fuzzaut::make_set(lattice, n);
    for (std::size_t i = 0; i < n; ++i)
        out.at(i) = random_value(lattice, rng);
    return out;
}

inline fuzzaut::FuzzyRelation random_relation(const fuzzaut::Lattice& lattice,
                                              std::size_t rows, std::size_t cols,
                                              std::mt19937& rng)
{
    fuzzaut::FuzzyRelation out = fuzzaut::make_relation(lattice, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = random_value(lattice, rng);
    return out;
}

/// A random fuzzy equivalence: reflexive-symmetric noise closed under
/// tensor-transitivity by repeated squaring (every supported lattice is
/// locally finite on the sampled values, so the closure terminates).
inline fuzzaut::FuzzyRelation random_equivalence(const fuzzaut::Lattice& lattice,
                                                 std::size_t n, std::mt19937& rng)
{
    fuzzaut::FuzzyRelation e = fuzzaut::make_relation(lattice, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        e.at(i, i) = lattice.one();
        for (std::size_t j = i + 1; j < n; ++j) {
            const fuzzaut::Value v = random_value(lattice, rng);
            e.at(i, j) = v;
            e.at(j, i) = v;
        }
    }
    while (true) {
        const fuzzaut::FuzzyRelation squared =
            fuzzaut::join(lattice, e, fuzzaut::compose(lattice, e, e));
        if (squared == e)
            return e;
        e = squared;
    }
}

/// A random automaton over the given alphabet size, states named s1, s2, ...
inline fuzzaut::FuzzyAutomaton random_automaton(const fuzzaut::Lattice& lattice,
                                                std::size_t n_states,
                                                std::size_t n_letters, std::mt19937& rng)
{
    static const std::vector<std::string> letter_names = {"x", "y", "z", "w"};
    fuzzaut::FuzzyAutomaton a;
    a.desc = lattice.descriptor();
    for (std::size_t i = 0; i < n_states; ++i)
        a.states.push_back("s" + std::to_string(i + 1));
    for (std::size_t x = 0; x < n_letters; ++x) {
        a.alphabet.push_back(letter_names.at(x));
        a.delta.push_back(random_relation(lattice, n_states, n_states, rng));
    }
    a.sigma = random_set(lattice, n_states, rng);
    a.tau = random_set(lattice, n_states, rng);
    return a;
}

} // namespace sampling

#endif // FUZZAUT_TESTS_SAMPLING_HPP_
