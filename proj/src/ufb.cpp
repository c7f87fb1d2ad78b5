/* ufb.cpp -- UFB-equivalence decision pipeline and quotient constructions. */

#include "fuzzaut/ufb.hpp"

#include "fuzzaut/uniform.hpp"

#include <stdexcept>
#include <utility>

namespace fuzzaut {

std::string to_string(UfbOutcome outcome) {
    switch (outcome) {
    case UfbOutcome::equivalent: return "equivalent";
    case UfbOutcome::not_equivalent: return "not-equivalent";
    case UfbOutcome::undecided: return "undecided";
    }
    throw std::logic_error("unreachable UFB outcome");
}

UfbVerdict ufb_equivalent(const Lattice& lattice, const FuzzyAutomaton& a,
                          const FuzzyAutomaton& b, std::size_t iteration_cap) {
    if (a.alphabet != b.alphabet) {
        throw Error("ufb_equivalent: automata must share the same alphabet");
    }
    if (!(a.desc == b.desc)) {
        throw LatticeError("ufb_equivalent: automata must live in the same lattice");
    }

    UfbVerdict verdict;
    FixpointReport rep_e = greatest_bisim_equivalence(lattice, a, BisimKind::forward_bisim,
                                                      iteration_cap);
    FixpointReport rep_f = greatest_bisim_equivalence(lattice, b, BisimKind::forward_bisim,
                                                      iteration_cap);
    if (!rep_e.converged || !rep_f.converged) {
        verdict.outcome = UfbOutcome::undecided;
        return verdict;
    }
    verdict.e = std::move(rep_e.result);
    verdict.f = std::move(rep_f.result);
    verdict.factor_a = factor_automaton(lattice, a, *verdict.e);
    verdict.factor_b = factor_automaton(lattice, b, *verdict.f);

    verdict.iso = isomorphism_search(
        lattice, verdict.factor_a->quotient, verdict.factor_b->quotient,
        std::make_pair(verdict.factor_a->tilde, verdict.factor_b->tilde));
    if (!verdict.iso) {
        verdict.outcome = UfbOutcome::not_equivalent;
        return verdict;
    }

    verdict.witness = uniform_from_isomorphism(lattice, *verdict.e, *verdict.f, *verdict.iso);

    // The construction guarantees all of the following; a failure would mean
    // an implementation bug, not a property of the input.
    CheckResult check = check_relation(lattice, a, b, *verdict.witness, BisimKind::forward_bisim);
    if (!check.holds) {
        throw std::logic_error("UFB witness fails the forward bisimulation check at condition: " +
                               check.violation->condition);
    }
    if (!classify(lattice, *verdict.witness).is_uniform) {
        throw std::logic_error("UFB witness is not uniform");
    }
    auto [kernel, cokernel] = induced_equivalences(lattice, *verdict.witness);
    if (!(kernel == *verdict.e) || !(cokernel == *verdict.f)) {
        throw std::logic_error(
            "UFB witness kernel/co-kernel differ from the greatest equivalences");
    }

    verdict.outcome = UfbOutcome::equivalent;
    return verdict;
}

ReduceResult reduce(const Lattice& lattice, const FuzzyAutomaton& a, std::size_t iteration_cap) {
    ReduceResult out;
    out.equivalence_report =
        greatest_bisim_equivalence(lattice, a, BisimKind::forward_bisim, iteration_cap);
    if (out.equivalence_report.converged) {
        out.factor = factor_automaton(lattice, a, *out.equivalence_report.result);
    }
    return out;
}

FuzzyRelation natural_uniform_relation(const Lattice& lattice, const FuzzyAutomaton& a,
                                       const FuzzyRelation& e) {
    if (e.rows != a.size() || e.cols != a.size()) {
        throw DimensionError("natural_uniform_relation: equivalence is " + std::to_string(e.rows) +
                             "x" + std::to_string(e.cols) + " but the automaton has " +
                             std::to_string(a.size()) + " states");
    }
    FactorSet fs = factor_set(lattice, e);
    FuzzyRelation phi = make_relation(lattice, a.size(), fs.index());
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t c = 0; c < fs.index(); ++c) {
            phi.at(s, c) = e.at(s, fs.representatives[c]);
        }
    }
    return phi;
}

FuzzyRelation relative_quotient(const Lattice& lattice, const FuzzyAutomaton& a,
                                const FuzzyRelation& e, const FuzzyRelation& g) {
    if (e.rows != a.size() || e.cols != a.size() || g.rows != a.size() || g.cols != a.size()) {
        throw DimensionError(
            "relative_quotient: equivalences must be square over the automaton's states");
    }
    validate_equivalence(lattice, g, "relative_quotient coarser relation");
    FactorSet fs = factor_set(lattice, e);
    if (auto excess = first_excess(lattice, e, g)) {
        throw Error("relative_quotient: the first relation must be pointwise below the second; "
                    "it exceeds it at (" +
                    std::to_string(excess->first) + "," + std::to_string(excess->second) + ")");
    }
    FuzzyRelation q = make_relation(lattice, fs.index(), fs.index());
    for (std::size_t i = 0; i < fs.index(); ++i) {
        for (std::size_t j = 0; j < fs.index(); ++j) {
            q.at(i, j) = g.at(fs.representatives[i], fs.representatives[j]);
        }
    }
    validate_equivalence(lattice, q, "relative quotient");
    return q;
}

} // namespace fuzzaut
