/* bisim.cpp -- Checkers and greatest-relation solvers for all six
 * simulation/bisimulation kinds. */

#include "fuzzaut/bisim.hpp"

#include "fuzzaut/uniform.hpp"

#include <stdexcept>
#include <utility>

namespace fuzzaut {

std::string to_string(BisimKind kind) {
    switch (kind) {
    case BisimKind::forward_sim: return "forward-sim";
    case BisimKind::backward_sim: return "backward-sim";
    case BisimKind::forward_bisim: return "forward-bisim";
    case BisimKind::backward_bisim: return "backward-bisim";
    case BisimKind::backward_forward: return "backward-forward";
    case BisimKind::forward_backward: return "forward-backward";
    }
    throw std::logic_error("unreachable bisim kind");
}

BisimKind bisim_kind_from_string(const std::string& name) {
    if (name == "forward-sim") return BisimKind::forward_sim;
    if (name == "backward-sim") return BisimKind::backward_sim;
    if (name == "forward-bisim") return BisimKind::forward_bisim;
    if (name == "backward-bisim") return BisimKind::backward_bisim;
    if (name == "backward-forward") return BisimKind::backward_forward;
    if (name == "forward-backward") return BisimKind::forward_backward;
    throw Error("unknown relation kind '" + name +
                "'; expected forward-sim, backward-sim, forward-bisim, backward-bisim, "
                "backward-forward or forward-backward");
}

std::string to_string(FailureReason reason) {
    switch (reason) {
    case FailureReason::none: return "none";
    case FailureReason::sigma_check: return "sigma-check";
    case FailureReason::empty_result: return "empty-result";
    case FailureReason::iteration_cap: return "iteration-cap";
    }
    throw std::logic_error("unreachable failure reason");
}

namespace {

void require_compatible(const Lattice& lattice, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                        const char* op) {
    if (!(a.desc == lattice.descriptor()) || !(b.desc == lattice.descriptor())) {
        throw LatticeError(std::string(op) + ": automata must live in the given lattice");
    }
    if (a.alphabet != b.alphabet) {
        throw Error(std::string(op) + ": automata must share the same alphabet");
    }
}

void require_relation_shape(const Lattice& lattice, const FuzzyAutomaton& a,
                            const FuzzyAutomaton& b, const FuzzyRelation& phi, const char* op) {
    if (!(phi.desc == lattice.descriptor())) {
        throw LatticeError(std::string(op) + ": relation must live in the given lattice");
    }
    if (phi.rows != a.size() || phi.cols != b.size()) {
        throw DimensionError(std::string(op) + ": relation is " + std::to_string(phi.rows) + "x" +
                             std::to_string(phi.cols) + " but the automata have " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                             " states");
    }
}

/// Records the first coordinate of a set inequality violation; returns
/// whether the inequality holds.
bool check_set_leq(const Lattice& lattice, const FuzzySet& lhs, const FuzzySet& rhs,
                   const std::string& condition, const std::string& expression,
                   const std::vector<std::string>& labels, CheckResult& out) {
    if (auto i = first_excess(lattice, lhs, rhs)) {
        out.holds = false;
        Violation v;
        v.condition = condition;
        v.expression = expression;
        v.row = *i;
        v.row_label = labels[*i];
        v.lhs = lhs.at(*i);
        v.rhs = rhs.at(*i);
        out.violation = std::move(v);
        return false;
    }
    return true;
}

bool check_rel_leq(const Lattice& lattice, const FuzzyRelation& lhs, const FuzzyRelation& rhs,
                   const std::string& condition, const std::string& expression,
                   const std::vector<std::string>& row_labels,
                   const std::vector<std::string>& col_labels, CheckResult& out) {
    if (auto rc = first_excess(lattice, lhs, rhs)) {
        out.holds = false;
        Violation v;
        v.condition = condition;
        v.expression = expression;
        v.row = rc->first;
        v.col = rc->second;
        v.row_label = row_labels[rc->first];
        v.col_label = col_labels[rc->second];
        v.lhs = lhs.at(rc->first, rc->second);
        v.rhs = rhs.at(rc->first, rc->second);
        out.violation = std::move(v);
        return false;
    }
    return true;
}

/// Conditions making phi a forward simulation from a to b (stated on inv(phi)).
bool forward_plain(const Lattice& lat, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                   const FuzzyRelation& phi_inv, CheckResult& out) {
    if (!check_set_leq(lat, a.sigma, compose(lat, b.sigma, phi_inv), "initial",
                       "sigma^A <= sigma^B o inv(phi)", a.states, out)) {
        return false;
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        if (!check_rel_leq(lat, compose(lat, phi_inv, a.delta[x]),
                           compose(lat, b.delta[x], phi_inv), "letter " + a.alphabet[x],
                           "inv(phi) o delta[" + a.alphabet[x] + "]^A <= delta[" + a.alphabet[x] +
                               "]^B o inv(phi)",
                           b.states, a.states, out)) {
            return false;
        }
    }
    return check_set_leq(lat, compose(lat, phi_inv, a.tau), b.tau, "terminal",
                         "inv(phi) o tau^A <= tau^B", b.states, out);
}

/// Conditions making inv(phi) a forward simulation from b to a.
bool forward_inverse(const Lattice& lat, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                     const FuzzyRelation& phi, CheckResult& out) {
    if (!check_set_leq(lat, b.sigma, compose(lat, a.sigma, phi), "initial (inverse)",
                       "sigma^B <= sigma^A o phi", b.states, out)) {
        return false;
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        if (!check_rel_leq(lat, compose(lat, phi, b.delta[x]), compose(lat, a.delta[x], phi),
                           "letter " + a.alphabet[x] + " (inverse)",
                           "phi o delta[" + a.alphabet[x] + "]^B <= delta[" + a.alphabet[x] +
                               "]^A o phi",
                           a.states, b.states, out)) {
            return false;
        }
    }
    return check_set_leq(lat, compose(lat, phi, b.tau), a.tau, "terminal (inverse)",
                         "phi o tau^B <= tau^A", a.states, out);
}

/// Conditions making phi a backward simulation from a to b.
bool backward_plain(const Lattice& lat, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                    const FuzzyRelation& phi, CheckResult& out) {
    if (!check_set_leq(lat, compose(lat, a.sigma, phi), b.sigma, "initial",
                       "sigma^A o phi <= sigma^B", b.states, out)) {
        return false;
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        if (!check_rel_leq(lat, compose(lat, a.delta[x], phi), compose(lat, phi, b.delta[x]),
                           "letter " + a.alphabet[x],
                           "delta[" + a.alphabet[x] + "]^A o phi <= phi o delta[" + a.alphabet[x] +
                               "]^B",
                           a.states, b.states, out)) {
            return false;
        }
    }
    return check_set_leq(lat, a.tau, compose(lat, phi, b.tau), "terminal",
                         "tau^A <= phi o tau^B", a.states, out);
}

/// Conditions making inv(phi) a backward simulation from b to a.
bool backward_inverse(const Lattice& lat, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                      const FuzzyRelation& phi_inv, CheckResult& out) {
    if (!check_set_leq(lat, compose(lat, b.sigma, phi_inv), a.sigma, "initial (inverse)",
                       "sigma^B o inv(phi) <= sigma^A", a.states, out)) {
        return false;
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        if (!check_rel_leq(lat, compose(lat, b.delta[x], phi_inv),
                           compose(lat, phi_inv, a.delta[x]),
                           "letter " + a.alphabet[x] + " (inverse)",
                           "delta[" + a.alphabet[x] + "]^B o inv(phi) <= inv(phi) o delta[" +
                               a.alphabet[x] + "]^A",
                           b.states, a.states, out)) {
            return false;
        }
    }
    return check_set_leq(lat, b.tau, compose(lat, phi_inv, a.tau), "terminal (inverse)",
                         "tau^B <= inv(phi) o tau^A", b.states, out);
}

} // namespace

CheckResult check_relation(const Lattice& lattice, const FuzzyAutomaton& a,
                           const FuzzyAutomaton& b, const FuzzyRelation& phi, BisimKind kind) {
    require_compatible(lattice, a, b, "check_relation");
    require_relation_shape(lattice, a, b, phi, "check_relation");
    if (is_empty(phi)) {
        throw Error("check_relation: the relation is empty; simulations and bisimulations are "
                    "non-empty by definition");
    }

    const FuzzyRelation phi_inv = inverse(phi);
    CheckResult out;
    out.holds = true;
    switch (kind) {
    case BisimKind::forward_sim:
        forward_plain(lattice, a, b, phi_inv, out);
        break;
    case BisimKind::backward_sim:
        backward_plain(lattice, a, b, phi, out);
        break;
    case BisimKind::forward_bisim:
        if (forward_plain(lattice, a, b, phi_inv, out)) {
            forward_inverse(lattice, a, b, phi, out);
        }
        break;
    case BisimKind::backward_bisim:
        if (backward_plain(lattice, a, b, phi, out)) {
            backward_inverse(lattice, a, b, phi_inv, out);
        }
        break;
    case BisimKind::forward_backward:
        if (forward_plain(lattice, a, b, phi_inv, out)) {
            backward_inverse(lattice, a, b, phi_inv, out);
        }
        break;
    case BisimKind::backward_forward:
        if (backward_plain(lattice, a, b, phi, out)) {
            forward_inverse(lattice, a, b, phi, out);
        }
        break;
    }
    return out;
}

namespace {

/// phi0(i,j) = tau^A(i) -> tau^B(j): the greatest solution of the forward
/// terminal condition.
FuzzyRelation forward_terminal_bound(const Lattice& lat, const FuzzyAutomaton& a,
                                     const FuzzyAutomaton& b) {
    FuzzyRelation phi = make_relation(lat, a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            phi.at(i, j) = lat.residuum(a.tau.at(i), b.tau.at(j));
        }
    }
    return phi;
}

/// phi0(i,j) = tau^A(i) <-> tau^B(j): the greatest solution of both forward
/// terminal conditions.
FuzzyRelation forward_terminal_bibound(const Lattice& lat, const FuzzyAutomaton& a,
                                       const FuzzyAutomaton& b) {
    FuzzyRelation phi = make_relation(lat, a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            phi.at(i, j) = lat.biresiduum(a.tau.at(i), b.tau.at(j));
        }
    }
    return phi;
}

/// phi0(i,j) = (tau^A(i) -> tau^B(j)) meet (sigma^B(j) -> sigma^A(i)): the
/// greatest solution of the two pointwise-bounded forward-backward conditions.
FuzzyRelation heterotypic_bound(const Lattice& lat, const FuzzyAutomaton& a,
                                const FuzzyAutomaton& b) {
    FuzzyRelation phi = forward_terminal_bound(lat, a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            phi.at(i, j) = lat.meet(phi.at(i, j), lat.residuum(b.sigma.at(j), a.sigma.at(i)));
        }
    }
    return phi;
}

struct CoreResult {
    FuzzyRelation phi;
    std::size_t iterations = 0;
    bool converged = false;
};

template <typename UpdateFn>
CoreResult run_fixpoint(FuzzyRelation phi, UpdateFn update, std::size_t cap) {
    CoreResult r;
    r.phi = std::move(phi);
    while (r.iterations < cap) {
        FuzzyRelation next = update(r.phi);
        ++r.iterations;
        if (next == r.phi) {
            r.converged = true;
            break;
        }
        r.phi = std::move(next);
    }
    return r;
}

/// Intersects phi with the greatest solutions of the forward letter
/// conditions inv(phi) o delta_x^A <= delta_x^B o inv(phi) at the current phi.
FuzzyRelation forward_letter_step(const Lattice& lat, const FuzzyAutomaton& a,
                                  const FuzzyAutomaton& b, const FuzzyRelation& phi) {
    FuzzyRelation acc = phi;
    const FuzzyRelation phi_inv = inverse(phi);
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        acc = meet(lat, acc,
                   inverse(right_residual(lat, compose(lat, b.delta[x], phi_inv), a.delta[x])));
    }
    return acc;
}

/// Additionally intersects with the greatest solutions of the inverse letter
/// conditions phi o delta_x^B <= delta_x^A o phi.
FuzzyRelation forward_bisim_step(const Lattice& lat, const FuzzyAutomaton& a,
                                 const FuzzyAutomaton& b, const FuzzyRelation& phi) {
    FuzzyRelation acc = forward_letter_step(lat, a, b, phi);
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        acc = meet(lat, acc, right_residual(lat, compose(lat, a.delta[x], phi), b.delta[x]));
    }
    return acc;
}

/// Step for the forward-backward kind: forward letter conditions plus the
/// backward-on-the-inverse letter conditions delta_x^B o inv(phi) <=
/// inv(phi) o delta_x^A.
FuzzyRelation forward_backward_step(const Lattice& lat, const FuzzyAutomaton& a,
                                    const FuzzyAutomaton& b, const FuzzyRelation& phi) {
    FuzzyRelation acc = forward_letter_step(lat, a, b, phi);
    const FuzzyRelation phi_inv = inverse(phi);
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        acc = meet(lat, acc,
                   inverse(left_residual(lat, b.delta[x], compose(lat, phi_inv, a.delta[x]))));
    }
    return acc;
}

FixpointReport finish_report(const Lattice& lat, CoreResult core,
                             const std::vector<std::pair<FuzzySet, FuzzySet>>& final_checks) {
    FixpointReport rep;
    rep.iterations = core.iterations;
    rep.converged = core.converged;
    if (!core.converged) {
        rep.failure = FailureReason::iteration_cap;
        rep.result = std::move(core.phi);
        return rep;
    }
    if (is_empty(core.phi)) {
        rep.failure = FailureReason::empty_result;
        return rep;
    }
    for (const auto& [lhs, rhs] : final_checks) {
        if (!leq(lat, lhs, rhs)) {
            rep.failure = FailureReason::sigma_check;
            return rep;
        }
    }
    rep.result = std::move(core.phi);
    return rep;
}

/// Greatest forward simulation between the given (possibly already reversed)
/// automata, without the post-hoc re-verification.
FixpointReport core_forward_sim(const Lattice& lat, const FuzzyAutomaton& a,
                                const FuzzyAutomaton& b, std::size_t cap) {
    CoreResult core = run_fixpoint(
        forward_terminal_bound(lat, a, b),
        [&](const FuzzyRelation& phi) { return forward_letter_step(lat, a, b, phi); }, cap);
    std::vector<std::pair<FuzzySet, FuzzySet>> checks;
    if (core.converged) {
        checks.emplace_back(a.sigma, compose(lat, b.sigma, inverse(core.phi)));
    }
    return finish_report(lat, std::move(core), checks);
}

FixpointReport core_forward_bisim(const Lattice& lat, const FuzzyAutomaton& a,
                                  const FuzzyAutomaton& b, std::size_t cap) {
    CoreResult core = run_fixpoint(
        forward_terminal_bibound(lat, a, b),
        [&](const FuzzyRelation& phi) { return forward_bisim_step(lat, a, b, phi); }, cap);
    std::vector<std::pair<FuzzySet, FuzzySet>> checks;
    if (core.converged) {
        checks.emplace_back(a.sigma, compose(lat, b.sigma, inverse(core.phi)));
        checks.emplace_back(b.sigma, compose(lat, a.sigma, core.phi));
    }
    return finish_report(lat, std::move(core), checks);
}

FixpointReport core_forward_backward(const Lattice& lat, const FuzzyAutomaton& a,
                                     const FuzzyAutomaton& b, std::size_t cap) {
    CoreResult core = run_fixpoint(
        heterotypic_bound(lat, a, b),
        [&](const FuzzyRelation& phi) { return forward_backward_step(lat, a, b, phi); }, cap);
    std::vector<std::pair<FuzzySet, FuzzySet>> checks;
    if (core.converged) {
        checks.emplace_back(a.sigma, compose(lat, b.sigma, inverse(core.phi)));
        checks.emplace_back(b.tau, compose(lat, inverse(core.phi), a.tau));
    }
    return finish_report(lat, std::move(core), checks);
}

/// Greatest forward bisimulation fuzzy equivalence on a single automaton.
/// Every iterate stays a fuzzy equivalence: the letter residual
/// W = meet_x rr(delta_x o E, delta_x) is reflexive and transitive whenever E
/// is an equivalence, and meets with inverses preserve all three properties.
FixpointReport core_forward_equivalence(const Lattice& lat, const FuzzyAutomaton& a,
                                        std::size_t cap) {
    CoreResult core =
        run_fixpoint(forward_terminal_bibound(lat, a, a),
                     [&](const FuzzyRelation& e) {
                         FuzzyRelation w = make_relation(lat, a.size(), a.size());
                         for (Value& v : w.entries) {
                             v = lat.one();
                         }
                         for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
                             w = meet(lat, w,
                                      right_residual(lat, compose(lat, a.delta[x], e), a.delta[x]));
                         }
                         return meet(lat, meet(lat, e, w), inverse(w));
                     },
                     cap);
    return finish_report(lat, std::move(core), {});
}

void reverify_or_throw(const Lattice& lat, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                       const FuzzyRelation& phi, BisimKind kind) {
    CheckResult cr = check_relation(lat, a, b, phi, kind);
    if (!cr.holds) {
        throw std::logic_error("greatest-" + to_string(kind) +
                               " solver produced a relation that fails its own defining "
                               "condition: " +
                               cr.violation->condition);
    }
}

} // namespace

FixpointReport greatest_simulation(const Lattice& lattice, const FuzzyAutomaton& a,
                                   const FuzzyAutomaton& b, BisimKind kind,
                                   std::size_t iteration_cap) {
    require_compatible(lattice, a, b, "greatest_simulation");
    FixpointReport rep;
    switch (kind) {
    case BisimKind::forward_sim:
        rep = core_forward_sim(lattice, a, b, iteration_cap);
        break;
    case BisimKind::backward_sim:
        rep = core_forward_sim(lattice, reverse(a), reverse(b), iteration_cap);
        break;
    default:
        throw Error("greatest_simulation: kind must be forward-sim or backward-sim, got " +
                    to_string(kind));
    }
    if (rep.converged && rep.result) {
        reverify_or_throw(lattice, a, b, *rep.result, kind);
    }
    return rep;
}

FixpointReport greatest_bisimulation(const Lattice& lattice, const FuzzyAutomaton& a,
                                     const FuzzyAutomaton& b, BisimKind kind,
                                     std::size_t iteration_cap) {
    require_compatible(lattice, a, b, "greatest_bisimulation");
    FixpointReport rep;
    switch (kind) {
    case BisimKind::forward_bisim:
        rep = core_forward_bisim(lattice, a, b, iteration_cap);
        break;
    case BisimKind::backward_bisim:
        rep = core_forward_bisim(lattice, reverse(a), reverse(b), iteration_cap);
        break;
    case BisimKind::forward_backward:
        rep = core_forward_backward(lattice, a, b, iteration_cap);
        break;
    case BisimKind::backward_forward:
        // A backward-forward bisimulation between a and b is exactly a
        // forward-backward bisimulation between the reverse automata.
        rep = core_forward_backward(lattice, reverse(a), reverse(b), iteration_cap);
        break;
    default:
        throw Error("greatest_bisimulation: kind must be a bisimulation kind, got " +
                    to_string(kind));
    }
    if (rep.converged && rep.result) {
        reverify_or_throw(lattice, a, b, *rep.result, kind);
    }
    return rep;
}

FixpointReport greatest_bisim_equivalence(const Lattice& lattice, const FuzzyAutomaton& a,
                                          BisimKind kind, std::size_t iteration_cap) {
    FixpointReport rep;
    switch (kind) {
    case BisimKind::forward_bisim:
        rep = core_forward_equivalence(lattice, a, iteration_cap);
        break;
    case BisimKind::backward_bisim:
        rep = core_forward_equivalence(lattice, reverse(a), iteration_cap);
        break;
    default:
        throw Error(
            "greatest_bisim_equivalence: kind must be forward-bisim or backward-bisim, got " +
            to_string(kind));
    }
    if (rep.converged) {
        if (!rep.result) {
            throw std::logic_error("greatest bisimulation equivalence came out empty, which "
                                   "contradicts reflexivity");
        }
        validate_equivalence(lattice, *rep.result, "greatest bisimulation equivalence");
        reverify_or_throw(lattice, a, a, *rep.result, kind);
    }
    return rep;
}

FuzzyRelation greatest_strongly_invariant(const Lattice& lattice, const FuzzyAutomaton& a,
                                          InvariantSide side) {
    if (side == InvariantSide::left) {
        return greatest_strongly_invariant(lattice, reverse(a), InvariantSide::right);
    }
    FuzzyRelation w = make_relation(lattice, a.size(), a.size());
    for (Value& v : w.entries) {
        v = lattice.one();
    }
    for (const FuzzyRelation& d : a.delta) {
        w = meet(lattice, w, right_residual(lattice, d, d));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            w.at(i, j) = lattice.meet(w.at(i, j), lattice.residuum(a.tau.at(j), a.tau.at(i)));
        }
    }
    FuzzyRelation e = meet(lattice, w, inverse(w));
    validate_equivalence(lattice, e, "greatest strongly invariant equivalence");
    return e;
}

CheckResult verify_uniform_fb_equalities(const Lattice& lattice, const FuzzyAutomaton& a,
                                         const FuzzyAutomaton& b, const FuzzyRelation& phi) {
    require_compatible(lattice, a, b, "verify_uniform_fb_equalities");
    require_relation_shape(lattice, a, b, phi, "verify_uniform_fb_equalities");
    UniformClassification cls = classify(lattice, phi);
    if (!cls.is_uniform) {
        throw Error("verify_uniform_fb_equalities: relation is not uniform (failed check: " +
                    cls.failed_check + ")");
    }

    const FuzzyRelation phi_inv = inverse(phi);
    CheckResult out;
    out.holds = true;

    auto set_eq = [&](const FuzzySet& lhs, const FuzzySet& rhs, const std::string& condition,
                      const std::string& expression, const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!(lhs.at(i) == rhs.at(i))) {
                out.holds = false;
                Violation v;
                v.condition = condition;
                v.expression = expression;
                v.row = i;
                v.row_label = labels[i];
                v.lhs = lhs.at(i);
                v.rhs = rhs.at(i);
                out.violation = std::move(v);
                return false;
            }
        }
        return true;
    };
    auto rel_eq = [&](const FuzzyRelation& lhs, const FuzzyRelation& rhs,
                      const std::string& condition, const std::string& expression,
                      const std::vector<std::string>& labels) {
        for (std::size_t i = 0; i < lhs.rows; ++i) {
            for (std::size_t j = 0; j < lhs.cols; ++j) {
                if (!(lhs.at(i, j) == rhs.at(i, j))) {
                    out.holds = false;
                    Violation v;
                    v.condition = condition;
                    v.expression = expression;
                    v.row = i;
                    v.col = j;
                    v.row_label = labels[i];
                    v.col_label = labels[j];
                    v.lhs = lhs.at(i, j);
                    v.rhs = rhs.at(i, j);
                    out.violation = std::move(v);
                    return false;
                }
            }
        }
        return true;
    };

    const FuzzySet sigma_phi = compose(lattice, a.sigma, phi);
    if (!set_eq(compose(lattice, sigma_phi, phi_inv), compose(lattice, b.sigma, phi_inv),
                "initial (A-side)", "sigma^A o phi o inv(phi) = sigma^B o inv(phi)", a.states)) {
        return out;
    }
    if (!set_eq(sigma_phi, compose(lattice, compose(lattice, b.sigma, phi_inv), phi),
                "initial (B-side)", "sigma^A o phi = sigma^B o inv(phi) o phi", b.states)) {
        return out;
    }
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        const std::string& sym = a.alphabet[x];
        if (!rel_eq(compose(lattice, compose(lattice, a.delta[x], phi), phi_inv),
                    compose(lattice, compose(lattice, phi, b.delta[x]), phi_inv),
                    "letter " + sym + " (A-side)",
                    "delta[" + sym + "]^A o phi o inv(phi) = phi o delta[" + sym +
                        "]^B o inv(phi)",
                    a.states)) {
            return out;
        }
        if (!rel_eq(compose(lattice, compose(lattice, phi_inv, a.delta[x]), phi),
                    compose(lattice, compose(lattice, b.delta[x], phi_inv), phi),
                    "letter " + sym + " (B-side)",
                    "inv(phi) o delta[" + sym + "]^A o phi = delta[" + sym +
                        "]^B o inv(phi) o phi",
                    b.states)) {
            return out;
        }
    }
    if (!set_eq(a.tau, compose(lattice, phi, b.tau), "terminal (A-side)", "tau^A = phi o tau^B",
                a.states)) {
        return out;
    }
    set_eq(compose(lattice, phi_inv, a.tau), b.tau, "terminal (B-side)",
           "inv(phi) o tau^A = tau^B", b.states);
    return out;
}

} // namespace fuzzaut
