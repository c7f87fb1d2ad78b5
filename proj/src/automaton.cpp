/* automaton.cpp -- Implementation of fuzzy automaton constructions. */

#include "fuzzaut/automaton.hpp"

#include <algorithm>
#include <deque>

namespace fuzzaut {

std::size_t FuzzyAutomaton::letter_index(const std::string& symbol) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] == symbol) {
            return i;
        }
    }
    throw Error("unknown symbol '" + symbol + "'");
}

void validate_automaton(const Lattice& lattice, const FuzzyAutomaton& a) {
    const std::size_t n = a.size();
    if (!(a.desc == lattice.descriptor())) {
        throw LatticeError("automaton lattice does not match the given lattice");
    }
    if (a.delta.size() != a.alphabet.size()) {
        throw DimensionError("automaton has " + std::to_string(a.delta.size()) +
                             " transition relations for " + std::to_string(a.alphabet.size()) +
                             " alphabet symbols");
    }
    if (a.sigma.size() != n) {
        throw DimensionError("sigma has length " + std::to_string(a.sigma.size()) + ", expected " +
                             std::to_string(n));
    }
    if (a.tau.size() != n) {
        throw DimensionError("tau has length " + std::to_string(a.tau.size()) + ", expected " +
                             std::to_string(n));
    }
    for (std::size_t i = 0; i < a.alphabet.size(); ++i) {
        const FuzzyRelation& d = a.delta[i];
        if (d.rows != n || d.cols != n) {
            throw DimensionError("delta." + a.alphabet[i] + " is " + std::to_string(d.rows) + "x" +
                                 std::to_string(d.cols) + ", expected " + std::to_string(n) + "x" +
                                 std::to_string(n));
        }
        if (!(d.desc == a.desc)) {
            throw LatticeError("delta." + a.alphabet[i] + " uses a different lattice");
        }
        for (const Value& v : d.entries) {
            if (!lattice.is_valid(v)) {
                throw LatticeError("delta." + a.alphabet[i] + " entry " + lattice.format(v) +
                                   " is not a lattice element");
            }
        }
    }
    for (const Value& v : a.sigma.values) {
        if (!lattice.is_valid(v)) {
            throw LatticeError("sigma entry " + lattice.format(v) + " is not a lattice element");
        }
    }
    for (const Value& v : a.tau.values) {
        if (!lattice.is_valid(v)) {
            throw LatticeError("tau entry " + lattice.format(v) + " is not a lattice element");
        }
    }
}

FuzzyRelation transition_relation(const Lattice& lattice, const FuzzyAutomaton& a, const Word& u) {
    FuzzyRelation rel = identity_relation(lattice, a.size());
    for (const std::string& symbol : u) {
        rel = compose(lattice, rel, a.delta[a.letter_index(symbol)]);
    }
    return rel;
}

Value language_value(const Lattice& lattice, const FuzzyAutomaton& a, const Word& u) {
    FuzzySet row = a.sigma;
    for (const std::string& symbol : u) {
        row = compose(lattice, row, a.delta[a.letter_index(symbol)]);
    }
    return compose(lattice, row, a.tau);
}

FuzzyAutomaton reverse(const FuzzyAutomaton& a) {
    FuzzyAutomaton rev = a;
    for (FuzzyRelation& d : rev.delta) {
        d = inverse(d);
    }
    std::swap(rev.sigma, rev.tau);
    return rev;
}

FactorAutomaton factor_automaton(const Lattice& lattice, const FuzzyAutomaton& a,
                                 const FuzzyRelation& e) {
    if (e.rows != a.size() || e.cols != a.size()) {
        throw DimensionError("equivalence is " + std::to_string(e.rows) + "x" +
                             std::to_string(e.cols) + " but the automaton has " +
                             std::to_string(a.size()) + " states");
    }
    FactorAutomaton fa;
    fa.equivalence = e;
    fa.partition = factor_set(lattice, e);
    fa.tilde = factor_tilde(lattice, e, fa.partition);

    const std::size_t k = fa.partition.index();
    fa.quotient.desc = a.desc;
    fa.quotient.alphabet = a.alphabet;

    std::vector<std::vector<std::string>> members(k);
    for (std::size_t s = 0; s < a.size(); ++s) {
        members[fa.partition.class_of[s]].push_back(a.states[s]);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::string name = "{";
        for (std::size_t i = 0; i < members[c].size(); ++i) {
            name += (i ? "," : "") + members[c][i];
        }
        name += "}";
        fa.quotient.states.push_back(std::move(name));
    }

    fa.quotient.sigma = make_set(lattice, k);
    fa.quotient.tau = make_set(lattice, k);
    const FuzzySet sigma_e = compose(lattice, a.sigma, e);
    const FuzzySet e_tau = compose(lattice, e, a.tau);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t rep = fa.partition.representatives[c];
        fa.quotient.sigma.at(c) = sigma_e.at(rep);
        fa.quotient.tau.at(c) = e_tau.at(rep);
    }

    for (const FuzzyRelation& d : a.delta) {
        const FuzzyRelation lifted = compose(lattice, compose(lattice, e, d), e);
        FuzzyRelation q = make_relation(lattice, k, k);
        for (std::size_t c1 = 0; c1 < k; ++c1) {
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                q.at(c1, c2) =
                    lifted.at(fa.partition.representatives[c1], fa.partition.representatives[c2]);
            }
        }
        fa.quotient.delta.push_back(std::move(q));
    }
    return fa;
}

LanguageComparison language_equal_bounded(const Lattice& lattice, const FuzzyAutomaton& a,
                                          const FuzzyAutomaton& b, std::size_t max_len) {
    if (a.alphabet != b.alphabet) {
        throw Error("language comparison requires identical alphabets");
    }
    if (!(a.desc == b.desc)) {
        throw LatticeError("language comparison requires the same lattice on both automata");
    }

    struct Frontier {
        Word word;
        FuzzySet row_a;
        FuzzySet row_b;
    };

    LanguageComparison verdict;
    std::deque<Frontier> frontier;
    frontier.push_back({Word{}, a.sigma, b.sigma});

    for (std::size_t len = 0; len <= max_len; ++len) {
        std::deque<Frontier> next;
        for (const Frontier& f : frontier) {
            const Value va = compose(lattice, f.row_a, a.tau);
            const Value vb = compose(lattice, f.row_b, b.tau);
            if (!(va == vb)) {
                verdict.equal = false;
                verdict.counterexample = f.word;
                verdict.lhs = va;
                verdict.rhs = vb;
                return verdict;
            }
            if (len < max_len) {
                for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
                    Frontier child;
                    child.word = f.word;
                    child.word.push_back(a.alphabet[x]);
                    child.row_a = compose(lattice, f.row_a, a.delta[x]);
                    child.row_b = compose(lattice, f.row_b, b.delta[x]);
                    next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
    }
    verdict.equal = true;
    return verdict;
}

namespace {

/// Per-state fingerprint that any isomorphism must preserve: the sigma and
/// tau values plus, per letter, the sorted multisets of outgoing and incoming
/// transition values (and of compat-relation values when given).
struct StateSignature {
    Rational sigma;
    Rational tau;
    std::vector<std::vector<Rational>> rows;
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> compat_row;

    bool operator==(const StateSignature&) const = default;
};

StateSignature signature_of(const FuzzyAutomaton& a, std::size_t s, const FuzzyRelation* compat) {
    StateSignature sig;
    sig.sigma = a.sigma.at(s).payload;
    sig.tau = a.tau.at(s).payload;
    for (const FuzzyRelation& d : a.delta) {
        std::vector<Rational> row, col;
        for (std::size_t t = 0; t < a.size(); ++t) {
            row.push_back(d.at(s, t).payload);
            col.push_back(d.at(t, s).payload);
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        sig.rows.push_back(std::move(row));
        sig.cols.push_back(std::move(col));
    }
    if (compat) {
        for (std::size_t t = 0; t < a.size(); ++t) {
            sig.compat_row.push_back(compat->at(s, t).payload);
        }
        std::sort(sig.compat_row.begin(), sig.compat_row.end());
    }
    return sig;
}

bool extend(const FuzzyAutomaton& a, const FuzzyAutomaton& b,
            const std::vector<std::vector<std::size_t>>& candidates, const FuzzyRelation* compat_a,
            const FuzzyRelation* compat_b, std::vector<std::size_t>& map, std::vector<bool>& used,
            std::size_t s) {
    if (s == a.size()) {
        return true;
    }
    for (std::size_t t : candidates[s]) {
        if (used[t]) {
            continue;
        }
        bool ok = true;
        for (std::size_t x = 0; x < a.delta.size() && ok; ++x) {
            ok = a.delta[x].at(s, s) == b.delta[x].at(t, t);
        }
        if (ok && compat_a && !(compat_a->at(s, s) == compat_b->at(t, t))) {
            ok = false;
        }
        for (std::size_t prev = 0; prev < s && ok; ++prev) {
            for (std::size_t x = 0; x < a.delta.size(); ++x) {
                if (!(a.delta[x].at(s, prev) == b.delta[x].at(t, map[prev])) ||
                    !(a.delta[x].at(prev, s) == b.delta[x].at(map[prev], t))) {
                    ok = false;
                    break;
                }
            }
            if (ok && compat_a &&
                (!(compat_a->at(s, prev) == compat_b->at(t, map[prev])) ||
                 !(compat_a->at(prev, s) == compat_b->at(map[prev], t)))) {
                ok = false;
            }
        }
        if (!ok) {
            continue;
        }
        map[s] = t;
        used[t] = true;
        if (extend(a, b, candidates, compat_a, compat_b, map, used, s + 1)) {
            return true;
        }
        used[t] = false;
    }
    return false;
}

} // namespace

bool is_isomorphism(const Lattice& lattice, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
                    const std::vector<std::size_t>& map,
                    const std::optional<std::pair<FuzzyRelation, FuzzyRelation>>& compat) {
    (void)lattice;
    if (a.size() != b.size() || map.size() != a.size() || a.alphabet != b.alphabet ||
        !(a.desc == b.desc)) {
        return false;
    }
    std::vector<bool> used(b.size(), false);
    for (std::size_t t : map) {
        if (t >= b.size() || used[t]) {
            return false;
        }
        used[t] = true;
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (!(a.sigma.at(s) == b.sigma.at(map[s])) || !(a.tau.at(s) == b.tau.at(map[s]))) {
            return false;
        }
    }
    for (std::size_t x = 0; x < a.delta.size(); ++x) {
        for (std::size_t s = 0; s < a.size(); ++s) {
            for (std::size_t t = 0; t < a.size(); ++t) {
                if (!(a.delta[x].at(s, t) == b.delta[x].at(map[s], map[t]))) {
                    return false;
                }
            }
        }
    }
    if (compat) {
        for (std::size_t s = 0; s < a.size(); ++s) {
            for (std::size_t t = 0; t < a.size(); ++t) {
                if (!(compat->first.at(s, t) == compat->second.at(map[s], map[t]))) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> isomorphism_search(
    const Lattice& lattice, const FuzzyAutomaton& a, const FuzzyAutomaton& b,
    const std::optional<std::pair<FuzzyRelation, FuzzyRelation>>& compat) {
    if (a.size() != b.size() || a.alphabet != b.alphabet || !(a.desc == b.desc)) {
        return std::nullopt;
    }
    const FuzzyRelation* compat_a = compat ? &compat->first : nullptr;
    const FuzzyRelation* compat_b = compat ? &compat->second : nullptr;
    if (compat) {
        if (compat_a->rows != a.size() || compat_a->cols != a.size() ||
            compat_b->rows != b.size() || compat_b->cols != b.size()) {
            throw DimensionError("compatibility relations must be square over the automata states");
        }
    }

    std::vector<StateSignature> sig_b;
    sig_b.reserve(b.size());
    for (std::size_t t = 0; t < b.size(); ++t) {
        sig_b.push_back(signature_of(b, t, compat_b));
    }
    std::vector<std::vector<std::size_t>> candidates(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        const StateSignature sig_a = signature_of(a, s, compat_a);
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (sig_a == sig_b[t]) {
                candidates[s].push_back(t);
            }
        }
        if (candidates[s].empty()) {
            return std::nullopt;
        }
    }

    std::vector<std::size_t> map(a.size(), 0);
    std::vector<bool> used(b.size(), false);
    if (!extend(a, b, candidates, compat_a, compat_b, map, used, 0)) {
        return std::nullopt;
    }
    if (!is_isomorphism(lattice, a, b, map, compat)) {
        throw std::logic_error("isomorphism search returned a map that fails verification");
    }
    return map;
}

} // namespace fuzzaut
