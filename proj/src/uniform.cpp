/* uniform.cpp -- Implementation of uniform fuzzy relation machinery. */

#include "fuzzaut/uniform.hpp"

#include <algorithm>

namespace fuzzaut {

std::pair<FuzzyRelation, FuzzyRelation> induced_equivalences(const Lattice& lattice,
                                                             const FuzzyRelation& phi) {
    FuzzyRelation kernel = make_relation(lattice, phi.rows, phi.rows);
    for (std::size_t a1 = 0; a1 < phi.rows; ++a1) {
        for (std::size_t a2 = 0; a2 < phi.rows; ++a2) {
            Value acc = lattice.one();
            for (std::size_t b = 0; b < phi.cols; ++b) {
                acc = lattice.meet(acc, lattice.biresiduum(phi.at(a1, b), phi.at(a2, b)));
            }
            kernel.at(a1, a2) = acc;
        }
    }
    FuzzyRelation cokernel = make_relation(lattice, phi.cols, phi.cols);
    for (std::size_t b1 = 0; b1 < phi.cols; ++b1) {
        for (std::size_t b2 = 0; b2 < phi.cols; ++b2) {
            Value acc = lattice.one();
            for (std::size_t a = 0; a < phi.rows; ++a) {
                acc = lattice.meet(acc, lattice.biresiduum(phi.at(a, b1), phi.at(a, b2)));
            }
            cokernel.at(b1, b2) = acc;
        }
    }
    return {std::move(kernel), std::move(cokernel)};
}

UniformClassification classify(const Lattice& lattice, const FuzzyRelation& phi) {
    if (is_empty(phi)) {
        throw Error("classify: relation is empty (all entries are 0)");
    }

    UniformClassification result;
    result.is_L_function = true;
    result.is_surjective = true;
    result.is_partial_fuzzy_function = true;
    result.is_uniform = true;

    auto record = [&result](const char* check, std::vector<std::size_t> coords) {
        result.is_uniform = false;
        if (result.failed_check.empty()) {
            result.failed_check = check;
            result.witness = std::move(coords);
        }
    };

    for (std::size_t a = 0; a < phi.rows && result.is_L_function; ++a) {
        bool hit = false;
        for (std::size_t b = 0; b < phi.cols; ++b) {
            if (phi.at(a, b) == lattice.one()) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            result.is_L_function = false;
            record("L-function", {a});
        }
    }
    for (std::size_t b = 0; b < phi.cols && result.is_surjective; ++b) {
        bool hit = false;
        for (std::size_t a = 0; a < phi.rows; ++a) {
            if (phi.at(a, b) == lattice.one()) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            result.is_surjective = false;
            record("surjectivity", {b});
        }
    }

    const FuzzyRelation triple = compose(lattice, compose(lattice, phi, inverse(phi)), phi);
    if (auto excess = first_excess(lattice, triple, phi)) {
        result.is_partial_fuzzy_function = false;
        record("partial-fuzzy-function", {excess->first, excess->second});
    }
    if (result.is_uniform && !(triple == phi)) {
        // Defensive: unreachable in theory.  An L-function puts a 1 in every
        // row, so (phi o inv(phi))(a,a) = 1 and hence phi o inv(phi) o phi >= phi;
        // together with the partial-fuzzy-function bound the two sides agree.
        if (auto deficit = first_excess(lattice, phi, triple)) {
            record("composition-equality", {deficit->first, deficit->second});
        }
    }
    return result;
}

std::vector<CrispDescription> crisp_descriptions(const Lattice& lattice, const FuzzyRelation& phi,
                                                 std::size_t cap) {
    std::vector<std::vector<std::size_t>> candidates(phi.rows);
    for (std::size_t a = 0; a < phi.rows; ++a) {
        for (std::size_t b = 0; b < phi.cols; ++b) {
            if (phi.at(a, b) == lattice.one()) {
                candidates[a].push_back(b);
            }
        }
        if (candidates[a].empty()) {
            throw Error("crisp_descriptions: row " + std::to_string(a) +
                        " never reaches 1, so the relation is not an L-function");
        }
    }

    std::vector<CrispDescription> out;
    CrispDescription current;
    current.map.assign(phi.rows, 0);
    // Odometer enumeration: rows are digits, most significant first, so the
    // resulting sequence of maps is lexicographic.
    std::vector<std::size_t> pick(phi.rows, 0);
    while (true) {
        for (std::size_t a = 0; a < phi.rows; ++a) {
            current.map[a] = candidates[a][pick[a]];
        }
        if (out.size() >= cap) {
            throw Error("crisp_descriptions: more than " + std::to_string(cap) +
                        " descriptions exist");
        }
        out.push_back(current);
        std::size_t a = phi.rows;
        while (a > 0) {
            --a;
            if (++pick[a] < candidates[a].size()) {
                break;
            }
            pick[a] = 0;
            if (a == 0) {
                return out;
            }
        }
        if (phi.rows == 0) {
            return out;
        }
    }
}

std::vector<std::size_t> induced_bijection(const Lattice& lattice, const FuzzyRelation& phi) {
    UniformClassification cls = classify(lattice, phi);
    if (!cls.is_uniform) {
        throw Error("induced_bijection: relation is not uniform (failed check: " +
                    cls.failed_check + ")");
    }
    auto [kernel, cokernel] = induced_equivalences(lattice, phi);
    FactorSet fsA = factor_set(lattice, kernel);
    FactorSet fsB = factor_set(lattice, cokernel);

    std::vector<std::size_t> iso(fsA.index(), 0);
    for (std::size_t k = 0; k < fsA.index(); ++k) {
        const std::size_t a = fsA.representatives[k];
        // Any b with phi(a,b) = 1 lands in the same co-kernel class; take the
        // least one. Existence is guaranteed because phi is an L-function.
        for (std::size_t b = 0; b < phi.cols; ++b) {
            if (phi.at(a, b) == lattice.one()) {
                iso[k] = fsB.class_of[b];
                break;
            }
        }
    }
    return iso;
}

FuzzyRelation uniform_from_isomorphism(const Lattice& lattice, const FuzzyRelation& e,
                                       const FuzzyRelation& f,
                                       const std::vector<std::size_t>& iso) {
    FactorSet fsE = factor_set(lattice, e);
    FactorSet fsF = factor_set(lattice, f);
    if (iso.size() != fsE.index() || fsE.index() != fsF.index()) {
        throw Error("uniform_from_isomorphism: map size " + std::to_string(iso.size()) +
                    " does not match factor set sizes " + std::to_string(fsE.index()) + " and " +
                    std::to_string(fsF.index()));
    }
    std::vector<bool> seen(fsF.index(), false);
    for (std::size_t image : iso) {
        if (image >= fsF.index() || seen[image]) {
            throw Error("uniform_from_isomorphism: map is not a bijection between the factor sets");
        }
        seen[image] = true;
    }

    FuzzyRelation phi = make_relation(lattice, e.rows, f.rows);
    for (std::size_t a = 0; a < e.rows; ++a) {
        const std::size_t psi_a = fsF.representatives[iso[fsE.class_of[a]]];
        for (std::size_t b = 0; b < f.rows; ++b) {
            phi.at(a, b) = f.at(psi_a, b);
        }
    }
    return phi;
}

} // namespace fuzzaut
