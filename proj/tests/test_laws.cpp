/* Property suite for the residuated-lattice axioms and the calculus of fuzzy
 * sets and relations built on top of them.  Every supported structure gets
 * several thousand deterministic sampled checks; a final test case proves the
 * per-structure count stayed above one thousand. */

#include <doctest.h>

#include "fuzzaut/relation.hpp"
#include "sampling.hpp"
#include "test_util.hpp"

#include <map>
#include <random>
#include <vector>

using namespace fuzzaut;
using sampling::random_relation;
using sampling::random_set;
using sampling::random_value;

namespace {

std::size_t& count_for(const Lattice& lat)
{
    static std::map<int, std::size_t> counts;
    return counts[static_cast<int>(lat.kind())];
}

std::vector<Lattice> all_lattices()
{
    return {Lattice(LatticeKind::boolean), Lattice(LatticeKind::godel),
            Lattice(LatticeKind::lukasiewicz), Lattice(LatticeKind::product),
            Lattice(LatticeKind::chain, 5)};
}

Value meet_all(const Lattice& lat, const std::vector<Value>& xs)
{
    Value acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        acc = lat.meet(acc, xs.at(i));
    }
    return acc;
}

Value join_all(const Lattice& lat, const std::vector<Value>& xs)
{
    Value acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        acc = lat.join(acc, xs.at(i));
    }
    return acc;
}

} // namespace

// Counts every sampled check per structure so the suite can prove its own
// coverage at the end of the file (doctest runs cases in declaration order
// within a translation unit).
#define LAW_CHECK(lat, ...)                                                                        \
    do {                                                                                           \
        ++count_for(lat);                                                                          \
        CHECK(__VA_ARGS__);                                                                        \
    } while (0)

TEST_CASE("scalar laws of the residuated structures hold on sampled values")
{
    for (const Lattice& lat : all_lattices()) {
        std::mt19937 rng(20240607);
        for (int trial = 0; trial < 200; ++trial) {
            INFO("structure " << to_string(lat.kind()) << ", trial " << trial);
            const Value x = random_value(lat, rng);
            const Value y = random_value(lat, rng);
            const Value z = random_value(lat, rng);

            // The product and the residuum form an adjoint pair.
            LAW_CHECK(lat, lat.leq(lat.tensor(x, y), z) == lat.leq(x, lat.residuum(y, z)));
            LAW_CHECK(lat, lat.leq(lat.tensor(y, lat.residuum(y, z)), z));
            LAW_CHECK(lat, lat.leq(x, y) == (lat.residuum(x, y) == lat.one()));

            // The biresiduum is the symmetrized residuum and measures equality.
            LAW_CHECK(lat, lat.biresiduum(x, y) ==
                               lat.meet(lat.residuum(x, y), lat.residuum(y, x)));
            LAW_CHECK(lat, (lat.biresiduum(x, y) == lat.one()) == (x == y));

            // The product is a commutative monoid with unit 1 and zero 0.
            LAW_CHECK(lat, lat.tensor(x, y) == lat.tensor(y, x));
            LAW_CHECK(lat, lat.tensor(x, lat.tensor(y, z)) == lat.tensor(lat.tensor(x, y), z));
            LAW_CHECK(lat, lat.tensor(x, lat.one()) == x);
            LAW_CHECK(lat, lat.tensor(x, lat.zero()) == lat.zero());

            // Order compatibility: the product is isotone in both arguments,
            // the residuum isotone on the right and antitone on the left.
            const Value lo = lat.meet(x, y);
            const Value hi = lat.join(x, y);
            LAW_CHECK(lat, lat.leq(lat.tensor(lo, z), lat.tensor(hi, z)));
            LAW_CHECK(lat, lat.leq(lat.residuum(z, lo), lat.residuum(z, hi)));
            LAW_CHECK(lat, lat.leq(lat.residuum(hi, z), lat.residuum(lo, z)));

            // Multiplying both sides by the same value cannot separate them
            // further than they already are.
            LAW_CHECK(lat, lat.leq(lat.biresiduum(x, y),
                                   lat.biresiduum(lat.tensor(x, z), lat.tensor(y, z))));

            // The product distributes over finite joins.
            LAW_CHECK(lat, lat.tensor(lat.join(x, y), z) ==
                               lat.join(lat.tensor(x, z), lat.tensor(y, z)));

            // Meets and joins of families move through the biresiduum.
            std::vector<Value> xs, ys, degrees;
            for (int i = 0; i < 3; ++i) {
                xs.push_back(random_value(lat, rng));
                ys.push_back(random_value(lat, rng));
                degrees.push_back(lat.biresiduum(xs.back(), ys.back()));
            }
            const Value agreement = meet_all(lat, degrees);
            LAW_CHECK(lat, lat.leq(agreement,
                                   lat.biresiduum(meet_all(lat, xs), meet_all(lat, ys))));
            LAW_CHECK(lat, lat.leq(agreement,
                                   lat.biresiduum(join_all(lat, xs), join_all(lat, ys))));
        }
    }
}

TEST_CASE("relation composition, inversion and residuals obey their laws")
{
    for (const Lattice& lat : all_lattices()) {
        std::mt19937 rng(20240608);
        std::uniform_int_distribution<std::size_t> dim2(2, 3);
        std::uniform_int_distribution<std::size_t> dim1(1, 3);
        for (int trial = 0; trial < 120; ++trial) {
            INFO("structure " << to_string(lat.kind()) << ", trial " << trial);
            const std::size_t na = dim2(rng), nb = dim1(rng), nc = dim2(rng), nd = dim1(rng);
            const FuzzyRelation phi = random_relation(lat, na, nb, rng);
            const FuzzyRelation phi2 = random_relation(lat, na, nb, rng);
            const FuzzyRelation psi = random_relation(lat, nb, nc, rng);
            const FuzzyRelation psi2 = random_relation(lat, nb, nc, rng);
            const FuzzyRelation chi = random_relation(lat, nc, nd, rng);
            const FuzzySet f = random_set(lat, na, rng);
            const FuzzySet g = random_set(lat, nb, rng);
            const FuzzySet h = random_set(lat, nc, rng);

            // Composition is associative, also in every mixed set/relation form.
            LAW_CHECK(lat, compose(lat, compose(lat, phi, psi), chi) ==
                               compose(lat, phi, compose(lat, psi, chi)));
            LAW_CHECK(lat, compose(lat, compose(lat, f, phi), psi) ==
                               compose(lat, f, compose(lat, phi, psi)));
            LAW_CHECK(lat, compose(lat, compose(lat, f, phi), g) ==
                               compose(lat, f, compose(lat, phi, g)));
            LAW_CHECK(lat, compose(lat, compose(lat, phi, psi), h) ==
                               compose(lat, phi, compose(lat, psi, h)));

            // Inversion is an involution and reverses composition.
            LAW_CHECK(lat, inverse(compose(lat, phi, psi)) ==
                               compose(lat, inverse(psi), inverse(phi)));
            LAW_CHECK(lat, inverse(inverse(phi)) == phi);

            // Crisp identities are neutral.
            LAW_CHECK(lat, compose(lat, identity_relation(lat, na), phi) == phi);
            LAW_CHECK(lat, compose(lat, phi, identity_relation(lat, nb)) == phi);

            // Composition is isotone in both arguments ...
            LAW_CHECK(lat, leq(lat, compose(lat, meet(lat, phi, phi2), psi),
                               compose(lat, join(lat, phi, phi2), psi)));
            LAW_CHECK(lat, leq(lat, compose(lat, phi, meet(lat, psi, psi2)),
                               compose(lat, phi, join(lat, psi, psi2))));

            // ... and distributes over joins exactly, on either side.
            LAW_CHECK(lat, compose(lat, join(lat, phi, phi2), psi) ==
                               join(lat, compose(lat, phi, psi), compose(lat, phi2, psi)));
            LAW_CHECK(lat, compose(lat, phi, join(lat, psi, psi2)) ==
                               join(lat, compose(lat, phi, psi), compose(lat, phi, psi2)));
            LAW_CHECK(lat, inverse(join(lat, phi, phi2)) ==
                               join(lat, inverse(phi), inverse(phi2)));

            // Residuals: each one solves its inequality and is the greatest
            // solution, which is exactly the relational adjunction.
            const FuzzyRelation u = random_relation(lat, na, nb, rng);
            const FuzzyRelation w = random_relation(lat, na, nc, rng);
            const FuzzyRelation rr = right_residual(lat, w, psi);
            LAW_CHECK(lat, leq(lat, compose(lat, u, psi), w) == leq(lat, u, rr));
            LAW_CHECK(lat, leq(lat, compose(lat, rr, psi), w));

            const FuzzyRelation lr = left_residual(lat, phi, w);
            LAW_CHECK(lat, leq(lat, compose(lat, phi, psi), w) == leq(lat, psi, lr));
            LAW_CHECK(lat, leq(lat, compose(lat, phi, lr), w));
        }
    }
}

TEST_CASE("every structure received at least one thousand sampled law checks")
{
    for (const Lattice& lat : all_lattices()) {
        INFO("structure " << to_string(lat.kind()));
        CHECK(count_for(lat) >= 1000);
    }
}
