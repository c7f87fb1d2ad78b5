/* Tests for the six simulation/bisimulation kinds: the exact checker, the
 * greatest-relation fixpoint solvers, greatest bisimulation equivalences,
 * strongly invariant equivalences, and the uniform-relation equality
 * characterization of forward bisimulations. */

#include <doctest.h>

#include <random>

#include "fuzzaut/bisim.hpp"
#include "fuzzaut/json_io.hpp"
#include "fuzzaut/uniform.hpp"
#include "sampling.hpp"
#include "test_util.hpp"

using namespace fuzzaut;
using testutil::data_path;
using testutil::load_fixture;
using testutil::make_automaton;
using testutil::rel_of;

TEST_CASE("kind names round-trip")
{
    for (BisimKind kind :
         {BisimKind::forward_sim, BisimKind::backward_sim, BisimKind::forward_bisim,
          BisimKind::backward_bisim, BisimKind::backward_forward, BisimKind::forward_backward}) {
        CHECK(bisim_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(bisim_kind_from_string("sideways"), Error);
    CHECK(to_string(FailureReason::none) == "none");
    CHECK(to_string(FailureReason::sigma_check) == "sigma-check");
    CHECK(to_string(FailureReason::empty_result) == "empty-result");
    CHECK(to_string(FailureReason::iteration_cap) == "iteration-cap");
}

TEST_CASE("greatest forward simulations of the three-to-two pair")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;
    const FuzzyRelation phi = load_relation(data_path("simpair_phi.json"), lat);
    const FuzzyRelation psi = load_relation(data_path("simpair_psi.json"), lat);

    SUBCASE("from the three-state automaton into the two-state automaton")
    {
        const FixpointReport rep =
            greatest_simulation(lat, a.automaton, b.automaton, BisimKind::forward_sim);
        CHECK(rep.converged);
        CHECK(rep.iterations == 2);
        CHECK(rep.failure == FailureReason::none);
        REQUIRE(rep.result.has_value());
        CHECK(*rep.result == phi);
    }

    SUBCASE("in the opposite direction")
    {
        const FixpointReport rep =
            greatest_simulation(lat, b.automaton, a.automaton, BisimKind::forward_sim);
        CHECK(rep.converged);
        CHECK(rep.iterations == 2);
        REQUIRE(rep.result.has_value());
        CHECK(*rep.result == psi);
    }

    SUBCASE("the computed relations pass the checker")
    {
        CHECK(check_relation(lat, a.automaton, b.automaton, phi, BisimKind::forward_sim).holds);
        CHECK(check_relation(lat, b.automaton, a.automaton, psi, BisimKind::forward_sim).holds);
    }

    SUBCASE("no forward bisimulation exists: the initial check fails at the fixpoint")
    {
        const FixpointReport rep =
            greatest_bisimulation(lat, a.automaton, b.automaton, BisimKind::forward_bisim);
        CHECK(rep.converged);
        CHECK(rep.iterations == 2);
        CHECK_FALSE(rep.result.has_value());
        CHECK(rep.failure == FailureReason::sigma_check);
    }

    SUBCASE("the forward-simulation witness is not a forward bisimulation")
    {
        const CheckResult cr =
            check_relation(lat, a.automaton, b.automaton, phi, BisimKind::forward_bisim);
        CHECK_FALSE(cr.holds);
        REQUIRE(cr.violation.has_value());
        CHECK(cr.violation->condition == "initial (inverse)");
        CHECK(cr.violation->expression == "sigma^B <= sigma^A o phi");
        CHECK(cr.violation->row == 0);
        CHECK(cr.violation->row_label == "q1");
        CHECK(cr.violation->col_label.empty());
        CHECK(cr.violation->lhs == lat.parse("7/10"));
        CHECK(cr.violation->rhs == lat.parse("3/5"));
    }
}

TEST_CASE("natural maps onto factor automata pass the expected checks")
{
    const AutomatonFile base = load_fixture("bool4.json");
    const Lattice& lat = base.lattice;
    const AutomatonFile by_e = load_fixture("bool4_by_e.json");
    const AutomatonFile by_f = load_fixture("bool4_by_f.json");
    const FuzzyRelation nat_e = load_relation(data_path("bool4_nat_e.json"), lat);
    const FuzzyRelation nat_f = load_relation(data_path("bool4_nat_f.json"), lat);

    SUBCASE("the finer partition's natural map is a forward bisimulation")
    {
        CHECK(check_relation(lat, base.automaton, by_e.automaton, nat_e, BisimKind::forward_bisim)
                  .holds);
        CHECK(check_relation(lat, base.automaton, by_e.automaton, nat_e,
                             BisimKind::backward_forward)
                  .holds);
        CHECK(check_relation(lat, base.automaton, by_e.automaton, nat_e, BisimKind::forward_sim)
                  .holds);
    }

    SUBCASE("but not a forward-backward bisimulation")
    {
        const CheckResult cr = check_relation(lat, base.automaton, by_e.automaton, nat_e,
                                              BisimKind::forward_backward);
        CHECK_FALSE(cr.holds);
        REQUIRE(cr.violation.has_value());
        CHECK(cr.violation->condition == "letter x (inverse)");
        CHECK(cr.violation->expression == "delta[x]^B o inv(phi) <= inv(phi) o delta[x]^A");
        CHECK(cr.violation->row == 1);
        CHECK(cr.violation->col == 2);
        CHECK(cr.violation->row_label == "{s2}");
        CHECK(cr.violation->col_label == "s3");
        CHECK(cr.violation->lhs == lat.one());
        CHECK(cr.violation->rhs == lat.zero());
    }

    SUBCASE("the coarser partition's natural map is only a forward simulation")
    {
        CHECK(check_relation(lat, base.automaton, by_f.automaton, nat_f, BisimKind::forward_sim)
                  .holds);

        const CheckResult cr = check_relation(lat, base.automaton, by_f.automaton, nat_f,
                                              BisimKind::forward_bisim);
        CHECK_FALSE(cr.holds);
        REQUIRE(cr.violation.has_value());
        CHECK(cr.violation->condition == "letter x (inverse)");
        CHECK(cr.violation->expression == "phi o delta[x]^B <= delta[x]^A o phi");
        CHECK(cr.violation->row == 0);
        CHECK(cr.violation->col == 1);
        CHECK(cr.violation->row_label == "s1");
        CHECK(cr.violation->col_label == "{s3,s4}");
        CHECK(cr.violation->lhs == lat.one());
        CHECK(cr.violation->rhs == lat.zero());
    }
}

TEST_CASE("the checker validates its inputs")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;

    CHECK_THROWS_WITH_AS(
        check_relation(lat, a.automaton, b.automaton, make_relation(lat, 3, 2),
                       BisimKind::forward_sim),
        "check_relation: the relation is empty; simulations and bisimulations are non-empty by "
        "definition",
        Error);
    CHECK_THROWS_WITH_AS(check_relation(lat, a.automaton, b.automaton, identity_relation(lat, 3),
                                        BisimKind::forward_sim),
                         "check_relation: relation is 3x3 but the automata have 3 and 2 states",
                         DimensionError);

    const AutomatonFile other = load_fixture("langeq_a.json"); // alphabet {x} only
    CHECK_THROWS_WITH_AS(check_relation(lat, a.automaton, other.automaton,
                                        identity_relation(lat, 3), BisimKind::forward_sim),
                         "check_relation: automata must share the same alphabet", Error);

    const AutomatonFile chain = load_fixture("chain3.json");
    CHECK_THROWS_AS(check_relation(lat, a.automaton, chain.automaton, identity_relation(lat, 3),
                                   BisimKind::forward_sim),
                    LatticeError);
}

TEST_CASE("greatest bisimulation equivalences on the example automata")
{
    SUBCASE("two automata whose only forward-bisimulation equivalence is crisp equality")
    {
        const AutomatonFile a = load_fixture("nonufb_a.json");
        const AutomatonFile b = load_fixture("nonufb_b.json");
        const FixpointReport ra =
            greatest_bisim_equivalence(a.lattice, a.automaton, BisimKind::forward_bisim);
        const FixpointReport rb =
            greatest_bisim_equivalence(b.lattice, b.automaton, BisimKind::forward_bisim);
        REQUIRE(ra.result.has_value());
        REQUIRE(rb.result.has_value());
        CHECK(*ra.result == identity_relation(a.lattice, 2));
        CHECK(*rb.result == identity_relation(b.lattice, 2));
        CHECK(ra.iterations == 1);
        CHECK(rb.iterations == 1);
    }

    SUBCASE("a properly fuzzy greatest equivalence")
    {
        const AutomatonFile a = load_fixture("ufbpair_a.json");
        const AutomatonFile b = load_fixture("ufbpair_b.json");
        const FuzzyRelation expected = load_relation(data_path("ufbpair_e.json"), a.lattice);

        const FixpointReport ra =
            greatest_bisim_equivalence(a.lattice, a.automaton, BisimKind::forward_bisim);
        REQUIRE(ra.result.has_value());
        CHECK(*ra.result == expected);
        CHECK(ra.iterations == 2);

        const FixpointReport rb =
            greatest_bisim_equivalence(b.lattice, b.automaton, BisimKind::forward_bisim);
        REQUIRE(rb.result.has_value());
        CHECK(*rb.result == expected);
        CHECK(rb.iterations == 2);
    }

    SUBCASE("on the crisp four-state automaton the equivalence has three classes")
    {
        const AutomatonFile base = load_fixture("bool4.json");
        const FuzzyRelation e = load_relation(data_path("bool4_e.json"), base.lattice);
        const FixpointReport rep =
            greatest_bisim_equivalence(base.lattice, base.automaton, BisimKind::forward_bisim);
        REQUIRE(rep.result.has_value());
        CHECK(*rep.result == e);
        CHECK(rep.iterations == 2);
    }
}

TEST_CASE("the greatest forward bisimulation from an automaton to itself is its greatest "
          "forward-bisimulation equivalence")
{
    for (const char* name : {"simpair_a.json", "simpair_b.json", "bool4.json", "ufbpair_a.json",
                             "langeq_a.json", "chain3.json"}) {
        const AutomatonFile a = load_fixture(name);
        const FixpointReport rel =
            greatest_bisimulation(a.lattice, a.automaton, a.automaton, BisimKind::forward_bisim);
        const FixpointReport equiv =
            greatest_bisim_equivalence(a.lattice, a.automaton, BisimKind::forward_bisim);
        REQUIRE(rel.result.has_value());
        REQUIRE(equiv.result.has_value());
        CHECK(*rel.result == *equiv.result);
    }
}

TEST_CASE("greatest existing forward bisimulations are partial fuzzy functions")
{
    SUBCASE("between the four-state automaton and its three-class quotient")
    {
        const AutomatonFile base = load_fixture("bool4.json");
        const AutomatonFile by_e = load_fixture("bool4_by_e.json");
        const FixpointReport rep = greatest_bisimulation(base.lattice, base.automaton,
                                                         by_e.automaton, BisimKind::forward_bisim);
        REQUIRE(rep.result.has_value());
        CHECK(classify(base.lattice, *rep.result).is_partial_fuzzy_function);
    }

    SUBCASE("between the two fuzzy two-state automata")
    {
        const AutomatonFile a = load_fixture("ufbpair_a.json");
        const AutomatonFile b = load_fixture("ufbpair_b.json");
        const FixpointReport rep =
            greatest_bisimulation(a.lattice, a.automaton, b.automaton, BisimKind::forward_bisim);
        REQUIRE(rep.result.has_value());
        CHECK(classify(a.lattice, *rep.result).is_partial_fuzzy_function);
    }
}

TEST_CASE("backward kinds agree with forward kinds on the reverse automata")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;
    const FuzzyAutomaton ra = reverse(a.automaton);
    const FuzzyAutomaton rb = reverse(b.automaton);

    SUBCASE("solver agreement")
    {
        const FixpointReport bwd =
            greatest_simulation(lat, a.automaton, b.automaton, BisimKind::backward_sim);
        const FixpointReport fwd_rev = greatest_simulation(lat, ra, rb, BisimKind::forward_sim);
        CHECK(bwd.converged == fwd_rev.converged);
        CHECK(bwd.iterations == fwd_rev.iterations);
        CHECK(bwd.result == fwd_rev.result);

        const FixpointReport bb =
            greatest_bisimulation(lat, a.automaton, b.automaton, BisimKind::backward_bisim);
        const FixpointReport fb_rev = greatest_bisimulation(lat, ra, rb, BisimKind::forward_bisim);
        CHECK(bb.result == fb_rev.result);
        CHECK(bb.failure == fb_rev.failure);

        const FixpointReport bf =
            greatest_bisimulation(lat, a.automaton, b.automaton, BisimKind::backward_forward);
        const FixpointReport fb2_rev =
            greatest_bisimulation(lat, ra, rb, BisimKind::forward_backward);
        CHECK(bf.result == fb2_rev.result);
        CHECK(bf.failure == fb2_rev.failure);
    }

    SUBCASE("checker agreement on random relations")
    {
        std::mt19937 rng(20240604);
        const std::vector<std::pair<BisimKind, BisimKind>> dual_pairs = {
            {BisimKind::backward_sim, BisimKind::forward_sim},
            {BisimKind::backward_bisim, BisimKind::forward_bisim},
            {BisimKind::backward_forward, BisimKind::forward_backward},
            {BisimKind::forward_backward, BisimKind::backward_forward},
        };
        for (int trial = 0; trial < 50; ++trial) {
            FuzzyRelation phi = sampling::random_relation(lat, 3, 2, rng);
            if (is_empty(phi)) {
                phi.at(0, 0) = lat.one();
            }
            for (const auto& [bwd_kind, fwd_kind] : dual_pairs) {
                const bool on_original =
                    check_relation(lat, a.automaton, b.automaton, phi, bwd_kind).holds;
                const bool on_reversed = check_relation(lat, ra, rb, phi, fwd_kind).holds;
                CHECK(on_original == on_reversed);
            }
        }
    }
}

TEST_CASE("forward simulations transfer whole-word behaviour")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;
    const FuzzyRelation phi = load_relation(data_path("simpair_phi.json"), lat);
    const FuzzyRelation phi_inv = inverse(phi);

    // All words over {x, y} of length at most 3, built level by level.
    std::vector<Word> words = {{}};
    std::vector<Word> level = {{}};
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<Word> grown;
        for (const Word& w : level) {
            for (const std::string& sym : a.automaton.alphabet) {
                Word v = w;
                v.push_back(sym);
                grown.push_back(std::move(v));
            }
        }
        words.insert(words.end(), grown.begin(), grown.end());
        level = std::move(grown);
    }

    for (const Word& u : words) {
        const FuzzyRelation du_a = transition_relation(lat, a.automaton, u);
        const FuzzyRelation du_b = transition_relation(lat, b.automaton, u);
        // The letter inequalities extend to every word.
        CHECK(leq(lat, compose(lat, phi_inv, du_a), compose(lat, du_b, phi_inv)));
        // Hence word values can only grow along the simulation.
        const Value va = language_value(lat, a.automaton, u);
        const Value vb = language_value(lat, b.automaton, u);
        CHECK(lat.leq(va, vb));
    }
}

TEST_CASE("forward simulations compose")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;
    const FuzzyRelation phi = load_relation(data_path("simpair_phi.json"), lat);
    const FuzzyRelation psi = load_relation(data_path("simpair_psi.json"), lat);

    CHECK(check_relation(lat, a.automaton, a.automaton, compose(lat, phi, psi),
                         BisimKind::forward_sim)
              .holds);
    CHECK(check_relation(lat, b.automaton, b.automaton, compose(lat, psi, phi),
                         BisimKind::forward_sim)
              .holds);
}

TEST_CASE("fixpoint solvers report empty results and iteration caps")
{
    SUBCASE("terminal vectors that rule out every relation")
    {
        const Lattice lat{LatticeKind::boolean};
        const FuzzyAutomaton accepting =
            testutil::make_automaton(lat, {"s"}, {"x"}, {{{"1"}}}, {"1"}, {"1"});
        const FuzzyAutomaton rejecting =
            testutil::make_automaton(lat, {"s"}, {"x"}, {{{"1"}}}, {"1"}, {"0"});
        const FixpointReport rep =
            greatest_simulation(lat, accepting, rejecting, BisimKind::forward_sim);
        CHECK(rep.converged);
        CHECK_FALSE(rep.result.has_value());
        CHECK(rep.failure == FailureReason::empty_result);
        CHECK(rep.iterations == 1);
    }

    SUBCASE("a product-lattice pair that halves the bound forever")
    {
        const Lattice lat{LatticeKind::product};
        const FuzzyAutomaton fast =
            testutil::make_automaton(lat, {"s"}, {"x"}, {{{"1"}}}, {"1"}, {"1"});
        const FuzzyAutomaton slow =
            testutil::make_automaton(lat, {"s"}, {"x"}, {{{"1/2"}}}, {"1"}, {"1"});
        const FixpointReport rep =
            greatest_simulation(lat, fast, slow, BisimKind::forward_sim, 10);
        CHECK_FALSE(rep.converged);
        CHECK(rep.failure == FailureReason::iteration_cap);
        CHECK(rep.iterations == 10);
        // The unconverged iterate is still reported: it has been halved once
        // per round.
        REQUIRE(rep.result.has_value());
        CHECK(rep.result->at(0, 0) == lat.parse("1/1024"));
    }
}

TEST_CASE("solvers reject kinds they do not implement")
{
    const AutomatonFile a = load_fixture("simpair_a.json");
    const AutomatonFile b = load_fixture("simpair_b.json");
    const Lattice& lat = a.lattice;
    CHECK_THROWS_WITH_AS(
        greatest_simulation(lat, a.automaton, b.automaton, BisimKind::forward_bisim),
        "greatest_simulation: kind must be forward-sim or backward-sim, got forward-bisim",
        Error);
    CHECK_THROWS_WITH_AS(
        greatest_bisimulation(lat, a.automaton, b.automaton, BisimKind::forward_sim),
        "greatest_bisimulation: kind must be a bisimulation kind, got forward-sim", Error);
    CHECK_THROWS_WITH_AS(
        greatest_bisim_equivalence(lat, a.automaton, BisimKind::backward_forward),
        "greatest_bisim_equivalence: kind must be forward-bisim or backward-bisim, got "
        "backward-forward",
        Error);
}

TEST_CASE("greatest strongly invariant equivalences")
{
    SUBCASE("on the crisp four-state automaton it matches the three-class partition")
    {
        const AutomatonFile base = load_fixture("bool4.json");
        const FuzzyRelation e = load_relation(data_path("bool4_e.json"), base.lattice);
        CHECK(greatest_strongly_invariant(base.lattice, base.automaton, InvariantSide::right) ==
              e);
    }

    SUBCASE("on the fuzzy pair it is strictly finer than the greatest bisim equivalence")
    {
        const AutomatonFile a = load_fixture("ufbpair_a.json");
        const Lattice& lat = a.lattice;
        const FuzzyRelation strong =
            greatest_strongly_invariant(lat, a.automaton, InvariantSide::right);
        CHECK(strong == identity_relation(lat, 2));
        const FixpointReport rep =
            greatest_bisim_equivalence(lat, a.automaton, BisimKind::forward_bisim);
        REQUIRE(rep.result.has_value());
        CHECK(leq(lat, strong, *rep.result));
        CHECK_FALSE(*rep.result == strong);
    }

    SUBCASE("defining inequalities and maximality, exhaustively over a three-chain")
    {
        const Lattice lat{LatticeKind::chain, 3};
        std::mt19937 rng(20240605);
        for (int trial = 0; trial < 25; ++trial) {
            const FuzzyAutomaton a = sampling::random_automaton(lat, 3, 2, rng);
            const FuzzyRelation strong = greatest_strongly_invariant(lat, a, InvariantSide::right);

            for (const FuzzyRelation& d : a.delta) {
                CHECK(leq(lat, compose(lat, strong, d), d));
            }
            CHECK(leq(lat, compose(lat, strong, a.tau), a.tau));

            // Enumerate all reflexive symmetric 3x3 matrices over the chain
            // and join those that qualify; the closed form must match.
            FuzzyRelation best = identity_relation(lat, 3);
            const Value levels[3] = {lat.zero(), lat.parse("1"), lat.one()};
            for (int v01 = 0; v01 < 3; ++v01) {
                for (int v02 = 0; v02 < 3; ++v02) {
                    for (int v12 = 0; v12 < 3; ++v12) {
                        FuzzyRelation cand = identity_relation(lat, 3);
                        cand.at(0, 1) = cand.at(1, 0) = levels[v01];
                        cand.at(0, 2) = cand.at(2, 0) = levels[v02];
                        cand.at(1, 2) = cand.at(2, 1) = levels[v12];
                        if (!classify_equivalence(lat, cand).is_equivalence()) {
                            continue;
                        }
                        bool invariant = leq(lat, compose(lat, cand, a.tau), a.tau);
                        for (const FuzzyRelation& d : a.delta) {
                            invariant = invariant && leq(lat, compose(lat, cand, d), d);
                        }
                        if (invariant) {
                            best = join(lat, best, cand);
                        }
                    }
                }
            }
            CHECK(strong == best);
        }
    }

    SUBCASE("the left side is the right side of the reverse automaton")
    {
        const AutomatonFile a = load_fixture("simpair_a.json");
        const Lattice& lat = a.lattice;
        CHECK(greatest_strongly_invariant(lat, a.automaton, InvariantSide::left) ==
              greatest_strongly_invariant(lat, reverse(a.automaton), InvariantSide::right));
    }
}

TEST_CASE("uniform forward bisimulations satisfy the six-equality characterization")
{
    const AutomatonFile base = load_fixture("bool4.json");
    const AutomatonFile by_e = load_fixture("bool4_by_e.json");
    const AutomatonFile by_f = load_fixture("bool4_by_f.json");
    const Lattice& lat = base.lattice;
    const FuzzyRelation nat_e = load_relation(data_path("bool4_nat_e.json"), lat);
    const FuzzyRelation nat_f = load_relation(data_path("bool4_nat_f.json"), lat);

    SUBCASE("a uniform forward bisimulation passes")
    {
        const CheckResult cr =
            verify_uniform_fb_equalities(lat, base.automaton, by_e.automaton, nat_e);
        CHECK(cr.holds);
    }

    SUBCASE("a uniform non-bisimulation fails with a labeled equality")
    {
        const CheckResult cr =
            verify_uniform_fb_equalities(lat, base.automaton, by_f.automaton, nat_f);
        CHECK_FALSE(cr.holds);
        REQUIRE(cr.violation.has_value());
        CHECK(cr.violation->condition == "letter x (A-side)");
        CHECK(cr.violation->expression ==
              "delta[x]^A o phi o inv(phi) = phi o delta[x]^B o inv(phi)");
        CHECK(cr.violation->row == 0);
        CHECK(cr.violation->col == 2);
        CHECK(cr.violation->row_label == "s1");
        CHECK(cr.violation->col_label == "s3");
        CHECK(cr.violation->lhs == lat.zero());
        CHECK(cr.violation->rhs == lat.one());
    }

    SUBCASE("non-uniform relations are rejected")
    {
        const AutomatonFile a = load_fixture("simpair_a.json");
        const AutomatonFile b = load_fixture("simpair_b.json");
        const FuzzyRelation phi = load_relation(data_path("simpair_phi.json"), a.lattice);
        CHECK_THROWS_WITH_AS(
            verify_uniform_fb_equalities(a.lattice, a.automaton, b.automaton, phi),
            "verify_uniform_fb_equalities: relation is not uniform (failed check: "
            "partial-fuzzy-function)",
            Error);
    }

    SUBCASE("agreement with the checker on random uniform relations")
    {
        // For uniform relations the equality characterization must agree with
        // the direct forward-bisimulation check.
        const Lattice chain{LatticeKind::chain, 3};
        std::mt19937 rng(20240606);
        int verified = 0;
        for (int trial = 0; trial < 120; ++trial) {
            const FuzzyAutomaton a = sampling::random_automaton(chain, 2, 1, rng);
            const FuzzyAutomaton b = sampling::random_automaton(chain, 2, 1, rng);
            const FuzzyRelation e = sampling::random_equivalence(chain, 2, rng);
            const FuzzyRelation f = sampling::random_equivalence(chain, 2, rng);
            const std::size_t k = factor_set(chain, e).index();
            if (factor_set(chain, f).index() != k) {
                continue;
            }
            std::vector<std::size_t> iso(k);
            for (std::size_t i = 0; i < k; ++i) {
                iso[i] = i;
            }
            const FuzzyRelation phi = uniform_from_isomorphism(chain, e, f, iso);
            const bool by_equalities =
                verify_uniform_fb_equalities(chain, a, b, phi).holds;
            const bool by_checker =
                check_relation(chain, a, b, phi, BisimKind::forward_bisim).holds;
            CHECK(by_equalities == by_checker);
            ++verified;
        }
        CHECK(verified >= 40);
    }
}
