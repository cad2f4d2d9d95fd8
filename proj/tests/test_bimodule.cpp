#include <catch2/catch.hpp>

#include "nalab/bimodule.hpp"
#include "nalab/double_bialgebra.hpp"

#include "fixtures_env.hpp"

using namespace nalab;

namespace {

Bimodule random_bimodule(const Algebra& a, std::size_t mod_dim, testenv::SmallRng& rng) {
    Bimodule b = zero_bimodule(a, mod_dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (auto& x : b.l[i].a) x = rng.coord();
        for (auto& x : b.r[i].a) x = rng.coord();
    }
    return b;
}

} // namespace

TEST_CASE("adjoint representation satisfies the representation equations") {
    for (const char* name : {"NA6.json", "NAL6.json", "NAL4.json"}) {
        const Algebra a = testenv::algebra(name);
        auto [ok, w] = is_representation(adjoint_bimodule(a));
        INFO(name << (w ? ": " + w->describe() : std::string()));
        CHECK(ok);
    }
    const Algebra na6 = testenv::algebra("NA6.json");
    CHECK(is_representation(zero_bimodule(na6, 3)).first);

    // swapping l and r breaks it on NA6
    Bimodule swapped = adjoint_bimodule(na6);
    std::swap(swapped.l, swapped.r);
    auto [ok, w] = is_representation(swapped);
    CHECK_FALSE(ok);
    CHECK(w.has_value());

    CHECK_THROWS_AS(is_representation(adjoint_bimodule(testenv::algebra("LR3.json"))),
                    not_nearly_associative);
}

TEST_CASE("semidirect algebra embeds the base and acts by l and r") {
    const Algebra zero2(2);
    const Algebra sd0 = semidirect_algebra(zero_bimodule(zero2, 3));
    CHECK(sd0.dim == 5);
    CHECK(sd0.c.is_zero());

    const Algebra na6 = testenv::algebra("NA6.json");
    const Algebra sd = semidirect_algebra(adjoint_bimodule(na6));
    CHECK(sd.dim == 12);
    CHECK(holds(sd, IdentityKind::nearly_associative));
}

TEST_CASE("representation property is equivalent to the semidirect sum being NA") {
    testenv::SmallRng rng(404);
    std::size_t true_cases = 0, false_cases = 0;
    for (const char* name : {"NA6.json", "NAL6.json", "NAL4.json"}) {
        const Algebra a = testenv::algebra(name);
        std::vector<Bimodule> cases;
        cases.push_back(adjoint_bimodule(a));
        cases.push_back(zero_bimodule(a, 2));
        cases.push_back(dual_bimodule(adjoint_bimodule(a)));
        for (int t = 0; t < 6; ++t) cases.push_back(random_bimodule(a, 1 + rng.index(3), rng));
        // small perturbation of the adjoint
        Bimodule tweaked = adjoint_bimodule(a);
        tweaked.l[0].at(0, 0) += Rat(1);
        cases.push_back(tweaked);
        for (const Bimodule& b : cases) {
            const bool rep = is_representation(b).first;
            const bool na = holds(semidirect_algebra(b), IdentityKind::nearly_associative);
            CHECK(rep == na);
            (rep ? true_cases : false_cases) += 1;
        }
    }
    CHECK(true_cases > 0);
    CHECK(false_cases > 0);
}

TEST_CASE("dual bimodule bookkeeping") {
    const Algebra na6 = testenv::algebra("NA6.json");
    const Bimodule adj = adjoint_bimodule(na6);
    const Bimodule dual = dual_bimodule(adj);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(dual.l[i] == transpose(adj.r[i]));
        CHECK(dual.r[i] == transpose(adj.l[i]));
    }
    const Bimodule dd = dual_bimodule(dual);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(dd.l[i] == adj.l[i]);
        CHECK(dd.r[i] == adj.r[i]);
    }

    // coadjoint exists for the L-fixture, not for NA6
    CHECK(is_representation(dual_bimodule(adjoint_bimodule(testenv::algebra("NAL6.json")))).first);
    auto [ok, w] = is_representation(dual);
    CHECK_FALSE(ok);
    CHECK(w.has_value());
}

TEST_CASE("coadjoint existence and the three-way equivalence") {
    auto [nal6_ok, nal6_rep] = coadjoint_exists(testenv::algebra("NAL6.json"));
    CHECK(nal6_ok);
    CHECK(nal6_rep.value_of("three-way-equivalent"));

    auto [na6_ok, na6_rep] = coadjoint_exists(testenv::algebra("NA6.json"));
    CHECK_FALSE(na6_ok);
    CHECK_FALSE(na6_rep.value_of("L(xy)=R(yx)"));
    CHECK_FALSE(na6_rep.value_of("l-commutative"));
    CHECK_FALSE(na6_rep.value_of("r-commutative"));

    auto [zero_ok, zero_rep] = coadjoint_exists(Algebra(3));
    CHECK(zero_ok);

    CHECK_THROWS_AS(coadjoint_exists(testenv::algebra("LR3.json")), not_nearly_associative);

    // agreement with the independent dual-bimodule route on all NA fixtures
    for (const char* name : {"NA6.json", "NAL6.json", "NAL4.json"}) {
        const Algebra a = testenv::algebra(name);
        CHECK(coadjoint_exists(a).first ==
              is_representation(dual_bimodule(adjoint_bimodule(a))).first);
    }
}

TEST_CASE("bimodule morphisms") {
    const Algebra nal6 = testenv::algebra("NAL6.json");
    const Bimodule adj = adjoint_bimodule(nal6);
    CHECK(is_bimodule_morphism(adj, adj, Mat::identity(6)));

    testenv::SmallRng rng(7);
    Mat random(6, 6);
    for (auto& x : random.a) x = rng.coord();
    random.at(0, 0) += Rat(7); // keep it away from scalar multiples of identity
    CHECK_FALSE(is_bimodule_morphism(adj, adj, random));

    // the canonical form on the double gives adjoint ≅ coadjoint
    const DoubleAlgebra dbl =
        build_double({testenv::algebra("NAL4.json"), testenv::coproduct("CO4.json")});
    CHECK(adjoint_coadjoint_isomorphic(dbl.inner, canonical_double_form(4)));

    CHECK_THROWS_AS(adjoint_coadjoint_isomorphic(nal6, BilinearForm{Mat::identity(6)}),
                    not_quadratic);
}
