#include <doctest.h>

#include "support.hpp"
#include "torsionph/errors.hpp"
#include "torsionph/torsion.hpp"

using namespace torsionph;
using namespace testsupport;

namespace {

bool has_prime_factor(const std::vector<BigInt>& torsion, const BigInt& pivot) {
    for (const auto& [prime, e] : factorize(pivot))
        for (const auto& t : torsion)
            if (mpz_divisible_p(t.get_mpz_t(), prime.get_mpz_t())) return true;
    return false;
}

}  // namespace

TEST_CASE("Moebius strips are field dependent with pivot 2") {
    for (std::size_t s : {3, 4, 5, 8}) {
        const auto v = check_field_independence(mobius_filtration(s));
        REQUIRE(v.dependent());
        CHECK(*v.pivot == 2);
        CHECK(*v.witness_low < *v.witness_column);
    }
    const auto v = check_field_independence(mobius_cw());
    REQUIRE(v.dependent());
    CHECK(*v.pivot == 2);
    CHECK(v.witness_column == 6);
    CHECK(v.witness_low == 5);
}

TEST_CASE("filled triangle is independent and torsion free") {
    const auto f = filled_triangle();
    CHECK_FALSE(check_field_independence(f).dependent());
    CHECK(torsion_scan(f).independent);
}

TEST_CASE("p-fold annuli carry Z/p") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        CAPTURE(p);
        const auto v = check_field_independence(p_fold_annulus(p, 3));
        REQUIRE(v.dependent());
        CHECK(mpz_divisible_ui_p(v.pivot->get_mpz_t(), p));
    }
}

TEST_CASE("restricting the degree range") {
    const auto f = mobius_filtration(4);
    CHECK_FALSE(check_field_independence_upto(f, 0).dependent());
    const auto v1 = check_field_independence_upto(f, 1);
    REQUIRE(v1.dependent());
    CHECK(*v1.pivot == 2);
    CHECK(v1.max_degree == 1);
    const auto full = check_field_independence(f);
    CHECK(v1.witness_column == full.witness_column);
    CHECK_THROWS_AS(check_field_independence_upto(f, -1), UsageError);

    // Indices in the restricted verdict refer to the original filtration.
    Rng rng(4);
    const auto base = random_order_filtration(projective_plane_simplices(), rng);
    const auto coned = cap(base);
    REQUIRE(coned.max_dim() == 3);
    const auto v = check_field_independence_upto(coned, 1);
    REQUIRE(v.dependent());
    CHECK(coned.dim(*v.witness_column) == 2);
    CHECK(coned.dim(*v.witness_low) == 1);
    CHECK(relative_homology(coned, *v.witness_low - 1, *v.witness_column).at(1).torsion == std::vector<BigInt>{2});
}

TEST_CASE("Linial-Meshulam sample") {
    const auto f = linial_meshulam_process({75, 2, 5000, 1});
    CHECK(f.size() == 7850);
    CHECK(check_field_independence(f).dependent());
    CHECK_FALSE(check_field_independence_upto(f, 0).dependent());
}

TEST_CASE("the witness pair carries torsion dividing the pivot") {
    Rng rng(12);
    std::vector<Filtration> inputs;
    for (auto& [name, f] : fixture_corpus()) inputs.push_back(f);
    for (int t = 0; t < 60; ++t) inputs.push_back(random_filtration(rng, 60));
    int dependent = 0;
    for (const auto& f : inputs) {
        const auto v = check_field_independence(f);
        if (!v.dependent()) continue;
        ++dependent;
        CHECK(*v.pivot >= 2);
        const Index m = *v.witness_low - 1, n = *v.witness_column;
        const auto h = relative_homology(f, m, n);
        CHECK(has_prime_factor(h.at(f.dim(n) - 1).torsion, *v.pivot));
    }
    CHECK(dependent > 5);
}

TEST_CASE("verdict agrees with the exhaustive torsion scan") {
    Rng rng(13);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_filtration(rng, 50);
        CHECK(check_field_independence(f).dependent() == !torsion_scan(f).independent);
    }
}

TEST_CASE("dependent fixtures differ over a prime dividing the pivot") {
    for (const auto& [name, f] : fixture_corpus()) {
        CAPTURE(name);
        const auto v = check_field_independence(f);
        const auto q = compute_diagram(f, FieldSpec::rationals());
        if (!v.dependent()) {
            for (const auto& field : four_fields()) CHECK(compute_diagram(f, field) == q);
            continue;
        }
        bool differs = false;
        for (const auto& [prime, e] : factorize(*v.pivot))
            differs |= compute_diagram(f, FieldSpec::prime(prime.get_ui())) != q;
        CHECK(differs);
    }
}

TEST_CASE("early exit and cost parity") {
    Rng rng(14);
    int independent = 0;
    for (int t = 0; t < 60; ++t) {
        const auto f = random_filtration(rng, 120);
        const auto v = check_field_independence(f);
        if (v.dependent()) {
            CHECK(v.stats.last_column_read == *v.witness_column);
            continue;
        }
        ++independent;
        const auto r = reduce(build_boundary_matrix(f, RationalField()));
        CHECK(v.stats.column_additions == r.stats.column_additions);
        CHECK(v.stats.last_column_read == f.size());
    }
    CHECK(independent > 10);
}

TEST_CASE("twist does not change the verdict kind") {
    Rng rng(15);
    for (int t = 0; t < 60; ++t) {
        const auto f = random_filtration(rng, 80);
        const auto plain = check_field_independence(f);
        const auto twisted = check_field_independence(f, {.twist = true});
        CHECK(plain.dependent() == twisted.dependent());
    }
}

TEST_CASE("factorize") {
    using V = std::vector<std::pair<BigInt, unsigned>>;
    CHECK(factorize(BigInt(2)) == V{{2, 1}});
    CHECK(factorize(BigInt(-12)) == V{{2, 2}, {3, 1}});
    CHECK(factorize(BigInt(1)).empty());
    CHECK(factorize(BigInt(97 * 97 * 101)) == V{{97, 2}, {101, 1}});
    CHECK(factorize(BigInt("340282366920938463463374607431768211507")) ==
          V{{BigInt("340282366920938463463374607431768211507"), 1}});
    CHECK_THROWS_AS(factorize(BigInt(0)), DomainError);
}
