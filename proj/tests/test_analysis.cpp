#include <doctest.h>

#include "support.hpp"
#include "torsionph/errors.hpp"
#include "torsionph/functional.hpp"
#include "torsionph/torsion.hpp"

using namespace torsionph;
using namespace testsupport;

namespace {

// Coarse three-step Moebius filtration: X_1 = boundary circle, X_2 = strip.
const Diagram kMobiusZ2 = Diagram::unchecked({{1, 2, 1}, {2, std::nullopt, 1}}, 2, "Zp:2");
const Diagram kMobiusQ = Diagram::unchecked({{1, std::nullopt, 1}}, 2, "Q");

// Piecewise-linear f with a knot at every integer up to n and strictly
// increasing slopes: strictly convex on integer lifetimes.
ConvexFunctional lattice_table(std::size_t n) {
    std::vector<std::pair<Rational, Rational>> knots;
    Rational y = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        y += Rational(static_cast<long>(k * k));
        knots.emplace_back(Rational(static_cast<long>(k)), y);
    }
    return ConvexFunctional::table(std::move(knots));
}

std::vector<ConvexFunctional> strict_functionals(std::size_t n) {
    return {ConvexFunctional::power(2), ConvexFunctional::power(4), lattice_table(n)};
}

}  // namespace

TEST_CASE("persistent Betti numbers of the coarse Moebius diagrams") {
    const auto z2 = betti_table(kMobiusZ2, 1);
    CHECK(z2(1, 1) == 1);
    CHECK(z2(1, 2) == 0);
    CHECK(z2(2, 2) == 1);
    const auto q = betti_table(kMobiusQ, 1);
    CHECK(q(1, 1) == 1);
    CHECK(q(1, 2) == 1);
    CHECK(q(2, 2) == 1);
    CHECK(multiplicity(z2, 1, 2) == 1);
    CHECK(multiplicity(z2, 2, std::nullopt) == 1);
    CHECK(multiplicity(q, 1, std::nullopt) == 1);
    CHECK(multiplicity(q, 1, 2) == 0);
    CHECK(multiplicity(z2, 1, std::nullopt) == 0);
}

TEST_CASE("tables match the direct count and are monotone") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_filtration(rng, 60);
        const auto d = compute_diagram(f, FieldSpec::prime(3));
        for (int q = 0; q <= std::max(0, f.max_dim()); ++q) {
            const auto table = betti_table(d, q);
            for (Index m = 0; m <= f.size(); ++m)
                for (Index n = m; n <= f.size(); ++n) {
                    const auto mm = static_cast<std::int64_t>(m), nn = static_cast<std::int64_t>(n);
                    CHECK(table(mm, nn) == betti_number(d, q, m, n));
                    if (n > m) CHECK(table(mm, nn) <= table(mm, nn - 1));
                }
        }
    }
}

TEST_CASE("empty diagram has an all-zero table") {
    const Diagram d({}, 5);
    const auto t = betti_table(d, 0);
    for (std::int64_t m = 0; m <= 5; ++m)
        for (std::int64_t n = m; n <= 5; ++n) CHECK(t(m, n) == 0);
    CHECK(t(-1, 3) == 0);
    CHECK(t(2, 9) == 0);
    CHECK(pairs_from_table(t).empty());
}

TEST_CASE("multiplicities invert the table") {
    Rng rng(32);
    std::vector<Filtration> inputs;
    for (auto& [name, f] : fixture_corpus()) inputs.push_back(f);
    for (int t = 0; t < 30; ++t) inputs.push_back(random_filtration(rng, 100));
    for (const auto& f : inputs)
        for (const auto& field : four_fields()) {
            const auto d = compute_diagram(f, field);
            std::vector<PersistencePair> rebuilt;
            for (int q = 0; q <= std::max(0, f.max_dim()); ++q)
                for (const auto& p : pairs_from_table(betti_table(d, q))) rebuilt.push_back(p);
            CHECK(Diagram(rebuilt, f.size()) == d);
        }
}

TEST_CASE("comparing the Moebius diagrams") {
    const auto cmp = diagrams_equal(kMobiusZ2, kMobiusQ);
    CHECK_FALSE(cmp.equal);
    REQUIRE(cmp.witness);
    const auto& w = *cmp.witness;
    CHECK(w.degree == 1);
    CHECK(w.birth == 1);
    CHECK(w.multiplicity_a != w.multiplicity_b);
    CHECK(w.beta_a != w.beta_b);
    CHECK(w.beta_a == betti_number(kMobiusZ2, 1, w.m, w.n));
    CHECK(w.beta_b == betti_number(kMobiusQ, 1, w.m, w.n));
    CHECK(diagrams_equal(kMobiusZ2, kMobiusZ2).equal);
    CHECK_THROWS_AS(diagrams_equal(kMobiusZ2, Diagram({}, 3)), UsageError);
}

TEST_CASE("triple annulus agrees over Z/2 and Q") {
    const auto f = p_fold_annulus(3, 3);
    CHECK(diagrams_equal(compute_diagram(f, FieldSpec::prime(2)), compute_diagram(f, FieldSpec::rationals())).equal);
    for (int q = 0; q <= 2; ++q)
        CHECK(rank_betti_table(f, FieldSpec::prime(2), q) == rank_betti_table(f, FieldSpec::rationals(), q));
    CHECK_FALSE(diagrams_equal(compute_diagram(f, FieldSpec::prime(3)), compute_diagram(f, FieldSpec::rationals())).equal);
}

TEST_CASE("equality of diagrams is equality of oracle Betti tables") {
    Rng rng(33);
    int unequal = 0;
    for (int t = 0; t < 40; ++t) {
        const auto f = random_filtration(rng, 50);
        const auto fields = four_fields();
        for (std::size_t i = 0; i < fields.size(); ++i)
            for (std::size_t j = i + 1; j < fields.size(); ++j) {
                const auto cmp = diagrams_equal(compute_diagram(f, fields[i]), compute_diagram(f, fields[j]));
                bool tables_equal = true;
                for (int q = 0; q <= std::max(0, f.max_dim()); ++q)
                    tables_equal &= rank_betti_table(f, fields[i], q) == rank_betti_table(f, fields[j], q);
                CHECK(cmp.equal == tables_equal);
                if (!cmp.equal) {
                    ++unequal;
                    const auto& w = *cmp.witness;
                    CHECK(rank_betti(f, fields[i], w.m, w.n, w.degree) == w.beta_a);
                    CHECK(rank_betti(f, fields[j], w.m, w.n, w.degree) == w.beta_b);
                }
            }
    }
    CHECK(unequal > 0);
}

TEST_CASE("coarsening") {
    const auto f = mobius_filtration(3);
    const auto d = compute_diagram(f, FieldSpec::prime(2));
    const std::vector<Index> all = {f.size()};
    const auto one = coarsen(d, all);
    for (const auto& p : one.pairs()) CHECK(p.infinite());
    const std::vector<Index> bad = {5, 3, 24};
    CHECK_THROWS_AS(coarsen(d, bad), UsageError);
    const std::vector<Index> short_ends = {5, 10};
    CHECK_THROWS_AS(coarsen(d, short_ends), UsageError);
}

TEST_CASE("convex sums and Wasserstein distance to the empty diagram") {
    const auto square = ConvexFunctional::power(2);
    const Diagram single({{2, 5, 0}}, 5);
    CHECK(*convex_sum(single, 0, square).exact == 9);
    CHECK(*convex_sum(single, 1, square).exact == 0);
    const Diagram lifetime_two({{1, 3, 1}}, 3);
    CHECK(wasserstein_to_empty(lifetime_two, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wasserstein_to_empty(Diagram({}, 4), 0, 2.0) == 0.0);
    CHECK_THROWS_AS(convex_sum(Diagram({{1, std::nullopt, 0}}, 1), 0, square), HypothesisError);
    CHECK_THROWS_AS(wasserstein_to_empty(lifetime_two, 1, 0.5), UsageError);

    const std::vector<double> labels = {0.0, 0.25, 1.0};
    CHECK(*convex_sum(lifetime_two, 1, square, labels).exact == 1);
    CHECK(*convex_sum(Diagram({{1, 2, 0}}, 3), 0, square, labels).exact == Rational(1, 16));
}

TEST_CASE("functional parsing and evaluation") {
    CHECK(ConvexFunctional::parse("x^2").describe() == "x^2");
    CHECK(ConvexFunctional::parse("4").describe() == "x^4");
    CHECK(*ConvexFunctional::parse("x^3")(Rational(2)).exact == 8);
    const auto half = ConvexFunctional::parse("3/2")(Rational(4));
    CHECK_FALSE(half.exact.has_value());
    CHECK(abs(half.approx - 8) < kFunctionalTolerance);
    const auto decimal = ConvexFunctional::parse("x^2.5")(Rational(4));
    CHECK(abs(decimal.approx - 32) < kFunctionalTolerance);
    CHECK_THROWS_AS(ConvexFunctional::parse("x^0.5"), UsageError);
    CHECK_THROWS_AS(ConvexFunctional::parse("banana"), UsageError);

    const auto table = ConvexFunctional::parse("table:0,0;1,1;3,7");
    CHECK(*table(Rational(1, 2)).exact == Rational(1, 2));
    CHECK(*table(Rational(2)).exact == 4);
    CHECK(*table(Rational(4)).exact == 10);
    CHECK_THROWS_AS(ConvexFunctional::parse("table:0,0;1,2;2,3"), UsageError);
    CHECK_THROWS_AS(ConvexFunctional::parse("table:0,1;1,2"), UsageError);
    CHECK_THROWS_AS(ConvexFunctional::parse("table:0,0;0,1"), UsageError);

    FunctionalValue a, b;
    a.exact = Rational(1, 3);
    a.approx = HighPrecision(1) / 3;
    b.approx = HighPrecision(1) / 3;
    CHECK(compare(a, b) == 0);
    b.approx += 1e-6;
    CHECK(compare(a, b) < 0);
}

TEST_CASE("capped Moebius: real coefficients give the larger convex sums") {
    for (std::size_t s : {3, 4}) {
        const auto f = capped_mobius(s);
        REQUIRE(free_homology_hypotheses(f, 1));
        const auto q = compute_diagram(f, FieldSpec::rationals());
        const auto z2 = compute_diagram(f, FieldSpec::prime(2));
        REQUIRE(q.degree(1) != z2.degree(1));
        for (const auto& fn : strict_functionals(f.size())) CHECK(compare(convex_sum(q, 1, fn), convex_sum(z2, 1, fn)) > 0);
        CHECK(wasserstein_to_empty(q, 1, 2.0) > wasserstein_to_empty(z2, 1, 2.0));
        for (const auto& p : q.degree(1)) CHECK_FALSE(p.infinite());
    }
}

TEST_CASE("capped circle has one surviving loop after coarsening by label") {
    std::vector<Simplex> circle;
    for (Vertex v = 0; v < 5; ++v) circle.push_back({v});
    for (Vertex v = 0; v + 1 < 5; ++v) circle.push_back({v, v + 1});
    circle.push_back({0, 4});
    const auto capped = cap(Filtration::from_simplices(circle));
    const auto d = compute_diagram(capped, FieldSpec::rationals());
    for (const auto& p : d.degree(1)) CHECK_FALSE(p.infinite());
    std::vector<Index> ends;
    for (Index j = 1; j <= capped.size(); ++j)
        if (j == capped.size() || capped.labels()[j] != capped.labels()[j - 1]) ends.push_back(j);
    const auto coarse = coarsen(d, ends);
    REQUIRE(coarse.degree(1).size() == 1);
    CHECK_FALSE(coarse.degree(1)[0].infinite());
    CHECK(cap(capped) == capped);
}

TEST_CASE("convex sums over Q dominate Z/p on certified filtrations") {
    Rng rng(34);
    int certified = 0, strict = 0;
    std::vector<Filtration> structured;
    for (std::size_t s : {3, 4, 5, 6}) structured.push_back(capped_mobius(s));
    for (unsigned p : {2u, 3u}) structured.push_back(cap(p_fold_annulus(p, 3)));
    for (int t = 0; t < 240 && certified < 40; ++t) {
        Filtration f;
        if (static_cast<std::size_t>(t) < structured.size()) {
            f = structured[t];
        } else if (t % 2) {
            f = random_filtration(rng, 60);
            if (f.max_dim() < 1) continue;
            f = cap(f);
        } else {
            // Randomly ordered strips coned along the core first.
            const std::size_t s = 3 + rng.below(3);
            f = cap(random_order_filtration(simplices_of(mobius_filtration(s)), rng), mobius_core_loop(s));
        }
        for (int q = 1; q <= 1; ++q) {
            if (!free_homology_hypotheses(f, q)) continue;
            ++certified;
            const auto real = compute_diagram(f, FieldSpec::rationals());
            const auto real_table = rank_betti_table(f, FieldSpec::rationals(), q);
            for (std::uint64_t p : {2, 3, 5}) {
                const auto modp = compute_diagram(f, FieldSpec::prime(p));
                const bool same = real.degree(q) == modp.degree(q);
                for (const auto& fn : strict_functionals(f.size())) {
                    const int c = compare(convex_sum(real, q, fn), convex_sum(modp, q, fn));
                    CHECK(c >= 0);
                    CHECK((c == 0) == same);
                }
                strict += !same;
                const auto modp_table = rank_betti_table(f, FieldSpec::prime(p), q);
                for (Index m = 0; m <= f.size(); ++m)
                    for (Index n = m; n <= f.size(); ++n)
                        CHECK(real_table(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)) >=
                              modp_table(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)));
            }
        }
    }
    CHECK(certified >= 10);
    CHECK(strict > 0);
    MESSAGE("certified " << certified << ", strict comparisons " << strict);
}
