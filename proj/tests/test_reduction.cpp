#include <doctest.h>

#include "support.hpp"
#include "torsionph/errors.hpp"
#include "torsionph/linalg.hpp"

using namespace torsionph;
using namespace testsupport;

namespace {

std::vector<PersistencePair> pairs_in(const Diagram& d, int q) { return d.degree(q); }

// Replays the recorded operations on the original matrix.
template <class Field>
std::vector<Column<typename Field::Element>> replay(const SparseBoundaryMatrix<Field>& b, const ReducedMatrix<Field>& r) {
    auto cols = b.columns();
    Column<typename Field::Element> scratch;
    for (const auto& op : r.ops) add_scaled(b.domain(), cols[op.target - 1], cols[op.source - 1], op.scale, scratch);
    for (Index j : r.cleared) cols[j - 1].clear();
    return cols;
}

template <class Field>
void check_invariants(const Filtration& f, const Field& field) {
    const auto b = build_boundary_matrix(f, field);
    for (bool twist : {false, true}) {
        CAPTURE(twist);
        const auto r = reduce(b, {.twist = twist, .record_ops = true});
        // Distinct lows.
        std::vector<char> seen(f.size() + 1, 0);
        for (Index j = 1; j <= f.size(); ++j) {
            if (auto l = r.r.low(j)) {
                CHECK_FALSE(seen[*l]);
                seen[*l] = 1;
            }
        }
        // R = B U with U unit upper triangular.
        for (const auto& op : r.ops) CHECK(op.source < op.target);
        const auto cols = replay(b, r);
        for (Index j = 1; j <= f.size(); ++j) {
            const auto& a = cols[j - 1];
            const auto& c = r.r.column(j);
            REQUIRE(a.size() == c.size());
            for (std::size_t k = 0; k < a.size(); ++k) {
                CHECK(a[k].row == c[k].row);
                CHECK(a[k].coeff == c[k].coeff);
            }
        }
    }
}

// Column j of R is zero iff column j of B is dependent on columns 1..j-1.
template <class Field>
void check_zero_columns_by_rank(const Filtration& f, const Field& field) {
    const auto b = build_boundary_matrix(f, field);
    const auto r = reduce(b);
    EchelonBasis<Field> span(field, f.size() + 1);
    for (Index j = 1; j <= f.size(); ++j) {
        DenseVector<Field> v(f.size() + 1, field.zero());
        for (const auto& e : b.column(j)) v[f.size() - e.row] = e.coeff;
        const bool grew = span.insert(std::move(v));
        CHECK(grew == r.r.low(j).has_value());
    }
}

}  // namespace

TEST_CASE("empty filtration") {
    const Filtration f;
    const auto r = reduce(build_boundary_matrix(f, PrimeField(2)));
    CHECK(r.r.n_cols() == 0);
    const auto d = compute_diagram(f, FieldSpec::rationals());
    CHECK(d.empty());
    CHECK(d.n_cells() == 0);
}

TEST_CASE("single vertex") {
    const std::vector<Simplex> s = {{0}};
    const auto d = compute_diagram(Filtration::from_simplices(s), FieldSpec::prime(2));
    REQUIRE(d.pairs().size() == 1);
    CHECK(d.pairs()[0] == PersistencePair{1, std::nullopt, 0});
}

TEST_CASE("filled triangle pairs agree with the rank oracle") {
    const auto f = filled_triangle();
    for (const auto& field : four_fields()) {
        CAPTURE(field.name());
        std::vector<PersistencePair> from_oracle;
        for (int q = 0; q <= 2; ++q)
            for (const auto& p : pairs_from_table(rank_betti_table(f, field, q))) from_oracle.push_back(p);
        const Diagram oracle(from_oracle, f.size());
        const auto d = compute_diagram(f, field);
        CHECK(d == oracle);
    }
    const auto d = compute_diagram(f, FieldSpec::rationals());
    CHECK(pairs_in(d, 0) == std::vector<PersistencePair>{{1, std::nullopt, 0}, {2, 4, 0}, {3, 5, 0}});
    CHECK(pairs_in(d, 1) == std::vector<PersistencePair>{{6, 7, 1}});
    CHECK(pairs_in(d, 2).empty());
}

TEST_CASE("filled triangle lows over Z/2") {
    const auto r = reduce(build_boundary_matrix(filled_triangle(), PrimeField(2)));
    CHECK(r.r.low(4) == 2);
    CHECK(r.r.low(5) == 3);
    CHECK_FALSE(r.r.low(6).has_value());
    CHECK(r.r.low(7) == 6);
}

TEST_CASE("Moebius strip diagrams on the coarse filtration") {
    for (std::size_t s : {3, 4, 6}) {
        CAPTURE(s);
        const auto f = mobius_filtration(s);
        const auto ends = mobius_step_ends(s);
        const auto z2 = coarsen(compute_diagram(f, FieldSpec::prime(2)), ends);
        const auto q = coarsen(compute_diagram(f, FieldSpec::rationals()), ends);
        CHECK(z2.degree(1) == std::vector<PersistencePair>{{1, 2, 1}, {2, std::nullopt, 1}});
        CHECK(q.degree(1) == std::vector<PersistencePair>{{1, std::nullopt, 1}});
        // Uncoarsened: exactly one infinite pair over Q.
        const auto fine = compute_diagram(f, FieldSpec::rationals()).degree(1);
        CHECK(std::count_if(fine.begin(), fine.end(), [](const PersistencePair& p) { return p.infinite(); }) == 1);
    }
    const auto cw = mobius_cw();
    CHECK(compute_diagram(cw, FieldSpec::prime(2)).degree(1) == std::vector<PersistencePair>{{4, 6, 1}, {5, std::nullopt, 1}});
    CHECK(compute_diagram(cw, FieldSpec::rationals()).degree(1) == std::vector<PersistencePair>{{4, std::nullopt, 1}, {5, 6, 1}});
}

TEST_CASE("capped double annulus depends on the field only at 2") {
    const auto f = cap(p_fold_annulus(2, 3));
    const auto q = compute_diagram(f, FieldSpec::rationals());
    CHECK(compute_diagram(f, FieldSpec::prime(2)).degree(1) != q.degree(1));
    const auto z3 = compute_diagram(f, FieldSpec::prime(3));
    CHECK(z3 == q);
    CHECK(rank_betti_table(f, FieldSpec::prime(3), 1) == rank_betti_table(f, FieldSpec::rationals(), 1));
}

TEST_CASE("graph filtrations never depend on the field") {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_order_filtration(random_complex(4 + rng.below(6), 1, 0.6, rng), rng);
        const auto q = compute_diagram(f, FieldSpec::rationals());
        for (const auto& field : four_fields()) CHECK(compute_diagram(f, field) == q);
    }
}

TEST_CASE("twist does not change diagrams") {
    Rng rng(3);
    std::vector<Filtration> inputs;
    for (auto& [name, f] : fixture_corpus()) inputs.push_back(f);
    for (int t = 0; t < 40; ++t) inputs.push_back(random_filtration(rng, 120));
    for (const auto& f : inputs)
        for (const auto& field : four_fields())
            CHECK(compute_diagram(f, field, {.twist = true}) == compute_diagram(f, field));
}

TEST_CASE("reduction invariants: distinct lows and replayable factorisation") {
    Rng rng(4);
    std::vector<Filtration> inputs;
    for (auto& [name, f] : fixture_corpus()) inputs.push_back(f);
    for (int t = 0; t < 25; ++t) inputs.push_back(random_filtration(rng, 80));
    for (const auto& f : inputs) {
        check_invariants(f, PrimeField(2));
        check_invariants(f, PrimeField(5));
        check_invariants(f, RationalField());
    }
}

TEST_CASE("zero columns are exactly the dependent boundary columns") {
    Rng rng(8);
    for (int t = 0; t < 25; ++t) {
        const auto f = random_filtration(rng, 60);
        check_zero_columns_by_rank(f, PrimeField(3));
        check_zero_columns_by_rank(f, RationalField());
    }
}

TEST_CASE("twist clears columns and does less work") {
    const auto f = rips_filtration(uniform_pointcloud(30, 3, 2), 2, 0.35);
    const auto b = build_boundary_matrix(f, PrimeField(2));
    const auto plain = reduce(b);
    const auto twisted = reduce(b, {.twist = true});
    CHECK(twisted.stats.columns_cleared > 0);
    CHECK(twisted.stats.column_additions <= plain.stats.column_additions);
    CHECK(extract_diagram(twisted) == extract_diagram(plain));
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(Diagram({{2, 1, 0}}, 3), UsageError);
    CHECK_THROWS_AS(Diagram({{1, 4, 0}}, 3), UsageError);
    CHECK_THROWS_AS(Diagram({{0, 2, 0}}, 3), UsageError);
    CHECK_THROWS_AS(Diagram({{1, 2, 0}, {1, 3, 0}}, 3), UsageError);
    CHECK_THROWS_AS(Diagram({{1, 3, 0}, {2, 3, 0}}, 3), UsageError);
    CHECK_THROWS_AS(Diagram({{1, 2, 0}, {2, std::nullopt, 0}}, 3), UsageError);
    const Diagram d({{3, std::nullopt, 1}, {1, 2, 0}}, 3);
    CHECK(d.pairs().front() == PersistencePair{1, 2, 0});
    CHECK(d.max_degree() == 1);
}

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("zp:7").characteristic() == 7);
    CHECK(FieldSpec::parse("Zp:2").name() == "Zp:2");
    CHECK_THROWS_AS(FieldSpec::parse("zp:9"), DomainError);
    CHECK_THROWS_AS(FieldSpec::parse("zp:"), UsageError);
    CHECK_THROWS_AS(FieldSpec::parse("r"), UsageError);
    CHECK_THROWS_AS(FieldSpec::parse("zp:-3"), UsageError);
}
