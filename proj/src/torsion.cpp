#include "torsionph/torsion.hpp"

#include "torsionph/boundary_matrix.hpp"
#include "torsionph/errors.hpp"

namespace torsionph {

FieldVerdict check_field_independence(const Filtration& f, TorsionOptions options) {
    const IntegerRing ring;
    const auto matrix = build_boundary_matrix(f, ring);
    ColumnReducer<IntegerRing> reducer(matrix, false);
    std::vector<char> cleared(matrix.n_cols() + 1, 0);

    FieldVerdict verdict;
    for (Index j : reduction_order(matrix.dims(), options.twist)) {
        if (cleared[j]) continue;
        const auto l = reducer.reduce(j);
        if (l) {
            const BigInt& pivot = reducer.column(j).back().coeff;
            if (!ring.is_unit(pivot)) {
                verdict.kind = VerdictKind::Dependent;
                verdict.pivot = abs(pivot);
                verdict.witness_column = j;
                verdict.witness_low = *l;
                break;
            }
        }
        reducer.register_pivot(j);
        if (options.twist && l) {
            reducer.clear(*l);
            cleared[*l] = 1;
        }
    }
    verdict.stats = reducer.stats();
    return verdict;
}

FieldVerdict check_field_independence_upto(const Filtration& f, int max_degree, TorsionOptions options) {
    if (max_degree < 0) throw UsageError("max degree must be non-negative");
    std::vector<Index> original;
    const Filtration truncated = f.truncate_dim(max_degree + 1, &original);
    FieldVerdict verdict = check_field_independence(truncated, options);
    verdict.max_degree = max_degree;
    if (verdict.witness_column) verdict.witness_column = original[*verdict.witness_column - 1];
    if (verdict.witness_low) verdict.witness_low = original[*verdict.witness_low - 1];
    if (verdict.stats.last_column_read) verdict.stats.last_column_read = original[verdict.stats.last_column_read - 1];
    return verdict;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (sgn(n) == 0) throw DomainError("cannot factor zero");
    BigInt rest = abs(n);
    std::vector<std::pair<BigInt, unsigned>> factors;
    auto take = [&](const BigInt& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    };
    take(BigInt(2));
    for (BigInt p = 3; p * p <= rest; p += 2) {
        if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) break;
        take(p);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    return factors;
}

}  // namespace torsionph
