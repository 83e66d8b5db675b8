#pragma once

// Single-pass integer reduction that decides whether the persistence diagram
// of a filtration depends on the coefficient field.
//
// The reduction is the same left-to-right elimination used for diagrams, run
// over Z. Every elimination divides by a pivot that is already known to be
// +-1, so all arithmetic stays exact. The first column whose final pivot is
// not a unit certifies torsion: with n the column and m = low(n) - 1,
// H(X_n, X_m; Z) contains Z/|pivot|.

#include <optional>
#include <utility>
#include <vector>

#include "torsionph/domain.hpp"
#include "torsionph/filtration.hpp"
#include "torsionph/reduction.hpp"

namespace torsionph {

enum class VerdictKind { Independent, Dependent };

struct FieldVerdict {
    VerdictKind kind = VerdictKind::Independent;
    /// |pivot| >= 2, present iff dependent.
    std::optional<BigInt> pivot;
    /// Column n at which the non-unit pivot appeared.
    std::optional<Index> witness_column;
    /// low(n); the torsion witness pair is (m, n) with m = witness_low - 1.
    std::optional<Index> witness_low;
    /// Degree bound when the check was restricted, otherwise empty.
    std::optional<int> max_degree;
    ReductionStats stats;

    bool dependent() const noexcept { return kind == VerdictKind::Dependent; }
};

struct TorsionOptions {
    /// Descending-dimension order with clearing. Verdict kind is unchanged;
    /// the reported witness may be a different torsion column.
    bool twist = false;
};

FieldVerdict check_field_independence(const Filtration& f, TorsionOptions options = {});

/// Verdict for degrees 0..max_degree only: cells of dimension above
/// max_degree + 1 are discarded first. Witness indices refer to f.
FieldVerdict check_field_independence_upto(const Filtration& f, int max_degree, TorsionOptions options = {});

/// Prime factorisation as (prime, exponent), ascending. |n| must be nonzero.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

}  // namespace torsionph
