#pragma once

// Brute-force ground truth for small filtrations: integer homology of every
// relative pair (X_n, X_m) via Smith normal form, and persistent Betti
// numbers by direct rank computations over a field.

#include <optional>
#include <vector>

#include "torsionph/analysis.hpp"
#include "torsionph/filtration.hpp"
#include "torsionph/reduction.hpp"
#include "torsionph/snf.hpp"

namespace torsionph {

struct DegreeHomology {
    int degree = 0;
    std::size_t free_rank = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<BigInt> torsion;

    bool operator==(const DegreeHomology&) const = default;
};

/// H_q for q = 0..max cell dimension.
struct IntegerHomology {
    std::vector<DegreeHomology> degrees;

    /// Zero homology for degrees beyond the stored range.
    DegreeHomology at(int q) const;
    bool torsion_free() const;
};

/// Relative boundary block d_q : C_q(X_n, X_m) -> C_{q-1}(X_n, X_m) over the
/// quotient basis {cells m+1..n}; rows are (q-1)-cells, columns q-cells.
IntMatrix relative_boundary_block(const Filtration& f, Index m, Index n, int q);

/// H(X_n, X_m; Z) for 0 <= m < n <= N (m = 0 is absolute homology).
IntegerHomology relative_homology(const Filtration& f, Index m, Index n);

struct TorsionWitness {
    Index m = 0;
    Index n = 0;
    int degree = 0;
    std::vector<BigInt> coefficients;

    bool operator==(const TorsionWitness&) const = default;
};

struct TorsionScan {
    bool independent = true;
    /// Sorted by (m, n, degree).
    std::vector<TorsionWitness> witnesses;
};

/// Every (m, n, q) with torsion in H_q(X_n, X_m; Z), q <= max_degree when
/// given. Quadratic in N Smith normal forms; meant for a few hundred cells.
TorsionScan torsion_scan(const Filtration& f, std::optional<int> max_degree = std::nullopt);

/// rank(H_q(X_m; k) -> H_q(X_n; k)) computed as
/// dim(Z_q(X_m) + B_q(X_n)) - dim B_q(X_n) by Gaussian elimination.
std::uint32_t rank_betti(const Filtration& f, const FieldSpec& field, Index m, Index n, int q);

/// rank_betti for every 0 <= m <= n <= N, sharing eliminations across n.
PersistentBettiTable rank_betti_table(const Filtration& f, const FieldSpec& field, int q);

/// Torsion of coker(H_q(X_m; Z) -> H_q(X_n; Z)), as invariant factors > 1.
std::vector<BigInt> induced_cokernel_torsion(const Filtration& f, Index m, Index n, int q);

}  // namespace torsionph
