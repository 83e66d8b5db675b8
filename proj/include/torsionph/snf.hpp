#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "torsionph/domain.hpp"

namespace torsionph {

/// Dense integer matrix as a list of rows (all the same length).
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Invariant factors a_1 | a_2 | ... | a_K (all positive) of an integer
/// matrix. With transforms, left * A * right is the diagonal form exactly.
struct SmithNormalForm {
    std::vector<BigInt> invariant_factors;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const noexcept { return invariant_factors.size(); }
    /// Invariant factors greater than 1.
    std::vector<BigInt> torsion() const;
};

/// Gcd-driven elimination pivoting on the smallest nonzero entry. Runs in
/// 64-bit arithmetic and restarts in arbitrary precision on overflow.
SmithNormalForm smith_normal_form(const IntMatrix& a, bool with_transforms = false);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Whitespace-separated integers, one row per line; '#' comments allowed.
IntMatrix read_int_matrix(std::istream& in);

}  // namespace torsionph
