#pragma once

// Persistent Betti numbers, multiplicities and diagram comparison.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "torsionph/diagram.hpp"

namespace torsionph {

/// beta_m^n for one degree and all 0 <= m <= n <= N, stored as a packed
/// triangle. Memory is quadratic in N; intended for moderate N.
class PersistentBettiTable {
public:
    PersistentBettiTable(int degree, std::size_t n_cells);

    int degree() const noexcept { return degree_; }
    std::size_t n_cells() const noexcept { return n_cells_; }

    /// Zero whenever the indices fall outside 0 <= m <= n <= N.
    std::uint32_t operator()(std::int64_t m, std::int64_t n) const noexcept;
    void set(Index m, Index n, std::uint32_t value);

    bool operator==(const PersistentBettiTable&) const = default;

private:
    std::size_t offset(Index m, Index n) const noexcept;

    int degree_;
    std::size_t n_cells_;
    std::vector<std::uint32_t> values_;
};

/// Number of degree-q pairs with b <= m <= n < death (infinite death counts
/// as larger than every index).
std::uint32_t betti_number(const Diagram& d, int q, Index m, Index n);

PersistentBettiTable betti_table(const Diagram& d, int q);

/// Multiplicity of (b, d) recovered from the table by inclusion-exclusion;
/// an empty d means an infinite death.
std::uint32_t multiplicity(const PersistentBettiTable& t, Index b, std::optional<Index> d);

/// Inverts the table back into a pair multiset by scanning every (b, d).
std::vector<PersistencePair> pairs_from_table(const PersistentBettiTable& t);

struct DiagramDifference {
    int degree = 0;
    Index birth = 0;
    std::optional<Index> death;
    std::uint32_t multiplicity_a = 0;
    std::uint32_t multiplicity_b = 0;
    /// A persistent Betti number beta_m^n that differs between the two.
    Index m = 0;
    Index n = 0;
    std::uint32_t beta_a = 0;
    std::uint32_t beta_b = 0;
};

struct DiagramComparison {
    bool equal = true;
    std::optional<DiagramDifference> witness;
};

/// Multiset comparison. On inequality the witness names the first differing
/// (degree, birth, death) together with a differing persistent Betti number,
/// so both characterisations of equality are reported. Throws UsageError if
/// the cell counts differ.
DiagramComparison diagrams_equal(const Diagram& a, const Diagram& b);

/// Re-indexes a diagram onto a coarser filtration whose step s ends at cell
/// step_ends[s-1] (strictly increasing, last entry N). Pairs born and dead in
/// the same step vanish.
Diagram coarsen(const Diagram& d, std::span<const Index> step_ends);

}  // namespace torsionph
