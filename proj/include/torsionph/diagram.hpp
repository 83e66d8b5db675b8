#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torsionph/filtration.hpp"

namespace torsionph {

/// A birth-death pair. An empty death means the class never dies.
struct PersistencePair {
    Index birth = 0;
    std::optional<Index> death;
    int degree = 0;

    bool infinite() const noexcept { return !death.has_value(); }

    bool operator==(const PersistencePair&) const = default;
};

/// Orders by (degree, birth, death) with infinite deaths last.
bool operator<(const PersistencePair& a, const PersistencePair& b);

/// Persistence diagram of an N-cell filtration over one field. Pairs are
/// kept sorted, so equality is multiset equality.
class Diagram {
public:
    Diagram() = default;
    /// Throws UsageError if the pairs cannot come from a reduction: indices
    /// out of 1..N, birth >= death, a repeated birth or death, or an index
    /// used as both a birth and a death.
    Diagram(std::vector<PersistencePair> pairs, std::size_t n_cells, std::string field = {});

    /// Skips the distinct-index checks. For diagrams of coarsened filtrations,
    /// where several pairs can share an endpoint.
    static Diagram unchecked(std::vector<PersistencePair> pairs, std::size_t n_cells, std::string field = {});

    const std::vector<PersistencePair>& pairs() const noexcept { return pairs_; }
    std::size_t n_cells() const noexcept { return n_cells_; }
    /// "Q", "Zp:<p>" or empty when unknown.
    const std::string& field() const noexcept { return field_; }

    /// D_q: the pairs of degree q.
    std::vector<PersistencePair> degree(int q) const;
    int max_degree() const noexcept;
    bool empty() const noexcept { return pairs_.empty(); }

    /// Equal pair multisets and cell counts; the field tag is ignored.
    bool operator==(const Diagram& other) const {
        return n_cells_ == other.n_cells_ && pairs_ == other.pairs_;
    }

private:
    std::vector<PersistencePair> pairs_;
    std::size_t n_cells_ = 0;
    std::string field_;
};

std::ostream& operator<<(std::ostream& out, const PersistencePair& p);

}  // namespace torsionph
