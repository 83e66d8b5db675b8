#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace torsionph {

/// 1-based position of a cell in its filtration. Position k means the cell
/// first appears in X_k.
using Index = std::size_t;
using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;

struct BoundaryTerm {
    Index cell;
    std::int64_t coeff;

    bool operator==(const BoundaryTerm&) const = default;
};

struct Cell {
    int dim = 0;
    /// Sorted vertex ids for simplicial cells, empty for general cells.
    Simplex vertices;
    /// Integer boundary chain sorted by cell index. For simplicial cells this
    /// is derived from the vertices with alternating signs.
    std::vector<BoundaryTerm> boundary;

    bool operator==(const Cell&) const = default;
};

/// General cell input: dimension plus explicit signed boundary.
struct CellSpec {
    int dim = 0;
    std::vector<BoundaryTerm> boundary;
};

/// A finite filtration with one cell per step, so that X_k = {cell_1..cell_k}
/// is a subcomplex for every k. Immutable once built; every constructor
/// validates and throws StructureError naming the first offending cell.
class Filtration {
public:
    Filtration() = default;

    /// Simplices in filtration order. Each vertex list must be strictly
    /// increasing and all of its facets must appear earlier.
    static Filtration from_simplices(std::span<const Simplex> simplices, std::vector<double> labels = {});

    /// General cells in filtration order. Boundary references must point to
    /// earlier cells of dimension dim-1 and the chain must satisfy d(d(c)) = 0.
    static Filtration from_cells(std::span<const CellSpec> cells, std::vector<double> labels = {});

    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    /// 1-based access.
    const Cell& cell(Index j) const { return cells_.at(j - 1); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int dim(Index j) const { return cell(j).dim; }
    /// -1 for the empty filtration.
    int max_dim() const noexcept;

    bool simplicial() const noexcept { return simplicial_; }

    /// Optional per-cell scale annotations (for example a Rips radius).
    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<double>& labels() const noexcept { return labels_; }
    Filtration with_labels(std::vector<double> labels) const;

    /// X_k as a filtration of its own.
    Filtration prefix(std::size_t k) const;

    /// Drops every cell of dimension > max_dim. When original_index is
    /// non-null it receives, for each kept cell, its index in *this.
    Filtration truncate_dim(int max_dim, std::vector<Index>* original_index = nullptr) const;

    bool operator==(const Filtration&) const = default;

private:
    std::vector<Cell> cells_;
    std::vector<double> labels_;
    bool simplicial_ = true;
};

/// Index lookup for simplicial filtrations.
class SimplexIndex {
public:
    explicit SimplexIndex(const Filtration& f);

    std::optional<Index> find(std::span<const Vertex> simplex) const;

    struct Hash {
        std::size_t operator()(const Simplex& s) const noexcept;
    };

private:
    std::unordered_map<Simplex, Index, Hash> index_;
};

}  // namespace torsionph
