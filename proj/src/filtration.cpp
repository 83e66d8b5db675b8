#include "torsionph/filtration.hpp"

#include <algorithm>
#include <string>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

void check_labels(const std::vector<double>& labels, std::size_t n) {
    if (!labels.empty() && labels.size() != n)
        throw UsageError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
}

// Verifies that the boundary of cell j has zero boundary.
void check_boundary_squared(const std::vector<Cell>& cells, Index j) {
    std::vector<std::pair<Index, __int128>> acc;
    for (const auto& term : cells[j - 1].boundary) {
        for (const auto& inner : cells[term.cell - 1].boundary)
            acc.emplace_back(inner.cell, static_cast<__int128>(term.coeff) * inner.coeff);
    }
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < acc.size();) {
        __int128 sum = 0;
        std::size_t e = k;
        for (; e < acc.size() && acc[e].first == acc[k].first; ++e) sum += acc[e].second;
        if (sum != 0)
            throw StructureError(j, "boundary of boundary is nonzero at cell " + std::to_string(acc[k].first));
        k = e;
    }
}

}  // namespace

std::size_t SimplexIndex::Hash::operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : s) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

SimplexIndex::SimplexIndex(const Filtration& f) {
    index_.reserve(f.size());
    for (Index j = 1; j <= f.size(); ++j) index_.emplace(f.cell(j).vertices, j);
}

std::optional<Index> SimplexIndex::find(std::span<const Vertex> simplex) const {
    auto it = index_.find(Simplex(simplex.begin(), simplex.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Filtration Filtration::from_simplices(std::span<const Simplex> simplices, std::vector<double> labels) {
    check_labels(labels, simplices.size());
    Filtration f;
    f.cells_.reserve(simplices.size());
    f.labels_ = std::move(labels);

    std::unordered_map<Simplex, Index, SimplexIndex::Hash> seen;
    seen.reserve(simplices.size());
    Simplex facet;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
        const Index j = k + 1;
        const Simplex& s = simplices[k];
        if (s.empty()) throw StructureError(j, "simplex has no vertices");
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i - 1] >= s[i]) throw StructureError(j, "vertices must be strictly increasing");

        Cell c;
        c.dim = static_cast<int>(s.size()) - 1;
        c.vertices = s;
        if (c.dim > 0) {
            c.boundary.reserve(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                facet.assign(s.begin(), s.end());
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = seen.find(facet);
                if (it == seen.end()) throw StructureError(j, "facet " + std::to_string(i) + " does not appear earlier");
                c.boundary.push_back({it->second, (i % 2 == 0) ? 1 : -1});
            }
            std::sort(c.boundary.begin(), c.boundary.end(),
                      [](const BoundaryTerm& a, const BoundaryTerm& b) { return a.cell < b.cell; });
        }
        if (!seen.emplace(s, j).second) throw StructureError(j, "duplicate simplex");
        f.cells_.push_back(std::move(c));
    }
    return f;
}

Filtration Filtration::from_cells(std::span<const CellSpec> cells, std::vector<double> labels) {
    check_labels(labels, cells.size());
    Filtration f;
    f.simplicial_ = false;
    f.labels_ = std::move(labels);
    f.cells_.reserve(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Index j = k + 1;
        const CellSpec& spec = cells[k];
        if (spec.dim < 0) throw StructureError(j, "negative dimension");
        if (spec.dim == 0 && !spec.boundary.empty()) throw StructureError(j, "a 0-cell has empty boundary");
        Cell c;
        c.dim = spec.dim;
        c.boundary = spec.boundary;
        std::sort(c.boundary.begin(), c.boundary.end(),
                  [](const BoundaryTerm& a, const BoundaryTerm& b) { return a.cell < b.cell; });
        for (std::size_t t = 0; t < c.boundary.size(); ++t) {
            const auto& term = c.boundary[t];
            if (term.cell < 1 || term.cell >= j)
                throw StructureError(j, "boundary references cell " + std::to_string(term.cell) + " which is not earlier");
            if (t > 0 && c.boundary[t - 1].cell == term.cell)
                throw StructureError(j, "cell " + std::to_string(term.cell) + " listed twice");
            if (term.coeff == 0) throw StructureError(j, "zero boundary coefficient");
            if (f.cells_[term.cell - 1].dim != spec.dim - 1)
                throw StructureError(j, "boundary cell " + std::to_string(term.cell) + " has wrong dimension");
        }
        f.cells_.push_back(std::move(c));
        check_boundary_squared(f.cells_, j);
    }
    return f;
}

int Filtration::max_dim() const noexcept {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

Filtration Filtration::with_labels(std::vector<double> labels) const {
    check_labels(labels, size());
    Filtration f = *this;
    f.labels_ = std::move(labels);
    return f;
}

Filtration Filtration::prefix(std::size_t k) const {
    if (k > size()) throw UsageError("prefix length exceeds filtration size");
    Filtration f;
    f.simplicial_ = simplicial_;
    f.cells_.assign(cells_.begin(), cells_.begin() + static_cast<std::ptrdiff_t>(k));
    if (has_labels()) f.labels_.assign(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(k));
    return f;
}

Filtration Filtration::truncate_dim(int max_dim, std::vector<Index>* original_index) const {
    Filtration f;
    f.simplicial_ = simplicial_;
    std::vector<Index> new_index(size() + 1, 0);
    if (original_index) original_index->clear();
    for (Index j = 1; j <= size(); ++j) {
        const Cell& c = cell(j);
        if (c.dim > max_dim) continue;
        Cell copy = c;
        for (auto& term : copy.boundary) term.cell = new_index[term.cell];
        f.cells_.push_back(std::move(copy));
        new_index[j] = f.cells_.size();
        if (has_labels()) f.labels_.push_back(labels_[j - 1]);
        if (original_index) original_index->push_back(j);
    }
    return f;
}

}  // namespace torsionph
