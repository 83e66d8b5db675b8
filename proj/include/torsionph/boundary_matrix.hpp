#pragma once

#include <optional>
#include <vector>

#include "torsionph/domain.hpp"
#include "torsionph/filtration.hpp"

namespace torsionph {

template <class E>
struct Entry {
    Index row;
    E coeff;

    bool operator==(const Entry&) const = default;
};

/// Sparse column: entries with strictly increasing rows and nonzero
/// coefficients.
template <class E>
using Column = std::vector<Entry<E>>;

/// Largest row of a nonzero entry, or nullopt for the zero column.
template <class E>
std::optional<Index> low(const Column<E>& c) {
    if (c.empty()) return std::nullopt;
    return c.back().row;
}

/// Boundary matrix of a filtration with respect to its cell basis. Strictly
/// upper triangular; columns and rows are 1-based cell indices.
template <class Domain>
class SparseBoundaryMatrix {
public:
    using Element = typename Domain::Element;

    SparseBoundaryMatrix() = default;
    SparseBoundaryMatrix(Domain domain, std::vector<Column<Element>> columns, std::vector<int> dims)
        : domain_(std::move(domain)), columns_(std::move(columns)), dims_(std::move(dims)) {}

    const Domain& domain() const noexcept { return domain_; }
    std::size_t n_cols() const noexcept { return columns_.size(); }

    const Column<Element>& column(Index j) const { return columns_.at(j - 1); }
    int dim(Index j) const { return dims_.at(j - 1); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    const std::vector<Column<Element>>& columns() const noexcept { return columns_; }

    std::optional<Index> low(Index j) const { return torsionph::low(column(j)); }

    bool operator==(const SparseBoundaryMatrix&) const = default;

private:
    Domain domain_{};
    std::vector<Column<Element>> columns_;
    std::vector<int> dims_;
};

/// Maps each integer boundary chain into the domain. Coefficients that vanish
/// in the domain (for example 2 in Z/2) are dropped.
template <class Domain>
SparseBoundaryMatrix<Domain> build_boundary_matrix(const Filtration& f, const Domain& domain) {
    using E = typename Domain::Element;
    std::vector<Column<E>> columns(f.size());
    std::vector<int> dims(f.size());
    for (Index j = 1; j <= f.size(); ++j) {
        const Cell& c = f.cell(j);
        dims[j - 1] = c.dim;
        auto& col = columns[j - 1];
        col.reserve(c.boundary.size());
        for (const auto& term : c.boundary) {
            E value = domain.from_int(term.coeff);
            if (!domain.is_zero(value)) col.push_back({term.cell, std::move(value)});
        }
    }
    return SparseBoundaryMatrix<Domain>(domain, std::move(columns), std::move(dims));
}

/// target += scale * source, merging by row. scratch is reused storage.
template <class Domain>
void add_scaled(const Domain& domain, Column<typename Domain::Element>& target,
                const Column<typename Domain::Element>& source, const typename Domain::Element& scale,
                Column<typename Domain::Element>& scratch) {
    scratch.clear();
    scratch.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->row < s->row)) {
            scratch.push_back(std::move(*t));
            ++t;
        } else if (t == target.end() || s->row < t->row) {
            scratch.push_back({s->row, domain.mul(scale, s->coeff)});
            ++s;
        } else {
            auto value = domain.add(t->coeff, domain.mul(scale, s->coeff));
            if (!domain.is_zero(value)) scratch.push_back({t->row, std::move(value)});
            ++t;
            ++s;
        }
    }
    target.swap(scratch);
}

}  // namespace torsionph
