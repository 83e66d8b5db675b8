#pragma once

// Left-to-right column reduction of a boundary matrix and extraction of the
// persistence diagram from the reduced matrix.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsionph/boundary_matrix.hpp"
#include "torsionph/diagram.hpp"

namespace torsionph {

struct ReduceOptions {
    /// Process columns by descending dimension and clear each paired birth
    /// column as soon as its death column is reduced.
    bool twist = false;
    /// Keep the column operations so that R = B * U can be replayed.
    bool record_ops = false;
};

/// "add scale * column source to column target".
template <class E>
struct ColumnOp {
    Index target;
    Index source;
    E scale;
};

struct ReductionStats {
    std::size_t column_additions = 0;
    std::size_t columns_reduced = 0;
    std::size_t columns_cleared = 0;
    /// Largest column index the reduction looked at.
    Index last_column_read = 0;
};

template <class Domain>
struct ReducedMatrix {
    using Element = typename Domain::Element;

    SparseBoundaryMatrix<Domain> r;
    std::vector<ColumnOp<Element>> ops;
    /// Columns zeroed by twist clearing, in clearing order.
    std::vector<Index> cleared;
    ReductionStats stats;
};

/// Incremental reducer: keeps working columns and a low -> column map so the
/// unique earlier column sharing a low is found in O(1).
template <class Domain>
class ColumnReducer {
public:
    using Element = typename Domain::Element;

    ColumnReducer(const SparseBoundaryMatrix<Domain>& m, bool record_ops)
        : domain_(m.domain()),
          columns_(m.columns()),
          dims_(m.dims()),
          pivot_of_(m.n_cols() + 1, 0),
          record_ops_(record_ops) {}

    std::size_t n_cols() const noexcept { return columns_.size(); }
    int dim(Index j) const { return dims_[j - 1]; }
    const Column<Element>& column(Index j) const { return columns_[j - 1]; }

    /// Eliminates the low of column j against the earlier column owning the
    /// same low until the low is fresh or the column is zero. Returns the
    /// final low without registering it.
    std::optional<Index> reduce(Index j) {
        stats_.columns_reduced++;
        stats_.last_column_read = std::max(stats_.last_column_read, j);
        auto& col = columns_[j - 1];
        while (!col.empty()) {
            const Entry<Element>& top = col.back();
            const Index owner = pivot_of_[top.row];
            if (owner == 0) break;
            const auto& pivot_col = columns_[owner - 1];
            Element scale = domain_.neg(domain_.div(top.coeff, pivot_col.back().coeff));
            if (record_ops_) ops_.push_back({j, owner, scale});
            add_scaled(domain_, col, pivot_col, scale, scratch_);
            stats_.column_additions++;
        }
        return torsionph::low(col);
    }

    void register_pivot(Index j) {
        const auto l = torsionph::low(columns_[j - 1]);
        if (l) pivot_of_[*l] = j;
    }

    void clear(Index j) {
        columns_[j - 1].clear();
        cleared_.push_back(j);
        stats_.columns_cleared++;
    }

    /// Column index owning row i as its low, or 0.
    Index owner_of(Index i) const { return pivot_of_[i]; }

    const ReductionStats& stats() const noexcept { return stats_; }

    ReducedMatrix<Domain> finish() && {
        ReducedMatrix<Domain> out;
        out.r = SparseBoundaryMatrix<Domain>(domain_, std::move(columns_), std::move(dims_));
        out.ops = std::move(ops_);
        out.cleared = std::move(cleared_);
        out.stats = stats_;
        return out;
    }

private:
    Domain domain_;
    std::vector<Column<Element>> columns_;
    std::vector<int> dims_;
    std::vector<Index> pivot_of_;
    std::vector<ColumnOp<Element>> ops_;
    std::vector<Index> cleared_;
    Column<Element> scratch_;
    ReductionStats stats_;
    bool record_ops_;
};

/// Column visiting order: 1..N, or by descending dimension (ascending index
/// within a dimension) when twisting.
std::vector<Index> reduction_order(const std::vector<int>& dims, bool twist);

/// Reduces m over a field. Every nonzero column of the result has a distinct
/// low and the diagram does not depend on options.twist.
template <class Field>
ReducedMatrix<Field> reduce(const SparseBoundaryMatrix<Field>& m, ReduceOptions options = {}) {
    ColumnReducer<Field> reducer(m, options.record_ops);
    std::vector<char> cleared(m.n_cols() + 1, 0);
    for (Index j : reduction_order(m.dims(), options.twist)) {
        if (cleared[j]) continue;
        const auto l = reducer.reduce(j);
        reducer.register_pivot(j);
        if (options.twist && l) {
            reducer.clear(*l);
            cleared[*l] = 1;
        }
    }
    return std::move(reducer).finish();
}

/// Reads the pairs off a reduced matrix: (low(j), j) for each nonzero column
/// and (j, inf) for each zero column that is nobody's low.
template <class Domain>
Diagram extract_diagram(const ReducedMatrix<Domain>& reduced, std::string field_name = {}) {
    const auto& r = reduced.r;
    const std::size_t n = r.n_cols();
    std::vector<char> is_low(n + 1, 0);
    std::vector<PersistencePair> pairs;
    for (Index j = 1; j <= n; ++j) {
        if (auto l = r.low(j)) {
            is_low[*l] = 1;
            pairs.push_back({*l, j, r.dim(*l)});
        }
    }
    for (Index j = 1; j <= n; ++j) {
        if (!r.low(j) && !is_low[j]) pairs.push_back({j, std::nullopt, r.dim(j)});
    }
    return Diagram(std::move(pairs), n, std::move(field_name));
}

/// Which field to compute over: Q or Z/p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::uint64_t p) { return FieldSpec(PrimeField(p)); }
    /// Accepts "q", "Q", "zp:<p>", "Zp:<p>".
    static FieldSpec parse(const std::string& text);

    bool is_rational() const noexcept { return std::holds_alternative<RationalField>(field_); }
    std::uint32_t characteristic() const noexcept {
        return is_rational() ? 0 : std::get<PrimeField>(field_).characteristic();
    }
    /// "Q" or "Zp:<p>".
    std::string name() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), field_);
    }

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec() = default;
    explicit FieldSpec(PrimeField f) : field_(f) {}
    std::variant<RationalField, PrimeField> field_;
};

/// build_boundary_matrix -> reduce -> extract_diagram.
Diagram compute_diagram(const Filtration& f, const FieldSpec& field, ReduceOptions options = {});

}  // namespace torsionph
