#pragma once

// Small dense linear algebra over a field, used by the brute-force oracles.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace torsionph {

template <class Field>
using DenseVector = std::vector<typename Field::Element>;

/// Row-echelon basis that accepts vectors one at a time. Each stored vector
/// has a distinct leading position (its first nonzero coordinate).
template <class Field>
class EchelonBasis {
public:
    using Element = typename Field::Element;

    EchelonBasis(Field field, std::size_t dimension) : field_(std::move(field)), lead_owner_(dimension, npos) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return lead_owner_.size(); }

    /// Adds v to the span. Returns true if the rank grew.
    bool insert(DenseVector<Field> v) {
        reduce(v);
        const auto lead = leading(v);
        if (!lead) return false;
        // Normalise so the leading coefficient is 1.
        const Element inv = field_.inv(v[*lead]);
        for (std::size_t k = *lead; k < v.size(); ++k)
            if (!field_.is_zero(v[k])) v[k] = field_.mul(v[k], inv);
        lead_owner_[*lead] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(DenseVector<Field> v) const {
        reduce(v);
        return !leading(v).has_value();
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::optional<std::size_t> leading(const DenseVector<Field>& v) const {
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!field_.is_zero(v[k])) return k;
        return std::nullopt;
    }

    void reduce(DenseVector<Field>& v) const {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (field_.is_zero(v[k]) || lead_owner_[k] == npos) continue;
            const auto& row = rows_[lead_owner_[k]];
            const Element factor = v[k];
            for (std::size_t t = k; t < v.size(); ++t)
                if (!field_.is_zero(row[t])) v[t] = field_.sub(v[t], field_.mul(factor, row[t]));
        }
    }

    Field field_;
    std::vector<DenseVector<Field>> rows_;
    std::vector<std::size_t> lead_owner_;
};

/// Basis of {x : A x = 0} for A given as rows of length n_cols.
template <class Field>
std::vector<DenseVector<Field>> nullspace(const Field& field, std::vector<DenseVector<Field>> rows, std::size_t n_cols) {
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < rows.size(); ++c) {
        std::size_t pick = r;
        while (pick < rows.size() && field.is_zero(rows[pick][c])) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[r], rows[pick]);
        const auto inv = field.inv(rows[r][c]);
        for (auto& x : rows[r]) x = field.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || field.is_zero(rows[i][c])) continue;
            const auto factor = rows[i][c];
            for (std::size_t t = 0; t < n_cols; ++t) rows[i][t] = field.sub(rows[i][t], field.mul(factor, rows[r][t]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(n_cols, 0);
    for (auto c : pivot_cols) is_pivot[c] = 1;
    std::vector<DenseVector<Field>> basis;
    for (std::size_t free = 0; free < n_cols; ++free) {
        if (is_pivot[free]) continue;
        DenseVector<Field> x(n_cols, field.zero());
        x[free] = field.one();
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = field.neg(rows[i][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class Field>
std::size_t rank_of(const Field& field, const std::vector<DenseVector<Field>>& vectors, std::size_t dimension) {
    EchelonBasis<Field> basis(field, dimension);
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

}  // namespace torsionph
