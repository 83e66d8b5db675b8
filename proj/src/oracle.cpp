#include "torsionph/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsionph/errors.hpp"
#include "torsionph/linalg.hpp"

namespace torsionph {

namespace {

void check_range(const Filtration& f, Index m, Index n) {
    if (m > n || n > f.size())
        throw UsageError("need 0 <= m <= n <= N, got m=" + std::to_string(m) + " n=" + std::to_string(n));
}

// Cells of dimension q with index in (m, n], ascending.
std::vector<Index> cells_of_dim(const Filtration& f, Index m, Index n, int q) {
    std::vector<Index> out;
    for (Index j = m + 1; j <= n; ++j)
        if (f.dim(j) == q) out.push_back(j);
    return out;
}

// Kernel lattice basis of the absolute boundary d_q on X_n, as integer
// vectors over the q-cells of X_n.
std::vector<std::vector<BigInt>> integer_cycle_basis(const Filtration& f, Index n, int q) {
    const auto q_cells = cells_of_dim(f, 0, n, q);
    std::vector<std::vector<BigInt>> basis;
    if (q == 0) {
        for (std::size_t k = 0; k < q_cells.size(); ++k) {
            std::vector<BigInt> e(q_cells.size(), 0);
            e[k] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const IntMatrix block = relative_boundary_block(f, 0, n, q);
    if (block.empty()) {
        // No (q-1)-cells: every chain is a cycle.
        for (std::size_t k = 0; k < q_cells.size(); ++k) {
            std::vector<BigInt> e(q_cells.size(), 0);
            e[k] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const auto snf = smith_normal_form(block, true);
    const auto& v = *snf.right;
    for (std::size_t col = snf.rank(); col < q_cells.size(); ++col) {
        std::vector<BigInt> e(q_cells.size());
        for (std::size_t row = 0; row < q_cells.size(); ++row) e[row] = v[row][col];
        basis.push_back(std::move(e));
    }
    return basis;
}

template <class Field>
std::vector<DenseVector<Field>> field_cycle_basis(const Field& field, const Filtration& f, Index m, int q,
                                                  std::size_t dimension) {
    const auto q_cells = cells_of_dim(f, 0, m, q);
    std::vector<DenseVector<Field>> basis;
    if (q == 0) {
        for (std::size_t k = 0; k < q_cells.size(); ++k) {
            DenseVector<Field> e(dimension, field.zero());
            e[k] = field.one();
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const auto lower = cells_of_dim(f, 0, m, q - 1);
    std::vector<std::size_t> row_of(m + 1, 0);
    for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
    std::vector<DenseVector<Field>> rows(lower.size(), DenseVector<Field>(q_cells.size(), field.zero()));
    for (std::size_t c = 0; c < q_cells.size(); ++c)
        for (const auto& term : f.cell(q_cells[c]).boundary)
            rows[row_of[term.cell]][c] = field.from_int(term.coeff);
    for (auto& z : nullspace(field, std::move(rows), q_cells.size())) {
        z.resize(dimension, field.zero());
        basis.push_back(std::move(z));
    }
    return basis;
}

// Boundary of a (q+1)-cell as a dense vector over the q-cells.
template <class Field>
DenseVector<Field> boundary_vector(const Field& field, const Filtration& f, Index j,
                                   const std::vector<std::size_t>& pos_of, std::size_t dimension) {
    DenseVector<Field> v(dimension, field.zero());
    for (const auto& term : f.cell(j).boundary) v[pos_of[term.cell]] = field.from_int(term.coeff);
    return v;
}

template <class Field>
PersistentBettiTable rank_table(const Field& field, const Filtration& f, int q, std::optional<std::pair<Index, Index>> only) {
    const std::size_t n_cells = f.size();
    PersistentBettiTable table(q, n_cells);
    const auto q_cells = cells_of_dim(f, 0, n_cells, q);
    const std::size_t dimension = q_cells.size();
    std::vector<std::size_t> pos_of(n_cells + 1, 0);
    for (std::size_t k = 0; k < q_cells.size(); ++k) pos_of[q_cells[k]] = k;

    // rank B_q(X_n) for every n.
    std::vector<std::size_t> boundary_rank(n_cells + 1, 0);
    {
        EchelonBasis<Field> b(field, dimension);
        for (Index n = 1; n <= n_cells; ++n) {
            if (f.dim(n) == q + 1) b.insert(boundary_vector(field, f, n, pos_of, dimension));
            boundary_rank[n] = b.rank();
        }
    }

    const Index m_lo = only ? only->first : 0;
    const Index m_hi = only ? only->first : n_cells;
    for (Index m = m_lo; m <= m_hi; ++m) {
        EchelonBasis<Field> span(field, dimension);
        for (auto& z : field_cycle_basis(field, f, m, q, dimension)) span.insert(std::move(z));
        const Index n_hi = only ? only->second : n_cells;
        for (Index n = 1; n <= n_hi; ++n) {
            if (f.dim(n) == q + 1) span.insert(boundary_vector(field, f, n, pos_of, dimension));
            if (n >= m) table.set(m, n, static_cast<std::uint32_t>(span.rank() - boundary_rank[n]));
        }
        if (m == 0) table.set(0, 0, 0);
    }
    return table;
}

}  // namespace

DegreeHomology IntegerHomology::at(int q) const {
    for (const auto& d : degrees)
        if (d.degree == q) return d;
    DegreeHomology zero;
    zero.degree = q;
    return zero;
}

bool IntegerHomology::torsion_free() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeHomology& d) { return d.torsion.empty(); });
}

IntMatrix relative_boundary_block(const Filtration& f, Index m, Index n, int q) {
    check_range(f, m, n);
    const auto cols = cells_of_dim(f, m, n, q);
    const auto rows = cells_of_dim(f, m, n, q - 1);
    std::vector<std::size_t> row_of(n + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r + 1;
    IntMatrix block(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& term : f.cell(cols[c]).boundary)
            if (term.cell > m) block[row_of[term.cell] - 1][c] = BigInt(static_cast<long>(term.coeff));
    return block;
}

IntegerHomology relative_homology(const Filtration& f, Index m, Index n) {
    check_range(f, m, n);
    if (m == n) throw UsageError("relative homology needs m < n");
    int top = -1;
    for (Index j = m + 1; j <= n; ++j) top = std::max(top, f.dim(j));

    // rank and torsion of d_q for q = 1..top.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<BigInt>> torsion_below(static_cast<std::size_t>(top) + 2);
    for (int q = 1; q <= top; ++q) {
        const auto snf = smith_normal_form(relative_boundary_block(f, m, n, q));
        rank[q] = snf.rank();
        torsion_below[q] = snf.torsion();
    }
    IntegerHomology h;
    for (int q = 0; q <= top; ++q) {
        DegreeHomology d;
        d.degree = q;
        const std::size_t cells = cells_of_dim(f, m, n, q).size();
        d.free_rank = cells - rank[q] - rank[q + 1];
        d.torsion = torsion_below[q + 1];
        h.degrees.push_back(std::move(d));
    }
    return h;
}

TorsionScan torsion_scan(const Filtration& f, std::optional<int> max_degree) {
    TorsionScan scan;
    const int top = f.max_dim();
    const int q_hi = max_degree ? std::min(*max_degree, top - 1) : top - 1;
    for (Index m = 0; m < f.size(); ++m) {
        for (Index n = m + 1; n <= f.size(); ++n) {
            for (int q = 0; q <= q_hi; ++q) {
                const IntMatrix block = relative_boundary_block(f, m, n, q + 1);
                if (block.empty() || block[0].empty()) continue;
                auto torsion = smith_normal_form(block).torsion();
                if (!torsion.empty()) scan.witnesses.push_back({m, n, q, std::move(torsion)});
            }
        }
    }
    scan.independent = scan.witnesses.empty();
    return scan;
}

std::uint32_t rank_betti(const Filtration& f, const FieldSpec& field, Index m, Index n, int q) {
    check_range(f, m, n);
    return field.visit([&](const auto& domain) {
        return rank_table(domain, f, q, std::make_pair(m, n))(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
    });
}

PersistentBettiTable rank_betti_table(const Filtration& f, const FieldSpec& field, int q) {
    return field.visit([&](const auto& domain) { return rank_table(domain, f, q, std::nullopt); });
}

std::vector<BigInt> induced_cokernel_torsion(const Filtration& f, Index m, Index n, int q) {
    check_range(f, m, n);
    const auto kernel = integer_cycle_basis(f, n, q);
    if (kernel.empty()) return {};
    const std::size_t dimension = kernel[0].size();
    const std::size_t k = kernel.size();

    // Generators of B_q(X_n) + Z_q(X_m) inside Z_q(X_n).
    std::vector<std::vector<BigInt>> gens;
    for (const auto& z : integer_cycle_basis(f, m, q)) {
        auto padded = z;
        padded.resize(dimension, 0);
        gens.push_back(std::move(padded));
    }
    const auto q_cells = cells_of_dim(f, 0, n, q);
    std::vector<std::size_t> pos_of(n + 1, 0);
    for (std::size_t c = 0; c < q_cells.size(); ++c) pos_of[q_cells[c]] = c;
    for (Index j : cells_of_dim(f, 0, n, q + 1)) {
        std::vector<BigInt> v(dimension, 0);
        for (const auto& term : f.cell(j).boundary) v[pos_of[term.cell]] = BigInt(static_cast<long>(term.coeff));
        gens.push_back(std::move(v));
    }
    if (gens.empty()) return {};

    // Coordinates of every generator in the kernel basis: reduce [K | G] to
    // reduced row echelon form over Q. K has full column rank.
    const std::size_t width = k + gens.size();
    std::vector<std::vector<Rational>> rows(dimension, std::vector<Rational>(width));
    for (std::size_t r = 0; r < dimension; ++r) {
        for (std::size_t c = 0; c < k; ++c) rows[r][c] = kernel[c][r];
        for (std::size_t g = 0; g < gens.size(); ++g) rows[r][k + g] = gens[g][r];
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pick = pivot_row;
        while (pick < dimension && sgn(rows[pick][c]) == 0) ++pick;
        if (pick == dimension) throw std::logic_error("cycle basis is not of full rank");
        std::swap(rows[pivot_row], rows[pick]);
        const Rational inv = 1 / rows[pivot_row][c];
        for (auto& x : rows[pivot_row]) x *= inv;
        for (std::size_t r = 0; r < dimension; ++r) {
            if (r == pivot_row || sgn(rows[r][c]) == 0) continue;
            const Rational factor = rows[r][c];
            for (std::size_t t = 0; t < width; ++t) rows[r][t] -= factor * rows[pivot_row][t];
        }
        ++pivot_row;
    }
    IntMatrix coords(k, std::vector<BigInt>(gens.size()));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Rational& x = rows[r][k + g];
            if (x.get_den() != 1) throw std::logic_error("generator is not an integral combination of the cycle basis");
            coords[r][g] = x.get_num();
        }
    return smith_normal_form(coords).torsion();
}

}  // namespace torsionph
