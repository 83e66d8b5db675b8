#include "torsionph/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

// Death index with infinity mapped to N + 1.
Index death_or_end(const PersistencePair& p, std::size_t n_cells) { return p.death.value_or(n_cells + 1); }

std::uint32_t count_pair(const Diagram& d, int q, Index b, std::optional<Index> death) {
    PersistencePair key{b, death, q};
    const auto range = std::equal_range(d.pairs().begin(), d.pairs().end(), key);
    return static_cast<std::uint32_t>(range.second - range.first);
}

}  // namespace

PersistentBettiTable::PersistentBettiTable(int degree, std::size_t n_cells)
    : degree_(degree), n_cells_(n_cells), values_((n_cells + 1) * (n_cells + 2) / 2, 0) {}

std::size_t PersistentBettiTable::offset(Index m, Index n) const noexcept {
    // Row m holds n = m..N; rows before it hold (N+1) + N + ... entries.
    const std::size_t before = m * (n_cells_ + 1) - m * (m - 1) / 2;
    return before + (n - m);
}

std::uint32_t PersistentBettiTable::operator()(std::int64_t m, std::int64_t n) const noexcept {
    if (m < 0 || n < m || n > static_cast<std::int64_t>(n_cells_)) return 0;
    return values_[offset(static_cast<Index>(m), static_cast<Index>(n))];
}

void PersistentBettiTable::set(Index m, Index n, std::uint32_t value) {
    if (n < m || n > n_cells_) throw std::out_of_range("betti table index");
    values_[offset(m, n)] = value;
}

std::uint32_t betti_number(const Diagram& d, int q, Index m, Index n) {
    std::uint32_t count = 0;
    for (const auto& p : d.pairs()) {
        if (p.degree == q && p.birth <= m && m <= n && n < death_or_end(p, d.n_cells())) ++count;
    }
    return count;
}

PersistentBettiTable betti_table(const Diagram& d, int q) {
    const std::size_t n_cells = d.n_cells();
    PersistentBettiTable table(q, n_cells);
    // births_at[b] lists the (exclusive) end index of each pair born at b.
    std::vector<std::vector<Index>> births_at(n_cells + 1);
    for (const auto& p : d.pairs())
        if (p.degree == q) births_at[p.birth].push_back(death_or_end(p, n_cells));

    // alive_until[e] = number of pairs born so far whose end index is e.
    std::vector<std::uint32_t> alive_until(n_cells + 2, 0);
    for (Index m = 0; m <= n_cells; ++m) {
        for (Index e : births_at[m]) alive_until[e]++;
        // beta_m^n = #{born <= m, end > n}; walk n downwards accumulating.
        std::uint32_t running = alive_until[n_cells + 1];
        for (Index n = n_cells; n + 1 > m; --n) {
            table.set(m, n, running);
            running += alive_until[n];
            if (n == 0) break;
        }
    }
    return table;
}

std::uint32_t multiplicity(const PersistentBettiTable& t, Index b, std::optional<Index> d) {
    const auto bi = static_cast<std::int64_t>(b);
    if (!d) {
        const auto n = static_cast<std::int64_t>(t.n_cells());
        return t(bi, n) - t(bi - 1, n);
    }
    const auto di = static_cast<std::int64_t>(*d);
    const std::int64_t value = std::int64_t(t(bi, di - 1)) - t(bi - 1, di - 1) - t(bi, di) + t(bi - 1, di);
    if (value < 0) throw std::logic_error("negative multiplicity: inconsistent betti table");
    return static_cast<std::uint32_t>(value);
}

std::vector<PersistencePair> pairs_from_table(const PersistentBettiTable& t) {
    std::vector<PersistencePair> pairs;
    const std::size_t n_cells = t.n_cells();
    for (Index b = 1; b <= n_cells; ++b) {
        for (Index d = b + 1; d <= n_cells; ++d) {
            for (std::uint32_t k = multiplicity(t, b, d); k > 0; --k) pairs.push_back({b, d, t.degree()});
        }
        for (std::uint32_t k = multiplicity(t, b, std::nullopt); k > 0; --k)
            pairs.push_back({b, std::nullopt, t.degree()});
    }
    return pairs;
}

DiagramComparison diagrams_equal(const Diagram& a, const Diagram& b) {
    if (a.n_cells() != b.n_cells())
        throw UsageError("diagrams have different cell counts (" + std::to_string(a.n_cells()) + " vs " +
                         std::to_string(b.n_cells()) + ")");
    DiagramComparison result;
    if (a.pairs() == b.pairs()) return result;

    // First pair (in canonical order) whose multiplicity differs.
    const auto& pa = a.pairs();
    const auto& pb = b.pairs();
    auto [ia, ib] = std::mismatch(pa.begin(), pa.end(), pb.begin(), pb.end());
    PersistencePair key;
    if (ia == pa.end())
        key = *ib;
    else if (ib == pb.end())
        key = *ia;
    else
        key = std::min(*ia, *ib);

    DiagramDifference diff;
    diff.degree = key.degree;
    diff.birth = key.birth;
    diff.death = key.death;
    diff.multiplicity_a = count_pair(a, key.degree, key.birth, key.death);
    diff.multiplicity_b = count_pair(b, key.degree, key.birth, key.death);

    // The multiplicity is a signed sum of at most four Betti numbers, so one
    // of them must differ too.
    const Index n_end = a.n_cells();
    std::vector<std::pair<Index, Index>> candidates;
    if (key.death) {
        candidates = {{key.birth, *key.death - 1}, {key.birth - 1, *key.death - 1}, {key.birth, *key.death},
                      {key.birth - 1, *key.death}};
    } else {
        candidates = {{key.birth, n_end}, {key.birth - 1, n_end}};
    }
    bool found = false;
    for (auto [m, n] : candidates) {
        const auto ba = betti_number(a, key.degree, m, n);
        const auto bb = betti_number(b, key.degree, m, n);
        if (ba != bb) {
            diff.m = m;
            diff.n = n;
            diff.beta_a = ba;
            diff.beta_b = bb;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("multiplicities differ but no persistent Betti number does");
    result.equal = false;
    result.witness = diff;
    return result;
}

Diagram coarsen(const Diagram& d, std::span<const Index> step_ends) {
    if (step_ends.empty() || step_ends.back() != d.n_cells())
        throw UsageError("coarse steps must end at the last cell");
    for (std::size_t s = 1; s < step_ends.size(); ++s)
        if (step_ends[s - 1] >= step_ends[s]) throw UsageError("coarse step ends must be strictly increasing");
    auto step_of = [&](Index i) {
        return static_cast<Index>(std::lower_bound(step_ends.begin(), step_ends.end(), i) - step_ends.begin()) + 1;
    };
    std::vector<PersistencePair> pairs;
    for (const auto& p : d.pairs()) {
        const Index b = step_of(p.birth);
        if (p.death) {
            const Index e = step_of(*p.death);
            if (e != b) pairs.push_back({b, e, p.degree});
        } else {
            pairs.push_back({b, std::nullopt, p.degree});
        }
    }
    // Several fine pairs can land on the same coarse pair, so the result is a
    // multiset that Diagram's distinct-index check would reject. Build it
    // without validation.
    return Diagram::unchecked(std::move(pairs), step_ends.size(), d.field());
}

}  // namespace torsionph
