#include "torsionph/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

Simplex sorted(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

// Appends s and every face of s not yet in `seen` to out, faces first.
void add_closure(const Simplex& s, std::unordered_set<Simplex, SimplexIndex::Hash>& seen, std::vector<Simplex>& out) {
    if (seen.count(s)) return;
    if (s.size() > 1) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex facet = s;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
            add_closure(facet, seen, out);
        }
    }
    seen.insert(s);
    out.push_back(s);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) throw UsageError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

// The rank-th k-subset of {0..n-1} in lexicographic order.
Simplex unrank_subset(std::uint64_t rank, std::size_t n, std::size_t k) {
    Simplex out;
    out.reserve(k);
    Vertex v = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (;; ++v) {
            const std::uint64_t with_v = binomial(n - v - 1, k - slot - 1);
            if (rank < with_v) break;
            rank -= with_v;
        }
        out.push_back(v++);
    }
    return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, Simplex& cur, std::vector<Simplex>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = start; v + (k - cur.size()) <= n; ++v) {
        cur.push_back(static_cast<Vertex>(v));
        subsets(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

bool is_cone(const std::vector<Simplex>& simplices) {
    std::unordered_set<Simplex, SimplexIndex::Hash> all(simplices.begin(), simplices.end());
    std::vector<Vertex> vertices;
    for (const auto& s : simplices)
        if (s.size() == 1) vertices.push_back(s[0]);
    for (Vertex apex : vertices) {
        bool ok = true;
        for (const auto& s : simplices) {
            if (std::binary_search(s.begin(), s.end(), apex)) continue;
            Simplex c = s;
            c.insert(std::upper_bound(c.begin(), c.end(), apex), apex);
            if (!all.count(c)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("empty sampling range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

bool dim_lex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Filtration mobius_filtration(std::size_t segments) {
    if (segments < 3) throw UsageError("a Moebius strip needs at least 3 segments");
    const std::size_t s = segments;
    auto t = [](std::size_t i) { return static_cast<Vertex>(i); };
    auto u = [s](std::size_t i) { return static_cast<Vertex>(s + i); };
    std::vector<Simplex> cells;
    for (std::size_t i = 0; i < 2 * s; ++i) cells.push_back({static_cast<Vertex>(i)});
    // Boundary circle t_0 .. t_{s-1} u_0 .. u_{s-1} t_0.
    for (std::size_t i = 0; i + 1 < s; ++i) cells.push_back(sorted({t(i), t(i + 1)}));
    cells.push_back(sorted({t(s - 1), u(0)}));
    for (std::size_t i = 0; i + 1 < s; ++i) cells.push_back(sorted({u(i), u(i + 1)}));
    cells.push_back(sorted({u(s - 1), t(0)}));
    // Rungs and diagonals.
    for (std::size_t i = 0; i < s; ++i) cells.push_back(sorted({t(i), u(i)}));
    for (std::size_t i = 0; i + 1 < s; ++i) cells.push_back(sorted({t(i), u(i + 1)}));
    cells.push_back(sorted({t(s - 1), t(0)}));
    for (std::size_t i = 0; i + 1 < s; ++i) {
        cells.push_back(sorted({t(i), u(i), u(i + 1)}));
        cells.push_back(sorted({t(i), t(i + 1), u(i + 1)}));
    }
    cells.push_back(sorted({t(s - 1), u(s - 1), t(0)}));
    cells.push_back(sorted({t(s - 1), u(0), t(0)}));
    return Filtration::from_simplices(cells);
}

std::vector<Index> mobius_step_ends(std::size_t segments) { return {4 * segments, 8 * segments}; }

std::vector<Simplex> mobius_core_loop(std::size_t segments) {
    std::vector<Simplex> loop;
    for (std::size_t i = 0; i + 1 < segments; ++i)
        loop.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    loop.push_back({0, static_cast<Vertex>(segments - 1)});
    return loop;
}

Filtration p_fold_annulus(unsigned p, std::size_t segments) {
    if (p < 2) throw UsageError("p_fold_annulus needs p >= 2");
    if (segments < 3) throw UsageError("p_fold_annulus needs at least 3 segments");
    const std::size_t k = segments;
    const std::size_t n_src = p * k;
    auto src = [n_src](std::size_t i) { return static_cast<Vertex>(i % n_src); };
    auto core = [n_src, k](std::size_t i) { return static_cast<Vertex>(n_src + i % k); };
    std::vector<Simplex> cells;
    for (std::size_t i = 0; i < n_src; ++i) cells.push_back({src(i)});
    for (std::size_t i = 0; i < n_src; ++i) cells.push_back(sorted({src(i), src(i + 1)}));
    for (std::size_t i = 0; i < k; ++i) cells.push_back({core(i)});
    for (std::size_t i = 0; i < k; ++i) cells.push_back(sorted({core(i), core(i + 1)}));
    for (std::size_t i = 0; i < n_src; ++i) {
        cells.push_back({src(i), core(i)});
        cells.push_back({src(i), core(i + 1)});
    }
    for (std::size_t i = 0; i < n_src; ++i) {
        cells.push_back(sorted({src(i), src(i + 1), core(i + 1)}));
        cells.push_back(sorted({src(i), core(i), core(i + 1)}));
    }
    return Filtration::from_simplices(cells);
}

std::vector<Index> p_fold_annulus_step_ends(unsigned p, std::size_t segments) {
    const std::size_t n_src = p * segments;
    return {2 * n_src, 2 * n_src + 2 * segments + 4 * n_src};
}

Filtration cap(const Filtration& f, const std::vector<Simplex>& first) {
    if (!f.simplicial()) throw UsageError("cap needs a simplicial filtration");
    std::vector<Simplex> simplices;
    simplices.reserve(f.size());
    for (const auto& c : f.cells()) simplices.push_back(c.vertices);
    if (simplices.empty() || is_cone(simplices)) return f;

    std::unordered_set<Simplex, SimplexIndex::Hash> present(simplices.begin(), simplices.end());
    for (const auto& s : first)
        if (!present.count(sorted(s))) throw UsageError("cap: priority simplex is not in the filtration");

    Vertex apex = 0;
    for (const auto& s : simplices) apex = std::max(apex, static_cast<Vertex>(s.back() + 1));

    std::vector<Simplex> base;
    std::unordered_set<Simplex, SimplexIndex::Hash> queued;
    {
        std::vector<Simplex> closure;
        for (const auto& s : first) add_closure(sorted(s), queued, closure);
        // Closure members in filtration order.
        for (const auto& s : simplices)
            if (queued.count(s)) base.push_back(s);
    }
    for (const auto& s : simplices)
        if (!queued.count(s)) base.push_back(s);

    std::vector<double> labels = f.labels();
    if (labels.empty()) {
        labels.resize(f.size());
        std::iota(labels.begin(), labels.end(), 1.0);
    }
    const double cap_label = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<Simplex> out = simplices;
    out.push_back({apex});
    labels.push_back(cap_label);
    for (const auto& s : base) {
        Simplex c = s;
        c.push_back(apex);
        out.push_back(std::move(c));
        labels.push_back(cap_label);
    }
    return Filtration::from_simplices(out, std::move(labels));
}

Filtration capped_mobius(std::size_t segments) {
    std::vector<Simplex> first;
    for (std::size_t v = 0; v < 2 * segments; ++v) first.push_back({static_cast<Vertex>(v)});
    for (auto& e : mobius_core_loop(segments)) first.push_back(e);
    return cap(mobius_filtration(segments), first);
}

std::vector<Simplex> projective_plane_simplices() {
    const std::vector<Simplex> triangles = {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                            {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
    std::unordered_set<Simplex, SimplexIndex::Hash> seen;
    std::vector<Simplex> out;
    for (const auto& t : triangles) add_closure(t, seen, out);
    std::sort(out.begin(), out.end(), dim_lex_less);
    return out;
}

std::vector<Simplex> full_skeleton(std::size_t n, int max_dim) {
    std::vector<Simplex> out;
    Simplex cur;
    for (int q = 0; q <= max_dim && static_cast<std::size_t>(q) < n; ++q)
        subsets(n, static_cast<std::size_t>(q) + 1, 0, cur, out);
    return out;
}

Filtration linial_meshulam_process(const RandomProcessSpec& spec) {
    if (spec.d < 1) throw UsageError("Linial-Meshulam process needs d >= 1");
    const std::size_t k = static_cast<std::size_t>(spec.d) + 1;
    const std::uint64_t available = binomial(spec.n, k);
    if (spec.m > available)
        throw UsageError("cannot sample " + std::to_string(spec.m) + " " + std::to_string(spec.d) + "-simplices from " +
                         std::to_string(available));
    std::vector<Simplex> cells = full_skeleton(spec.n, spec.d - 1);
    cells.reserve(cells.size() + spec.m);

    // Partial Fisher-Yates over ranks 0..available-1; only displaced slots
    // are stored.
    Rng rng(spec.seed);
    std::unordered_map<std::uint64_t, std::uint64_t> displaced;
    displaced.reserve(spec.m * 2);
    auto slot = [&displaced](std::uint64_t i) {
        auto it = displaced.find(i);
        return it == displaced.end() ? i : it->second;
    };
    for (std::uint64_t i = 0; i < spec.m; ++i) {
        const std::uint64_t j = i + rng.below(available - i);
        const std::uint64_t picked = slot(j);
        displaced[j] = slot(i);
        cells.push_back(unrank_subset(picked, spec.n, k));
    }
    return Filtration::from_simplices(cells);
}

std::vector<Simplex> random_complex(std::size_t n, int max_dim, double density, Rng& rng) {
    std::vector<Simplex> out;
    std::unordered_set<Simplex, SimplexIndex::Hash> present;
    for (std::size_t v = 0; v < n; ++v) {
        out.push_back({static_cast<Vertex>(v)});
        present.insert(out.back());
    }
    Simplex cur;
    for (int q = 1; q <= max_dim; ++q) {
        std::vector<Simplex> candidates;
        subsets(n, static_cast<std::size_t>(q) + 1, 0, cur, candidates);
        for (const auto& s : candidates) {
            bool faces = true;
            for (std::size_t i = 0; i < s.size() && faces; ++i) {
                Simplex facet = s;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                faces = present.count(facet) > 0;
            }
            if (faces && rng.unit() < density) {
                out.push_back(s);
                present.insert(s);
            }
        }
    }
    return out;
}

Filtration random_order_filtration(std::vector<Simplex> simplices, Rng& rng) {
    std::sort(simplices.begin(), simplices.end(), dim_lex_less);
    std::unordered_map<Simplex, std::uint64_t, SimplexIndex::Hash> key;
    key.reserve(simplices.size());
    for (const auto& s : simplices) {
        std::uint64_t k = rng.next();
        for (std::size_t i = 0; s.size() > 1 && i < s.size(); ++i) {
            Simplex facet = s;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = key.find(facet);
            if (it == key.end()) throw UsageError("random_order_filtration needs a closed complex");
            k = std::max(k, it->second);
        }
        key.emplace(s, k);
    }
    std::stable_sort(simplices.begin(), simplices.end(), [&key](const Simplex& a, const Simplex& b) {
        const auto ka = key.at(a), kb = key.at(b);
        if (ka != kb) return ka < kb;
        return dim_lex_less(a, b);
    });
    return Filtration::from_simplices(simplices);
}

}  // namespace torsionph
