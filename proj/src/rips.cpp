#include "torsionph/rips.hpp"

#include <algorithm>
#include <cmath>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

struct Candidate {
    double diameter2;
    Simplex vertices;
};

void extend(const std::vector<std::vector<Vertex>>& up, const std::vector<double>& d2, std::size_t n, Simplex& cur,
            double diameter2, const std::vector<Vertex>& common, std::size_t max_size, std::vector<Candidate>& out) {
    out.push_back({diameter2, cur});
    if (cur.size() == max_size) return;
    for (Vertex v : common) {
        double diam = diameter2;
        for (Vertex u : cur) diam = std::max(diam, d2[static_cast<std::size_t>(u) * n + v]);
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(), up[v].begin(), up[v].end(), std::back_inserter(next));
        cur.push_back(v);
        extend(up, d2, n, cur, diam, next, max_size, out);
        cur.pop_back();
    }
}

}  // namespace

Filtration rips_filtration(const Pointcloud& pc, int max_dim, double max_radius) {
    if (max_dim < 0) throw UsageError("max_dim must be non-negative");
    const std::size_t n = pc.size();
    const double limit2 = 4 * max_radius * max_radius;
    std::vector<double> d2(n * n, 0.0);
    std::vector<std::vector<Vertex>> up(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double s = pc.squared_distance(a, b);
            d2[a * n + b] = d2[b * n + a] = s;
            if (max_radius >= 0 && s <= limit2) up[a].push_back(static_cast<Vertex>(b));
        }

    std::vector<Candidate> cands;
    Simplex cur;
    for (std::size_t v = 0; v < n; ++v) {
        cur.assign(1, static_cast<Vertex>(v));
        extend(up, d2, n, cur, 0.0, up[v], static_cast<std::size_t>(max_dim) + 1, cands);
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.diameter2 != b.diameter2) return a.diameter2 < b.diameter2;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    std::vector<Simplex> simplices;
    std::vector<double> labels;
    simplices.reserve(cands.size());
    labels.reserve(cands.size());
    for (auto& c : cands) {
        labels.push_back(std::sqrt(c.diameter2) / 2);
        simplices.push_back(std::move(c.vertices));
    }
    return Filtration::from_simplices(simplices, std::move(labels));
}

}  // namespace torsionph
