#pragma once

// Shared corpus and helpers for the unit and acceptance tests.

#include <array>
#include <string>
#include <vector>

#include "torsionph/analysis.hpp"
#include "torsionph/filtration.hpp"
#include "torsionph/filtration_io.hpp"
#include "torsionph/generators.hpp"
#include "torsionph/oracle.hpp"
#include "torsionph/pointcloud.hpp"
#include "torsionph/reduction.hpp"
#include "torsionph/rips.hpp"

namespace testsupport {

using namespace torsionph;

inline std::string fixture(const std::string& name) { return std::string(TORSIONPH_FIXTURES) + "/" + name; }

inline std::array<FieldSpec, 4> four_fields() {
    return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rationals()};
}

inline Filtration filled_triangle() {
    return read_filtration_file(fixture("filled_triangle.simplicial"), FiltrationFormat::Simplicial);
}

inline Filtration mobius_cw() { return read_filtration_file(fixture("mobius_cw.cells"), FiltrationFormat::Cells); }

struct Named {
    std::string name;
    Filtration f;
};

/// Deterministic examples.
inline std::vector<Named> fixture_corpus() {
    std::vector<Named> out;
    out.push_back({"filled triangle", filled_triangle()});
    out.push_back({"cw moebius", mobius_cw()});
    for (std::size_t s : {3, 4, 5}) out.push_back({"moebius " + std::to_string(s), mobius_filtration(s)});
    for (std::size_t s : {3, 4}) out.push_back({"capped moebius " + std::to_string(s), capped_mobius(s)});
    for (unsigned p : {2u, 3u, 5u}) out.push_back({"annulus " + std::to_string(p), p_fold_annulus(p, 3)});
    out.push_back({"capped annulus 3", cap(p_fold_annulus(3, 3))});
    Rng rng(7);
    out.push_back({"projective plane", random_order_filtration(projective_plane_simplices(), rng)});
    out.push_back({"4-simplex 2-skeleton", random_order_filtration(full_skeleton(5, 2), rng)});
    out.push_back({"tetrahedron", Filtration::from_simplices(full_skeleton(4, 3))});
    out.push_back({"lm 7", linial_meshulam_process({7, 2, 12, 3})});
    return out;
}

inline std::vector<Simplex> simplices_of(const Filtration& f) {
    std::vector<Simplex> out;
    for (const auto& c : f.cells()) out.push_back(c.vertices);
    return out;
}

/// A random filtration from a mix of generators, at most max_cells cells.
inline Filtration random_filtration(Rng& rng, std::size_t max_cells) {
    Filtration f;
    switch (rng.below(7)) {
        case 0: {
            const std::size_t n = 4 + rng.below(4);
            const int dim = 2 + static_cast<int>(rng.below(2));
            f = random_order_filtration(random_complex(n, dim, 0.3 + 0.5 * rng.unit(), rng), rng);
            break;
        }
        case 1: {
            const std::size_t n = 5 + rng.below(3);
            const std::size_t top = n * (n - 1) * (n - 2) / 6;
            f = linial_meshulam_process({n, 2, rng.below(top + 1), rng.next()});
            break;
        }
        case 2:
            f = random_order_filtration(projective_plane_simplices(), rng);
            break;
        case 3:
            f = random_order_filtration(simplices_of(mobius_filtration(3 + rng.below(3))), rng);
            break;
        case 4: {
            const unsigned p = 2 + static_cast<unsigned>(rng.below(2));
            f = rng.below(2) ? p_fold_annulus(p, 3) : random_order_filtration(simplices_of(p_fold_annulus(p, 3)), rng);
            break;
        }
        case 5: {
            const auto pc = uniform_pointcloud(6 + rng.below(6), 3, rng.next());
            f = rips_filtration(pc, 3, 0.2 + 0.3 * rng.unit());
            break;
        }
        default:
            f = cap(random_order_filtration(random_complex(5 + rng.below(2), 2, 0.5, rng), rng));
            break;
    }
    const std::size_t cut = std::min(f.size(), max_cells);
    return f.prefix(rng.below(4) == 0 ? 1 + rng.below(cut) : cut);
}

/// Persistent Betti table of a diagram vs the rank oracle, all degrees.
inline bool betti_tables_match_oracle(const Filtration& f, const FieldSpec& field, const Diagram& d) {
    for (int q = 0; q <= std::max(0, f.max_dim()); ++q)
        if (!(betti_table(d, q) == rank_betti_table(f, field, q))) return false;
    return true;
}

/// H_q(X_t; Z) free for q in {q0 - 1, q0} and every t, and H_q0(X_N) = 0.
inline bool free_homology_hypotheses(const Filtration& f, int q) {
    if (f.empty()) return false;
    for (Index t = 1; t <= f.size(); ++t) {
        const auto h = relative_homology(f, 0, t);
        if (!h.at(q).torsion.empty()) return false;
        if (q > 0 && !h.at(q - 1).torsion.empty()) return false;
    }
    const auto top = relative_homology(f, 0, f.size()).at(q);
    return top.free_rank == 0 && top.torsion.empty();
}

}  // namespace testsupport
