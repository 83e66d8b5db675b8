#pragma once

// Filtrations for the standard examples and random experiments.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "torsionph/filtration.hpp"

namespace torsionph {

/// Seedable, portable 64-bit generator (the output sequence of mt19937_64 is
/// fixed by the standard). Bounded draws use our own rejection sampling so no
/// library distribution is involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [0, 1) with 53 random bits.
    double unit();

private:
    std::mt19937_64 engine_;
};

/// Triangulated Moebius strip on 2s vertices: the boundary circle (4s cells)
/// first, then the interior edges and the 2s triangles. Total 8s cells.
Filtration mobius_filtration(std::size_t segments);

/// Last cell of each coarse step of mobius_filtration: {boundary, strip}.
std::vector<Index> mobius_step_ends(std::size_t segments);

/// Edges of a loop that winds once around the core of the strip.
std::vector<Simplex> mobius_core_loop(std::size_t segments);

/// Simplicial mapping cylinder of the degree-p circle map from a p*k-gon onto
/// a k-gon. The source circle comes first (2pk cells), then the target circle
/// and the cylinder. Needs p >= 2 and k >= 3.
Filtration p_fold_annulus(unsigned p, std::size_t segments);

/// {source circle, whole cylinder} step ends of p_fold_annulus.
std::vector<Index> p_fold_annulus_step_ends(unsigned p, std::size_t segments);

/// Appends the cone over the final complex from a fresh vertex. Cones over
/// the closure of `first` are added before the remaining cones, which follow
/// the order of f. Returns f unchanged when its final complex is already a
/// cone. New cells get label max + 1 (existing cells are labelled by index
/// when f has no labels).
Filtration cap(const Filtration& f, const std::vector<Simplex>& first = {});

/// Moebius strip capped so that vertices and the core loop are coned first.
Filtration capped_mobius(std::size_t segments);

/// Six-vertex triangulation of the real projective plane (vertices, edges,
/// triangles, each in lexicographic order).
std::vector<Simplex> projective_plane_simplices();

/// Every face of the simplex on n vertices up to dimension max_dim.
std::vector<Simplex> full_skeleton(std::size_t n, int max_dim);

struct RandomProcessSpec {
    std::size_t n = 0;
    int d = 1;
    std::size_t m = 0;
    std::uint64_t seed = 0;
};

/// Full (d-1)-skeleton on n vertices ordered by (dim, lex), then m distinct
/// d-simplices sampled uniformly without replacement, in sampled order.
Filtration linial_meshulam_process(const RandomProcessSpec& spec);

/// Closed complex drawn by keeping each candidate simplex of dim 1..max_dim
/// (all facets present) with the given probability, in (dim, lex) order.
std::vector<Simplex> random_complex(std::size_t n, int max_dim, double density, Rng& rng);

/// Orders a closed simplicial complex by a random key per simplex, raised to
/// the maximum over its faces, ties broken by (dim, lex).
Filtration random_order_filtration(std::vector<Simplex> simplices, Rng& rng);

/// Sorted-lexicographic comparison helper for (dim, lex) order.
bool dim_lex_less(const Simplex& a, const Simplex& b);

}  // namespace torsionph
