#pragma once

#include "torsionph/filtration.hpp"
#include "torsionph/pointcloud.hpp"

namespace torsionph {

/// Vietoris-Rips filtration: every simplex of dimension <= max_dim whose
/// diameter is at most 2 * max_radius, ordered by (diameter, dim, lex).
/// Labels are the appearance radii (diameter / 2).
Filtration rips_filtration(const Pointcloud& pc, int max_dim, double max_radius);

}  // namespace torsionph
