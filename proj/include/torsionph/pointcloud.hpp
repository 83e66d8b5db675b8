#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace torsionph {

/// Finite point set in R^M; every point has the same dimension.
class Pointcloud {
public:
    Pointcloud() = default;
    /// Throws UsageError on ragged input.
    explicit Pointcloud(std::vector<std::vector<double>> points);

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_[0].size(); }
    const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const noexcept { return points_; }

    double squared_distance(std::size_t a, std::size_t b) const;

private:
    std::vector<std::vector<double>> points_;
};

/// Band half-width of the loop curves.
inline constexpr double kLoopBandWidth = 0.3;

/// n points on the closed curve
///   ((1 + w cos t) cos(p t), (1 + w cos t) sin(p t), w sin t),  t in [0, 2 pi)
/// which winds p times around the z-axis and bounds a band with p half
/// twists. Parameters are evenly spaced; each coordinate then gets uniform
/// noise in [-noise, noise]. p is 2 (double loop) or 3 (triple loop).
Pointcloud loop_pointcloud(unsigned p, std::size_t n_points, double noise, std::uint64_t seed);

/// n points uniform in [0, 1]^dimension.
Pointcloud uniform_pointcloud(std::size_t n_points, std::size_t dimension, std::uint64_t seed);

/// One point per line, whitespace-separated coordinates; '#' comments.
Pointcloud read_pointcloud(std::istream& in);
void write_pointcloud(std::ostream& out, const Pointcloud& pc);

}  // namespace torsionph
