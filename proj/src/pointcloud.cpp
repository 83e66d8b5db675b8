#include "torsionph/pointcloud.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "torsionph/errors.hpp"
#include "torsionph/generators.hpp"

namespace torsionph {

Pointcloud::Pointcloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.size() != points_[0].size()) throw UsageError("points have different dimensions");
}

double Pointcloud::squared_distance(std::size_t a, std::size_t b) const {
    double s = 0;
    for (std::size_t k = 0; k < dimension(); ++k) {
        const double d = points_[a][k] - points_[b][k];
        s += d * d;
    }
    return s;
}

Pointcloud loop_pointcloud(unsigned p, std::size_t n_points, double noise, std::uint64_t seed) {
    if (p != 2 && p != 3) throw UsageError("loop pointclouds support p = 2 or 3");
    if (n_points < 3 * p) throw UsageError("loop pointcloud needs at least 3p points");
    Rng rng(seed);
    const double w = kLoopBandWidth;
    std::vector<std::vector<double>> pts;
    pts.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_points);
        const double r = 1 + w * std::cos(t);
        std::vector<double> x = {r * std::cos(p * t), r * std::sin(p * t), w * std::sin(t)};
        if (noise > 0)
            for (auto& c : x) c += noise * (2 * rng.unit() - 1);
        pts.push_back(std::move(x));
    }
    return Pointcloud(std::move(pts));
}

Pointcloud uniform_pointcloud(std::size_t n_points, std::size_t dimension, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> pts(n_points, std::vector<double>(dimension));
    for (auto& x : pts)
        for (auto& c : x) c = rng.unit();
    return Pointcloud(std::move(pts));
}

Pointcloud read_pointcloud(std::istream& in) {
    std::vector<std::vector<double>> pts;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<double> x;
        std::string tok;
        while (tokens >> tok) {
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError(number, "expected a number, got '" + tok + "'");
            x.push_back(v);
        }
        if (x.empty()) continue;
        if (!pts.empty() && x.size() != pts[0].size()) throw ParseError(number, "point dimension differs from the first point");
        pts.push_back(std::move(x));
    }
    return Pointcloud(std::move(pts));
}

void write_pointcloud(std::ostream& out, const Pointcloud& pc) {
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& x : pc.points()) {
        for (std::size_t k = 0; k < x.size(); ++k) out << (k ? " " : "") << x[k];
        out << '\n';
    }
    out.precision(old);
}

}  // namespace torsionph
