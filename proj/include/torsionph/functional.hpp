#pragma once

// Sums of a convex function over the lifetimes of a diagram, and the
// r-Wasserstein distance to the empty diagram.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "torsionph/diagram.hpp"
#include "torsionph/domain.hpp"

namespace torsionph {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Value of a functional. Exact whenever every term is rational.
struct FunctionalValue {
    std::optional<Rational> exact;
    HighPrecision approx = 0;

    std::string to_string() const;
};

/// Tolerance used when one side of a comparison is not exact.
inline constexpr double kFunctionalTolerance = 1e-12;

/// -1, 0, 1. Exact comparison when both values are exact, otherwise the
/// difference is compared against kFunctionalTolerance.
int compare(const FunctionalValue& a, const FunctionalValue& b);

/// A convex f on [0, inf) with f(0) = 0.
class ConvexFunctional {
public:
    /// f(x) = x^r, r >= 1. Integer r evaluates exactly on rationals.
    static ConvexFunctional power(const Rational& r);

    /// Piecewise-linear interpolation through (x_i, y_i), extended linearly
    /// past the last knot. Knots must start at (0, 0), have strictly
    /// increasing x, and non-decreasing slopes (second differences >= 0).
    static ConvexFunctional table(std::vector<std::pair<Rational, Rational>> knots);

    /// Parses "x^2", "x^3/2", "2" (a bare exponent) or "table:x0,y0;x1,y1;...".
    static ConvexFunctional parse(const std::string& spec);

    FunctionalValue operator()(const Rational& x) const;

    std::string describe() const;

private:
    ConvexFunctional() = default;

    std::optional<Rational> exponent_;
    std::vector<std::pair<Rational, Rational>> knots_;
};

/// Lifetimes of the degree-q pairs: death - birth in index units, or
/// label[death] - label[birth] when labels are given (one per cell).
/// Throws HypothesisError if some degree-q pair never dies.
std::vector<Rational> lifetimes(const Diagram& d, int q, std::span<const double> labels = {});

/// Sum of f(lifetime) over D_q.
FunctionalValue convex_sum(const Diagram& d, int q, const ConvexFunctional& f, std::span<const double> labels = {});

/// (sum over D_q of (lifetime / 2)^r)^(1/r), r >= 1.
double wasserstein_to_empty(const Diagram& d, int q, double r, std::span<const double> labels = {});

}  // namespace torsionph
