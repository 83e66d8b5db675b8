#include "torsionph/functional.hpp"

#include <cmath>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty number");
    Rational value;
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t decimals = text.size() - dot - 1;
        std::string den = "1" + std::string(decimals, '0');
        if (value.set_str(digits + "/" + den, 10) != 0) throw UsageError("bad number '" + text + "'");
    } else if (value.set_str(text, 10) != 0) {
        throw UsageError("bad number '" + text + "'");
    }
    value.canonicalize();
    return value;
}

HighPrecision to_high(const Rational& q) {
    return HighPrecision(q.get_num().get_str()) / HighPrecision(q.get_den().get_str());
}

Rational integer_power(const Rational& x, unsigned long k) {
    Rational result = 1;
    for (unsigned long i = 0; i < k; ++i) result *= x;
    return result;
}

}  // namespace

std::string FunctionalValue::to_string() const {
    if (exact) return exact->get_str();
    return approx.str(30);
}

int compare(const FunctionalValue& a, const FunctionalValue& b) {
    if (a.exact && b.exact) {
        const int c = cmp(*a.exact, *b.exact);
        return (c > 0) - (c < 0);
    }
    const HighPrecision diff = a.approx - b.approx;
    HighPrecision scale = 1;
    scale = std::max(scale, HighPrecision(abs(a.approx)));
    scale = std::max(scale, HighPrecision(abs(b.approx)));
    if (abs(diff) <= kFunctionalTolerance * scale) return 0;
    return diff > 0 ? 1 : -1;
}

ConvexFunctional ConvexFunctional::power(const Rational& r) {
    if (r < 1) throw UsageError("power functional needs an exponent >= 1, got " + r.get_str());
    ConvexFunctional f;
    f.exponent_ = r;
    return f;
}

ConvexFunctional ConvexFunctional::table(std::vector<std::pair<Rational, Rational>> knots) {
    if (knots.size() < 2) throw UsageError("a table functional needs at least two knots");
    if (sgn(knots[0].first) != 0 || sgn(knots[0].second) != 0) throw UsageError("a table functional must start at (0, 0)");
    Rational previous_slope;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const Rational dx = knots[i].first - knots[i - 1].first;
        if (sgn(dx) <= 0) throw UsageError("table knots must have strictly increasing x");
        const Rational slope = (knots[i].second - knots[i - 1].second) / dx;
        if (i > 1 && slope < previous_slope) throw UsageError("table functional is not convex at knot " + std::to_string(i - 1));
        previous_slope = slope;
    }
    ConvexFunctional f;
    f.knots_ = std::move(knots);
    return f;
}

ConvexFunctional ConvexFunctional::parse(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) {
        std::vector<std::pair<Rational, Rational>> knots;
        std::string body = spec.substr(6);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t end = body.find(';', pos);
            if (end == std::string::npos) end = body.size();
            const std::string knot = body.substr(pos, end - pos);
            const auto comma = knot.find(',');
            if (comma == std::string::npos) throw UsageError("table knot '" + knot + "' must be 'x,y'");
            knots.emplace_back(parse_rational(knot.substr(0, comma)), parse_rational(knot.substr(comma + 1)));
            pos = end + 1;
        }
        return table(std::move(knots));
    }
    std::string exponent = spec;
    if (exponent.rfind("x^", 0) == 0) exponent = exponent.substr(2);
    return power(parse_rational(exponent));
}

FunctionalValue ConvexFunctional::operator()(const Rational& x) const {
    if (sgn(x) < 0) throw UsageError("functional evaluated at a negative lifetime");
    FunctionalValue v;
    if (exponent_) {
        const Rational& r = *exponent_;
        if (r.get_den() == 1 && r.get_num().fits_ulong_p()) {
            v.exact = integer_power(x, r.get_num().get_ui());
            v.approx = to_high(*v.exact);
        } else if (sgn(x) == 0) {
            v.exact = Rational(0);
            v.approx = 0;
        } else {
            v.approx = pow(to_high(x), to_high(r));
        }
        return v;
    }
    std::size_t seg = 1;
    while (seg + 1 < knots_.size() && knots_[seg].first < x) ++seg;
    const auto& [x0, y0] = knots_[seg - 1];
    const auto& [x1, y1] = knots_[seg];
    Rational y = y0 + (y1 - y0) / (x1 - x0) * (x - x0);
    y.canonicalize();
    v.exact = y;
    v.approx = to_high(y);
    return v;
}

std::string ConvexFunctional::describe() const {
    if (exponent_) return "x^" + exponent_->get_str();
    std::string out = "table:";
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (i) out += ';';
        out += knots_[i].first.get_str() + "," + knots_[i].second.get_str();
    }
    return out;
}

std::vector<Rational> lifetimes(const Diagram& d, int q, std::span<const double> labels) {
    if (!labels.empty() && labels.size() != d.n_cells())
        throw UsageError("expected one label per cell (" + std::to_string(d.n_cells()) + "), got " +
                         std::to_string(labels.size()));
    std::vector<Rational> out;
    for (const auto& p : d.pairs()) {
        if (p.degree != q) continue;
        if (!p.death)
            throw HypothesisError("degree-" + std::to_string(q) + " pair born at " + std::to_string(p.birth) +
                                  " never dies; the functional needs every class to die");
        if (labels.empty()) {
            out.emplace_back(static_cast<unsigned long>(*p.death - p.birth));
        } else {
            // Doubles convert to rationals exactly.
            Rational lifetime = Rational(labels[*p.death - 1]) - Rational(labels[p.birth - 1]);
            if (sgn(lifetime) < 0) throw UsageError("labels decrease along the filtration");
            out.push_back(lifetime);
        }
    }
    return out;
}

FunctionalValue convex_sum(const Diagram& d, int q, const ConvexFunctional& f, std::span<const double> labels) {
    FunctionalValue total;
    total.exact = Rational(0);
    for (const auto& l : lifetimes(d, q, labels)) {
        FunctionalValue term = f(l);
        total.approx += term.approx;
        if (total.exact && term.exact)
            *total.exact += *term.exact;
        else
            total.exact.reset();
    }
    return total;
}

double wasserstein_to_empty(const Diagram& d, int q, double r, std::span<const double> labels) {
    if (!(r >= 1)) throw UsageError("Wasserstein order must be >= 1");
    double sum = 0;
    for (const auto& l : lifetimes(d, q, labels)) sum += std::pow(l.get_d() / 2.0, r);
    return std::pow(sum, 1.0 / r);
}

}  // namespace torsionph
