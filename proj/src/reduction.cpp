#include "torsionph/reduction.hpp"

#include <cctype>

#include "torsionph/errors.hpp"

namespace torsionph {

std::vector<Index> reduction_order(const std::vector<int>& dims, bool twist) {
    std::vector<Index> order(dims.size());
    std::iota(order.begin(), order.end(), Index{1});
    if (twist) {
        std::stable_sort(order.begin(), order.end(),
                         [&](Index a, Index b) { return dims[a - 1] > dims[b - 1]; });
    }
    return order;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "q") return rationals();
    if (lower.rfind("zp:", 0) == 0 && lower.size() > 3) {
        const std::string digits = lower.substr(3);
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
            throw UsageError("bad modulus in field spec '" + text + "'");
        return prime(std::stoull(digits));
    }
    throw UsageError("unknown field '" + text + "' (expected q or zp:<prime>)");
}

std::string FieldSpec::name() const {
    return is_rational() ? std::string("Q") : std::get<PrimeField>(field_).name();
}

Diagram compute_diagram(const Filtration& f, const FieldSpec& field, ReduceOptions options) {
    return field.visit([&](const auto& domain) {
        auto m = build_boundary_matrix(f, domain);
        auto r = reduce(m, options);
        return extract_diagram(r, domain.name());
    });
}

}  // namespace torsionph
