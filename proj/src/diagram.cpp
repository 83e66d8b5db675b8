#include "torsionph/diagram.hpp"

#include <algorithm>
#include <ostream>

#include "torsionph/errors.hpp"

namespace torsionph {

bool operator<(const PersistencePair& a, const PersistencePair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    return a.death.value_or(0) < b.death.value_or(0);
}

Diagram::Diagram(std::vector<PersistencePair> pairs, std::size_t n_cells, std::string field)
    : pairs_(std::move(pairs)), n_cells_(n_cells), field_(std::move(field)) {
    std::vector<char> used(n_cells_ + 1, 0);
    auto claim = [&](Index i, const char* role) {
        if (i < 1 || i > n_cells_)
            throw UsageError(std::string(role) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n_cells_));
        if (used[i]) throw UsageError("index " + std::to_string(i) + " appears in more than one pair");
        used[i] = 1;
    };
    for (const auto& p : pairs_) {
        if (p.degree < 0) throw UsageError("negative degree");
        claim(p.birth, "birth");
        if (p.death) {
            if (*p.death <= p.birth) throw UsageError("pair with death not after birth");
            claim(*p.death, "death");
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
}

Diagram Diagram::unchecked(std::vector<PersistencePair> pairs, std::size_t n_cells, std::string field) {
    Diagram d;
    d.pairs_ = std::move(pairs);
    d.n_cells_ = n_cells;
    d.field_ = std::move(field);
    std::sort(d.pairs_.begin(), d.pairs_.end());
    return d;
}

std::vector<PersistencePair> Diagram::degree(int q) const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs_)
        if (p.degree == q) out.push_back(p);
    return out;
}

int Diagram::max_degree() const noexcept {
    int d = -1;
    for (const auto& p : pairs_) d = std::max(d, p.degree);
    return d;
}

std::ostream& operator<<(std::ostream& out, const PersistencePair& p) {
    out << "(" << p.birth << ", ";
    if (p.death)
        out << *p.death;
    else
        out << "inf";
    return out << ")_" << p.degree;
}

}  // namespace torsionph
