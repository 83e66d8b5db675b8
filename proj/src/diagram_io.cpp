#include "torsionph/diagram_io.hpp"

#include <fstream>
#include <ostream>

#include "torsionph/errors.hpp"

namespace torsionph {

using nlohmann::json;

json diagram_to_json(const Diagram& d, std::optional<int> only_degree) {
    json pairs = json::array();
    for (const auto& p : d.pairs()) {
        if (only_degree && p.degree != *only_degree) continue;
        json entry = {{"birth", p.birth}, {"death", nullptr}, {"degree", p.degree}};
        if (p.death) entry["death"] = *p.death;
        pairs.push_back(std::move(entry));
    }
    return json{{"field", d.field()}, {"pairs", std::move(pairs)}, {"n_cells", d.n_cells()}};
}

Diagram diagram_from_json(const json& j) {
    try {
        if (!j.is_object()) throw UsageError("diagram JSON must be an object");
        const auto n_cells = j.at("n_cells").get<std::size_t>();
        std::string field = j.contains("field") ? j.at("field").get<std::string>() : std::string();
        std::vector<PersistencePair> pairs;
        for (const auto& entry : j.at("pairs")) {
            PersistencePair p;
            p.birth = entry.at("birth").get<Index>();
            p.degree = entry.at("degree").get<int>();
            const auto& death = entry.at("death");
            if (!death.is_null()) p.death = death.get<Index>();
            pairs.push_back(p);
        }
        return Diagram(std::move(pairs), n_cells, std::move(field));
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed diagram JSON: ") + e.what());
    }
}

Diagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
    return diagram_from_json(j);
}

void write_diagram_tsv(std::ostream& out, const Diagram& d, std::optional<int> only_degree) {
    out << "degree\tbirth\tdeath\n";
    for (const auto& p : d.pairs()) {
        if (only_degree && p.degree != *only_degree) continue;
        out << p.degree << '\t' << p.birth << '\t';
        if (p.death)
            out << *p.death;
        else
            out << "inf";
        out << '\n';
    }
}

}  // namespace torsionph
