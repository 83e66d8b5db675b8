#pragma once

// Diagram serialisation.
//
// JSON: { "field": "Q" | "Zp:<p>", "pairs": [{"birth": i, "death": j | null,
//         "degree": q}, ...], "n_cells": N }
// TSV:  one "degree<TAB>birth<TAB>death" line per pair, "inf" for an
//       infinite death, preceded by a "degree\tbirth\tdeath" header.

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "torsionph/diagram.hpp"

namespace torsionph {

nlohmann::json diagram_to_json(const Diagram& d, std::optional<int> only_degree = std::nullopt);
/// Throws UsageError on schema violations.
Diagram diagram_from_json(const nlohmann::json& j);

Diagram read_diagram_file(const std::string& path);

void write_diagram_tsv(std::ostream& out, const Diagram& d, std::optional<int> only_degree = std::nullopt);

}  // namespace torsionph
