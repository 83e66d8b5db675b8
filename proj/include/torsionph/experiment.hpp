#pragma once

// Seeded batches of field-dependence checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsionph/filtration.hpp"
#include "torsionph/reduction.hpp"

namespace torsionph {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentSpec {
    /// "lm", "mobius", "annulus" or "rips".
    std::string generator = "lm";
    // lm
    std::size_t n = 75;
    int d = 2;
    std::size_t m = 5000;
    // mobius, annulus
    std::size_t segments = 3;
    unsigned p = 2;
    // rips over uniform points in the unit cube
    std::size_t points = 100;
    std::size_t ambient_dim = 3;
    int max_dim = 3;
    double max_radius = 0.15;

    std::uint64_t first_seed = 1;
    std::uint64_t last_seed = 1;
    std::optional<int> max_degree;
    /// Field whose diagram is hashed into each row; empty to skip.
    std::optional<FieldSpec> digest_field;

    nlohmann::json to_json() const;
};

struct TrialRow {
    std::uint64_t seed = 0;
    std::size_t n_cells = 0;
    /// "independent", "dependent" or "error".
    std::string verdict;
    std::optional<std::string> pivot;
    std::optional<Index> witness_column;
    std::optional<std::string> digest;
    double seconds = 0;
    std::optional<std::string> error;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<TrialRow> rows;

    std::size_t dependent() const;
    std::size_t independent() const;
    std::size_t failed() const;
    /// dependent / (dependent + independent); 0 when nothing succeeded.
    double dependent_fraction() const;

    nlohmann::json to_json() const;
};

/// The filtration of one trial. Deterministic in (spec, seed).
Filtration experiment_filtration(const ExperimentSpec& spec, std::uint64_t seed);

/// Runs every seed in [first_seed, last_seed] on up to `threads` workers.
/// Rows come back in seed order; a failing trial is recorded, not rethrown.
ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned threads = 1);

/// 64-bit FNV-1a of the diagram's TSV form, as 16 hex digits.
std::string diagram_digest(const Diagram& d);

}  // namespace torsionph
