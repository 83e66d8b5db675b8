#include "torsionph/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "torsionph/diagram_io.hpp"
#include "torsionph/errors.hpp"
#include "torsionph/generators.hpp"
#include "torsionph/pointcloud.hpp"
#include "torsionph/rips.hpp"
#include "torsionph/torsion.hpp"

namespace torsionph {

using nlohmann::json;

json ExperimentSpec::to_json() const {
    json params;
    if (generator == "lm") {
        params = {{"n", n}, {"d", d}, {"m", m}};
    } else if (generator == "mobius") {
        params = {{"segments", segments}};
    } else if (generator == "annulus") {
        params = {{"p", p}, {"segments", segments}};
    } else if (generator == "rips") {
        params = {{"points", points}, {"ambient_dim", ambient_dim}, {"max_dim", max_dim}, {"max_radius", max_radius}};
    }
    return json{{"generator", generator},
                {"params", params},
                {"seeds", {{"first", first_seed}, {"last", last_seed}}},
                {"max_degree", max_degree ? json(*max_degree) : json(nullptr)},
                {"digest_field", digest_field ? json(digest_field->name()) : json(nullptr)}};
}

std::size_t ExperimentReport::dependent() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) { return r.verdict == "dependent"; }));
}

std::size_t ExperimentReport::independent() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) { return r.verdict == "independent"; }));
}

std::size_t ExperimentReport::failed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TrialRow& r) { return r.verdict == "error"; }));
}

double ExperimentReport::dependent_fraction() const {
    const std::size_t ok = dependent() + independent();
    return ok == 0 ? 0.0 : static_cast<double>(dependent()) / static_cast<double>(ok);
}

json ExperimentReport::to_json() const {
    json out_rows = json::array();
    for (const auto& r : rows) {
        out_rows.push_back({{"seed", r.seed},
                            {"n_cells", r.n_cells},
                            {"verdict", r.verdict},
                            {"pivot", r.pivot ? json(*r.pivot) : json(nullptr)},
                            {"witness_column", r.witness_column ? json(*r.witness_column) : json(nullptr)},
                            {"digest", r.digest ? json(*r.digest) : json(nullptr)},
                            {"seconds", r.seconds},
                            {"error", r.error ? json(*r.error) : json(nullptr)}});
    }
    return json{{"version", kVersion},
                {"spec", spec.to_json()},
                {"rows", std::move(out_rows)},
                {"aggregates",
                 {{"trials", rows.size()},
                  {"dependent", dependent()},
                  {"independent", independent()},
                  {"failed", failed()},
                  {"dependent_fraction", dependent_fraction()}}}};
}

Filtration experiment_filtration(const ExperimentSpec& spec, std::uint64_t seed) {
    if (spec.generator == "lm") return linial_meshulam_process({spec.n, spec.d, spec.m, seed});
    if (spec.generator == "mobius") return mobius_filtration(spec.segments);
    if (spec.generator == "annulus") return p_fold_annulus(spec.p, spec.segments);
    if (spec.generator == "rips")
        return rips_filtration(uniform_pointcloud(spec.points, spec.ambient_dim, seed), spec.max_dim, spec.max_radius);
    throw UsageError("unknown generator '" + spec.generator + "'");
}

std::string diagram_digest(const Diagram& d) {
    std::ostringstream tsv;
    write_diagram_tsv(tsv, d);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : tsv.str()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

TrialRow run_trial(const ExperimentSpec& spec, std::uint64_t seed) {
    TrialRow row;
    row.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Filtration f = experiment_filtration(spec, seed);
        row.n_cells = f.size();
        const FieldVerdict v = spec.max_degree ? check_field_independence_upto(f, *spec.max_degree) : check_field_independence(f);
        row.verdict = v.dependent() ? "dependent" : "independent";
        if (v.pivot) row.pivot = v.pivot->get_str();
        row.witness_column = v.witness_column;
        if (spec.digest_field) row.digest = diagram_digest(compute_diagram(f, *spec.digest_field));
    } catch (const std::exception& e) {
        row.verdict = "error";
        row.error = e.what();
        row.pivot.reset();
        row.witness_column.reset();
        row.digest.reset();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec, unsigned threads) {
    if (spec.last_seed < spec.first_seed) throw UsageError("seed range is empty");
    experiment_filtration(spec, spec.first_seed);  // reject bad specs up front
    ExperimentReport report;
    report.spec = spec;
    const std::size_t trials = static_cast<std::size_t>(spec.last_seed - spec.first_seed) + 1;
    report.rows.resize(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < trials;) report.rows[k] = run_trial(spec, spec.first_seed + k);
    };
    const unsigned n_workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

}  // namespace torsionph
