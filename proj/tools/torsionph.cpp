// torsionph command-line interface.
//
// Exit status: 0 success (independent / equal), 1 dependent (check-field)
// or unequal (compare), 2 on any error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsionph/analysis.hpp"
#include "torsionph/diagram_io.hpp"
#include "torsionph/errors.hpp"
#include "torsionph/experiment.hpp"
#include "torsionph/filtration_io.hpp"
#include "torsionph/functional.hpp"
#include "torsionph/generators.hpp"
#include "torsionph/oracle.hpp"
#include "torsionph/pointcloud.hpp"
#include "torsionph/reduction.hpp"
#include "torsionph/rips.hpp"
#include "torsionph/snf.hpp"
#include "torsionph/torsion.hpp"

using namespace torsionph;
using nlohmann::json;

namespace {

struct Output {
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(const std::string& path, const json& j) { Output(path).stream() << j.dump(2) << '\n'; }

Filtration load_filtration(const std::string& path, const std::string& format) {
    const auto fmt = parse_filtration_format(format);
    if (path == "-") return read_filtration(std::cin, fmt);
    return read_filtration_file(path, fmt);
}

std::vector<double> load_labels(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_labels(in);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

std::string big_string(const BigInt& b) { return b.get_str(); }

json verdict_json(const FieldVerdict& v) {
    json out = {{"verdict", v.dependent() ? "dependent" : "independent"},
                {"pivot", v.pivot ? json(big_string(*v.pivot)) : json(nullptr)},
                {"witness_column", v.witness_column ? json(*v.witness_column) : json(nullptr)},
                {"witness_low", v.witness_low ? json(*v.witness_low) : json(nullptr)},
                {"max_degree", v.max_degree ? json(*v.max_degree) : json(nullptr)}};
    json factors = json::array();
    if (v.pivot)
        for (const auto& [prime, exp] : factorize(*v.pivot)) factors.push_back({{"prime", big_string(prime)}, {"exponent", exp}});
    out["pivot_factors"] = std::move(factors);
    out["column_additions"] = v.stats.column_additions;
    return out;
}

json difference_json(const DiagramDifference& d) {
    return {{"degree", d.degree},
            {"birth", d.birth},
            {"death", d.death ? json(*d.death) : json(nullptr)},
            {"multiplicity_a", d.multiplicity_a},
            {"multiplicity_b", d.multiplicity_b},
            {"beta", {{"m", d.m}, {"n", d.n}, {"a", d.beta_a}, {"b", d.beta_b}}}};
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto s = std::stoull(text);
            return {s, s};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("seed range must look like 'a..b', got '" + text + "'");
    }
}

unsigned default_threads() {
    if (const char* env = std::getenv("TORSIONPH_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistence diagrams over Z/p and Q, and field-dependence checks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::function<int()> action;
    std::string input, format = "simplicial", out, field = "q", labels_path;

    // pd
    auto* pd = app.add_subcommand("pd", "Persistence diagram of a filtration");
    std::optional<int> pd_degree;
    bool twist = false, tsv = false;
    pd->add_option("input", input, "Filtration file ('-' for stdin)")->required();
    pd->add_option("--format", format, "simplicial or cells")->check(CLI::IsMember({"simplicial", "cells"}));
    pd->add_option("--field", field, "q or zp:<prime>");
    pd->add_option("--degree", pd_degree, "Only report this degree");
    pd->add_flag("--twist", twist, "Use twist clearing");
    pd->add_flag("--tsv", tsv, "Write TSV instead of JSON");
    pd->add_option("-o,--out", out, "Output file");
    pd->callback([&] {
        action = [&] {
            const auto spec = FieldSpec::parse(field);
            const Diagram d = compute_diagram(load_filtration(input, format), spec, {.twist = twist});
            if (tsv) {
                Output o(out);
                write_diagram_tsv(o.stream(), d, pd_degree);
            } else {
                emit(out, diagram_to_json(d, pd_degree));
            }
            return 0;
        };
    });

    // check-field
    auto* check = app.add_subcommand("check-field", "Decide whether the diagram depends on the field");
    std::optional<int> max_degree;
    check->add_option("input", input, "Filtration file ('-' for stdin)")->required();
    check->add_option("--format", format, "simplicial or cells")->check(CLI::IsMember({"simplicial", "cells"}));
    check->add_option("--max-degree", max_degree, "Only degrees 0..M")->check(CLI::NonNegativeNumber);
    check->add_flag("--twist", twist, "Use twist clearing");
    check->add_option("-o,--out", out, "Output file");
    check->callback([&] {
        action = [&] {
            const Filtration f = load_filtration(input, format);
            const TorsionOptions opts{.twist = twist};
            const FieldVerdict v = max_degree ? check_field_independence_upto(f, *max_degree, opts) : check_field_independence(f, opts);
            emit(out, verdict_json(v));
            return v.dependent() ? 1 : 0;
        };
    });

    // betti
    auto* betti = app.add_subcommand("betti", "Persistent Betti numbers as TSV");
    int degree = 0;
    bool from_diagram = false;
    betti->add_option("input", input, "Filtration file, or diagram JSON with --diagram")->required();
    betti->add_option("--format", format, "simplicial or cells")->check(CLI::IsMember({"simplicial", "cells"}));
    betti->add_option("--field", field, "q or zp:<prime>");
    betti->add_option("--degree", degree, "Homology degree")->required();
    betti->add_flag("--diagram", from_diagram, "Input is a diagram JSON file");
    betti->add_option("-o,--out", out, "Output file");
    betti->callback([&] {
        action = [&] {
            const Diagram d = from_diagram ? read_diagram_file(input)
                                           : compute_diagram(load_filtration(input, format), FieldSpec::parse(field));
            const auto table = betti_table(d, degree);
            Output o(out);
            auto& s = o.stream();
            s << "m\tn\tbeta\n";
            for (Index m = 0; m <= d.n_cells(); ++m)
                for (Index n = m; n <= d.n_cells(); ++n)
                    s << m << '\t' << n << '\t' << table(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)) << '\n';
            return 0;
        };
    });

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Compare two diagrams");
    std::string other;
    compare_cmd->add_option("a", input, "First diagram JSON")->required();
    compare_cmd->add_option("b", other, "Second diagram JSON")->required();
    compare_cmd->add_option("-o,--out", out, "Output file");
    compare_cmd->callback([&] {
        action = [&] {
            const auto result = diagrams_equal(read_diagram_file(input), read_diagram_file(other));
            emit(out, {{"equal", result.equal}, {"witness", result.witness ? difference_json(*result.witness) : json(nullptr)}});
            return result.equal ? 0 : 1;
        };
    });

    // functional
    auto* functional = app.add_subcommand("functional", "Sum of a convex function over lifetimes");
    std::string f_spec = "x^2";
    std::optional<double> wasserstein;
    functional->add_option("input", input, "Diagram JSON")->required();
    functional->add_option("--degree", degree, "Homology degree")->required();
    functional->add_option("--f", f_spec, "x^r, r, or table:x0,y0;x1,y1;...");
    functional->add_option("--labels", labels_path, "Per-cell labels, one per line");
    functional->add_option("--wasserstein", wasserstein, "Also report W_r to the empty diagram")->check(CLI::Range(1.0, 1e9));
    functional->add_option("-o,--out", out, "Output file");
    functional->callback([&] {
        action = [&] {
            const Diagram d = read_diagram_file(input);
            const auto labels = load_labels(labels_path);
            const auto f = ConvexFunctional::parse(f_spec);
            const auto value = convex_sum(d, degree, f, labels);
            json j = {{"degree", degree},
                      {"function", f.describe()},
                      {"value", value.to_string()},
                      {"exact", value.exact.has_value()},
                      {"approx", value.approx.convert_to<double>()},
                      {"wasserstein", nullptr}};
            if (wasserstein) j["wasserstein"] = wasserstein_to_empty(d, degree, *wasserstein, labels);
            emit(out, j);
            return 0;
        };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a filtration or pointcloud");
    std::string kind;
    std::size_t segments = 3, n = 75, m = 5000, points = 100, dim = 3;
    int d = 2;
    unsigned p = 2;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::string labels_out;
    gen->add_option("--kind", kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"mobius", "capped-mobius", "annulus", "lm", "rp2", "loop", "uniform"}));
    gen->add_option("--segments", segments, "Segments (mobius, annulus)");
    gen->add_option("--p", p, "Degree of the circle map (annulus) or loop count (loop)");
    gen->add_option("--n", n, "Vertices (lm)");
    gen->add_option("--d", d, "Dimension (lm)");
    gen->add_option("--m", m, "Top simplices (lm)");
    gen->add_option("--points", points, "Number of points (loop, uniform)");
    gen->add_option("--dim", dim, "Ambient dimension (uniform)");
    gen->add_option("--noise", noise, "Noise amplitude (loop)");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--labels-out", labels_out, "Also write per-cell labels here");
    gen->add_option("-o,--out", out, "Output file");
    gen->callback([&] {
        action = [&] {
            if (kind == "loop" || kind == "uniform") {
                const auto pc = kind == "loop" ? loop_pointcloud(p, points, noise, seed) : uniform_pointcloud(points, dim, seed);
                Output o(out);
                write_pointcloud(o.stream(), pc);
                return 0;
            }
            Filtration f;
            if (kind == "mobius") f = mobius_filtration(segments);
            else if (kind == "capped-mobius") f = capped_mobius(segments);
            else if (kind == "annulus") f = p_fold_annulus(p, segments);
            else if (kind == "lm") f = linial_meshulam_process({n, d, m, seed});
            else {
                Rng rng(seed);
                f = random_order_filtration(projective_plane_simplices(), rng);
            }
            {
                Output o(out);
                write_simplicial(o.stream(), f);
            }
            if (!labels_out.empty() && f.has_labels()) {
                Output o(labels_out);
                write_labels(o.stream(), f.labels());
            }
            return 0;
        };
    });

    // rips
    auto* rips = app.add_subcommand("rips", "Vietoris-Rips filtration of a pointcloud");
    int max_dim = 2;
    double max_radius = 0.0;
    rips->add_option("input", input, "Pointcloud file")->required();
    rips->add_option("--max-dim", max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
    rips->add_option("--max-radius", max_radius, "Largest radius")->required();
    rips->add_option("--labels-out", labels_out, "Write appearance radii here");
    rips->add_option("-o,--out", out, "Output file");
    rips->callback([&] {
        action = [&] {
            auto in = open_input(input);
            const Filtration f = rips_filtration(read_pointcloud(in), max_dim, max_radius);
            {
                Output o(out);
                write_simplicial(o.stream(), f);
            }
            if (!labels_out.empty()) {
                Output o(labels_out);
                write_labels(o.stream(), f.labels());
            }
            return 0;
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force Smith normal form tools");
    oracle->require_subcommand(1);
    auto* scan = oracle->add_subcommand("scan", "Torsion in H(X_n, X_m; Z) for all m < n");
    scan->add_option("input", input, "Filtration file")->required();
    scan->add_option("--format", format, "simplicial or cells")->check(CLI::IsMember({"simplicial", "cells"}));
    scan->add_option("--max-degree", max_degree, "Only degrees 0..M")->check(CLI::NonNegativeNumber);
    scan->add_option("-o,--out", out, "Output file");
    scan->callback([&] {
        action = [&] {
            const auto result = torsion_scan(load_filtration(input, format), max_degree);
            json witnesses = json::array();
            for (const auto& w : result.witnesses) {
                json coeffs = json::array();
                for (const auto& c : w.coefficients) coeffs.push_back(big_string(c));
                witnesses.push_back({{"m", w.m}, {"n", w.n}, {"degree", w.degree}, {"coefficients", coeffs}});
            }
            emit(out, {{"verdict", result.independent ? "independent" : "dependent"}, {"witnesses", witnesses}});
            return result.independent ? 0 : 1;
        };
    });
    auto* snf = oracle->add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("input", input, "Matrix file, one row per line")->required();
    snf->add_option("-o,--out", out, "Output file");
    snf->callback([&] {
        action = [&] {
            IntMatrix a;
            if (input == "-") {
                a = read_int_matrix(std::cin);
            } else {
                auto in = open_input(input);
                a = read_int_matrix(in);
            }
            const auto s = smith_normal_form(a);
            json factors = json::array(), torsion = json::array();
            for (const auto& x : s.invariant_factors) factors.push_back(big_string(x));
            for (const auto& x : s.torsion()) torsion.push_back(big_string(x));
            emit(out, {{"invariant_factors", factors}, {"rank", s.rank()}, {"torsion", torsion}});
            return 0;
        };
    });

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Seeded batch of field-dependence checks");
    ExperimentSpec spec;
    std::string seeds = "1..1", digest_field = "zp:2";
    unsigned threads = default_threads();
    experiment->add_option("--generator", spec.generator, "Generator")
        ->check(CLI::IsMember({"lm", "mobius", "annulus", "rips"}));
    experiment->add_option("--n", spec.n, "Vertices (lm)");
    experiment->add_option("--d", spec.d, "Dimension (lm)");
    experiment->add_option("--m", spec.m, "Top simplices (lm)");
    experiment->add_option("--segments", spec.segments, "Segments (mobius, annulus)");
    experiment->add_option("--p", spec.p, "Degree of the circle map (annulus)");
    experiment->add_option("--points", spec.points, "Points per cloud (rips)");
    experiment->add_option("--ambient-dim", spec.ambient_dim, "Dimension of the unit cube (rips)");
    experiment->add_option("--max-dim", spec.max_dim, "Largest simplex dimension (rips)");
    experiment->add_option("--max-radius", spec.max_radius, "Largest radius (rips)");
    experiment->add_option("--seeds", seeds, "Seed range a..b");
    experiment->add_option("--max-degree", max_degree, "Only degrees 0..M")->check(CLI::NonNegativeNumber);
    experiment->add_option("--digest-field", digest_field, "Field of the hashed diagram, or 'none'");
    experiment->add_option("--threads", threads, "Worker threads (default $TORSIONPH_THREADS or 1)")->check(CLI::PositiveNumber);
    experiment->add_option("-o,--out", out, "Output file");
    experiment->callback([&] {
        action = [&] {
            std::tie(spec.first_seed, spec.last_seed) = parse_seed_range(seeds);
            spec.max_degree = max_degree;
            if (digest_field != "none") spec.digest_field = FieldSpec::parse(digest_field);
            emit(out, run_experiment(spec, threads).to_json());
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
