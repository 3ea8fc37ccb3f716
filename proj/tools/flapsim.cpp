// Copyright 2026 The flapsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flapsim/analysis.hpp"
#include "flapsim/blade_elements.hpp"
#include "flapsim/scenario.hpp"

namespace {

int cmd_run(const std::vector<std::string>& scenario_paths, const std::string& out_dir,
            std::uint64_t seed, bool seed_set, const std::string& controller,
            const std::string& freq_sweep) {
    using namespace flapsim;

    std::vector<sim::Scenario> scenarios;
    for (const std::string& path : scenario_paths) {
        sim::Scenario sc = sim::Scenario::from_json_file(path);
        if (seed_set) sc.seed = seed;
        if (!controller.empty()) sc.controller = controller;
        if (!freq_sweep.empty()) {
            std::string spec = freq_sweep;
            std::replace(spec.begin(), spec.end(), ':', ' ');
            std::istringstream ss(spec);
            if (!(ss >> sc.freq_sweep.from >> sc.freq_sweep.to >> sc.freq_sweep.step)) {
                std::cerr << "bad --freq-sweep, expected from:to:step\n";
                return 2;
            }
        }
        scenarios.push_back(std::move(sc));
    }

    std::size_t max_threads = 1;
    if (const char* env = std::getenv("FLAPSIM_THREADS")) {
        max_threads = std::max(1, std::atoi(env));
    }

    std::vector<sim::RunResult> results(scenarios.size());
    const auto worker = [&](std::size_t idx) {
        const sim::Scenario& sc = scenarios[idx];
        std::string dir = out_dir;
        if (scenarios.size() > 1) {
            dir += "/" + std::filesystem::path(scenario_paths[idx]).stem().string();
        }
        try {
            results[idx] = sim::run_scenario(sc, dir);
        } catch (const std::exception& e) {
            results[idx] = sim::RunResult{2, e.what(), "", ""};
        }
    };

    for (std::size_t base = 0; base < scenarios.size(); base += max_threads) {
        std::vector<std::thread> pool;
        for (std::size_t i = base; i < std::min(base + max_threads, scenarios.size()); ++i)
            pool.emplace_back(worker, i);
        for (std::thread& th : pool) th.join();
    }

    int rc = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const sim::RunResult& r = results[i];
        std::cout << scenario_paths[i] << ": " << (r.exit_code == 0 ? "ok" : r.message) << "\n";
        rc = std::max(rc, r.exit_code);
    }
    return rc;
}

int cmd_blades(const std::string& csv, double span, int strips, int degree,
               const std::string& out) {
    using namespace flapsim;
    const geom::WingOutline outline = geom::load_outline_csv(csv);
    const geom::ChordFit fit = geom::fit_edge(outline, degree);
    const auto elems = geom::build_blade_elements(fit, span, strips);
    const std::string text = geom::elements_to_json(elems, span);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream of(out);
        of << text;
    }
    std::cerr << "fit residual rms: " << fit.residual_rms << " m\n";
    return 0;
}

int cmd_analyze(const std::string& csv, const std::string& column, double t0, double t1,
                const std::string& out) {
    using namespace flapsim;
    std::ifstream in(csv);
    if (!in) {
        std::cerr << "cannot open " << csv << "\n";
        return 2;
    }
    std::string header;
    std::getline(in, header);
    std::vector<std::string> names;
    {
        std::stringstream ss(header);
        std::string c;
        while (std::getline(ss, c, ',')) names.push_back(c);
    }
    const auto it = std::find(names.begin(), names.end(), column);
    if (it == names.end()) {
        std::cerr << "column not found: " << column << "\n";
        return 2;
    }
    const std::size_t col = static_cast<std::size_t>(it - names.begin());

    analysis::TimeSeries ts;
    std::vector<double> times;
    std::string line;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        std::size_t k = 0;
        double t = 0.0, v = 0.0;
        while (std::getline(ss, cell, ',')) {
            if (k == 0) t = std::atof(cell.c_str());
            if (k == col) v = std::atof(cell.c_str());
            ++k;
        }
        times.push_back(t);
        ts.values.push_back(v);
    }
    if (times.size() < 2) {
        std::cerr << "series too short\n";
        return 2;
    }
    ts.t0 = times.front();
    ts.step = times[1] - times[0];

    std::size_t i0 = 0, i1 = ts.size();
    if (t1 > t0) {
        i0 = static_cast<std::size_t>(std::max(0.0, (t0 - ts.t0) / ts.step));
        i1 = std::min<std::size_t>(ts.size(),
                                   static_cast<std::size_t>((t1 - ts.t0) / ts.step) + 1);
    }
    const analysis::SeriesMetrics m = analysis::metrics(ts, 0.0);
    nlohmann::json j{{"schema", "flapsim.analysis.v1"},
                     {"column", column},
                     {"max", m.max},
                     {"rms", m.rms},
                     {"upsilon", analysis::oscillation_statistic(ts, i0, i1)}};
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream of(out);
        of << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flapping-wing flight dynamics simulator"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one or more scenario files");
    std::vector<std::string> scenario_paths;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::string controller, freq_sweep;
    run->add_option("--scenario", scenario_paths, "scenario JSON file(s)")
        ->required()
        ->expected(-1);
    run->add_option("--out", out_dir, "output directory");
    auto* seed_opt = run->add_option("--seed", seed, "deterministic seed");
    run->add_option("--controller", controller,
                    "controller override: tau1|tau2|tau3|ut1|ut2|ut3");
    run->add_option("--freq-sweep", freq_sweep, "sweep override from:to:step");

    // blades
    auto* blades = app.add_subcommand("blades", "build blade elements from a wing outline CSV");
    std::string csv, blades_out = "-";
    double span = 0.14;
    int strips = 40, degree = 4;
    blades->add_option("--csv", csv, "outline CSV (spanwise, chordwise[, z])")->required();
    blades->add_option("--span", span, "panel span, m");
    blades->add_option("--strips", strips, "number of blade elements");
    blades->add_option("--degree", degree, "chord fit polynomial degree");
    blades->add_option("--out", blades_out, "output JSON path or -");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "metrics and oscillation statistic from a CSV");
    std::string a_csv, a_col = "thrust_body_N", a_out = "-";
    double a_t0 = 0.0, a_t1 = 0.0;
    analyze->add_option("--csv", a_csv, "telemetry CSV")->required();
    analyze->add_option("--column", a_col, "column name");
    analyze->add_option("--t0", a_t0, "window start, s");
    analyze->add_option("--t1", a_t1, "window end, s");
    analyze->add_option("--out", a_out, "output JSON path or -");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(scenario_paths, out_dir, seed, seed_opt->count() > 0, controller,
                           freq_sweep);
        if (blades->parsed()) return cmd_blades(csv, span, strips, degree, blades_out);
        if (analyze->parsed()) return cmd_analyze(a_csv, a_col, a_t0, a_t1, a_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
