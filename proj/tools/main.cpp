// Copyright 2026 The shadowtomo Authors
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

// Command-line front end. All functionality goes through the C API in
// shadowtomo.h; this file only handles argument parsing, file I/O, and
// output formatting.

#include <CLI11.hpp>
#include <array>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shadowtomo.h"

namespace {

using nlohmann::json;

struct CliError {
    std::string kind;
    std::string message;
};

[[noreturn]] void die(const std::string &kind, const std::string &message) {
    throw CliError{kind, message};
}

void check(sht_status status) {
    if (status != SHT_OK) {
        die(sht_status_name(status), sht_last_error_message());
    }
}

struct OperatorDeleter {
    void operator()(sht_operator *p) const { sht_operator_free(p); }
};
struct PovmDeleter {
    void operator()(sht_povm *p) const { sht_povm_free(p); }
};
struct ShadowsDeleter {
    void operator()(sht_shadows *p) const { sht_shadows_free(p); }
};
struct ResultDeleter {
    void operator()(sht_anneal_result *p) const { sht_anneal_result_free(p); }
};
using OperatorPtr = std::unique_ptr<sht_operator, OperatorDeleter>;
using PovmPtr = std::unique_ptr<sht_povm, PovmDeleter>;
using ShadowsPtr = std::unique_ptr<sht_shadows, ShadowsDeleter>;
using ResultPtr = std::unique_ptr<sht_anneal_result, ResultDeleter>;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        die("IoError", "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Temp-file-then-rename so consumers never observe a partial file.
void atomic_write(const std::string &path, const std::string &content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            die("IoError", "cannot write '" + tmp + "'");
        }
        out << content;
        if (!out.flush()) {
            die("IoError", "failed writing '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        die("IoError", "cannot move '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

void emit(const std::string &content, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        atomic_write(out_path, content);
    }
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

bool is_builtin_povm_name(const std::string &arg) {
    static const char *names[] = {"octahedron",   "tetrahedron",       "cube",
                                  "cuboctahedron", "icosahedron",       "dodecahedron",
                                  "icosidodecahedron", "sic", "inverted-tetrahedron"};
    for (const char *name : names) {
        if (arg == name) {
            return true;
        }
    }
    return false;
}

PovmPtr load_povm(const std::string &arg) {
    sht_povm *povm = nullptr;
    if (is_builtin_povm_name(arg)) {
        check(sht_povm_builtin(arg.c_str(), &povm));
    } else {
        check(sht_povm_from_json(read_file(arg).c_str(), &povm));
    }
    return PovmPtr(povm);
}

OperatorPtr projector_from_direction(const std::array<double, 3> &v) {
    double bloch[4] = {1.0, v[0], v[1], v[2]};
    sht_operator *op = nullptr;
    check(sht_operator_from_bloch(bloch, &op));
    return OperatorPtr(op);
}

// Effect directions of a qubit measurement, unit-normalized.
std::vector<std::array<double, 3>> povm_directions(const sht_povm *povm) {
    std::vector<std::array<double, 3>> dirs;
    for (size_t k = 0; k < sht_povm_outcomes(povm); ++k) {
        sht_operator *effect = nullptr;
        check(sht_povm_effect(povm, k, &effect));
        OperatorPtr guard(effect);
        double bloch[4];
        check(sht_operator_to_bloch(effect, bloch));
        double len = std::sqrt(bloch[1] * bloch[1] + bloch[2] * bloch[2] + bloch[3] * bloch[3]);
        if (len < 1e-14) {
            die("DegenerateError", "effect has no direction");
        }
        dirs.push_back({bloch[1] / len, bloch[2] / len, bloch[3] / len});
    }
    return dirs;
}

struct NamedOperators {
    std::vector<std::string> ids;
    std::vector<OperatorPtr> ops;

    std::vector<const sht_operator *> raw() const {
        std::vector<const sht_operator *> out;
        out.reserve(ops.size());
        for (const auto &op : ops) {
            out.push_back(op.get());
        }
        return out;
    }
};

NamedOperators projections_of(const char *builtin, const char *prefix) {
    sht_povm *povm = nullptr;
    check(sht_povm_builtin(builtin, &povm));
    PovmPtr guard(povm);
    NamedOperators out;
    size_t k = 0;
    for (const auto &v : povm_directions(povm)) {
        out.ops.push_back(projector_from_direction(v));
        out.ids.push_back(prefix + std::to_string(k++));
    }
    return out;
}

NamedOperators load_observables(const std::string &arg) {
    NamedOperators out;
    if (arg == "pauli-eigenprojections") {
        const char *ids[] = {"x+", "x-", "y+", "y-", "z+", "z-"};
        const std::array<double, 3> dirs[] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                              {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
        for (int i = 0; i < 6; ++i) {
            out.ops.push_back(projector_from_direction(dirs[i]));
            out.ids.push_back(ids[i]);
        }
        return out;
    }
    if (arg == "tetrahedron-projections") {
        return projections_of("tetrahedron", "t");
    }
    if (arg == "inverted-tetrahedron-projections") {
        return projections_of("inverted-tetrahedron", "it");
    }
    json parsed = json::parse(read_file(arg), nullptr, false);
    if (parsed.is_discarded()) {
        die("ParseError", "cannot parse '" + arg + "' as JSON");
    }
    const json *list = &parsed;
    if (parsed.is_object() && parsed.contains("observables")) {
        list = &parsed.at("observables");
    }
    if (!list->is_array() || list->empty()) {
        die("ParseError", "'" + arg + "' holds no observables");
    }
    size_t index = 0;
    for (const auto &entry : *list) {
        sht_operator *op = nullptr;
        check(sht_operator_from_json(entry.dump().c_str(), &op));
        out.ops.push_back(OperatorPtr(op));
        out.ids.push_back("obs" + std::to_string(index++));
    }
    return out;
}

OperatorPtr load_single_operator(const std::string &arg) {
    if (arg == "sigma-x" || arg == "sigma-y" || arg == "sigma-z") {
        int index = arg == "sigma-x" ? 1 : (arg == "sigma-y" ? 2 : 3);
        sht_operator *op = nullptr;
        check(sht_pauli(index, &op));
        return OperatorPtr(op);
    }
    NamedOperators all = load_observables(arg);
    return std::move(all.ops.front());
}

json povm_json(const sht_povm *povm) {
    char *text = nullptr;
    check(sht_povm_to_json(povm, &text));
    json out = json::parse(text);
    sht_string_free(text);
    return out;
}

json operator_json(const sht_operator *op) {
    char *text = nullptr;
    check(sht_operator_to_json(op, &text));
    json out = json::parse(text);
    sht_string_free(text);
    return out;
}

uint64_t resolve_seed(const std::optional<uint64_t> &seed) {
    if (seed.has_value()) {
        return *seed;
    }
    std::random_device device;
    return (static_cast<uint64_t>(device()) << 32) ^ device();
}

// ---- subcommand handlers ---------------------------------------------------

int run_povm_validate(const std::string &path) {
    std::string text = read_file(path);
    sht_povm *povm = nullptr;
    check(sht_povm_from_json(text.c_str(), &povm));
    PovmPtr guard(povm);
    json report{{"valid", true},
                {"dim", sht_povm_dim(povm)},
                {"outcomes", sht_povm_outcomes(povm)},
                {"informationally_complete",
                 sht_povm_is_informationally_complete(povm) == 1}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

int run_povm_show(const std::string &name, const std::string &out_path) {
    PovmPtr povm = load_povm(name);
    emit(povm_json(povm.get()).dump(2) + "\n", out_path);
    return 0;
}

int run_shadows(const std::string &povm_arg, const std::string &method,
                const std::string &out_path) {
    PovmPtr povm = load_povm(povm_arg);
    sht_shadow_method m = SHT_SHADOW_GENERAL;
    if (method == "symmetric") {
        m = SHT_SHADOW_SYMMETRIC;
    } else if (method == "bloch") {
        m = SHT_SHADOW_BLOCH;
    } else if (method != "general") {
        die("UsageError", "unknown method '" + method + "'");
    }
    sht_shadows *shadows = nullptr;
    check(sht_shadows_compute(povm.get(), m, &shadows));
    ShadowsPtr guard(shadows);

    json shadow_list = json::array();
    for (size_t k = 0; k < sht_shadows_count(shadows); ++k) {
        sht_operator *op = nullptr;
        check(sht_shadows_get(shadows, k, &op));
        OperatorPtr op_guard(op);
        shadow_list.push_back(operator_json(op));
    }
    json output{{"dim", sht_povm_dim(povm.get())},
                {"method", method},
                {"count", sht_shadows_count(shadows)},
                {"shadows", std::move(shadow_list)}};
    if (m == SHT_SHADOW_SYMMETRIC) {
        double a = 0.0, b = 0.0;
        check(sht_shadows_symmetric_ab(shadows, &a, &b));
        output["a"] = a;
        output["b"] = b;
    }
    emit(output.dump(2) + "\n", out_path);
    return 0;
}

int run_shadow_norm(const std::string &povm_arg, const std::string &observables_arg,
                    bool average, int grid, const std::string &out_path) {
    PovmPtr povm = load_povm(povm_arg);
    std::ostringstream csv;
    csv << "observable_id,squared_norm,worst_state_bloch_x,worst_state_bloch_y,"
           "worst_state_bloch_z\n";
    if (!observables_arg.empty()) {
        NamedOperators observables = load_observables(observables_arg);
        for (size_t i = 0; i < observables.ops.size(); ++i) {
            if (average) {
                double value = 0.0;
                check(sht_average_squared_norm(povm.get(), observables.ops[i].get(), &value));
                csv << observables.ids[i] << "," << format_double(value) << ",,,\n";
            } else {
                double value = 0.0;
                sht_operator *worst = nullptr;
                check(sht_squared_shadow_norm(povm.get(), observables.ops[i].get(), &value,
                                              &worst));
                OperatorPtr worst_guard(worst);
                csv << observables.ids[i] << "," << format_double(value);
                if (sht_operator_dim(worst) == 2) {
                    double bloch[4];
                    check(sht_operator_to_bloch(worst, bloch));
                    csv << "," << format_double(bloch[1]) << "," << format_double(bloch[2])
                        << "," << format_double(bloch[3]) << "\n";
                } else {
                    csv << ",,,\n";
                }
            }
        }
    }
    if (grid > 0) {
        double value = 0.0;
        check(sht_max_projection_norm_grid(povm.get(), grid, &value));
        csv << "grid-max," << format_double(value) << ",,,\n";
    }
    if (observables_arg.empty() && grid <= 0) {
        die("UsageError", "need --observables and/or --grid");
    }
    emit(csv.str(), out_path);
    return 0;
}

int run_simulate(const std::string &povm_arg, const std::string &state_arg,
                 const std::string &observable_arg, uint64_t shots, uint32_t median_groups,
                 const std::optional<uint64_t> &seed_opt, const std::string &out_path) {
    PovmPtr povm = load_povm(povm_arg);
    OperatorPtr state = load_single_operator(state_arg);
    OperatorPtr observable = load_single_operator(observable_arg);
    uint64_t seed = resolve_seed(seed_opt);

    const sht_povm *povms[] = {povm.get()};
    const sht_operator *states[] = {state.get()};
    const sht_operator *factors[] = {observable.get()};
    double estimate = 0.0, variance = 0.0;
    check(sht_simulate_estimate(povms, states, factors, 1, shots, median_groups, seed,
                                &estimate, &variance));
    double norm = 0.0;
    check(sht_squared_shadow_norm(povm.get(), observable.get(), &norm, nullptr));

    json output{{"estimate", estimate},
                {"empirical_variance", variance},
                {"shots", shots},
                {"seed", seed},
                {"squared_shadow_norm", norm}};
    if (median_groups > 1) {
        output["median_groups"] = median_groups;
    }
    emit(output.dump(2) + "\n", out_path);
    return 0;
}

std::string trace_path_for(const std::string &out_path) {
    std::filesystem::path p(out_path);
    p.replace_extension();
    return p.string() + ".trace.csv";
}

int run_optimize(const std::string &observables_arg, uint32_t outcomes, uint64_t iterations,
                 uint32_t restarts, size_t qubits, bool factorized,
                 const std::optional<uint64_t> &seed_opt, const std::string &out_path) {
    sht_anneal_config config;
    sht_anneal_config_init(&config);
    config.outcomes = outcomes;
    config.iterations = iterations;
    config.restarts = restarts;
    config.seed = resolve_seed(seed_opt);

    ResultPtr result;
    if (factorized) {
        json parsed = json::parse(read_file(observables_arg), nullptr, false);
        if (parsed.is_discarded() || !parsed.contains("qubits") ||
            !parsed.contains("observables")) {
            die("ParseError", "factorized observables need {\"qubits\", \"observables\"}");
        }
        size_t sites = parsed.at("qubits").get<size_t>();
        if (qubits != 0 && qubits != sites) {
            die("UsageError", "--qubits disagrees with the observables file");
        }
        std::vector<OperatorPtr> storage;
        std::vector<const sht_operator *> raw;
        size_t count = 0;
        for (const auto &entry : parsed.at("observables")) {
            if (!entry.contains("factors") || entry.at("factors").size() != sites) {
                die("NotFactorizedError", "each observable needs one factor per qubit");
            }
            for (const auto &factor : entry.at("factors")) {
                sht_operator *op = nullptr;
                check(sht_operator_from_json(factor.dump().c_str(), &op));
                storage.push_back(OperatorPtr(op));
                raw.push_back(storage.back().get());
            }
            ++count;
        }
        if (count == 0) {
            die("ParseError", "no observables given");
        }
        sht_anneal_result *r = nullptr;
        check(sht_anneal_factorized(sites, raw.data(), count, &config, &r));
        result.reset(r);
    } else {
        NamedOperators observables = load_observables(observables_arg);
        auto raw = observables.raw();
        sht_anneal_result *r = nullptr;
        check(sht_anneal_single_qubit(raw.data(), raw.size(), &config, &r));
        result.reset(r);
    }

    sht_povm *best = nullptr;
    check(sht_anneal_result_best_povm(result.get(), &best));
    PovmPtr best_guard(best);

    json restart_list = json::array();
    for (size_t r = 0; r < sht_anneal_result_restart_count(result.get()); ++r) {
        double objective = 0.0;
        check(sht_anneal_result_restart(result.get(), r, &objective, nullptr));
        restart_list.push_back(objective);
    }

    json output{{"best_objective", sht_anneal_result_best_objective(result.get())},
                {"best_povm", povm_json(best)},
                {"restart_best_objectives", std::move(restart_list)},
                {"outcomes", outcomes},
                {"iterations", iterations},
                {"restarts", restarts},
                {"seed", config.seed},
                {"factorized", factorized}};
    if (sht_anneal_result_degenerate_targets(result.get()) == 1) {
        output["degenerate_targets"] = true;
    }

    if (!out_path.empty()) {
        size_t count = sht_anneal_result_trace_count(result.get());
        std::vector<uint64_t> iters(count);
        std::vector<double> values(count);
        check(sht_anneal_result_trace(result.get(), iters.data(), values.data()));
        std::ostringstream csv;
        csv << "iteration,best_objective\n";
        for (size_t i = 0; i < count; ++i) {
            csv << iters[i] << "," << format_double(values[i]) << "\n";
        }
        std::string trace_path = trace_path_for(out_path);
        atomic_write(trace_path, csv.str());
        output["trace_csv"] = trace_path;
    }
    emit(output.dump(2) + "\n", out_path);
    return 0;
}

struct BenchRow {
    std::string id;
    double expected;
    double actual;
};

int run_bench(const std::string &suite, const std::string &out_path) {
    if (suite != "paper") {
        die("UsageError", "unknown benchmark suite '" + suite + "'");
    }
    std::vector<BenchRow> rows;
    auto norm_rows = [&](const char *povm_name, const NamedOperators &targets,
                         const std::string &prefix, double expected) {
        PovmPtr povm = load_povm(povm_name);
        for (size_t i = 0; i < targets.ops.size(); ++i) {
            double value = 0.0;
            check(sht_squared_shadow_norm(povm.get(), targets.ops[i].get(), &value, nullptr));
            rows.push_back({prefix + targets.ids[i], expected, value});
        }
    };

    norm_rows("tetrahedron", load_observables("tetrahedron-projections"),
              "tetrahedron_norm_", 2.0);
    norm_rows("octahedron", load_observables("pauli-eigenprojections"),
              "octahedron_norm_", 1.5);
    norm_rows("inverted-tetrahedron", load_observables("tetrahedron-projections"),
              "inverted_tetrahedron_norm_", 1.0);

    const struct {
        const char *name;
        double a;
    } solids[] = {{"tetrahedron", 6.0},   {"octahedron", 9.0},    {"cube", 12.0},
                  {"cuboctahedron", 18.0}, {"icosahedron", 18.0},  {"dodecahedron", 30.0},
                  {"icosidodecahedron", 45.0}};
    for (const auto &solid : solids) {
        PovmPtr povm = load_povm(solid.name);
        // The symmetric method cross-checks the closed form against direct
        // frame inversion, so success here certifies the (a, b) values.
        sht_shadows *shadows = nullptr;
        check(sht_shadows_compute(povm.get(), SHT_SHADOW_SYMMETRIC, &shadows));
        ShadowsPtr guard(shadows);
        double a = 0.0, b = 0.0;
        check(sht_shadows_symmetric_ab(shadows, &a, &b));
        rows.push_back({std::string(solid.name) + "_a", solid.a, a});
        rows.push_back({std::string(solid.name) + "_b", -1.0, b});
    }

    {
        PovmPtr octahedron = load_povm("octahedron");
        double bound = 0.0;
        check(sht_octahedron_bound(octahedron.get(), &bound));
        rows.push_back({"octahedron_bound", 1.5, bound});
    }

    const double tolerance = 1e-9;
    bool all_ok = true;
    std::ostringstream table;
    table << "id,expected,actual,abs_error,status\n";
    for (const auto &row : rows) {
        double error = std::abs(row.actual - row.expected);
        bool ok = error <= tolerance;
        all_ok = all_ok && ok;
        table << row.id << "," << format_double(row.expected) << ","
              << format_double(row.actual) << "," << format_double(error) << ","
              << (ok ? "pass" : "FAIL") << "\n";
    }
    emit(table.str(), out_path);
    if (!out_path.empty()) {
        std::cout << table.str();
    }
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"classical shadow estimation with generalised measurements"};
    app.require_subcommand(1);

    // povm
    auto *povm_cmd = app.add_subcommand("povm", "validate or export measurements");
    povm_cmd->require_subcommand(1);
    std::string validate_path;
    auto *validate_cmd = povm_cmd->add_subcommand("validate", "validate a measurement file");
    validate_cmd->add_option("file", validate_path, "measurement JSON file")->required();
    std::string show_name, show_out;
    auto *show_cmd = povm_cmd->add_subcommand("show", "print a named or file measurement");
    show_cmd->add_option("name", show_name, "builtin name or JSON file")->required();
    show_cmd->add_option("--out", show_out, "output path");

    // shadows
    auto *shadows_cmd = app.add_subcommand("shadows", "compute classical shadows");
    std::string shadows_povm, shadows_method = "general", shadows_out;
    shadows_cmd->add_option("--povm", shadows_povm, "measurement (builtin name or file)")
        ->required();
    shadows_cmd->add_option("--method", shadows_method, "general|symmetric|bloch");
    shadows_cmd->add_option("--out", shadows_out, "output path");

    // shadow-norm
    auto *norm_cmd = app.add_subcommand("shadow-norm", "evaluate squared shadow norms");
    std::string norm_povm, norm_observables, norm_out;
    bool norm_average = false;
    int norm_grid = 0;
    norm_cmd->add_option("--povm", norm_povm, "measurement (builtin name or file)")->required();
    norm_cmd->add_option("--observables", norm_observables, "observables (builtin or file)");
    norm_cmd->add_flag("--average", norm_average, "Haar-average figure instead of worst case");
    norm_cmd->add_option("--grid", norm_grid, "max projection norm over a sphere grid");
    norm_cmd->add_option("--out", norm_out, "output CSV path");

    // simulate
    auto *sim_cmd = app.add_subcommand("simulate", "sample outcomes and estimate an observable");
    std::string sim_povm, sim_state, sim_observable, sim_out;
    uint64_t sim_shots = 0;
    uint32_t sim_groups = 1;
    std::optional<uint64_t> sim_seed;
    sim_cmd->add_option("--povm", sim_povm, "measurement (builtin name or file)")->required();
    sim_cmd->add_option("--state", sim_state, "density operator file")->required();
    sim_cmd->add_option("--observable", sim_observable, "observable file or sigma-x/y/z")
        ->required();
    sim_cmd->add_option("--shots", sim_shots, "number of measurement repetitions")->required();
    sim_cmd->add_option("--median-of-means", sim_groups, "number of median groups (1 = mean)");
    sim_cmd->add_option("--seed", sim_seed, "sampling seed (auto-chosen when omitted)");
    sim_cmd->add_option("--out", sim_out, "output path");

    // optimize
    auto *opt_cmd = app.add_subcommand("optimize", "anneal a measurement for target observables");
    std::string opt_observables, opt_out;
    uint32_t opt_outcomes = 6, opt_restarts = 8;
    uint64_t opt_iterations = 20000;
    size_t opt_qubits = 0;
    bool opt_factorized = false;
    std::optional<uint64_t> opt_seed;
    opt_cmd->add_option("--observables", opt_observables, "targets (builtin or file)")
        ->required();
    opt_cmd->add_option("--outcomes", opt_outcomes, "number of measurement outcomes");
    opt_cmd->add_option("--iterations", opt_iterations, "iterations per restart");
    opt_cmd->add_option("--restarts", opt_restarts, "independent restarts");
    opt_cmd->add_option("--qubits", opt_qubits, "number of qubits (factorized mode)");
    opt_cmd->add_flag("--factorized", opt_factorized,
                      "targets are per-qubit factor lists; one measurement for all qubits");
    opt_cmd->add_option("--seed", opt_seed, "annealing seed (auto-chosen when omitted)");
    opt_cmd->add_option("--out", opt_out, "output path (plus <out>.trace.csv)");

    // bench
    auto *bench_cmd = app.add_subcommand("bench", "golden-value benchmark");
    std::string bench_suite, bench_out;
    bench_cmd->add_option("suite", bench_suite, "benchmark suite (paper)")->required();
    bench_cmd->add_option("--out", bench_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) {
            return run_povm_validate(validate_path);
        }
        if (show_cmd->parsed()) {
            return run_povm_show(show_name, show_out);
        }
        if (shadows_cmd->parsed()) {
            return run_shadows(shadows_povm, shadows_method, shadows_out);
        }
        if (norm_cmd->parsed()) {
            return run_shadow_norm(norm_povm, norm_observables, norm_average, norm_grid,
                                   norm_out);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(sim_povm, sim_state, sim_observable, sim_shots, sim_groups,
                                sim_seed, sim_out);
        }
        if (opt_cmd->parsed()) {
            return run_optimize(opt_observables, opt_outcomes, opt_iterations, opt_restarts,
                                opt_qubits, opt_factorized, opt_seed, opt_out);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_suite, bench_out);
        }
        std::cerr << "no command given\n";
        return 2;
    } catch (const CliError &e) {
        json error{{"error", {{"kind", e.kind}, {"message", e.message}}}};
        std::cerr << error.dump() << "\n";
        return 3;
    } catch (const std::exception &e) {
        json error{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}};
        std::cerr << error.dump() << "\n";
        return 3;
    }
}
