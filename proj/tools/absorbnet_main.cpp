// absorbnet command-line tool: synthetic corpora, flow-network construction,
// structural metrics, absorptivity evaluation, perturbation sweeps and phase
// comparison reports. Every randomized subcommand is a pure function of its
// inputs and seed; running twice yields byte-identical files.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "absorbnet/absorptivity.hpp"
#include "absorbnet/builder.hpp"
#include "absorbnet/errors.hpp"
#include "absorbnet/io.hpp"
#include "absorbnet/metrics.hpp"
#include "absorbnet/scenario.hpp"
#include "absorbnet/stats.hpp"
#include "absorbnet/synth.hpp"

namespace fs = std::filesystem;
using namespace absorbnet;

namespace {

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        // lo:hi:count inclusive linspace
        const auto first = text.find(':');
        const auto second = text.find(':', first + 1);
        if (second == std::string::npos) {
            throw ConfigError("grid: expected lo:hi:count, got '" + text + "'");
        }
        const double lo = parse_double(text.substr(0, first), "grid lo");
        const double hi = parse_double(text.substr(first + 1, second - first - 1), "grid hi");
        const auto count = static_cast<int>(parse_double(text.substr(second + 1), "grid count"));
        if (count < 1) throw ConfigError("grid: count must be >= 1");
        if (count == 1) {
            grid.push_back(lo);
        } else {
            for (int i = 0; i < count; ++i) {
                grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(count - 1));
            }
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t pos = text.find(',', start);
            const std::string cell =
                pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start);
            grid.push_back(parse_double(cell, "grid value"));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    }
    return grid;
}

std::optional<std::set<AgeGroup>> parse_age_list(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::set<AgeGroup> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(',', start);
        out.insert(age_group_from_string(
            pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<std::set<Race>> parse_race_list(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::set<Race> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(',', start);
        out.insert(race_from_string(
            pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<fs::path> sorted_csvs(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::size_t flag_count(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt ? opt->count() : 0;
}

// Config/flag/env precedence: explicit flag > ABSORBNET_SEED (seed only) >
// config file > built-in default.
struct CommonOpts {
    std::string config_path;
    RunConfig cfg;

    void finalize(const CLI::App* cmd) {
        RunConfig loaded;
        if (!config_path.empty()) loaded = load_config(config_path);
        apply_env_overrides(loaded);
        const auto keep_flag = [&](const std::string& name, auto member) {
            if (flag_count(cmd, name) == 0) cfg.*member = loaded.*member;
        };
        keep_flag("--seed", &RunConfig::seed);
        keep_flag("--threads", &RunConfig::threads);
        keep_flag("--rho", &RunConfig::rho);
        keep_flag("--v-max", &RunConfig::v_max);
        keep_flag("--state", &RunConfig::state);
        if (flag_count(cmd, "--no-clamp") == 0) cfg.clamp = loaded.clamp;
        if (flag_count(cmd, "--reps") == 0) {
            cfg.scenario.repetitions = loaded.scenario.repetitions;
        }
        cfg.scenario.stressed_fraction = loaded.scenario.stressed_fraction;
        cfg.scenario.overload = loaded.scenario.overload;
        cfg.scenario.unstressed_headroom = loaded.scenario.unstressed_headroom;
        cfg.scenario.seed = cfg.seed;
        cfg.scenario.clamp = cfg.clamp;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "key=value config file");
    cmd->add_option("--seed", opts.cfg.seed, "RNG seed");
    cmd->add_option("--threads", opts.cfg.threads, "worker threads (output-invariant)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--state", opts.cfg.state, "state code scoping zip3-keyed files");
}

int run_synth(const CommonOpts& opts, const SynthParams& params, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const SynthCorpus corpus = generate_corpus(params);
    write_visits(corpus.visits, out_dir / "visits.csv");
    write_regions(corpus.regions, out_dir / "regions.csv");
    write_physicians(corpus.regions, out_dir / "physicians.csv");
    std::cout << "synth: " << corpus.visits.size() << " visit records, "
              << corpus.regions.size() << " regions -> " << out_dir.string() << "\n";
    (void)opts;
    return 0;
}

int run_build(const CommonOpts& opts, const fs::path& in_dir, const fs::path& out_dir,
              const CohortFilter& filter, const std::string& aggregate,
              const std::string& stress_out) {
    const VisitLoadResult loaded = load_visits(in_dir / "visits.csv");
    for (const RejectedRow& row : loaded.rejected) {
        std::cerr << "build: rejected line " << row.line << ": " << row.reason << "\n";
    }
    if (!loaded.rejected.empty()) {
        std::cerr << "build: " << loaded.rejected.size() << " rows rejected\n";
    }
    if (loaded.records.empty()) {
        std::cout << "build: no records, nothing to do\n";
        return 0;
    }

    const auto matrices = build_visit_matrices(loaded.records, filter);
    if (matrices.empty()) {
        std::cout << "build: filter matched no records, nothing to do\n";
        return 0;
    }

    std::vector<FlowNetwork> monthly;
    for (const auto& [month, matrix] : matrices) {
        monthly.push_back(build_flow_network(matrices, month, opts.cfg.v_max));
    }

    std::vector<FlowNetwork> nets;
    if (aggregate == "monthly") {
        nets = std::move(monthly);
    } else if (aggregate == "seasonal") {
        nets = aggregate_flows(monthly, AggregationScheme::seasonal);
    } else if (aggregate == "yearly") {
        nets = aggregate_flows(monthly, AggregationScheme::yearly);
    } else {
        throw ConfigError("build: unknown aggregation '" + aggregate + "'");
    }

    fs::create_directories(out_dir);
    for (const FlowNetwork& net : nets) {
        write_network(net, out_dir / (net.period() + ".csv"));
    }
    std::cout << "build: wrote " << nets.size() << " networks -> " << out_dir.string() << "\n";

    if (!stress_out.empty()) {
        RegionTable regions = load_regions(in_dir / "regions.csv");
        load_physicians(in_dir / "physicians.csv", regions);
        // stress always reflects the full influx, not the stratified cohort
        const StressProfile profile = stress_from_corpus(loaded.records, regions, opts.cfg.rho);
        write_stress(profile, stress_out);
        std::cout << "build: wrote stress profile -> " << stress_out << "\n";
    }
    return 0;
}

int run_metrics(const CommonOpts& opts, const fs::path& nets_dir, const std::string& regions_path,
                const fs::path& out_path) {
    std::optional<RegionTable> regions;
    if (!regions_path.empty()) regions = load_regions(regions_path);

    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + out_path.string());
    out << "period,nodes,edges,sigma,phi,density,heterogeneity,avg_distance_km\n";
    for (const fs::path& file : sorted_csvs(nets_dir)) {
        const FlowNetwork net = load_network(file, opts.cfg.state);
        const NetworkMetrics m = compute_metrics(net, regions ? &regions->by_id : nullptr,
                                                 opts.cfg.distance_weighting);
        out << net.period() << ',' << m.node_count << ',' << m.edge_count << ','
            << format_double(m.sigma) << ',' << format_double(m.phi) << ','
            << format_double(m.density) << ',' << format_double(m.heterogeneity) << ','
            << (m.avg_distance_km ? format_double(*m.avg_distance_km) : std::string()) << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed: " + out_path.string());
    std::cout << "metrics: wrote " << out_path.string() << "\n";
    return 0;
}

int run_absorb(const CommonOpts& opts, const std::string& pre_path,
               const std::string& during_path, const std::string& profile_path,
               const fs::path& out_path) {
    const FlowNetwork net_pre = load_network(pre_path, opts.cfg.state);
    const FlowNetwork net_during = load_network(during_path, opts.cfg.state);
    const StressProfile profile = load_stress(profile_path, opts.cfg.state);

    const PandemicComparison cmp =
        run_pandemic_scenario(net_pre, net_during, profile, opts.cfg.clamp);

    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + out_path.string());
    out << "t,lambda_O,lambda_W_pre,lambda_W_during,r_pre,r_during\n";
    for (std::size_t t = 0; t < profile.month_count(); ++t) {
        const auto opt = [](const std::optional<double>& v) {
            return v ? format_double(*v) : std::string();
        };
        out << profile.months()[t].str() << ',' << format_double(cmp.pre.lambda_baseline[t])
            << ',' << format_double(cmp.pre.lambda_networked[t]) << ','
            << format_double(cmp.during.lambda_networked[t]) << ',' << opt(cmp.pre.r_series[t])
            << ',' << opt(cmp.during.r_series[t]) << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed: " + out_path.string());

    std::cout << "absorb: r_pre=" << format_double(cmp.pre.r_total)
              << " r_during=" << format_double(cmp.during.r_total)
              << " skipped=" << cmp.pre.skipped_timesteps << "\n";
    return 0;
}

int run_sweep_cmd(const CommonOpts& opts, const std::string& net_path,
                  const std::string& characteristic, const std::string& grid_text,
                  const std::string& regions_path, const std::string& physicians_path,
                  const std::string& month_text, const fs::path& out_path) {
    const FlowNetwork net = load_network(net_path, opts.cfg.state);

    RegionTable regions = load_regions(regions_path);
    load_physicians(physicians_path, regions);
    const MonthIndex month = MonthIndex::parse(month_text);
    const CapacityModel model{opts.cfg.rho, CapacityModel::Source::physician_counts};
    std::vector<double> capacities;
    capacities.reserve(net.size());
    for (const RegionId& node : net.nodes()) {
        const auto rit = regions.by_id.find(node);
        if (rit == regions.by_id.end()) {
            throw StructuralError("sweep: region " + node.zip3() + " missing from regions file");
        }
        const auto pit = rit->second.physicians.find(month);
        if (pit == rit->second.physicians.end()) {
            throw StructuralError("sweep: no physician count for " + node.zip3() + " at " +
                                  month.str());
        }
        capacities.push_back(capacity_from_physicians(pit->second, model));
    }

    SweepSpec spec;
    if (characteristic == "sigma") {
        spec.characteristic = SweepSpec::Characteristic::sigma;
    } else if (characteristic == "density") {
        spec.characteristic = SweepSpec::Characteristic::density;
    } else if (characteristic == "heterogeneity") {
        spec.characteristic = SweepSpec::Characteristic::heterogeneity;
    } else {
        throw ConfigError("sweep: unknown characteristic '" + characteristic + "'");
    }
    spec.grid = parse_grid(grid_text);
    spec.repetitions = opts.cfg.scenario.repetitions;
    spec.seed = opts.cfg.seed;

    const std::vector<SweepPoint> curve =
        run_sweep(net, capacities, spec, opts.cfg.scenario, opts.cfg.threads);

    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + out_path.string());
    out << "characteristic,target,realized,mean_r,stddev_r,skipped\n";
    for (const SweepPoint& p : curve) {
        out << characteristic << ',' << format_double(p.target) << ','
            << format_double(p.realized) << ',' << format_double(p.mean_r) << ','
            << format_double(p.stddev_r) << ',' << p.skipped << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed: " + out_path.string());
    std::cout << "sweep: wrote " << curve.size() << " points -> " << out_path.string() << "\n";
    return 0;
}

std::map<std::string, std::map<std::string, double>> load_report_table(
    const fs::path& path, bool pair_by_order, std::vector<std::string>* skipped) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError(path.string() + ": empty file");
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();

    std::vector<std::string> header;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(',', start);
        header.push_back(pos == std::string::npos ? line.substr(start)
                                                  : line.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (header.size() < 2) throw IoError(path.string() + ": need a key and a value column");

    std::map<std::string, std::map<std::string, double>> table;
    std::set<std::string> incomplete;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        start = 0;
        for (;;) {
            const std::size_t pos = line.find(',', start);
            cells.push_back(pos == std::string::npos ? line.substr(start)
                                                     : line.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (cells.size() != header.size()) {
            throw IoError(path.string() + ": row width differs from header");
        }
        char key_buf[16];
        std::snprintf(key_buf, sizeof(key_buf), "%06zu", row_index);
        const std::string key = pair_by_order ? key_buf : cells[0];
        ++row_index;
        auto& row = table[key];
        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c].empty()) {
                incomplete.insert(header[c]);
                continue;
            }
            row[header[c]] = parse_double(cells[c], header[c].c_str());
        }
    }
    // characteristics with any missing cell cannot be tested; drop them
    if (!incomplete.empty()) {
        for (auto& [key, row] : table) {
            for (const std::string& name : incomplete) row.erase(name);
        }
        if (skipped != nullptr) {
            skipped->assign(incomplete.begin(), incomplete.end());
        }
    }
    return table;
}

int run_report(const std::string& pre_path, const std::string& during_path,
               const fs::path& out_path, bool paired, bool pair_by_order) {
    std::vector<std::string> skipped_pre, skipped_during;
    auto pre = load_report_table(pre_path, pair_by_order, &skipped_pre);
    auto during = load_report_table(during_path, pair_by_order, &skipped_during);
    for (const std::string& name : skipped_pre) {
        std::cerr << "report: skipping '" << name << "' (missing values in pre)\n";
        for (auto& [key, row] : during) row.erase(name);
    }
    for (const std::string& name : skipped_during) {
        std::cerr << "report: skipping '" << name << "' (missing values in during)\n";
        for (auto& [key, row] : pre) row.erase(name);
    }

    const PhaseSummary summary = summarize_phases(pre, during, paired);

    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + out_path.string());
    out << "characteristic,pre_mean,pre_min,pre_max,during_mean,during_min,during_max,"
           "mean_diff,t,df,p_value,significant\n";
    for (const CharacteristicSummary& row : summary.rows) {
        out << row.name << ',' << format_double(row.pre_mean) << ','
            << format_double(row.pre_min) << ',' << format_double(row.pre_max) << ','
            << format_double(row.during_mean) << ',' << format_double(row.during_min) << ','
            << format_double(row.during_max) << ',' << format_double(row.mean_diff) << ','
            << format_double(row.t) << ',' << format_double(row.df) << ','
            << format_double(row.p) << ',' << (row.significant ? "true" : "false") << '\n';
    }
    out.flush();
    if (!out) throw IoError("write failed: " + out_path.string());
    std::cout << "report: " << summary.rows.size() << " characteristics over "
              << summary.unit_count << " units -> " << out_path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"patient-flow network absorptivity toolkit"};
    app.require_subcommand(1);

    // synth ---------------------------------------------------------------
    CommonOpts synth_opts;
    SynthParams synth_params;
    std::string synth_out;
    std::string synth_start = "2020-01";
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic visit corpus");
    add_common(synth_cmd, synth_opts);
    synth_cmd->add_option("--out", synth_out, "output directory")->required();
    synth_cmd->add_option("--patients", synth_params.n_patients, "number of patients");
    synth_cmd->add_option("--regions", synth_params.n_regions, "number of regions");
    synth_cmd->add_option("--months", synth_params.n_months, "number of months");
    synth_cmd->add_option("--start", synth_start, "first month (YYYY-MM)");
    synth_cmd->add_option("--mean-visits", synth_params.mean_visits, "visits per patient-month");
    synth_cmd->add_option("--transit-prob", synth_params.transit_prob,
                          "chance the next month is spent in another region");
    synth_cmd->add_option("--hub-bias", synth_params.hub_bias, "region popularity exponent");
    synth_cmd->add_option("--physicians-baseline", synth_params.physicians_baseline,
                          "physicians per region before hub scaling");
    synth_cmd->add_option("--physicians-trend", synth_params.physicians_trend,
                          "physicians added per month");

    // build ---------------------------------------------------------------
    CommonOpts build_opts;
    std::string build_in, build_out, build_aggregate = "monthly";
    std::string build_age, build_race, build_service, build_stress_out;
    auto* build_cmd = app.add_subcommand("build", "construct flow networks from a corpus");
    add_common(build_cmd, build_opts);
    build_cmd->add_option("--in", build_in, "corpus directory (visits.csv, ...)")->required();
    build_cmd->add_option("--out", build_out, "output directory for network files")->required();
    build_cmd->add_option("--v-max", build_opts.cfg.v_max, "transit window in months");
    build_cmd->add_option("--aggregate", build_aggregate, "monthly|seasonal|yearly");
    build_cmd->add_option("--age", build_age, "cohort filter: age groups, comma separated");
    build_cmd->add_option("--race", build_race, "cohort filter: races, comma separated");
    build_cmd->add_option("--service", build_service, "cohort filter: chronic|acute_respiratory");
    build_cmd->add_option("--stress-out", build_stress_out,
                          "also derive a stress profile (uses --rho and physicians.csv)");
    build_cmd->add_option("--rho", build_opts.cfg.rho, "physician-to-patient ratio");

    // metrics ---------------------------------------------------------------
    CommonOpts metrics_opts;
    std::string metrics_nets, metrics_regions, metrics_out;
    auto* metrics_cmd = app.add_subcommand("metrics", "structural measures per network");
    add_common(metrics_cmd, metrics_opts);
    metrics_cmd->add_option("--nets", metrics_nets, "directory of network csv files")
        ->required();
    metrics_cmd->add_option("--regions", metrics_regions, "regions.csv for distances");
    metrics_cmd->add_option("--out", metrics_out, "output csv")->required();

    // absorb ---------------------------------------------------------------
    CommonOpts absorb_opts;
    std::string absorb_pre, absorb_during, absorb_profile, absorb_out;
    auto* absorb_cmd =
        app.add_subcommand("absorb", "evaluate two phase networks under one stress profile");
    add_common(absorb_cmd, absorb_opts);
    absorb_cmd->add_option("--pre", absorb_pre, "pre-phase network csv")->required();
    absorb_cmd->add_option("--during", absorb_during, "during-phase network csv")->required();
    absorb_cmd->add_option("--profile", absorb_profile, "stress.csv profile")->required();
    absorb_cmd->add_option("--out", absorb_out, "output csv")->required();
    absorb_cmd->add_flag("--no-clamp", "use the literal unclamped per-node residual");

    // sweep ---------------------------------------------------------------
    CommonOpts sweep_opts;
    std::string sweep_net, sweep_characteristic, sweep_grid, sweep_regions, sweep_physicians;
    std::string sweep_month, sweep_out;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "one-characteristic-at-a-time absorptivity sweep");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--net", sweep_net, "network csv")->required();
    sweep_cmd->add_option("--characteristic", sweep_characteristic,
                          "sigma|density|heterogeneity")->required();
    sweep_cmd->add_option("--grid", sweep_grid, "lo:hi:count or comma list")->required();
    sweep_cmd->add_option("--regions", sweep_regions, "regions.csv")->required();
    sweep_cmd->add_option("--physicians", sweep_physicians, "physicians.csv")->required();
    sweep_cmd->add_option("--month", sweep_month, "capacity month (YYYY-MM)")->required();
    sweep_cmd->add_option("--out", sweep_out, "output csv")->required();
    sweep_cmd->add_option("--rho", sweep_opts.cfg.rho, "physician-to-patient ratio");
    sweep_cmd->add_option("--reps", sweep_opts.cfg.scenario.repetitions,
                          "repetitions per grid point");
    sweep_cmd->add_flag("--no-clamp", "use the literal unclamped per-node residual");

    // report ---------------------------------------------------------------
    std::string report_pre, report_during, report_out, report_pair_by = "key";
    bool report_paired = false;
    auto* report_cmd = app.add_subcommand("report", "phase comparison with t-tests");
    report_cmd->add_option("--pre", report_pre, "pre-phase table csv")->required();
    report_cmd->add_option("--during", report_during, "during-phase table csv")->required();
    report_cmd->add_option("--out", report_out, "output csv")->required();
    report_cmd->add_flag("--paired", report_paired, "paired t-test instead of Welch");
    report_cmd->add_option("--pair-by", report_pair_by, "key|order row pairing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (synth_cmd->parsed()) {
            synth_opts.finalize(synth_cmd);
            synth_params.seed = synth_opts.cfg.seed;
            synth_params.state = synth_opts.cfg.state;
            synth_params.start_month = MonthIndex::parse(synth_start);
            return run_synth(synth_opts, synth_params, synth_out);
        }
        if (build_cmd->parsed()) {
            build_opts.finalize(build_cmd);
            CohortFilter filter;
            filter.age_groups = parse_age_list(build_age);
            filter.races = parse_race_list(build_race);
            if (!build_service.empty()) {
                filter.service_class = service_class_from_string(build_service);
            }
            return run_build(build_opts, build_in, build_out, filter, build_aggregate,
                             build_stress_out);
        }
        if (metrics_cmd->parsed()) {
            metrics_opts.finalize(metrics_cmd);
            return run_metrics(metrics_opts, metrics_nets, metrics_regions, metrics_out);
        }
        if (absorb_cmd->parsed()) {
            absorb_opts.finalize(absorb_cmd);
            if (absorb_cmd->count("--no-clamp") > 0) absorb_opts.cfg.clamp = false;
            return run_absorb(absorb_opts, absorb_pre, absorb_during, absorb_profile,
                              absorb_out);
        }
        if (sweep_cmd->parsed()) {
            sweep_opts.finalize(sweep_cmd);
            if (sweep_cmd->count("--no-clamp") > 0) {
                sweep_opts.cfg.clamp = false;
                sweep_opts.cfg.scenario.clamp = false;
            }
            return run_sweep_cmd(sweep_opts, sweep_net, sweep_characteristic, sweep_grid,
                                 sweep_regions, sweep_physicians, sweep_month, sweep_out);
        }
        if (report_cmd->parsed()) {
            if (report_pair_by != "key" && report_pair_by != "order") {
                throw ConfigError("report: --pair-by must be key or order");
            }
            return run_report(report_pre, report_during, report_out, report_paired,
                              report_pair_by == "order");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
