#include "absorbnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "absorbnet/errors.hpp"

namespace absorbnet {

std::string format_double(double v) {
    char buf[40];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

double parse_double(const std::string& text, const char* field) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw ParseError(std::string(field) + ": not a number: '" + text + "'");
    }
    return value;
}

namespace {

std::int64_t parse_int(const std::string& text, const char* field) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(std::string(field) + ": not an integer: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void require_header(std::ifstream& in, const std::string& expected,
                    const std::filesystem::path& path) {
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError(path.string() + ": empty file, expected header '" + expected + "'");
    }
    if (chomp(line) != expected) {
        throw IoError(path.string() + ": bad header, expected '" + expected + "', got '" +
                      chomp(line) + "'");
    }
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

// --- visits ------------------------------------------------------------------

VisitLoadResult load_visits(const std::filesystem::path& path) {
    auto in = open_in(path);
    require_header(in, "patient_id,month,zip3,state,age_group,race,icd10_codes", path);

    VisitLoadResult result;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        try {
            const std::vector<std::string> cells = split(line, ',');
            if (cells.size() != 7) {
                throw ParseError("expected 7 fields, got " + std::to_string(cells.size()));
            }
            if (cells[0].empty()) throw ParseError("patient_id: empty");
            std::vector<std::string> codes;
            if (!cells[6].empty()) {
                for (const std::string& raw : split(cells[6], ';')) {
                    codes.push_back(normalize_icd10(raw));
                }
            }
            result.records.push_back(VisitRecord{cells[0],
                                                 MonthIndex::parse(cells[1]),
                                                 RegionId(cells[2], cells[3]),
                                                 age_group_from_string(cells[4]),
                                                 race_from_string(cells[5]),
                                                 std::move(codes)});
        } catch (const ParseError& e) {
            result.rejected.push_back({line_no, e.what()});
        }
    }
    return result;
}

void write_visits(const std::vector<VisitRecord>& records, const std::filesystem::path& path) {
    std::vector<std::string> rows;
    rows.reserve(records.size());
    for (const VisitRecord& rec : records) {
        std::string codes;
        for (std::size_t i = 0; i < rec.service_codes.size(); ++i) {
            if (i > 0) codes += ';';
            codes += rec.service_codes[i];
        }
        rows.push_back(rec.patient_id + ',' + rec.month.str() + ',' + rec.region.zip3() + ',' +
                       rec.region.state() + ',' + to_string(rec.age_group) + ',' +
                       to_string(rec.race) + ',' + codes);
    }
    std::sort(rows.begin(), rows.end());

    auto out = open_out(path);
    out << "patient_id,month,zip3,state,age_group,race,icd10_codes\n";
    for (const std::string& row : rows) out << row << '\n';
    finish_write(out, path);
}

// --- regions / physicians ------------------------------------------------------

RegionTable load_regions(const std::filesystem::path& path) {
    auto in = open_in(path);
    require_header(in, "zip3,state,lat,lon", path);

    RegionTable table;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 4) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 4 fields");
        }
        RegionInfo info{RegionId(cells[0], cells[1]), parse_double(cells[2], "lat"),
                        parse_double(cells[3], "lon"),
                        {}};
        validate_region_info(info);
        if (table.by_zip3.count(cells[0])) {
            throw IoError(path.string() + ": duplicate zip3 '" + cells[0] + "'");
        }
        table.by_zip3.emplace(cells[0], info.region);
        table.by_id.emplace(info.region, std::move(info));
    }
    return table;
}

void write_regions(const std::vector<RegionInfo>& regions, const std::filesystem::path& path) {
    std::vector<std::string> rows;
    for (const RegionInfo& info : regions) {
        rows.push_back(info.region.zip3() + ',' + info.region.state() + ',' +
                       format_double(info.lat) + ',' + format_double(info.lon));
    }
    std::sort(rows.begin(), rows.end());
    auto out = open_out(path);
    out << "zip3,state,lat,lon\n";
    for (const std::string& row : rows) out << row << '\n';
    finish_write(out, path);
}

void load_physicians(const std::filesystem::path& path, RegionTable& table) {
    auto in = open_in(path);
    require_header(in, "zip3,month,physician_count", path);

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 3) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 3 fields");
        }
        const auto it = table.by_zip3.find(cells[0]);
        if (it == table.by_zip3.end()) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": unknown zip3 '" +
                          cells[0] + "'");
        }
        const MonthIndex month = MonthIndex::parse(cells[1]);
        const std::int64_t count = parse_int(cells[2], "physician_count");
        if (count < 0) {
            throw IoError(path.string() + ":" + std::to_string(line_no) +
                          ": negative physician_count");
        }
        table.by_id.at(it->second).physicians[month] = count;
    }
}

void write_physicians(const std::vector<RegionInfo>& regions, const std::filesystem::path& path) {
    std::vector<std::string> rows;
    for (const RegionInfo& info : regions) {
        for (const auto& [month, count] : info.physicians) {
            rows.push_back(info.region.zip3() + ',' + month.str() + ',' + std::to_string(count));
        }
    }
    std::sort(rows.begin(), rows.end());
    auto out = open_out(path);
    out << "zip3,month,physician_count\n";
    for (const std::string& row : rows) out << row << '\n';
    finish_write(out, path);
}

// --- stress profile ------------------------------------------------------------

StressProfile load_stress(const std::filesystem::path& path, const std::string& state) {
    auto in = open_in(path);
    require_header(in, "zip3,month,incoming,capacity", path);

    struct Cell {
        double incoming;
        double capacity;
    };
    std::map<std::pair<std::string, MonthIndex>, Cell> cells;
    std::set<std::string> zips;
    std::set<MonthIndex> months;

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        const std::vector<std::string> fields = split(line, ',');
        if (fields.size() != 4) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected 4 fields");
        }
        const MonthIndex month = MonthIndex::parse(fields[1]);
        const double incoming = parse_double(fields[2], "incoming");
        const double capacity = parse_double(fields[3], "capacity");
        if (incoming < 0.0 || capacity < 0.0) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": negative value");
        }
        if (!cells.emplace(std::make_pair(fields[0], month), Cell{incoming, capacity}).second) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": duplicate cell " +
                          fields[0] + "/" + month.str());
        }
        zips.insert(fields[0]);
        months.insert(month);
    }
    if (cells.empty()) throw IoError(path.string() + ": no stress rows");
    if (cells.size() != zips.size() * months.size()) {
        throw IoError(path.string() + ": incomplete (region, month) grid");
    }

    std::vector<RegionId> regions;
    for (const std::string& zip : zips) regions.emplace_back(zip, state);
    const std::vector<MonthIndex> month_axis(months.begin(), months.end());

    std::vector<double> load(regions.size() * month_axis.size());
    std::vector<double> capacity(regions.size() * month_axis.size());
    for (std::size_t t = 0; t < month_axis.size(); ++t) {
        for (std::size_t i = 0; i < regions.size(); ++i) {
            const Cell& cell = cells.at({regions[i].zip3(), month_axis[t]});
            load[t * regions.size() + i] = cell.incoming;
            capacity[t * regions.size() + i] = cell.capacity;
        }
    }
    return StressProfile(std::move(regions), month_axis, std::move(load), std::move(capacity));
}

void write_stress(const StressProfile& profile, const std::filesystem::path& path) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < profile.region_count(); ++i) {
        for (std::size_t t = 0; t < profile.month_count(); ++t) {
            rows.push_back(profile.regions()[i].zip3() + ',' + profile.months()[t].str() + ',' +
                           format_double(profile.load(i, t)) + ',' +
                           format_double(profile.capacity(i, t)));
        }
    }
    std::sort(rows.begin(), rows.end());
    auto out = open_out(path);
    out << "zip3,month,incoming,capacity\n";
    for (const std::string& row : rows) out << row << '\n';
    finish_write(out, path);
}

// --- network -------------------------------------------------------------------

void write_network(const FlowNetwork& net, const std::filesystem::path& path) {
    const std::size_t n = net.size();
    std::set<std::string> zips;
    for (const RegionId& node : net.nodes()) {
        if (!zips.insert(node.zip3()).second) {
            throw IoError("network file format needs unique zip3 node keys; duplicate '" +
                          node.zip3() + "'");
        }
    }

    auto out = open_out(path);
    out << "src_zip3,dst_zip3,weight\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = net.weight(i, j);
            if (w > 0.0) {
                out << net.node(i).zip3() << ',' << net.node(j).zip3() << ','
                    << format_double(w) << '\n';
            }
        }
    }
    out << "#totals\n";
    out << "zip3,incoming_total\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << net.node(i).zip3() << ',' << format_double(net.incoming_total(i)) << '\n';
    }
    finish_write(out, path);
}

FlowNetwork load_network(const std::filesystem::path& path, const std::string& state,
                         const std::string& period) {
    auto in = open_in(path);
    require_header(in, "src_zip3,dst_zip3,weight", path);

    struct Edge {
        std::string src;
        std::string dst;
        double weight;
    };
    std::vector<Edge> edges;
    std::map<std::string, double> totals;

    std::string line;
    std::size_t line_no = 1;
    bool in_totals = false;
    bool totals_header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        if (line == "#totals") {
            in_totals = true;
            continue;
        }
        const std::vector<std::string> cells = split(line, ',');
        if (!in_totals) {
            if (cells.size() != 3) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 3 fields");
            }
            const double w = parse_double(cells[2], "weight");
            if (w < 0.0) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": negative weight");
            }
            edges.push_back({cells[0], cells[1], w});
        } else if (!totals_header_seen) {
            if (line != "zip3,incoming_total") {
                throw IoError(path.string() + ": expected 'zip3,incoming_total' after #totals");
            }
            totals_header_seen = true;
        } else {
            if (cells.size() != 2) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 2 fields");
            }
            const double t = parse_double(cells[1], "incoming_total");
            if (t < 0.0) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": negative incoming_total");
            }
            if (!totals.emplace(cells[0], t).second) {
                throw IoError(path.string() + ":" + std::to_string(line_no) +
                              ": duplicate total for '" + cells[0] + "'");
            }
        }
    }
    if (!totals_header_seen) {
        throw IoError(path.string() + ": missing #totals section");
    }

    // the totals block lists every node; edges may only reference them
    std::vector<RegionId> nodes;
    nodes.reserve(totals.size());
    for (const auto& [zip, total] : totals) nodes.emplace_back(zip, state);

    const std::size_t n = nodes.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(nodes[i].zip3(), i);

    std::vector<double> weights(n * n, 0.0);
    for (const Edge& e : edges) {
        const auto si = index.find(e.src);
        const auto di = index.find(e.dst);
        if (si == index.end() || di == index.end()) {
            throw IoError(path.string() + ": edge references zip3 missing from #totals: " +
                          e.src + "->" + e.dst);
        }
        weights[si->second * n + di->second] += e.weight;
    }
    std::vector<double> totals_vec(n);
    for (std::size_t i = 0; i < n; ++i) totals_vec[i] = totals.at(nodes[i].zip3());

    const std::string label = period.empty() ? path.stem().string() : period;
    return FlowNetwork(label, std::move(nodes), std::move(weights), std::move(totals_vec));
}

// --- derived profiles ------------------------------------------------------------

StressProfile stress_from_corpus(const std::vector<VisitRecord>& records,
                                 const RegionTable& regions, double rho) {
    if (records.empty()) throw StructuralError("stress profile: no visit records");
    if (!(rho > 0.0)) throw ConfigError("stress profile: rho must be positive");

    std::set<RegionId> region_set;
    MonthIndex lo = records.front().month;
    MonthIndex hi = records.front().month;
    for (const VisitRecord& rec : records) {
        region_set.insert(rec.region);
        lo = std::min(lo, rec.month);
        hi = std::max(hi, rec.month);
    }
    std::vector<RegionId> region_axis(region_set.begin(), region_set.end());
    std::vector<MonthIndex> month_axis;
    for (std::int64_t o = lo.ordinal(); o <= hi.ordinal(); ++o) {
        month_axis.push_back(MonthIndex::from_ordinal(o));
    }

    const std::size_t n = region_axis.size();
    std::vector<double> load(n * month_axis.size(), 0.0);
    std::vector<double> capacity(n * month_axis.size(), 0.0);

    std::map<RegionId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(region_axis[i], i);
    for (const VisitRecord& rec : records) {
        const std::size_t t = static_cast<std::size_t>(rec.month.ordinal() - lo.ordinal());
        load[t * n + index.at(rec.region)] += 1.0;
    }

    const CapacityModel model{rho, CapacityModel::Source::physician_counts};
    for (std::size_t i = 0; i < n; ++i) {
        const auto rit = regions.by_id.find(region_axis[i]);
        if (rit == regions.by_id.end()) {
            throw StructuralError("stress profile: region " + region_axis[i].zip3() +
                                  " missing from region table");
        }
        for (std::size_t t = 0; t < month_axis.size(); ++t) {
            const auto pit = rit->second.physicians.find(month_axis[t]);
            if (pit == rit->second.physicians.end()) {
                throw StructuralError("stress profile: no physician count for " +
                                      region_axis[i].zip3() + " at " + month_axis[t].str());
            }
            capacity[t * n + i] = capacity_from_physicians(pit->second, model);
        }
    }
    return StressProfile(std::move(region_axis), std::move(month_axis), std::move(load),
                         std::move(capacity));
}

// --- config ----------------------------------------------------------------------

RunConfig load_config(const std::filesystem::path& path) {
    auto in = open_in(path);
    RunConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected key=value");
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "rho") {
                cfg.rho = parse_double(value, "rho");
            } else if (key == "v_max") {
                cfg.v_max = static_cast<int>(parse_int(value, "v_max"));
            } else if (key == "clamp") {
                cfg.clamp = value == "true" || value == "1";
            } else if (key == "distance_weighting") {
                if (value == "flow_weighted") {
                    cfg.distance_weighting = DistanceWeighting::flow_weighted;
                } else if (value == "unweighted") {
                    cfg.distance_weighting = DistanceWeighting::unweighted;
                } else {
                    throw ConfigError("distance_weighting: unknown value '" + value + "'");
                }
            } else if (key == "age_old_boundary") {
                cfg.age_old_boundary = static_cast<int>(parse_int(value, "age_old_boundary"));
            } else if (key == "stressed_fraction") {
                cfg.scenario.stressed_fraction = parse_double(value, "stressed_fraction");
            } else if (key == "overload") {
                cfg.scenario.overload = parse_double(value, "overload");
            } else if (key == "unstressed_headroom") {
                cfg.scenario.unstressed_headroom = parse_double(value, "unstressed_headroom");
            } else if (key == "repetitions") {
                cfg.scenario.repetitions = static_cast<int>(parse_int(value, "repetitions"));
            } else if (key == "seed") {
                cfg.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
            } else if (key == "threads") {
                cfg.threads = static_cast<int>(parse_int(value, "threads"));
            } else if (key == "state") {
                if (!is_valid_state_code(value)) {
                    throw ConfigError("state: unknown code '" + value + "'");
                }
                cfg.state = value;
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }

    // fail fast on cross-field constraints
    if (!(cfg.rho > 0.0)) throw ConfigError("config: rho must be positive");
    if (cfg.v_max < 1) throw ConfigError("config: v_max must be >= 1");
    if (cfg.threads < 1) throw ConfigError("config: threads must be >= 1");
    cfg.scenario.seed = cfg.seed;
    cfg.scenario.clamp = cfg.clamp;
    validate(cfg.scenario);
    return cfg;
}

void apply_env_overrides(RunConfig& cfg) {
    if (const char* env = std::getenv("ABSORBNET_SEED")) {
        cfg.seed = static_cast<std::uint64_t>(parse_int(env, "ABSORBNET_SEED"));
        cfg.scenario.seed = cfg.seed;
    }
}

}  // namespace absorbnet
