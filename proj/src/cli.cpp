#include "graphscan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphscan/ingest.hpp"
#include "graphscan/limit_theory.hpp"
#include "graphscan/power_mc.hpp"
#include "graphscan/rdpg.hpp"
#include "graphscan/sbm.hpp"
#include "graphscan/scan.hpp"

namespace graphscan::cli {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto from = s.find_first_not_of(" \t");
    if (from == std::string_view::npos) return {};
    const auto to = s.find_last_not_of(" \t");
    return s.substr(from, to - from + 1);
}

std::vector<std::string_view> split(std::string_view s, char delim) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint64_t parse_u64(std::string_view raw, const std::string& what) {
    const std::string_view s = trim(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error(fmt::format("{}: '{}' is not a nonnegative integer", what, raw));
    }
    return value;
}

std::size_t parse_size(std::string_view raw, const std::string& what) {
    return static_cast<std::size_t>(parse_u64(raw, what));
}

double parse_num(std::string_view raw, const std::string& what) {
    const std::string_view s = trim(raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error(fmt::format("{}: '{}' is not a number", what, raw));
    }
    return value;
}

std::vector<double> parse_num_list(std::string_view raw, const std::string& what) {
    std::vector<double> values;
    for (const auto part : split(raw, ',')) values.push_back(parse_num(part, what));
    return values;
}

std::vector<std::size_t> parse_size_list(std::string_view raw, const std::string& what) {
    std::vector<std::size_t> values;
    for (const auto part : split(raw, ',')) values.push_back(parse_size(part, what));
    return values;
}

bool parse_bool(std::string_view raw, const std::string& what) {
    const std::string_view s = trim(raw);
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::runtime_error(fmt::format("{}: '{}' is not true or false", what, raw));
}

// Either a comma list of values or lo:hi:count for count evenly spaced
// values with both endpoints included.
std::vector<double> parse_grid(const std::string& raw, const std::string& what) {
    if (raw.find(':') == std::string::npos) return parse_num_list(raw, what);
    const auto parts = split(raw, ':');
    if (parts.size() != 3) {
        throw std::runtime_error(fmt::format("{}: range form is lo:hi:count, got '{}'", what, raw));
    }
    const double lo = parse_num(parts[0], what);
    const double hi = parse_num(parts[1], what);
    const std::size_t count = parse_size(parts[2], what);
    if (count < 2) {
        throw std::runtime_error(fmt::format("{}: range form needs count >= 2", what));
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return values;
}

StatKind parse_stat(const std::string& name) {
    if (name == "psi") return StatKind::Psi;
    if (name == "phi") return StatKind::Phi;
    throw std::runtime_error(fmt::format("unknown statistic '{}': expected psi or phi", name));
}

char parse_delimiter(const std::string& raw) {
    if (raw.size() != 1) {
        throw std::runtime_error(fmt::format("delimiter must be a single character, got '{}'", raw));
    }
    return raw.front();
}

std::string num(double x) { return fmt::format("{:.12g}", x); }

// Model spec file: one key=value per line, '#' comments, blank lines
// ignored. kind=sbm takes blocks, p, h, delta, t_star, length,
// permute_labels; kind=rdpg takes dim, length, and one or more
// group=count:coords:concentration lines.
struct ModelSpec {
    std::variant<SbmSpec, RdpgSpec> model;
    std::vector<std::string> echo;  // meaningful input lines, for headers
};

struct SpecEntry {
    std::size_t line_no = 0;
    std::string key;
    std::string value;
    bool used = false;
};

class SpecReader {
  public:
    SpecReader(std::vector<SpecEntry> entries, std::string path)
        : entries_(std::move(entries)), path_(std::move(path)) {}

    std::optional<std::string> take(const std::string& key) {
        SpecEntry* found = nullptr;
        for (auto& entry : entries_) {
            if (entry.key != key) continue;
            if (found != nullptr) {
                throw std::runtime_error(
                    fmt::format("spec {}: key '{}' appears more than once", path_, key));
            }
            found = &entry;
        }
        if (found == nullptr) return std::nullopt;
        found->used = true;
        return found->value;
    }

    std::string require(const std::string& key) {
        auto value = take(key);
        if (!value) {
            throw std::runtime_error(fmt::format("spec {}: missing required key '{}'", path_, key));
        }
        return *value;
    }

    std::vector<std::string> take_all(const std::string& key) {
        std::vector<std::string> values;
        for (auto& entry : entries_) {
            if (entry.key != key) continue;
            entry.used = true;
            values.push_back(entry.value);
        }
        return values;
    }

    void finish() const {
        for (const auto& entry : entries_) {
            if (!entry.used) {
                throw std::runtime_error(fmt::format("spec {} line {}: unknown key '{}'", path_,
                                                     entry.line_no, entry.key));
            }
        }
    }

    const std::string& path() const { return path_; }

  private:
    std::vector<SpecEntry> entries_;
    std::string path_;
};

SbmSpec read_sbm_spec(SpecReader& r) {
    const std::string& path = r.path();
    const auto blocks = parse_size_list(r.require("blocks"), fmt::format("spec {}: blocks", path));
    const double p = parse_num(r.require("p"), fmt::format("spec {}: p", path));
    std::vector<double> h;
    if (auto v = r.take("h")) h = parse_num_list(*v, fmt::format("spec {}: h", path));
    double delta = 0.0;
    if (auto v = r.take("delta")) delta = parse_num(*v, fmt::format("spec {}: delta", path));
    std::size_t t_star = kNeverChanges;
    if (auto v = r.take("t_star"); v && trim(*v) != "never") {
        t_star = parse_size(*v, fmt::format("spec {}: t_star", path));
    }
    const std::size_t len = parse_size(r.require("length"), fmt::format("spec {}: length", path));
    bool permute = false;
    if (auto v = r.take("permute_labels")) {
        permute = parse_bool(*v, fmt::format("spec {}: permute_labels", path));
    }
    SbmSpec spec = planted_anomaly_spec(blocks, p, h, delta, t_star, len);
    spec.permute_labels = permute;
    return spec;
}

RdpgSpec read_rdpg_spec(SpecReader& r) {
    const std::string& path = r.path();
    RdpgSpec spec;
    spec.k = parse_size(r.require("dim"), fmt::format("spec {}: dim", path));
    spec.series_len = parse_size(r.require("length"), fmt::format("spec {}: length", path));
    const auto groups = r.take_all("group");
    if (groups.empty()) {
        throw std::runtime_error(fmt::format(
            "spec {}: kind=rdpg needs at least one group=count:coords:concentration line", path));
    }
    for (const auto& raw : groups) {
        const std::string what = fmt::format("spec {}: group", path);
        const auto parts = split(raw, ':');
        if (parts.size() != 3) {
            throw std::runtime_error(
                fmt::format("{}: expected count:coords:concentration, got '{}'", what, raw));
        }
        const std::size_t count = parse_size(parts[0], what);
        if (count == 0) throw std::runtime_error(fmt::format("{}: count must be positive", what));
        const auto coords = parse_num_list(parts[1], what);
        const double concentration = parse_num(parts[2], what);
        for (std::size_t i = 0; i < count; ++i) {
            spec.locations.push_back(coords);
            spec.concentrations.push_back(concentration);
        }
    }
    validate(spec);
    return spec;
}

ModelSpec load_model_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open spec file '{}'", path));
    std::vector<SpecEntry> entries;
    std::vector<std::string> echo;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view meat = trim(line);
        if (meat.empty() || meat.front() == '#') continue;
        const auto eq = meat.find('=');
        if (eq == std::string_view::npos) {
            throw std::runtime_error(
                fmt::format("spec {} line {}: expected key=value, got '{}'", path, line_no, line));
        }
        SpecEntry entry;
        entry.line_no = line_no;
        entry.key = std::string(trim(meat.substr(0, eq)));
        entry.value = std::string(trim(meat.substr(eq + 1)));
        if (entry.key.empty()) {
            throw std::runtime_error(fmt::format("spec {} line {}: empty key", path, line_no));
        }
        entries.push_back(std::move(entry));
        echo.emplace_back(meat);
    }
    SpecReader reader(std::move(entries), path);
    const std::string kind = reader.require("kind");
    ModelSpec result;
    if (kind == "sbm") {
        result.model = read_sbm_spec(reader);
    } else if (kind == "rdpg") {
        result.model = read_rdpg_spec(reader);
    } else {
        throw std::runtime_error(
            fmt::format("spec {}: unknown kind '{}': expected sbm or rdpg", path, kind));
    }
    reader.finish();
    result.echo = std::move(echo);
    return result;
}

const SbmSpec& require_sbm(const ModelSpec& spec, const std::string& command) {
    if (const auto* sbm = std::get_if<SbmSpec>(&spec.model)) return *sbm;
    throw std::runtime_error(fmt::format("{} needs a block-model spec (kind=sbm)", command));
}

// Writes to the --out path when given, to the fallback stream otherwise.
class OutputSink {
  public:
    OutputSink(const std::string& path, std::ostream& fallback) : path_(path) {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_.open(path, std::ios::binary);
        if (!file_) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
        stream_ = &file_;
    }

    std::ostream& stream() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) {
            throw std::runtime_error(
                fmt::format("write to {} failed", path_.empty() ? "output" : "'" + path_ + "'"));
        }
    }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
    std::string path_;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given, std::ostream& err) {
    if (given) return *given;
    std::random_device device;
    const std::uint64_t seed =
        (static_cast<std::uint64_t>(device()) << 32) | static_cast<std::uint64_t>(device());
    err << fmt::format("seed={}\n", seed);
    return seed;
}

void require_open_unit(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::runtime_error(
            fmt::format("alpha {} must lie strictly between 0 and 1", alpha));
    }
}

ParseResult read_series_file(const std::string& path, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open series file '{}'", path));
    ParseOptions options;
    options.delimiter = delimiter;
    return parse_series(in, options);
}

const std::string& checked_label(const VertexMap& map, VertexId v) {
    const std::string& label = map.label_of(v);
    if (label.find(',') != std::string::npos || label.find('\n') != std::string::npos) {
        throw std::runtime_error(
            fmt::format("vertex label '{}' cannot appear in comma-separated output", label));
    }
    return label;
}

struct GenerateOpts {
    std::string spec_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string delimiter = ",";
};

int cmd_generate(const GenerateOpts& o, std::ostream& out, std::ostream& err) {
    const ModelSpec spec = load_model_spec(o.spec_path);
    const std::uint64_t seed = resolve_seed(o.seed, err);
    GraphSeries series;
    std::size_t n = 0;
    if (const auto* sbm = std::get_if<SbmSpec>(&spec.model)) {
        series = sample_series(*sbm, seed);
        n = vertex_count(*sbm);
    } else {
        const auto& rdpg = std::get<RdpgSpec>(spec.model);
        series = sample_rdpg_series(rdpg, seed);
        n = rdpg.locations.size();
    }
    OutputSink sink(o.out_path, out);
    auto& os = sink.stream();
    for (const auto& line : spec.echo) os << "# spec: " << line << "\n";
    os << "# seed=" << seed << "\n";
    write_series(series, VertexMap::identity(n), os, parse_delimiter(o.delimiter));
    sink.finish();
    return 0;
}

struct ScanOpts {
    std::string in_path;
    std::size_t tau = 0;
    std::size_t ell = 0;
    int k = 0;
    std::string stat = "psi";
    std::string out_path;
    std::string delimiter = ",";
};

int cmd_scan(const ScanOpts& o, std::ostream& out) {
    const ParseResult parsed = read_series_file(o.in_path, parse_delimiter(o.delimiter));
    const ScanConfig cfg{o.tau, o.ell, o.k, parse_stat(o.stat), 1.0};
    const std::vector<ScanValue> rows = scan_series(parsed.series, cfg);
    OutputSink sink(o.out_path, out);
    auto& os = sink.stream();
    os << "t,S,argmax_vertex\n";
    for (const auto& row : rows) {
        os << fmt::format("{},{},{}\n", row.t, num(row.value),
                          checked_label(parsed.map, row.argmax_vertex));
    }
    sink.finish();
    return 0;
}

struct DetectOpts {
    std::string in_path;
    std::size_t tau = 20;
    std::size_t ell = 20;
    int k = 0;
    std::string stat = "psi";
    double threshold = 5.0;
    std::string out_path;
    std::string delimiter = ",";
};

int cmd_detect(const DetectOpts& o, std::ostream& out) {
    const ParseResult parsed = read_series_file(o.in_path, parse_delimiter(o.delimiter));
    const ScanConfig cfg{o.tau, o.ell, o.k, parse_stat(o.stat), 1.0};
    const std::vector<ScanValue> rows = scan_series(parsed.series, cfg);
    OutputSink sink(o.out_path, out);
    auto& os = sink.stream();
    for (const auto& row : rows) {
        const json record = {{"t", row.t},
                             {"value", row.value},
                             {"argmax_vertex", parsed.map.label_of(row.argmax_vertex)},
                             {"flagged", row.value > o.threshold}};
        os << record.dump() << "\n";
    }
    sink.finish();
    return 0;
}

struct PowerOpts {
    std::string spec_path;
    std::string mode = "mc";
    std::size_t tau = 1;
    std::size_t ell = 0;
    int k = 0;
    std::string stat = "psi";
    double alpha = 0.05;
    int replicates = 500;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::string out_path;
};

json estimate_json(const PowerEstimate& est) {
    return {{"beta", est.beta},
            {"std_error", est.std_error},
            {"critical_value", est.critical_value},
            {"replicates", est.replicates}};
}

int cmd_power(const PowerOpts& o, std::ostream& out, std::ostream& err) {
    const ModelSpec spec = load_model_spec(o.spec_path);
    const SbmSpec& sbm = require_sbm(spec, "power");
    require_open_unit(o.alpha);
    const StatKind stat = parse_stat(o.stat);
    const ScanConfig cfg{o.tau, o.ell, o.k, stat, 1.0};
    json report;
    report["alpha"] = o.alpha;
    report["mode"] = o.mode;
    report["config"] = {{"tau", o.tau}, {"ell", o.ell}, {"k", o.k}, {"stat", o.stat}};
    if (o.mode == "theory") {
        if (o.tau != 1 || o.ell != 0 || (o.k != 0 && o.k != 1)) {
            throw std::runtime_error(fmt::format(
                "theory power covers tau=1, ell=0, k in {{0,1}}; got tau={} ell={} k={}", o.tau,
                o.ell, o.k));
        }
        const LimitModel model = o.k == 0 ? limit_model_k0(sbm, stat) : limit_model_k1(sbm, stat);
        report["theory"] = {{"beta", power_large_sample(model, o.alpha)}};
    } else {
        const std::uint64_t seed = resolve_seed(o.seed, err);
        report["seed"] = seed;
        if (o.mode == "mc") {
            report["mc"] =
                estimate_json(estimate_power(sbm, cfg, o.alpha, o.replicates, seed, o.threads));
        } else {
            const TheoryMcComparison cmp =
                compare_theory_mc(sbm, cfg, o.alpha, o.replicates, seed, o.threads);
            report["mc"] = estimate_json(cmp.mc);
            report["theory"] = {{"beta", cmp.beta_theory}};
            report["gap"] = cmp.gap;
        }
    }
    OutputSink sink(o.out_path, out);
    sink.stream() << report.dump(2) << "\n";
    sink.finish();
    return 0;
}

struct SweepOpts {
    std::string spec_path;
    std::size_t max_tau = 0;
    std::size_t max_ell = 0;
    int k = 0;
    std::string stat = "psi";
    double alpha = 0.05;
    int replicates = 500;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::string out_path;
};

int cmd_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
    const ModelSpec spec = load_model_spec(o.spec_path);
    const SbmSpec& sbm = require_sbm(spec, "sweep");
    require_open_unit(o.alpha);
    std::vector<std::size_t> taus(o.max_tau + 1);
    std::vector<std::size_t> ells(o.max_ell + 1);
    for (std::size_t i = 0; i < taus.size(); ++i) taus[i] = i;
    for (std::size_t i = 0; i < ells.size(); ++i) ells[i] = i;
    const std::uint64_t seed = resolve_seed(o.seed, err);
    const SweepResult res = sweep_tau_ell(sbm, o.k, parse_stat(o.stat), taus, ells, o.alpha,
                                          o.replicates, seed, o.threads);
    OutputSink sink(o.out_path, out);
    auto& os = sink.stream();
    os << "tau,ell,beta,std_error,critical_value\n";
    for (std::size_t ti = 0; ti < res.tau_values.size(); ++ti) {
        for (std::size_t ei = 0; ei < res.ell_values.size(); ++ei) {
            const PowerEstimate& cell = res.grid[ti][ei];
            os << fmt::format("{},{},{},{},{}\n", res.tau_values[ti], res.ell_values[ei],
                              num(cell.beta), num(cell.std_error), num(cell.critical_value));
        }
    }
    os << fmt::format("# best tau={} ell={} beta={}\n", res.best_tau_ell.first,
                      res.best_tau_ell.second, num(res.best_beta));
    sink.finish();
    return 0;
}

struct HeatmapOpts {
    double p = 0.0;
    std::string h_grid;
    std::string q_grid;
    std::size_t n = 1000;
    double alpha = 0.05;
    double sizing = 1.0;
    std::string out_path;
};

int cmd_heatmap(const HeatmapOpts& o, std::ostream& out) {
    require_open_unit(o.alpha);
    const auto h_values = parse_grid(o.h_grid, "h-grid");
    const auto q_values = parse_grid(o.q_grid, "q-grid");
    const HeatmapResult res = heatmap_beta_diff(o.p, h_values, q_values, o.n, o.alpha, o.sizing);
    OutputSink sink(o.out_path, out);
    auto& os = sink.stream();
    os << fmt::format("# anomaly_block_size={}\n", res.anomaly_block_size);
    os << "h,q,beta_psi,beta_phi,diff\n";
    for (std::size_t hi = 0; hi < res.h_values.size(); ++hi) {
        for (std::size_t qi = 0; qi < res.q_values.size(); ++qi) {
            os << fmt::format("{},{},{},{},{}\n", num(res.h_values[hi]), num(res.q_values[qi]),
                              num(res.beta_psi[hi][qi]), num(res.beta_phi[hi][qi]),
                              num(res.diff[hi][qi]));
        }
    }
    sink.finish();
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Change-point detection on time series of graphs via locality scan statistics"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* gen_cmd = app.add_subcommand(
        "generate", "Sample a graph series from a model spec and write the canonical text format");
    gen_cmd->add_option("--spec", gen.spec_path, "model spec file (key=value lines, kind=sbm|rdpg)")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed; drawn and printed to stderr when omitted");
    gen_cmd->add_option("--out", gen.out_path, "output path (default: stdout)");
    gen_cmd->add_option("--delimiter", gen.delimiter, "series field delimiter")
        ->capture_default_str();

    ScanOpts scan;
    auto* scan_cmd = app.add_subcommand(
        "scan", "Scan statistic over a series file, one CSV row per admissible time");
    scan_cmd->add_option("--in", scan.in_path, "series file")->required();
    scan_cmd->add_option("--tau", scan.tau, "vertex-normalization window")->capture_default_str();
    scan_cmd->add_option("--ell", scan.ell, "temporal-normalization window")->capture_default_str();
    scan_cmd->add_option("--k", scan.k, "hop radius")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--stat", scan.stat, "locality statistic")
        ->capture_default_str()
        ->check(CLI::IsMember({"psi", "phi"}));
    scan_cmd->add_option("--out", scan.out_path, "output path (default: stdout)");
    scan_cmd->add_option("--delimiter", scan.delimiter, "series field delimiter")
        ->capture_default_str();

    DetectOpts detect;
    auto* detect_cmd = app.add_subcommand(
        "detect",
        "Flag change points: one JSON line per admissible time, flagged when the scan value "
        "exceeds the threshold (defaults: tau=20, ell=20, threshold=5)");
    detect_cmd->add_option("--in", detect.in_path, "series file")->required();
    detect_cmd->add_option("--tau", detect.tau, "vertex-normalization window")
        ->capture_default_str();
    detect_cmd->add_option("--ell", detect.ell, "temporal-normalization window")
        ->capture_default_str();
    detect_cmd->add_option("--k", detect.k, "hop radius")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    detect_cmd->add_option("--stat", detect.stat, "locality statistic")
        ->capture_default_str()
        ->check(CLI::IsMember({"psi", "phi"}));
    detect_cmd->add_option("--threshold", detect.threshold, "flag scan values above this")
        ->capture_default_str();
    detect_cmd->add_option("--out", detect.out_path, "output path (default: stdout)");
    detect_cmd->add_option("--delimiter", detect.delimiter, "series field delimiter")
        ->capture_default_str();

    PowerOpts power;
    auto* power_cmd = app.add_subcommand(
        "power", "Detection power at the spec's change point, Monte Carlo and/or large-sample");
    power_cmd->add_option("--spec", power.spec_path, "model spec file (kind=sbm)")->required();
    power_cmd->add_option("--mode", power.mode, "mc, theory, or both (theory needs tau=1, ell=0)")
        ->capture_default_str()
        ->check(CLI::IsMember({"mc", "theory", "both"}));
    power_cmd->add_option("--tau", power.tau, "vertex-normalization window")
        ->capture_default_str();
    power_cmd->add_option("--ell", power.ell, "temporal-normalization window")
        ->capture_default_str();
    power_cmd->add_option("--k", power.k, "hop radius")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    power_cmd->add_option("--stat", power.stat, "locality statistic")
        ->capture_default_str()
        ->check(CLI::IsMember({"psi", "phi"}));
    power_cmd->add_option("--alpha", power.alpha, "test level")->capture_default_str();
    power_cmd->add_option("--replicates", power.replicates, "Monte Carlo replicates")
        ->capture_default_str();
    power_cmd->add_option("--seed", power.seed,
                          "RNG seed; drawn and printed to stderr when omitted");
    power_cmd->add_option("--threads", power.threads, "worker threads for the replicates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    power_cmd->add_option("--out", power.out_path, "output path (default: stdout)");

    SweepOpts sweep;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Monte Carlo power over the (tau, ell) grid [0..max-tau] x [0..max-ell]");
    sweep_cmd->add_option("--spec", sweep.spec_path, "model spec file (kind=sbm)")->required();
    sweep_cmd->add_option("--max-tau", sweep.max_tau, "largest tau in the grid")->required();
    sweep_cmd->add_option("--max-ell", sweep.max_ell, "largest ell in the grid")->required();
    sweep_cmd->add_option("--k", sweep.k, "hop radius")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--stat", sweep.stat, "locality statistic")
        ->capture_default_str()
        ->check(CLI::IsMember({"psi", "phi"}));
    sweep_cmd->add_option("--alpha", sweep.alpha, "test level")->capture_default_str();
    sweep_cmd->add_option("--replicates", sweep.replicates, "Monte Carlo replicates per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed,
                          "RNG seed; drawn and printed to stderr when omitted");
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads for the replicates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sweep.out_path, "output path (default: stdout)");

    HeatmapOpts heatmap;
    auto* heatmap_cmd = app.add_subcommand(
        "heatmap", "Large-sample power difference (psi minus phi) over an (h, q) grid");
    heatmap_cmd->add_option("--p", heatmap.p, "off-diagonal connection probability")->required();
    heatmap_cmd
        ->add_option("--h-grid", heatmap.h_grid, "h values: comma list or lo:hi:count, all in (p,1)")
        ->required();
    heatmap_cmd
        ->add_option("--q-grid", heatmap.q_grid, "q values: comma list or lo:hi:count, all in (p,1)")
        ->required();
    heatmap_cmd->add_option("--n", heatmap.n, "total vertex count")->capture_default_str();
    heatmap_cmd->add_option("--alpha", heatmap.alpha, "test level")->capture_default_str();
    heatmap_cmd
        ->add_option("--c", heatmap.sizing,
                     "anomaly sizing constant: blocks 2 and 3 get ceil(c*sqrt(n log n)) vertices")
        ->capture_default_str();
    heatmap_cmd->add_option("--out", heatmap.out_path, "output path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (gen_cmd->parsed()) return cmd_generate(gen, out, err);
        if (scan_cmd->parsed()) return cmd_scan(scan, out);
        if (detect_cmd->parsed()) return cmd_detect(detect, out);
        if (power_cmd->parsed()) return cmd_power(power, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
        if (heatmap_cmd->parsed()) return cmd_heatmap(heatmap, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    if (argc > 1) args.assign(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace graphscan::cli
