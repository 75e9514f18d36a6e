#include "graphscan/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "fmt/format.h"

namespace graphscan {

namespace {

// Dense snapshots get impractical long before this; a larger count almost
// always means labels were misread as vertex ids.
constexpr std::size_t kMaxVertices = 100000;

bool parse_size(std::string_view text, std::size_t& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

// Canonical integer labels ("0", "17", but not "007" or "+7") keep their own
// value as the vertex id.
bool canonical_int(const std::string& label, std::size_t& value) {
    if (label.empty() || (label.size() > 1 && label[0] == '0')) return false;
    return parse_size(label, value);
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
    throw std::runtime_error(fmt::format("line {}: {}", line_no, what));
}

struct Header {
    std::optional<std::size_t> n;
    std::optional<std::size_t> len;
};

bool parse_header(const std::string& line, Header& header) {
    if (line.rfind("# n=", 0) != 0) return false;
    std::size_t n = 0, len = 0;
    const std::size_t tpos = line.find(" T=", 4);
    if (tpos == std::string::npos) return false;
    if (!parse_size({line.data() + 4, tpos - 4}, n)) return false;
    if (!parse_size({line.data() + tpos + 3, line.size() - tpos - 3}, len)) return false;
    header.n = n;
    header.len = len;
    return true;
}

std::size_t merge_declared(std::optional<std::size_t> from_options,
                           std::optional<std::size_t> from_header, const char* what,
                           std::size_t fallback) {
    if (from_options && from_header && *from_options != *from_header) {
        throw std::runtime_error(fmt::format("declared {} {} conflicts with header {} {}",
                                             what, *from_options, what, *from_header));
    }
    if (from_options) return *from_options;
    if (from_header) return *from_header;
    return fallback;
}

}  // namespace

VertexMap VertexMap::identity(std::size_t n) {
    VertexMap map;
    map.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) map.add(std::to_string(i));
    return map;
}

VertexId VertexMap::add(std::string label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<VertexId>(labels_.size());
    ids_.emplace(label, id);
    labels_.push_back(std::move(label));
    return id;
}

VertexId VertexMap::id_of(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) {
        throw std::invalid_argument(fmt::format("unknown vertex label '{}'", label));
    }
    return it->second;
}

const std::string& VertexMap::label_of(VertexId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= labels_.size()) {
        throw std::out_of_range(fmt::format("vertex id {} outside [0, {})", id,
                                            labels_.size()));
    }
    return labels_[static_cast<std::size_t>(id)];
}

bool VertexMap::contains(const std::string& label) const {
    return ids_.find(label) != ids_.end();
}

ParseResult parse_series(std::istream& input, const ParseOptions& options) {
    Header header;
    bool have_header = false;
    std::vector<std::pair<std::size_t, TemporalEdgeRecord>> records;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!have_header) have_header = parse_header(line, header);
            continue;
        }
        TemporalEdgeRecord rec;
        const std::size_t first = line.find(options.delimiter);
        const std::size_t second =
            first == std::string::npos ? std::string::npos
                                       : line.find(options.delimiter, first + 1);
        if (second == std::string::npos ||
            line.find(options.delimiter, second + 1) != std::string::npos) {
            line_error(line_no, fmt::format("expected 3 fields separated by '{}'",
                                            options.delimiter));
        }
        if (!parse_size({line.data(), first}, rec.t)) {
            line_error(line_no,
                       fmt::format("window index '{}' is not a nonnegative integer",
                                   line.substr(0, first)));
        }
        rec.u = line.substr(first + 1, second - first - 1);
        rec.v = line.substr(second + 1);
        if (rec.u.empty() || rec.v.empty()) line_error(line_no, "empty vertex label");
        records.emplace_back(line_no, std::move(rec));
    }

    // Label mode: value-identity when every label is a canonical integer
    // within range, first-seen otherwise.
    bool integer_labels = true;
    std::size_t max_value = 0;
    for (const auto& [no, rec] : records) {
        std::size_t value = 0;
        if (!canonical_int(rec.u, value)) {
            integer_labels = false;
            break;
        }
        max_value = std::max(max_value, value);
        if (!canonical_int(rec.v, value)) {
            integer_labels = false;
            break;
        }
        max_value = std::max(max_value, value);
    }

    ParseResult result;
    std::size_t n;
    if (integer_labels) {
        n = merge_declared(options.num_vertices, header.n, "vertex count",
                           records.empty() ? 0 : max_value + 1);
        if (n > kMaxVertices) {
            throw std::runtime_error(
                fmt::format("vertex count {} exceeds the supported maximum {}", n,
                            kMaxVertices));
        }
        result.map = VertexMap::identity(n);
    } else {
        for (const auto& [no, rec] : records) {
            result.map.add(rec.u);
            result.map.add(rec.v);
        }
        n = merge_declared(options.num_vertices, header.n, "vertex count",
                           result.map.size());
        if (n > kMaxVertices) {
            throw std::runtime_error(
                fmt::format("vertex count {} exceeds the supported maximum {}", n,
                            kMaxVertices));
        }
        while (result.map.size() < n) {
            // Pad with unused numeric labels so declared isolated vertices
            // exist; skip any label the data already claimed.
            std::string candidate = std::to_string(result.map.size());
            while (result.map.contains(candidate)) candidate += "_pad";
            result.map.add(std::move(candidate));
        }
    }

    std::size_t max_t = 0;
    for (const auto& [no, rec] : records) max_t = std::max(max_t, rec.t);
    const std::size_t len = merge_declared(options.series_len, header.len, "series length",
                                           records.empty() ? 0 : max_t + 1);

    std::vector<GraphSnapshot> snapshots(len, GraphSnapshot(n));
    for (const auto& [no, rec] : records) {
        if (rec.t >= len) {
            line_error(no, fmt::format("window index {} outside the declared length {}",
                                       rec.t, len));
        }
        std::size_t u_id, v_id;
        if (integer_labels) {
            canonical_int(rec.u, u_id);
            canonical_int(rec.v, v_id);
            if (u_id >= n || v_id >= n) {
                line_error(no, fmt::format("vertex label {} outside the declared count {}",
                                           std::max(u_id, v_id), n));
            }
        } else {
            u_id = static_cast<std::size_t>(result.map.id_of(rec.u));
            v_id = static_cast<std::size_t>(result.map.id_of(rec.v));
            if (u_id >= n || v_id >= n) {
                line_error(no,
                           fmt::format("vertex label '{}' outside the declared count {}",
                                       u_id >= n ? rec.u : rec.v, n));
            }
        }
        if (u_id == v_id) {
            ++result.report.self_loops;
            continue;
        }
        auto& snap = snapshots[rec.t];
        const auto u = static_cast<VertexId>(u_id);
        const auto v = static_cast<VertexId>(v_id);
        if (snap.has_edge(u, v)) {
            ++result.report.duplicate_edges;
        } else {
            snap.add_edge(u, v);
        }
    }
    result.series = GraphSeries(std::move(snapshots));
    return result;
}

void write_series(const GraphSeries& series, const VertexMap& map, std::ostream& output,
                  char delimiter) {
    const std::size_t n = series.length() > 0 ? series.num_vertices() : map.size();
    if (series.length() > 0 && map.size() != n) {
        throw std::invalid_argument(fmt::format(
            "vertex map covers {} labels but the series has {} vertices", map.size(), n));
    }
    for (std::size_t v = 0; v < map.size(); ++v) {
        const std::string& label = map.label_of(static_cast<VertexId>(v));
        if (label.find(delimiter) != std::string::npos ||
            label.find('\n') != std::string::npos) {
            throw std::invalid_argument(fmt::format(
                "vertex label '{}' contains the delimiter or a newline", label));
        }
    }
    output << "# n=" << n << " T=" << series.length() << '\n';
    for (std::size_t t = 0; t < series.length(); ++t) {
        const GraphSnapshot& snap = series.at(t);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = v + 1; w < n; ++w) {
                if (snap.has_edge(static_cast<VertexId>(v), static_cast<VertexId>(w))) {
                    output << t << delimiter << map.label_of(static_cast<VertexId>(v))
                           << delimiter << map.label_of(static_cast<VertexId>(w)) << '\n';
                }
            }
        }
    }
    if (!output) throw std::runtime_error("write failed while serializing the series");
}

}  // namespace graphscan
