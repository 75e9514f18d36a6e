#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

// One parsed line of a temporal edge list, before label mapping.
struct TemporalEdgeRecord {
    std::size_t t = 0;
    std::string u;
    std::string v;
};

/**
 * Dense label <-> id bijection; ids fill [0, size). Files whose labels are
 * all canonical nonnegative integers keep their own numbering (label "7" is
 * id 7), so serialized series read back with the original vertex order; any
 * other label set is assigned ids in first-seen order.
 */
class VertexMap {
public:
    // Maps "0".."n-1" to themselves.
    static VertexMap identity(std::size_t n);

    // Returns the existing id for a known label, otherwise assigns the next.
    VertexId add(std::string label);

    VertexId id_of(const std::string& label) const;  // throws on unknown label
    const std::string& label_of(VertexId id) const;
    bool contains(const std::string& label) const;
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
};

struct IngestReport {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

struct ParseOptions {
    char delimiter = ',';
    // Checked against the header when both are given. Lines referring to
    // vertices or windows beyond the declared sizes are malformed.
    std::optional<std::size_t> num_vertices;
    std::optional<std::size_t> series_len;
};

struct ParseResult {
    GraphSeries series;
    VertexMap map;
    IngestReport report;
};

/**
 * Reads an optional "# n=<N> T=<len>" header, skips other comment lines, and
 * parses "t<delim>u<delim>v" edge records into one snapshot per window index.
 * Duplicate edges within a window collapse to one and self-loops are dropped,
 * both tallied in the report. Window indices with no records yield empty
 * snapshots. Malformed lines raise errors naming the line number.
 */
ParseResult parse_series(std::istream& input, const ParseOptions& options = {});

// Canonical serialization: header, then one line per edge ordered by
// (t, min id, max id). Output of parse_series feeds back through unchanged.
void write_series(const GraphSeries& series, const VertexMap& map, std::ostream& output,
                  char delimiter = ',');

}  // namespace graphscan
