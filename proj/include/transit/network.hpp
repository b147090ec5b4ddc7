#pragma once

#include <string>
#include <utility>
#include <vector>

#include "transit/error.hpp"

namespace transit {

using StationId = std::string;

/// Undirected station pair, stored with a < b by station index.
struct Edge {
    int a = -1;
    int b = -1;
};

struct Violation {
    std::string code;    // duplicate-station, self-loop, duplicate-edge, ...
    std::string detail;  // the offending element(s)
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Undirected station graph. Stations are sorted lexicographically at
// construction, so index order matches station-id order; structurally bad
// input (duplicates, self-loops, ...) is recorded as violations rather than
// rejected, and checked by validate_network.
class TransitNetwork {
public:
    TransitNetwork(std::vector<StationId> stations,
                   std::vector<std::pair<StationId, StationId>> edges);

    int station_count() const { return static_cast<int>(stations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<StationId>& stations() const { return stations_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// -1 when the id is unknown.
    int index_of(const StationId& id) const;
    /// Throws ValidationError naming the station when unknown.
    int require_station(const StationId& id) const;
    const StationId& id_of(int index) const { return stations_.at(index); }

    /// Index of the undirected edge {a, b}, or -1.
    int edge_index(int a, int b) const;
    /// (neighbor index, edge index) pairs sorted by neighbor index.
    const std::vector<std::pair<int, int>>& neighbors(int station) const {
        return adjacency_.at(station);
    }

    const std::vector<Violation>& violations() const { return violations_; }
    bool valid() const { return violations_.empty(); }
    void require_valid() const;

private:
    std::vector<StationId> stations_;  // sorted
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    std::vector<Violation> violations_;
};

ValidationResult validate_network(const TransitNetwork& net);

/// Simple path as an ordered station-index sequence.
struct Path {
    std::vector<int> stations;
    int hops() const { return stations.empty() ? 0 : static_cast<int>(stations.size()) - 1; }
};

/// Edge indices traversed by a path. Throws when consecutive stations are
/// not adjacent.
std::vector<int> path_edge_indices(const TransitNetwork& net, const Path& path);

/// Sum of the given per-edge costs along a path (hop count when null).
double path_cost(const TransitNetwork& net, const Path& path,
                 const std::vector<double>* edge_cost);

// Minimum-cost simple path. Default cost is 1 per edge (hop count); an
// optional per-edge cost vector overrides it. Ties are broken first toward
// fewer hops, then toward the lexicographically smallest station-id
// sequence, which makes the result deterministic.
Path shortest_path(const TransitNetwork& net, const StationId& origin,
                   const StationId& dest,
                   const std::vector<double>* edge_cost = nullptr);
Path shortest_path_idx(const TransitNetwork& net, int origin, int dest,
                       const std::vector<double>* edge_cost = nullptr);

struct DemandEntry {
    StationId origin;
    StationId dest;
    double mass = 0.0;  // passengers per day
};

// Per-period origin-destination demand. Entries are keyed by ordered
// (origin, dest) pairs, sorted, with duplicate rows aggregated by summation.
// Zero-mass entries are kept; diagonal entries with positive mass are
// rejected.
class DemandMatrix {
public:
    DemandMatrix() = default;
    DemandMatrix(std::string period, std::vector<DemandEntry> entries);

    const std::string& period() const { return period_; }
    const std::vector<DemandEntry>& entries() const { return entries_; }
    double at(const StationId& origin, const StationId& dest) const;
    double total() const;

private:
    std::string period_;
    std::vector<DemandEntry> entries_;
};

/// Sum of all OD demands.
double total_traffic(const DemandMatrix& demand);

/// Passenger mass per edge, both travel directions aggregated.
struct EdgeFlows {
    std::vector<double> by_edge;
    double at(int edge) const { return by_edge.at(edge); }
    double total() const;
};

// Loads each OD demand onto its hop-count shortest path. Paths are computed
// between the lexicographically smaller and larger endpoint, so swapping
// origins and destinations leaves the flows unchanged.
EdgeFlows assign_flows(const TransitNetwork& net, const DemandMatrix& demand,
                       int threads = 0);
/// Plain single-loop reference for assign_flows; kept for testing.
EdgeFlows assign_flows_serial(const TransitNetwork& net, const DemandMatrix& demand);

}  // namespace transit
