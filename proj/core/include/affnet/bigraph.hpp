#ifndef AFFNET_BIGRAPH_HPP
#define AFFNET_BIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affnet {

/// One attendance record: an actor at an event, optionally timestamped.
/// Timestamps are opaque totally-ordered integers; `parse_time` maps
/// ISO dates (YYYY-MM-DD) and plain integers onto that order.
struct EdgeRow {
    std::string actor;
    std::string event;
    std::optional<std::string> time;
};

std::int64_t parse_time(const std::string& text);

/// An affiliation network: actors, events, and attendance edges between
/// them. Actor and event ids live in disjoint namespaces and are mapped
/// to dense indices internally; adjacency is kept sorted on both sides so
/// pairwise and triple co-attendance counts reduce to ordered merges.
///
/// Immutable after construction; all queries are const and safe to call
/// from concurrent readers.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    std::size_t actor_count() const { return actor_ids_.size(); }
    std::size_t event_count() const { return event_ids_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& actor_id(int a) const { return actor_ids_[a]; }
    const std::string& event_id(int e) const { return event_ids_[e]; }

    /// -1 when the id is unknown.
    int actor_index(const std::string& id) const;
    int event_index(const std::string& id) const;

    std::span<const int> events_of(int actor) const { return actor_events_[actor]; }
    std::span<const int> actors_of(int event) const { return event_actors_[event]; }

    bool has_edge(int actor, int event) const;

    std::optional<std::int64_t> event_time(int event) const { return event_times_[event]; }
    bool all_events_timed() const;

    /// Number of events attended by both actors.
    std::int64_t pair_weight(int a, int b) const;
    /// Number of events attended by all three actors.
    std::int64_t triple_weight(int a, int b, int c) const;

    /// Earliest shared event time of a pair, when every event is timed.
    std::optional<std::int64_t> first_shared_time(int a, int b) const;

    std::vector<int> actor_degrees() const;
    std::vector<int> event_degrees() const;

    /// All attendance edges as (actor index, event index), in a canonical order.
    std::vector<std::pair<int, int>> edges() const;

    friend class GraphBuilder;

private:
    std::vector<std::string> actor_ids_;
    std::vector<std::string> event_ids_;
    std::unordered_map<std::string, int> actor_index_;
    std::unordered_map<std::string, int> event_index_;
    std::vector<std::vector<int>> actor_events_;
    std::vector<std::vector<int>> event_actors_;
    std::vector<std::optional<std::int64_t>> event_times_;
    std::size_t edge_count_ = 0;
};

/// Accumulates attendance rows, then freezes them into a BipartiteGraph.
/// Ids keep their first-appearance order, which fixes all output orders.
class GraphBuilder {
public:
    int add_actor(const std::string& id);
    int add_event(const std::string& id);
    void add_attendance(int actor, int event);
    void set_event_time(int event, std::int64_t time);

    BipartiteGraph build();

private:
    BipartiteGraph g_;
    std::vector<std::vector<int>> pending_;  // event -> actors, unsorted
};

struct LoadResult {
    BipartiteGraph graph;
    std::int64_t duplicate_rows = 0;  // collapsed attendance rows
};

/// Builds the graph described by attendance rows. Duplicate rows collapse
/// silently (the model is a simple bipartite graph) and are counted.
/// Throws DataError when an id is used as both actor and event, or when
/// two rows give the same event different timestamps.
LoadResult from_edge_list(std::span<const EdgeRow> rows);

/// CSV/TSV ingestion. Header `actor,event[,time]`, comma or tab delimited.
LoadResult load_csv(std::istream& in);
LoadResult load_csv_file(const std::string& path);

/// One-mode actor graph: an edge per coattending pair, weighted by the
/// number of shared events, labeled with the earliest shared event time
/// when event times exist.
class Projection {
public:
    std::size_t node_count() const { return neighbors_.size(); }

    /// (neighbor, weight) pairs sorted by neighbor index.
    std::span<const std::pair<int, std::int64_t>> neighbors(int actor) const {
        return neighbors_[actor];
    }

    std::int64_t weight(int a, int b) const;
    bool adjacent(int a, int b) const { return weight(a, b) > 0; }

    std::optional<std::int64_t> first_time(int a, int b) const;

    std::size_t edge_undirected_count() const { return edge_count_; }

    friend Projection project(const BipartiteGraph& g);

private:
    std::vector<std::vector<std::pair<int, std::int64_t>>> neighbors_;
    std::vector<std::vector<std::optional<std::int64_t>>> first_times_;
    std::size_t edge_count_ = 0;
};

Projection project(const BipartiteGraph& g);

/// Shared-event counts for an ordered actor triple (p, q, r).
struct PairWeights {
    std::int64_t w_pq = 0;
    std::int64_t w_qr = 0;
    std::int64_t w_pr = 0;
    std::int64_t w_pqr = 0;
};

/// Throws std::invalid_argument unless the three ids are distinct actors of g.
PairWeights pair_weights(const BipartiteGraph& g,
                         const std::string& p, const std::string& q, const std::string& r);
PairWeights pair_weights_at(const BipartiteGraph& g, int p, int q, int r);

/// Subgraph induced by the actor set together with every event attended by
/// at least two of its members, attendance restricted to the set.
BipartiteGraph scheduled_subgraph(const BipartiteGraph& g,
                                  std::span<const std::string> actors);

}  // namespace affnet

#endif
