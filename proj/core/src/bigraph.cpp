#include "affnet/bigraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "affnet/errors.hpp"

namespace affnet {

namespace {

// Side index shared by actors and events; detects namespace collisions.
struct IdTable {
    std::unordered_map<std::string, int> index;
    std::vector<std::string>* ids;

    int intern(const std::string& id) {
        auto it = index.find(id);
        if (it != index.end()) return it->second;
        const int n = static_cast<int>(ids->size());
        ids->push_back(id);
        index.emplace(id, n);
        return n;
    }
};

std::int64_t sorted_intersection_size(std::span<const int> a, std::span<const int> b) {
    std::int64_t n = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

}  // namespace

std::int64_t parse_time(const std::string& text) {
    // ISO date YYYY-MM-DD: encode as yyyymmdd, which preserves date order
    // and never collides with same-magnitude plain integers in one file
    // as long as a file sticks to one convention.
    if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
        auto digits = [&](std::size_t from, std::size_t count) -> std::int64_t {
            std::int64_t v = 0;
            for (std::size_t i = from; i < from + count; ++i) {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw DataError("bad timestamp '" + text + "'");
                v = v * 10 + (text[i] - '0');
            }
            return v;
        };
        const std::int64_t y = digits(0, 4), m = digits(5, 2), d = digits(8, 2);
        if (m < 1 || m > 12 || d < 1 || d > 31)
            throw DataError("bad timestamp '" + text + "'");
        return y * 10000 + m * 100 + d;
    }
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw DataError("bad timestamp '" + text + "'");
    return v;
}

int BipartiteGraph::actor_index(const std::string& id) const {
    auto it = actor_index_.find(id);
    return it == actor_index_.end() ? -1 : it->second;
}

int BipartiteGraph::event_index(const std::string& id) const {
    auto it = event_index_.find(id);
    return it == event_index_.end() ? -1 : it->second;
}

bool BipartiteGraph::has_edge(int actor, int event) const {
    const auto& ev = actor_events_[actor];
    return std::binary_search(ev.begin(), ev.end(), event);
}

bool BipartiteGraph::all_events_timed() const {
    for (const auto& t : event_times_)
        if (!t) return false;
    return true;
}

std::int64_t BipartiteGraph::pair_weight(int a, int b) const {
    return sorted_intersection_size(actor_events_[a], actor_events_[b]);
}

std::int64_t BipartiteGraph::triple_weight(int a, int b, int c) const {
    const auto& ea = actor_events_[a];
    const auto& eb = actor_events_[b];
    const auto& ec = actor_events_[c];
    std::int64_t n = 0;
    std::size_t i = 0, j = 0, k = 0;
    while (i < ea.size() && j < eb.size() && k < ec.size()) {
        const int m = std::max({ea[i], eb[j], ec[k]});
        if (ea[i] == m && eb[j] == m && ec[k] == m) {
            ++n;
            ++i;
            ++j;
            ++k;
            continue;
        }
        while (i < ea.size() && ea[i] < m) ++i;
        while (j < eb.size() && eb[j] < m) ++j;
        while (k < ec.size() && ec[k] < m) ++k;
    }
    return n;
}

std::optional<std::int64_t> BipartiteGraph::first_shared_time(int a, int b) const {
    std::optional<std::int64_t> best;
    const auto& ea = actor_events_[a];
    const auto& eb = actor_events_[b];
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i] < eb[j]) {
            ++i;
        } else if (eb[j] < ea[i]) {
            ++j;
        } else {
            const auto t = event_times_[ea[i]];
            if (t && (!best || *t < *best)) best = t;
            ++i;
            ++j;
        }
    }
    return best;
}

std::vector<int> BipartiteGraph::actor_degrees() const {
    std::vector<int> d(actor_ids_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>(actor_events_[i].size());
    return d;
}

std::vector<int> BipartiteGraph::event_degrees() const {
    std::vector<int> d(event_ids_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<int>(event_actors_[i].size());
    return d;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (std::size_t a = 0; a < actor_events_.size(); ++a)
        for (int e : actor_events_[a]) out.emplace_back(static_cast<int>(a), e);
    return out;
}

int GraphBuilder::add_actor(const std::string& id) {
    auto it = g_.actor_index_.find(id);
    if (it != g_.actor_index_.end()) return it->second;
    const int n = static_cast<int>(g_.actor_ids_.size());
    g_.actor_ids_.push_back(id);
    g_.actor_index_.emplace(id, n);
    g_.actor_events_.emplace_back();
    return n;
}

int GraphBuilder::add_event(const std::string& id) {
    auto it = g_.event_index_.find(id);
    if (it != g_.event_index_.end()) return it->second;
    const int n = static_cast<int>(g_.event_ids_.size());
    g_.event_ids_.push_back(id);
    g_.event_index_.emplace(id, n);
    g_.event_times_.emplace_back();
    pending_.emplace_back();
    return n;
}

void GraphBuilder::add_attendance(int actor, int event) {
    pending_[event].push_back(actor);
}

void GraphBuilder::set_event_time(int event, std::int64_t time) {
    g_.event_times_[event] = time;
}

BipartiteGraph GraphBuilder::build() {
    g_.event_actors_.assign(pending_.size(), {});
    g_.edge_count_ = 0;
    for (std::size_t e = 0; e < pending_.size(); ++e) {
        auto& actors = pending_[e];
        std::sort(actors.begin(), actors.end());
        actors.erase(std::unique(actors.begin(), actors.end()), actors.end());
        g_.event_actors_[e] = actors;
        g_.edge_count_ += actors.size();
        for (int a : actors) g_.actor_events_[a].push_back(static_cast<int>(e));
    }
    for (auto& ev : g_.actor_events_) std::sort(ev.begin(), ev.end());
    return std::move(g_);
}

LoadResult from_edge_list(std::span<const EdgeRow> rows) {
    GraphBuilder b;
    std::unordered_set<std::string> actor_names, event_names;
    std::unordered_map<int, std::pair<std::int64_t, std::size_t>> event_time_seen;
    std::unordered_set<std::int64_t> seen;  // (actor, event) pairs
    std::int64_t duplicates = 0;

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const EdgeRow& row = rows[r];
        if (event_names.count(row.actor) || actor_names.count(row.event))
            throw DataError("row " + std::to_string(r + 1) + ": id '" +
                            (event_names.count(row.actor) ? row.actor : row.event) +
                            "' used as both actor and event");
        actor_names.insert(row.actor);
        event_names.insert(row.event);
        const int a = b.add_actor(row.actor);
        const int e = b.add_event(row.event);

        if (row.time) {
            const std::int64_t t = parse_time(*row.time);
            if (auto it = event_time_seen.find(e); it != event_time_seen.end()) {
                if (it->second.first != t)
                    throw DataError("rows " + std::to_string(it->second.second + 1) + " and " +
                                    std::to_string(r + 1) + ": event '" + row.event +
                                    "' given inconsistent timestamps");
            } else {
                event_time_seen.emplace(e, std::make_pair(t, r));
                b.set_event_time(e, t);
            }
        }

        const std::int64_t key = static_cast<std::int64_t>(a) * 0x40000000LL + e;
        if (!seen.insert(key).second) {
            ++duplicates;
            continue;
        }
        b.add_attendance(a, e);
    }
    return LoadResult{b.build(), duplicates};
}

namespace {

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
        std::size_t i = 0;
        while (i < f.size() && f[i] == ' ') ++i;
        f.erase(0, i);
    }
    return out;
}

}  // namespace

LoadResult load_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw DataError("empty input");
    const char delim = header.find('\t') != std::string::npos ? '\t' : ',';
    auto cols = split_fields(header, delim);
    if (cols.size() < 2 || cols[0] != "actor" || cols[1] != "event" ||
        (cols.size() == 3 && cols[2] != "time") || cols.size() > 3)
        throw DataError("expected header 'actor,event[,time]', got '" + header + "'");
    const bool timed = cols.size() == 3;

    std::vector<EdgeRow> rows;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto f = split_fields(line, delim);
        if (f.size() != cols.size())
            throw DataError("line " + std::to_string(lineno) + ": expected " +
                            std::to_string(cols.size()) + " fields");
        if (f[0].empty() || f[1].empty())
            throw DataError("line " + std::to_string(lineno) + ": empty actor or event id");
        EdgeRow row{f[0], f[1], std::nullopt};
        if (timed && !f[2].empty()) row.time = f[2];
        rows.push_back(std::move(row));
    }
    try {
        return from_edge_list(rows);
    } catch (const DataError& e) {
        throw DataError(std::string(e.what()) + " (row numbers exclude the header)");
    }
}

LoadResult load_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return load_csv(in);
}

Projection project(const BipartiteGraph& g) {
    const int n = static_cast<int>(g.actor_count());
    Projection p;
    p.neighbors_.assign(n, {});
    p.first_times_.assign(n, {});

    std::vector<std::unordered_map<int, std::int64_t>> weight(n);
    std::vector<std::unordered_map<int, std::int64_t>> first(n);
    const bool timed = g.all_events_timed() && g.event_count() > 0;

    for (std::size_t e = 0; e < g.event_count(); ++e) {
        const auto actors = g.actors_of(static_cast<int>(e));
        const auto t = g.event_time(static_cast<int>(e));
        for (std::size_t i = 0; i < actors.size(); ++i) {
            for (std::size_t j = i + 1; j < actors.size(); ++j) {
                const int a = actors[i], b = actors[j];
                ++weight[a][b];
                if (timed) {
                    auto it = first[a].find(b);
                    if (it == first[a].end() || *t < it->second) first[a][b] = *t;
                }
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        for (const auto& [b, w] : weight[a]) {
            p.neighbors_[a].emplace_back(b, w);
            p.neighbors_[b].emplace_back(a, w);
            ++p.edge_count_;
        }
    }
    for (auto& nb : p.neighbors_) std::sort(nb.begin(), nb.end());

    if (timed) {
        for (int a = 0; a < n; ++a) {
            p.first_times_[a].assign(p.neighbors_[a].size(), std::nullopt);
        }
        for (int a = 0; a < n; ++a) {
            for (const auto& [b, t] : first[a]) {
                auto set_time = [&](int u, int v) {
                    const auto& nb = p.neighbors_[u];
                    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                                               [](const auto& pr, int x) { return pr.first < x; });
                    p.first_times_[u][static_cast<std::size_t>(it - nb.begin())] = t;
                };
                set_time(a, b);
                set_time(b, a);
            }
        }
    }
    return p;
}

std::int64_t Projection::weight(int a, int b) const {
    const auto& nb = neighbors_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b,
                               [](const auto& pr, int x) { return pr.first < x; });
    if (it == nb.end() || it->first != b) return 0;
    return it->second;
}

std::optional<std::int64_t> Projection::first_time(int a, int b) const {
    if (first_times_[a].empty()) return std::nullopt;
    const auto& nb = neighbors_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b,
                               [](const auto& pr, int x) { return pr.first < x; });
    if (it == nb.end() || it->first != b) return std::nullopt;
    return first_times_[a][static_cast<std::size_t>(it - nb.begin())];
}

PairWeights pair_weights_at(const BipartiteGraph& g, int p, int q, int r) {
    if (p == q || q == r || p == r)
        throw std::invalid_argument("pair_weights: actors must be distinct");
    PairWeights w;
    w.w_pq = g.pair_weight(p, q);
    w.w_qr = g.pair_weight(q, r);
    w.w_pr = g.pair_weight(p, r);
    w.w_pqr = g.triple_weight(p, q, r);
    return w;
}

PairWeights pair_weights(const BipartiteGraph& g,
                         const std::string& p, const std::string& q, const std::string& r) {
    const int ip = g.actor_index(p), iq = g.actor_index(q), ir = g.actor_index(r);
    if (ip < 0 || iq < 0 || ir < 0) throw std::invalid_argument("pair_weights: unknown actor id");
    return pair_weights_at(g, ip, iq, ir);
}

BipartiteGraph scheduled_subgraph(const BipartiteGraph& g,
                                  std::span<const std::string> actors) {
    std::vector<int> idx;
    idx.reserve(actors.size());
    for (const auto& id : actors) {
        const int a = g.actor_index(id);
        if (a < 0) throw DataError("scheduled_subgraph: unknown actor '" + id + "'");
        idx.push_back(a);
    }

    GraphBuilder b;
    std::vector<int> local(g.actor_count(), -1);
    for (std::size_t i = 0; i < actors.size(); ++i) {
        const int a = b.add_actor(actors[i]);
        local[idx[i]] = a;
    }
    for (std::size_t e = 0; e < g.event_count(); ++e) {
        std::vector<int> members;
        for (int a : g.actors_of(static_cast<int>(e)))
            if (local[a] >= 0) members.push_back(local[a]);
        if (members.size() < 2) continue;
        const int ev = b.add_event(g.event_id(static_cast<int>(e)));
        if (auto t = g.event_time(static_cast<int>(e))) b.set_event_time(ev, *t);
        for (int a : members) b.add_attendance(a, ev);
    }
    return b.build();
}

}  // namespace affnet
