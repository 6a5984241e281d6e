#ifndef AFFNET_DATASETS_HPP
#define AFFNET_DATASETS_HPP

#include <string>
#include <vector>

#include "affnet/bigraph.hpp"

namespace affnet::datasets {

struct Info {
    std::string name;
    std::string description;
};

/// Bundled fixtures, in listing order.
std::vector<Info> list();

/// Raw CSV of a bundled fixture. Throws DataError for unknown names.
std::string csv(const std::string& name);

BipartiteGraph load(const std::string& name);

/// Complete two-mode graph: every one of n actors attends every one of m
/// events. Actors a1..an, events e1..em.
BipartiteGraph biclique(int n_actors, int n_events);

}  // namespace affnet::datasets

#endif
