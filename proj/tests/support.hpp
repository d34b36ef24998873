#pragma once

#include <string>
#include <vector>

#include "wkr/cover.hpp"
#include "wkr/graph.hpp"
#include "wkr/label_index.hpp"

namespace wkr::test {

std::string data_path(const std::string& name);

/// The seven-vertex example graph with external ids 1..7.
WeightedGraph fig1();

/// Dense id of external vertex vN in fig1().
VertexId vx(const WeightedGraph& g, int n);

/// Tie-break reproducing the published order v3, v4, v2, v1, v6, v5, v7.
tie_break::Explicit fig1_tie_break(const WeightedGraph& g);

std::string dump(const LabelIndex& index, const WeightedGraph& g);
std::string read_file(const std::string& path);

}  // namespace wkr::test
