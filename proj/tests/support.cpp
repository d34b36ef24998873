#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wkr/index_io.hpp"

namespace wkr::test {

std::string data_path(const std::string& name) { return std::string(WKR_TEST_DATA) + "/" + name; }

WeightedGraph fig1() { return load_edge_list_file(data_path("fig1.edges")); }

VertexId vx(const WeightedGraph& g, int n) { return g.dense_id(n); }

tie_break::Explicit fig1_tie_break(const WeightedGraph& g) {
  tie_break::Explicit tb;
  for (int n : {3, 4, 2, 1, 6, 5, 7}) tb.sequence.push_back(vx(g, n));
  return tb;
}

std::string dump(const LabelIndex& index, const WeightedGraph& g) {
  std::ostringstream os;
  dump_text(index, g.external_ids(), os);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace wkr::test
