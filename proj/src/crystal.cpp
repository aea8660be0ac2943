#include "udc/crystal.hpp"

namespace udc {

namespace {
const char* kEdgeColor[3] = {"red", "blue", "green"};
}

std::string CrystalGraph::to_dot() const {
  std::string out = "digraph crystal {\n";
  if (truncated) out += "  // truncated at node cap\n";
  for (std::size_t k = 0; k < labels.size(); ++k)
    out += "  n" + std::to_string(k) + " [label=\"" + labels[k] + "\"];\n";
  for (const auto& e : edges)
    out += "  n" + std::to_string(e[0]) + " -> n" + std::to_string(e[2]) +
           " [label=\"" + std::to_string(e[1]) + "\",color=" +
           kEdgeColor[e[1] % 3] + "];\n";
  out += "}\n";
  return out;
}

nlohmann::json CrystalGraph::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) j["edges"].push_back({e[0], e[1], e[2]});
  j["truncated"] = truncated;
  return j;
}

bool is_connected(const CrystalGraph& g) {
  if (g.truncated)
    throw std::invalid_argument("is_connected: truncated graph rejected");
  const std::size_t n = g.labels.size();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[2]);
    adj[e[2]].push_back(e[0]);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace udc
