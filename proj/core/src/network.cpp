#include "geomcrystal/network.hpp"

#include <cstdint>
#include <functional>
#include <sstream>

#include "geomcrystal/errors.hpp"

namespace geomcrystal {

int PlanarNetwork::add_vertex(int row, int col, std::string name) {
  coords_.emplace_back(row, col);
  if (name.empty()) name = "v" + std::to_string(coords_.size() - 1);
  names_.push_back(std::move(name));
  return static_cast<int>(coords_.size()) - 1;
}

void PlanarNetwork::add_edge(int from, int to, Rat weight, std::string label) {
  edges_.push_back({from, to, std::move(weight), std::move(label)});
}

std::vector<int> PlanarNetwork::topological_order() const {
  const int nv = vertex_count();
  std::vector<int> indeg(nv, 0);
  std::vector<std::vector<int>> out(nv);
  for (const auto& e : edges_) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::vector<int> order, ready;
  for (int v = 0; v < nv; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != nv) throw InvariantViolation("network has a directed cycle");
  return order;
}

RatMatrix PlanarNetwork::weight_matrix() const {
  auto order = topological_order();
  std::vector<std::vector<const NetworkEdge*>> out(vertex_count());
  for (const auto& e : edges_) out[e.from].push_back(&e);
  RatMatrix m(sources_.size(), sinks_.size());
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    std::vector<Rat> acc(vertex_count(), 0);
    acc[sources_[s]] = 1;
    for (int v : order) {
      if (acc[v] == 0) continue;
      for (const auto* e : out[v]) acc[e->to] += acc[v] * e->weight;
    }
    for (std::size_t t = 0; t < sinks_.size(); ++t) m(s, t) = acc[sinks_[t]];
  }
  return m;
}

Rat PlanarNetwork::lindstrom_minor(const std::vector<int>& source_pos, const std::vector<int>& sink_pos) const {
  if (source_pos.size() != sink_pos.size()) throw InvariantViolation("minor must be square");
  if (vertex_count() > 64) throw InvariantViolation("network too large for path enumeration");
  std::vector<std::vector<const NetworkEdge*>> out(vertex_count());
  for (const auto& e : edges_) out[e.from].push_back(&e);
  std::vector<int> sink_index(vertex_count(), -1);
  for (std::size_t t = 0; t < sink_pos.size(); ++t) sink_index[sinks_[sink_pos[t] - 1]] = static_cast<int>(t);

  struct Path {
    std::uint64_t vertices;
    int sink;
    Rat weight;
  };
  const std::size_t m = source_pos.size();
  std::vector<std::vector<Path>> paths(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::function<void(int, std::uint64_t, Rat)> walk = [&](int v, std::uint64_t seen, Rat w) {
      if (sink_index[v] >= 0) paths[a].push_back({seen, sink_index[v], w});
      for (const auto* e : out[v]) walk(e->to, seen | (std::uint64_t(1) << e->to), w * e->weight);
    };
    int s = sources_[source_pos[a] - 1];
    walk(s, std::uint64_t(1) << s, Rat(1));
  }

  Rat total = 0;
  std::vector<int> perm(m);
  std::function<void(std::size_t, std::uint64_t, unsigned, Rat)> choose = [&](std::size_t a, std::uint64_t used,
                                                                               unsigned used_sinks, Rat w) {
    if (a == m) {
      int inv = 0;
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y) inv += perm[x] > perm[y];
      if (inv % 2) total -= w;
      else total += w;
      return;
    }
    for (const auto& p : paths[a]) {
      if ((p.vertices & used) || (used_sinks & (1u << p.sink))) continue;
      perm[a] = p.sink;
      choose(a + 1, used | p.vertices, used_sinks | (1u << p.sink), w * p.weight);
    }
  };
  choose(0, 0, 0, Rat(1));
  return total;
}

std::string PlanarNetwork::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  node [shape=point];\n";
  for (int v = 0; v < vertex_count(); ++v) {
    os << "  \"" << names_[v] << "\" [pos=\"" << coords_[v].second << "," << -coords_[v].first << "!\"";
    for (std::size_t s = 0; s < sources_.size(); ++s)
      if (sources_[s] == v) os << ", shape=plaintext, label=\"" << s + 1 << "\"";
    for (std::size_t t = 0; t < sinks_.size(); ++t)
      if (sinks_[t] == v) os << ", shape=plaintext, label=\"" << t + 1 << "'\"";
    os << "];\n";
  }
  for (const auto& e : edges_) {
    os << "  \"" << names_[e.from] << "\" -> \"" << names_[e.to] << "\"";
    if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

PlanarNetwork glue(const PlanarNetwork& a, const PlanarNetwork& b) {
  if (a.sinks().size() != b.sources().size()) throw InvariantViolation("sink and source counts differ");
  PlanarNetwork g;
  int width = 0;
  for (int v = 0; v < a.vertex_count(); ++v) width = std::max(width, a.coord(v).second + 1);
  std::vector<int> amap(a.vertex_count()), bmap(b.vertex_count(), -1);
  for (int v = 0; v < a.vertex_count(); ++v) amap[v] = g.add_vertex(a.coord(v).first, a.coord(v).second, "a" + a.name(v));
  for (std::size_t j = 0; j < a.sinks().size(); ++j) bmap[b.sources()[j]] = amap[a.sinks()[j]];
  for (int v = 0; v < b.vertex_count(); ++v)
    if (bmap[v] < 0) bmap[v] = g.add_vertex(b.coord(v).first, b.coord(v).second + width, "b" + b.name(v));
  for (const auto& e : a.edges()) g.add_edge(amap[e.from], amap[e.to], e.weight, e.label);
  for (const auto& e : b.edges()) g.add_edge(bmap[e.from], bmap[e.to], e.weight, e.label);
  std::vector<int> src, snk;
  for (int s : a.sources()) src.push_back(amap[s]);
  for (int t : b.sinks()) snk.push_back(bmap[t]);
  g.set_sources(src);
  g.set_sinks(snk);
  return g;
}

}  // namespace geomcrystal
