#include "rcq/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "rcq/error.hpp"

namespace rcq {

GraphKind parse_graph_kind(std::string_view s) {
  if (s == "divisor-lattice") {
    return GraphKind::divisor_lattice;
  }
  if (s == "germ-cayley") {
    return GraphKind::germ_cayley;
  }
  if (s == "full-cayley") {
    return GraphKind::full_cayley;
  }
  throw ParseError("unknown graph kind '" + std::string(s) + "'");
}

namespace {

std::int64_t sum(Coords const& c) {
  return std::accumulate(c.begin(), c.end(), std::int64_t(0));
}

bool vertex_less(Coords const& a, Coords const& b) {
  auto la = sum(a), lb = sum(b);
  return la != lb ? la < lb : a > b;
}

// Sorts vertices, renumbers edges and sorts them.
LabeledGraph finish(std::vector<Coords> coords, std::vector<std::string> labels,
                    std::vector<LabeledGraph::Edge> edges) {
  std::vector<std::size_t> order(coords.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return vertex_less(coords[i], coords[j]); });
  std::vector<std::size_t> rank(coords.size());
  LabeledGraph g;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = k;
    g.vertex_coords.push_back(coords[order[k]]);
    g.vertex_labels.push_back(labels[order[k]]);
  }
  for (auto& e : edges) {
    g.edges.push_back({rank[e.from], rank[e.to], e.label});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](auto const& a, auto const& b) {
    return a.from != b.from ? a.from < b.from : a.label < b.label;
  });
  return g;
}

LabeledGraph cayley(CoxGroup const& G, bool germ_only) {
  std::vector<Coords> coords;
  std::vector<std::string> labels;
  std::vector<LabeledGraph::Edge> edges;
  for (std::uint64_t i = 0; i < G.order(); ++i) {
    Residues x = G.element(i);
    coords.emplace_back(x.begin(), x.end());
    labels.push_back(G.format(x));
    for (Elem s = 0; s < G.rank(); ++s) {
      Residues gen = G.generator(s);
      if (germ_only) {
        // for d = 1 the generators collapse to the identity and are not atoms
        if (G.norm(gen) == 0) {
          continue;
        }
        if (auto y = G.germ_product(x, gen)) {
          edges.push_back({i, G.index(*y), s});
        }
      } else {
        edges.push_back({i, G.index(G.multiply(x, gen)), s});
      }
    }
  }
  return finish(std::move(coords), std::move(labels), std::move(edges));
}

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

LabeledGraph divisor_lattice(StructureMonoid const& M, std::uint64_t power, std::uint64_t budget) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    if (__builtin_mul_overflow(size, power + 1, &size) || size > budget) {
      throw BudgetError("divisor lattice exceeds the budget of " + std::to_string(budget));
    }
  }
  MonoidElement top = M.power(M.delta(), power);
  std::map<Coords, std::size_t> seen;
  std::vector<MonoidElement> verts{M.one()};
  seen.emplace(M.one().coords(), 0);
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Elem s = 0; s < M.rank(); ++s) {
      MonoidElement h = M.multiply(verts[i], M.generator(s));
      if (!M.left_divides(h, top)) {
        continue;
      }
      auto [it, fresh] = seen.emplace(h.coords(), verts.size());
      if (fresh) {
        verts.push_back(h);
      }
      edges.push_back({i, it->second, s});
    }
  }
  std::vector<Coords> coords;
  std::vector<std::string> labels;
  for (auto const& v : verts) {
    coords.push_back(v.coords());
    labels.push_back(M.format(v));
  }
  return finish(std::move(coords), std::move(labels), std::move(edges));
}

LabeledGraph germ_cayley_graph(CoxGroup const& G) {
  return cayley(G, true);
}

LabeledGraph full_cayley_graph(CoxGroup const& G) {
  return cayley(G, false);
}

std::string to_dot(LabeledGraph const& g, OpTable const& table, std::string const& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (std::size_t i = 0; i < g.vertex_labels.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(g.vertex_labels[i]) << "];\n";
  }
  for (auto const& e : g.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=" << quoted(table.name(e.label))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rcq
