#ifndef RCQ_GRAPH_HPP
#define RCQ_GRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rcq/coxeter.hpp"

namespace rcq {

// Vertices are sorted by length, then by decreasing coordinates; edges by source, then
// label.  Edge g -> g s carries the label s.
struct LabeledGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Elem label;
    bool operator==(Edge const&) const = default;
  };
  std::vector<Coords> vertex_coords;
  std::vector<std::string> vertex_labels;
  std::vector<Edge> edges;
};

enum class GraphKind { divisor_lattice, germ_cayley, full_cayley };

GraphKind parse_graph_kind(std::string_view s);

// Hasse diagram of the left divisors of Delta^power, built by multiplying
// atoms in the monoid without reference to the finite quotient.
LabeledGraph divisor_lattice(StructureMonoid const& M, std::uint64_t power,
                             std::uint64_t budget = CoxGroup::default_budget);

// Edges x -> x s wherever the germ product is defined.
LabeledGraph germ_cayley_graph(CoxGroup const& G);

// All edges x -> x s.
LabeledGraph full_cayley_graph(CoxGroup const& G);

std::string to_dot(LabeledGraph const& g, OpTable const& table, std::string const& name);

}  // namespace rcq

#endif
