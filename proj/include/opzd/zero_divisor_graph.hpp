#ifndef OPZD_ZERO_DIVISOR_GRAPH_HPP_
#define OPZD_ZERO_DIVISOR_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "opzd/transformation.hpp"

namespace opzd {

  // Vertices Z_k in lexicographic order; an undirected edge {a, b}
  // (a == b allowed) when ab = pi_k or ba = pi_k.
  struct ZeroDivisorGraph {
    std::size_t                                      degree = 0;
    Point                                            k      = 0;
    std::vector<Transformation>                      vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // first <= second
  };

  ZeroDivisorGraph zero_divisor_graph(std::size_t n, Point k);

  // Graphviz source; pi_k is drawn as a double circle.
  std::string to_dot(ZeroDivisorGraph const& g);

}  // namespace opzd

#endif  // OPZD_ZERO_DIVISOR_GRAPH_HPP_
