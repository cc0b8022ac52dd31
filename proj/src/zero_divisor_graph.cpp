#include "opzd/zero_divisor_graph.hpp"

#include <sstream>

#include "opzd/enumeration.hpp"

namespace opzd {

  ZeroDivisorGraph zero_divisor_graph(std::size_t n, Point k) {
    ZeroDivisorGraph g;
    g.degree   = n;
    g.k        = k;
    g.vertices = enumerate(SemigroupId::Z(n, k)).elements();
    auto const pk = constant(n, k);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (std::size_t j = i; j < g.vertices.size(); ++j) {
        auto const& a = g.vertices[i];
        auto const& b = g.vertices[j];
        if (compose(a, b) == pk || compose(b, a) == pk) {
          g.edges.emplace_back(i, j);
        }
      }
    }
    return g;
  }

  std::string to_dot(ZeroDivisorGraph const& g) {
    auto const         pk = constant(g.degree, g.k);
    std::ostringstream out;
    out << "graph zero_divisors {\n";
    out << "  label=\"Z_" << g.k << " in O_" << g.degree << ", pi_" << g.k << " = "
        << to_string(pk) << "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      out << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\"";
      if (g.vertices[i] == pk) {
        out << ", shape=doublecircle, xlabel=\"pi_" << g.k << "\"";
      }
      out << "];\n";
    }
    for (auto [a, b] : g.edges) {
      out << "  v" << a << " -- v" << b << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace opzd
