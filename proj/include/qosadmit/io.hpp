#ifndef QOSADMIT_IO_HPP
#define QOSADMIT_IO_HPP

#include <iosfwd>
#include <string>

#include "qosadmit/feasibility.hpp"
#include "qosadmit/graph.hpp"
#include "qosadmit/interference.hpp"

namespace qosadmit {

// Text formats. Blank lines and everything after '#' are ignored.
//
//   graph:         nodes N            demand:  u v p/q   (per network link)
//                  u v                         v p/q     (per conflict vertex)
//
//   line network:  rT p/q
//                  pos p/q            (one per node, ascending)
//                  tx i -> j          (or tx i -> j,k)

Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g);

LineNetwork parse_line_network(std::istream& in);
std::string format_line_network(const LineNetwork& net);

/// Demands keyed by network link; every link of g needs exactly one entry.
DemandVector parse_edge_demands(std::istream& in, const Graph& g);
std::string format_edge_demands(const Graph& g, const DemandVector& tau);

/// Demands keyed by conflict vertex 0..count-1; every vertex needs one entry.
DemandVector parse_vertex_demands(std::istream& in, int count);
std::string format_vertex_demands(const DemandVector& tau);

/// Graph format with one comment line per vertex naming its link or
/// transmission.
std::string format_conflict_graph(const ConflictGraph& conflict);

Graph read_graph_file(const std::string& path);
LineNetwork read_line_network_file(const std::string& path);

}  // namespace qosadmit

#endif  // QOSADMIT_IO_HPP
