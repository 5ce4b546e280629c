#include "qosadmit/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qosadmit/errors.hpp"

namespace qosadmit {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw ParseError("line " + std::to_string(line.number) + ": " + message);
}

int parse_int(const Line& line, const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) fail(line, "expected an integer, got '" + token + "'");
  return value;
}

Rational parse_rational(const Line& line, const std::string& token) {
  try {
    return Rational::parse(token);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "nodes") {
    throw ParseError("graph input must start with 'nodes N'");
  }
  const int n = parse_int(lines.front(), lines.front().tokens[1]);
  if (n < 0) fail(lines.front(), "negative node count");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) fail(line, "expected 'u v'");
    edges.emplace_back(parse_int(line, line.tokens[0]), parse_int(line, line.tokens[1]));
  }
  try {
    return Graph::build(n, std::span<const std::pair<NodeId, NodeId>>(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "nodes " << g.node_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

LineNetwork parse_line_network(std::istream& in) {
  std::optional<Rational> range;
  std::vector<Rational> positions;
  std::vector<Transmission> transmissions;
  for (const auto& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "rT") {
      if (t.size() != 2) fail(line, "expected 'rT p/q'");
      range = parse_rational(line, t[1]);
    } else if (t[0] == "pos") {
      if (t.size() != 2) fail(line, "expected 'pos p/q'");
      positions.push_back(parse_rational(line, t[1]));
    } else if (t[0] == "tx") {
      // tx i -> j[,k]; tolerate "j, k" split across tokens
      if (t.size() < 4 || t[2] != "->") fail(line, "expected 'tx i -> j' or 'tx i -> j,k'");
      std::string joined;
      for (std::size_t k = 3; k < t.size(); ++k) joined += t[k];
      Transmission tx;
      tx.transmitter = parse_int(line, t[1]);
      std::istringstream parts(joined);
      for (std::string part; std::getline(parts, part, ',');) {
        tx.receivers.push_back(parse_int(line, part));
      }
      transmissions.push_back(std::move(tx));
    } else {
      fail(line, "unknown directive '" + t[0] + "'");
    }
  }
  if (!range) throw ParseError("line network needs an 'rT' line");
  try {
    return validate_line_network(std::move(positions), *range, std::move(transmissions));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_line_network(const LineNetwork& net) {
  std::ostringstream out;
  out << "rT " << net.range << "\n";
  for (const auto& p : net.positions) out << "pos " << p << "\n";
  for (const auto& tx : net.transmissions) {
    out << "tx " << tx.transmitter << " -> ";
    for (std::size_t k = 0; k < tx.receivers.size(); ++k) {
      out << (k > 0 ? "," : "") << tx.receivers[k];
    }
    out << "\n";
  }
  return out.str();
}

DemandVector parse_edge_demands(std::istream& in, const Graph& g) {
  std::vector<std::optional<Rational>> values(g.edge_count());
  for (const auto& line : tokenize(in)) {
    if (line.tokens.size() != 3) fail(line, "expected 'u v p/q'");
    const int u = parse_int(line, line.tokens[0]);
    const int v = parse_int(line, line.tokens[1]);
    const auto index = g.edge_index(u, v);
    if (!index) fail(line, "no link {" + line.tokens[0] + "," + line.tokens[1] + "} in graph");
    if (values[*index]) fail(line, "duplicate demand for link");
    Rational tau = parse_rational(line, line.tokens[2]);
    if (tau.sign() < 0) fail(line, "negative demand");
    values[*index] = std::move(tau);
  }
  std::vector<Rational> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!values[i]) {
      throw ParseError("missing demand for link " + std::to_string(g.edge(i).u) + " " +
                       std::to_string(g.edge(i).v));
    }
    out.push_back(*values[i]);
  }
  return DemandVector(std::move(out));
}

std::string format_edge_demands(const Graph& g, const DemandVector& tau) {
  std::ostringstream out;
  for (int i = 0; i < g.edge_count(); ++i) {
    out << g.edge(i).u << " " << g.edge(i).v << " " << tau[i] << "\n";
  }
  return out.str();
}

DemandVector parse_vertex_demands(std::istream& in, int count) {
  std::vector<std::optional<Rational>> values(count);
  for (const auto& line : tokenize(in)) {
    if (line.tokens.size() != 2) fail(line, "expected 'vertexId p/q'");
    const int v = parse_int(line, line.tokens[0]);
    if (v < 0 || v >= count) fail(line, "vertex id out of range");
    if (values[v]) fail(line, "duplicate demand for vertex");
    Rational tau = parse_rational(line, line.tokens[1]);
    if (tau.sign() < 0) fail(line, "negative demand");
    values[v] = std::move(tau);
  }
  std::vector<Rational> out;
  for (int v = 0; v < count; ++v) {
    if (!values[v]) throw ParseError("missing demand for vertex " + std::to_string(v));
    out.push_back(*values[v]);
  }
  return DemandVector(std::move(out));
}

std::string format_vertex_demands(const DemandVector& tau) {
  std::ostringstream out;
  for (std::size_t v = 0; v < tau.size(); ++v) out << v << " " << tau[v] << "\n";
  return out.str();
}

std::string format_conflict_graph(const ConflictGraph& conflict) {
  std::ostringstream out;
  const bool links = conflict.source == ConflictGraph::Source::kLinks;
  out << "# conflict graph (" << (links ? "primary interference" : "protocol interference")
      << ")\n";
  for (int v = 0; v < conflict.graph.node_count(); ++v) {
    out << "# vertex " << v << " = ";
    if (links) {
      out << "link " << conflict.links[v].u << " " << conflict.links[v].v;
    } else {
      const auto& tx = conflict.transmissions[v];
      out << "tx " << tx.transmitter << " -> ";
      for (std::size_t k = 0; k < tx.receivers.size(); ++k) {
        out << (k > 0 ? "," : "") << tx.receivers[k];
      }
    }
    out << "\n";
  }
  out << format_graph(conflict.graph);
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

LineNetwork read_line_network_file(const std::string& path) {
  auto in = open(path);
  return parse_line_network(in);
}

}  // namespace qosadmit
