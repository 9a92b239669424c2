#include "hopspan/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hopspan {

namespace {

bool parse_vertex(const std::string& tok, Vertex& out) {
  unsigned long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v >= kNoVertex) return false;
  out = static_cast<Vertex>(v);
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream c(line.substr(hash + 1));
      std::string tok;
      if (c >> tok && tok.rfind("n=", 0) == 0) {
        Vertex count = 0;
        if (!parse_vertex(tok.substr(2), count)) {
          throw ParseError("line " + std::to_string(lineno) + ": bad vertex count");
        }
        n = std::max<std::size_t>(n, count);
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;
    Edge e;
    if (!(ls >> b) || !parse_vertex(a, e.u) || !parse_vertex(b, e.v)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected `u v [w]`");
    }
    if (ls >> c) {
      std::size_t used = 0;
      try {
        e.w = std::stod(c, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != c.size()) {
        throw ParseError("line " + std::to_string(lineno) + ": bad weight `" + c + "`");
      }
    }
    if (ls >> extra) {
      throw ParseError("line " + std::to_string(lineno) + ": trailing token `" + extra + "`");
    }
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
    edges.push_back(e);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

std::string format_weight(Weight w) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, p);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
  }
}

}  // namespace hopspan
