#include "amalgam/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

int parse_int(std::string_view tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError("expected integer, got '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<Graph> g;
  bool seen_order = false, seen_edge = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "n") {
      if (g) throw ParseError("duplicate 'n' line", line_no);
      if (toks.size() != 2) throw ParseError("'n' takes one argument", line_no);
      int n = parse_int(toks[1], line_no);
      if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range 0..64", line_no);
      g.emplace(n);
    } else if (kw == "order") {
      if (!g) throw ParseError("'order' before 'n'", line_no);
      if (seen_order) throw ParseError("duplicate 'order' line", line_no);
      if (seen_edge) throw ParseError("'order' must precede edges", line_no);
      std::vector<int> seq;
      for (std::size_t i = 1; i < toks.size(); ++i) seq.push_back(parse_int(toks[i], line_no));
      try {
        g->set_order(seq);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line_no);
      }
      seen_order = true;
    } else if (kw == "e") {
      if (!g) throw ParseError("edge before 'n'", line_no);
      if (toks.size() != 3) throw ParseError("'e' takes two vertices", line_no);
      int u = parse_int(toks[1], line_no), v = parse_int(toks[2], line_no);
      if (u < 0 || v < 0 || u >= g->size() || v >= g->size()) throw ParseError("edge endpoint out of range", line_no);
      if (u >= v) throw ParseError("edge must be written with u < v", line_no);
      if (g->adjacent(u, v)) throw ParseError("duplicate edge", line_no);
      g->add_edge(u, v);
      seen_edge = true;
    } else {
      throw ParseError("unknown directive '" + kw + "'", line_no);
    }
  }
  if (!g) throw ParseError("missing 'n' line", line_no);
  return *g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return parse_graph(in);
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.size() << '\n';
  if (g.has_order()) {
    out << "order";
    for (int v : g.order()) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  " << v;
    if (g.has_order()) out << " [label=\"" << v << " (r" << g.rank(v) << ")\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size() || v < 0 || v >= kMaxVertices)
        throw InvalidArgument("bad vertex '" + std::string(tok) + "'");
      s = s.with(v);
    }
    pos = comma + 1;
  }
  return s;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace amalgam
