#include "netrob/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace netrob {
namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// one content line at a time, comments stripped, with 1-based line numbers
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({line, raw});
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(trim(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::uint64_t parse_node_token(std::string_view tok, const std::string& name,
                               std::size_t line) {
  std::uint64_t id = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(name, line, "expected a nonnegative integer node id, got '" + std::string(tok) + "'");
  }
  return id;
}

double parse_number(std::string_view tok, const std::string& name, std::size_t line,
                    const char* what) {
  double x = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(name, line, std::string("expected a ") + what + ", got '" + std::string(tok) + "'");
  }
  return x;
}

struct RawEdge {
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  double w = 0;
  std::size_t line = 0;
};

Topology build_from_raw(std::vector<RawEdge> raw, bool directed, bool weighted,
                        const std::string& name) {
  std::set<std::uint64_t> ids;
  for (const RawEdge& e : raw) {
    ids.insert(e.u);
    ids.insert(e.v);
  }
  if (ids.empty()) throw ParseError(name + ": no edges found");
  std::map<std::uint64_t, NodeId> index;
  std::vector<std::string> names;
  for (const std::uint64_t id : ids) {
    index.emplace(id, static_cast<NodeId>(names.size()));
    names.push_back(std::to_string(id));
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  std::vector<double> weights;
  for (const RawEdge& e : raw) {
    NodeId a = index[e.u];
    NodeId b = index[e.v];
    std::pair<NodeId, NodeId> key =
        directed ? std::pair{a, b} : std::pair{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second) {
      fail(name, e.line, "duplicate edge " + std::to_string(e.u) + " - " + std::to_string(e.v));
    }
    edges.push_back({a, b});
    if (weighted) weights.push_back(e.w);
  }
  Topology t = Topology::build(static_cast<std::uint32_t>(names.size()), directed,
                               std::move(edges), std::move(weights));
  t.set_node_names(std::move(names));
  return t;
}

Topology parse_edge_list(std::string_view text, bool weighted, const std::string& name) {
  std::vector<RawEdge> raw;
  for (const auto& [line, body] : content_lines(text)) {
    const std::vector<std::string_view> f = split_fields(body, " \t,");
    const std::size_t want = weighted ? 3 : 2;
    if (f.size() != want) {
      fail(name, line,
           "expected " + std::to_string(want) + " fields, got " + std::to_string(f.size()));
    }
    RawEdge e;
    e.u = parse_node_token(f[0], name, line);
    e.v = parse_node_token(f[1], name, line);
    if (e.u == e.v) fail(name, line, "self-loop at node " + std::to_string(e.u));
    if (weighted) {
      e.w = parse_number(f[2], name, line, "positive weight");
      if (!(e.w > 0.0) || !std::isfinite(e.w)) {
        fail(name, line, "edge weight must be finite and positive");
      }
    }
    e.line = line;
    raw.push_back(e);
  }
  return build_from_raw(std::move(raw), false, weighted, name);
}

Topology parse_as_rel(std::string_view text, const std::string& name) {
  std::vector<RawEdge> raw;
  for (const auto& [line, body] : content_lines(text)) {
    const std::vector<std::string_view> f = split_fields(body, "|");
    // CAIDA files may carry a trailing source field; the first three matter
    if (f.size() < 3) {
      fail(name, line, "expected 'as|as|relationship', got " + std::to_string(f.size()) +
                           " fields");
    }
    const std::uint64_t a = parse_node_token(f[0], name, line);
    const std::uint64_t b = parse_node_token(f[1], name, line);
    if (a == b) fail(name, line, "self-loop at AS " + std::to_string(a));
    const double rel = parse_number(f[2], name, line, "relationship code");
    if (rel == -1.0) {
      // provider a, customer b: the edge points customer -> provider
      raw.push_back({b, a, 0, line});
    } else if (rel == 0.0) {
      raw.push_back({a, b, 0, line});
      raw.push_back({b, a, 0, line});
    } else {
      fail(name, line, "unknown relationship code '" + std::string(f[2]) + "'");
    }
  }
  return build_from_raw(std::move(raw), true, false, name);
}

// node tokens in attachment files resolve through node names, falling back to
// plain indices when the topology has none
NodeId resolve_node(const Topology& t, std::string_view tok,
                    const std::map<std::string, NodeId, std::less<>>& by_name,
                    const std::string& name, std::size_t line) {
  if (!by_name.empty()) {
    const auto it = by_name.find(std::string(tok));
    if (it == by_name.end()) {
      fail(name, line, "unknown node '" + std::string(tok) + "'");
    }
    return it->second;
  }
  const std::uint64_t id = parse_node_token(tok, name, line);
  if (id >= t.node_count()) {
    fail(name, line, "unknown node '" + std::string(tok) + "'");
  }
  return static_cast<NodeId>(id);
}

std::map<std::string, NodeId, std::less<>> name_index(const Topology& t) {
  std::map<std::string, NodeId, std::less<>> m;
  if (t.has_node_names()) {
    for (NodeId i = 0; i < t.node_count(); ++i) m.emplace(t.node_name(i), i);
  }
  return m;
}

}  // namespace

IngestFormat ingest_format(const std::string& name) {
  if (name == "edgelist") return IngestFormat::EdgeList;
  if (name == "weighted_edgelist") return IngestFormat::WeightedEdgeList;
  if (name == "as_rel") return IngestFormat::AsRel;
  if (name == "coords") return IngestFormat::Coords;
  if (name == "labels") return IngestFormat::Labels;
  throw TopologyError("unknown ingest format '" + name + "'");
}

const char* ingest_format_name(IngestFormat f) {
  switch (f) {
    case IngestFormat::EdgeList: return "edgelist";
    case IngestFormat::WeightedEdgeList: return "weighted_edgelist";
    case IngestFormat::AsRel: return "as_rel";
    case IngestFormat::Coords: return "coords";
    case IngestFormat::Labels: return "labels";
  }
  return "unknown";
}

Topology parse_topology(const std::string& text, IngestFormat format,
                        const std::string& name) {
  switch (format) {
    case IngestFormat::EdgeList: return parse_edge_list(text, false, name);
    case IngestFormat::WeightedEdgeList: return parse_edge_list(text, true, name);
    case IngestFormat::AsRel: return parse_as_rel(text, name);
    case IngestFormat::Coords:
    case IngestFormat::Labels:
      throw TopologyError(std::string(ingest_format_name(format)) +
                          " files attach to a topology; ingest the graph first");
  }
  throw TopologyError("unknown ingest format");
}

Topology ingest_topology(const std::string& path, IngestFormat format) {
  return parse_topology(read_file(path), format, path);
}

void parse_coords(Topology& t, const std::string& text, bool geographic,
                  const std::string& name) {
  const auto by_name = name_index(t);
  std::vector<Coord> coords(t.node_count());
  std::vector<bool> has(t.node_count(), false);
  for (const auto& [line, body] : content_lines(text)) {
    const std::vector<std::string_view> f = split_fields(body, " \t,");
    if (f.size() != 3) {
      fail(name, line, "expected 'node,lat,lon', got " + std::to_string(f.size()) + " fields");
    }
    const NodeId i = resolve_node(t, f[0], by_name, name, line);
    if (has[i]) fail(name, line, "duplicate coordinates for node '" + std::string(f[0]) + "'");
    const double lat = parse_number(f[1], name, line, "latitude");
    const double lon = parse_number(f[2], name, line, "longitude");
    if (geographic && (lat < -90.0 || lat > 90.0)) {
      fail(name, line, "latitude out of range");
    }
    coords[i] = {lon, lat};
    has[i] = true;
  }
  for (NodeId i = 0; i < t.node_count(); ++i) {
    if (!has[i]) {
      throw ParseError(name + ": node '" +
                       (t.has_node_names() ? t.node_name(i) : std::to_string(i)) +
                       "' has no coordinates");
    }
  }
  t.set_coords(std::move(coords), geographic);
}

void attach_coords(Topology& t, const std::string& path, bool geographic) {
  parse_coords(t, read_file(path), geographic, path);
}

void parse_labels(Topology& t, const std::string& text, const std::string& name) {
  const auto by_name = name_index(t);
  std::vector<std::string> label(t.node_count());
  std::vector<bool> has(t.node_count(), false);
  for (const auto& [line, body] : content_lines(text)) {
    const std::vector<std::string_view> f = split_fields(body, ",");
    if (f.size() != 2) {
      fail(name, line, "expected 'node,label', got " + std::to_string(f.size()) + " fields");
    }
    const NodeId i = resolve_node(t, f[0], by_name, name, line);
    if (has[i]) fail(name, line, "duplicate label for node '" + std::string(f[0]) + "'");
    label[i] = std::string(f[1]);
    has[i] = true;
  }
  for (NodeId i = 0; i < t.node_count(); ++i) {
    if (!has[i]) {
      throw ParseError(name + ": node '" +
                       (t.has_node_names() ? t.node_name(i) : std::to_string(i)) +
                       "' has no label");
    }
  }
  std::vector<std::string> classes = label;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<std::uint32_t> ids(t.node_count());
  for (NodeId i = 0; i < t.node_count(); ++i) {
    ids[i] = static_cast<std::uint32_t>(
        std::lower_bound(classes.begin(), classes.end(), label[i]) - classes.begin());
  }
  t.set_labels(std::move(ids), std::move(classes));
}

void attach_labels(Topology& t, const std::string& path) {
  parse_labels(t, read_file(path), path);
}

std::string format_double(double x) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return {buf, p};
}

namespace {

std::string node_token(const Topology& t, NodeId i) {
  return t.has_node_names() ? t.node_name(i) : std::to_string(i);
}

}  // namespace

std::string serialize_topology(const Topology& t, IngestFormat format) {
  std::string out;
  switch (format) {
    case IngestFormat::EdgeList:
    case IngestFormat::WeightedEdgeList: {
      const bool weighted = format == IngestFormat::WeightedEdgeList;
      if (weighted && !t.weighted()) {
        throw TopologyError("weighted serialization needs edge weights");
      }
      if (t.directed()) {
        throw TopologyError("edge list serialization covers undirected graphs; use as_rel");
      }
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.edge(e);
        out += node_token(t, ed.u);
        out += ' ';
        out += node_token(t, ed.v);
        if (weighted) {
          out += ' ';
          out += format_double(t.weight(e));
        }
        out += '\n';
      }
      return out;
    }
    case IngestFormat::AsRel: {
      if (!t.directed()) {
        throw TopologyError("as_rel serialization needs a directed graph");
      }
      std::vector<bool> done(t.edge_count(), false);
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (done[e]) continue;
        const Edge& ed = t.edge(e);
        const std::optional<EdgeId> back = t.find_edge(ed.v, ed.u);
        if (back && !done[*back]) {
          done[*back] = true;
          out += node_token(t, ed.u);
          out += '|';
          out += node_token(t, ed.v);
          out += "|0\n";
        } else {
          // edge points customer -> provider
          out += node_token(t, ed.v);
          out += '|';
          out += node_token(t, ed.u);
          out += "|-1\n";
        }
      }
      return out;
    }
    case IngestFormat::Coords: return serialize_coords(t);
    case IngestFormat::Labels: return serialize_labels(t);
  }
  throw TopologyError("unknown ingest format");
}

std::string serialize_coords(const Topology& t) {
  if (!t.has_coords()) throw TopologyError("topology has no coordinates");
  std::string out;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    const Coord& c = t.coords()[i];
    out += node_token(t, i);
    out += ',';
    out += format_double(c.y);
    out += ',';
    out += format_double(c.x);
    out += '\n';
  }
  return out;
}

std::string serialize_labels(const Topology& t) {
  if (!t.has_labels()) throw TopologyError("topology has no labels");
  std::string out;
  for (NodeId i = 0; i < t.node_count(); ++i) {
    out += node_token(t, i);
    out += ',';
    out += t.label_names()[t.label_of()[i]];
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TopologyError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TopologyError("cannot write '" + path + "'");
  out << content;
  if (!out) throw TopologyError("write failed for '" + path + "'");
}

}  // namespace netrob
