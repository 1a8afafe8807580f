#pragma once

#include <string>

#include "netrob/topology.hpp"

namespace netrob {

// Malformed input files; the message carries "<name>:<line>:" context so the
// CLI can map these to the parse exit code.
struct ParseError : TopologyError {
  using TopologyError::TopologyError;
};

enum class IngestFormat { EdgeList, WeightedEdgeList, AsRel, Coords, Labels };

IngestFormat ingest_format(const std::string& name);  // throws on unknown names
const char* ingest_format_name(IngestFormat f);

// Builds a topology from an edge file. Node tokens are nonnegative integers,
// remapped to dense ids in numeric order and kept as node names so the file
// round-trips. Edge lists are undirected; AS relationship files are directed,
// with "provider|customer|-1" ingested as one customer->provider edge and
// "a|b|0" as a peer pair of opposite edges.
Topology ingest_topology(const std::string& path, IngestFormat format);
Topology parse_topology(const std::string& text, IngestFormat format,
                        const std::string& name = "input");

// Coordinate and label files attach to an existing topology; node tokens must
// match its node names, and every node must be covered.
void attach_coords(Topology& t, const std::string& path, bool geographic = true);
void parse_coords(Topology& t, const std::string& text, bool geographic,
                  const std::string& name = "input");
void attach_labels(Topology& t, const std::string& path);
void parse_labels(Topology& t, const std::string& text,
                  const std::string& name = "input");

std::string serialize_topology(const Topology& t, IngestFormat format);
std::string serialize_coords(const Topology& t);
std::string serialize_labels(const Topology& t);

// shortest decimal representation that round-trips the exact double
std::string format_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace netrob
