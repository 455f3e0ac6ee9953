#pragma once

#include <iosfwd>
#include <string>

#include "p2t/formula.hpp"
#include "p2t/graph.hpp"
#include "p2t/reduction.hpp"

namespace p2t {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p2t-graph v1" header, then one "<label> <label>" line per edge in
// canonical emission order. Round-trips byte-identically.
std::string serialize_graph(const Graph& g);
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// "p2t-partition v1" header, then "<label> <label> <A|B>" per edge.
std::string serialize_partition(const Graph& g, const EdgePartition& p);
EdgePartition parse_partition(std::istream& in, const Graph& g);
EdgePartition parse_partition(const std::string& text, const Graph& g);

// JSON manifest with keys num_vars, alpha, omega, variables, clauses.
std::string serialize_manifest(const ReductionManifest& m);
ReductionManifest parse_manifest(std::istream& in);
ReductionManifest parse_manifest(const std::string& text);

// Whitespace-separated signed variable indices, e.g. "1 -2 3".
std::string serialize_assignment(const Assignment& a);
Assignment parse_assignment(std::istream& in, int num_vars);
Assignment parse_assignment(const std::string& text, int num_vars);

// DOT output; purple-gadget edges are dashed, and when a partition is given
// class A edges are blue and class B edges are red.
std::string export_dot(const Graph& g, const EdgePartition* partition = nullptr);

}  // namespace p2t
