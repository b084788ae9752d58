#pragma once

#include <iosfwd>
#include <string>

#include "bcc/graph_core.hpp"

namespace bcc {

// Graph text format:
//   n <count>
//   e <u> <v>
// BicliqueSystem text format:
//   n <count>
//   b <u1> <u2> ... | <v1> <v2> ...
// '#' starts a comment line; blank lines are ignored. Output is
// byte-deterministic: vertices ascending, bicliques in input order.

Graph parse_graph(std::istream& in);
BicliqueSystem parse_system(std::istream& in);

Graph read_graph_file(const std::string& path);
BicliqueSystem read_system_file(const std::string& path);

std::string format_graph(const Graph& g);
std::string format_system(const BicliqueSystem& system);

}  // namespace bcc
