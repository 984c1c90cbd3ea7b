#pragma once

#include <string>

#include "sepsys/binary_system.hpp"
#include "sepsys/dsep.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/partition.hpp"

namespace sepsys {

// Line-oriented graph file:
//   graph <n> <m>
//   e <u> <v> [weight a/b] [prob a/b]     (m lines, nodes 1-indexed)
// Blank lines and lines starting with '#' are ignored.
UndirectedGraph parse_graph(const std::string& text);
std::string render_graph(const UndirectedGraph& g);

// System file:
//   sbs <N>
//   probs <p_1> ... <p_N>
//   repr truthtable <2^N bits> | repr mincuts <k> (+ k word lines)
//     | repr threshold (+ weights/alpha0/cmp lines) | repr graph <path>
// `base_dir` resolves relative graph references.
BinarySystem parse_system(const std::string& text,
                          const std::string& base_dir = ".");
BinarySystem load_system_file(const std::string& path);
UndirectedGraph load_graph_file(const std::string& path);

// Certificate file:
//   dsep <pathset|cutset> <d>
//   h <w_1> ... <w_N> >= <alpha>          (d lines)
HyperplaneCertificate parse_certificate(const std::string& text, int n);
std::string render_certificate(const HyperplaneCertificate& cert);

// Whitespace-separated positive integers.
PartitionInstance parse_partition(const std::string& text);

std::string read_file(const std::string& path);

} // namespace sepsys
