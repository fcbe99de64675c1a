#pragma once

#include <cstdint>
#include <string>

#include "gldp/graph.hpp"

namespace gldp {

enum class GeneratorModel { sbm2, ba };

std::string to_string(GeneratorModel model);
GeneratorModel parse_generator_model(const std::string& name);

// Parameters for the synthetic generators. sbm2 is a two-block stochastic
// block model with equal-size blocks; ba is preferential attachment.
struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::sbm2;
  int n = 0;
  double p_in = 0.25;   // sbm2 intra-block edge probability
  double p_out = 0.05;  // sbm2 inter-block edge probability
  int m = 1;            // ba attachment count, 1 <= m < n
  std::uint64_t seed = 0;
};

// Two-block SBM: blocks are [0, n/2) and [n/2, n); each intra-block pair is
// an edge independently with probability p_in, inter-block with p_out.
// Bit-identical output for a fixed (n, p_in, p_out, seed).
Graph generate_sbm2(int n, double p_in, double p_out, std::uint64_t seed);

// Preferential attachment: start from a complete graph on m nodes (a single
// node when m == 1); each later node attaches to m distinct existing nodes
// drawn proportionally to current degree, without replacement. For m >= 2 the
// edge count is exactly C(m,2) + (n-m)*m.
Graph generate_ba(int n, int m, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

// Attachment-count convention used by the experiment harness: max(1, n/5).
int default_ba_attachment(int n);

}  // namespace gldp
