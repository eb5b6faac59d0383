#pragma once

#include <random>

#include "cluedit/cotree.hpp"
#include "cluedit/graph.hpp"

namespace cluedit {

// Uniform integer in [lo, hi] drawn from the engine's standard bit stream.
// std::uniform_int_distribution is implementation-defined, so outputs are
// produced by rejection sampling here to keep seeds reproducible anywhere.
int rand_int(std::mt19937_64& rng, int lo, int hi);
double rand_unit(std::mt19937_64& rng);  // [0, 1)

struct CotreeGenConfig {
  int leaves = 8;
  bool tpg = false;              // keep join nodes to one non-leaf child
  double root_one_prob = 0.5;    // kinds alternate below the root
  int max_arity = 4;
  bool shuffle_ids = true;       // random leaf id permutation
};

// Graph of a top-down random cotree: kind alternates by depth, arities and
// subtree sizes drawn from the engine.  In tpg mode a join node gives all
// but one child a single leaf.
Graph random_cograph_with(const CotreeGenConfig& cfg, std::mt19937_64& rng);

Graph random_cograph(int n, std::mt19937_64& rng);
Graph random_tpg(int n, std::mt19937_64& rng);

// Plain G(n, prob) graph, for negative tests.
Graph random_graph(int n, double edge_prob, std::mt19937_64& rng);

}  // namespace cluedit
