#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cluedit/gen.hpp"
#include "cluedit/graph.hpp"
#include "cluedit/oracle.hpp"
#include "testutil.hpp"

using namespace cluedit;
using namespace testutil;

TEST_CASE("edge storage basics") {
  Graph g(5);
  CHECK(g.n() == 5);
  CHECK(g.m() == 0);
  g.add_edge(1, 3);
  g.add_edge(3, 0);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(g.has_edge(0, 3));
  CHECK(!g.has_edge(0, 1));
  CHECK(!g.has_edge(2, 2));
  g.remove_edge(3, 1);
  CHECK(g.m() == 1);
  CHECK(!g.has_edge(1, 3));
  CHECK(g.edges() == std::vector<Edge>{{0, 3}});
  CHECK(g.neighbors(3) == std::vector<int>{0});
  CHECK(g.neighbors(2).empty());
  CHECK(g.non_edge_count() == 9);
}

TEST_CASE("edges come out sorted") {
  Graph g = graph_from_edges(4, {{2, 3}, {0, 2}, {1, 2}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

TEST_CASE("self loops and out-of-range vertices are rejected") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_edge(2, 2), std::invalid_argument);
}

TEST_CASE("graph equality is structural") {
  Graph a = path_graph(4);
  Graph b = graph_from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(a == b);
  b.remove_edge(1, 2);
  CHECK(!(a == b));
  CHECK(!(a == Graph(5)));
}

TEST_CASE("cluster graph detection") {
  CHECK(is_cluster_graph(Graph(0)));
  CHECK(is_cluster_graph(Graph(4)));
  CHECK(is_cluster_graph(complete_graph(5)));
  Graph two_triangles = graph_from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(is_cluster_graph(two_triangles));
  CHECK(!is_cluster_graph(path_graph(3)));
  CHECK(!is_cluster_graph(star_graph(4)));
  Graph nearly = complete_graph(4);
  nearly.remove_edge(1, 2);
  CHECK(!is_cluster_graph(nearly));
}

TEST_CASE("clustering validation") {
  Graph g = path_graph(3);
  CHECK(is_valid_clustering(g, {{0, 1}, {2}}));
  CHECK(is_valid_clustering(g, {{0, 1, 2}}));
  CHECK(!is_valid_clustering(g, {{0, 1}}));          // vertex 2 missing
  CHECK(!is_valid_clustering(g, {{0, 1}, {1, 2}}));  // vertex 1 twice
  CHECK(!is_valid_clustering(g, {{0, 1, 2}, {}}));   // empty cluster
  CHECK(!is_valid_clustering(g, {{0, 1}, {2, 3}}));  // out of range
  CHECK(is_valid_clustering(Graph(0), {}));
}

TEST_CASE("edit sets and their cost") {
  Graph g = path_graph(3);

  EditSet merge = edit_set(g, {{0, 1, 2}});
  CHECK(merge.insertions == std::vector<Edge>{{0, 2}});
  CHECK(merge.deletions.empty());
  CHECK(cost_of_clustering(g, {{0, 1, 2}}) == 1);

  EditSet cut = edit_set(g, {{0}, {1, 2}});
  CHECK(cut.insertions.empty());
  CHECK(cut.deletions == std::vector<Edge>{{0, 1}});
  CHECK(cost_of_clustering(g, {{0}, {1, 2}}) == 1);

  CHECK(cost_of_clustering(g, {{0, 2}, {1}}) == 3);
  CHECK_THROWS_AS(cost_of_clustering(g, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(edit_set(g, {{0, 0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("applying an edit set produces the clustered graph") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(8, 0.4, rng);
    std::vector<int> block(8);
    for (int& b : block) b = rand_int(rng, 0, 3);
    Clustering c = clustering_from_assignment(block);
    EditSet e = edit_set(g, c);
    Graph h = apply_edit_set(g, e);
    CHECK(is_cluster_graph(h));
    CHECK(cost_of_clustering(g, c) ==
          static_cast<long long>(e.insertions.size() + e.deletions.size()));
    CHECK(cost_of_clustering(g, c) == naive_cost(g, c));
    // the clusters of h are exactly the clusters of c
    CHECK(cost_of_clustering(h, canonical_clustering(c)) == 0);
  }
}

TEST_CASE("apply_edit_set rejects inconsistent edits") {
  Graph g = path_graph(3);
  CHECK_THROWS_AS(apply_edit_set(g, {{{0, 1}}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(apply_edit_set(g, {{}, {{0, 2}}}), std::invalid_argument);
}

TEST_CASE("critical cliques of small graphs") {
  // path: all closed neighborhoods differ
  CriticalCliquePartition q = critical_cliques(path_graph(3));
  CHECK(q.parts == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(q.quotient == path_graph(3));

  // complete graph: one class
  q = critical_cliques(complete_graph(4));
  CHECK(q.parts == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(q.weights == std::vector<long long>{4});
  CHECK(q.quotient.n() == 1);

  // star leaves all contain themselves, so no two share a class
  q = critical_cliques(star_graph(4));
  CHECK(q.parts.size() == 4);
  CHECK(q.quotient == star_graph(4));

  // K2 + isolated vertex: the K2 is one class
  q = critical_cliques(graph_from_edges(3, {{0, 1}}));
  CHECK(q.parts == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(q.weights == std::vector<long long>{2, 1});
  CHECK(q.quotient.m() == 0);
}

TEST_CASE("critical clique classes induce cliques and joined-or-apart pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_cograph(rand_int(rng, 1, 9), rng);
    CriticalCliquePartition q = critical_cliques(g);
    size_t total = 0;
    for (const auto& part : q.parts) {
      total += part.size();
      for (size_t i = 0; i < part.size(); ++i)
        for (size_t j = i + 1; j < part.size(); ++j)
          CHECK(g.has_edge(part[i], part[j]));
    }
    CHECK(total == static_cast<size_t>(g.n()));
    int np = static_cast<int>(q.parts.size());
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j) {
        bool expect = q.quotient.has_edge(i, j);
        for (int u : q.parts[i])
          for (int v : q.parts[j]) CHECK(g.has_edge(u, v) == expect);
      }
  }
}

TEST_CASE("weighted quotient cost agrees with expanded cost") {
  Graph g = graph_from_edges(3, {{0, 1}});
  CriticalCliquePartition q = critical_cliques(g);
  CHECK(weighted_cost(q, {{0, 1}}) == 2);       // join {0,1} with {2}
  CHECK(weighted_cost(q, {{0}, {1}}) == 0);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    Graph h = random_graph(rand_int(rng, 1, 8), 0.5, rng);
    CriticalCliquePartition cq = critical_cliques(h);
    int np = static_cast<int>(cq.parts.size());
    std::vector<int> block(np);
    for (int& b : block) b = rand_int(rng, 0, np - 1);
    Clustering pp = clustering_from_assignment(block);
    Clustering expanded;
    for (const auto& cluster : pp) {
      std::vector<int> verts;
      for (int part : cluster)
        verts.insert(verts.end(), cq.parts[part].begin(), cq.parts[part].end());
      expanded.push_back(verts);
    }
    CHECK(weighted_cost(cq, pp) == cost_of_clustering(h, expanded));
  }
}

TEST_CASE("canonical clustering ordering") {
  Clustering c = {{5, 2}, {0, 4}, {3, 1}};
  CHECK(canonical_clustering(c) ==
        Clustering{{0, 4}, {1, 3}, {2, 5}});
  CHECK(canonical_clustering({}).empty());
}

TEST_CASE("assignment decoding drops unused blocks") {
  CHECK(clustering_from_assignment({4, 0, 4, 2}) ==
        Clustering{{0, 2}, {1}, {3}});
  CHECK(clustering_from_assignment({}).empty());
}

TEST_CASE("connected components") {
  Graph g = graph_from_edges(6, {{0, 2}, {2, 4}, {1, 5}});
  CHECK(connected_components(g) ==
        std::vector<std::vector<int>>{{0, 2, 4}, {1, 5}, {3}});
  CHECK(connected_components(Graph(0)).empty());
}
