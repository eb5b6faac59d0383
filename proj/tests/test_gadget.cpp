#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "cluedit/errors.hpp"
#include "cluedit/gadget.hpp"
#include "cluedit/gen.hpp"
#include "testutil.hpp"

using namespace cluedit;
using namespace testutil;

namespace {

PackingInstance instance(std::vector<long long> items, long long b, int k) {
  PackingInstance inst;
  inst.items = std::move(items);
  inst.capacity = b;
  inst.bins = k;
  return inst;
}

}  // namespace

TEST_CASE("packing files parse") {
  PackingInstance inst = parse_packing("2 10\n3 7 5 5\n");
  CHECK(inst.bins == 2);
  CHECK(inst.capacity == 10);
  CHECK(inst.items == std::vector<long long>{3, 7, 5, 5});
  CHECK(inst.total() == 20);

  CHECK(parse_packing("3 5\n").items.empty());
  CHECK(parse_packing("# note\n1 1\n1\n").total() == 1);

  CHECK_THROWS_AS(parse_packing(""), ParseError);
  CHECK_THROWS_AS(parse_packing("2\n"), ParseError);
  CHECK_THROWS_AS(parse_packing("2 0\n"), ParseError);    // capacity < 1
  CHECK_THROWS_AS(parse_packing("-1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_packing("2 5\n3 0\n"), ParseError);  // item < 1
  CHECK_THROWS_AS(parse_packing("2 5\nx\n"), ParseError);
}

TEST_CASE("reduction to exact-fill instances") {
  ToPerfectResult r = to_perfect(instance({2, 2}, 2, 2));
  CHECK(r.kind == PackingReduction::Perfect);
  CHECK(r.instance.items == std::vector<long long>{2, 2});
  CHECK(r.instance.bins == 2);

  // short of capacity: pad with unit items
  r = to_perfect(instance({1, 2}, 2, 2));
  CHECK(r.kind == PackingReduction::Perfect);
  CHECK(r.instance.items == std::vector<long long>{1, 2, 1});
  CHECK(r.instance.total() == 4);

  // odd bin count: one full bin is added first
  r = to_perfect(instance({2, 2}, 2, 3));
  CHECK(r.kind == PackingReduction::Perfect);
  CHECK(r.instance.bins == 4);
  CHECK(r.instance.items == std::vector<long long>{2, 2, 2, 1, 1});
  CHECK(r.instance.total() == 8);

  // so loose that any packing works
  r = to_perfect(instance({1}, 10, 10));
  CHECK(r.kind == PackingReduction::AlwaysPackable);

  CHECK(to_perfect(instance({11}, 10, 2)).kind == PackingReduction::TriviallyNo);
  CHECK(to_perfect(instance({9, 9, 9}, 10, 2)).kind ==
        PackingReduction::TriviallyNo);
}

TEST_CASE("reduction preserves the packing answer") {
  std::mt19937_64 rng(113);
  int perfect_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int k = rand_int(rng, 1, 3);
    long long b = rand_int(rng, 1, 6);
    PackingInstance inst = instance({}, b, k);
    int n = rand_int(rng, 0, 5);
    for (int i = 0; i < n; ++i) inst.items.push_back(rand_int(rng, 1, 7));

    bool want = decide_packing(inst, false).packable;
    ToPerfectResult r = to_perfect(inst);
    switch (r.kind) {
      case PackingReduction::TriviallyNo:
        CHECK(!want);
        break;
      case PackingReduction::AlwaysPackable:
        CHECK(want);
        break;
      case PackingReduction::Perfect:
        ++perfect_seen;
        CHECK(r.instance.total() == r.instance.capacity * r.instance.bins);
        CHECK(r.instance.bins % 2 == 0);
        CHECK(decide_packing(r.instance, true).packable == want);
        break;
    }
  }
  CHECK(perfect_seen > 10);
}

TEST_CASE("packing decisions and witnesses") {
  PackingInstance inst = instance({1, 1, 2}, 2, 2);
  PackingDecision d = decide_packing(inst, true);
  CHECK(d.packable);
  REQUIRE(d.bins.size() == 2);
  std::set<int> used;
  for (const auto& bin : d.bins) {
    long long load = 0;
    for (int idx : bin) {
      CHECK(used.insert(idx).second);
      load += inst.items[idx];
    }
    CHECK(load == inst.capacity);
  }
  CHECK(used.size() == inst.items.size());

  CHECK(!decide_packing(instance({2, 2, 2}, 3, 2), true).packable);
  CHECK(!decide_packing(instance({2, 2, 2}, 3, 2), false).packable);
  CHECK(decide_packing(instance({5, 3, 3, 4, 5}, 10, 2), true).packable);
  CHECK(decide_packing(instance({}, 5, 3), false).packable);
  CHECK(!decide_packing(instance({}, 5, 3), true).packable);  // bins underfull
  CHECK(!decide_packing(instance({1}, 5, 0), false).packable);

  // over-budget inputs are refused, not mis-answered
  PackingInstance big = instance({}, 1000, 13);
  for (int i = 0; i < 13; ++i) big.items.push_back(100);
  CHECK_THROWS_AS(decide_packing(big, false), BudgetExceeded);
}

TEST_CASE("target cost formula") {
  CHECK(gadget_target_cost(instance({1, 1, 2}, 2, 2), 10) == 41);
  CHECK(gadget_target_cost(instance({1, 1, 2}, 2, 2), 17) == 69);
  CHECK(gadget_target_cost(instance({2, 2, 2}, 3, 2), 37) == 225);
  CHECK(gadget_target_cost(instance({2, 2}, 2, 2), 1) == 4);
  CHECK(gadget_target_cost(instance({2}, 2, 1), 5) == 0);
  // only defined when the halved term is integral
  CHECK_THROWS_AS(gadget_target_cost(instance({1}, 2, 1), 3), std::logic_error);
}

TEST_CASE("gadget construction layout") {
  GadgetOutput out = build_gadget(instance({1, 1, 2}, 2, 2), 3);
  const Graph& g = out.graph;
  CHECK(g.n() == 2 * 3 + 4);
  CHECK(out.t == gadget_target_cost(instance({1, 1, 2}, 2, 2), 3));
  CHECK(out.b_blocks == std::vector<std::pair<int, int>>{{0, 3}, {3, 3}});
  CHECK(out.a_blocks ==
        std::vector<std::pair<int, int>>{{6, 1}, {7, 1}, {8, 2}});

  auto inside = [&](std::pair<int, int> blk, int v) {
    return v >= blk.first && v < blk.first + blk.second;
  };
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool same_block = false, anchor_u = false, anchor_v = false;
      for (auto blk : out.b_blocks) {
        if (inside(blk, u) && inside(blk, v)) same_block = true;
        if (inside(blk, u)) anchor_u = true;
        if (inside(blk, v)) anchor_v = true;
      }
      for (auto blk : out.a_blocks)
        if (inside(blk, u) && inside(blk, v)) same_block = true;
      bool expect = same_block || (anchor_u != anchor_v);
      CHECK(g.has_edge(u, v) == expect);
    }

  CHECK_THROWS_AS(build_gadget(instance({1}, 2, 1), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_gadget(instance({3, 3}, 3, 2), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_gadget(instance({1000, 1000}, 1000, 2), 100000),
                  std::invalid_argument);  // vertex cap
}

TEST_CASE("verification of a packable instance") {
  GadgetReport rep = verify_gadget(instance({1, 1, 2}, 2, 2), 17);
  CHECK(rep.h == 17);
  CHECK(rep.t == 69);
  CHECK(rep.c_star == 69);
  CHECK(rep.packing_decision);
  CHECK(rep.optimal_cluster_count == 2);
  CHECK(rep.quotient_parts == 5);
  CHECK(rep.cluster_sizes == std::vector<long long>{19, 19});
  CHECK(rep.quotient_matches_blocks);
  CHECK(rep.check_cluster_count);
  CHECK(rep.check_cost_lower_bound);
  CHECK(rep.check_equality_iff_packing);
  CHECK(rep.check_equal_sizes);
  CHECK(rep.all_pass());
}

TEST_CASE("verification of an unpackable instance") {
  GadgetReport rep = verify_gadget(instance({2, 2, 2}, 3, 2), 37);
  CHECK(rep.t == 225);
  CHECK(rep.c_star == 226);
  CHECK(!rep.packing_decision);
  CHECK(rep.check_cluster_count);
  CHECK(rep.check_cost_lower_bound);
  CHECK(rep.check_equality_iff_packing);  // strict gap matches "no"
  CHECK(rep.check_equal_sizes);           // vacuous above the target
  CHECK(rep.all_pass());
}

TEST_CASE("small anchors let extra optima slip in") {
  // with h too small the cluster-count guarantee fails before the others
  GadgetReport h1 = verify_gadget(instance({1, 1, 2}, 2, 2), 1);
  CHECK(!h1.check_cluster_count);
  GadgetReport h2 = verify_gadget(instance({1, 1, 2}, 2, 2), 2);
  CHECK(!h2.check_cluster_count);
  GadgetReport h3 = verify_gadget(instance({1, 1, 2}, 2, 2), 3);
  CHECK(h3.all_pass());
}

TEST_CASE("degenerate single-bin gadget") {
  GadgetReport rep = verify_gadget(instance({2}, 2, 1), 4);
  CHECK(rep.t == 0);
  CHECK(rep.c_star == 0);
  CHECK(rep.packing_decision);
  CHECK(rep.optimal_cluster_count == 1);
  CHECK(rep.all_pass());
}
