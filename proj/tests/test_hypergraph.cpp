#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace arbopack;
using namespace testsupport;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("validate accepts a minimal mixed instance") {
  MixedHypergraph h = graph_of(2, {dy("a0", {0}, 1)});
  CHECK_NOTHROW(validate_instance(h, bounds_of(2, 1)));
}

TEST_CASE("validate names the offending element") {
  MixedHypergraph bad_head = graph_of(3, {Dyperedge{"a0", {1, 2}, 1, 0.0}});
  CHECK(code_of([&] { validate_instance(bad_head, bounds_of(3, 1)); }) == Errc::HeadInTail);

  MixedHypergraph tiny = graph_of(2, {}, {Hyperedge{"e0", {0}, 0.0}});
  CHECK(code_of([&] { validate_instance(tiny, bounds_of(2, 1)); }) == Errc::HyperedgeTooSmall);

  MixedHypergraph dup = graph_of(2, {dy("x", {0}, 1)}, {hy("x", {0, 1})});
  CHECK(code_of([&] { validate_instance(dup, bounds_of(2, 1)); }) == Errc::DuplicateEdgeId);

  MixedHypergraph empty_tail = graph_of(2, {Dyperedge{"a0", {}, 1, 0.0}});
  CHECK(code_of([&] { validate_instance(empty_tail, bounds_of(2, 1)); }) == Errc::EmptyTail);

  MixedHypergraph out_of_range = graph_of(2, {dy("a0", {0}, 5)});
  CHECK(code_of([&] { validate_instance(out_of_range, bounds_of(2, 1)); }) ==
        Errc::UnknownVertex);

  MixedHypergraph ok = graph_of(2, {dy("a0", {0}, 1)});
  RootBounds negative = bounds_of(2, 1);
  negative.min_roots[0] = -1;
  CHECK(code_of([&] { validate_instance(ok, negative); }) == Errc::NegativeBound);
}

TEST_CASE("in_degree_set counts entering dyperedges") {
  MixedHypergraph h = graph_of(3, {dy("a0", {0, 2}, 1)});
  std::vector<VertexId> just_head{1};
  CHECK(in_degree_set(h.dyperedges, 3, just_head) == 1);
  std::vector<VertexId> everything{0, 1, 2};
  CHECK(in_degree_set(h.dyperedges, 3, everything) == 0);

  MixedHypergraph loop = graph_of(2, {dy("a0", {0}, 1), dy("a1", {1}, 0)});
  std::vector<VertexId> both{0, 1};
  CHECK(in_degree_set(loop.dyperedges, 2, both) == 0);
}

TEST_CASE("hyper_degree_set counts crossing hyperedges") {
  MixedHypergraph h = graph_of(3, {}, {hy("e0", {0, 1})});
  std::vector<VertexId> left{0};
  CHECK(hyper_degree_set(h.hyperedges, 3, left) == 1);

  MixedHypergraph h3 = graph_of(3, {}, {hy("e0", {0, 1, 2})});
  std::vector<VertexId> all{0, 1, 2};
  CHECK(hyper_degree_set(h3.hyperedges, 3, all) == 0);

  MixedHypergraph two = graph_of(3, {}, {hy("e0", {0, 1}), hy("e1", {1, 2})});
  std::vector<VertexId> middle{1};
  CHECK(hyper_degree_set(two.hyperedges, 3, middle) == 2);
}

TEST_CASE("partition_cover_count counts each edge once") {
  MixedHypergraph shared = graph_of(2, {}, {hy("e0", {0, 1})});
  CHECK(partition_cover_count(shared, {{0}, {1}}) == 1);

  MixedHypergraph arcs = graph_of(3, {dy("a0", {0}, 1)});
  CHECK(partition_cover_count(arcs, {{1}, {2}}) == 1);

  CHECK(partition_cover_count(arcs, {}) == 0);

  CHECK(code_of([&] { partition_cover_count(arcs, {{0, 1}, {1}}); }) ==
        Errc::OverlappingClasses);
}

TEST_CASE("directed extension replaces hyperedges by bundles") {
  MixedHypergraph h = graph_of(2, {}, {hy("e0", {0, 1})});
  DirectedExtension d = directed_extension(h);
  REQUIRE(d.arcs.size() == 2);
  CHECK(d.arcs[0].head == 0);
  CHECK(d.arcs[0].tail == std::vector<VertexId>{1});
  CHECK(d.arcs[1].head == 1);
  CHECK(d.arcs[1].tail == std::vector<VertexId>{0});
  CHECK(d.arcs[0].from_hyperedge);

  MixedHypergraph h3 = graph_of(3, {}, {hy("e0", {0, 1, 2})});
  DirectedExtension d3 = directed_extension(h3);
  REQUIRE(d3.arcs.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(d3.arcs[i].head == i);
    CHECK(d3.arcs[i].tail.size() == 2);
  }

  MixedHypergraph pure = graph_of(2, {dy("a0", {0}, 1)});
  DirectedExtension dp = directed_extension(pure);
  CHECK(dp.arcs.size() == 1);
  CHECK(dp.num_original == 1);
  CHECK_FALSE(dp.arcs[0].from_hyperedge);
}

TEST_CASE("extension size and provenance") {
  MixedHypergraph h =
      graph_of(4, {dy("a0", {0, 1}, 2), dy("a1", {3}, 0)}, {hy("e0", {0, 1, 2}), hy("e1", {2, 3})});
  DirectedExtension d = directed_extension(h);
  CHECK(static_cast<int>(d.arcs.size()) == 2 + 3 + 2);
  std::set<std::pair<bool, std::pair<int, int>>> tags;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) {
    tags.insert({d.arcs[i].from_hyperedge, {d.arcs[i].source, d.arcs[i].head}});
  }
  CHECK(tags.size() == d.arcs.size());  // distinct provenance per arc
}

TEST_CASE("underlying hypergraph merges head into tail") {
  MixedHypergraph h = graph_of(3, {dy("a0", {0, 2}, 1)});
  UnderlyingHypergraph u = underlying_hypergraph(h);
  REQUIRE(u.graph.edges.size() == 1);
  CHECK(u.graph.edges[0] == std::vector<VertexId>{0, 1, 2});

  MixedHypergraph pair = graph_of(2, {dy("a0", {0}, 1)});
  CHECK(underlying_hypergraph(pair).graph.edges[0] == std::vector<VertexId>{0, 1});

  MixedHypergraph no_arcs = graph_of(2, {}, {hy("e0", {0, 1})});
  UnderlyingHypergraph u2 = underlying_hypergraph(no_arcs);
  CHECK(u2.num_from_dyperedges == 0);
  CHECK(u2.graph.edges[0] == no_arcs.hyperedges[0].vertices);
}

TEST_CASE("re-orienting the underlying edges recovers the dyperedges") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(2, 5);
    MixedHypergraph h = graph_of(n);
    int arcs = rng.uniform_int(1, 4);
    for (int i = 0; i < arcs; ++i) {
      int head = rng.uniform_int(0, n - 1);
      int size = rng.uniform_int(1, n - 1);
      std::vector<int> picks = rng.sample_distinct(n - 1, size);
      for (int& p : picks) {
        if (p >= head) ++p;
      }
      h.dyperedges.push_back(dy("a" + std::to_string(i), picks, head));
    }
    UnderlyingHypergraph u = underlying_hypergraph(h);
    REQUIRE(u.num_from_dyperedges == arcs);
    for (int i = 0; i < arcs; ++i) {
      const Dyperedge& a = h.dyperedges[i];
      std::vector<VertexId> rebuilt;
      for (VertexId v : u.graph.edges[i]) {
        if (v != a.head) rebuilt.push_back(v);
      }
      CHECK(rebuilt == a.tail);
    }
  }
}

TEST_CASE("subpartition enumeration counts and order") {
  CHECK(enumerate_subpartitions(1).size() == 2);

  std::vector<Subpartition> two = enumerate_subpartitions(2);
  REQUIRE(two.size() == 5);
  CHECK(two[0] == Subpartition{});
  CHECK(two[1] == Subpartition{{1}});
  CHECK(two[2] == Subpartition{{0}});
  CHECK(two[3] == Subpartition{{0, 1}});
  CHECK(two[4] == Subpartition{{0}, {1}});

  CHECK(enumerate_subpartitions(3).size() == 15);

  for (int n = 0; n <= 6; ++n) {
    CHECK(static_cast<long long>(enumerate_subpartitions(n).size()) == bell_number(n + 1));
    int partitions = 0;
    for_each_partition(n, [&](const Subpartition&) { ++partitions; });
    CHECK(static_cast<long long>(partitions) == bell_number(n));
  }

  Limits tight;
  tight.max_subpartition_vertices = 3;
  CHECK_THROWS_AS(enumerate_subpartitions(4, tight), Error);
}

TEST_CASE("entering-arc sets are subadditive under union") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform_int(2, 6);
    MixedHypergraph h = graph_of(n);
    int arcs = rng.uniform_int(0, 6);
    for (int i = 0; i < arcs; ++i) {
      int head = rng.uniform_int(0, n - 1);
      int size = rng.uniform_int(1, n - 1);
      std::vector<int> picks = rng.sample_distinct(n - 1, size);
      for (int& p : picks) {
        if (p >= head) ++p;
      }
      h.dyperedges.push_back(dy("a" + std::to_string(i), picks, head));
    }

    std::vector<int> x = rng.random_subset(n, 0.4);
    std::vector<int> y;
    for (int v : rng.random_subset(n, 0.4)) {
      if (!std::binary_search(x.begin(), x.end(), v)) y.push_back(v);
    }
    std::vector<int> both = x;
    both.insert(both.end(), y.begin(), y.end());
    std::sort(both.begin(), both.end());

    auto enters = [&](const Dyperedge& a, const std::vector<int>& set) {
      if (!std::binary_search(set.begin(), set.end(), a.head)) return false;
      for (VertexId v : a.tail) {
        if (!std::binary_search(set.begin(), set.end(), v)) return true;
      }
      return false;
    };
    for (const Dyperedge& a : h.dyperedges) {
      if (enters(a, both)) CHECK((enters(a, x) || enters(a, y)));
    }
  }
}

TEST_CASE("cover count bounded by summed class degrees") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform_int(2, 6);
    MixedHypergraph h = graph_of(n);
    for (int i = 0; i < 3; ++i) {
      auto vs = rng.sample_distinct(n, rng.uniform_int(2, n));
      h.hyperedges.push_back(hy("e" + std::to_string(i), vs));
    }
    // Random subpartition: assign some vertices to up to 3 classes.
    Subpartition p;
    std::vector<int> assigned = rng.random_subset(n, 0.7);
    std::vector<std::vector<int>> classes(3);
    for (int v : assigned) classes[rng.uniform_int(0, 2)].push_back(v);
    for (auto& cls : classes) {
      if (!cls.empty()) p.push_back(cls);
    }

    int cover = partition_cover_count(h, p);
    int summed = 0;
    for (const auto& cls : p) {
      summed += in_degree_set(h.dyperedges, n, cls) + hyper_degree_set(h.hyperedges, n, cls);
    }
    CHECK(cover <= summed);

    // Classes of size one from a single class: equality must hold.
    if (!p.empty()) {
      Subpartition single{p[0]};
      CHECK(partition_cover_count(h, single) ==
            in_degree_set(h.dyperedges, n, p[0]) + hyper_degree_set(h.hyperedges, n, p[0]));
    }
  }
}
