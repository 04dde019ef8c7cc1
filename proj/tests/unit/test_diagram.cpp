// framoid - exact computations in framed and tied diagram monoids

#include <map>
#include <numeric>
#include <vector>

#include "catch_amalgamated.hpp"
#include "framoid/diagram.hpp"
#include "framoid/error.hpp"
#include "framoid/generators.hpp"
#include "support.hpp"

namespace framoid {

  namespace {
    // Gluing by brute force: union-find over the points of both diagrams.
    ComposeResult compose_oracle(Diagram const& a, Diagram const& b) {
      int const        n = a.degree();
      int const        d = a.modulus();
      std::vector<int> parent(4 * n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](int v) {
        while (parent[v] != v) {
          v = parent[v] = parent[parent[v]];
        }
        return v;
      };
      auto join = [&](int u, int v) { parent[find(u)] = find(v); };
      // a occupies nodes 0..2n-1, b occupies 2n..4n-1
      for (auto const& blk : a.blocks()) {
        for (int p : blk) {
          join(p, blk.front());
        }
      }
      for (auto const& blk : b.blocks()) {
        for (int p : blk) {
          join(2 * n + p, 2 * n + blk.front());
        }
      }
      for (int i = 0; i < n; ++i) {
        join(n + i, 2 * n + i);
      }
      std::map<int, int> bead_sum;
      for (std::size_t k = 0; k < a.number_of_blocks(); ++k) {
        bead_sum[find(a.block_points(static_cast<int>(k)).front())] += a.bead(static_cast<int>(k));
      }
      for (std::size_t k = 0; k < b.number_of_blocks(); ++k) {
        bead_sum[find(2 * n + b.block_points(static_cast<int>(k)).front())]
            += b.bead(static_cast<int>(k));
      }
      std::map<int, std::vector<int>> outer;
      for (int i = 0; i < n; ++i) {
        outer[find(i)].push_back(i);
        outer[find(3 * n + i)].push_back(n + i);
      }
      std::vector<std::vector<int>> blocks;
      std::vector<int>              beads;
      for (auto const& [root, pts] : outer) {
        blocks.push_back(pts);
        beads.push_back(bead_sum[root] % d);
      }
      LoopRecord loops(d);
      for (auto const& [root, sum] : bead_sum) {
        if (!outer.contains(root)) {
          loops.add(sum % d);
        }
      }
      return {Diagram::from_blocks(n, d, blocks, beads), loops};
    }
  }  // namespace

  TEST_CASE("encode and parse_diagram are inverse", "[diagram]") {
    auto x = Diagram::from_blocks(3, 2, {{0, 3}, {1, 2}, {4, 5}}, {0, 1, 0});
    CHECK(encode(x) == "n=3;d=2;blocks=[{t1,b1}:0,{t2,t3}:1,{b2,b3}:0]");
    CHECK(parse_diagram(encode(x)) == x);

    auto tied = Diagram::from_blocks(2, 1, {{0, 2}, {1, 3}}, {}, {{{0, 1}}});
    CHECK(encode(tied) == "n=2;d=1;blocks=[{t1,b1}:0,{t2,b2}:0];ties=[[0,1]]");
    CHECK(parse_diagram(encode(tied)) == tied);

    test::Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
      auto y = test::random_partition(rng, 1 + rng.below(5), 1 + rng.below(4));
      REQUIRE(parse_diagram(encode(y)) == y);
    }
  }

  TEST_CASE("parse_diagram rejects malformed input", "[diagram]") {
    CHECK_THROWS_AS(parse_diagram("n=2;d=1;blocks=[{t1,b1}:0]"), InvalidDiagram);
    CHECK_THROWS_AS(parse_diagram("n=2;d=2;blocks=[{t1,b1}:2,{t2,b2}:0]"), InvalidDiagram);
    CHECK_THROWS_AS(parse_diagram("n=1;d=1;blocks=[{t1,b1}:0,{t1}:0]"), InvalidDiagram);
    CHECK_THROWS_AS(parse_diagram("garbage"), InvalidDiagram);
  }

  TEST_CASE("canonical form does not depend on block order", "[diagram]") {
    auto x = Diagram::from_blocks(2, 3, {{1, 3}, {0, 2}}, {2, 1});
    auto y = Diagram::from_blocks(2, 3, {{2, 0}, {3, 1}}, {1, 2});
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    CHECK(canonicalize(x) == x);
  }

  TEST_CASE("compose agrees with a union-find oracle", "[diagram][property]") {
    test::Rng rng;
    for (int trial = 0; trial < 2000; ++trial) {
      int  n = 1 + rng.below(5);
      int  d = 1 + rng.below(4);
      auto a = test::random_partition(rng, n, d);
      auto b = test::random_partition(rng, n, d);
      auto r = compose(a, b);
      auto o = compose_oracle(a, b);
      INFO(encode(a) << " * " << encode(b));
      REQUIRE(r.diagram == o.diagram);
      REQUIRE(r.loops == o.loops);
    }
  }

  TEST_CASE("compose is associative with a unit", "[diagram][property]") {
    test::Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
      int  n = 1 + rng.below(4);
      int  d = 1 + rng.below(3);
      auto a = test::random_partition(rng, n, d);
      auto b = test::random_partition(rng, n, d);
      auto c = test::random_partition(rng, n, d);
      auto one = Diagram::identity(n, d);
      REQUIRE(compose(one, a).diagram == a);
      REQUIRE(compose(a, one).diagram == a);
      auto left  = compose(compose(a, b).diagram, c).diagram;
      auto right = compose(a, compose(b, c).diagram).diagram;
      REQUIRE(left == right);
    }
  }

  TEST_CASE("closed loops are recorded by bead residue", "[diagram]") {
    // t1 o1 t1 closes one loop carrying one bead
    auto t  = generator(GenSymbol::t(1), 2, 3);
    auto o  = generator(GenSymbol::o(1), 2, 3);
    auto to = compose(t, o).diagram;
    auto r  = compose(to, t);
    CHECK(r.diagram == t);
    CHECK(r.loops.count(1) == 1);
    CHECK(r.loops.total() == 1);
    CHECK(r.loops.to_string() == "{1:1}");
    CHECK(compose(t, t).loops.to_string() == "{0:1}");
    CHECK(LoopRecord(2).to_string() == "{}");
  }

  TEST_CASE("beads add modulo d along a strand", "[diagram]") {
    auto o  = generator(GenSymbol::o(2), 3, 4);
    auto x  = Diagram::identity(3, 4);
    for (int k = 0; k < 4; ++k) {
      x = compose(x, o).diagram;
    }
    CHECK(x == Diagram::identity(3, 4));
    CHECK(generator(GenSymbol::o(2, 5), 3, 4) == o);
    CHECK(generator(GenSymbol::o(2, -1), 3, 4) == generator(GenSymbol::o(2, 3), 3, 4));
  }

  TEST_CASE("beads escape from singleton blocks under drop_on_singletons", "[diagram]") {
    auto r    = generator(GenSymbol::r(1), 2, 2);
    auto o    = generator(GenSymbol::o(1), 2, 2);
    auto keep = compose(r, o).diagram;
    auto drop = compose(r, o, {BeadRule::drop_on_singletons, TieRule::ramified}).diagram;
    CHECK(keep != r);
    CHECK(drop == r);
    CHECK(singleton_beads_are_zero(drop));
    CHECK_FALSE(singleton_beads_are_zero(keep));
  }

  TEST_CASE("compose rejects diagrams of different ambients", "[diagram]") {
    CHECK_THROWS_AS(compose(Diagram::identity(2), Diagram::identity(3)), AmbientMismatch);
    CHECK_THROWS_AS(compose(Diagram::identity(2, 2), Diagram::identity(2, 3)),
                    AmbientMismatch);
    CHECK_THROWS_AS(compose(Diagram::identity(2, 1, true), Diagram::identity(2)),
                    AmbientMismatch);
  }

  TEST_CASE("tied composition merges the classes of connected blocks", "[diagram]") {
    auto e12 = generator(GenSymbol::e(1), 3, 1, true);
    auto e23 = generator(GenSymbol::e(2), 3, 1, true);
    auto x   = compose(e12, e23).diagram;
    CHECK(x.number_of_tie_classes() == 1);
    CHECK(compose(x, x).diagram == x);
    CHECK(compose(x, generator(GenSymbol::e(1, 3), 3, 1, true)).diagram == x);
    CHECK(erase_ties(x) == Diagram::identity(3));
    CHECK(with_trivial_ties(Diagram::identity(3)) == Diagram::identity(3, 1, true));
  }

  TEST_CASE("structural classes", "[diagram]") {
    CHECK(structural_class(Diagram::identity(3)) == StructuralClass::permutation);
    CHECK(structural_class(generator(GenSymbol::t(1), 3)) == StructuralClass::planar_matching);
    auto crossed = compose(generator(GenSymbol::t(1), 3), generator(GenSymbol::s(2), 3)).diagram;
    CHECK(structural_class(crossed) == StructuralClass::matching);
    CHECK(structural_class(generator(GenSymbol::e(1), 3)) == StructuralClass::generic_partition);
    CHECK(is_rook(generator(GenSymbol::r(2), 3)));
    CHECK_FALSE(is_rook(generator(GenSymbol::t(1), 3)));
    CHECK(refines(Diagram::identity(3), generator(GenSymbol::e(1), 3)));
    CHECK_FALSE(refines(generator(GenSymbol::e(1), 3), Diagram::identity(3)));
  }

  TEST_CASE("with_modulus and erase_beads", "[diagram]") {
    auto x = Diagram::from_blocks(1, 4, {{0, 1}}, {3});
    CHECK(with_modulus(x, 2) == Diagram::from_blocks(1, 2, {{0, 1}}, {1}));
    CHECK(erase_beads(x) == Diagram::identity(1, 4));
  }

}  // namespace framoid
