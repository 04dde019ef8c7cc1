// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_TESTS_SUPPORT_HPP_
#define FRAMOID_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "framoid/diagram.hpp"
#include "framoid/family.hpp"

namespace framoid::test {

  //! Fixed-seed generator for the hand-rolled property tests.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed = 20240611) : _gen(seed) {}

    //! Uniform-ish value in [0, bound).
    int below(int bound) {
      return static_cast<int>(_gen() % static_cast<std::uint64_t>(bound));
    }
    bool coin() {
      return below(2) == 1;
    }

   private:
    std::mt19937_64 _gen;
  };

  //! A random untied partition diagram on 2n points with random beads.
  inline Diagram random_partition(Rng& rng, int n, int d) {
    std::vector<std::vector<int>> blocks;
    for (int p = 0; p < 2 * n; ++p) {
      int b = rng.below(static_cast<int>(blocks.size()) + 1);
      if (b == static_cast<int>(blocks.size())) {
        blocks.emplace_back();
      }
      blocks[b].push_back(p);
    }
    std::vector<int> beads;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      beads.push_back(rng.below(d));
    }
    return Diagram::from_blocks(n, d, blocks, beads);
  }

  //! The value of a random word of \p length generators of \p fam.
  inline Diagram random_element(Rng& rng, MonoidFamily const& fam, int length) {
    auto const gens = generating_set(fam);
    Diagram    x    = identity(fam);
    for (int k = 0; k < length && !gens.empty(); ++k) {
      x = compose(fam, x, gens[rng.below(static_cast<int>(gens.size()))]).diagram;
    }
    return x;
  }

}  // namespace framoid::test

#endif  // FRAMOID_TESTS_SUPPORT_HPP_
