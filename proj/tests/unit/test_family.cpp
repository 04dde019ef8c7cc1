// framoid - exact computations in framed and tied diagram monoids

#include <set>
#include <utility>
#include <vector>

#include "catch_amalgamated.hpp"
#include "framoid/combinatorics.hpp"
#include "framoid/error.hpp"
#include "framoid/family.hpp"
#include "support.hpp"

namespace framoid {

  namespace {
    // Counting by recursion, independent of the library's closed formulas.
    mpz_class choose(int n, int k) {
      if (k < 0 || k > n) {
        return 0;
      }
      mpz_class r = 1;
      for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    mpz_class fact(int n) {
      mpz_class r = 1;
      for (int i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

    mpz_class power(int d, int e) {
      mpz_class r = 1;
      for (int i = 0; i < e; ++i) {
        r *= d;
      }
      return r;
    }

    // Stirling numbers of the second kind by the triangle recurrence.
    mpz_class stirling(int n, int k) {
      std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
      s[0][0] = 1;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
          s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
        }
      }
      return k <= n ? s[n][k] : mpz_class(0);
    }

    // Perfect matchings of the 2n boundary points, listed by brute force;
    // with planar set, only those without two crossing arcs, where points
    // are read around the boundary t1..tn, bn..b1.
    std::size_t count_matchings(int n, bool planar) {
      std::vector<int> partner(2 * n, -1);
      std::size_t      count = 0;
      auto pos = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
      auto crossing = [&]() {
        for (int a = 0; a < 2 * n; ++a) {
          for (int b = 0; b < 2 * n; ++b) {
            int a1 = pos(a), a2 = pos(partner[a]), b1 = pos(b), b2 = pos(partner[b]);
            if (a1 < b1 && b1 < a2 && a2 < b2) {
              return true;
            }
          }
        }
        return false;
      };
      auto rec = [&](auto&& self) -> void {
        int first = 0;
        while (first < 2 * n && partner[first] != -1) {
          ++first;
        }
        if (first == 2 * n) {
          count += (!planar || !crossing()) ? 1 : 0;
          return;
        }
        for (int q = first + 1; q < 2 * n; ++q) {
          if (partner[q] == -1) {
            partner[first] = q;
            partner[q]     = first;
            self(self);
            partner[first] = partner[q] = -1;
          }
        }
      };
      rec(rec);
      return count;
    }

    mpz_class oracle(FamilyName f, int d, int n) {
      mpz_class r = 0;
      switch (f) {
        case FamilyName::Cdn:
          return power(d, n);
        case FamilyName::Sdn:
          return power(d, n) * fact(n);
        case FamilyName::Pn:
        case FamilyName::Pdn:
          for (int k = 0; k <= n; ++k) {
            r += stirling(n, k) * power(f == FamilyName::Pn ? 1 : d, k);
          }
          return r;
        case FamilyName::Jn:
        case FamilyName::Jdn:
          return power(d, n) * static_cast<unsigned long>(count_matchings(n, true));
        case FamilyName::Brn:
        case FamilyName::Brdn:
          return power(d, n) * static_cast<unsigned long>(count_matchings(n, false));
        case FamilyName::Rn:
        case FamilyName::Rdn:
          for (int k = 0; k <= n; ++k) {
            r += choose(n, k) * choose(n, k) * fact(k) * power(d, k);
          }
          return r;
        case FamilyName::RPrimeDn:
          for (int k = 0; k <= n; ++k) {
            r += choose(n, k) * choose(n, k) * fact(k) * power(d, k) * power(d, 2 * (n - k));
          }
          return r;
        default:
          return -1;
      }
    }
  }  // namespace

  TEST_CASE("closure sizes agree with counting oracles", "[family]") {
    for (auto f : all_families()) {
      mpz_class probe = oracle(f, 1, 1);
      if (probe < 0) {
        continue;
      }
      for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
          MonoidFamily fam(f, d, n);
          INFO(fam.to_string());
          auto const size = closure(fam).size();
          CHECK(mpz_class(static_cast<unsigned long>(size)) == oracle(f, fam.modulus(), n));
          CHECK(predicted_cardinality(fam) == oracle(f, fam.modulus(), n));
        }
      }
    }
  }

  TEST_CASE("small tabulated cardinalities", "[family]") {
    auto sizes = [](FamilyName f, int d) {
      std::vector<std::size_t> out;
      for (int n = 1; n <= 4; ++n) {
        out.push_back(closure(MonoidFamily(f, d, n)).size());
      }
      return out;
    };
    using V = std::vector<std::size_t>;
    CHECK(sizes(FamilyName::Rdn, 2) == V{3, 17, 139, 1473});
    CHECK(sizes(FamilyName::RPrimeDn, 2) == V{6, 56, 688, 10368});
    CHECK(sizes(FamilyName::tRn, 1) == V{2, 9, 76, 1001});
    CHECK(sizes(FamilyName::tRPrimeN, 1) == V{3, 39, 971, 38140});
    CHECK(sizes(FamilyName::Jdn, 2) == V{2, 8, 40, 224});
  }

  TEST_CASE("tied families match their predicted cardinalities", "[family]") {
    for (auto f : {FamilyName::tSn, FamilyName::tJn, FamilyName::tBrn, FamilyName::tRn,
                   FamilyName::tRPrimeN}) {
      for (int n = 1; n <= 4; ++n) {
        MonoidFamily fam(f, 1, n);
        INFO(fam.to_string());
        CHECK(mpz_class(static_cast<unsigned long>(closure(fam).size()))
              == predicted_cardinality(fam));
      }
    }
  }

  TEST_CASE("closure is closed under products", "[family][property]") {
    for (auto f : all_families()) {
      MonoidFamily fam(f, 2, 3);
      auto const   xs = closure(fam);
      std::set<Diagram> const set(xs.begin(), xs.end());
      test::Rng rng;
      for (int trial = 0; trial < 300; ++trial) {
        auto const& a = xs[rng.below(static_cast<int>(xs.size()))];
        auto const& b = xs[rng.below(static_cast<int>(xs.size()))];
        INFO(fam.to_string() << ": " << encode(a) << " * " << encode(b));
        REQUIRE(set.contains(compose(fam, a, b).diagram));
      }
    }
  }

  TEST_CASE("closure does not depend on the number of threads", "[family]") {
    MonoidFamily fam(FamilyName::Brdn, 2, 4);
    CHECK(closure(fam, default_closure_cap, 1) == closure(fam, default_closure_cap, 3));
  }

  TEST_CASE("closure stops at the cap", "[family]") {
    MonoidFamily fam(FamilyName::Jn, 1, 5);
    CHECK_THROWS_AS(closure(fam, 10), CapExceeded);
  }

  TEST_CASE("elements have the expected structure", "[family]") {
    for (int n = 1; n <= 4; ++n) {
      for (auto const& x : closure(MonoidFamily(FamilyName::Jdn, 2, n))) {
        REQUIRE(is_planar_matching(x));
      }
      for (auto const& x : closure(MonoidFamily(FamilyName::Brdn, 2, n))) {
        REQUIRE(is_matching(x));
      }
      for (auto const& x : closure(MonoidFamily(FamilyName::Rdn, 2, n))) {
        REQUIRE(is_rook(x));
        REQUIRE(singleton_beads_are_zero(x));
      }
      for (auto const& x : closure(MonoidFamily(FamilyName::Sdn, 2, n))) {
        REQUIRE(is_permutation(x));
      }
    }
  }

  TEST_CASE("family names", "[family]") {
    for (auto f : all_families()) {
      CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK(family_from_string("JDN") == FamilyName::Jdn);
    CHECK(family_from_string("trprimen") == FamilyName::tRPrimeN);
    CHECK_THROWS_AS(family_from_string("nope"), InvalidSymbol);
  }

  TEST_CASE("unbeaded and tied families force d = 1", "[family]") {
    CHECK(MonoidFamily(FamilyName::Jn, 3, 2).modulus() == 1);
    CHECK(MonoidFamily(FamilyName::tBrn, 3, 2).modulus() == 1);
    CHECK(MonoidFamily(FamilyName::Jdn, 3, 2).modulus() == 3);
    CHECK_THROWS_AS(MonoidFamily(FamilyName::Jdn, 0, 2), InvalidSymbol);
    CHECK_THROWS_AS(MonoidFamily(FamilyName::Jdn, 1, 0), InvalidSymbol);
  }

  TEST_CASE("evaluate rejects symbols outside the family", "[family]") {
    MonoidFamily j(FamilyName::Jdn, 2, 3);
    CHECK_THROWS_AS(evaluate(j, parse_word("s1")), InvalidSymbol);
    CHECK_THROWS_AS(evaluate(j, parse_word("t3")), InvalidSymbol);
    CHECK(evaluate(j, parse_word("t1 t1")).loops.total() == 1);
  }

  TEST_CASE("counting sequences", "[combinatorics]") {
    CHECK(catalan(5) == 42);
    CHECK(bell(4) == 15);
    CHECK(stirling2(5, 2) == 15);
    CHECK(odd_double_factorial(4) == 105);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(-1) == 0);
  }

}  // namespace framoid
