// framoid - exact computations in framed and tied diagram monoids

#include <set>
#include <string>

#include "catch_amalgamated.hpp"
#include "framoid/error.hpp"
#include "framoid/normal_form.hpp"

namespace framoid {

  namespace {
    NormalFormWord nf_of(FamilyName f, Diagram const& x) {
      switch (f) {
        case FamilyName::Jdn:
          return jones_nf(x);
        case FamilyName::Brdn:
          return brauer_nf(x);
        case FamilyName::Rdn:
          return rook_nf(x, RookVariant::first);
        default:
          return rook_nf(x, RookVariant::prime);
      }
    }
  }  // namespace

  TEST_CASE("normal forms evaluate back to their element", "[normal-form][property]") {
    for (auto f : {FamilyName::Jdn, FamilyName::Brdn, FamilyName::Rdn, FamilyName::RPrimeDn}) {
      for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
          MonoidFamily fam(f, d, n);
          auto const   xs = closure(fam);
          std::set<std::string> words;
          for (auto const& x : xs) {
            auto nf = nf_of(f, x);
            INFO(fam.to_string() << " " << encode(x) << " -> " << to_string(nf));
            REQUIRE(evaluate(fam, nf.word()).diagram == x);
            REQUIRE(to_string(nf) == to_string(nf.word()));
            words.insert(to_string(nf));
          }
          // distinct elements have distinct normal forms
          CHECK(words.size() == xs.size());
        }
      }
    }
  }

  TEST_CASE("Jones normal forms have minimal length", "[normal-form]") {
    for (int n = 1; n <= 5; ++n) {
      MonoidFamily fam(FamilyName::Jdn, n <= 4 ? 2 : 1, n);
      for (auto const& x : closure(fam)) {
        auto nf = jones_nf(x);
        INFO(encode(x) << " -> " << to_string(nf));
        REQUIRE(nf.length() == min_length_oracle(x, fam));
        REQUIRE(gaps(x) == gaps(nf.word(), n));
      }
    }
  }

  TEST_CASE("worked example in the abacus Jones and Brauer monoids", "[normal-form]") {
    auto const w = parse_word("o2 t2 t1 t3 t2 t4 o1^2 o4");
    auto const x = evaluate(MonoidFamily(FamilyName::Jdn, 4, 5), w).diagram;
    CHECK(to_string(jones_nf(x)) == "o2 t2 t1 t3 t2 t4 o1^2 o4");
    CHECK(to_string(jones_dual_tangles(x)) == "t2 t3 t4 t1 t2");
    auto const b = brauer_nf(x);
    CHECK(to_string(b) == "o2 o5^2 s3 s2 t1 t3 s4 s3 s2 s1 o4");
    CHECK(evaluate(MonoidFamily(FamilyName::Brdn, 4, 5), b.word()).diagram == x);
  }

  TEST_CASE("normal forms of the identity are empty", "[normal-form]") {
    auto one = Diagram::identity(3, 2);
    CHECK(jones_nf(one).word().empty());
    CHECK(brauer_nf(one).word().empty());
    CHECK(rook_nf(one, RookVariant::first).word().empty());
    CHECK(gaps(one) == std::set<int>{1, 2, 3});
  }

  TEST_CASE("normal forms reject diagrams outside their family", "[normal-form]") {
    auto crossed = evaluate(MonoidFamily(FamilyName::Brdn, 1, 3), parse_word("t1 s2")).diagram;
    CHECK_THROWS_AS(jones_nf(crossed), NotPlanar);
    auto partition = evaluate(MonoidFamily(FamilyName::Pn, 1, 3), parse_word("e1")).diagram;
    CHECK_THROWS_AS(brauer_nf(partition), InvalidDiagram);
    CHECK_THROWS_AS(rook_nf(crossed, RookVariant::first), InvalidDiagram);
    auto beaded_end
        = evaluate(MonoidFamily(FamilyName::RPrimeDn, 2, 2), parse_word("r1 o1")).diagram;
    CHECK_THROWS_AS(rook_nf(beaded_end, RookVariant::first), InvalidDiagram);
    CHECK_NOTHROW(rook_nf(beaded_end, RookVariant::prime));
  }

  TEST_CASE("permutation words", "[normal-form]") {
    MonoidFamily fam(FamilyName::Sdn, 1, 4);
    for (auto const& x : closure(fam)) {
      std::vector<int> image(4);
      for (int i = 1; i <= 4; ++i) {
        for (int p : x.block_points(x.block_of(x.top(i)))) {
          if (!x.is_top(p)) {
            image[i - 1] = p - 4 + 1;
          }
        }
      }
      REQUIRE(evaluate(fam, permutation_word(image)).diagram == x);
    }
  }

  TEST_CASE("word gaps", "[normal-form]") {
    CHECK(gaps(parse_word("t2"), 4) == std::set<int>{1, 4});
    CHECK(gaps(parse_word(""), 2) == std::set<int>{1, 2});
  }

}  // namespace framoid
