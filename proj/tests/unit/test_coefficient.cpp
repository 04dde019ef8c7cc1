// framoid - exact computations in framed and tied diagram monoids

#include <map>
#include <vector>

#include "catch_amalgamated.hpp"
#include "framoid/coefficient.hpp"
#include "framoid/error.hpp"
#include "support.hpp"

namespace framoid {

  namespace {
    std::vector<Var> const& variables() {
      static std::vector<Var> const vars
          = {Var::alpha_(1), Var::alpha_(2), Var::x_(), Var::y_(), Var::y_(1), Var::q_()};
      return vars;
    }

    // A sum of up to three terms c * u^e * v^f with small signed data.
    Coefficient random_coefficient(test::Rng& rng) {
      Coefficient out;
      int const   terms = rng.below(4);
      for (int t = 0; t < terms; ++t) {
        Coefficient m(mpq_class(rng.below(7) - 3, 1 + rng.below(3)));
        for (int k = 0; k < 2; ++k) {
          auto const& v = variables()[rng.below(static_cast<int>(variables().size()))];
          m *= Coefficient(v, rng.below(5) - 2);
        }
        out += m;
      }
      return out;
    }

    std::map<Var, mpq_class> random_point(test::Rng& rng) {
      std::map<Var, mpq_class> pt;
      for (auto const& v : variables()) {
        pt[v] = mpq_class(1 + rng.below(5), 1 + rng.below(4)) * (rng.coin() ? 1 : -1);
      }
      return pt;
    }
  }  // namespace

  TEST_CASE("coefficients print canonically", "[coefficient]") {
    CHECK(Coefficient().to_string() == "0");
    CHECK(Coefficient(mpq_class(-1, 2)).to_string() == "-1/2");
    CHECK(Coefficient(Var::alpha_(1)).to_string() == "alpha1");
    CHECK((Coefficient(Var::x_()) * Coefficient(Var::y_(1), -1)).to_string() == "x*y1^-1");
    CHECK(to_string(Var::y_()) == "y");
    CHECK(to_string(Var::y_(2)) == "y2");
  }

  TEST_CASE("coefficient arithmetic", "[coefficient]") {
    Coefficient a(Var::alpha_(1));
    Coefficient one(1);
    CHECK((a - a).is_zero());
    CHECK((a + one) * (a - one) == a.pow(2) - one);
    CHECK(a.pow(-2) * a.pow(2) == one);
    CHECK(a.pow(0) == one);
    CHECK_THROWS_AS((a + one).pow(-1), Error);
    CHECK(Coefficient(mpq_class(3, 4)).is_constant());
    CHECK(Coefficient(mpq_class(3, 4)).constant_term() == mpq_class(3, 4));
    CHECK_FALSE(a.is_constant());
  }

  TEST_CASE("substitution", "[coefficient]") {
    Coefficient c = Coefficient(Var::x_()) * Coefficient(Var::y_(1)) + Coefficient(2);
    CHECK(c.substitute({{Var::x_(), 3}}) == Coefficient(3) * Coefficient(Var::y_(1)) + 2);
    CHECK(c.substitute({{Var::x_(), 3}, {Var::y_(1), mpq_class(1, 3)}}) == Coefficient(3));
    CHECK_THROWS_AS(Coefficient(Var::x_(), -1).substitute({{Var::x_(), 0}}), Error);
  }

  TEST_CASE("coefficients form a commutative ring", "[coefficient][property]") {
    test::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      auto a = random_coefficient(rng);
      auto b = random_coefficient(rng);
      auto c = random_coefficient(rng);
      REQUIRE(a * b == b * a);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + (-a) == Coefficient());
      REQUIRE(a * Coefficient(1) == a);
    }
  }

  TEST_CASE("evaluation at a point is a ring homomorphism", "[coefficient][property]") {
    test::Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
      auto a  = random_coefficient(rng);
      auto b  = random_coefficient(rng);
      auto pt = random_point(rng);
      auto at = [&pt](Coefficient const& c) {
        auto v = c.substitute(pt);
        REQUIRE(v.is_constant());
        return v.constant_term();
      };
      REQUIRE(at(a * b) == at(a) * at(b));
      REQUIRE(at(a + b) == at(a) + at(b));
    }
  }

}  // namespace framoid
