// framoid - exact computations in framed and tied diagram monoids

#include "catch_amalgamated.hpp"
#include "framoid/error.hpp"
#include "framoid/expression.hpp"

namespace framoid {

  namespace {
    struct Fixture {
      MonoidFamily   fam{FamilyName::Jdn, 3, 4};
      LoopPolicy     policy = LoopPolicy::alpha;
      AlgebraElement one    = AlgebraElement::one(fam, policy);
      SymbolResolver resolve = bridge_resolver(fam, policy);

      AlgebraElement eval(std::string_view text) const {
        return evaluate_expression(text, one, resolve);
      }
      AlgebraElement w(char const* text) const {
        return AlgebraElement::from_word(fam, policy, std::string_view(text));
      }
    };
  }  // namespace

  TEST_CASE("products, sums and scalars", "[expression]") {
    Fixture f;
    CHECK(f.eval("t1 t2") == f.w("t1 t2"));
    CHECK(f.eval("t1 * t2") == f.w("t1 t2"));
    CHECK(f.eval("t1 + t2 - t1") == f.w("t2"));
    CHECK(f.eval("3/4 t1") == f.w("t1") * Coefficient(mpq_class(3, 4)));
    CHECK(f.eval("-(t1 - t1) + 2") == f.one * Coefficient(2));
    CHECK(f.eval("alpha2^-1 t1") == f.w("t1") * Coefficient(Var::alpha_(2), -1));
    CHECK(f.eval("alpha0 y0 t1") == f.w("t1"));
    CHECK(f.eval("o1^2 o1") == f.one);
    CHECK(f.eval("o1^-1") == f.w("o1^2"));
  }

  TEST_CASE("bridge tokens", "[expression]") {
    Fixture f;
    CHECK(f.eval("E1") == bridge_e(f.fam, f.policy, 1, 2));
    CHECK(f.eval("E1,3") == bridge_e(f.fam, f.policy, 1, 3));
    CHECK(f.eval("F2") == bridge_f(f.fam, f.policy, 2));
    CHECK(f.eval("Z3") == cap_z(f.fam, f.policy, 3));
    CHECK(f.eval("E1 E1") == f.eval("E1"));
  }

  TEST_CASE("equation chains", "[expression]") {
    Fixture f;
    auto sides = evaluate_equation("F1 F1 = F1 Z1 = Z1 F1", f.one, f.resolve);
    REQUIRE(sides.size() == 3);
    CHECK(sides[0] == sides[1]);
    CHECK(sides[1] == sides[2]);
  }

  TEST_CASE("syntax errors", "[expression]") {
    Fixture f;
    CHECK_THROWS_AS(f.eval("t1 +"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("(t1"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("t1 )"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("1/0"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("%"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("K1"), InvalidSymbol);
    CHECK_THROWS_AS(f.eval("s1"), InvalidSymbol);
  }

}  // namespace framoid
