// framoid - exact computations in framed and tied diagram monoids

#include "catch_amalgamated.hpp"
#include "framoid/algebra.hpp"
#include "framoid/error.hpp"
#include "support.hpp"

namespace framoid {

  namespace {
    AlgebraElement word(MonoidFamily const& fam, LoopPolicy p, char const* w) {
      return AlgebraElement::from_word(fam, p, std::string_view(w));
    }

    AlgebraElement random_element(test::Rng&          rng,
                                  MonoidFamily const& fam,
                                  LoopPolicy          p) {
      auto out = AlgebraElement::zero(fam, p);
      for (int t = 0, m = 1 + rng.below(3); t < m; ++t) {
        Coefficient c(rng.below(5) - 2);
        if (fam.modulus() > 1) {
          c *= Coefficient(Var::alpha_(1 + rng.below(fam.modulus() - 1)), rng.below(3) - 1);
        }
        out.add_term(test::random_element(rng, fam, rng.below(8)), c);
      }
      return out;
    }
  }  // namespace

  TEST_CASE("loop policies turn removed loops into scalars", "[algebra]") {
    MonoidFamily fam(FamilyName::Jdn, 3, 2);
    auto t1 = word(fam, LoopPolicy::xy, "t1");
    auto x  = Coefficient(Var::x_());
    CHECK(word(fam, LoopPolicy::xy, "t1 o1 t1") == t1 * (x * Coefficient(Var::y_(1))));
    CHECK(word(fam, LoopPolicy::xy, "t1 t1") == t1 * x);
    CHECK(word(fam, LoopPolicy::alpha, "t1 o1^2 t1")
          == word(fam, LoopPolicy::alpha, "t1") * Coefficient(Var::alpha_(2)));
    CHECK(word(fam, LoopPolicy::alpha, "t1 t1") == word(fam, LoopPolicy::alpha, "t1"));
    CHECK(word(fam, LoopPolicy::neglect, "t1 o1 t1") == word(fam, LoopPolicy::neglect, "t1"));
    CHECK(loop_policy_from_string(to_string(LoopPolicy::xy)) == LoopPolicy::xy);
  }

  TEST_CASE("product agrees with word concatenation", "[algebra]") {
    MonoidFamily fam(FamilyName::Jdn, 2, 3);
    auto a = word(fam, LoopPolicy::xy, "t1 o2");
    auto b = word(fam, LoopPolicy::xy, "t2 t1");
    CHECK(a * b == word(fam, LoopPolicy::xy, "t1 o2 t2 t1"));
  }

  TEST_CASE("the algebra product is associative and bilinear", "[algebra][property]") {
    test::Rng rng(5);
    for (auto f : all_families()) {
      if (f == FamilyName::tRn) {
        continue;  // its composition is not associative, see below
      }
      MonoidFamily fam(f, 2, 3);
      for (auto p : {LoopPolicy::neglect, LoopPolicy::alpha, LoopPolicy::xy}) {
        for (int trial = 0; trial < 40; ++trial) {
          auto a = random_element(rng, fam, p);
          auto b = random_element(rng, fam, p);
          auto c = random_element(rng, fam, p);
          INFO(fam.to_string() << " " << to_string(p));
          REQUIRE((a * b) * c == a * (b * c));
          REQUIRE(a * (b + c) == a * b + a * c);
          REQUIRE(AlgebraElement::one(fam, p) * a == a);
        }
      }
    }
  }

  TEST_CASE("tied rook composition is not associative", "[algebra]") {
    // Untying singleton blocks after each product loses ties that a
    // different bracketing keeps.
    MonoidFamily fam(FamilyName::tRn, 1, 3);
    auto ev = [&fam](char const* w) { return evaluate(fam, parse_word(w)).diagram; };
    auto a  = ev("p1");
    auto b  = ev("e1");
    auto c  = ev("s2 e1 s2");
    auto left  = compose(fam, compose(fam, a, b).diagram, c).diagram;
    auto right = compose(fam, a, compose(fam, b, c).diagram).diagram;
    CHECK(left != right);
    CHECK(left == ev("p1"));
    CHECK(right == ev("p1 e2 e1"));
  }

  TEST_CASE("averaged tie elements are idempotents", "[algebra]") {
    for (int d = 1; d <= 4; ++d) {
      MonoidFamily fam(FamilyName::Jdn, d, 3);
      auto e = bridge_e(fam, LoopPolicy::alpha, 1, 2);
      CHECK(e * e == e);
      CHECK(e.terms().size() == static_cast<std::size_t>(d));
    }
  }

  TEST_CASE("the cap element at d = 2 with alpha set to 1", "[algebra]") {
    MonoidFamily fam(FamilyName::Jdn, 2, 2);
    auto z = cap_z(fam, LoopPolicy::alpha, 1);
    Specialization s;
    s.values        = {{Var::alpha_(1), 1}};
    s.target_policy = LoopPolicy::alpha;
    auto half     = Coefficient(mpq_class(1, 2));
    auto expected = (AlgebraElement::one(fam, LoopPolicy::alpha)
                     + bead(fam, LoopPolicy::alpha, 1, 1))
                    * half;
    CHECK(specialize(z, s) == expected);
    auto plain = (AlgebraElement::one(fam, LoopPolicy::neglect)
                  + bead(fam, LoopPolicy::neglect, 1, 1))
                 * half;
    CHECK(cap_z(fam, LoopPolicy::neglect, 1) == plain);
  }

  TEST_CASE("deframing sends bridges to generators", "[algebra]") {
    MonoidFamily fam(FamilyName::Jdn, 3, 3);
    auto s = Specialization::deframing(3);
    auto f = specialize(bridge_f(fam, LoopPolicy::alpha, 1), s);
    CHECK(f.family() == MonoidFamily(FamilyName::Jdn, 1, 3));
    CHECK(f == AlgebraElement::from_word(f.family(), LoopPolicy::neglect, std::string_view("t1")));
    auto e = specialize(bridge_e(fam, LoopPolicy::alpha, 1, 2), s);
    CHECK(e == AlgebraElement::one(f.family(), LoopPolicy::neglect));
  }

  TEST_CASE("erasing beads and ties lands in the matching family", "[algebra]") {
    CHECK(specialized_family(MonoidFamily(FamilyName::tJn, 1, 3), false, true)
          == MonoidFamily(FamilyName::Jn, 1, 3));
    CHECK(specialized_family(MonoidFamily(FamilyName::tSn, 1, 3), false, true).name()
          == FamilyName::Sdn);
    CHECK(specialized_family(MonoidFamily(FamilyName::Brdn, 4, 3), true, false)
          == MonoidFamily(FamilyName::Brdn, 1, 3));
    CHECK(specialized_family(MonoidFamily(FamilyName::Brdn, 4, 3), false, false)
          == MonoidFamily(FamilyName::Brdn, 4, 3));
  }

  TEST_CASE("operands must share family and policy", "[algebra]") {
    MonoidFamily j(FamilyName::Jdn, 2, 3);
    MonoidFamily b(FamilyName::Brdn, 2, 3);
    auto x = AlgebraElement::one(j, LoopPolicy::alpha);
    CHECK_THROWS_AS(x + AlgebraElement::one(b, LoopPolicy::alpha), AmbientMismatch);
    CHECK_THROWS_AS(x * AlgebraElement::one(j, LoopPolicy::xy), AmbientMismatch);
    CHECK_THROWS_AS(x.add_term(Diagram::identity(4, 2), 1), AmbientMismatch);
  }

  TEST_CASE("zero terms are dropped", "[algebra]") {
    MonoidFamily fam(FamilyName::Jdn, 2, 2);
    auto t = word(fam, LoopPolicy::alpha, "t1");
    CHECK((t - t).is_zero());
    CHECK((t - t) == AlgebraElement::zero(fam, LoopPolicy::alpha));
    CHECK(t.coefficient(Diagram::identity(2, 2)).is_zero());
    CHECK(t.to_string() == "(1) * [" + encode(evaluate(fam, parse_word("t1")).diagram) + "]");
  }

}  // namespace framoid
