// framoid - exact computations in framed and tied diagram monoids

#include <set>
#include <string>

#include "catch_amalgamated.hpp"
#include "framoid/error.hpp"
#include "framoid/presentation.hpp"

namespace framoid {

  TEST_CASE("placeholders expand arithmetic on bound variables", "[presentation]") {
    Bindings b{{'i', 2}, {'k', 3}};
    CHECK(expand_placeholders("t{i} t{i+1} o{i}^{k} t{i-1}", b) == "t2 t3 o2^3 t1");
    CHECK(describe(b) == "i=2,k=3");
    CHECK(to_string(instantiate("s{i} e{i},{i+2}", b)) == "s2 e2,4");
  }

  // Index variables range over [lo, n + hi].
  TEST_CASE("bindings enumerate ranges, exponents and conditions", "[presentation]") {
    auto all = enumerate_bindings({Variable::index('i', 1, -1), Variable::index('j', 1, -1)},
                                  {}, 2, 4);
    CHECK(all.size() == 9);
    auto far = enumerate_bindings(
        {Variable::index('i', 1, -1), Variable::index('j', 1, -1)},
        [](Bindings const& b) { return std::abs(b.at('i') - b.at('j')) > 1; },
        2,
        4);
    CHECK(far.size() == 2);
    // exponents range over 0..d-1
    auto powers = enumerate_bindings({Variable::power('k')}, {}, 4, 1);
    CHECK(powers.size() == 4);
  }

  TEST_CASE("every family satisfies its presentation", "[presentation]") {
    for (auto f : all_families()) {
      for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
          MonoidFamily fam(f, d, n);
          auto         report = check_relations(fam);
          INFO(fam.to_string());
          for (auto const& s : report.schemas) {
            for (auto const& fail : s.failures) {
              FAIL_CHECK(s.name << " at " << fail.instance.bindings << ": "
                                << encode(fail.lhs) << " != " << encode(fail.rhs));
            }
          }
          CHECK(report.pass());
        }
      }
    }
  }

  TEST_CASE("schema names are unique and instances are counted", "[presentation]") {
    for (auto f : all_families()) {
      MonoidFamily      fam(f, 2, 4);
      auto              p = presentation(fam);
      std::set<std::string> names;
      for (auto const& s : p.relations) {
        CHECK(names.insert(s.name).second);
        CHECK_FALSE(s.text.empty());
      }
      CHECK(p.generators == fam.generator_symbols());
      auto report = check_relations(fam);
      CHECK(report.instances() > 0);
    }
  }

  TEST_CASE("a false relation is reported with a witness", "[presentation]") {
    MonoidFamily fam(FamilyName::Jdn, 2, 3);
    auto wrong = make_relation("tangles-commute",
                               "t{i} t{j}",
                               "t{j} t{i}",
                               {Variable::index('i', 1, -1), Variable::index('j', 1, -1)});
    auto report = check_relations(fam, {wrong});
    CHECK_FALSE(report.pass());
    CHECK(report.instances() == 4);
    CHECK(report.failures() == 2);
    auto const& fail = report.schemas.front().failures.front();
    CHECK(fail.lhs != fail.rhs);
  }

}  // namespace framoid
