#include <doctest.h>

#include <algorithm>

#include "psc/aso.hpp"
#include "psc/errors.hpp"
#include "psc/oracle.hpp"
#include "psc/prefer.hpp"
#include "support/generators.hpp"

using namespace psc;
using aso::BoolComb;
using aso::Degree;
using aso::Literal;

namespace {

Literal lit(const char* name) { return Literal{Atom(name), false}; }
Literal neg(const char* name) { return Literal{Atom(name), true}; }

}  // namespace

TEST_CASE("boolean combinations over answer sets") {
  CHECK(BoolComb::def_neg(lit("b")).satisfied_by(AtomSet::of({"a"})));
  CHECK_FALSE(BoolComb::conj(BoolComb::lit(lit("a")), BoolComb::def_neg(lit("a")))
                  .satisfied_by(AtomSet::of({"a"})));
  CHECK(BoolComb::disj(BoolComb::lit(neg("a")), BoolComb::lit(lit("b")))
            .satisfied_by(AtomSet::of({"a", "b"})));

  // answer sets of normal programs never contain strong-negated literals
  CHECK_FALSE(BoolComb::lit(neg("a")).satisfied_by(AtomSet::of({"a"})));
  CHECK(BoolComb::def_neg(neg("a")).satisfied_by(AtomSet::of({"a"})));
}

TEST_CASE("satisfaction degrees") {
  aso::AsoPrefRule rule;
  rule.options = {BoolComb::lit(lit("a")), BoolComb::lit(lit("b"))};
  rule.body_pos = {lit("c")};

  CHECK(satisfaction_degree(AtomSet::of({"a"}), rule) == Degree::irrelevant());
  CHECK(satisfaction_degree(AtomSet::of({"c", "b"}), rule) == Degree::at(2));
  CHECK(satisfaction_degree(AtomSet::of({"c"}), rule) == Degree::irrelevant());
}

TEST_CASE("the degree order") {
  const Degree irr = Degree::irrelevant();
  CHECK(aso::degree_geq(irr, Degree::at(1)));
  CHECK(aso::degree_geq(Degree::at(1), irr));
  CHECK(aso::degree_geq(irr, Degree::at(3)));
  CHECK_FALSE(aso::degree_geq(Degree::at(3), irr));
  CHECK(aso::degree_geq(Degree::at(1), Degree::at(2)));
  CHECK_FALSE(aso::degree_geq(Degree::at(2), Degree::at(1)));

  CHECK(aso::degree_gt(irr, Degree::at(3)));
  CHECK_FALSE(aso::degree_gt(irr, Degree::at(1)));

  // the numeric rank realizes the same order
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const Degree da = a == 0 ? irr : Degree::at(a);
      const Degree db = b == 0 ? irr : Degree::at(b);
      CHECK(aso::degree_geq(da, db) == (aso::degree_rank(da) <= aso::degree_rank(db)));
    }
}

TEST_CASE("vector comparison") {
  aso::AsoPrefRule first;
  first.options = {BoolComb::lit(lit("a")), BoolComb::lit(lit("b"))};
  aso::AsoPrefRule second;
  second.options = {BoolComb::lit(lit("b")), BoolComb::lit(lit("a"))};
  const std::vector<aso::AsoPrefRule> pref{first, second};

  CHECK(aso::vector_compare(AtomSet::of({"a"}), AtomSet::of({"a"}), pref) ==
        aso::VectorOrder::Equal);
  // degrees (1,1) vs (1,2): first wins on the second component
  CHECK(aso::vector_compare(AtomSet::of({"a", "b"}), AtomSet::of({"b"}), pref) ==
        aso::VectorOrder::Greater);
  // degrees (1,2) vs (2,1): neither dominates
  CHECK(aso::vector_compare(AtomSet::of({"a"}), AtomSet::of({"b"}), pref) ==
        aso::VectorOrder::Incomparable);
}

TEST_CASE("optimal models") {
  aso::AsoProgram program;
  program.gen.add(NormalRule{Atom("a"), {}, {Atom("b")}});
  program.gen.add(NormalRule{Atom("b"), {}, {Atom("a")}});

  SUBCASE("no preference rules keep every answer set") {
    const auto optimal = aso::aso_optimal_models(program);
    REQUIRE(optimal.size() == 2);
    CHECK(optimal[0] == AtomSet::of({"a"}));
    CHECK(optimal[1] == AtomSet::of({"b"}));
  }

  SUBCASE("a ranked option filters the worse answer set") {
    aso::AsoPrefRule rule;
    rule.options = {BoolComb::lit(lit("a")), BoolComb::lit(lit("b"))};
    program.pref.push_back(rule);
    const auto optimal = aso::aso_optimal_models(program);
    REQUIRE(optimal.size() == 1);
    CHECK(optimal[0] == AtomSet::of({"a"}));
  }

  SUBCASE("no answer sets, no optimal models") {
    aso::AsoProgram odd;
    odd.gen.add(NormalRule{Atom("a"), {}, {Atom("a")}});
    CHECK(aso::aso_optimal_models(odd).empty());
  }
}

TEST_CASE("the translated order ranks barred projections by degree") {
  aso::AsoProgram program;
  program.gen.add(NormalRule{Atom("a"), {}, {Atom("b")}});
  program.gen.add(NormalRule{Atom("b"), {}, {Atom("a")}});
  aso::AsoPrefRule rule;
  rule.options = {BoolComb::lit(lit("a")), BoolComb::lit(lit("b"))};
  program.pref.push_back(rule);

  const aso::Translation translation = aso::translate(program);
  const auto pref_heads = preordered_pref_set(translation.program, AtomSet{});
  REQUIRE(pref_heads.size() == 1);
  const Preorder& order = pref_heads[0].order();

  const AtomSet bar_a = translation.bar(AtomSet::of({"a"}));
  const AtomSet bar_b = translation.bar(AtomSet::of({"b"}));
  CHECK(order.leq(bar_a, bar_b));        // degree 1 beats degree 2
  CHECK_FALSE(order.leq(bar_b, bar_a));
}

TEST_CASE("stable models of the translation pair up with answer sets") {
  aso::AsoProgram program;
  program.gen.add(NormalRule{Atom("a"), {}, {Atom("b")}});
  program.gen.add(NormalRule{Atom("b"), {}, {Atom("a")}});
  aso::AsoPrefRule rule;
  rule.options = {BoolComb::lit(lit("a")), BoolComb::lit(lit("b"))};
  program.pref.push_back(rule);

  const aso::Translation translation = aso::translate(program);
  const auto stable = enumerate_stable(translation.program);
  REQUIRE(stable.size() == 2);
  CHECK(stable[0] == AtomSet::of({"a"}).unite(translation.bar(AtomSet::of({"a"}))));
  CHECK(stable[1] == AtomSet::of({"b"}).unite(translation.bar(AtomSet::of({"b"}))));

  for (const AtomSet& m : stable) {
    const AtomSet plain = translation.project(m);
    CHECK(m == plain.unite(translation.bar(plain)));  // no spoiler, no stray bars
  }
}

TEST_CASE("projection keeps only the plain atoms") {
  aso::AsoProgram program;
  program.gen.add(NormalRule{Atom("a"), {}, {}});
  program.gen.add(NormalRule{Atom("b"), {}, {Atom("a")}});
  const aso::Translation translation = aso::translate(program);

  CHECK(translation.project(AtomSet::of({"a"}).unite(translation.bar(AtomSet::of({"a"})))) ==
        AtomSet::of({"a"}));
  CHECK(translation.project(AtomSet{translation.spoiler}) == AtomSet{});
  CHECK(translation.project(translation.bar(AtomSet::of({"b"}))) == AtomSet{});
}

TEST_CASE("barred names avoid the program's own atoms") {
  aso::AsoProgram program;
  program.gen.add(NormalRule{Atom("bar_a"), {}, {}});
  program.gen.add(NormalRule{Atom("a"), {}, {}});
  const aso::Translation translation = aso::translate(program);
  // all barred copies are fresh
  for (const auto& [plain, bar] : translation.barred) {
    (void)plain;
    CHECK_FALSE(translation.base_atoms.contains(bar));
  }
}

TEST_CASE("round trip through the translation on random programs") {
  testgen::Rng rng(6001);
  for (int iter = 0; iter < 25; ++iter) {
    const aso::AsoProgram program = testgen::random_aso_program(rng);
    const auto answer_sets = oracle::gl_stable_models(program.gen);
    const aso::Translation translation = aso::translate(program);
    const auto stable = enumerate_stable(translation.program);

    // answer sets embed exactly as plain+barred unions
    std::vector<AtomSet> expected;
    for (const AtomSet& b : answer_sets) expected.push_back(b.unite(translation.bar(b)));
    std::sort(expected.begin(), expected.end());
    CHECK(stable == expected);

    // optimal models equal the projected preferred models, either order
    const auto optimal = aso::aso_optimal_models(program);
    for (OrderMode mode : {OrderMode::InCommon, OrderMode::InTotal}) {
      std::vector<AtomSet> projected;
      for (const AtomSet& m : preferred_models(translation.program, mode)) {
        projected.push_back(translation.project(m));
      }
      std::sort(projected.begin(), projected.end());
      CHECK(projected == optimal);
    }
  }
}

TEST_CASE("translation rejects preference rules that are too wide") {
  aso::AsoProgram program;
  aso::AsoPrefRule rule;
  BoolComb comb = BoolComb::lit(lit("w0"));
  for (int i = 1; i < 17; ++i) {
    comb = BoolComb::conj(std::move(comb),
                          BoolComb::lit(Literal{Atom("w" + std::to_string(i)), false}));
  }
  rule.options.push_back(std::move(comb));
  program.pref.push_back(std::move(rule));
  CHECK_THROWS_AS(aso::translate(program), Error);
}

TEST_CASE("every translated order is a pre-order on the barred subsets") {
  testgen::Rng rng(6002);
  for (int iter = 0; iter < 20; ++iter) {
    const aso::AsoProgram program = testgen::random_aso_program(rng);
    const aso::Translation translation = aso::translate(program);
    for (const Rule& rule : translation.program.rules()) {
      const auto* head = std::get_if<PreorderAtom>(&rule.head);
      if (!head) continue;
      const auto check =
          check_preorder(head->order(), testgen::powerset(head->sc().base()));
      CHECK(check.reflexive);
      CHECK(check.transitive);
    }
  }
}
