#include <doctest.h>

#include <random>

#include "psc/errors.hpp"
#include "psc/measure.hpp"
#include "psc/preorder.hpp"
#include "psc/program.hpp"
#include "psc/sc_atom.hpp"
#include "support/generators.hpp"

using namespace psc;

TEST_CASE("atom names follow the identifier pattern") {
  CHECK(Atom::valid_name("a"));
  CHECK(Atom::valid_name("nCal_2"));
  CHECK(Atom::valid_name("d(120)"));
  CHECK_FALSE(Atom::valid_name("R"));
  CHECK_FALSE(Atom::valid_name("1a"));
  CHECK_FALSE(Atom::valid_name("d()"));
  CHECK_FALSE(Atom::valid_name("d(12"));
  CHECK_FALSE(Atom::valid_name("d(12)x"));
  CHECK_FALSE(Atom::valid_name(""));
  CHECK_THROWS_AS(Atom("Bad"), Error);
}

TEST_CASE("atom sets iterate in canonical order and dedupe") {
  const AtomSet s = AtomSet::of({"t", "cal", "r", "cal"});
  std::vector<std::string> names;
  for (const Atom& a : s) names.push_back(a.name());
  CHECK(names == std::vector<std::string>{"cal", "r", "t"});
  CHECK(s.size() == 3);

  CHECK(AtomSet::of({"a", "b"}) < AtomSet::of({"a", "b", "c"}));  // cardinality first
  CHECK(AtomSet::of({"a", "b"}) < AtomSet::of({"a", "c"}));       // then lexicographic
}

TEST_CASE("satisfaction per family kind") {
  const SCAtom any_atom(AtomSet::of({"a", "b"}), Family::any());
  CHECK(any_atom.satisfied_by(AtomSet::of({"a"})));

  const SCAtom choice(AtomSet::of({"j1", "j2"}),
                      Family::extensional({AtomSet::of({"j1"}), AtomSet::of({"j2"})}));
  CHECK(choice.satisfied_by(AtomSet::of({"j1"})));
  CHECK_FALSE(choice.satisfied_by(AtomSet::of({"j1", "j2"})));

  const SCAtom even(
      AtomSet::of({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"}), Family::even());
  CHECK(even.satisfied_by(AtomSet::of({"x1", "x3"})));
  CHECK_FALSE(even.satisfied_by(AtomSet::of({"x1"})));
}

TEST_CASE("closure satisfaction without materializing the closure") {
  CHECK(SCAtom(AtomSet::of({"x", "y"}), Family::even()).closure_satisfied_by(AtomSet{}));

  // enumerate all subsets of {a,b,c}: some two-element one is inside
  const SCAtom card(AtomSet::of({"a", "b", "c", "d"}), Family::card(2, 2));
  CHECK(card.closure_satisfied_by(AtomSet::of({"a", "b", "c"})));
  CHECK_FALSE(card.closure_satisfied_by(AtomSet::of({"a"})));

  const SCAtom pair(AtomSet::of({"a", "b"}),
                    Family::extensional({AtomSet::of({"a", "b"})}));
  CHECK_FALSE(pair.closure_satisfied_by(AtomSet::of({"a"})));
}

TEST_CASE("literal encodings") {
  const Atom a("a");
  const SCAtom pos = SCAtom::literal(a, false);
  CHECK(pos.base() == AtomSet{a});
  CHECK(pos.family() == Family::extensional({AtomSet{a}}));
  CHECK(pos.is_positive_literal());

  const SCAtom neg = SCAtom::literal(a, true);
  CHECK(neg.family() == Family::extensional({AtomSet{}}));
  CHECK(neg.is_negative_literal());

  CHECK(neg.satisfied_by(AtomSet::of({"b"})));  // {b} ∩ {a} = ∅
}

TEST_CASE("reduct strips the preference payload") {
  const SCAtom sc(AtomSet::of({"a"}), Family::any());
  const PreorderAtom pre(sc, Preorder::chain({AtomSet{}, AtomSet::of({"a"})}));
  const MeasureAtom meas(sc, Measure::indicator(Atom("a"), 0, 1));

  CHECK(reduct(Head{pre}) == sc);
  CHECK(reduct(Head{meas}) == sc);
  CHECK(reduct(Head{sc}) == sc);
}

TEST_CASE("closure is monotone and implied by satisfaction") {
  testgen::Rng rng(7001);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto pool = testgen::atom_pool(testgen::pick(rng, 1, 5));
    const AtomSet base = testgen::random_subset(rng, pool, 0.7);
    const SCAtom atom(base, testgen::random_family(rng, base));
    const AtomSet small = testgen::random_subset(rng, pool, 0.4);
    const AtomSet large = small.unite(testgen::random_subset(rng, pool, 0.4));

    if (atom.closure_satisfied_by(small)) CHECK(atom.closure_satisfied_by(large));
    if (atom.satisfied_by(small)) CHECK(atom.closure_satisfied_by(small));
  }
}

TEST_CASE("extensional closure equals the materialized closure") {
  testgen::Rng rng(7002);
  for (int iter = 0; iter < 300; ++iter) {
    const auto pool = testgen::atom_pool(testgen::pick(rng, 1, 6));
    const AtomSet base{std::vector<Atom>(pool)};
    std::vector<AtomSet> members;
    for (const AtomSet& s : testgen::powerset(base))
      if (testgen::flip(rng, 0.3)) members.push_back(s);
    const SCAtom atom(base, Family::extensional(members));

    for (const AtomSet& y : testgen::powerset(base)) {
      bool materialized = false;  // y in the closure iff some member is inside it
      for (const AtomSet& z : members)
        if (z.subset_of(y)) materialized = true;
      CHECK(atom.closure_satisfied_by(y) == materialized);
    }
  }
}

TEST_CASE("every order kind induces a pre-order on the family") {
  testgen::Rng rng(7003);
  for (int iter = 0; iter < 500; ++iter) {
    const auto instance = testgen::random_preordered_set(rng, 1);
    const auto& atom = instance.atoms[0];
    const auto check = check_preorder(atom.order(), instance.members[0]);
    CHECK(check.reflexive);
    CHECK(check.transitive);
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Family::card(3, 2), Error);
  CHECK_THROWS_AS(SCAtom(AtomSet::of({"a"}), Family::extensional({AtomSet::of({"b"})})),
                  Error);
  CHECK_THROWS_AS(Preorder::chain({AtomSet::of({"a"}), AtomSet::of({"a"})}), Error);

  // ordered sets must be family members
  const SCAtom sc(AtomSet::of({"r", "t"}),
                  Family::extensional({AtomSet::of({"r"}), AtomSet::of({"t"})}));
  CHECK_THROWS_AS(PreorderAtom(sc, Preorder::chain({AtomSet::of({"r", "t"})})), Error);
  CHECK_THROWS_AS(
      MeasureAtom(sc, Measure::weights({{AtomSet::of({"r", "t"}), 1.0}}, 0.0)), Error);

  // a program may not mix pre-ordered and measure heads
  std::vector<Rule> rules;
  rules.push_back(Rule{PreorderAtom(SCAtom(AtomSet::of({"a"}), Family::any()),
                                    Preorder::rank({}, 0.0)),
                       {}});
  rules.push_back(Rule{MeasureAtom(SCAtom(AtomSet::of({"b"}), Family::any()),
                                   Measure::indicator(Atom("b"), 0, 1)),
                       {}});
  CHECK_THROWS_AS(Program(std::move(rules)), Error);
}

TEST_CASE("extended sums reject opposite infinities") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(extended_sum(inf, 5.0) == inf);
  CHECK(extended_sum(-inf, -inf) == -inf);
  CHECK_THROWS_AS(extended_sum(inf, -inf), Error);
}

TEST_CASE("measure kinds") {
  const Measure indicator = Measure::indicator(Atom("w"), 0, 1);
  CHECK(indicator.value(AtomSet::of({"w", "x"})) == 0);
  CHECK(indicator.value(AtomSet::of({"x"})) == 1);

  const Measure linear = Measure::linear({{Atom("t"), 500.0}, {Atom("d(120)"), 120.0}}, 0);
  CHECK(linear.value(AtomSet::of({"t", "d(120)"})) == 620);
  CHECK(linear.value(AtomSet{}) == 0);

  const Measure weights = Measure::weights({{AtomSet::of({"a"}), 3.0}}, std::nullopt);
  CHECK(weights.value(AtomSet::of({"a"})) == 3);
  CHECK_THROWS_AS(weights.value(AtomSet{}), Error);
}

TEST_CASE("programs canonicalize rule order and drop duplicates") {
  const Rule fact_a{SCAtom::literal(Atom("a"), false), {}};
  const Rule fact_b{SCAtom::literal(Atom("b"), false), {}};
  const Program p1({fact_b, fact_a, fact_a});
  const Program p2({fact_a, fact_b});
  CHECK(p1 == p2);
  CHECK(p1.rules().size() == 2);
  CHECK(p1.universe() == AtomSet::of({"a", "b"}));
}
