#include <doctest.h>

#include "fockparse/error.hpp"
#include "fockparse/kernels.hpp"
#include "support.hpp"

using namespace fockparse;
using namespace fockparse::testing;

namespace {

bool same(const TheoremReport& a, const TheoremReport& b) {
  if (a.seed != b.seed || a.cases != b.cases || a.passed != b.passed || a.failures.size() != b.failures.size())
    return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    if (a.failures[i].case_index != b.failures[i].case_index || a.failures[i].law != b.failures[i].law ||
        a.failures[i].term != b.failures[i].term)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("theorem case on the running example") {
  const Signature sig = signature_of(example_grammar());
  for (const char* t : {kT1, kT2, kFullTree, "D(the)", "the", "[VP]"}) CHECK_FALSE(check_theorem_case(parse_term(t, sig), sig));
  CHECK_FALSE(check_theorem_case(Term::empty(), sig));
  const Term t2 = parse_term(kT2, sig);
  CHECK(minimize_counterexample(t2, sig) == t2);
  CHECK_THROWS_AS(check_theorem_case(parse_term("S(the)"), sig), ArityError);
}

TEST_CASE("theorem signatures") {
  const auto sigs = theorem_signatures(42);
  CHECK(sigs.size() == kTheoremSignatures);
  std::set<int> arities;
  for (const auto& s : sigs) arities.insert(s.max_arity());
  CHECK(arities.size() >= 3);
  CHECK(serialize_term(theorem_case_term(42, 7, sigs[7])) == serialize_term(theorem_case_term(42, 7, sigs[7])));
}

TEST_CASE("representation theorem, serial and parallel agree") {
  const TheoremReport serial = check_representation_theorem(42, 300, Execution::serial);
  const TheoremReport parallel = check_representation_theorem(42, 300, Execution::parallel);
  CHECK(serial.passed == 300);
  CHECK(serial.failures.empty());
  CHECK(serial.signatures == kTheoremSignatures);
  CHECK(same(serial, parallel));
  CHECK(check_representation_theorem(7, 200).passed == 200);
}

TEST_CASE("weak equivalence, serial and parallel agree") {
  const auto corpus = equivalence_corpus(1, 20);
  REQUIRE(corpus.size() == 20);
  for (const Grammar& g : corpus) CHECK_FALSE(enumerate_language(g, 8).empty());
  const EquivalenceReport serial = check_weak_equivalence(corpus, 7, Execution::serial);
  const EquivalenceReport parallel = check_weak_equivalence(corpus, 7, Execution::parallel);
  CHECK(serial.grammars == 20);
  CHECK(serial.mismatches.empty());
  CHECK(parallel.mismatches.size() == serial.mismatches.size());
}

TEST_CASE("weak equivalence reports grammars without a term normal form") {
  const EquivalenceReport r = check_weak_equivalence({grammar_of("S -> a\nS ->\n"), example_grammar()}, 4);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].grammar_index == 0);
}
