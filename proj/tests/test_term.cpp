#include <doctest.h>

#include "fockparse/error.hpp"
#include "fockparse/random.hpp"
#include "fockparse/term.hpp"
#include "support.hpp"

using namespace fockparse;
using namespace fockparse::testing;

namespace {

Signature example_signature() { return signature_of(example_grammar()); }

}  // namespace

TEST_CASE("cat") {
  const Signature sig = example_signature();
  const Term t1 = parse_term(kT1, sig);
  CHECK(cat(t1) == sym("NP"));
  CHECK(cat(parse_term("D(the)", sig)) == sym("D"));
  CHECK_THROWS_AS(cat(parse_term("[N]", sig)), PartialFunctionError);
  CHECK_THROWS_AS(cat(Term::empty()), PartialFunctionError);
  CHECK_THROWS_AS(cat(Term::leaf(sym("the"))), PartialFunctionError);
}

TEST_CASE("ex exposes every daughter") {
  const Signature sig = example_signature();
  const Term t1 = parse_term(kT1, sig);
  CHECK(ex(t1, 0) == parse_term("D(the)", sig));
  CHECK(ex(t1, 1) == Term::predicted(sym("N")));
  CHECK_THROWS_AS(ex(parse_term("D(the)", sig), 1), PartialFunctionError);
  CHECK_THROWS_AS(ex(t1, 2), PartialFunctionError);
  CHECK_THROWS_AS(ex(Term::leaf(sym("the")), 0), PartialFunctionError);
}

TEST_CASE("cons") {
  const Signature sig = example_signature();
  const Term np = parse_term("NP(D(the),N(mouse))", sig);
  CHECK(cons(sig, sym("S"), {np, Term::predicted(sym("VP"))}) == parse_term(kT2, sig));
  CHECK(cons(sig, sym("D"), {Term::leaf(sym("the"))}) == parse_term("D(the)", sig));
  CHECK_THROWS_AS(cons(sig, sym("S"), {np}), ArityError);
  CHECK_THROWS(cons(sig, sym("S"), {np, Term::empty()}));
}

TEST_CASE("term text syntax") {
  const Signature sig = example_signature();
  const Term t1 = parse_term(kT1, sig);
  REQUIRE(t1.is_node());
  CHECK(t1.children().size() == 2);
  CHECK(t1.children()[1].is_predicted());
  CHECK(serialize_term(t1) == kT1);
  CHECK(parse_term("@empty").is_empty());
  CHECK(serialize_term(Term::empty()) == "@empty");
  CHECK(parse_term(" S ( NP ( D(the) , N(mouse) ) , [VP] ) ", sig) == parse_term(kT2, sig));
  CHECK_THROWS_AS(parse_term("S(NP)", sig), ArityError);
  CHECK_THROWS_AS(parse_term("NP(D(the),[N]", sig), InputError);
  CHECK_THROWS_AS(parse_term("NP(D(the),[N]))", sig), InputError);
  CHECK_THROWS_AS(parse_term("X(the)", sig), InputError);
  CHECK_THROWS_AS(parse_term("", sig), InputError);
  CHECK_THROWS(parse_term("NP(@empty,[N])"));
}

TEST_CASE("depth and node count") {
  const Signature sig = example_signature();
  CHECK(depth(parse_term(kT1, sig)) == 2);
  CHECK(depth(parse_term(kT2, sig)) == 3);
  CHECK(depth(Term::empty()) == 0);
  CHECK(depth(Term::leaf(sym("the"))) == 0);
  CHECK(node_count(parse_term(kT1, sig)) == 4);
  CHECK(node_count(parse_term(kT2, sig)) == 7);
  CHECK(node_count(Term::empty()) == 0);
}

TEST_CASE("yield and predicted leaves") {
  const Signature sig = example_signature();
  CHECK(join_sentence(leaf_yield(parse_term(kFullTree, sig))) == "the mouse ate cheese");
  CHECK(has_predicted(parse_term(kT2, sig)));
  CHECK_FALSE(has_predicted(parse_term(kFullTree, sig)));
}

TEST_CASE("signature of the example grammar") {
  const Signature sig = example_signature();
  CHECK(sig.rank(sym("the")) == 0);
  CHECK(sig.rank(sym("D")) == 1);
  CHECK(sig.rank(sym("NP")) == 2);
  CHECK(sig.rank(sym("S")) == 2);
  CHECK(sig.is_predicted(sym("N")));
  CHECK(sig.is_predicted(sym("VP")));
  CHECK(sig.max_arity() == 2);
  CHECK(sig.role_dim() == 3);
  // 4 terminals, 6 categories, predicted [N], [VP] and the start goal [S].
  CHECK(sig.filler_dimension() == 13);
}

TEST_CASE("signature of a single unary rule") {
  const Signature sig = signature_of(grammar_of("S -> a\n"));
  CHECK(sig.rank(sym("S")) == 1);
  CHECK(sig.rank(sym("a")) == 0);
}

TEST_CASE("properties over random terms") {
  Rng rng(7);
  for (int g = 0; g < 20; ++g) {
    const Signature sig = signature_of(random_tnf_grammar(rng, 1 + g % 4));
    for (int i = 0; i < 25; ++i) {
      const Term t = random_term(rng, sig, 4);
      CHECK_NOTHROW(validate_term(t, sig));
      CHECK(parse_term(serialize_term(t), sig) == t);
      CHECK(serialize_term(parse_term(serialize_term(t))) == serialize_term(t));
      if (t.is_node()) {
        std::vector<Term> kids;
        for (std::size_t j = 0; j < t.children().size(); ++j) kids.push_back(ex(t, j));
        CHECK(cons(sig, cat(t), kids) == t);
      }
    }
  }
}
