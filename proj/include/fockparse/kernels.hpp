#pragma once

// Batch property checks. Each kernel has a serial reference and an OpenMP
// version; both aggregate results by case index, so their reports are
// identical.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockparse/grammar.hpp"
#include "fockparse/term.hpp"

namespace fockparse {

enum class Execution { serial, parallel };

// Checks one term: decode(embed(t)) = t, one key per tree node, and for
// nodes the cat/ex/cons homomorphism laws. Returns the first violated law.
std::optional<std::string> check_theorem_case(const Term& t, const Signature& sig);

// Smallest subterm of `t` (by repeatedly descending into failing children)
// that still fails check_theorem_case.
Term minimize_counterexample(const Term& t, const Signature& sig);

struct TheoremFailure {
  std::size_t case_index;
  std::size_t signature_index;
  std::string law;
  std::string term;  // minimized
};

struct TheoremReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t signatures = 0;
  std::size_t passed = 0;
  std::vector<TheoremFailure> failures;  // ordered by case index
};

inline constexpr std::size_t kTheoremSignatures = 24;

// Case i draws a term of depth <= 5 over signature i % kTheoremSignatures;
// signatures come from random term-normal-form grammars with ranks up to 4.
std::vector<Signature> theorem_signatures(std::uint64_t seed);
Term theorem_case_term(std::uint64_t seed, std::size_t index, const Signature& sig);

TheoremReport check_representation_theorem(std::uint64_t seed, std::size_t cases,
                                            Execution exec = Execution::parallel);

struct EquivalenceMismatch {
  std::size_t grammar_index;
  std::string detail;
};

struct EquivalenceReport {
  std::size_t grammars = 0;
  std::vector<EquivalenceMismatch> mismatches;  // ordered by grammar index
};

// enumerate_language(g) == enumerate_language(to_tnf(g)) up to max_len, and
// to_tnf(g) is in term normal form.
EquivalenceReport check_weak_equivalence(const std::vector<Grammar>& grammars,
                                         std::size_t max_len,
                                         Execution exec = Execution::parallel);

// The first `count` grammars from random_cfg(seed stream) that have a
// non-empty language.
std::vector<Grammar> equivalence_corpus(std::uint64_t seed, std::size_t count);

}  // namespace fockparse
