#pragma once

// Seeded generators for grammars, signatures and terms. Output depends only
// on the seed: no std distributions are used.

#include <cstddef>
#include <cstdint>
#include <random>

#include "fockparse/grammar.hpp"
#include "fockparse/term.hpp"

namespace fockparse {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  // Inclusive range.
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// Independent stream seed for (seed, index); splitmix64 finalizer.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct RandomCfgOptions {
  std::size_t max_nonterminals = 6;
  std::size_t max_rules = 12;
  std::size_t terminals = 3;
  std::size_t max_rhs = 3;
};

// Epsilon-free grammar over nonterminals N0.. (start N0) and terminals a, b,
// ... Every nonterminal has at least one rule; the language may be empty.
Grammar random_cfg(Rng& rng, const RandomCfgOptions& opt = {});

// Grammar in term normal form with nonterminal ranks in [1, max_arity].
Grammar random_tnf_grammar(Rng& rng, int max_arity);

// Term-normal-form grammar on which the left-corner parser is deterministic
// and complete: every rule has its own left corner and the left-corner
// relation is acyclic.
Grammar random_lc_grammar(Rng& rng);

// Random term over `sig` of depth at most max_depth (never the empty tree).
Term random_term(Rng& rng, const Signature& sig, std::size_t max_depth);

}  // namespace fockparse
