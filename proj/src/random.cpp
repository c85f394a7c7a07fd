#include "fockparse/random.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fockparse {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Symbol nonterminal(std::size_t i) { return Symbol("N" + std::to_string(i)); }

Symbol terminal(std::size_t i) {
  std::string name;
  do {
    name.insert(name.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return Symbol(name);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[rng.below(xs.size())];
}

}  // namespace

Grammar random_cfg(Rng& rng, const RandomCfgOptions& opt) {
  const std::size_t n_nt = rng.between(1, opt.max_nonterminals);
  const std::size_t n_rules = rng.between(n_nt, std::max(n_nt, opt.max_rules));
  std::vector<Symbol> symbols;
  for (std::size_t i = 0; i < n_nt; ++i) symbols.push_back(nonterminal(i));
  for (std::size_t i = 0; i < opt.terminals; ++i) symbols.push_back(terminal(i));

  std::vector<Rule> rules;
  for (std::size_t r = 0; r < n_rules; ++r) {
    Rule rule{r < n_nt ? nonterminal(r) : nonterminal(rng.below(n_nt)), {}};
    const std::size_t len = rng.between(1, opt.max_rhs);
    for (std::size_t k = 0; k < len; ++k) {
      // Bias towards terminals so that most grammars are productive.
      rule.rhs.push_back(rng.chance(1, 2) ? terminal(rng.below(opt.terminals)) : pick(rng, symbols));
    }
    rules.push_back(std::move(rule));
  }
  return Grammar::from_rules(std::move(rules), nonterminal(0));
}

Grammar random_tnf_grammar(Rng& rng, int max_arity) {
  const std::size_t n_nt = rng.between(1, 5);
  const std::size_t n_t = rng.between(1, 4);
  std::vector<Symbol> symbols;
  for (std::size_t i = 0; i < n_nt; ++i) symbols.push_back(nonterminal(i));
  for (std::size_t i = 0; i < n_t; ++i) symbols.push_back(terminal(i));
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < n_nt; ++i) {
    // Keep the largest rank reachable so that max_arity is attained.
    const auto rank = i == 0 ? static_cast<std::size_t>(max_arity)
                             : rng.between(1, static_cast<std::size_t>(max_arity));
    const std::size_t n_rules = rng.between(1, 2);
    for (std::size_t r = 0; r < n_rules; ++r) {
      Rule rule{nonterminal(i), {}};
      for (std::size_t k = 0; k < rank; ++k) rule.rhs.push_back(pick(rng, symbols));
      rules.push_back(std::move(rule));
    }
  }
  return Grammar::from_rules(std::move(rules), nonterminal(0));
}

Grammar random_lc_grammar(Rng& rng) {
  const std::size_t n_nt = rng.between(1, 5);
  std::vector<std::size_t> rank(n_nt);
  for (auto& r : rank) r = rng.between(1, 3);
  std::size_t next_terminal = 0;
  std::vector<Symbol> terminals;
  auto fresh_terminal = [&] {
    terminals.push_back(terminal(next_terminal++));
    return terminals.back();
  };
  std::vector<bool> corner_used(n_nt, false);
  std::vector<Rule> rules;

  // Built from the last nonterminal up. A left corner is a fresh terminal or
  // an unused Nj with j > i, so corners are unique and acyclic; the first
  // rule of each Ni only mentions terminals and higher nonterminals, which
  // keeps everything productive.
  for (std::size_t i = n_nt; i-- > 0;) {
    const std::size_t n_rules = rng.between(1, 2);
    for (std::size_t r = 0; r < n_rules; ++r) {
      Rule rule{nonterminal(i), {}};
      std::vector<std::size_t> free_corners;
      for (std::size_t j = i + 1; j < n_nt; ++j) {
        if (!corner_used[j]) free_corners.push_back(j);
      }
      if (!free_corners.empty() && rng.chance(1, 2)) {
        const std::size_t j = pick(rng, free_corners);
        corner_used[j] = true;
        rule.rhs.push_back(nonterminal(j));
      } else {
        rule.rhs.push_back(fresh_terminal());
      }
      for (std::size_t k = 1; k < rank[i]; ++k) {
        const bool any_nt = r > 0;
        const std::size_t lo = any_nt ? 0 : i + 1;
        if (lo < n_nt && rng.chance(1, 2)) {
          rule.rhs.push_back(nonterminal(rng.between(lo, n_nt - 1)));
        } else if (!terminals.empty() && rng.chance(1, 2)) {
          rule.rhs.push_back(pick(rng, terminals));
        } else {
          rule.rhs.push_back(fresh_terminal());
        }
      }
      rules.push_back(std::move(rule));
    }
  }
  std::reverse(rules.begin(), rules.end());
  return remove_useless(Grammar::from_rules(std::move(rules), nonterminal(0)));
}

Term random_term(Rng& rng, const Signature& sig, std::size_t max_depth) {
  std::vector<Symbol> leaves(sig.terminals().begin(), sig.terminals().end());
  const std::size_t n_terminals = leaves.size();
  leaves.insert(leaves.end(), sig.predicted().begin(), sig.predicted().end());
  std::vector<Symbol> categories;
  for (const auto& [a, _] : sig.nonterminal_ranks()) categories.push_back(a);

  if (max_depth == 0 || categories.empty() || (!leaves.empty() && rng.chance(1, 3))) {
    const std::size_t i = rng.below(leaves.size());
    return i < n_terminals ? Term::leaf(leaves[i]) : Term::predicted(leaves[i]);
  }
  const Symbol& a = pick(rng, categories);
  std::vector<Term> children;
  for (int i = 0; i < sig.rank(a); ++i) children.push_back(random_term(rng, sig, max_depth - 1));
  return Term::node(a, std::move(children));
}

}  // namespace fockparse
