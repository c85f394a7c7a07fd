#include "fockparse/kernels.hpp"

#include <exception>

#include "fockparse/error.hpp"
#include "fockparse/fock.hpp"
#include "fockparse/random.hpp"

namespace fockparse {

std::optional<std::string> check_theorem_case(const Term& t, const Signature& sig) {
  const FockVector v = embed(t, sig);
  if (decode(v, sig) != t) return "decode(embed(t)) != t";
  if (!t.is_empty() && v.size() != node_count(t)) return "support size != node count";
  for (const auto& [k, c] : v.entries()) {
    if (c != 1.0) return "coefficient != 1 on " + k.text();
  }
  if (!t.is_node()) return std::nullopt;

  const int rd = sig.role_dim();
  if (cat_op(v) != FockVector::filler(cat(t), rd)) return "cat(|t>) != |cat(t)>";
  const auto rank = t.children().size();
  for (std::size_t i = 0; i < rank; ++i) {
    if (ex_op(v, static_cast<int>(i)) != embed(ex(t, i), sig))
      return "ex_" + std::to_string(i) + "(|t>) != |ex_" + std::to_string(i) + "(t)>";
  }
  for (int i = static_cast<int>(rank); i < sig.max_arity(); ++i) {
    if (!ex_op(v, i).is_zero()) return "ex_" + std::to_string(i) + " beyond rank is not zero";
  }
  std::vector<FockVector> kids;
  for (const auto& c : t.children()) kids.push_back(embed(c, sig));
  if (cons_op(FockVector::filler(t.symbol(), rd), kids) !=
      embed(cons(sig, t.symbol(), t.children()), sig))
    return "cons(|A>, |t0>, ...) != |cons(A, t0, ...)>";
  return std::nullopt;
}

Term minimize_counterexample(const Term& t, const Signature& sig) {
  Term cur = t;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const auto& c : cur.children()) {
      if (check_theorem_case(c, sig)) {
        cur = c;
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<Signature> theorem_signatures(std::uint64_t seed) {
  std::vector<Signature> sigs;
  Rng rng(mix_seed(seed, ~std::uint64_t{0}));
  for (std::size_t i = 0; i < kTheoremSignatures; ++i) {
    const int max_arity = 1 + static_cast<int>(i % 4);
    sigs.push_back(signature_of(random_tnf_grammar(rng, max_arity)));
  }
  return sigs;
}

Term theorem_case_term(std::uint64_t seed, std::size_t index, const Signature& sig) {
  Rng rng(mix_seed(seed, index));
  return random_term(rng, sig, 5);
}

namespace {

std::optional<TheoremFailure> run_theorem_case(std::uint64_t seed, std::size_t i,
                                               const std::vector<Signature>& sigs) {
  const std::size_t s = i % sigs.size();
  const Term t = theorem_case_term(seed, i, sigs[s]);
  try {
    if (auto law = check_theorem_case(t, sigs[s]))
      return TheoremFailure{i, s, *law, serialize_term(minimize_counterexample(t, sigs[s]))};
  } catch (const std::exception& e) {
    return TheoremFailure{i, s, std::string("exception: ") + e.what(), serialize_term(t)};
  }
  return std::nullopt;
}

std::optional<EquivalenceMismatch> run_equivalence_case(const Grammar& g, std::size_t i,
                                                        std::size_t max_len) {
  try {
    const Grammar tnf = to_tnf(g);
    if (!check_form(tnf).is_tnf) return EquivalenceMismatch{i, "to_tnf result is not in TNF"};
    const auto before = enumerate_language(g, max_len);
    const auto after = enumerate_language(tnf, max_len);
    if (before != after)
      return EquivalenceMismatch{i, "languages differ: " + std::to_string(before.size()) +
                                        " vs " + std::to_string(after.size()) + " strings"};
  } catch (const std::exception& e) {
    return EquivalenceMismatch{i, std::string("exception: ") + e.what()};
  }
  return std::nullopt;
}

}  // namespace

TheoremReport check_representation_theorem(std::uint64_t seed, std::size_t cases,
                                            Execution exec) {
  const auto sigs = theorem_signatures(seed);
  std::vector<std::optional<TheoremFailure>> results(cases);
  if (exec == Execution::parallel) {
    const auto n = static_cast<long long>(cases);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      results[idx] = run_theorem_case(seed, idx, sigs);
    }
  } else {
    for (std::size_t i = 0; i < cases; ++i) results[i] = run_theorem_case(seed, i, sigs);
  }
  TheoremReport rep;
  rep.seed = seed;
  rep.cases = cases;
  rep.signatures = sigs.size();
  for (auto& r : results) {
    if (r) {
      rep.failures.push_back(std::move(*r));
    } else {
      ++rep.passed;
    }
  }
  return rep;
}

EquivalenceReport check_weak_equivalence(const std::vector<Grammar>& grammars,
                                         std::size_t max_len, Execution exec) {
  std::vector<std::optional<EquivalenceMismatch>> results(grammars.size());
  if (exec == Execution::parallel) {
    const auto n = static_cast<long long>(grammars.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      results[idx] = run_equivalence_case(grammars[idx], idx, max_len);
    }
  } else {
    for (std::size_t i = 0; i < grammars.size(); ++i)
      results[i] = run_equivalence_case(grammars[i], i, max_len);
  }
  EquivalenceReport rep;
  rep.grammars = grammars.size();
  for (auto& r : results) {
    if (r) rep.mismatches.push_back(std::move(*r));
  }
  return rep;
}

std::vector<Grammar> equivalence_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Grammar> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Rng rng(mix_seed(seed, i));
    Grammar g = random_cfg(rng);
    try {
      remove_useless(g);
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace fockparse
