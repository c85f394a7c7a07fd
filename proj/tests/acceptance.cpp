// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "basis_oracle.hpp"
#include "fockparse/analysis.hpp"
#include "fockparse/cli.hpp"
#include "fockparse/fock.hpp"
#include "fockparse/kernels.hpp"
#include "fockparse/random.hpp"
#include "pca_oracle.hpp"
#include "support.hpp"

using namespace fockparse;
using namespace fockparse::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string cli_stdout(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome table1() {
  Outcome o;
  const auto start = Clock::now();
  int code = 0;
  const std::string out = cli_stdout({"parse", data_path("example.cfg"), "the mouse ate cheese"}, code);
  const double s = seconds_since(start);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out == read_data("table1.trace"), "trace differs from the golden table");
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "15 rows, " + std::to_string(s * 1000.0) + " ms";
  return o;
}

Outcome interactive() {
  Outcome o;
  int code = 0;
  const std::string out = cli_stdout({"iparse", data_path("example.cfg"), "the mouse ate cheese"}, code);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out == read_data("iparse.txt"), "term sequence differs");
  if (o.ok) o.detail = "5 trees, last " + std::string(kFullTree);
  return o;
}

Outcome embeddings() {
  Outcome o;
  int code1 = 0, code2 = 0;
  const std::string v1 = cli_stdout({"embed", data_path("example.cfg"), kT1}, code1);
  const std::string v2 = cli_stdout({"embed", data_path("example.cfg"), kT2}, code2);
  o.require(code1 == 0 && code2 == 0, "embed failed");
  o.require(v1 == read_data("t1.fock"), "t1 vector differs from golden");
  o.require(v2 == read_data("t2.fock"), "t2 vector differs from golden");
  const Signature sig = signature_of(example_grammar());
  const FockVector e1 = embed(parse_term(kT1, sig), sig), e2 = embed(parse_term(kT2, sig), sig);
  o.require(e1.size() == 4 && e2.size() == 7, "wrong key counts");
  for (const FockVector* v : {&e1, &e2})
    for (const auto& [k, c] : v->entries()) o.require(c == 1.0, "coefficient " + std::to_string(c) + " on " + k.text());
  if (o.ok) o.detail = "4 and 7 keys, byte-exact";
  return o;
}

Outcome dimensions() {
  Outcome o;
  const Grammar g = example_grammar();
  const Signature sig = signature_of(g);
  const Trajectory tr = trajectory(g, words("the mouse ate cheese"));
  o.require(sig.filler_dimension() == 13, "filler dimension " + std::to_string(sig.filler_dimension()));
  o.require(sig.role_dim() == 3, "role dimension " + std::to_string(sig.role_dim()));
  o.require(tr.depths == std::vector<std::size_t>{0, 2, 3, 3, 3}, "trajectory depths differ");
  o.require(tr.nominal_dims == std::vector<std::uint64_t>{16, 172, 523, 523, 523}, "trajectory dims differ");
  for (std::size_t p = 0; p <= 4; ++p)
    o.require(fock_dim(13, 3, p) == enumerate_basis(13, 3, p),
              "formula and enumeration disagree at p=" + std::to_string(p));
  if (o.ok) o.detail = "16 172 523 523 523; enumeration agrees for p<=4";
  return o;
}

Outcome theorem() {
  Outcome o;
  const auto start = Clock::now();
  const TheoremReport r = check_representation_theorem(42, 1000);
  const double s = seconds_since(start);
  o.require(r.signatures >= 20, "only " + std::to_string(r.signatures) + " signatures");
  o.require(r.failures.empty(),
            r.failures.empty() ? "" : "case " + std::to_string(r.failures[0].case_index) + ": " + r.failures[0].law);
  o.require(r.passed == 1000, std::to_string(r.passed) + "/1000 passed");
  o.require(s < 10.0, "took " + std::to_string(s) + " s");
  if (o.ok)
    o.detail = "1000/1000 over " + std::to_string(r.signatures) + " signatures, " + std::to_string(s) + " s";
  return o;
}

Outcome word_meaning() {
  Outcome o;
  const Grammar g = example_grammar();
  const Signature sig = signature_of(g);
  const LcParser p(g);
  const FockVector t1 = embed(parse_term(kT1, sig), sig), t2 = embed(parse_term(kT2, sig), sig);
  o.require(word_operator(p, sym("mouse"), t1) == t2, "operational word operator differs");
  o.require(word_operator_composed(p, sym("mouse"), t1) == t2, "composed word operator differs");
  // The explicit composition cons(|S>, cons(cat|t1>, ex0|t1>, |N(mouse)>), |[VP]>).
  const FockVector explicit_form =
      cons_op(FockVector::filler(sym("S"), 3),
              {cons_op(cat_op(t1), {ex_op(t1, 0), embed(parse_term("N(mouse)", sig), sig)}),
               FockVector::filler(Filler{sym("VP"), true}, 3)});
  o.require(explicit_form == t2, "explicit operator composition differs");
  if (o.ok) o.detail = "operational, replayed and explicit compositions all equal |t2>";
  return o;
}

Outcome equivalence() {
  Outcome o;
  const auto start = Clock::now();
  const auto corpus = equivalence_corpus(2024, 50);
  std::size_t max_nt = 0, max_rules = 0;
  for (const Grammar& g : corpus) {
    max_nt = std::max(max_nt, g.nonterminals().size());
    max_rules = std::max(max_rules, g.rules().size());
    o.require(!derives_empty(g), "corpus grammar derives the empty string");
  }
  const EquivalenceReport r = check_weak_equivalence(corpus, 8);
  const double s = seconds_since(start);
  o.require(corpus.size() == 50, "corpus has " + std::to_string(corpus.size()) + " grammars");
  o.require(max_nt <= 6 && max_rules <= 12, "corpus grammar too large");
  o.require(r.mismatches.empty(),
            r.mismatches.empty() ? "" : "grammar " + std::to_string(r.mismatches[0].grammar_index) + ": " + r.mismatches[0].detail);
  o.require(s < 60.0, "took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "50 grammars, lengths <= 8, " + std::to_string(s) + " s";
  return o;
}

enum class LengthClass { only_one, only_longer, mixed, empty };

LengthClass classify(const Grammar& g) {
  bool one = false, longer = false;
  for (const Sentence& s : enumerate_language(g, 8)) (s.size() == 1 ? one : longer) = true;
  if (one && longer) return LengthClass::mixed;
  if (one) return LengthClass::only_one;
  if (longer) return LengthClass::only_longer;
  return LengthClass::empty;
}

Outcome single_length_classes() {
  Outcome o;
  std::size_t one = 0, longer = 0, mixed = 0;
  auto check = [&](const Grammar& g, LengthClass cls) {
    const TnfConstruction c = tnf_construction(to_crf(g));
    const FormReport tnf = check_form(c.grammar);
    o.require(tnf.is_tnf, "construction output not in TNF");
    if (cls == LengthClass::mixed) {
      o.require(c.added_start, "mixed grammar without start split:\n" + serialize_grammar(g));
      o.require(!tnf.is_cnf, "mixed grammar output is CNF:\n" + serialize_grammar(g));
      ++mixed;
    } else {
      const FormReport both = check_form(crf_to_cnf(c.grammar));
      o.require(!c.added_start, "start split without mixed lengths:\n" + serialize_grammar(g));
      o.require(both.is_cnf && both.is_tnf, "output not CNF and TNF:\n" + serialize_grammar(g));
      ++(cls == LengthClass::only_one ? one : longer);
    }
  };
  Rng rng(77);
  RandomCfgOptions lexical;
  lexical.max_rhs = 1;
  for (int i = 0; i < 400 && (one < 20 || longer < 20 || mixed < 20); ++i) {
    const Grammar g = random_cfg(rng, i % 4 == 0 ? lexical : RandomCfgOptions{});
    const LengthClass cls = classify(g);
    if (cls == LengthClass::empty) continue;
    if ((cls == LengthClass::only_one && one >= 20) || (cls == LengthClass::only_longer && longer >= 20) ||
        (cls == LengthClass::mixed && mixed >= 20))
      continue;
    check(g, cls);
  }
  check(grammar_of("S -> A B\nS -> a\nA -> a\nB -> b\n"), LengthClass::mixed);
  o.require(one > 0 && longer > 0 && mixed > 0, "a length class was never generated");
  if (o.ok)
    o.detail = std::to_string(one) + " length-1, " + std::to_string(longer) + " length>=2 and " +
               std::to_string(mixed) + " mixed grammars";
  return o;
}

Outcome pca() {
  Outcome o;
  const Trajectory tr = trajectory(example_grammar(), words("the mouse ate cheese"));
  const DenseMatrix dense = densify(tr.vectors);
  Rows x(static_cast<std::size_t>(dense.values.rows()));
  for (Eigen::Index i = 0; i < dense.values.rows(); ++i)
    for (Eigen::Index j = 0; j < dense.values.cols(); ++j) x[static_cast<std::size_t>(i)].push_back(dense.values(i, j));

  const PcaResult r = pca_project(tr.vectors, 4);
  const Eigen::MatrixXd gram = r.components * r.components.transpose();
  o.require((gram - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9, "components not orthonormal");
  for (Eigen::Index j = 1; j < 4; ++j)
    o.require(r.explained_variance(j) <= r.explained_variance(j - 1), "explained variance increases");

  for (Eigen::Index a = 0; a < 5; ++a)
    for (Eigen::Index b = 0; b < 5; ++b) {
      const double projected = (r.projected.row(a) - r.projected.row(b)).norm();
      const double original = (dense.values.row(a) - dense.values.row(b)).norm();
      o.require(std::abs(projected - original) < 1e-8, "pairwise distance not preserved");
    }

  const EigenPairs oracle = jacobi_eigen(covariance(x));
  const Rows xc = centered(x);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    o.require(std::abs(r.explained_variance(jj) - oracle.values[j]) < 1e-8, "variance differs from oracle");
    std::vector<double> comp(static_cast<std::size_t>(r.components.cols()));
    for (Eigen::Index c = 0; c < r.components.cols(); ++c) comp[static_cast<std::size_t>(c)] = r.components(jj, c);
    const double d = dot(comp, oracle.vectors[j]);
    o.require(std::abs(std::abs(d) - 1.0) < 1e-8, "component differs from oracle");
    for (std::size_t i = 0; i < 5; ++i)
      o.require(std::abs(r.projected(static_cast<Eigen::Index>(i), jj) - (d > 0 ? 1 : -1) * dot(xc[i], oracle.vectors[j])) < 1e-8,
                "projection differs from oracle");
  }
  if (o.ok) o.detail = "orthonormal, sorted, distances kept, oracle agrees";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"parse trace of the example sentence", table1},
      {"interactive parse tree sequence", interactive},
      {"embeddings of t1 and t2", embeddings},
      {"Fock subspace dimensions", dimensions},
      {"representation theorem, 1000 random terms", theorem},
      {"word operator for 'mouse'", word_meaning},
      {"weak equivalence of term normal form", equivalence},
      {"CNF/TNF coincidence by string lengths", single_length_classes},
      {"PCA of the parse trajectory", pca},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
