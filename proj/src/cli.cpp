#include "fockparse/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fockparse/analysis.hpp"
#include "fockparse/error.hpp"
#include "fockparse/fock.hpp"
#include "fockparse/grammar.hpp"
#include "fockparse/kernels.hpp"
#include "fockparse/lcparser.hpp"

namespace fockparse::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
}

Grammar load_grammar(const std::string& path) { return parse_grammar(read_file(path)); }

Sentence sentence_of(const std::vector<std::string>& words) {
  std::string joined;
  for (const auto& w : words) joined += w + " ";
  return split_sentence(joined);
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

int cmd_check(const std::string& path, std::ostream& out) {
  const auto rep = check_form(load_grammar(path));
  out << "cnf=" << bool_text(rep.is_cnf) << " crf=" << bool_text(rep.is_crf)
      << " tnf=" << bool_text(rep.is_tnf) << "\n";
  for (const auto& v : rep.violations) out << "violation\t" << to_string(v.rule) << "\t" << v.reason << "\n";
  return kExitOk;
}

int cmd_to_tnf(const std::string& path, std::ostream& out) {
  const Grammar g = load_grammar(path);
  out << serialize_grammar(to_tnf(g));
  return kExitOk;
}

int cmd_parse(const std::string& path, const Sentence& s, std::ostream& out, std::ostream& err) {
  const LcParser parser(load_grammar(path));
  const Trace t = parser.parse(s);
  out << render_trace(t);
  if (!t.accepted) {
    err << t.failure << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_iparse(const std::string& path, const Sentence& s, std::ostream& out, std::ostream& err) {
  const LcParser parser(load_grammar(path));
  const InteractiveParse ip = parser.interactive(s);
  for (const auto& t : ip.states) out << serialize_term(t) << "\n";
  if (!ip.accepted) {
    err << ip.failure << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_embed(const std::string& path, const std::string& term_text, std::ostream& out) {
  const Signature sig = signature_of(load_grammar(path));
  Term t;
  try {
    t = parse_term(term_text, sig);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  out << serialize_fock(embed(t, sig));
  return kExitOk;
}

int cmd_trajectory(const std::string& path, const Sentence& s, const std::string& dir,
                   std::ostream& out) {
  const Trajectory tr = trajectory(load_grammar(path), s);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir + "': " + ec.message());
  std::string table = "step\tlabel\tdepth\tdim\tterm\n";
  for (std::size_t j = 0; j < tr.vectors.size(); ++j) {
    write_file(fs::path(dir) / ("step" + std::to_string(j) + ".fock"), serialize_fock(tr.vectors[j]));
    table += std::to_string(j) + "\t" + tr.labels[j] + "\t" + std::to_string(tr.depths[j]) + "\t" +
             std::to_string(tr.nominal_dims[j]) + "\t" + serialize_term(tr.terms[j]) + "\n";
  }
  write_file(fs::path(dir) / "trajectory.tsv", table);
  out << table;
  return kExitOk;
}

int cmd_pca(const std::vector<std::string>& files, std::size_t k, std::ostream& out) {
  std::vector<std::string> texts;
  int role_dim = 2;
  for (const auto& f : files) {
    texts.push_back(read_file(f));
    role_dim = std::max(role_dim, infer_role_dim(texts.back()));
  }
  std::vector<FockVector> vs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < files.size(); ++i) {
    vs.push_back(parse_fock(texts[i], role_dim));
    labels.push_back(fs::path(files[i]).stem().string());
  }
  out << pca_csv(pca_project(vs, k), labels);
  return kExitOk;
}

int cmd_theorem_check(std::uint64_t seed, std::size_t cases, std::ostream& out) {
  const TheoremReport rep = check_representation_theorem(seed, cases);
  out << "seed=" << rep.seed << " cases=" << rep.cases << " signatures=" << rep.signatures << "\n";
  for (const auto& f : rep.failures) {
    out << "case " << f.case_index << " (signature " << f.signature_index << "): " << f.law
        << "; minimized: " << f.term << "\n";
  }
  out << rep.passed << "/" << rep.cases << " ok\n";
  return rep.failures.empty() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Term normal form, left-corner parsing and Fock-space embeddings of CFGs"};
  app.name("fockparse");
  app.require_subcommand(1);

  std::string grammar_path, term_text, out_dir;
  std::vector<std::string> words, files;
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  std::size_t k = 3;

  auto* check = app.add_subcommand("check", "Report CNF/CRF/TNF membership");
  check->add_option("grammar", grammar_path)->required();
  auto* to_tnf_cmd = app.add_subcommand("to-tnf", "Convert to term normal form");
  to_tnf_cmd->add_option("grammar", grammar_path)->required();
  auto* parse = app.add_subcommand("parse", "Left-corner parse trace");
  parse->add_option("grammar", grammar_path)->required();
  parse->add_option("sentence", words)->required();
  auto* iparse = app.add_subcommand("iparse", "Interactive parse, one tree per word");
  iparse->add_option("grammar", grammar_path)->required();
  iparse->add_option("sentence", words)->required();
  auto* embed_cmd = app.add_subcommand("embed", "Fock-space vector of a term");
  embed_cmd->add_option("grammar", grammar_path)->required();
  embed_cmd->add_option("term", term_text)->required();
  auto* traj = app.add_subcommand("trajectory", "Write the Fock-space parse trajectory");
  traj->add_option("grammar", grammar_path)->required();
  traj->add_option("sentence", words)->required();
  traj->add_option("--out", out_dir, "Output directory")->required();
  auto* pca = app.add_subcommand("pca", "Principal-component projection of vector files");
  pca->add_option("files", files)->required();
  pca->add_option("--k", k, "Number of components")->default_val(3);
  auto* theorem = app.add_subcommand("theorem-check", "Randomized representation-theorem check");
  theorem->add_option("--seed", seed)->default_val(42);
  theorem->add_option("--cases", cases)->default_val(1000);

  std::vector<std::string> argv_store{"fockparse"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(grammar_path, out);
    if (*to_tnf_cmd) return cmd_to_tnf(grammar_path, out);
    if (*parse) return cmd_parse(grammar_path, sentence_of(words), out, err);
    if (*iparse) return cmd_iparse(grammar_path, sentence_of(words), out, err);
    if (*embed_cmd) return cmd_embed(grammar_path, term_text, out);
    if (*traj) return cmd_trajectory(grammar_path, sentence_of(words), out_dir, out);
    if (*pca) return cmd_pca(files, k, out);
    if (*theorem) return cmd_theorem_check(seed, cases, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace fockparse::cli
