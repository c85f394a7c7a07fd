#pragma once

// Deterministic left-corner push-down parser over a grammar in term normal
// form, with a symbolic trace and an interactive word-by-word view of the
// partial phrase-structure trees.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fockparse/grammar.hpp"
#include "fockparse/term.hpp"

namespace fockparse {

struct Completed {
  Term term;
  friend bool operator==(const Completed&, const Completed&) = default;
};

// A projected rule A -> x y... whose first daughters are filled and whose
// remaining daughters are still predicted.
struct Partial {
  Symbol category;
  std::vector<Term> filled;
  std::vector<Symbol> pending;
  friend bool operator==(const Partial&, const Partial&) = default;
};

using StackItem = std::variant<Completed, Partial>;

enum class Mode { init, shift, project, complete, accept };

struct Operation {
  Mode mode = Mode::init;
  std::size_t rule = 0;  // index into Grammar::rules() for project
  friend bool operator==(const Operation&, const Operation&) = default;
};

// "shift", "project (4)" with the 1-based rule number, "complete", "accept".
std::string to_string(const Operation& op);

struct ParserConfig {
  std::vector<StackItem> stack;  // bottom first; back() is the top
  Sentence input;
  std::size_t step = 0;
  Operation last_op;
  bool accepted = false;

  friend bool operator==(const ParserConfig&, const ParserConfig&) = default;
};

struct Trace {
  std::vector<ParserConfig> configs;
  bool accepted = false;
  std::string failure;  // diagnostic when not accepted
};

struct InteractiveParse {
  std::vector<Term> states;  // empty tree first, then one tree per word
  bool accepted = false;
  std::string failure;
};

// Stack as in the symbolic trace: top first, predicted slots as `[A]` before
// their partial category, completed items by category (or word), `ε` if empty.
std::string render_stack(const ParserConfig& c);

// One tab-separated line per step: number, stack, remaining input and the
// operation applied next. A failed trace ends with a `fail` row.
std::string render_trace(const Trace& t);

// Folds the stack into one tree: partial items become nodes with predicted
// leaves and each higher item replaces the first predicted slot of the item
// below it. The empty stack yields the empty tree.
Term snapshot(const ParserConfig& c);

class LcParser {
 public:
  // Throws DomainError unless g is in term normal form.
  explicit LcParser(Grammar g);

  const Grammar& grammar() const { return g_; }

  ParserConfig initial(Sentence input) const;

  // Mode that fires next with priority complete > project > shift > accept,
  // or nullopt for a dead configuration. Throws NondeterminismError when
  // more than one rule has the top symbol as left corner.
  std::optional<Operation> next_operation(const ParserConfig& c) const;

  // Applies `op` without any checks beyond its own preconditions.
  ParserConfig apply(const ParserConfig& c, const Operation& op) const;

  // Diagnostic if the top item can no longer be attached below it: its
  // symbol must be a left corner of the predicted slot it is heading for
  // (of the start symbol for the bottom item).
  std::optional<std::string> viability_error(const ParserConfig& c) const;

  // One step; throws ParseFailure on a dead or non-viable result.
  ParserConfig step(const ParserConfig& c) const;

  Trace parse(const Sentence& sentence) const;
  InteractiveParse interactive(const Sentence& sentence) const;

  // Runs project/complete until neither applies. Every visited configuration
  // is appended to `visited` when given. Throws ParseFailure if the step
  // budget is exhausted or a non-viable configuration is reached.
  ParserConfig quiesce(ParserConfig c, std::size_t budget,
                       std::vector<ParserConfig>* visited = nullptr) const;

  // Shift `word` and quiesce; the result is a state between two words.
  // Throws ParseFailure if the word cannot continue the state.
  ParserConfig advance(const ParserConfig& c, const Symbol& word,
                       std::vector<ParserConfig>* visited = nullptr) const;

  // Inverse of snapshot for configurations between two words. Throws
  // DomainError if t is not such a state of this grammar.
  ParserConfig from_snapshot(const Term& t, Sentence input = {}) const;

  // Project/complete steps allowed between two shifts.
  std::size_t step_budget(std::size_t sentence_length) const;

 private:
  [[noreturn]] void fail(const ParserConfig& c, const std::string& why) const;

  Grammar g_;
  std::map<Symbol, std::vector<std::size_t>> by_left_corner_;
  std::map<Symbol, std::set<Symbol>> left_corners_;  // reflexive-transitive
};

ParserConfig lc_step(const Grammar& g, const ParserConfig& c);
Trace lc_parse(const Grammar& g, const Sentence& sentence);
InteractiveParse interactive_parse(const Grammar& g, const Sentence& sentence);

}  // namespace fockparse
