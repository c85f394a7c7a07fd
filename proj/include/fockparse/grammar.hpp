#pragma once

// Context-free grammars, normal-form predicates and the conversions between
// Chomsky reduced form, Chomsky normal form and term normal form.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fockparse/symbol.hpp"
#include "fockparse/term.hpp"

namespace fockparse {

struct Rule {
  Symbol lhs;
  std::vector<Symbol> rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// "A -> B C"; an empty right-hand side renders as "A ->".
std::string to_string(const Rule& r);

class Grammar {
 public:
  // Validates the quadruple invariants; throws InputError.
  Grammar(std::set<Symbol> terminals, std::set<Symbol> nonterminals, Symbol start,
          std::vector<Rule> rules);

  // Nonterminals are the left-hand sides, terminals every other symbol. The
  // start symbol defaults to the first left-hand side. Duplicate rules are
  // dropped, keeping the first occurrence.
  static Grammar from_rules(std::vector<Rule> rules, std::optional<Symbol> start = {});

  const std::set<Symbol>& terminals() const { return terminals_; }
  const std::set<Symbol>& nonterminals() const { return nonterminals_; }
  const Symbol& start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }

  bool is_terminal(const Symbol& s) const { return terminals_.contains(s); }
  bool is_nonterminal(const Symbol& s) const { return nonterminals_.contains(s); }

  std::size_t max_rule_length() const;

 private:
  std::set<Symbol> terminals_;
  std::set<Symbol> nonterminals_;
  Symbol start_;
  std::vector<Rule> rules_;
};

// Grammar file format: an optional `start: X` line, then lines of the form
// `A -> x y | z` ('#' starts a comment line). Throws SyntaxError.
Grammar parse_grammar(std::string_view text);

// One rule per line; a `start:` line is emitted when the first rule's
// left-hand side is not the start symbol.
std::string serialize_grammar(const Grammar& g);

struct FormViolation {
  Rule rule;
  std::string reason;
};

struct FormReport {
  bool is_cnf = false;
  bool is_crf = false;
  bool is_tnf = false;
  std::vector<FormViolation> violations;
};

FormReport check_form(const Grammar& g);

// Nonterminals deriving the empty string.
std::set<Symbol> nullable_symbols(const Grammar& g);
bool derives_empty(const Grammar& g);

// Drops unproductive and unreachable symbols. Throws DomainError when the
// start symbol is unproductive (empty language).
Grammar remove_useless(const Grammar& g);

// Textbook conversion to Chomsky reduced form: epsilon elimination, unit
// elimination, terminal lifting, left-to-right binarization (`X__bin<k>`),
// useless-symbol removal. Throws DomainError if g derives the empty string.
Grammar to_crf(const Grammar& g);

// Adds a fresh start `S__0` copying the start rules when the start symbol
// occurs on a right-hand side. Requires Chomsky reduced form.
Grammar crf_to_cnf(const Grammar& g);

struct TnfConstruction {
  Grammar grammar;
  // Nonterminals with both binary and unary rules, split into `A__2`
  // (binary) and `A__1` (unary).
  std::vector<Symbol> conflict_set;
  // True when the start symbol was split and `S__0 -> S__1 | S__2` added.
  bool added_start = false;
};

// The term-normal-form construction applied to a grammar in Chomsky reduced
// form, followed by useless-symbol removal.
TnfConstruction tnf_construction(const Grammar& crf);

// Weakly equivalent grammar in term normal form. Grammars already in term
// normal form are returned unchanged; others go through to_crf and
// tnf_construction. Throws DomainError for grammars deriving the empty
// string or generating the empty language.
Grammar to_tnf(const Grammar& g);

inline constexpr std::size_t kMaxEnumerationLength = 12;

// All terminal strings of length <= max_len derivable from the start symbol.
std::set<Sentence> enumerate_language(const Grammar& g, std::size_t max_len);

// Arities of a grammar in term normal form. Predicted categories are the
// symbols occurring after the first right-hand-side position, plus the start
// symbol as the parser's initial goal. Throws DomainError if g is not in term
// normal form.
Signature signature_of(const Grammar& g);

}  // namespace fockparse
