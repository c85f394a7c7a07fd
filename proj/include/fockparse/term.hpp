#pragma once

// Ground terms over a grammar signature, extended by predicted categories
// `[A]` and the empty tree.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fockparse/symbol.hpp"

namespace fockparse {

// Arity assignment for terminals (rank 0), nonterminals (rank >= 1) and
// predicted categories (rank 0).
class Signature {
 public:
  Signature() = default;
  Signature(std::set<Symbol> terminals, std::map<Symbol, int> nonterminal_ranks,
            std::set<Symbol> predicted);

  bool is_terminal(const Symbol& s) const { return terminals_.contains(s); }
  bool is_nonterminal(const Symbol& s) const { return ranks_.contains(s); }
  bool is_predicted(const Symbol& s) const { return predicted_.contains(s); }

  // Rank of a terminal or nonterminal; throws InputError for unknown symbols.
  int rank(const Symbol& s) const;

  // Largest nonterminal rank, the `m` of the role space {0, ..., m}.
  int max_arity() const { return max_arity_; }
  int role_dim() const { return max_arity_ + 1; }

  // Number of filler symbols |T| + |N| + |P|.
  std::size_t filler_dimension() const;

  const std::set<Symbol>& terminals() const { return terminals_; }
  const std::map<Symbol, int>& nonterminal_ranks() const { return ranks_; }
  const std::set<Symbol>& predicted() const { return predicted_; }

 private:
  std::set<Symbol> terminals_;
  std::map<Symbol, int> ranks_;
  std::set<Symbol> predicted_;
  int max_arity_ = 1;
};

class Term {
 public:
  enum class Kind { empty, leaf, predicted, node };

  Term() = default;

  static Term empty() { return Term{}; }
  static Term leaf(Symbol terminal);
  static Term predicted(Symbol category);
  // Throws DomainError if `children` is empty or contains the empty tree.
  static Term node(Symbol category, std::vector<Term> children);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::empty; }
  bool is_leaf() const { return kind_ == Kind::leaf; }
  bool is_predicted() const { return kind_ == Kind::predicted; }
  bool is_node() const { return kind_ == Kind::node; }

  // Category, terminal or predicted category; empty symbol for the empty tree.
  const Symbol& symbol() const { return symbol_; }
  const std::vector<Term>& children() const { return children_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Kind kind_ = Kind::empty;
  Symbol symbol_;
  std::vector<Term> children_;
};

// cat(A(t0, ..., tk)) = A. Throws PartialFunctionError on non-nodes.
Symbol cat(const Term& t);

// ex_i(A(t0, ..., tk)) = ti for every i <= k. Throws PartialFunctionError.
const Term& ex(const Term& t, std::size_t i);

// cons(A, t0, ..., tk) = A(t0, ..., tk) with k + 1 = rank(A). Throws ArityError.
Term cons(const Signature& sig, const Symbol& category, std::vector<Term> children);

// 0 for the empty tree and for leaves, 1 + max child depth for nodes.
std::size_t depth(const Term& t);

// Number of nodes and leaves; 0 for the empty tree.
std::size_t node_count(const Term& t);

// True if any predicted category occurs in `t`.
bool has_predicted(const Term& t);

// Terminal leaves from left to right.
Sentence leaf_yield(const Term& t);

// Checks that every symbol is known to `sig` and every node has rank(A)
// children. Throws InputError / ArityError.
void validate_term(const Term& t, const Signature& sig);

// Term text syntax: `A(child,...)`, `[A]`, a bare terminal, or `@empty`.
Term parse_term(std::string_view text);
Term parse_term(std::string_view text, const Signature& sig);
std::string serialize_term(const Term& t);

}  // namespace fockparse
