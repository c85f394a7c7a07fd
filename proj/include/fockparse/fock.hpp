#pragma once

// Sparse Fock-space vectors and the tensor-product representation of terms.
//
// A basis vector is a filler (or none, for the role-only sectors) tensored
// with a path of roles. Paths are stored innermost-first: the role bound
// directly to the filler comes first, the outermost role last, which is the
// order in which kets such as |the 0 0 0> are written.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fockparse/grammar.hpp"
#include "fockparse/lcparser.hpp"
#include "fockparse/term.hpp"

namespace fockparse {

// Filler symbol; predicted categories are distinct fillers rendered `[A]`.
struct Filler {
  Symbol symbol;
  bool predicted = false;

  std::string text() const;
  friend bool operator==(const Filler&, const Filler&) = default;
  friend auto operator<=>(const Filler&, const Filler&) = default;
};

using RolePath = std::vector<int>;

struct BasisKey {
  std::optional<Filler> filler;  // absent: role-only (vacuum) sector
  RolePath path;                 // innermost first

  // `NP 2`, `the 0 0`, `@role 2`; a bare `NP` or `@role` for empty paths.
  std::string text() const;
  static BasisKey parse(std::string_view text);

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

class FockVector {
 public:
  explicit FockVector(int role_dim = 3);

  // |filler> with an empty role path.
  static FockVector filler(const Filler& f, int role_dim);
  static FockVector filler(const Symbol& s, int role_dim) { return filler(Filler{s, false}, role_dim); }
  static FockVector basis(BasisKey key, int role_dim);

  int role_dim() const { return role_dim_; }
  // Largest role index m; the mother role.
  int mother_role() const { return role_dim_ - 1; }

  const std::map<BasisKey, double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  double coefficient(const BasisKey& k) const;
  std::set<Filler> fillers() const;

  // Adds `value` to the coefficient of `key`; zero results are dropped.
  void add(const BasisKey& key, double value);

  FockVector& operator+=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator*(double s, const FockVector& v);

  // v ⊗ |role>: appends `role` as the new outermost role of every key.
  FockVector bind(int role) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  int role_dim_;
  std::map<BasisKey, double> entries_;
};

// Tensor-product embedding: the empty tree maps to the vacuum |m>, leaves
// to their filler, A(t0..tk) to |A>⊗|m> ⊕ ψ(t0)⊗|0> ⊕ ... ⊕ ψ(tk)⊗|k>.
FockVector embed(const Term& t, const Signature& sig);

// Exact inverse of embed. Throws DomainError for vectors outside its image.
Term decode(const FockVector& v, const Signature& sig);

// (1 ⊗ <m|) v.
FockVector cat_op(const FockVector& v);
// (1 ⊗ <i|) v for i < m. Throws DomainError for other i.
FockVector ex_op(const FockVector& v, int i);
// a ⊗ |m> ⊕ u0 ⊗ |0> ⊕ ... ⊕ uk ⊗ |k>. Throws DomainError if k + 1 > m.
FockVector cons_op(const FockVector& a, const std::vector<FockVector>& children);

// Successor state of embed(t) after the word `a` (shift and quiesce),
// computed by decoding, stepping the parser and re-embedding.
FockVector word_operator(const LcParser& parser, const Symbol& a, const FockVector& v);
FockVector word_operator(const Grammar& g, const Symbol& a, const FockVector& v);

// The same transition evaluated purely with cat_op/ex_op/cons_op on v:
// each parser step (shift, project, complete) of the word is replayed on
// Fock vectors, reading daughters with ex_op and rebuilding with cons_op.
FockVector word_operator_composed(const LcParser& parser, const Symbol& a, const FockVector& v);

// Dimension n (m^(p+1) - 1) / (m - 1) + m of the Fock subspace holding trees
// of depth p over n fillers and m roles. Throws DomainError for m < 2,
// n < 1 or on overflow.
std::uint64_t fock_dim(std::uint64_t n, std::uint64_t m, std::uint64_t p);

// Text format: one `<coefficient>\t<key>` line per entry, sorted by key text.
std::string serialize_fock(const FockVector& v);
// role_dim is not stored in the text and must be supplied.
FockVector parse_fock(std::string_view text, int role_dim);
// Largest role index found in the text plus one (0 if no roles occur).
int infer_role_dim(std::string_view text);

}  // namespace fockparse
