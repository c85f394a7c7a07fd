#include "fockparse/term.hpp"

#include <algorithm>
#include <cctype>

#include "fockparse/error.hpp"

namespace fockparse {

Signature::Signature(std::set<Symbol> terminals, std::map<Symbol, int> nonterminal_ranks,
                     std::set<Symbol> predicted)
    : terminals_(std::move(terminals)),
      ranks_(std::move(nonterminal_ranks)),
      predicted_(std::move(predicted)) {
  for (const auto& [a, r] : ranks_) {
    if (r < 1) throw DomainError("nonterminal " + a.name() + " must have positive rank");
    if (terminals_.contains(a))
      throw DomainError("symbol " + a.name() + " is both terminal and nonterminal");
    max_arity_ = std::max(max_arity_, r);
  }
}

int Signature::rank(const Symbol& s) const {
  if (auto it = ranks_.find(s); it != ranks_.end()) return it->second;
  if (terminals_.contains(s)) return 0;
  throw InputError("unknown symbol '" + s.name() + "'");
}

std::size_t Signature::filler_dimension() const {
  return terminals_.size() + ranks_.size() + predicted_.size();
}

Term Term::leaf(Symbol terminal) {
  Term t;
  t.kind_ = Kind::leaf;
  t.symbol_ = std::move(terminal);
  return t;
}

Term Term::predicted(Symbol category) {
  Term t;
  t.kind_ = Kind::predicted;
  t.symbol_ = std::move(category);
  return t;
}

Term Term::node(Symbol category, std::vector<Term> children) {
  if (children.empty())
    throw DomainError("node " + category.name() + " needs at least one child");
  for (const auto& c : children) {
    if (c.is_empty()) throw DomainError("the empty tree cannot be a child of " + category.name());
  }
  Term t;
  t.kind_ = Kind::node;
  t.symbol_ = std::move(category);
  t.children_ = std::move(children);
  return t;
}

Symbol cat(const Term& t) {
  if (!t.is_node())
    throw PartialFunctionError("cat is undefined on '" + serialize_term(t) + "'");
  return t.symbol();
}

const Term& ex(const Term& t, std::size_t i) {
  if (!t.is_node())
    throw PartialFunctionError("ex is undefined on '" + serialize_term(t) + "'");
  if (i >= t.children().size())
    throw PartialFunctionError("ex_" + std::to_string(i) + " is undefined on '" +
                               serialize_term(t) + "'");
  return t.children()[i];
}

Term cons(const Signature& sig, const Symbol& category, std::vector<Term> children) {
  if (!sig.is_nonterminal(category))
    throw ArityError("cons needs a category, got '" + category.name() + "'");
  const auto rank = static_cast<std::size_t>(sig.rank(category));
  if (children.size() != rank)
    throw ArityError("cons: " + category.name() + " has rank " + std::to_string(rank) + ", got " +
                     std::to_string(children.size()) + " children");
  return Term::node(category, std::move(children));
}

std::size_t depth(const Term& t) {
  if (!t.is_node()) return 0;
  std::size_t d = 0;
  for (const auto& c : t.children()) d = std::max(d, depth(c));
  return d + 1;
}

std::size_t node_count(const Term& t) {
  if (t.is_empty()) return 0;
  std::size_t n = 1;
  for (const auto& c : t.children()) n += node_count(c);
  return n;
}

bool has_predicted(const Term& t) {
  if (t.is_predicted()) return true;
  return std::any_of(t.children().begin(), t.children().end(), has_predicted);
}

namespace {

void collect_yield(const Term& t, Sentence& out) {
  if (t.is_leaf()) out.push_back(t.symbol());
  for (const auto& c : t.children()) collect_yield(c, out);
}

}  // namespace

Sentence leaf_yield(const Term& t) {
  Sentence out;
  collect_yield(t, out);
  return out;
}

void validate_term(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::empty:
      return;
    case Term::Kind::leaf:
      if (!sig.is_terminal(t.symbol()))
        throw InputError("'" + t.symbol().name() + "' is not a terminal");
      return;
    case Term::Kind::predicted:
      if (!sig.is_predicted(t.symbol()))
        throw InputError("'[" + t.symbol().name() + "]' is not a predicted category");
      return;
    case Term::Kind::node: {
      if (!sig.is_nonterminal(t.symbol()))
        throw InputError("'" + t.symbol().name() + "' is not a category");
      const auto rank = static_cast<std::size_t>(sig.rank(t.symbol()));
      if (t.children().size() != rank)
        throw ArityError(t.symbol().name() + " has rank " + std::to_string(rank) + " but " +
                         std::to_string(t.children().size()) + " children");
      for (const auto& c : t.children()) validate_term(c, sig);
      return;
    }
  }
}

namespace {

class TermReader {
 public:
  explicit TermReader(std::string_view text) : text_(text) {}

  Term read_all() {
    if (trimmed() == "@empty") return Term::empty();
    Term t = read_term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  std::string_view trimmed() const {
    auto s = text_;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("term syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' ||
           c == ']' || c == ',';
  }

  Symbol read_symbol() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a symbol");
    const auto name = text_.substr(start, pos_ - start);
    if (name == "@empty") fail("@empty cannot occur inside a term");
    if (!is_valid_symbol_name(name)) fail("invalid symbol '" + std::string(name) + "'");
    return Symbol(std::string(name));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term read_term() {
    if (accept('[')) {
      Symbol s = read_symbol();
      if (!accept(']')) fail("expected ']'");
      return Term::predicted(std::move(s));
    }
    Symbol s = read_symbol();
    if (!accept('(')) return Term::leaf(std::move(s));
    std::vector<Term> children;
    do {
      children.push_back(read_term());
    } while (accept(','));
    if (!accept(')')) fail("expected ')' or ','");
    return Term::node(std::move(s), std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::empty:
      out += "@empty";
      return;
    case Term::Kind::leaf:
      out += t.symbol().name();
      return;
    case Term::Kind::predicted:
      out += '[';
      out += t.symbol().name();
      out += ']';
      return;
    case Term::Kind::node:
      out += t.symbol().name();
      out += '(';
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        write_term(t.children()[i], out);
      }
      out += ')';
      return;
  }
}

}  // namespace

Term parse_term(std::string_view text) { return TermReader(text).read_all(); }

Term parse_term(std::string_view text, const Signature& sig) {
  Term t = parse_term(text);
  validate_term(t, sig);
  return t;
}

std::string serialize_term(const Term& t) {
  std::string out;
  write_term(t, out);
  return out;
}

}  // namespace fockparse
