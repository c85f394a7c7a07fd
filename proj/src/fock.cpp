#include "fockparse/fock.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fockparse/error.hpp"

namespace fockparse {

std::string Filler::text() const {
  return predicted ? "[" + symbol.name() + "]" : symbol.name();
}

std::string BasisKey::text() const {
  std::string out = filler ? filler->text() : std::string("@role");
  for (int r : path) out += " " + std::to_string(r);
  return out;
}

BasisKey BasisKey::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head;
  if (!(in >> head)) throw InputError("empty basis key");
  BasisKey k;
  if (head != "@role") {
    Filler f;
    if (head.size() >= 2 && head.front() == '[' && head.back() == ']') {
      f.predicted = true;
      head = head.substr(1, head.size() - 2);
    }
    if (!is_valid_symbol_name(head)) throw InputError("invalid filler '" + head + "'");
    f.symbol = Symbol(head);
    k.filler = std::move(f);
  }
  std::string tok;
  while (in >> tok) {
    int r = -1;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), r);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || r < 0)
      throw InputError("invalid role index '" + tok + "'");
    k.path.push_back(r);
  }
  return k;
}

FockVector::FockVector(int role_dim) : role_dim_(role_dim) {
  if (role_dim < 2) throw DomainError("role space needs at least two roles");
}

FockVector FockVector::filler(const Filler& f, int role_dim) {
  return basis(BasisKey{f, {}}, role_dim);
}

FockVector FockVector::basis(BasisKey key, int role_dim) {
  FockVector v(role_dim);
  v.add(key, 1.0);
  return v;
}

double FockVector::coefficient(const BasisKey& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0.0 : it->second;
}

std::set<Filler> FockVector::fillers() const {
  std::set<Filler> out;
  for (const auto& [k, _] : entries_) {
    if (k.filler) out.insert(*k.filler);
  }
  return out;
}

void FockVector::add(const BasisKey& key, double value) {
  for (int r : key.path) {
    if (r < 0 || r >= role_dim_)
      throw DomainError("role " + std::to_string(r) + " outside role space of dimension " +
                        std::to_string(role_dim_));
  }
  if (value == 0.0) return;
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) entries_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.role_dim_ != role_dim_) throw DomainError("role dimension mismatch in bundling");
  for (const auto& [k, c] : other.entries_) add(k, c);
  return *this;
}

FockVector operator*(double s, const FockVector& v) {
  FockVector out(v.role_dim_);
  for (const auto& [k, c] : v.entries_) out.add(k, s * c);
  return out;
}

FockVector FockVector::bind(int role) const {
  FockVector out(role_dim_);
  for (const auto& [k, c] : entries_) {
    BasisKey nk = k;
    nk.path.push_back(role);
    out.add(nk, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void embed_into(const Term& t, int m, const RolePath& outer, FockVector& out) {
  auto with = [&](std::initializer_list<int> inner) {
    RolePath p(inner);
    p.insert(p.end(), outer.begin(), outer.end());
    return p;
  };
  switch (t.kind()) {
    case Term::Kind::empty:
      out.add(BasisKey{std::nullopt, with({m})}, 1.0);
      return;
    case Term::Kind::leaf:
      out.add(BasisKey{Filler{t.symbol(), false}, outer}, 1.0);
      return;
    case Term::Kind::predicted:
      out.add(BasisKey{Filler{t.symbol(), true}, outer}, 1.0);
      return;
    case Term::Kind::node:
      out.add(BasisKey{Filler{t.symbol(), false}, with({m})}, 1.0);
      for (std::size_t i = 0; i < t.children().size(); ++i)
        embed_into(t.children()[i], m, with({static_cast<int>(i)}), out);
      return;
  }
}

using KeyList = std::vector<BasisKey>;

Term decode_keys(const KeyList& keys, const Signature& sig, int m) {
  auto fail = [&](const std::string& why) -> DomainError {
    std::string ks;
    for (const auto& k : keys) ks += (ks.empty() ? "" : ", ") + k.text();
    return DomainError("vector is not a term embedding: " + why + " {" + ks + "}");
  };
  if (keys.empty()) throw fail("missing daughter");

  // Leaf: exactly one key with an empty path.
  const auto leaf_it =
      std::find_if(keys.begin(), keys.end(), [](const BasisKey& k) { return k.path.empty(); });
  if (leaf_it != keys.end()) {
    if (keys.size() != 1) throw fail("a leaf key shares its position with other keys");
    const Filler& f = *leaf_it->filler;
    if (f.predicted) {
      if (!sig.is_predicted(f.symbol)) throw fail("unknown predicted category " + f.text());
      return Term::predicted(f.symbol);
    }
    if (!sig.is_terminal(f.symbol))
      throw fail(f.text() + " is a pure filler but not a terminal; categories embed with the "
                 "mother role");
    return Term::leaf(f.symbol);
  }

  // Node: one mother key, daughters grouped by their outermost role.
  std::optional<Filler> mother;
  std::map<int, KeyList> daughters;
  for (const auto& k : keys) {
    const int outer = k.path.back();
    if (outer == m) {
      if (k.path.size() != 1) throw fail("orphan key " + k.text() + " below a mother role");
      if (mother) throw fail("two mother keys");
      mother = k.filler;
      continue;
    }
    BasisKey inner = k;
    inner.path.pop_back();
    daughters[outer].push_back(std::move(inner));
  }
  if (!mother) throw fail("missing mother key");
  if (mother->predicted || !sig.is_nonterminal(mother->symbol))
    throw fail(mother->text() + " cannot occupy a mother role");
  const int rank = sig.rank(mother->symbol);
  std::vector<Term> children;
  for (int i = 0; i < rank; ++i) {
    auto it = daughters.find(i);
    if (it == daughters.end())
      throw fail(mother->text() + " is missing daughter " + std::to_string(i));
    children.push_back(decode_keys(it->second, sig, m));
  }
  if (static_cast<int>(daughters.size()) != rank)
    throw fail(mother->text() + " has daughters beyond its rank " + std::to_string(rank));
  return Term::node(mother->symbol, std::move(children));
}

}  // namespace

FockVector embed(const Term& t, const Signature& sig) {
  validate_term(t, sig);
  FockVector out(sig.role_dim());
  embed_into(t, sig.max_arity(), {}, out);
  return out;
}

Term decode(const FockVector& v, const Signature& sig) {
  if (v.role_dim() != sig.role_dim())
    throw DomainError("vector role dimension " + std::to_string(v.role_dim()) +
                      " does not match the signature's " + std::to_string(sig.role_dim()));
  const int m = sig.max_arity();
  KeyList keys;
  for (const auto& [k, c] : v.entries()) {
    if (c != 1.0)
      throw DomainError("vector is not a term embedding: coefficient " + std::to_string(c) +
                        " on " + k.text());
    if (!k.filler) {
      if (v.size() == 1 && k.path == RolePath{m}) return Term::empty();
      throw DomainError("vector is not a term embedding: role-only key " + k.text());
    }
    keys.push_back(k);
  }
  if (keys.empty()) throw DomainError("the zero vector is not a term embedding");
  return decode_keys(keys, sig, m);
}

namespace {

FockVector unbind(const FockVector& v, int role) {
  FockVector out(v.role_dim());
  for (const auto& [k, c] : v.entries()) {
    if (k.path.empty() || k.path.back() != role) continue;
    BasisKey nk = k;
    nk.path.pop_back();
    out.add(nk, c);
  }
  return out;
}

}  // namespace

FockVector cat_op(const FockVector& v) { return unbind(v, v.mother_role()); }

FockVector ex_op(const FockVector& v, int i) {
  if (i < 0 || i >= v.mother_role())
    throw DomainError("ex_" + std::to_string(i) + " needs a daughter role below " +
                      std::to_string(v.mother_role()));
  return unbind(v, i);
}

FockVector cons_op(const FockVector& a, const std::vector<FockVector>& children) {
  const int m = a.mother_role();
  if (static_cast<int>(children.size()) > m)
    throw DomainError("cons with " + std::to_string(children.size()) +
                      " daughters exceeds the " + std::to_string(m) + " daughter roles");
  FockVector out = a.bind(m);
  for (std::size_t i = 0; i < children.size(); ++i) out += children[i].bind(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------

FockVector word_operator(const LcParser& parser, const Symbol& a, const FockVector& v) {
  const Signature sig = signature_of(parser.grammar());
  const Term t = decode(v, sig);
  const ParserConfig next = parser.advance(parser.from_snapshot(t), a);
  return embed(snapshot(next), sig);
}

FockVector word_operator(const Grammar& g, const Symbol& a, const FockVector& v) {
  return word_operator(LcParser(g), a, v);
}

FockVector word_operator_composed(const LcParser& parser, const Symbol& a, const FockVector& v) {
  const Grammar& g = parser.grammar();
  const Signature sig = signature_of(g);
  const int rd = v.role_dim();
  const ParserConfig start = parser.from_snapshot(decode(v, sig));
  std::vector<ParserConfig> visited;
  parser.advance(start, a, &visited);

  // Vector stack mirroring the parser stack. For partial items `slot` is the
  // next daughter to fill and `arity` the item's rank.
  struct Item {
    FockVector vec;
    bool partial = false;
    int slot = 0;
    int arity = 0;
  };
  std::vector<Item> stack;
  FockVector current = v;
  for (const auto& it : start.stack) {
    if (const auto* p = std::get_if<Partial>(&it)) {
      const int slot = static_cast<int>(p->filled.size());
      const int arity = slot + static_cast<int>(p->pending.size());
      stack.push_back({current, true, slot, arity});
      current = ex_op(current, slot);
    } else {
      stack.push_back({current, false, 0, 0});
    }
  }

  auto rebuild = [](const Item& p, const FockVector& daughter) {
    std::vector<FockVector> kids;
    for (int i = 0; i < p.arity; ++i) kids.push_back(i == p.slot ? daughter : ex_op(p.vec, i));
    return cons_op(cat_op(p.vec), kids);
  };

  for (const auto& c : visited) {
    switch (c.last_op.mode) {
      case Mode::shift:
        stack.push_back({FockVector::filler(a, rd), false, 0, 0});
        break;
      case Mode::project: {
        const Rule& r = g.rules().at(c.last_op.rule);
        FockVector u = stack.back().vec;
        stack.pop_back();
        std::vector<FockVector> kids{u};
        for (std::size_t i = 1; i < r.rhs.size(); ++i)
          kids.push_back(FockVector::filler(Filler{r.rhs[i], true}, rd));
        const int arity = static_cast<int>(r.rhs.size());
        stack.push_back({cons_op(FockVector::filler(r.lhs, rd), kids), arity > 1, 1, arity});
        break;
      }
      case Mode::complete: {
        FockVector u = stack.back().vec;
        stack.pop_back();
        Item& p = stack.back();
        p.vec = rebuild(p, u);
        if (++p.slot == p.arity) p.partial = false;
        break;
      }
      default:
        throw std::logic_error("unexpected mode while replaying a word transition");
    }
  }
  for (auto i = stack.size(); i-- > 1;) stack[i - 1].vec = rebuild(stack[i - 1], stack[i].vec);
  return stack.front().vec;
}

// ---------------------------------------------------------------------------

std::uint64_t fock_dim(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (m < 2) throw DomainError("fock_dim needs at least two roles");
  if (n < 1) throw DomainError("fock_dim needs at least one filler");
  using Wide = unsigned __int128;
  constexpr Wide limit = static_cast<Wide>(UINT64_MAX);
  Wide power = 1;
  for (std::uint64_t i = 0; i <= p; ++i) {
    power *= m;
    if (power > limit) throw DomainError("fock_dim overflows 64 bits");
  }
  const Wide q = static_cast<Wide>(n) * ((power - 1) / (m - 1)) + m;
  if (q > limit) throw DomainError("fock_dim overflows 64 bits");
  return static_cast<std::uint64_t>(q);
}

// ---------------------------------------------------------------------------

namespace {

std::string format_coefficient(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

std::string serialize_fock(const FockVector& v) {
  std::vector<std::pair<std::string, double>> lines;
  for (const auto& [k, c] : v.entries()) lines.emplace_back(k.text(), c);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [key, c] : lines) out += format_coefficient(c) + "\t" + key + "\n";
  return out;
}

FockVector parse_fock(std::string_view text, int role_dim) {
  FockVector v(role_dim);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw SyntaxError(line_no, "expected '<coefficient>\\t<key>'");
    double c = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, c);
    if (ec != std::errc() || ptr != line.data() + tab)
      throw SyntaxError(line_no, "invalid coefficient '" + line.substr(0, tab) + "'");
    BasisKey k;
    try {
      k = BasisKey::parse(std::string_view(line).substr(tab + 1));
    } catch (const InputError& e) {
      throw SyntaxError(line_no, e.what());
    }
    if (v.coefficient(k) != 0.0) throw SyntaxError(line_no, "duplicate key " + k.text());
    try {
      v.add(k, c);
    } catch (const DomainError& e) {
      throw SyntaxError(line_no, e.what());
    }
  }
  return v;
}

int infer_role_dim(std::string_view text) {
  int max_role = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::istringstream keys(line.substr(tab + 1));
    std::string tok;
    keys >> tok;
    while (keys >> tok) {
      int r = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), r);
      if (ec == std::errc()) max_role = std::max(max_role, r);
    }
  }
  return max_role + 1;
}

}  // namespace fockparse
