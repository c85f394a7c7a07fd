#include "fockparse/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

#include "fockparse/error.hpp"

namespace fockparse {

std::string to_string(const Rule& r) {
  std::string out = r.lhs.name() + " ->";
  for (const auto& s : r.rhs) out += " " + s.name();
  return out;
}

Grammar::Grammar(std::set<Symbol> terminals, std::set<Symbol> nonterminals, Symbol start,
                 std::vector<Rule> rules)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      start_(std::move(start)),
      rules_(std::move(rules)) {
  for (const auto& t : terminals_) {
    if (nonterminals_.contains(t))
      throw InputError("symbol '" + t.name() + "' is both terminal and nonterminal");
  }
  if (!nonterminals_.contains(start_))
    throw InputError("start symbol '" + start_.name() + "' is not a nonterminal");
  std::set<Rule> seen;
  for (const auto& r : rules_) {
    if (!nonterminals_.contains(r.lhs))
      throw InputError("rule '" + to_string(r) + "' has a terminal left-hand side");
    for (const auto& s : r.rhs) {
      if (!terminals_.contains(s) && !nonterminals_.contains(s))
        throw InputError("rule '" + to_string(r) + "' uses undeclared symbol '" + s.name() + "'");
    }
    if (!seen.insert(r).second) throw InputError("duplicate rule '" + to_string(r) + "'");
  }
}

Grammar Grammar::from_rules(std::vector<Rule> rules, std::optional<Symbol> start) {
  if (rules.empty()) throw InputError("grammar has no rules");
  std::vector<Rule> unique;
  std::set<Rule> seen;
  for (auto& r : rules) {
    if (seen.insert(r).second) unique.push_back(std::move(r));
  }
  std::set<Symbol> nonterminals;
  for (const auto& r : unique) nonterminals.insert(r.lhs);
  std::set<Symbol> terminals;
  for (const auto& r : unique) {
    for (const auto& s : r.rhs) {
      if (!nonterminals.contains(s)) terminals.insert(s);
    }
  }
  Symbol s = start ? *start : unique.front().lhs;
  if (!nonterminals.contains(s))
    throw InputError("start symbol '" + s.name() + "' is never defined");
  return Grammar(std::move(terminals), std::move(nonterminals), std::move(s), std::move(unique));
}

std::size_t Grammar::max_rule_length() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.rhs.size());
  return m;
}

// ---------------------------------------------------------------------------
// Grammar files

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Symbol symbol_at(std::size_t line, const std::string& name) {
  if (!is_valid_symbol_name(name)) throw SyntaxError(line, "invalid symbol '" + name + "'");
  return Symbol(name);
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::optional<Symbol> start;
  std::vector<Rule> rules;
  std::set<Rule> seen;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("start:")) {
      if (seen_content) throw SyntaxError(line_no, "'start:' must precede all rules");
      const auto names = split_ws(line.substr(6));
      if (names.size() != 1) throw SyntaxError(line_no, "'start:' takes exactly one symbol");
      start = symbol_at(line_no, names.front());
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw SyntaxError(line_no, "expected '->'");
    const auto lhs_names = split_ws(line.substr(0, arrow));
    if (lhs_names.size() != 1)
      throw SyntaxError(line_no, "left-hand side must be exactly one symbol");
    const Symbol lhs = symbol_at(line_no, lhs_names.front());
    auto body = line.substr(arrow + 2);
    while (true) {
      const auto bar = body.find('|');
      const auto alt = body.substr(0, bar);
      Rule r{lhs, {}};
      for (const auto& name : split_ws(alt)) r.rhs.push_back(symbol_at(line_no, name));
      if (!seen.insert(r).second) throw SyntaxError(line_no, "duplicate rule '" + to_string(r) + "'");
      rules.push_back(std::move(r));
      if (bar == std::string_view::npos) break;
      body = body.substr(bar + 1);
    }
  }
  if (rules.empty()) throw SyntaxError(line_no, "empty rule set");
  std::set<Symbol> lhs;
  for (const auto& r : rules) lhs.insert(r.lhs);
  if (start && !lhs.contains(*start))
    throw SyntaxError(1, "start symbol '" + start->name() + "' is never defined");
  return Grammar::from_rules(std::move(rules), start);
}

std::string serialize_grammar(const Grammar& g) {
  std::string out;
  if (g.rules().empty() || g.rules().front().lhs != g.start())
    out += "start: " + g.start().name() + "\n";
  for (const auto& r : g.rules()) out += to_string(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

FormReport check_form(const Grammar& g) {
  FormReport rep;
  rep.is_cnf = rep.is_crf = rep.is_tnf = true;
  auto violate = [&](const Rule& r, bool& flag, std::string reason) {
    flag = false;
    rep.violations.push_back({r, std::move(reason)});
  };
  const auto& start = g.start();
  std::map<Symbol, const Rule*> first_rule_of;
  for (const auto& r : g.rules()) {
    const auto n = r.rhs.size();
    const bool binary_nt = n == 2 && g.is_nonterminal(r.rhs[0]) && g.is_nonterminal(r.rhs[1]);
    const bool lexical = n == 1 && g.is_terminal(r.rhs[0]);

    if (!binary_nt && !lexical)
      violate(r, rep.is_crf, "crf: rule is neither A -> B C nor A -> a");

    if (n == 0) {
      if (r.lhs != start) violate(r, rep.is_cnf, "cnf: only the start symbol may derive epsilon");
    } else if (binary_nt) {
      if (r.rhs[0] == start || r.rhs[1] == start)
        violate(r, rep.is_cnf, "cnf: start symbol " + start.name() + " on right-hand side");
    } else if (!lexical) {
      violate(r, rep.is_cnf, "cnf: rule is neither A -> B C, A -> a nor S -> epsilon");
    }

    if (n == 0) {
      violate(r, rep.is_tnf, "tnf: empty right-hand side");
      continue;
    }
    auto [it, inserted] = first_rule_of.try_emplace(r.lhs, &r);
    if (!inserted && it->second->rhs.size() != n) {
      violate(r, rep.is_tnf,
              "tnf: " + r.lhs.name() + " has right-hand sides of lengths " +
                  std::to_string(it->second->rhs.size()) + " and " + std::to_string(n));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Standard reductions

std::set<Symbol> nullable_symbols(const Grammar& g) {
  std::set<Symbol> nullable;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules()) {
      if (nullable.contains(r.lhs)) continue;
      if (std::all_of(r.rhs.begin(), r.rhs.end(),
                      [&](const Symbol& s) { return nullable.contains(s); })) {
        nullable.insert(r.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

bool derives_empty(const Grammar& g) { return nullable_symbols(g).contains(g.start()); }

Grammar remove_useless(const Grammar& g) {
  std::set<Symbol> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules()) {
      if (productive.contains(r.lhs)) continue;
      if (std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
            return g.is_terminal(s) || productive.contains(s);
          })) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  if (!productive.contains(g.start()))
    throw DomainError("start symbol " + g.start().name() + " generates no terminal string");

  std::vector<Rule> kept;
  for (const auto& r : g.rules()) {
    if (!productive.contains(r.lhs)) continue;
    if (std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
          return g.is_terminal(s) || productive.contains(s);
        }))
      kept.push_back(r);
  }

  std::set<Symbol> reachable{g.start()};
  std::vector<Symbol> work{g.start()};
  while (!work.empty()) {
    const Symbol a = work.back();
    work.pop_back();
    for (const auto& r : kept) {
      if (r.lhs != a) continue;
      for (const auto& s : r.rhs) {
        if (g.is_nonterminal(s) && reachable.insert(s).second) work.push_back(s);
      }
    }
  }
  std::vector<Rule> out;
  for (auto& r : kept) {
    if (reachable.contains(r.lhs)) out.push_back(std::move(r));
  }
  return Grammar::from_rules(std::move(out), g.start());
}

namespace {

// Returns `base` if unused, otherwise `base_<k>` for the smallest free k.
Symbol fresh_symbol(const std::string& base, std::set<Symbol>& used) {
  Symbol s(base);
  for (int k = 1; used.contains(s); ++k) s = Symbol(base + "_" + std::to_string(k));
  used.insert(s);
  return s;
}

std::set<Symbol> all_symbols(const Grammar& g) {
  std::set<Symbol> used = g.terminals();
  used.insert(g.nonterminals().begin(), g.nonterminals().end());
  return used;
}

std::vector<Rule> eliminate_epsilon(const Grammar& g) {
  const auto nullable = nullable_symbols(g);
  std::vector<Rule> out;
  for (const auto& r : g.rules()) {
    std::vector<std::size_t> optional_pos;
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
      if (nullable.contains(r.rhs[i])) optional_pos.push_back(i);
    }
    const std::size_t variants = std::size_t{1} << optional_pos.size();
    // Mask 0 keeps every symbol, so the original rule comes first.
    for (std::size_t mask = 0; mask < variants; ++mask) {
      Rule v{r.lhs, {}};
      std::size_t k = 0;
      for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (k < optional_pos.size() && optional_pos[k] == i) {
          const bool drop = (mask >> k) & 1U;
          ++k;
          if (drop) continue;
        }
        v.rhs.push_back(r.rhs[i]);
      }
      if (!v.rhs.empty()) out.push_back(std::move(v));
    }
  }
  return out;
}

bool is_unit(const Rule& r, const std::set<Symbol>& nonterminals) {
  return r.rhs.size() == 1 && nonterminals.contains(r.rhs[0]);
}

std::vector<Rule> eliminate_units(const std::vector<Rule>& rules,
                                  const std::set<Symbol>& nonterminals) {
  std::map<Symbol, std::set<Symbol>> closure;
  for (const auto& a : nonterminals) {
    auto& c = closure[a];
    c.insert(a);
    std::vector<Symbol> work{a};
    while (!work.empty()) {
      const Symbol b = work.back();
      work.pop_back();
      for (const auto& r : rules) {
        if (r.lhs == b && is_unit(r, nonterminals) && c.insert(r.rhs[0]).second)
          work.push_back(r.rhs[0]);
      }
    }
  }
  std::vector<Rule> out;
  for (const auto& r : rules) {
    if (!is_unit(r, nonterminals)) {
      out.push_back(r);
      continue;
    }
    const auto& reach = closure.at(r.rhs[0]);
    for (const auto& s : rules) {
      if (!is_unit(s, nonterminals) && reach.contains(s.lhs)) out.push_back({r.lhs, s.rhs});
    }
  }
  return out;
}

}  // namespace

Grammar to_crf(const Grammar& g) {
  if (derives_empty(g))
    throw DomainError("grammar derives the empty string; Chomsky reduced form excludes it");
  std::set<Symbol> used = all_symbols(g);

  auto rules = eliminate_epsilon(g);
  rules = eliminate_units(rules, g.nonterminals());

  // Terminal lifting inside right-hand sides of length >= 2.
  std::map<Symbol, Symbol> lifted;
  std::vector<Rule> lift_rules;
  for (auto& r : rules) {
    if (r.rhs.size() < 2) continue;
    for (auto& s : r.rhs) {
      if (!g.is_terminal(s)) continue;
      auto it = lifted.find(s);
      if (it == lifted.end()) {
        it = lifted.emplace(s, fresh_symbol("T__" + s.name(), used)).first;
        lift_rules.push_back({it->second, {s}});
      }
      s = it->second;
    }
  }

  // Left-to-right binarization.
  std::vector<Rule> binary;
  int bin_counter = 0;
  for (auto& r : rules) {
    if (r.rhs.size() <= 2) {
      binary.push_back(std::move(r));
      continue;
    }
    Symbol lhs = r.lhs;
    for (std::size_t i = 0; i + 2 < r.rhs.size(); ++i) {
      Symbol next = fresh_symbol("X__bin" + std::to_string(++bin_counter), used);
      binary.push_back({lhs, {r.rhs[i], next}});
      lhs = next;
    }
    binary.push_back({lhs, {r.rhs[r.rhs.size() - 2], r.rhs.back()}});
  }
  binary.insert(binary.end(), lift_rules.begin(), lift_rules.end());

  if (std::none_of(binary.begin(), binary.end(),
                   [&](const Rule& r) { return r.lhs == g.start(); }))
    throw DomainError("start symbol " + g.start().name() + " generates no terminal string");
  return remove_useless(Grammar::from_rules(std::move(binary), g.start()));
}

Grammar crf_to_cnf(const Grammar& g) {
  if (!check_form(g).is_crf) throw DomainError("crf_to_cnf requires Chomsky reduced form");
  const auto& s = g.start();
  const bool on_rhs = std::any_of(g.rules().begin(), g.rules().end(), [&](const Rule& r) {
    return std::find(r.rhs.begin(), r.rhs.end(), s) != r.rhs.end();
  });
  if (!on_rhs) return g;
  std::set<Symbol> used = all_symbols(g);
  const Symbol s0 = fresh_symbol(s.name() + "__0", used);
  std::vector<Rule> rules;
  for (const auto& r : g.rules()) {
    if (r.lhs == s) rules.push_back({s0, r.rhs});
  }
  rules.insert(rules.end(), g.rules().begin(), g.rules().end());
  return Grammar::from_rules(std::move(rules), s0);
}

TnfConstruction tnf_construction(const Grammar& crf) {
  if (!check_form(crf).is_crf)
    throw DomainError("the term normal form construction requires Chomsky reduced form");

  std::set<Symbol> has_binary, has_unary;
  for (const auto& r : crf.rules()) (r.rhs.size() == 2 ? has_binary : has_unary).insert(r.lhs);
  std::vector<Symbol> conflict;
  for (const auto& r : crf.rules()) {
    if (has_binary.contains(r.lhs) && has_unary.contains(r.lhs) &&
        std::find(conflict.begin(), conflict.end(), r.lhs) == conflict.end())
      conflict.push_back(r.lhs);
  }
  if (conflict.empty()) return {crf, {}, false};

  std::set<Symbol> used = all_symbols(crf);
  struct Split {
    Symbol binary, unary;
  };
  std::map<Symbol, Split> split;
  for (const auto& a : conflict) {
    Symbol b = fresh_symbol(a.name() + "__2", used);
    Symbol u = fresh_symbol(a.name() + "__1", used);
    split.emplace(a, Split{std::move(b), std::move(u)});
  }
  auto variants = [&](const Symbol& s) -> std::vector<Symbol> {
    auto it = split.find(s);
    if (it == split.end()) return {s};
    return {it->second.binary, it->second.unary};
  };

  std::vector<Rule> rules;
  for (const auto& r : crf.rules()) {
    // Step 1: rename the left-hand side of split nonterminals.
    Symbol lhs = r.lhs;
    if (auto it = split.find(lhs); it != split.end())
      lhs = r.rhs.size() == 2 ? it->second.binary : it->second.unary;
    if (r.rhs.size() == 1) {
      rules.push_back({lhs, r.rhs});
      continue;
    }
    // Steps 2 and 3: first and second right-hand-side positions.
    for (const auto& first : variants(r.rhs[0])) {
      for (const auto& second : variants(r.rhs[1])) rules.push_back({lhs, {first, second}});
    }
  }

  Symbol start = crf.start();
  bool added_start = false;
  if (auto it = split.find(crf.start()); it != split.end()) {
    // Step 4.
    start = fresh_symbol(crf.start().name() + "__0", used);
    rules.push_back({start, {it->second.unary}});
    rules.push_back({start, {it->second.binary}});
    added_start = true;
  }
  // Step 5: the split nonterminals no longer occur in any rule.
  Grammar out = remove_useless(Grammar::from_rules(std::move(rules), start));
  return {std::move(out), std::move(conflict), added_start};
}

Grammar to_tnf(const Grammar& g) {
  if (derives_empty(g))
    throw DomainError("grammar derives the empty string; term normal form excludes it");
  if (check_form(g).is_tnf) {
    remove_useless(g);  // rejects an empty language
    return g;
  }
  return tnf_construction(to_crf(g)).grammar;
}

// ---------------------------------------------------------------------------
// Language enumeration
//
// sets[A][n] holds the strings of length n derivable from A. Lengths are
// processed in increasing order; within one length the rule set is iterated
// to a fixpoint, which handles unit and nullable dependencies.

namespace {

using Word = std::string;  // one char per terminal index

class LanguageTable {
 public:
  LanguageTable(const Grammar& g, std::size_t max_len) : g_(g), max_len_(max_len) {
    if (g.terminals().size() > 255) throw DomainError("enumeration supports at most 255 terminals");
    char code = 1;
    for (const auto& t : g.terminals()) {
      code_.emplace(t, code);
      decode_.push_back(t);
      ++code;
    }
    for (const auto& a : g.nonterminals()) sets_[a].resize(max_len + 1);
    for (std::size_t n = 0; n <= max_len; ++n) fill_length(n);
  }

  std::set<Sentence> sentences() const {
    std::set<Sentence> out;
    for (const auto& bucket : sets_.at(g_.start())) {
      for (const auto& w : bucket) {
        Sentence s;
        for (char c : w) s.push_back(decode_[static_cast<unsigned char>(c) - 1]);
        out.insert(std::move(s));
      }
    }
    return out;
  }

 private:
  void fill_length(std::size_t n) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : g_.rules()) {
        std::vector<Word> found;
        Word prefix;
        combine(r, 0, n, prefix, found);
        auto& bucket = sets_[r.lhs][n];
        for (auto& w : found) changed |= bucket.insert(std::move(w)).second;
      }
    }
  }

  void combine(const Rule& r, std::size_t pos, std::size_t remaining, Word& prefix,
               std::vector<Word>& found) const {
    if (pos == r.rhs.size()) {
      if (remaining == 0) found.push_back(prefix);
      return;
    }
    const auto& s = r.rhs[pos];
    if (g_.is_terminal(s)) {
      if (remaining == 0) return;
      prefix.push_back(code_.at(s));
      combine(r, pos + 1, remaining - 1, prefix, found);
      prefix.pop_back();
      return;
    }
    const auto& buckets = sets_.at(s);
    for (std::size_t len = 0; len <= remaining; ++len) {
      for (const auto& w : buckets[len]) {
        const auto mark = prefix.size();
        prefix += w;
        combine(r, pos + 1, remaining - len, prefix, found);
        prefix.resize(mark);
      }
    }
  }

  const Grammar& g_;
  std::size_t max_len_;
  std::map<Symbol, char> code_;
  std::vector<Symbol> decode_;
  std::map<Symbol, std::vector<std::unordered_set<Word>>> sets_;
};

}  // namespace

std::set<Sentence> enumerate_language(const Grammar& g, std::size_t max_len) {
  if (max_len > kMaxEnumerationLength)
    throw DomainError("max_len " + std::to_string(max_len) + " exceeds " +
                      std::to_string(kMaxEnumerationLength));
  return LanguageTable(g, max_len).sentences();
}

// ---------------------------------------------------------------------------

Signature signature_of(const Grammar& g) {
  const auto report = check_form(g);
  if (!report.is_tnf) {
    std::string reason;
    for (const auto& v : report.violations) {
      if (v.reason.starts_with("tnf:")) {
        reason = v.reason;
        break;
      }
    }
    throw DomainError("signature_of requires term normal form (" + reason + ")");
  }
  std::map<Symbol, int> ranks;
  std::set<Symbol> predicted{g.start()};
  for (const auto& r : g.rules()) {
    ranks[r.lhs] = static_cast<int>(r.rhs.size());
    for (std::size_t i = 1; i < r.rhs.size(); ++i) predicted.insert(r.rhs[i]);
  }
  return Signature(g.terminals(), std::move(ranks), std::move(predicted));
}

}  // namespace fockparse
