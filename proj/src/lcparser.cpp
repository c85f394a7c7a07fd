#include "fockparse/lcparser.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockparse/error.hpp"

namespace fockparse {

namespace {

// Symbol an item offers as left corner: the word of a leaf, else the category.
const Symbol& head_symbol(const StackItem& item) {
  if (const auto* c = std::get_if<Completed>(&item)) return c->term.symbol();
  return std::get<Partial>(item).category;
}

Term item_term(const StackItem& item) {
  if (const auto* c = std::get_if<Completed>(&item)) return c->term;
  const auto& p = std::get<Partial>(item);
  std::vector<Term> children = p.filled;
  for (const auto& s : p.pending) children.push_back(Term::predicted(s));
  return Term::node(p.category, std::move(children));
}

std::string render_item(const StackItem& item) {
  if (const auto* c = std::get_if<Completed>(&item)) return c->term.symbol().name();
  const auto& p = std::get<Partial>(item);
  std::string out;
  for (const auto& s : p.pending) out += "[" + s.name() + "] ";
  return out + p.category.name();
}

std::string render_input(const Sentence& input) {
  return input.empty() ? std::string("ε") : join_sentence(input);
}

}  // namespace

std::string to_string(const Operation& op) {
  switch (op.mode) {
    case Mode::init:
      return "init";
    case Mode::shift:
      return "shift";
    case Mode::project:
      return "project (" + std::to_string(op.rule + 1) + ")";
    case Mode::complete:
      return "complete";
    case Mode::accept:
      return "accept";
  }
  return "?";
}

std::string render_stack(const ParserConfig& c) {
  if (c.stack.empty()) return "ε";
  std::string out;
  for (auto it = c.stack.rbegin(); it != c.stack.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += render_item(*it);
  }
  return out;
}

std::string render_trace(const Trace& t) {
  std::string out;
  const auto& cs = t.configs;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string op;
    if (i + 1 < cs.size()) {
      op = to_string(cs[i + 1].last_op);
    } else if (!t.accepted) {
      op = "fail";
    } else {
      break;
    }
    out += std::to_string(i) + "\t" + render_stack(cs[i]) + "\t" + render_input(cs[i].input) +
           "\t" + op + "\n";
  }
  return out;
}

Term snapshot(const ParserConfig& c) {
  if (c.stack.empty()) return Term::empty();
  Term acc = item_term(c.stack.back());
  for (auto it = std::next(c.stack.rbegin()); it != c.stack.rend(); ++it) {
    const auto* p = std::get_if<Partial>(&*it);
    if (p == nullptr) throw std::logic_error("completed item below the stack top cannot fold");
    Term below = item_term(*it);
    auto children = below.children();
    children[p->filled.size()] = std::move(acc);
    acc = Term::node(p->category, std::move(children));
  }
  return acc;
}

// ---------------------------------------------------------------------------

LcParser::LcParser(Grammar g) : g_(std::move(g)) {
  const auto report = check_form(g_);
  if (!report.is_tnf) throw DomainError("the left-corner parser requires term normal form");
  for (std::size_t i = 0; i < g_.rules().size(); ++i)
    by_left_corner_[g_.rules()[i].rhs.front()].push_back(i);

  std::set<Symbol> symbols = g_.terminals();
  symbols.insert(g_.nonterminals().begin(), g_.nonterminals().end());
  for (const auto& b : symbols) {
    auto& lc = left_corners_[b];
    lc.insert(b);
    std::vector<Symbol> work{b};
    while (!work.empty()) {
      const Symbol a = work.back();
      work.pop_back();
      for (const auto& r : g_.rules()) {
        if (r.lhs == a && lc.insert(r.rhs.front()).second) work.push_back(r.rhs.front());
      }
    }
  }
}

ParserConfig LcParser::initial(Sentence input) const {
  ParserConfig c;
  c.input = std::move(input);
  return c;
}

std::size_t LcParser::step_budget(std::size_t sentence_length) const {
  return 10 * g_.rules().size() * (sentence_length + 1);
}

std::optional<Operation> LcParser::next_operation(const ParserConfig& c) const {
  if (c.accepted) return std::nullopt;
  if (!c.stack.empty()) {
    if (const auto* top = std::get_if<Completed>(&c.stack.back())) {
      const Symbol& h = top->term.symbol();
      if (c.stack.size() >= 2) {
        const auto* below = std::get_if<Partial>(&c.stack[c.stack.size() - 2]);
        if (below != nullptr && below->pending.front() == h) return Operation{Mode::complete, 0};
      }
      if (auto it = by_left_corner_.find(h); it != by_left_corner_.end()) {
        if (it->second.size() > 1) {
          std::string msg = "left corner " + h.name() + " is shared by rules";
          for (auto i : it->second)
            msg += " (" + std::to_string(i + 1) + ") " + to_string(g_.rules()[i]) + ";";
          msg.pop_back();
          throw NondeterminismError(msg);
        }
        return Operation{Mode::project, it->second.front()};
      }
      if (c.input.empty() && c.stack.size() == 1 && top->term.is_node() && h == g_.start())
        return Operation{Mode::accept, 0};
      return std::nullopt;
    }
  }
  if (!c.input.empty()) return Operation{Mode::shift, 0};
  return std::nullopt;
}

ParserConfig LcParser::apply(const ParserConfig& c, const Operation& op) const {
  ParserConfig n = c;
  n.step = c.step + 1;
  n.last_op = op;
  switch (op.mode) {
    case Mode::init:
      throw std::logic_error("init is not an applicable operation");
    case Mode::shift:
      if (n.input.empty()) throw std::logic_error("shift on empty input");
      n.stack.push_back(Completed{Term::leaf(n.input.front())});
      n.input.erase(n.input.begin());
      break;
    case Mode::project: {
      const Rule& r = g_.rules().at(op.rule);
      Term u = std::get<Completed>(n.stack.back()).term;
      n.stack.pop_back();
      if (r.rhs.size() == 1) {
        n.stack.push_back(Completed{Term::node(r.lhs, {std::move(u)})});
      } else {
        n.stack.push_back(Partial{r.lhs, {std::move(u)}, {r.rhs.begin() + 1, r.rhs.end()}});
      }
      break;
    }
    case Mode::complete: {
      Term u = std::get<Completed>(n.stack.back()).term;
      n.stack.pop_back();
      auto& p = std::get<Partial>(n.stack.back());
      p.filled.push_back(std::move(u));
      p.pending.erase(p.pending.begin());
      if (p.pending.empty()) {
        Term done = Term::node(p.category, std::move(p.filled));
        n.stack.back() = Completed{std::move(done)};
      }
      break;
    }
    case Mode::accept:
      n.accepted = true;
      break;
  }
  return n;
}

std::optional<std::string> LcParser::viability_error(const ParserConfig& c) const {
  if (c.stack.empty() || c.accepted) return std::nullopt;
  const Symbol& h = head_symbol(c.stack.back());
  Symbol goal = g_.start();
  if (c.stack.size() >= 2) {
    const auto* below = std::get_if<Partial>(&c.stack[c.stack.size() - 2]);
    if (below == nullptr) return "completed item " + render_item(c.stack[c.stack.size() - 2]) +
                                 " below the top can never be attached";
    goal = below->pending.front();
  }
  const auto it = left_corners_.find(goal);
  if (it == left_corners_.end() || !it->second.contains(h))
    return h.name() + " cannot begin a " + goal.name() + (c.stack.size() >= 2 ? "" : " sentence");
  return std::nullopt;
}

void LcParser::fail(const ParserConfig& c, const std::string& why) const {
  throw ParseFailure("parse failure at step " + std::to_string(c.step) + ": " + why +
                     " [stack: " + render_stack(c) + " | input: " + render_input(c.input) + "]");
}

ParserConfig LcParser::step(const ParserConfig& c) const {
  const auto op = next_operation(c);
  if (!op) fail(c, "dead configuration, no mode applies");
  ParserConfig n = apply(c, *op);
  if (auto err = viability_error(n)) fail(n, *err);
  return n;
}

Trace LcParser::parse(const Sentence& sentence) const {
  for (const auto& w : sentence) {
    if (!g_.is_terminal(w)) throw DomainError("unknown word '" + w.name() + "'");
  }
  Trace t;
  t.configs.push_back(initial(sentence));
  const std::size_t budget = step_budget(sentence.size());
  std::size_t since_shift = 0;
  while (true) {
    const ParserConfig& c = t.configs.back();
    const auto op = next_operation(c);
    if (!op) {
      t.failure = "parse failure at step " + std::to_string(c.step) +
                  ": dead configuration, no mode applies [stack: " + render_stack(c) +
                  " | input: " + render_input(c.input) + "]";
      return t;
    }
    since_shift = op->mode == Mode::shift ? 0 : since_shift + 1;
    if (since_shift > budget) {
      t.failure = "parse failure at step " + std::to_string(c.step) + ": step budget of " +
                  std::to_string(budget) + " exhausted (left-corner cycle)";
      return t;
    }
    t.configs.push_back(apply(c, *op));
    if (op->mode == Mode::accept) {
      t.accepted = true;
      return t;
    }
    if (auto err = viability_error(t.configs.back())) {
      const auto& n = t.configs.back();
      t.failure = "parse failure at step " + std::to_string(n.step) + ": " + *err + " [stack: " +
                  render_stack(n) + " | input: " + render_input(n.input) + "]";
      return t;
    }
  }
}

ParserConfig LcParser::quiesce(ParserConfig c, std::size_t budget,
                               std::vector<ParserConfig>* visited) const {
  for (std::size_t n = 0;; ++n) {
    const auto op = next_operation(c);
    if (!op || op->mode == Mode::shift || op->mode == Mode::accept) return c;
    if (n >= budget)
      fail(c, "step budget of " + std::to_string(budget) + " exhausted (left-corner cycle)");
    c = apply(c, *op);
    if (visited != nullptr) visited->push_back(c);
    if (auto err = viability_error(c)) fail(c, *err);
  }
}

ParserConfig LcParser::advance(const ParserConfig& c, const Symbol& word,
                               std::vector<ParserConfig>* visited) const {
  if (!g_.is_terminal(word)) throw DomainError("unknown word '" + word.name() + "'");
  if (!c.stack.empty() && std::holds_alternative<Completed>(c.stack.back()))
    fail(c, "no predicted slot left for '" + word.name() + "'");
  ParserConfig in = c;
  in.input.insert(in.input.begin(), word);
  ParserConfig n = apply(in, Operation{Mode::shift, 0});
  if (visited != nullptr) visited->push_back(n);
  if (auto err = viability_error(n)) fail(n, *err);
  n = quiesce(std::move(n), step_budget(1), visited);
  if (!n.stack.empty() && std::holds_alternative<Completed>(n.stack.back())) {
    const auto& top = std::get<Completed>(n.stack.back()).term;
    if (n.stack.size() != 1 || !top.is_node() || top.symbol() != g_.start())
      fail(n, "dead configuration, no mode applies");
  }
  return n;
}

InteractiveParse LcParser::interactive(const Sentence& sentence) const {
  InteractiveParse out;
  const Trace t = parse(sentence);
  for (std::size_t i = 0; i + 1 < t.configs.size(); ++i) {
    const Mode next = t.configs[i + 1].last_op.mode;
    if (next == Mode::shift || next == Mode::accept) out.states.push_back(snapshot(t.configs[i]));
  }
  out.accepted = t.accepted;
  out.failure = t.failure;
  if (!t.accepted && out.states.empty()) out.states.push_back(Term::empty());
  return out;
}

ParserConfig LcParser::from_snapshot(const Term& t, Sentence input) const {
  ParserConfig c;
  c.input = std::move(input);
  if (t.is_empty()) return c;

  auto not_a_state = [&](const std::string& why) -> DomainError {
    return DomainError("'" + serialize_term(t) + "' is not a parser state: " + why);
  };

  const Term* node = &t;
  while (true) {
    if (!has_predicted(*node)) {
      if (!node->is_node() && c.stack.empty()) throw not_a_state("a bare leaf is never a state");
      c.stack.push_back(Completed{*node});
      break;
    }
    if (!node->is_node()) throw not_a_state("a predicted category cannot head a state");
    const auto& kids = node->children();
    std::size_t slot = 0;
    while (slot < kids.size() && !has_predicted(kids[slot])) ++slot;
    if (slot == 0) throw not_a_state("the left corner of " + node->symbol().name() + " is open");

    const Symbol& corner = kids[0].symbol();
    const Rule* rule = nullptr;
    if (auto it = by_left_corner_.find(corner); it != by_left_corner_.end()) {
      for (auto i : it->second) {
        const Rule& r = g_.rules()[i];
        if (r.lhs == node->symbol() && r.rhs.size() == kids.size()) rule = &r;
      }
    }
    if (rule == nullptr)
      throw not_a_state("no rule " + node->symbol().name() + " -> " + corner.name() + " ...");
    for (std::size_t j = 0; j < slot; ++j) {
      if (kids[j].is_predicted() || kids[j].symbol() != rule->rhs[j])
        throw not_a_state("daughter " + std::to_string(j) + " of " + node->symbol().name() +
                          " does not match " + to_string(*rule));
    }
    for (std::size_t j = slot + 1; j < kids.size(); ++j) {
      if (!kids[j].is_predicted() || kids[j].symbol() != rule->rhs[j])
        throw not_a_state("daughter " + std::to_string(j) + " of " + node->symbol().name() +
                          " should be [" + rule->rhs[j].name() + "]");
    }
    c.stack.push_back(Partial{node->symbol(),
                              {kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(slot)},
                              {rule->rhs.begin() + static_cast<std::ptrdiff_t>(slot), rule->rhs.end()}});
    const Term& open = kids[slot];
    if (open.is_predicted()) {
      if (open.symbol() != rule->rhs[slot])
        throw not_a_state("slot " + std::to_string(slot) + " of " + node->symbol().name() +
                          " should be [" + rule->rhs[slot].name() + "]");
      break;
    }
    node = &open;
  }
  if (auto err = viability_error(c)) throw not_a_state(*err);
  if (auto op = next_operation(c); op && (op->mode == Mode::project || op->mode == Mode::complete))
    throw not_a_state("the parser would still " + to_string(*op));
  return c;
}

ParserConfig lc_step(const Grammar& g, const ParserConfig& c) { return LcParser(g).step(c); }

Trace lc_parse(const Grammar& g, const Sentence& sentence) { return LcParser(g).parse(sentence); }

InteractiveParse interactive_parse(const Grammar& g, const Sentence& sentence) {
  return LcParser(g).interactive(sentence);
}

}  // namespace fockparse
