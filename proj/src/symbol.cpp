#include "fockparse/symbol.hpp"

#include <cctype>
#include <sstream>

#include "fockparse/error.hpp"

namespace fockparse {

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!is_valid_symbol_name(name_)) throw InputError("invalid symbol name '" + name_ + "'");
}

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  if (name.find("->") != std::string_view::npos) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    switch (c) {
      case '|':
      case '[':
      case ']':
      case '(':
      case ')':
      case ',':
        return false;
      default:
        break;
    }
  }
  return true;
}

Sentence split_sentence(std::string_view text) {
  Sentence words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.emplace_back(w);
  return words;
}

std::string join_sentence(const Sentence& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w.name();
  }
  return out;
}

}  // namespace fockparse
