#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fockparse {

// A grammar symbol. Equality is by name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string name_;
};

// True if `name` can be used as a symbol: non-empty, no whitespace and none of
// the reserved tokens `->`, `|`, `[`, `]`, `(`, `)`, `,`.
bool is_valid_symbol_name(std::string_view name);

inline std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.name(); }

using Sentence = std::vector<Symbol>;

// Splits on whitespace.
Sentence split_sentence(std::string_view text);
std::string join_sentence(const Sentence& words);

}  // namespace fockparse

template <>
struct std::hash<fockparse::Symbol> {
  std::size_t operator()(const fockparse::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.name());
  }
};
