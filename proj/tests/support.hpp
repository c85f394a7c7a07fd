#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "fockparse/grammar.hpp"
#include "fockparse/term.hpp"

namespace fockparse::testing {

inline std::string data_path(const std::string& name) { return std::string(FOCKPARSE_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Grammar example_grammar() { return parse_grammar(read_data("example.cfg")); }

inline Grammar grammar_of(const std::string& text) { return parse_grammar(text); }

inline Sentence words(const std::string& text) { return split_sentence(text); }

inline Symbol sym(const std::string& name) { return Symbol(name); }

// t1 and t2 of the running example.
inline const char* kT1 = "NP(D(the),[N])";
inline const char* kT2 = "S(NP(D(the),N(mouse)),[VP])";
inline const char* kFullTree = "S(NP(D(the),N(mouse)),VP(V(ate),N(cheese)))";

}  // namespace fockparse::testing
