// Shared fixture loaders for the test suite.
#pragma once

#include <string>

#include "ialearn/transducer.hpp"

namespace fixtures {

inline std::string dir() { return FIXTURE_DIR; }

inline ialearn::RmcModel equidist() {
  const std::string d = dir() + "/equidist";
  return ialearn::load_rmc_model(d + "/s0.aut", d + "/sb.aut",
                                 d + "/step.trd");
}

inline ialearn::RmcModel model(const std::string& name) {
  const std::string d = dir() + "/" + name;
  return ialearn::load_rmc_model(d + "/s0.aut", d + "/sb.aut",
                                 d + "/step.trd");
}

// o*x(SS)*xo*: the invariant of the equidistant-tokens system
inline ialearn::Dfa inv_dfa() {
  using namespace ialearn;
  const Alphabet sigma({"o", "x"});
  const Letter o = 0, x = 1;
  Nfa n;
  n.alphabet = sigma;
  n.state_count = 4;
  n.initial = {0};
  n.accepting = {3};
  n.transitions = {{0, o, 0}, {0, x, 1}, {1, o, 2}, {1, x, 2},
                   {2, o, 1}, {2, x, 1}, {1, x, 3}, {3, o, 3}};
  return determinize(n);
}

}  // namespace fixtures
