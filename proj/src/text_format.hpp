// Shared line-oriented parser for the ".aut" / ".trd" text formats.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ialearn/automata.hpp"

namespace ialearn::detail {

struct RawAutomaton {
  std::vector<std::string> alphabet;
  int states = -1;
  std::vector<int> initial;
  std::vector<int> accepting;
  // from, symbol(s), to
  std::vector<std::vector<std::string>> transitions;
};

inline RawAutomaton parse_raw(const std::string& text,
                              const std::string& origin) {
  RawAutomaton raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw LoadError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "alphabet") {
      std::string sym;
      while (fields >> sym) raw.alphabet.push_back(sym);
      if (raw.alphabet.empty()) fail("empty alphabet line");
    } else if (head == "states") {
      if (!(fields >> raw.states) || raw.states <= 0) fail("bad state count");
    } else if (head == "initial") {
      int i;
      while (fields >> i) raw.initial.push_back(i);
      if (raw.initial.empty()) fail("bad initial line");
    } else if (head == "accepting") {
      int i;
      while (fields >> i) raw.accepting.push_back(i);
    } else if (head == "trans") {
      std::vector<std::string> tokens;
      std::string tok;
      while (fields >> tok) tokens.push_back(tok);
      if (tokens.size() < 3) fail("truncated trans line");
      raw.transitions.push_back(std::move(tokens));
    } else {
      fail("unknown directive: " + head);
    }
  }
  if (raw.alphabet.empty()) throw LoadError(origin + ": missing alphabet");
  if (raw.states <= 0) throw LoadError(origin + ": missing states");
  return raw;
}

inline int check_state(const RawAutomaton& raw, int s,
                       const std::string& origin) {
  if (s < 0 || s >= raw.states)
    throw LoadError(origin + ": state out of range: " + std::to_string(s));
  return s;
}

inline int parse_state(const RawAutomaton& raw, const std::string& tok,
                       const std::string& origin) {
  try {
    return check_state(raw, std::stoi(tok), origin);
  } catch (const LoadError&) {
    throw;
  } catch (const std::exception&) {
    throw LoadError(origin + ": bad state id: " + tok);
  }
}

}  // namespace ialearn::detail
