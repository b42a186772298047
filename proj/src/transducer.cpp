#include "ialearn/transducer.hpp"

#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "text_format.hpp"

namespace ialearn {

namespace {

// Letters read and written by a transition, oriented by direction.
std::pair<Letter, Letter> oriented(const std::tuple<int, Letter, Letter, int>& t,
                                   Direction dir) {
  auto [from, in, out, to] = t;
  (void)from;
  (void)to;
  return dir == Direction::Forward ? std::pair{in, out} : std::pair{out, in};
}

}  // namespace

std::set<Word> step_words(const Transducer& t, const Word& w, Direction dir) {
  // successor index oriented by the read letter
  std::map<std::pair<int, Letter>, std::vector<std::pair<Letter, int>>> succ;
  for (const auto& tr : t.transitions) {
    auto [read, write] = oriented(tr, dir);
    succ[{std::get<0>(tr), read}].push_back({write, std::get<3>(tr)});
  }
  std::set<Word> result;
  std::vector<Letter> emitted;
  std::function<void(int, int)> walk = [&](int state, int pos) {
    if (pos == w.size()) {
      if (t.accepting.count(state)) result.emplace(emitted);
      return;
    }
    auto it = succ.find({state, w[pos]});
    if (it == succ.end()) return;
    for (auto [write, to] : it->second) {
      emitted.push_back(write);
      walk(to, pos + 1);
      emitted.pop_back();
    }
  };
  for (int q : t.initial) walk(q, 0);
  return result;
}

Dfa image(const Transducer& t, const Dfa& lang, Direction dir) {
  if (!(t.alphabet == lang.alphabet)) throw LoadError("alphabet mismatch");
  // Product NFA: run the language DFA on the letters the transducer reads
  // and emit the letters it writes.
  Nfa prod;
  prod.alphabet = t.alphabet;
  prod.state_count = t.state_count * lang.state_count;
  for (int qt : t.initial) prod.initial.insert(qt * lang.state_count + lang.initial);
  for (int qt : t.accepting)
    for (int qd = 0; qd < lang.state_count; ++qd)
      if (lang.accepting[qd]) prod.accepting.insert(qt * lang.state_count + qd);
  for (const auto& tr : t.transitions) {
    auto [read, write] = oriented(tr, dir);
    for (int qd = 0; qd < lang.state_count; ++qd)
      prod.transitions.insert({std::get<0>(tr) * lang.state_count + qd, write,
                               std::get<3>(tr) * lang.state_count +
                                   lang.next(qd, read)});
  }
  return determinize(prod);
}

std::set<Word> star_finite(const Transducer& t, const std::set<Word>& seed,
                           Direction dir) {
  std::set<Word> closed;
  std::deque<Word> queue;
  int length = -1;
  for (const Word& w : seed) {
    if (length < 0) length = w.size();
    if (w.size() != length)
      throw LoadError("star_finite seeds must share one length");
    if (closed.insert(w).second) queue.push_back(w);
  }
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const Word& w2 : step_words(t, w, dir))
      if (closed.insert(w2).second) queue.push_back(w2);
  }
  return closed;
}

Transducer parse_transducer(const std::string& text,
                            const std::string& origin) {
  detail::RawAutomaton raw = detail::parse_raw(text, origin);
  Alphabet sigma(raw.alphabet);
  Transducer out;
  out.alphabet = sigma;
  out.state_count = raw.states;
  for (int s : raw.initial) out.initial.insert(detail::check_state(raw, s, origin));
  for (int s : raw.accepting)
    out.accepting.insert(detail::check_state(raw, s, origin));
  for (const auto& t : raw.transitions) {
    if (t.size() != 4)
      throw LoadError(origin + ": transducer trans needs 4 fields");
    out.transitions.insert({detail::parse_state(raw, t[0], origin),
                            sigma.index_of(t[1]), sigma.index_of(t[2]),
                            detail::parse_state(raw, t[3], origin)});
  }
  if (out.initial.empty()) throw LoadError(origin + ": missing initial");
  return out;
}

Transducer load_transducer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_transducer(buf.str(), path);
}

RmcModel load_rmc_model(const std::string& initial_path,
                        const std::string& bad_path,
                        const std::string& step_path) {
  RmcModel m{load_dfa(initial_path), load_dfa(bad_path),
             load_transducer(step_path)};
  if (!(m.initial_lang.alphabet == m.step.alphabet) ||
      !(m.bad_lang.alphabet == m.step.alphabet))
    throw LoadError("model files disagree on the alphabet");
  return m;
}

}  // namespace ialearn
