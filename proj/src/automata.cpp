#include "ialearn/automata.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "text_format.hpp"

namespace ialearn {

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw LoadError("alphabet must be non-empty");
  for (int i = 0; i < static_cast<int>(letters_.size()); ++i) {
    auto [it, inserted] = index_.emplace(letters_[i], i);
    if (!inserted) throw LoadError("duplicate alphabet symbol: " + letters_[i]);
  }
}

Letter Alphabet::index_of(const std::string& sym) const {
  auto it = index_.find(sym);
  if (it == index_.end()) throw LoadError("unknown symbol: " + sym);
  return it->second;
}

Word Word::append(Letter a) const {
  std::vector<Letter> out = letters_;
  out.push_back(a);
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::prefix(int i) const {
  i = std::clamp(i, 0, size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + i));
}

Word Word::suffix(int i) const {
  i = std::clamp(i, 0, size());
  return Word(std::vector<Letter>(letters_.begin() + i, letters_.end()));
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::string Word::render(const Alphabet& sigma) const {
  if (empty()) return "<eps>";
  std::string out;
  for (Letter a : letters_) out += sigma.symbol(a);
  return out;
}

int Dfa::run(const Word& w) const {
  int q = initial;
  for (Letter a : w.letters()) {
    if (a < 0 || a >= alphabet.size())
      throw LoadError("letter index out of range for alphabet");
    q = next(q, a);
  }
  return q;
}

bool Dfa::accepts(const Word& w) const { return accepting[run(w)]; }

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet == b.alphabet)) throw LoadError("alphabet mismatch");
}

// Product automaton with a boolean combiner over the two acceptance bits.
Dfa product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& accept) {
  require_same_alphabet(a, b);
  const int k = a.alphabet.size();
  Dfa out;
  out.alphabet = a.alphabet;
  out.state_count = a.state_count * b.state_count;
  out.initial = a.initial * b.state_count + b.initial;
  out.accepting.resize(out.state_count);
  out.delta.resize(out.state_count * k);
  for (int qa = 0; qa < a.state_count; ++qa) {
    for (int qb = 0; qb < b.state_count; ++qb) {
      const int q = qa * b.state_count + qb;
      out.accepting[q] = accept(a.accepting[qa], b.accepting[qb]);
      for (Letter x = 0; x < k; ++x)
        out.delta[q * k + x] = a.next(qa, x) * b.state_count + b.next(qb, x);
    }
  }
  return out;
}

}  // namespace

Dfa complement(const Dfa& dfa) {
  Dfa out = dfa;
  for (auto&& bit : out.accepting) bit = !bit;
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa union_of(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

std::optional<Word> shortest_accepted(const Dfa& dfa) {
  // BFS expanding letters in ascending order: the first time a state is
  // discovered, its access word is shortlex-least.
  const int k = dfa.alphabet.size();
  std::vector<bool> seen(dfa.state_count, false);
  std::vector<std::pair<int, Letter>> parent(dfa.state_count, {-1, -1});
  std::deque<int> queue;
  seen[dfa.initial] = true;
  queue.push_back(dfa.initial);
  int hit = dfa.accepting[dfa.initial] ? dfa.initial : -1;
  while (hit < 0 && !queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < k && hit < 0; ++a) {
      const int q2 = dfa.next(q, a);
      if (seen[q2]) continue;
      seen[q2] = true;
      parent[q2] = {q, a};
      if (dfa.accepting[q2]) hit = q2;
      queue.push_back(q2);
    }
  }
  if (hit < 0) return std::nullopt;
  std::vector<Letter> letters;
  for (int q = hit; parent[q].first >= 0; q = parent[q].first)
    letters.push_back(parent[q].second);
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

std::set<Word> words_of_length(const Dfa& dfa, int n) {
  std::set<Word> out;
  std::vector<Letter> stack;
  std::function<void(int, int)> walk = [&](int state, int depth) {
    if (depth == n) {
      if (dfa.accepting[state]) out.emplace(stack);
      return;
    }
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      stack.push_back(a);
      walk(dfa.next(state, a), depth + 1);
      stack.pop_back();
    }
  };
  if (n >= 0) walk(dfa.initial, 0);
  return out;
}

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
  Dfa symdiff = product(a, b, [](bool x, bool y) { return x != y; });
  auto w = shortest_accepted(symdiff);
  if (!w) return {true, std::nullopt};
  return {false, std::move(w)};
}

Dfa determinize(const Nfa& nfa) {
  const int k = nfa.alphabet.size();
  // successor index: state -> letter -> targets
  std::map<std::pair<int, Letter>, std::set<int>> succ;
  for (const auto& [from, a, to] : nfa.transitions) {
    if (from < 0 || from >= nfa.state_count || to < 0 || to >= nfa.state_count)
      throw LoadError("nfa transition state out of range");
    succ[{from, a}].insert(to);
  }
  std::map<std::set<int>, int> ids;
  std::vector<std::set<int>> subsets;
  auto intern = [&](const std::set<int>& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(subsets.size()));
    if (inserted) subsets.push_back(s);
    return it->second;
  };
  Dfa out;
  out.alphabet = nfa.alphabet;
  out.initial = intern(nfa.initial);
  std::deque<int> queue{out.initial};
  std::vector<std::vector<int>> delta_rows;
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (id >= static_cast<int>(delta_rows.size()))
      delta_rows.resize(id + 1, std::vector<int>(k, -1));
    const std::set<int> current = subsets[id];
    for (Letter a = 0; a < k; ++a) {
      std::set<int> target;
      for (int q : current) {
        auto it = succ.find({q, a});
        if (it != succ.end()) target.insert(it->second.begin(), it->second.end());
      }
      const int before = static_cast<int>(subsets.size());
      const int tid = intern(target);
      if (tid >= before) queue.push_back(tid);
      if (id >= static_cast<int>(delta_rows.size()))
        delta_rows.resize(id + 1, std::vector<int>(k, -1));
      delta_rows[id][a] = tid;
    }
  }
  out.state_count = static_cast<int>(subsets.size());
  out.accepting.resize(out.state_count, false);
  out.delta.assign(out.state_count * k, 0);
  for (int q = 0; q < out.state_count; ++q) {
    for (int s : subsets[q])
      if (nfa.accepting.count(s)) out.accepting[q] = true;
    for (Letter a = 0; a < k; ++a) out.delta[q * k + a] = delta_rows[q][a];
  }
  return out;
}

Dfa empty_language(const Alphabet& sigma) {
  Dfa out;
  out.alphabet = sigma;
  out.state_count = 1;
  out.initial = 0;
  out.accepting = {false};
  out.delta.assign(sigma.size(), 0);
  return out;
}

Dfa sigma_star(const Alphabet& sigma) {
  Dfa out = empty_language(sigma);
  out.accepting[0] = true;
  return out;
}

Dfa dfa_from_words(const Alphabet& sigma, const std::set<Word>& words) {
  // trie with a shared sink
  Dfa out;
  out.alphabet = sigma;
  const int k = sigma.size();
  std::vector<std::map<Letter, int>> children(1);
  std::vector<bool> accept(1, false);
  for (const Word& w : words) {
    int q = 0;
    for (Letter a : w.letters()) {
      auto it = children[q].find(a);
      if (it == children[q].end()) {
        children.emplace_back();
        accept.push_back(false);
        it = children[q].emplace(a, static_cast<int>(children.size()) - 1).first;
      }
      q = it->second;
    }
    accept[q] = true;
  }
  const int sink = static_cast<int>(children.size());
  out.state_count = sink + 1;
  out.initial = 0;
  out.accepting = accept;
  out.accepting.push_back(false);
  out.delta.assign(out.state_count * k, sink);
  for (int q = 0; q < sink; ++q)
    for (const auto& [a, to] : children[q]) out.delta[q * k + a] = to;
  return out;
}

Dfa parse_dfa(const std::string& text, const std::string& origin) {
  using detail::check_state;
  detail::RawAutomaton raw = detail::parse_raw(text, origin);
  if (raw.initial.size() != 1)
    throw LoadError(origin + ": dfa needs exactly one initial state");
  Alphabet sigma(raw.alphabet);
  const int k = sigma.size();
  Dfa out;
  out.alphabet = sigma;
  out.state_count = raw.states + 1;  // reserve a sink, dropped if unused
  const int sink = raw.states;
  out.initial = check_state(raw, raw.initial[0], origin);
  out.accepting.assign(out.state_count, false);
  for (int s : raw.accepting) out.accepting[check_state(raw, s, origin)] = true;
  out.delta.assign(out.state_count * k, -1);
  for (const auto& t : raw.transitions) {
    if (t.size() != 3) throw LoadError(origin + ": dfa trans needs 3 fields");
    const int from = detail::parse_state(raw, t[0], origin);
    const Letter a = sigma.index_of(t[1]);
    const int to = detail::parse_state(raw, t[2], origin);
    if (out.delta[from * k + a] != -1)
      throw LoadError(origin + ": nondeterministic: duplicate trans " + t[0] +
                      " " + t[1]);
    out.delta[from * k + a] = to;
  }
  bool used_sink = false;
  for (int q = 0; q < raw.states; ++q)
    for (Letter a = 0; a < k; ++a)
      if (out.delta[q * k + a] == -1) {
        out.delta[q * k + a] = sink;
        used_sink = true;
      }
  for (Letter a = 0; a < k; ++a) out.delta[sink * k + a] = sink;
  if (!used_sink) {
    out.state_count = raw.states;
    out.accepting.pop_back();
    out.delta.resize(raw.states * k);
  }
  return out;
}

Dfa load_dfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dfa(buf.str(), path);
}

std::string format_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "alphabet";
  for (Letter a = 0; a < dfa.alphabet.size(); ++a)
    out << ' ' << dfa.alphabet.symbol(a);
  out << "\nstates " << dfa.state_count << "\ninitial " << dfa.initial
      << "\naccepting";
  for (int q = 0; q < dfa.state_count; ++q)
    if (dfa.accepting[q]) out << ' ' << q;
  out << '\n';
  for (int q = 0; q < dfa.state_count; ++q)
    for (Letter a = 0; a < dfa.alphabet.size(); ++a)
      out << "trans " << q << ' ' << dfa.alphabet.symbol(a) << ' '
          << dfa.next(q, a) << '\n';
  return out.str();
}

void save_dfa(const Dfa& dfa, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path);
  out << format_dfa(dfa);
}

}  // namespace ialearn
