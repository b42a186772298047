// automata.hpp -- alphabets, words, DFAs/NFAs and the regular operations
// used throughout the learner.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ialearn {

/// Raised on malformed inputs: bad automaton files, out-of-range letters,
/// alphabet mismatches.
class LoadError : public std::runtime_error {
 public:
  explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

using Letter = int;

/// A finite, ordered set of printable symbols. The listed order defines the
/// letter indices 0..size()-1 and hence the lexicographic tie-break of the
/// shortlex word order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& symbol(Letter a) const { return letters_.at(a); }
  Letter index_of(const std::string& sym) const;

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, Letter> index_;
};

/// A word over some alphabet, stored as letter indices. The total order is
/// shortlex: length first, then lexicographic by letter index.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word epsilon() { return Word{}; }

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](int i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word append(Letter a) const;
  Word concat(const Word& other) const;
  /// First i letters (w^i). Clamped to [0, |w|].
  Word prefix(int i) const;
  /// Letters from position i on (w[i:]). Clamped; suffix(|w|) is epsilon.
  Word suffix(int i) const;
  bool is_prefix_of(const Word& other) const;

  std::string render(const Alphabet& sigma) const;

  // shortlex
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return letters_ <=> other.letters_;
  }
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A complete DFA: delta is total by construction (loaders add a rejecting
/// sink for missing transitions). Values are immutable once built and safe
/// to share between threads.
struct Dfa {
  Alphabet alphabet;
  int state_count = 0;
  int initial = 0;
  std::vector<bool> accepting;       // indexed by state
  std::vector<int> delta;            // state * |Sigma| + letter -> state

  int next(int state, Letter a) const {
    return delta[state * alphabet.size() + a];
  }
  int run(const Word& w) const;
  bool accepts(const Word& w) const;
};

struct Nfa {
  Alphabet alphabet;
  int state_count = 0;
  std::set<int> initial;
  std::set<int> accepting;
  std::set<std::tuple<int, Letter, int>> transitions;
};

Dfa complement(const Dfa& dfa);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);   // L(a) \ L(b)
Dfa union_of(const Dfa& a, const Dfa& b);

/// Shortlex-least accepted word, or nullopt for the empty language.
std::optional<Word> shortest_accepted(const Dfa& dfa);

/// Exactly the accepted words of length n, in shortlex order.
std::set<Word> words_of_length(const Dfa& dfa, int n);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Word> witness;  // shortlex-least word in the symmetric diff
};
EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

/// Subset construction; unreachable subsets are never materialized.
Dfa determinize(const Nfa& nfa);

/// Helpers for fixtures and tests.
Dfa empty_language(const Alphabet& sigma);
Dfa sigma_star(const Alphabet& sigma);
Dfa dfa_from_words(const Alphabet& sigma, const std::set<Word>& words);

/// Text format (".aut"): line-oriented, '#' comments.
///   alphabet <sym> <sym> ...
///   states <n>
///   initial <i>
///   accepting <i> ...
///   trans <from> <sym> <to>
/// Missing (state, symbol) pairs are completed with a fresh rejecting sink;
/// duplicates are a load error.
Dfa load_dfa(const std::string& path);
Dfa parse_dfa(const std::string& text, const std::string& origin = "<string>");
void save_dfa(const Dfa& dfa, const std::string& path);
std::string format_dfa(const Dfa& dfa);

}  // namespace ialearn
