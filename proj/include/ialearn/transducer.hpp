// transducer.hpp -- length-preserving finite transducers: the one-step
// relation of a regular transition system, its regular images and finite
// fixpoints.
#pragma once

#include <set>
#include <string>
#include <tuple>

#include "ialearn/automata.hpp"

namespace ialearn {

enum class Direction { Forward, Backward };

/// Every transition consumes one input letter and emits one output letter,
/// so the relation is length-preserving by construction. Immutable after
/// load; safe to share.
struct Transducer {
  Alphabet alphabet;
  int state_count = 0;
  std::set<int> initial;
  std::set<int> accepting;
  // (from, in_letter, out_letter, to)
  std::set<std::tuple<int, Letter, Letter, int>> transitions;
};

/// A regular transition system: initial language, bad language, step
/// relation, all over one alphabet.
struct RmcModel {
  Dfa initial_lang;
  Dfa bad_lang;
  Transducer step;
};

/// All words related to w by one step, shortlex-sorted. Forward follows the
/// transducer as written; Backward inverts it.
std::set<Word> step_words(const Transducer& t, const Word& w, Direction dir);

/// DFA for Post(L) (forward) or Pre(L) (backward): product NFA, determinized.
Dfa image(const Transducer& t, const Dfa& lang, Direction dir);

/// Least fixpoint of the seed set under step_words. Seeds must share one
/// length; the result stays inside Sigma^n, so the worklist terminates.
std::set<Word> star_finite(const Transducer& t, const std::set<Word>& seed,
                           Direction dir);

/// Text format (".trd"): header lines as in ".aut" (initial/accepting may
/// list several states), transitions `trans <from> <in_sym> <out_sym> <to>`.
Transducer load_transducer(const std::string& path);
Transducer parse_transducer(const std::string& text,
                            const std::string& origin = "<string>");

RmcModel load_rmc_model(const std::string& initial_path,
                        const std::string& bad_path,
                        const std::string& step_path);

}  // namespace ialearn
