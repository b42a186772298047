#include "ialearn/teachers.hpp"

namespace ialearn {

Status Teacher::mem_status(const Word& w) {
  auto it = status_cache_.find(w);
  if (it != status_cache_.end()) return it->second;
  ++stats_.mem_queries;
  Status s = mem_status_impl(w);
  status_cache_.emplace(w, s);
  return s;
}

std::set<std::pair<Word, Word>> Teacher::mem_hints(const Word& w,
                                                   const std::set<Word>& u) {
  if (decisive(mem_status(w)))
    throw LoadError("hint query for a decided word: " + w.render(alphabet()));
  ++stats_.mem_hint_queries;
  return mem_hints_impl(w, u);
}

SeparationTeacher::SeparationTeacher(Dfa within, Dfa apart)
    : within_(std::move(within)), apart_(std::move(apart)) {
  if (!(within_.alphabet == apart_.alphabet))
    throw LoadError("separation languages disagree on the alphabet");
  if (auto w = shortest_accepted(intersect(within_, apart_)))
    throw LoadError("separation languages overlap on " +
                    w->render(within_.alphabet));
}

Status SeparationTeacher::mem_status_impl(const Word& w) {
  if (within_.accepts(w)) return Status::Yes;
  if (apart_.accepts(w)) return Status::No;
  return Status::Blank;
}

std::set<std::pair<Word, Word>> SeparationTeacher::mem_hints_impl(
    const Word&, const std::set<Word>&) {
  return {};
}

ValAnswer SeparationTeacher::validate(const Dfa& hypothesis) {
  ++stats_.val_queries;
  Dfa bad = union_of(difference(within_, hypothesis),
                     intersect(hypothesis, apart_));
  if (auto w = shortest_accepted(bad))
    return {ValAnswer::Kind::SimpleCex, *w, {}};
  return {};
}

RmcTeacher::RmcTeacher(RmcModel model, RmcAnswerMode mode)
    : model_(std::move(model)), mode_(mode) {}

const std::set<Word>& RmcTeacher::reachable_of_length(int n) {
  auto it = reach_by_len_.find(n);
  if (it == reach_by_len_.end()) {
    std::set<Word> seeds = words_of_length(model_.initial_lang, n);
    it = reach_by_len_
             .emplace(n, seeds.empty() ? std::set<Word>{}
                                       : star_finite(model_.step, seeds,
                                                     Direction::Forward))
             .first;
  }
  return it->second;
}

const std::set<Word>& RmcTeacher::coreachable_of_length(int n) {
  auto it = coreach_by_len_.find(n);
  if (it == coreach_by_len_.end()) {
    std::set<Word> seeds = words_of_length(model_.bad_lang, n);
    it = coreach_by_len_
             .emplace(n, seeds.empty() ? std::set<Word>{}
                                       : star_finite(model_.step, seeds,
                                                     Direction::Backward))
             .first;
  }
  return it->second;
}

const std::set<Word>& RmcTeacher::forward_closure(const Word& w) {
  auto it = fwd_closure_.find(w);
  if (it == fwd_closure_.end())
    it = fwd_closure_
             .emplace(w, star_finite(model_.step, {w}, Direction::Forward))
             .first;
  return it->second;
}

const std::set<Word>& RmcTeacher::backward_closure(const Word& w) {
  auto it = bwd_closure_.find(w);
  if (it == bwd_closure_.end())
    it = bwd_closure_
             .emplace(w, star_finite(model_.step, {w}, Direction::Backward))
             .first;
  return it->second;
}

Status RmcTeacher::mem_status_impl(const Word& w) {
  const bool reach = reachable_of_length(w.size()).count(w) > 0;
  const bool coreach = coreachable_of_length(w.size()).count(w) > 0;
  if (reach && coreach)
    throw UnsafeModelError(w, "bad configuration reachable via " +
                                  w.render(alphabet()));
  if (reach) return Status::Yes;
  if (coreach) return Status::No;
  switch (mode_) {
    case RmcAnswerMode::AllNo:
      return Status::No;
    case RmcAnswerMode::AllYes:
      return Status::Yes;
    default:
      return Status::Blank;
  }
}

std::set<std::pair<Word, Word>> RmcTeacher::mem_hints_impl(
    const Word& w, const std::set<Word>& u) {
  std::set<std::pair<Word, Word>> pairs;
  for (const Word& w2 : forward_closure(w))
    if (u.count(w2)) pairs.emplace(w, w2);
  for (const Word& w1 : backward_closure(w))
    if (u.count(w1)) pairs.emplace(w1, w);
  return pairs;
}

ValAnswer RmcTeacher::validate(const Dfa& hypothesis) {
  ++stats_.val_queries;
  Dfa simple = union_of(difference(model_.initial_lang, hypothesis),
                        intersect(hypothesis, model_.bad_lang));
  if (auto w = shortest_accepted(simple))
    return {ValAnswer::Kind::SimpleCex, *w, {}};
  Dfa escaped = difference(image(model_.step, hypothesis, Direction::Forward),
                           hypothesis);
  if (auto w2 = shortest_accepted(escaped)) {
    for (const Word& w1 : step_words(model_.step, *w2, Direction::Backward))
      if (hypothesis.accepts(w1))
        return {ValAnswer::Kind::InductiveCex, w1, *w2};
    throw LoadError("internal: one-step witness has no source");
  }
  return {};
}

}  // namespace ialearn
