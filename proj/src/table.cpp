#include "ialearn/table.hpp"

#include <algorithm>
#include <sstream>

namespace ialearn {

ObservationTable::ObservationTable(Teacher& teacher) : teacher_(teacher) {
  prefixes_.push_back(Word::epsilon());
  prefix_set_.insert(Word::epsilon());
  suffixes_.push_back(Word::epsilon());
  suffix_set_.insert(Word::epsilon());
  rebuild_rows();
  fill();
}

int ObservationTable::add_prefixes(const std::vector<Word>& ps) {
  int added = 0;
  for (const Word& p : ps)
    for (int i = 0; i <= p.size(); ++i)  // prefix closure
      if (prefix_set_.insert(p.prefix(i)).second) ++added;
  if (added == 0) return 0;
  prefixes_.assign(prefix_set_.begin(), prefix_set_.end());
  rebuild_rows();
  fill();
  return added;
}

int ObservationTable::add_suffixes(const std::vector<Word>& ss) {
  int added = 0;
  for (const Word& s : ss)
    if (suffix_set_.insert(s).second) {
      suffixes_.push_back(s);
      ++added;
    }
  if (added > 0) fill();
  return added;
}

void ObservationTable::rebuild_rows() {
  std::set<Word> labels(prefix_set_);
  for (const Word& p : prefixes_)
    for (Letter a = 0; a < teacher_.alphabet().size(); ++a)
      labels.insert(p.append(a));
  rows_.assign(labels.begin(), labels.end());
}

void ObservationTable::fill() {
  for (const Word& q : rows_) {
    for (const Word& s : suffixes_) {
      const Word w = q.concat(s);
      if (cells_.count(w)) continue;
      const Status st = teacher_.mem_status(w);
      cells_.emplace(w, st);
      if (st == Status::Blank) {
        incomplete_.insert(w);
        auto pairs = teacher_.mem_hints(w, incomplete_);
        inductive_pairs_.insert(pairs.begin(), pairs.end());
      }
    }
  }
}

Status ObservationTable::cell(const Word& w) const {
  auto it = cells_.find(w);
  if (it == cells_.end())
    throw LoadError("word outside the table domain: " +
                    w.render(teacher_.alphabet()));
  return it->second;
}

std::string ObservationTable::format() const {
  const Alphabet& sigma = teacher_.alphabet();
  std::vector<std::string> labels;
  size_t width = 0;
  for (const Word& q : rows_) {
    // '*' marks one-letter extensions that are not prefixes themselves
    labels.push_back(q.render(sigma) + (has_prefix(q) ? "" : " *"));
    width = std::max(width, labels.back().size());
  }
  std::ostringstream out;
  out << std::string(width, ' ');
  for (const Word& s : suffixes_) out << "  " << s.render(sigma);
  out << '\n';
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Word& q = rows_[i];
    out << labels[i] << std::string(width - labels[i].size(), ' ');
    for (const Word& s : suffixes_) {
      const Status st = cell(q.concat(s));
      out << "  "
          << (st == Status::Yes ? '1' : st == Status::No ? '0' : '?');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ialearn
