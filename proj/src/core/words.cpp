#include "words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qrz {

struct SimpleWordAccess {
  static SimpleWord make(std::vector<Element> letters, std::vector<Element> partials) {
    SimpleWord w;
    w.pset_.assign(partials.begin(), partials.end() - 1);
    std::sort(w.pset_.begin(), w.pset_.end());
    w.letters_ = std::move(letters);
    w.partials_ = std::move(partials);
    return w;
  }
};

std::vector<Element> partial_products(const FiniteGroup& g, std::span<const Element> letters) {
  std::vector<Element> p;
  p.reserve(letters.size() + 1);
  p.push_back(kIdentity);
  for (Element a : letters) p.push_back(g.mul(a, p.back()));
  return p;
}

SimpleCheck check_simple(const FiniteGroup& g, std::span<const Element> letters) {
  using Reason = WordRejection::Reason;
  if (letters.empty()) return WordRejection{Reason::empty, 0};
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] >= g.order()) return WordRejection{Reason::invalid_letter, i};
  auto partials = partial_products(g, letters);
  std::vector<char> seen(g.order(), 0);
  for (std::size_t j = 0; j + 1 < partials.size(); ++j) {
    if (seen[partials[j]]) return WordRejection{Reason::repeated_partial, j};
    seen[partials[j]] = 1;
  }
  if (partials.back() != kIdentity) return WordRejection{Reason::nontrivial_product, letters.size()};
  return SimpleWordAccess::make(std::vector<Element>(letters.begin(), letters.end()), std::move(partials));
}

SimpleWord require_simple(const FiniteGroup& g, std::span<const Element> letters) {
  auto checked = check_simple(g, letters);
  if (auto* r = std::get_if<WordRejection>(&checked))
    fail(ErrorCode::precondition, std::string("word is not simple product-one: ") + to_string(r->reason));
  return std::get<SimpleWord>(std::move(checked));
}

const char* to_string(WordRejection::Reason r) {
  switch (r) {
    case WordRejection::Reason::empty: return "empty word";
    case WordRejection::Reason::invalid_letter: return "letter out of range";
    case WordRejection::Reason::repeated_partial: return "repeated partial product";
    case WordRejection::Reason::nontrivial_product: return "nontrivial full product";
  }
  return "unknown";
}

SimpleWord SimpleWord::rotated(const FiniteGroup& g, std::size_t k) const {
  const std::size_t l = letters_.size();
  std::vector<Element> letters(l);
  for (std::size_t i = 0; i < l; ++i) letters[i] = letters_[(i + k) % l];
  return SimpleWordAccess::make(std::move(letters), partial_products(g, letters));
}

SimpleWord canonical_rotation(const FiniteGroup& g, const SimpleWord& w) {
  const auto letters = w.letters();
  const std::size_t l = letters.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < l; ++k)
    for (std::size_t i = 0; i < l; ++i) {
      const Element a = letters[(k + i) % l], b = letters[(best + i) % l];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  return best == 0 ? w : w.rotated(g, best);
}

std::size_t rotation_class_size(const SimpleWord& w) {
  const auto letters = w.letters();
  const std::size_t l = letters.size();
  for (std::size_t period = 1; period < l; ++period) {
    if (l % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < l && periodic; ++i) periodic = letters[i] == letters[(i + period) % l];
    if (periodic) return period;
  }
  return l;
}

namespace {

class WordSearch {
 public:
  WordSearch(const FiniteGroup& g, std::span<const std::size_t> budget, std::size_t max_len)
      : g_(g), remaining_(budget.begin(), budget.end()), max_len_(max_len), visited_(g.order(), 0) {}

  std::set<SimpleWord> run() {
    if (max_len_ == 0) return {};
    visited_[kIdentity] = 1;
    extend(kIdentity);
    return std::move(found_);
  }

 private:
  void extend(Element current) {
    for (Element a = 0; a < remaining_.size(); ++a) {
      if (remaining_[a] == 0) continue;
      const Element next = g_.mul(a, current);
      letters_.push_back(a);
      --remaining_[a];
      if (next == kIdentity) {
        found_.insert(canonical_rotation(g_, require_simple(g_, letters_)));
      } else if (!visited_[next] && letters_.size() < max_len_) {
        visited_[next] = 1;
        extend(next);
        visited_[next] = 0;
      }
      ++remaining_[a];
      letters_.pop_back();
    }
  }

  const FiniteGroup& g_;
  std::vector<std::size_t> remaining_;
  std::size_t max_len_;
  std::vector<char> visited_;
  Word letters_;
  std::set<SimpleWord> found_;
};

}  // namespace

std::vector<EnumeratedWord> enumerate_simple_words(const FiniteGroup& g, std::span<const std::size_t> budget,
                                                   std::optional<std::size_t> max_len) {
  if (budget.size() != g.order())
    fail(ErrorCode::precondition, "word budget must have one count per group element");
  const std::size_t total = std::accumulate(budget.begin(), budget.end(), std::size_t{0});
  const std::size_t limit = std::min({max_len.value_or(g.order()), g.order(), total});
  std::vector<EnumeratedWord> out;
  for (auto& w : WordSearch(g, budget, limit).run()) {
    const std::size_t size = rotation_class_size(w);
    out.push_back({w, size});
  }
  return out;
}

}  // namespace qrz
