#include "realize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace qrz {

const char* to_string(Status s) {
  switch (s) {
    case Status::realizable: return "realizable";
    case Status::not_realizable: return "not_realizable";
    case Status::obstruction_failed: return "obstruction_failed";
  }
  return "unknown";
}

const char* to_string(Decider d) {
  switch (d) {
    case Decider::matching: return "matching";
    case Decider::tiling: return "tiling";
    case Decider::reduction: return "reduction";
  }
  return "unknown";
}

ObstructionResult abelianization_obstruction(const AbelianizationMap& ab, const Multiset& a) {
  if (a.universe() != ab.projection.size()) fail(ErrorCode::precondition, "multiset is not over this group");
  Element image = kIdentity;
  for (std::size_t x = 0; x < a.universe(); ++x)
    for (std::size_t k = 0; k < a.counts()[x]; ++k) image = ab.quotient.mul(ab.projection[x], image);
  return ObstructionResult{image == kIdentity, image, ab.quotient.name(image)};
}

ObstructionResult abelianization_obstruction(const FiniteGroup& g, const Multiset& a) {
  require_decision_input(g, a);
  return abelianization_obstruction(abelianization(g), a);
}

namespace {

using Clock = std::chrono::steady_clock;

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++nodes_ == limit_) fail(ErrorCode::budget, "search node budget of " + std::to_string(limit_) + " exhausted");
  }
  void add(std::uint64_t k) {
    nodes_ += k;
    if (limit_ != 0 && nodes_ >= limit_)
      fail(ErrorCode::budget, "search node budget of " + std::to_string(limit_) + " exhausted");
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
};

std::optional<ObstructionResult> run_obstruction(const FiniteGroup& g, const Multiset& a,
                                                 const DeciderOptions& opts) {
  if (!opts.check_obstruction) return std::nullopt;
  return opts.abelianization ? abelianization_obstruction(*opts.abelianization, a)
                             : abelianization_obstruction(abelianization(g), a);
}

Verdict obstructed(Decider d, ObstructionResult ob, Clock::time_point start) {
  Verdict v;
  v.status = Status::obstruction_failed;
  v.decider = d;
  v.obstruction = std::move(ob);
  v.stats.elapsed = Clock::now() - start;
  return v;
}

class MatchingSearch {
 public:
  MatchingSearch(const FiniteGroup& g, const Multiset& a, NodeCounter& counter)
      : g_(g),
        labels_(a.support()),
        remaining_(a.counts().begin(), a.counts().end()),
        phi_(g.order()),
        used_(g.order(), 0),
        counter_(counter) {}

  bool run() { return assign(0); }
  const std::vector<Element>& phi() const { return phi_; }

 private:
  bool assign(Element x) {
    if (x == g_.order()) return true;
    for (Element label : labels_) {
      if (remaining_[label] == 0) continue;
      const Element target = g_.mul(label, x);
      if (used_[target]) continue;
      counter_.tick();
      used_[target] = 1;
      --remaining_[label];
      phi_[x] = target;
      if (assign(x + 1)) return true;
      ++remaining_[label];
      used_[target] = 0;
    }
    return false;
  }

  const FiniteGroup& g_;
  std::vector<Element> labels_;
  std::vector<std::size_t> remaining_;
  std::vector<Element> phi_;
  std::vector<char> used_;
  NodeCounter& counter_;
};

class TilingSearch {
 public:
  struct OpenTile {
    Word letters;
    Element translate;
  };

  TilingSearch(const FiniteGroup& g, const Multiset& a, NodeCounter& counter)
      : g_(g),
        labels_(a.support()),
        remaining_(a.counts().begin(), a.counts().end()),
        covered_(g.order(), 0),
        counter_(counter) {}

  bool run() { return next_cycle(); }
  const std::vector<OpenTile>& tiles() const { return tiles_; }

 private:
  bool next_cycle() {
    auto it = std::find(covered_.begin(), covered_.end(), 0);
    if (it == covered_.end()) return true;
    const auto start = static_cast<Element>(it - covered_.begin());
    covered_[start] = 1;
    tiles_.push_back({{}, start});
    if (grow(start, start)) return true;
    tiles_.pop_back();
    covered_[start] = 0;
    return false;
  }

  // Extends the open path ending at `current` by one labelled edge.
  bool grow(Element start, Element current) {
    const std::size_t open = tiles_.size() - 1;
    for (Element label : labels_) {
      if (remaining_[label] == 0) continue;
      const Element next = g_.mul(label, current);
      if (next != start && covered_[next]) continue;
      counter_.tick();
      --remaining_[label];
      tiles_[open].letters.push_back(label);
      bool done;
      if (next == start) {
        done = next_cycle();
      } else {
        covered_[next] = 1;
        done = grow(start, next);
        if (!done) covered_[next] = 0;
      }
      if (done) return true;
      tiles_[open].letters.pop_back();
      ++remaining_[label];
    }
    return false;
  }

  const FiniteGroup& g_;
  std::vector<Element> labels_;
  std::vector<std::size_t> remaining_;
  std::vector<char> covered_;
  std::vector<OpenTile> tiles_;
  NodeCounter& counter_;
};

// Enumerates sub-multisets of `residual` with `size` elements that contain at
// least one copy of the first element present in `residual`. Stops when
// `visit` returns true.
bool for_each_block(std::vector<std::size_t>& residual, std::size_t size,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const auto first = std::find_if(residual.begin(), residual.end(), [](std::size_t c) { return c > 0; });
  if (first == residual.end()) return false;
  const std::size_t lead = static_cast<std::size_t>(first - residual.begin());
  std::vector<std::size_t> suffix(residual.size() + 1, 0);
  for (std::size_t i = residual.size(); i-- > 0;) suffix[i] = suffix[i + 1] + residual[i];
  std::vector<std::size_t> block(residual.size(), 0);

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) -> bool {
    if (left == 0) return visit(block);
    if (pos == residual.size() || suffix[pos] < left) return false;
    const std::size_t lo = pos == lead ? 1 : 0;
    const std::size_t hi = std::min(residual[pos], left);
    for (std::size_t c = hi + 1; c-- > lo;) {
      block[pos] = c;
      if (rec(pos + 1, left - c)) return true;
    }
    block[pos] = 0;
    return false;
  };
  return rec(lead, size);
}

}  // namespace

Verdict decide_matching(const FiniteGroup& g, const Multiset& a, const DeciderOptions& opts) {
  const auto start = Clock::now();
  require_decision_input(g, a);
  auto ob = run_obstruction(g, a, opts);
  if (ob && !ob->pass) return obstructed(Decider::matching, *ob, start);
  NodeCounter counter(opts.node_limit);
  MatchingSearch search(g, a, counter);
  Verdict v;
  v.decider = Decider::matching;
  v.obstruction = ob;
  if (search.run()) {
    v.status = Status::realizable;
    v.certificate = Realization{search.phi(), permutation_to_words(g, search.phi())};
  } else {
    v.status = Status::not_realizable;
    v.stats.exhausted = true;
  }
  v.stats.nodes = counter.nodes();
  v.stats.elapsed = Clock::now() - start;
  return v;
}

Verdict decide_cycle_tiling(const FiniteGroup& g, const Multiset& a, const DeciderOptions& opts) {
  const auto start = Clock::now();
  require_decision_input(g, a);
  auto ob = run_obstruction(g, a, opts);
  if (ob && !ob->pass) return obstructed(Decider::tiling, *ob, start);
  NodeCounter counter(opts.node_limit);
  TilingSearch search(g, a, counter);
  Verdict v;
  v.decider = Decider::tiling;
  v.obstruction = ob;
  if (search.run()) {
    std::vector<Tile> tiles;
    for (const auto& t : search.tiles()) tiles.push_back({require_simple(g, t.letters), t.translate});
    auto phi = words_to_permutation(g, tiles);
    v.status = Status::realizable;
    v.certificate = Realization{std::move(phi), std::move(tiles)};
  } else {
    v.status = Status::not_realizable;
    v.stats.exhausted = true;
  }
  v.stats.nodes = counter.nodes();
  v.stats.elapsed = Clock::now() - start;
  return v;
}

Verdict decide_subgroup_reduction(const FiniteGroup& g, const Subgroup& h, const Multiset& a,
                                  const DeciderOptions& opts) {
  const auto start = Clock::now();
  require_decision_input(g, a);
  if (h.parent_order() != g.order()) fail(ErrorCode::precondition, "subgroup belongs to a different group");
  for (Element x : a.support())
    if (!h.contains(x))
      fail(ErrorCode::precondition, "support of A is not contained in H: '" + g.name(x) + "' is outside H");
  auto ob = run_obstruction(g, a, opts);
  if (ob && !ob->pass) return obstructed(Decider::reduction, *ob, start);

  const EmbeddedGroup sub = subgroup_as_group(g, h);
  const std::size_t m = h.order();
  const AbelianizationMap sub_ab = abelianization(sub.group);
  DeciderOptions block_opts;
  block_opts.abelianization = &sub_ab;

  NodeCounter counter(opts.node_limit);
  std::map<std::vector<std::size_t>, std::optional<std::vector<Element>>> block_cache;
  std::set<std::vector<std::size_t>> dead_residuals;
  std::vector<std::vector<std::size_t>> chosen;

  auto block_phi = [&](const std::vector<std::size_t>& block) -> const std::optional<std::vector<Element>>& {
    auto it = block_cache.find(block);
    if (it != block_cache.end()) return it->second;
    Verdict bv = decide_matching(sub.group, Multiset(block), block_opts);
    counter.add(bv.stats.nodes);
    std::optional<std::vector<Element>> phi;
    if (bv.status == Status::realizable) phi = bv.certificate->phi;
    return block_cache.emplace(block, std::move(phi)).first->second;
  };

  std::vector<std::size_t> residual(m);
  for (std::size_t i = 0; i < m; ++i) residual[i] = a.counts()[sub.embedding[i]];

  std::function<bool()> partition = [&]() -> bool {
    if (std::all_of(residual.begin(), residual.end(), [](std::size_t c) { return c == 0; })) return true;
    if (dead_residuals.count(residual)) return false;
    auto snapshot = residual;
    const bool ok = for_each_block(snapshot, m, [&](const std::vector<std::size_t>& block) {
      counter.tick();
      if (!block_phi(block)) return false;
      for (std::size_t i = 0; i < m; ++i) residual[i] -= block[i];
      chosen.push_back(block);
      if (partition()) return true;
      chosen.pop_back();
      for (std::size_t i = 0; i < m; ++i) residual[i] += block[i];
      return false;
    });
    if (!ok) dead_residuals.insert(residual);
    return ok;
  };

  Verdict v;
  v.decider = Decider::reduction;
  v.obstruction = ob;
  if (partition()) {
    // phi(h x_j) = psi_j(h) x_j on the j-th right coset.
    const CosetPartition cosets = right_cosets(g, h);
    std::vector<Element> phi(g.order());
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const auto& psi = *block_cache.at(chosen[j]);
      const Element rep = cosets.representatives[j];
      for (std::size_t local = 0; local < m; ++local)
        phi[g.mul(sub.embedding[local], rep)] = g.mul(sub.embedding[psi[local]], rep);
    }
    v.status = Status::realizable;
    v.certificate = Realization{phi, permutation_to_words(g, phi)};
  } else {
    v.status = Status::not_realizable;
    v.stats.exhausted = true;
  }
  v.stats.nodes = counter.nodes();
  v.stats.elapsed = Clock::now() - start;
  return v;
}

OrderingResult product_one_ordering(const FiniteGroup& g, const Multiset& a, std::uint64_t max_states) {
  if (a.universe() != g.order()) fail(ErrorCode::precondition, "multiset is not over this group");
  if (a.total() == 0) fail(ErrorCode::precondition, "ordering needs a nonempty multiset");
  const std::vector<Element> support = a.support();
  std::vector<std::size_t> remaining(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) remaining[i] = a.counts()[support[i]];

  struct KeyHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (std::size_t x : v) h = (h ^ x) * 0x100000001b3ULL;
      return h;
    }
  };
  std::unordered_set<std::vector<std::size_t>, KeyHash> failed;
  OrderingResult result;
  std::vector<Element> order;
  std::size_t left = a.total();

  // State key: remaining counts followed by the running product.
  std::function<bool(Element)> search = [&](Element product) -> bool {
    if (left == 0) return product == kIdentity;
    auto key = remaining;
    key.push_back(product);
    if (failed.count(key)) return false;
    if (max_states != 0 && result.states >= max_states)
      throw Error(ErrorCode::budget, "ordering state budget exhausted");
    ++result.states;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      --left;
      order.push_back(support[i]);
      if (search(g.mul(support[i], product))) return true;
      order.pop_back();
      ++left;
      ++remaining[i];
    }
    failed.insert(std::move(key));
    return false;
  };

  try {
    if (search(kIdentity)) {
      result.outcome = OrderingResult::Outcome::found;
      result.ordering = std::move(order);
    } else {
      result.outcome = OrderingResult::Outcome::none;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget) throw;
    result.outcome = OrderingResult::Outcome::budget_exceeded;
  }
  return result;
}

std::optional<std::vector<Multiset>> zero_sum_block_partition(const FiniteGroup& h, const Multiset& a,
                                                              std::size_t r) {
  if (!h.is_abelian()) fail(ErrorCode::precondition, "zero-sum block partition needs an abelian group");
  if (a.universe() != h.order()) fail(ErrorCode::precondition, "multiset is not over this group");
  if (a.total() != r * h.order())
    fail(ErrorCode::precondition, "multiset size " + std::to_string(a.total()) + " is not " + std::to_string(r) +
                                      " blocks of " + std::to_string(h.order()));
  std::vector<std::size_t> residual(a.counts().begin(), a.counts().end());
  std::set<std::vector<std::size_t>> dead;
  std::vector<Multiset> blocks;

  std::function<bool()> partition = [&]() -> bool {
    if (blocks.size() == r) return true;
    if (dead.count(residual)) return false;
    auto snapshot = residual;
    const bool ok = for_each_block(snapshot, h.order(), [&](const std::vector<std::size_t>& block) {
      Element product = kIdentity;
      for (std::size_t x = 0; x < block.size(); ++x)
        for (std::size_t k = 0; k < block[x]; ++k) product = h.mul(static_cast<Element>(x), product);
      if (product != kIdentity) return false;
      for (std::size_t x = 0; x < block.size(); ++x) residual[x] -= block[x];
      blocks.emplace_back(block);
      if (partition()) return true;
      blocks.pop_back();
      for (std::size_t x = 0; x < block.size(); ++x) residual[x] += block[x];
      return false;
    });
    if (!ok) dead.insert(residual);
    return ok;
  };
  if (r == 0) return blocks;
  if (partition()) return blocks;
  return std::nullopt;
}

}  // namespace qrz
