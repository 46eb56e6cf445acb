#include "cak/cycles.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "cak/chordal.hpp"

namespace cak {

namespace {

void require_chordal(const CliqueArrangement& a) {
  if (!a.chordal()) throw PreconditionError("arrangement of a non-chordal graph");
}

/// Nodes reachable from `from` along arcs inside `allowed`.
NodeSet reach_within(const CliqueArrangement& a, int from, const NodeSet& allowed) {
  NodeSet seen(a.node_count());
  if (!allowed.contains(from)) return seen;
  std::vector<int> stack{from};
  seen.insert(from);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : a.successors(x))
      if (allowed.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
  }
  return seen;
}

NodeSet complement(const NodeSet& s) {
  NodeSet all(s.capacity());
  for (int i = 0; i < s.capacity(); ++i)
    if (!s.contains(i)) all.insert(i);
  return all;
}

}  // namespace

std::optional<Bad2CycleWitness> find_bad_2_cycle(const CliqueArrangement& a) {
  require_chordal(a);
  const int n = a.node_count();
  struct TPair {
    int sum, t0, t1, t;
  };
  std::vector<TPair> pairs;
  for (int t0 = 0; t0 < n; ++t0)
    for (int t1 = t0 + 1; t1 < n; ++t1) {
      if (a.reaches(t0, t1) || a.reaches(t1, t0)) continue;
      auto meet = a.node(t0) & a.node(t1);
      if (meet.empty()) continue;
      pairs.push_back({a.node(t0).size() + a.node(t1).size(), t0, t1, *a.find(meet)});
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const TPair& x, const TPair& y) { return x.sum < y.sum; });

  std::optional<Bad2CycleWitness> best;
  int best_ssum = -1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (best && pairs[i].sum > pairs[i - 1].sum) break;
    const auto [sum, t0, t1, t] = pairs[i];
    const auto& tset = a.node(t);
    std::vector<int> below;
    a.down_set(t).for_each([&](int x) {
      if (x != t) below.push_back(x);
    });
    for (std::size_t p = 0; p < below.size(); ++p)
      for (std::size_t q = p + 1; q < below.size(); ++q) {
        int s0 = below[p], s1 = below[q];
        int ssum = a.node(s0).size() + a.node(s1).size();
        if (ssum <= best_ssum) continue;
        if (a.reaches(s0, s1) || a.reaches(s1, s0)) continue;
        auto forbidden = a.interval(a.node(s0) | a.node(s1), tset);
        auto allowed = complement(forbidden);
        bool bad = true;
        for (int s : {s0, s1}) {
          auto r = reach_within(a, s, allowed);
          bad = bad && r.contains(t0) && r.contains(t1);
        }
        if (!bad) continue;
        Bad2CycleWitness w;
        w.starters = {s0, s1};
        w.terminals = {t0, t1};
        w.middle = t;
        for (int si = 0; si < 2; ++si)
          for (int tj = 0; tj < 2; ++tj) w.paths[si][tj] = a.hasse_path(w.starters[si], w.terminals[tj], allowed);
        best = std::move(w);
        best_ssum = ssum;
      }
  }
  return best;
}

bool has_bad_2_cycle(const CliqueArrangement& a) { return find_bad_2_cycle(a).has_value(); }

bool verify_bad_2_cycle(const CliqueArrangement& a, const Bad2CycleWitness& w) {
  const int n = a.node_count();
  auto valid = [&](int x) { return x >= 0 && x < n; };
  for (int x : {w.starters[0], w.starters[1], w.terminals[0], w.terminals[1], w.middle})
    if (!valid(x)) return false;
  if (w.starters[0] == w.starters[1] || w.terminals[0] == w.terminals[1]) return false;
  const auto tset = a.node(w.terminals[0]) & a.node(w.terminals[1]);
  if (a.node(w.middle) != tset) return false;
  const auto uset = a.node(w.starters[0]) | a.node(w.starters[1]);
  if (!uset.is_subset_of(tset)) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& path = w.paths[i][j];
      if (path.empty() || path.front() != w.starters[i] || path.back() != w.terminals[j]) return false;
      for (std::size_t s = 0; s < path.size(); ++s) {
        if (!valid(path[s])) return false;
        const auto& x = a.node(path[s]);
        if (uset.is_subset_of(x) && x.is_subset_of(tset)) return false;
        if (s + 1 < path.size()) {
          const auto& succ = a.successors(path[s]);
          if (std::find(succ.begin(), succ.end(), path[s + 1]) == succ.end()) return false;
        }
      }
    }
  return true;
}

namespace {

class KCycleSearch {
 public:
  KCycleSearch(const CliqueArrangement& a, int k, std::uint64_t budget)
      : a_(a), k_(k), budget_(budget), s_(k, -1), t_(k, -1) {}

  Bounded<BadKCycleWitness> run() {
    Bounded<BadKCycleWitness> out;
    for (int t0 = 0; t0 < a_.node_count() && !found_ && !exceeded_; ++t0) {
      t_[0] = t0;
      place_starter(1);
    }
    out.visited = visited_;
    if (found_) {
      out.status = SearchStatus::found;
      out.value = BadKCycleWitness{k_, s_, t_};
    } else {
      out.status = exceeded_ ? SearchStatus::budget_exceeded : SearchStatus::none;
    }
    return out;
  }

 private:
  bool tick() {
    if (++visited_ > budget_) exceeded_ = true;
    return !exceeded_;
  }

  // S_i must reach T_{i-1} and none of T_0..T_{i-2}.
  void place_starter(int i) {
    NodeSet cand = a_.down_set(t_[i - 1]);
    for (int j = 0; j < i - 1; ++j) cand -= a_.down_set(t_[j]);
    for (int s : cand.members()) {
      if (!tick()) return;
      s_[i] = s;
      place_terminal(i);
      if (found_ || exceeded_) return;
    }
  }

  // T_i is reached by S_i but by none of S_1..S_{i-1}; ids above T_0.
  void place_terminal(int i) {
    NodeSet cand = a_.up_set(s_[i]);
    for (int j = 1; j < i; ++j) cand -= a_.up_set(s_[j]);
    for (int t : cand.members()) {
      if (t <= t_[0]) continue;
      if (std::find(t_.begin(), t_.begin() + i, t) != t_.begin() + i) continue;
      if (!tick()) return;
      t_[i] = t;
      if (i + 1 < k_)
        place_starter(i + 1);
      else
        close();
      if (found_ || exceeded_) return;
    }
  }

  void close() {
    NodeSet cand = a_.down_set(t_[0]) & a_.down_set(t_[k_ - 1]);
    for (int j = 1; j < k_ - 1; ++j) cand -= a_.down_set(t_[j]);
    for (int s : cand.members()) {
      if (!tick()) return;
      s_[0] = s;
      found_ = true;
      return;
    }
  }

  const CliqueArrangement& a_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  bool found_ = false;
  bool exceeded_ = false;
  std::vector<int> s_, t_;
};

}  // namespace

Bounded<BadKCycleWitness> find_bad_k_cycle(const CliqueArrangement& a, int k, std::uint64_t budget) {
  require_chordal(a);
  if (k < 3) throw PreconditionError("bad k-cycles need k >= 3");
  if (k > static_cast<int>(a.sinks().size())) return {SearchStatus::none, std::nullopt, 0};
  auto out = KCycleSearch(a, k, budget).run();
  if (out.found() && !verify_bad_k_cycle(a, *out.value))
    throw InvariantViolation("bad-k-cycle", "search produced an invalid witness");
  return out;
}

bool verify_bad_k_cycle(const CliqueArrangement& a, const BadKCycleWitness& w) {
  const int k = w.k;
  if (k < 3 || static_cast<int>(w.starters.size()) != k || static_cast<int>(w.terminals.size()) != k) return false;
  for (const auto* list : {&w.starters, &w.terminals}) {
    std::vector<int> sorted = *list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : sorted)
      if (x < 0 || x >= a.node_count()) return false;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool want = j == i || j == (i + k - 1) % k;
      if (a.reaches(w.starters[i], w.terminals[j]) != want) return false;
    }
  return true;
}

Bounded<BadKCycleWitness> find_bad_cycle_k_ge_3(const CliqueArrangement& a, int k_max, std::uint64_t budget) {
  Bounded<BadKCycleWitness> total;
  const int top = std::min<int>(k_max, static_cast<int>(a.sinks().size()));
  bool exceeded = false;
  for (int k = 3; k <= top; ++k) {
    auto r = find_bad_k_cycle(a, k, budget - std::min(budget, total.visited));
    total.visited += r.visited;
    if (r.found()) {
      total.status = SearchStatus::found;
      total.value = std::move(r.value);
      return total;
    }
    if (r.status == SearchStatus::budget_exceeded) {
      exceeded = true;
      break;
    }
  }
  total.status = exceeded ? SearchStatus::budget_exceeded : SearchStatus::none;
  return total;
}

bool has_bad_cycle_k_ge_3(const Graph& g) {
  if (!is_chordal(g)) throw PreconditionError("has_bad_cycle_k_ge_3: graph is not chordal");
  return !is_strongly_chordal(g);
}

}  // namespace cak
