#include "proxigraph/cycle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "proxigraph/errors.hpp"

namespace proxigraph {

// ---------------------------------------------------------------------------
// HamCycle

HamCycle::HamCycle(std::vector<std::size_t> order) {
  const std::size_t n = order.size();
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw Error("cycle order is not a permutation of 0.." + std::to_string(n == 0 ? 0 : n - 1));
    seen[v] = true;
  }
  if (n > 0) {
    auto zero = std::find(order.begin(), order.end(), std::size_t{0});
    std::rotate(order.begin(), zero, order.end());
    if (n > 2 && order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
  }
  order_ = std::move(order);
  position_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) position_[order_[k]] = k;
}

std::size_t HamCycle::next(std::size_t vertex) const {
  if (vertex >= order_.size()) throw IndexError("vertex out of range");
  return order_[(position_[vertex] + 1) % order_.size()];
}

std::size_t HamCycle::prev(std::size_t vertex) const {
  if (vertex >= order_.size()) throw IndexError("vertex out of range");
  return order_[(position_[vertex] + order_.size() - 1) % order_.size()];
}

bool HamCycle::has_edge(std::size_t i, std::size_t j) const {
  if (i >= order_.size() || j >= order_.size() || i == j) return false;
  return next(i) == j || prev(i) == j;
}

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) out.emplace_back(order_[k], order_[(k + 1) % order_.size()]);
  return out;
}

// ---------------------------------------------------------------------------
// Distance sequences

std::strong_ordering operator<=>(const DistanceSequence& a, const DistanceSequence& b) {
  const std::size_t common = std::min(a.values.size(), b.values.size());
  for (std::size_t k = 0; k < common; ++k) {
    const int c = cmp(a.values[k], b.values[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.values.size() <=> b.values.size();
}

DistanceSequence distance_sequence(const HamCycle& c, const PointSet& s) {
  if (c.size() != s.size()) {
    throw IndexError("cycle spans " + std::to_string(c.size()) + " vertices but the point set has " +
                     std::to_string(s.size()));
  }
  DistanceSequence ds;
  ds.values.reserve(c.size());
  for (const Edge& e : c.edges()) ds.values.push_back(sq_dist(s[e.a], s[e.b]));
  std::sort(ds.values.begin(), ds.values.end(), [](const Scalar& a, const Scalar& b) { return a > b; });
  return ds;
}

std::strong_ordering compare_cycles(const HamCycle& a, const HamCycle& b, const PointSet& s) {
  return distance_sequence(a, s) <=> distance_sequence(b, s);
}

DistanceRanks::DistanceRanks(const PointSet& s) : n_(s.size()), rank_(n_ * n_, -1) {
  struct Pair {
    Scalar d;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n_ * (n_ - 1) / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) pairs.push_back({sq_dist(s[i], s[j]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });
  std::int32_t rank = -1;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k == 0 || pairs[k].d != pairs[k - 1].d) ++rank;
    rank_[pairs[k].i * n_ + pairs[k].j] = rank;
    rank_[pairs[k].j * n_ + pairs[k].i] = rank;
  }
  distinct_ = rank + 1;
}

// ---------------------------------------------------------------------------
// Exhaustive branch and bound

namespace {

using RankSeq = std::vector<std::int32_t>;  // sorted non-increasing

void insert_desc(RankSeq& seq, std::int32_t r) {
  seq.insert(std::upper_bound(seq.begin(), seq.end(), r, std::greater<>()), r);
}

void erase_desc(RankSeq& seq, std::int32_t r) {
  seq.erase(std::lower_bound(seq.begin(), seq.end(), r, std::greater<>()));
}

// Compares a partial sequence with the first |partial| entries of `full`.
// Adding edges only raises every order statistic, so a partial sequence that
// is already lexicographically above the bound can never complete below it.
int compare_prefix(const RankSeq& partial, const RankSeq& full) {
  for (std::size_t k = 0; k < partial.size(); ++k) {
    if (partial[k] != full[k]) return partial[k] < full[k] ? -1 : 1;
  }
  return 0;
}

RankSeq rank_sequence(const std::vector<std::size_t>& order, const DistanceRanks& ranks) {
  RankSeq seq;
  for (std::size_t k = 0; k < order.size(); ++k) seq.push_back(ranks(order[k], order[(k + 1) % order.size()]));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

// Depth-first enumeration of canonical cycles (0 first, order[1] < order[n-1])
// in lexicographic order, pruning every prefix that already exceeds the bound.
class CycleEnumerator {
 public:
  enum class Mode { kMinimize, kCheck };

  CycleEnumerator(const DistanceRanks& ranks, RankSeq bound, Mode mode)
      : ranks_(ranks), n_(ranks.size()), bound_(std::move(bound)), mode_(mode), used_(n_, false) {}

  void run() {
    path_.push_back(0);
    used_[0] = true;
    extend();
  }

  bool found() const { return found_; }
  const std::vector<std::size_t>& best_order() const { return best_order_; }
  std::size_t equal_count() const { return equal_count_; }
  const std::optional<std::vector<std::size_t>>& better() const { return better_; }

 private:
  void extend() {
    if (stop_) return;
    const std::size_t last = path_.back();
    if (path_.size() == n_) {
      if (path_[1] > path_[n_ - 1]) return;
      const std::int32_t closing = ranks_(last, 0);
      insert_desc(partial_, closing);
      complete();
      erase_desc(partial_, closing);
      return;
    }
    for (std::size_t v = 1; v < n_ && !stop_; ++v) {
      if (used_[v]) continue;
      const std::int32_t r = ranks_(last, v);
      insert_desc(partial_, r);
      if (compare_prefix(partial_, bound_) <= 0) {
        used_[v] = true;
        path_.push_back(v);
        extend();
        path_.pop_back();
        used_[v] = false;
      }
      erase_desc(partial_, r);
    }
  }

  void complete() {
    const int c = compare_prefix(partial_, bound_);
    if (mode_ == Mode::kMinimize) {
      if (c < 0 || (c == 0 && !found_)) {
        bound_ = partial_;
        best_order_ = path_;
        found_ = true;
      }
      return;
    }
    if (c < 0) {
      better_ = path_;
      stop_ = true;
    } else if (c == 0) {
      ++equal_count_;
    }
  }

  const DistanceRanks& ranks_;
  std::size_t n_;
  RankSeq bound_;
  Mode mode_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_;
  RankSeq partial_;
  bool found_ = false;
  bool stop_ = false;
  std::vector<std::size_t> best_order_;
  std::size_t equal_count_ = 0;
  std::optional<std::vector<std::size_t>> better_;
};

}  // namespace

HamCycle brute_force_minimal(const PointSet& s) {
  const std::size_t n = s.size();
  if (n < 3) throw TooFewPointsError("a Hamiltonian cycle needs at least 3 points");
  if (n > kExactCycleCap) {
    throw SizeCapError("exact minimal cycles are limited to n <= " + std::to_string(kExactCycleCap) + " points (got " +
                       std::to_string(n) + ")");
  }
  if (n == 3) return HamCycle({0, 1, 2});
  const DistanceRanks ranks(s);
  // Seed the bound with a local optimum; the enumeration replaces it with the
  // lexicographically first canonical cycle attaining the minimum.
  const HamCycle start = local_search_minimal(s, 0);
  CycleEnumerator search(ranks, rank_sequence(start.order(), ranks), CycleEnumerator::Mode::kMinimize);
  search.run();
  return search.found() ? HamCycle(search.best_order()) : start;
}

MinimalityCheck check_minimality(const PointSet& s, const HamCycle& candidate, std::size_t max_points) {
  const std::size_t n = s.size();
  if (candidate.size() != n) throw IndexError("cycle does not span the point set");
  if (n < 3) throw TooFewPointsError("a Hamiltonian cycle needs at least 3 points");
  if (n > max_points) {
    throw SizeCapError("minimality check is limited to n <= " + std::to_string(max_points) + " points (got " +
                       std::to_string(n) + ")");
  }
  const DistanceRanks ranks(s);
  CycleEnumerator search(ranks, rank_sequence(candidate.order(), ranks), CycleEnumerator::Mode::kCheck);
  search.run();
  MinimalityCheck out;
  out.minimal = !search.better().has_value();
  out.equal_cycles = search.equal_count();
  if (search.better()) out.better = HamCycle(*search.better());
  return out;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

using Triple = std::array<std::int32_t, 3>;

Triple sorted_desc(std::int32_t a, std::int32_t b, std::int32_t c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

// Replacing `removed` by `added` lowers the distance sequence iff, at the
// largest rank where the two multisets differ, `added` has fewer copies; for
// equal-size multisets that is the lexicographic order of their descending sorts.
bool improves(const Triple& removed, const Triple& added) { return added < removed; }

class LocalSearch {
 public:
  LocalSearch(const DistanceRanks& ranks, std::vector<std::size_t> tour)
      : ranks_(ranks), n_(tour.size()), tour_(std::move(tour)) {}

  std::vector<std::size_t> run() {
    while (two_opt() || relocate() || three_exchange()) {
    }
    return tour_;
  }

 private:
  std::int32_t r(std::size_t a, std::size_t b) const { return ranks_(a, b); }
  std::size_t at(std::size_t pos) const { return tour_[pos % n_]; }

  bool two_opt() {
    for (std::size_t i = 0; i + 2 < n_; ++i) {
      for (std::size_t j = i + 2; j < n_; ++j) {
        if (i == 0 && j == n_ - 1) continue;
        const std::size_t a = at(i), b = at(i + 1), c = at(j), d = at(j + 1);
        // The third slot stays empty on both sides, so it cancels.
        if (improves(sorted_desc(r(a, b), r(c, d), -1), sorted_desc(r(a, c), r(b, d), -1))) {
          std::reverse(tour_.begin() + static_cast<std::ptrdiff_t>(i + 1), tour_.begin() + static_cast<std::ptrdiff_t>(j + 1));
          return true;
        }
      }
    }
    return false;
  }

  bool relocate() {
    for (std::size_t p = 0; p < n_; ++p) {
      const std::size_t v = at(p), before = at(p + n_ - 1), after = at(p + 1);
      for (std::size_t q = 0; q < n_; ++q) {
        const std::size_t a = at(q), b = at(q + 1);
        if (a == v || b == v) continue;
        if (improves(sorted_desc(r(before, v), r(v, after), r(a, b)), sorted_desc(r(before, after), r(a, v), r(v, b)))) {
          std::vector<std::size_t> next;
          next.reserve(n_);
          for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t w = tour_[k];
            if (w == v) continue;
            next.push_back(w);
            if (w == a) next.push_back(v);
          }
          tour_ = std::move(next);
          return true;
        }
      }
    }
    return false;
  }

  // Removes edges after positions i < j < k and reconnects the segments
  // A = tour[k+1..i] (wrapping), B = tour[i+1..j], C = tour[j+1..k] in every
  // other Hamiltonian way: A X Y with {X, Y} = {B, C}, each optionally reversed.
  bool three_exchange() {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          const std::size_t a_start = at(k + 1), a_end = at(i);
          const std::size_t b_start = at(i + 1), b_end = at(j);
          const std::size_t c_start = at(j + 1), c_end = at(k);
          const Triple removed = sorted_desc(r(a_end, b_start), r(b_end, c_start), r(c_end, a_start));
          for (int variant = 1; variant < 8; ++variant) {
            const bool swap = variant & 4;
            const bool rev_first = variant & 2;
            const bool rev_second = variant & 1;
            std::size_t f1 = swap ? c_start : b_start, f2 = swap ? c_end : b_end;
            std::size_t s1 = swap ? b_start : c_start, s2 = swap ? b_end : c_end;
            if (rev_first) std::swap(f1, f2);
            if (rev_second) std::swap(s1, s2);
            const Triple added = sorted_desc(r(a_end, f1), r(f2, s1), r(s2, a_start));
            if (improves(removed, added)) {
              apply_three(i, j, k, swap, rev_first, rev_second);
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  void apply_three(std::size_t i, std::size_t j, std::size_t k, bool swap, bool rev_first, bool rev_second) {
    auto slice = [this](std::size_t from, std::size_t to) {  // inclusive positions, from <= to
      return std::vector<std::size_t>(tour_.begin() + static_cast<std::ptrdiff_t>(from),
                                      tour_.begin() + static_cast<std::ptrdiff_t>(to + 1));
    };
    std::vector<std::size_t> a;
    for (std::size_t p = k + 1; p < n_; ++p) a.push_back(tour_[p]);
    for (std::size_t p = 0; p <= i; ++p) a.push_back(tour_[p]);
    std::vector<std::size_t> first = slice(i + 1, j);
    std::vector<std::size_t> second = slice(j + 1, k);
    if (swap) std::swap(first, second);
    if (rev_first) std::reverse(first.begin(), first.end());
    if (rev_second) std::reverse(second.begin(), second.end());
    a.insert(a.end(), first.begin(), first.end());
    a.insert(a.end(), second.begin(), second.end());
    tour_ = std::move(a);
  }

  const DistanceRanks& ranks_;
  std::size_t n_;
  std::vector<std::size_t> tour_;
};

std::vector<std::size_t> greedy_tour(const DistanceRanks& ranks, std::size_t start) {
  const std::size_t n = ranks.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> tour{start};
  used[start] = true;
  while (tour.size() < n) {
    const std::size_t last = tour.back();
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!used[v] && (best == n || ranks(last, v) < ranks(last, best))) best = v;
    }
    used[best] = true;
    tour.push_back(best);
  }
  return tour;
}

}  // namespace

HamCycle local_search_minimal(const PointSet& s, std::uint64_t seed) {
  const std::size_t n = s.size();
  if (n < 4) throw TooFewPointsError("local search needs at least 4 points");
  const DistanceRanks ranks(s);
  const HamCycle start(greedy_tour(ranks, static_cast<std::size_t>(seed % n)));
  LocalSearch search(ranks, start.order());
  return HamCycle(search.run());
}

// ---------------------------------------------------------------------------
// Traversal

TraversalRecord extract_traversal(const HamCycle& c, const PointSet& s, std::size_t i, std::size_t j) {
  const std::size_t n = c.size();
  if (n != s.size()) throw IndexError("cycle does not span the point set");
  if (!c.has_edge(i, j)) {
    throw EdgeNotInCycleError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge of the cycle");
  }
  const bool forward = c.next(i) == j;
  std::vector<std::size_t> walk{i};
  while (walk.size() < n) walk.push_back(forward ? c.next(walk.back()) : c.prev(walk.back()));

  TraversalRecord rec;
  rec.x = i;
  rec.y = j;
  for (std::size_t p = 2; p < n; ++p) {
    const std::size_t v = walk[p];
    if (in_diameter_disk(s[i], s[j], s[v])) {
      rec.u.push_back(v);
      rec.s.push_back(walk[p - 1]);
      rec.t.push_back(walk[(p + 1) % n]);
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Hamiltonicity

namespace detail {

std::optional<std::vector<std::size_t>> hamiltonian_cycle_bitmask(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n < 3 || n > 30) throw SizeCapError("bitmask search supports 3 <= n <= 30");
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : adj[v]) nbr[v] |= 1u << w;

  // reach[mask] = set of end vertices of paths 0 -> end visiting exactly mask.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(full + 1, 0);
  reach[1] = 1;
  for (std::size_t mask = 1; mask <= full; mask += 2) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(ends >> v & 1u)) continue;
      std::uint32_t out = nbr[v] & ~static_cast<std::uint32_t>(mask);
      while (out) {
        const std::size_t w = static_cast<std::size_t>(__builtin_ctz(out));
        out &= out - 1;
        reach[mask | (std::size_t{1} << w)] |= 1u << w;
      }
    }
  }
  const std::uint32_t closing = reach[full] & nbr[0];
  if (closing == 0) return std::nullopt;

  std::vector<std::size_t> path;
  std::size_t mask = full;
  std::size_t v = static_cast<std::size_t>(__builtin_ctz(closing));
  while (v != 0) {
    path.push_back(v);
    const std::size_t prev_mask = mask & ~(std::size_t{1} << v);
    const std::uint32_t candidates = reach[prev_mask] & nbr[v];
    mask = prev_mask;
    v = static_cast<std::size_t>(__builtin_ctz(candidates));
  }
  path.push_back(0);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

class Backtracker {
 public:
  explicit Backtracker(const Adjacency& adj) : adj_(adj), n_(adj.size()), on_path_(n_, false) {}

  std::optional<std::vector<std::size_t>> run() {
    for (const auto& row : adj_)
      if (row.size() < 2) return std::nullopt;
    // Start from a minimum-degree vertex; it is the most constrained.
    std::size_t start = 0;
    for (std::size_t v = 1; v < n_; ++v)
      if (adj_[v].size() < adj_[start].size()) start = v;
    path_.push_back(start);
    on_path_[start] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // Every vertex off the path still needs two usable neighbours (other
  // off-path vertices or the two path ends); a vertex with exactly two
  // forces the way the path must continue.
  std::size_t usable(std::size_t v) const {
    const std::size_t head = path_.front(), tail = path_.back();
    std::size_t count = 0;
    for (std::size_t w : adj_[v])
      if (!on_path_[w] || w == head || w == tail) ++count;
    return count;
  }

  // Every vertex off the path still needs two usable neighbours: other
  // off-path vertices or one of the two path ends.
  bool feasible() const {
    for (std::size_t v = 0; v < n_; ++v)
      if (!on_path_[v] && usable(v) < 2) return false;
    return true;
  }

  bool try_vertex(std::size_t w) {
    on_path_[w] = true;
    path_.push_back(w);
    if (feasible() && extend()) return true;
    path_.pop_back();
    on_path_[w] = false;
    return false;
  }

  bool extend() {
    const std::size_t tail = path_.back();
    if (path_.size() == n_) {
      return std::binary_search(adj_[tail].begin(), adj_[tail].end(), path_.front());
    }
    // An off-path neighbour of the tail with exactly two usable neighbours
    // needs the tail's last free slot; two of them cannot both get it.
    if (path_.size() >= 2) {
      std::optional<std::size_t> forced;
      for (std::size_t w : adj_[tail]) {
        if (on_path_[w] || usable(w) != 2) continue;
        if (forced) return false;
        forced = w;
      }
      if (forced) return try_vertex(*forced);
    }
    for (std::size_t w : adj_[tail]) {
      if (!on_path_[w] && try_vertex(w)) return true;
    }
    return false;
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::optional<std::vector<std::size_t>> hamiltonian_cycle_backtracking(const Adjacency& adj) {
  if (adj.size() < 3) throw TooFewPointsError("a Hamiltonian cycle needs at least 3 vertices");
  Adjacency sorted = adj;
  for (auto& row : sorted) std::sort(row.begin(), row.end());
  return Backtracker(sorted).run();
}

}  // namespace detail

HamiltonicityResult is_hamiltonian(const GeometricGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw TooFewPointsError("a Hamiltonian cycle needs at least 3 points");
  const auto adj = g.adjacency();
  auto order = n <= kBitmaskLimit ? detail::hamiltonian_cycle_bitmask(adj) : detail::hamiltonian_cycle_backtracking(adj);
  HamiltonicityResult out;
  if (order) {
    out.hamiltonian = true;
    out.cycle = HamCycle(std::move(*order));
  }
  return out;
}

}  // namespace proxigraph
