#include "exspec/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace exspec {

namespace {

// Ordered partition; a cell is identified by the index of its first element.
struct Partition {
  std::vector<int> elems;
  std::vector<int> cell_of;
  std::vector<int> cell_end;

  bool discrete() const {
    for (std::size_t s = 0; s < elems.size(); s = static_cast<std::size_t>(cell_end[s]))
      if (cell_end[s] - static_cast<int>(s) > 1) return false;
    return true;
  }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), n_(g.order()), words_(g.words()), mask_(g.words()), count_(g.order()), inq_(g.order()) {}

  // Split cells by neighbour counts into each splitter until equitable.
  void refine(Partition& p, std::vector<int> queue) {
    std::fill(inq_.begin(), inq_.end(), 0);
    for (int s : queue) inq_[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int w = queue[head];
      inq_[static_cast<std::size_t>(w)] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (int i = w; i < p.cell_end[static_cast<std::size_t>(w)]; ++i) {
        const auto v = static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)]);
        mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
      }
      for (int s = 0; s < static_cast<int>(n_);) {
        const int e = p.cell_end[static_cast<std::size_t>(s)];
        if (e - s > 1) split(p, s, e, queue);
        s = e;
      }
    }
  }

 private:
  void split(Partition& p, int s, int e, std::vector<int>& queue) {
    bool uniform = true;
    for (int i = s; i < e; ++i) {
      const auto v = static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)]);
      auto r = g_.row(v);
      int c = 0;
      for (std::size_t k = 0; k < words_; ++k) c += std::popcount(r[k] & mask_[k]);
      count_[v] = c;
      if (c != count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(s)])]) uniform = false;
    }
    if (uniform) return;
    auto first = p.elems.begin() + s, last = p.elems.begin() + e;
    std::sort(first, last, [&](int a, int b) {
      return count_[static_cast<std::size_t>(a)] < count_[static_cast<std::size_t>(b)];
    });
    const bool was_queued = inq_[static_cast<std::size_t>(s)] != 0;
    int run = s;
    for (int i = s + 1; i <= e; ++i) {
      if (i == e || count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] !=
                        count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(run)])]) {
        p.cell_end[static_cast<std::size_t>(run)] = i;
        for (int k = run; k < i; ++k) p.cell_of[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(k)])] = run;
        if (!(run == s && was_queued)) {
          inq_[static_cast<std::size_t>(run)] = 1;
          queue.push_back(run);
        }
        run = i;
      }
    }
  }

  const Graph& g_;
  std::size_t n_, words_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> count_;
  std::vector<char> inq_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
  std::vector<std::size_t> parent;
};

class Search {
 public:
  Search(const Graph& g) : g_(g), n_(g.order()), words_(g.words()), refiner_(g) {}

  void run(Partition root) { descend(std::move(root), 0, true); }

  const std::vector<int>& best_order() const { return best_order_; }
  std::vector<std::vector<std::size_t>>& generators() { return gens_; }

 private:
  void descend(Partition p, int depth, bool on_first_path) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int s = 0;
    while (p.cell_end[static_cast<std::size_t>(s)] - s == 1) s = p.cell_end[static_cast<std::size_t>(s)];
    const int e = p.cell_end[static_cast<std::size_t>(s)];
    std::vector<int> cand(p.elems.begin() + s, p.elems.begin() + e);
    std::sort(cand.begin(), cand.end());

    std::vector<int> explored;
    for (std::size_t ci = 0; ci < cand.size(); ++ci) {
      const int w = cand[ci];
      if (on_first_path && !explored.empty() && in_explored_orbit(w, explored, depth)) continue;

      Partition q = p;
      individualize(q, w);
      path_.push_back(w);
      descend(std::move(q), depth + 1, on_first_path && ci == 0);
      path_.pop_back();
      if (jump_ >= 0) {
        if (jump_ < depth) return;
        jump_ = -1;
      }
      explored.push_back(w);
    }
  }

  void individualize(Partition& p, int v) {
    const int s = p.cell_of[static_cast<std::size_t>(v)];
    const int e = p.cell_end[static_cast<std::size_t>(s)];
    auto it = std::find(p.elems.begin() + s, p.elems.begin() + e, v);
    std::iter_swap(p.elems.begin() + s, it);
    p.cell_end[static_cast<std::size_t>(s)] = s + 1;
    if (s + 1 < e) {
      p.cell_end[static_cast<std::size_t>(s + 1)] = e;
      for (int k = s + 1; k < e; ++k) p.cell_of[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(k)])] = s + 1;
    }
    refiner_.refine(p, {s});
  }

  // Orbits of the discovered automorphisms fixing the first path's prefix.
  bool in_explored_orbit(int w, const std::vector<int>& explored, int depth) {
    UnionFind uf(n_);
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) {
        const auto v = static_cast<std::size_t>(first_path_[static_cast<std::size_t>(d)]);
        fixes = gen[v] == v;
      }
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    const std::size_t rw = uf.find(static_cast<std::size_t>(w));
    for (int x : explored)
      if (uf.find(static_cast<std::size_t>(x)) == rw) return true;
    return false;
  }

  std::vector<std::uint64_t> relabelled(const std::vector<int>& order) const {
    std::vector<std::uint64_t> rows(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto vi = static_cast<std::size_t>(order[i]);
      for (std::size_t j = 0; j < n_; ++j)
        if (g_.has_edge(vi, static_cast<std::size_t>(order[j]))) rows[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    return rows;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    while (static_cast<std::size_t>(d) < a.size() && static_cast<std::size_t>(d) < b.size() &&
           a[static_cast<std::size_t>(d)] == b[static_cast<std::size_t>(d)])
      ++d;
    return d;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<std::size_t> gen(n_);
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      gen[static_cast<std::size_t>(from[i])] = static_cast<std::size_t>(to[i]);
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) gens_.push_back(std::move(gen));
  }

  void leaf(const Partition& p) {
    std::vector<std::uint64_t> rows = relabelled(p.elems);
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = rows;
      best_rows_ = std::move(rows);
      first_order_ = best_order_ = p.elems;
      first_path_ = best_path_ = path_;
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(p.elems, first_order_);
      jump_ = common_prefix(path_, first_path_);
      return;
    }
    if (rows == best_rows_) {
      record_automorphism(p.elems, best_order_);
      jump_ = common_prefix(path_, best_path_);
      return;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = p.elems;
      best_path_ = path_;
    }
  }

  const Graph& g_;
  std::size_t n_, words_;
  Refiner refiner_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_rows_, best_rows_;
  std::vector<int> first_order_, best_order_;
  std::vector<int> first_path_, best_path_, path_;
  std::vector<std::vector<std::size_t>> gens_;
  int jump_ = -1;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const std::size_t n = g.order();
  if (!colors.empty() && colors.size() != n) throw std::invalid_argument("canonical_labeling: colour vector size mismatch");
  CanonicalLabeling out;
  if (n == 0) {
    out.canonical_graph = Graph(0);
    return out;
  }

  Partition root;
  root.elems.resize(n);
  std::iota(root.elems.begin(), root.elems.end(), 0);
  root.cell_of.assign(n, 0);
  root.cell_end.assign(n, 0);
  std::vector<int> queue;
  if (colors.empty()) {
    root.cell_end[0] = static_cast<int>(n);
    queue.push_back(0);
  } else {
    std::stable_sort(root.elems.begin(), root.elems.end(),
                     [&](int a, int b) { return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)]; });
    int run = 0;
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      if (i == static_cast<int>(n) || colors[static_cast<std::size_t>(root.elems[static_cast<std::size_t>(i)])] !=
                                          colors[static_cast<std::size_t>(root.elems[static_cast<std::size_t>(run)])]) {
        root.cell_end[static_cast<std::size_t>(run)] = i;
        for (int k = run; k < i; ++k) root.cell_of[static_cast<std::size_t>(root.elems[static_cast<std::size_t>(k)])] = run;
        queue.push_back(run);
        run = i;
      }
    }
  }
  Refiner(g).refine(root, queue);

  Search search(g);
  search.run(std::move(root));

  const auto& best = search.best_order();
  out.order.assign(best.begin(), best.end());
  out.position.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) out.position[out.order[i]] = i;
  out.generators = std::move(search.generators());

  UnionFind uf(n);
  for (const auto& gen : out.generators)
    for (std::size_t v = 0; v < n; ++v) uf.unite(v, gen[v]);
  out.orbit.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.orbit[v] = uf.find(v);

  out.canonical_graph = relabel(g, out.position);
  return out;
}

CanonicalForm canonical_form(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw std::length_error("canonical_form: order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(max_order));
  return {to_graph6(canonical_labeling(g).canonical_graph)};
}

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t max_order) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g, max_order) == canonical_form(h, max_order);
}

}  // namespace exspec
