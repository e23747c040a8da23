#include "pseudoham/max_clique.hpp"

#include <algorithm>
#include <bit>

namespace pseudoham {

namespace {

using Bits = std::vector<std::uint64_t>;

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget, std::size_t exceed)
      : n_(g.order()), words_((n_ + 63) / 64), budget_(budget), exceed_(exceed) {
    // Smallest-last order, reversed: the densest core comes first.
    std::vector<std::size_t> deg(n_);
    std::vector<char> gone(n_, 0);
    for (Vertex v = 0; v < n_; ++v) deg[v] = g.degree(v);
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex pick = 0;
      std::size_t low = SIZE_MAX;
      for (Vertex v = 0; v < n_; ++v)
        if (!gone[v] && deg[v] < low) low = deg[pick = v];
      gone[pick] = 1;
      order_.push_back(pick);
      for (Vertex w : g.neighbors(pick))
        if (!gone[w]) --deg[w];
    }
    std::reverse(order_.begin(), order_.end());
    std::vector<Vertex> rank(n_);
    for (Vertex i = 0; i < n_; ++i) rank[order_[i]] = i;
    adj_.assign(n_, Bits(words_, 0));
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex w : g.neighbors(order_[i])) adj_[i][rank[w] >> 6] |= std::uint64_t{1} << (rank[w] & 63);
  }

  CliqueResult run() {
    if (n_ > 0) {
      Bits all(words_, 0);
      for (Vertex i = 0; i < n_; ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
      expand(all);
    }
    CliqueResult r;
    for (Vertex i : best_) r.vertices.push_back(order_[i]);
    std::sort(r.vertices.begin(), r.vertices.end());
    r.proven_optimal = !aborted_;
    r.nodes = nodes_;
    return r;
  }

 private:
  void expand(Bits p) {
    if (aborted_ || ++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // Sequential greedy colouring. Vertices whose colour does not exceed
    // `free` cannot lead to a larger clique on their own and are not branched
    // on; a vertex that would get a higher colour is first tried in a lower
    // class by moving its only neighbour there to another low class.
    const std::size_t bound = std::max(best_.size(), exceed_);
    const std::size_t free = bound > current_.size() ? bound - current_.size() : 0;
    std::vector<Bits> classes;
    auto meets = [&](const Bits& cls, Vertex v) {
      for (std::size_t w = 0; w < words_; ++w)
        if (cls[w] & adj_[v][w]) return true;
      return false;
    };
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t q = p[w]; q; q &= q - 1) {
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(q)));
        std::size_t k = 0;
        while (k < classes.size() && meets(classes[k], v)) ++k;
        if (k >= free && renumber(classes, v, free)) continue;
        if (k == classes.size()) classes.emplace_back(words_, 0);
        classes[k][v >> 6] |= std::uint64_t{1} << (v & 63);
      }
    }
    std::vector<Vertex> list;
    std::vector<std::size_t> colour;
    for (std::size_t k = free; k < classes.size(); ++k)
      for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t q = classes[k][w]; q; q &= q - 1) {
          list.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(q))));
          colour.push_back(k + 1);
        }
    for (std::size_t k = list.size(); k-- > 0;) {
      if (current_.size() + colour[k] <= std::max(best_.size(), exceed_)) return;
      const Vertex v = list[k];
      current_.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (empty(next)) {
        if (current_.size() > std::max(best_.size(), exceed_)) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (aborted_) return;
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  bool renumber(std::vector<Bits>& classes, Vertex v, std::size_t free) const {
    for (std::size_t k1 = 0; k1 < free && k1 < classes.size(); ++k1) {
      Vertex u = 0;
      std::size_t hits = 0;
      for (std::size_t w = 0; w < words_ && hits < 2; ++w) {
        const std::uint64_t x = classes[k1][w] & adj_[v][w];
        if (!x) continue;
        hits += static_cast<std::size_t>(std::popcount(x));
        u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      }
      if (hits != 1) continue;
      for (std::size_t k2 = 0; k2 < free && k2 < classes.size(); ++k2) {
        if (k2 == k1) continue;
        bool clash = false;
        for (std::size_t w = 0; w < words_ && !clash; ++w) clash = (classes[k2][w] & adj_[u][w]) != 0;
        if (clash) continue;
        classes[k1][u >> 6] &= ~(std::uint64_t{1} << (u & 63));
        classes[k2][u >> 6] |= std::uint64_t{1} << (u & 63);
        classes[k1][v >> 6] |= std::uint64_t{1} << (v & 63);
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::size_t exceed_;
  std::vector<Vertex> order_;
  std::vector<Bits> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t node_budget, std::size_t exceed) {
  return CliqueSearch(g, node_budget, exceed).run();
}

}  // namespace pseudoham
