#include "zhmat/bitgraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "zhmat/error.hpp"

namespace zhmat {

BitGraph::BitGraph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), bits_(n_ * words_, 0) {}

void BitGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v)
    return;
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t BitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w)
    d += std::popcount(row(u)[w]);
  return d;
}

BitGraph BitGraph::complement() const {
  BitGraph c(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!has_edge(u, v))
        c.add_edge(u, v);
  return c;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits &b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Search over a relabelled copy of the graph where label order is the
// processing order.
class CliqueSearch {
public:
  explicit CliqueSearch(const BitGraph &g) : n_(g.size()), words_(g.words()), relabelled_(n_) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (g.has_edge(order_[a], order_[b]))
          relabelled_.add_edge(a, b);
  }

  std::vector<std::size_t> maximum() {
    enumerate_ = false;
    best_.clear();
    run();
    return to_original(best_);
  }

  std::vector<std::vector<std::size_t>> of_size(std::size_t k, std::size_t limit) {
    enumerate_ = true;
    target_ = k;
    limit_ = limit;
    found_.clear();
    if (k == 0)
      return {{}};
    run();
    std::vector<std::vector<std::size_t>> out;
    for (const auto &c : found_)
      out.push_back(to_original(c));
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  void run() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v)
      all[v >> 6] |= std::uint64_t{1} << (v & 63);
    current_.clear();
    if (n_ > 0)
      expand(all);
  }

  // Greedy sequential colouring of P; returns vertices in colour order with
  // their colour numbers.
  void colour(const Bits &p, std::vector<std::size_t> &order, std::vector<std::size_t> &bound) {
    Bits uncoloured = p;
    std::size_t c = 0;
    while (any(uncoloured)) {
      ++c;
      Bits q = uncoloured;
      while (any(q)) {
        std::size_t w = 0;
        while (q[w] == 0)
          ++w;
        const std::size_t v = w * 64 + std::countr_zero(q[w]);
        q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        uncoloured[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        const std::uint64_t *nv = relabelled_.row(v);
        for (std::size_t x = 0; x < words_; ++x)
          q[x] &= ~nv[x];
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand(Bits p) {
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (enumerate_) {
        if (current_.size() + bound[idx] < target_)
          return;
      } else if (current_.size() + bound[idx] <= best_.size()) {
        return;
      }
      const std::size_t v = order[idx];
      current_.push_back(v);
      if (enumerate_ && current_.size() == target_) {
        found_.push_back(current_);
        if (found_.size() > limit_)
          throw BudgetExceeded("clique enumeration exceeded its limit");
      } else {
        Bits next(words_);
        const std::uint64_t *nv = relabelled_.row(v);
        for (std::size_t x = 0; x < words_; ++x)
          next[x] = p[x] & nv[x];
        if (any(next))
          expand(std::move(next));
        else if (!enumerate_ && current_.size() > best_.size())
          best_ = current_;
      }
      current_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  std::vector<std::size_t> to_original(const std::vector<std::size_t> &c) const {
    std::vector<std::size_t> out;
    for (std::size_t v : c)
      out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_, words_;
  BitGraph relabelled_;
  std::vector<std::size_t> order_;
  bool enumerate_ = false;
  std::size_t target_ = 0, limit_ = 0;
  std::vector<std::size_t> current_, best_;
  std::vector<std::vector<std::size_t>> found_;
};

} // namespace

std::vector<std::size_t> maximum_clique(const BitGraph &g) { return CliqueSearch(g).maximum(); }

std::vector<std::vector<std::size_t>> cliques_of_size(const BitGraph &g, std::size_t k,
                                                      std::size_t limit) {
  return CliqueSearch(g).of_size(k, limit);
}

} // namespace zhmat
