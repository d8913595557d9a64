#pragma once

// Small simple graphs: adjacency bitmask rows, connectivity, canonical
// labelling and subgraph embedding for at most 16 vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "upb/errors.hpp"

namespace upb {

inline constexpr int kMaxLabelVertices = 16;

struct SimpleGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // one bitmask row per vertex

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices), 0) {
    if (vertices < 0 || vertices > 64) throw TooLarge("graph vertex count out of range");
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw DomainError("self-loops are not allowed");
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return (adj[u] >> v) & 1;
  }

  int degree(int v) const {
    check(v);
    return std::popcount(adj[v]);
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += std::popcount(adj[v]);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((adj[u] >> v) & 1) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  void check(int v) const {
    if (v < 0 || v >= n) throw IndexError("vertex index out of range");
  }
};

// Component id per vertex; ids numbered by ascending first vertex.
inline std::vector<int> components(const SimpleGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  int next = 0;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.adj[v];
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  std::vector<int> comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

inline SimpleGraph permuted(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph h(g.n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace detail {

// Canonical-form search: equitable refinement, individualization of the
// first non-singleton cell, pruning of branch vertices that discovered
// automorphisms (those fixing the current individualization base) map onto
// already-explored siblings, and backjumping to the deepest common ancestor
// with the first leaf whenever a leaf ties with it.  The canonical form is
// the minimum adjacency encoding over the leaves.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.n) {}

  std::string run() {
    if (n_ == 0) return std::string(1, '\0');
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    search(cells, {});
    return best_;
  }

private:
  using Partition = std::vector<std::vector<int>>;

  Partition refine(Partition p) const {
    for (;;) {
      std::vector<int> cell_of(static_cast<std::size_t>(n_));
      for (int c = 0; c < static_cast<int>(p.size()); ++c)
        for (int v : p[c]) cell_of[v] = c;
      // vertex key: (current cell, neighbour count per cell)
      std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        key[v].assign(p.size() + 1, 0);
        key[v][0] = cell_of[v];
        std::uint64_t nb = g_.adj[v];
        while (nb) {
          int w = std::countr_zero(nb);
          nb &= nb - 1;
          ++key[v][1 + cell_of[w]];
        }
      }
      std::vector<int> order(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
      });
      Partition q;
      for (int idx = 0; idx < n_; ++idx) {
        if (idx == 0 || key[order[idx]] != key[order[idx - 1]]) q.emplace_back();
        q.back().push_back(order[idx]);
      }
      if (q.size() == p.size()) return q;
      p = std::move(q);
    }
  }

  std::string encode(const std::vector<int>& order) const {
    std::string enc(1, static_cast<char>(n_));
    int acc = 0, bits = 0;
    for (int i = 0; i < n_; ++i)
      for (int k = i + 1; k < n_; ++k) {
        acc = (acc << 1) | static_cast<int>((g_.adj[order[i]] >> order[k]) & 1);
        if (++bits == 8) {
          enc.push_back(static_cast<char>(acc));
          acc = bits = 0;
        }
      }
    if (bits > 0) enc.push_back(static_cast<char>(acc << (8 - bits)));
    return enc;
  }

  static constexpr int kNoJump = 1 << 30;

  // Returns the depth to unwind to; callers abandon their remaining
  // children while their own depth exceeds it.
  int search(Partition p, const std::vector<int>& base) {
    p = refine(p);
    int target = -1;
    for (int c = 0; c < static_cast<int>(p.size()); ++c)
      if (p[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) return handle_leaf(p, base);

    // orbits of the automorphisms fixing the base pointwise
    std::vector<int> uf(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) uf[v] = v;
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto absorb = [&](std::size_t from) {
      for (std::size_t a = from; a < automorphisms_.size(); ++a) {
        const auto& h = automorphisms_[a];
        bool fixes = true;
        for (int b : base)
          if (h[b] != b) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) {
          int x = find(v), y = find(h[v]);
          if (x != y) uf[x] = y;
        }
      }
      return automorphisms_.size();
    };
    std::size_t absorbed = absorb(0);

    const int depth = static_cast<int>(base.size());
    std::vector<int> tried;
    std::vector<int> next_base = base;
    next_base.push_back(0);
    for (int v : p[target]) {
      absorbed = absorb(absorbed);  // pick up automorphisms found below
      bool seen = false;
      for (int w : tried)
        if (find(v) == find(w)) {
          seen = true;
          break;
        }
      if (seen) continue;
      tried.push_back(v);
      Partition q;
      for (int c = 0; c < static_cast<int>(p.size()); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int w : p[target])
          if (w != v) rest.push_back(w);
        q.push_back(std::move(rest));
      }
      next_base.back() = v;
      int jump = search(std::move(q), next_base);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int handle_leaf(const Partition& p, const std::vector<int>& base) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const auto& cell : p) order.push_back(cell[0]);
    std::string enc = encode(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_enc_ = enc;
      first_base_ = base;
      best_ = std::move(enc);
      return kNoJump;
    }
    if (best_.empty() || enc < best_) best_ = enc;
    if (enc != first_enc_) return kNoJump;
    // order and first_order_ realise the same adjacency matrix, so the
    // positional map between them is an automorphism; everything between
    // this leaf and its common ancestor with the first leaf maps into
    // already-explored territory
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm[first_order_[i]] = order[i];
    automorphisms_.push_back(std::move(perm));
    int common = 0;
    while (common < static_cast<int>(base.size()) &&
           common < static_cast<int>(first_base_.size()) &&
           base[common] == first_base_[common])
      ++common;
    return common;
  }

  const SimpleGraph& g_;
  int n_;
  std::string best_;
  std::string first_enc_;
  std::vector<int> first_order_;
  std::vector<int> first_base_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

// Canonical byte string: equal for two graphs exactly when they are
// isomorphic.  Vertex count is limited to 16.
inline std::string canonical_label(const SimpleGraph& g) {
  if (g.n > kMaxLabelVertices)
    throw TooLarge("canonical_label supports at most 16 vertices");
  return detail::CanonicalSearch(g).run();
}

// True when an injective vertex map carries every edge of g1 to an edge of
// g2.  Isolated vertices of g1 are unconstrained, which is how a graph on
// fewer vertices embeds after implicit padding.
inline bool subgraph_embeds(const SimpleGraph& g1, const SimpleGraph& g2) {
  if (g1.n > kMaxLabelVertices || g2.n > kMaxLabelVertices)
    throw TooLarge("subgraph_embeds supports at most 16 vertices");
  if (g1.n > g2.n || g1.edge_count() > g2.edge_count()) return false;

  std::vector<int> order(static_cast<std::size_t>(g1.n));
  for (int v = 0; v < g1.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g1.degree(a) != g1.degree(b)) return g1.degree(a) > g1.degree(b);
    return a < b;
  });

  std::vector<int> image(static_cast<std::size_t>(g1.n), -1);
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == g1.n) return true;
    int v = order[idx];
    for (int w = 0; w < g2.n; ++w) {
      if ((used >> w) & 1) continue;
      if (g2.degree(w) < g1.degree(v)) continue;
      bool ok = true;
      std::uint64_t nb = g1.adj[v];
      while (nb && ok) {
        int x = std::countr_zero(nb);
        nb &= nb - 1;
        if (image[x] >= 0 && !((g2.adj[w] >> image[x]) & 1)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used |= std::uint64_t{1} << w;
      if (self(self, idx + 1)) return true;
      image[v] = -1;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace upb
