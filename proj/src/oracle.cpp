#include "huckel/oracle.hpp"

#include <map>
#include <unordered_map>

namespace huckel {

bool is_plane_partition(const PlanePartition& p, int a, int b, int c) {
  if (int(p.size()) != a) return false;
  for (int i = 0; i < a; ++i) {
    if (int(p[std::size_t(i)].size()) != b) return false;
    for (int j = 0; j < b; ++j) {
      const int v = p[std::size_t(i)][std::size_t(j)];
      if (v < 0 || v > c) return false;
      if (j > 0 && v > p[std::size_t(i)][std::size_t(j - 1)]) return false;
      if (i > 0 && v > p[std::size_t(i - 1)][std::size_t(j)]) return false;
    }
  }
  return true;
}

BigInt count_plane_partitions(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw Error(Errc::BadRange, "box sides must be nonnegative");
  if (a * b * c > 64) throw Error(Errc::TooLarge, "plane partition enumeration limited to a*b*c <= 64");
  if (a == 0 || b == 0) return 1;
  // Weakly decreasing rows bounded by c.
  std::vector<std::vector<int>> rows;
  std::vector<int> row(static_cast<std::size_t>(b));
  auto gen = [&](auto&& self, int j, int cap) -> void {
    if (j == b) {
      rows.push_back(row);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      row[std::size_t(j)] = v;
      self(self, j + 1, v);
    }
  };
  gen(gen, 0, c);
  auto below = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int j = 0; j < b; ++j) {
      if (lo[std::size_t(j)] > hi[std::size_t(j)]) return false;
    }
    return true;
  };
  // ways[r] = partitions whose current last row is rows[r]
  std::vector<BigInt> ways(rows.size(), BigInt(1));
  for (int i = 1; i < a; ++i) {
    std::vector<BigInt> next(rows.size(), BigInt(0));
    for (std::size_t lo = 0; lo < rows.size(); ++lo) {
      for (std::size_t hi = 0; hi < rows.size(); ++hi) {
        if (below(rows[lo], rows[hi])) next[lo] += ways[hi];
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

SimpleGraph induced_subgraph(const TriangleGraph& g, const std::vector<Index>& removed) {
  std::vector<int> label(std::size_t(g.vertex_count()), -1);
  SimpleGraph out;
  for (Index v = 0; v < g.vertex_count(); ++v) {
    bool gone = false;
    for (auto r : removed) gone = gone || r == v;
    if (!gone) label[std::size_t(v)] = out.size++;
  }
  for (const auto& [a, b] : g.edges()) {
    const int la = label[std::size_t(a)], lb = label[std::size_t(b)];
    if (la >= 0 && lb >= 0) out.edges.emplace_back(la, lb);
  }
  return out;
}

BigInt count_matchings(const SimpleGraph& g) {
  if (g.size > 32) throw Error(Errc::TooLarge, "matching count limited to 32 vertices");
  if (g.size % 2) return 0;
  std::vector<std::uint32_t> adj(std::size_t(g.size), 0);
  for (const auto& [a, b] : g.edges) {
    adj[std::size_t(a)] |= 1u << b;
    adj[std::size_t(b)] |= 1u << a;
  }
  std::unordered_map<std::uint32_t, BigInt> memo;
  auto rec = [&](auto&& self, std::uint32_t left) -> BigInt {
    if (!left) return 1;
    if (auto it = memo.find(left); it != memo.end()) return it->second;
    const int v = __builtin_ctz(left);
    BigInt total = 0;
    for (std::uint32_t cand = adj[std::size_t(v)] & left; cand; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      total += self(self, left & ~(1u << v) & ~(1u << w));
    }
    memo.emplace(left, total);
    return total;
  };
  const std::uint32_t all = g.size == 32 ? ~0u : (1u << g.size) - 1;
  return rec(rec, all);
}

SquareAudit square_coefficient_audit(const MultiPoly& p) {
  SquareAudit audit;
  for (const auto& t : p.terms()) {
    SquareEntry e{t.mono.to_string(), t.coef, std::nullopt};
    if (t.coef > 0) e.root = exact_sqrt(t.coef);
    audit.all_squares = audit.all_squares && e.root.has_value();
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

}  // namespace huckel
