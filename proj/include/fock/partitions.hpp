#pragma once
// Partitions, multipartitions and the node combinatorics of their Young diagrams.

#include <algorithm>
#include <cctype>
#include <tuple>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fock {

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
using Charges = std::vector<int>;

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAChain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// 1-based (row, column, component).
struct Node {
  int i = 1, j = 1, b = 1;
  auto operator<=>(const Node &) const = default;
};

inline int mod(long long a, long long n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline int floordiv(long long a, long long n) {
  long long q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0)))
    --q;
  return static_cast<int>(q);
}

inline int size(const Partition &p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int size(const Multipartition &mp) {
  int t = 0;
  for (const auto &p : mp)
    t += size(p);
  return t;
}

inline bool is_partition(const Partition &p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0)
      return false;
    if (k + 1 < p.size() && p[k] < p[k + 1])
      return false;
  }
  return true;
}

inline Multipartition empty_multipartition(int L) { return Multipartition(static_cast<std::size_t>(L)); }

inline int content(const Node &g, const Charges &s) { return s[g.b - 1] + g.j - g.i; }

inline int residue(const Node &g, const Charges &s, int n) { return mod(content(g, s), n); }

/// Strict total order: content first, then component.
inline bool node_order_less(const Node &g, const Node &h, const Charges &s) {
  int cg = content(g, s), ch = content(h, s);
  if (cg != ch)
    return cg < ch;
  return g.b < h.b;
}

inline std::vector<Node> addable_nodes(const Multipartition &mp) {
  std::vector<Node> out;
  for (int b = 0; b < static_cast<int>(mp.size()); ++b) {
    const auto &p = mp[b];
    int rows = static_cast<int>(p.size());
    for (int r = 0; r <= rows; ++r) {
      int len = r < rows ? p[r] : 0;
      if (r == 0 || p[r - 1] > len)
        out.push_back({r + 1, len + 1, b + 1});
    }
  }
  return out;
}

inline std::vector<Node> removable_nodes(const Multipartition &mp) {
  std::vector<Node> out;
  for (int b = 0; b < static_cast<int>(mp.size()); ++b) {
    const auto &p = mp[b];
    int rows = static_cast<int>(p.size());
    for (int r = 0; r < rows; ++r)
      if (r + 1 == rows || p[r + 1] < p[r])
        out.push_back({r + 1, p[r], b + 1});
  }
  return out;
}

inline std::vector<Node> nodes_of(const Multipartition &mp) {
  std::vector<Node> out;
  for (int b = 0; b < static_cast<int>(mp.size()); ++b)
    for (int r = 0; r < static_cast<int>(mp[b].size()); ++r)
      for (int c = 1; c <= mp[b][r]; ++c)
        out.push_back({r + 1, c, b + 1});
  return out;
}

inline std::vector<Node> filter_residue(const std::vector<Node> &v, const Charges &s, int n, int c) {
  std::vector<Node> out;
  for (const auto &g : v)
    if (residue(g, s, n) == c)
      out.push_back(g);
  return out;
}

inline std::vector<Node> addable_nodes(const Multipartition &mp, const Charges &s, int n, int c) {
  return filter_residue(addable_nodes(mp), s, n, c);
}
inline std::vector<Node> removable_nodes(const Multipartition &mp, const Charges &s, int n, int c) {
  return filter_residue(removable_nodes(mp), s, n, c);
}

inline bool contains(const Multipartition &mp, const Node &g) {
  if (g.b < 1 || g.b > static_cast<int>(mp.size()))
    return false;
  const auto &p = mp[g.b - 1];
  return g.i >= 1 && g.i <= static_cast<int>(p.size()) && g.j >= 1 && g.j <= p[g.i - 1];
}

/// Adds nodes in any order that keeps every step a partition.
inline Multipartition add_nodes(Multipartition mp, std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const Node &a, const Node &b) {
    return std::tie(a.b, a.i, a.j) < std::tie(b.b, b.i, b.j);
  });
  for (const auto &g : nodes) {
    auto &p = mp.at(g.b - 1);
    if (g.i - 1 < static_cast<int>(p.size())) {
      if (p[g.i - 1] != g.j - 1)
        throw std::invalid_argument("node not addable");
      ++p[g.i - 1];
    } else {
      if (static_cast<int>(p.size()) != g.i - 1 || g.j != 1)
        throw std::invalid_argument("node not addable");
      p.push_back(1);
    }
  }
  return mp;
}

inline Multipartition remove_nodes(Multipartition mp, std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const Node &a, const Node &b) {
    return std::tie(a.b, b.i, b.j) < std::tie(b.b, a.i, a.j);
  });
  for (const auto &g : nodes) {
    auto &p = mp.at(g.b - 1);
    if (g.i - 1 >= static_cast<int>(p.size()) || p[g.i - 1] != g.j)
      throw std::invalid_argument("node not removable");
    if (--p[g.i - 1] == 0)
      p.pop_back();
  }
  return mp;
}

struct NodeStats {
  int N = 0, A = 0, R = 0, M = 0;
};

inline NodeStats node_stats(const Multipartition &mp, const Charges &s, int n, int c) {
  NodeStats st;
  for (const auto &g : nodes_of(mp))
    if (residue(g, s, n) == c)
      ++st.N;
  st.A = static_cast<int>(addable_nodes(mp, s, n, c).size());
  st.R = static_cast<int>(removable_nodes(mp, s, n, c).size());
  st.M = st.A - st.R;
  return st;
}

/// Residue census (N_0,...,N_{n-1}).
inline std::vector<int> census(const Multipartition &mp, const Charges &s, int n) {
  std::vector<int> N(static_cast<std::size_t>(n), 0);
  for (const auto &g : nodes_of(mp))
    ++N[residue(g, s, n)];
  return N;
}

/// M^> and M^< for src ->^{c:k} dst.
inline std::pair<int, int> m_statistics(const Multipartition &src, const Multipartition &dst, const Charges &s, int n,
                                        int c) {
  if (src.size() != dst.size())
    throw NotAChain("component count differs");
  std::vector<Node> added;
  for (const auto &g : nodes_of(src))
    if (!contains(dst, g))
      throw NotAChain("source not contained in target");
  for (const auto &g : nodes_of(dst))
    if (!contains(src, g)) {
      if (residue(g, s, n) != c)
        throw NotAChain("added node of wrong residue");
      added.push_back(g);
    }
  auto add_dst = addable_nodes(dst, s, n, c);
  auto rem_src = removable_nodes(src, s, n, c);
  auto add_src = addable_nodes(src, s, n, c);
  auto rem_dst = removable_nodes(dst, s, n, c);
  int gt = 0, lt = 0;
  for (const auto &g : added) {
    for (const auto &b : add_dst)
      gt += node_order_less(g, b, s);
    for (const auto &b : rem_src)
      gt -= node_order_less(g, b, s);
    for (const auto &b : add_src)
      lt += node_order_less(b, g, s);
    for (const auto &b : rem_dst)
      lt -= node_order_less(b, g, s);
  }
  return {gt, lt};
}

/// Strict dominance λ ◁ μ.
inline bool dominance_less(const Partition &lam, const Partition &mu) {
  if (size(lam) != size(mu))
    throw SizeMismatch("dominance between partitions of different sizes");
  if (lam == mu)
    return false;
  int a = 0, b = 0;
  std::size_t len = std::max(lam.size(), mu.size());
  for (std::size_t k = 0; k < len; ++k) {
    a += k < lam.size() ? lam[k] : 0;
    b += k < mu.size() ? mu[k] : 0;
    if (a > b)
      return false;
  }
  return true;
}

/// Partitions of k, reverse lexicographic (largest first part first).
inline std::vector<Partition> partitions_of(int k, int maxpart = -1) {
  if (maxpart < 0)
    maxpart = k;
  std::vector<Partition> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (int p = std::min(k, maxpart); p >= 1; --p)
    for (auto &rest : partitions_of(k - p, p)) {
      Partition q{p};
      q.insert(q.end(), rest.begin(), rest.end());
      out.push_back(std::move(q));
    }
  return out;
}

/// All L-multipartitions of total size k: graded by component sizes, then lexicographic.
inline std::vector<Multipartition> multipartitions_of(int k, int L) {
  std::vector<Multipartition> out;
  std::vector<int> comp(static_cast<std::size_t>(L), 0);
  auto rec_sizes = [&](auto &self, int idx, int left) -> void {
    if (idx == L - 1) {
      comp[idx] = left;
      std::vector<std::vector<Partition>> opts;
      for (int c : comp)
        opts.push_back(partitions_of(c));
      Multipartition cur(static_cast<std::size_t>(L));
      auto rec = [&](auto &me, int b) -> void {
        if (b == L) {
          out.push_back(cur);
          return;
        }
        for (const auto &p : opts[b]) {
          cur[b] = p;
          me(me, b + 1);
        }
      };
      rec(rec, 0);
      return;
    }
    for (int c = left; c >= 0; --c) {
      comp[idx] = c;
      self(self, idx + 1, left - c);
    }
  };
  if (L <= 0)
    return out;
  rec_sizes(rec_sizes, 0, k);
  return out;
}

namespace detail {

/// Visits every L-multipartition with residue census `cont`, building rows top-down and pruning on the
/// remaining budget. `visit` returns false to stop early.
template <class F>
bool visit_by_content(int L, const Charges &s, int n, const std::vector<int> &cont, F &&visit) {
  int total = 0;
  for (int c : cont) {
    if (c < 0)
      throw std::invalid_argument("negative content");
    total += c;
  }
  std::vector<int> left = cont;
  Multipartition cur(static_cast<std::size_t>(L));
  auto take_row = [&](int b, int row, int len, int sign) {
    for (int j = 1; j <= len; ++j)
      left[mod(s[b] + j - row, n)] -= sign;
  };
  auto row_fits = [&](int b, int row, int len) {
    bool ok = true;
    take_row(b, row, len, 1);
    for (int x : left)
      ok = ok && x >= 0;
    take_row(b, row, len, -1);
    return ok;
  };
  // rec over (component b, next row index, max row length, nodes still to place)
  auto rec = [&](auto &self, int b, int row, int maxlen, int todo) -> bool {
    if (todo == 0) {
      for (int x : left)
        if (x != 0)
          return true;
      return visit(static_cast<const Multipartition &>(cur));
    }
    if (b == L)
      return true;
    if (b + 1 < L && !self(self, b + 1, 1, total, todo))
      return false;
    for (int len = std::min(maxlen, todo); len >= 1; --len) {
      if (!row_fits(b, row, len))
        continue;
      take_row(b, row, len, 1);
      cur[b].push_back(len);
      bool go = self(self, b, row + 1, len, todo - len);
      cur[b].pop_back();
      take_row(b, row, len, -1);
      if (!go)
        return false;
    }
    return true;
  };
  return rec(rec, 0, 1, total, total);
}

} // namespace detail

inline std::vector<Multipartition> enumerate_by_content(int L, const Charges &s, int n, const std::vector<int> &cont) {
  std::vector<Multipartition> out;
  if (L <= 0)
    return out;
  detail::visit_by_content(L, s, n, cont, [&](const Multipartition &mp) {
    out.push_back(mp);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool content_is_attained(int L, const Charges &s, int n, const std::vector<int> &cont) {
  if (L <= 0)
    return false;
  return !detail::visit_by_content(L, s, n, cont, [](const Multipartition &) { return false; });
}

// ---- text forms ----

inline std::string to_string(const Partition &p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k)
    s += (k ? "," : "") + std::to_string(p[k]);
  return s + "]";
}

inline std::string to_string(const Multipartition &mp) {
  std::string s = "[";
  for (std::size_t k = 0; k < mp.size(); ++k)
    s += (k ? "," : "") + to_string(mp[k]);
  return s + "]";
}

inline std::string to_string(const Node &g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + "," + std::to_string(g.b) + ")";
}

/// Charge vectors print as tuples.
inline std::string charges_string(const Charges &s) {
  std::string t = "(";
  for (std::size_t k = 0; k < s.size(); ++k)
    t += (k ? "," : "") + std::to_string(s[k]);
  return t + ")";
}

namespace detail {
struct Cursor {
  const std::string &t;
  std::size_t pos = 0;
  void skip() {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < t.size() && t[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' in \"" + t + "\"");
  }
  int integer() {
    skip();
    std::size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+'))
      ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
      ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
      throw ParseError("expected integer in \"" + t + "\"");
    return std::stoi(t.substr(start, pos - start));
  }
  void done() {
    skip();
    if (pos != t.size())
      throw ParseError("trailing characters in \"" + t + "\"");
  }
};

inline std::vector<int> int_list(Cursor &c, char open, char close) {
  std::vector<int> v;
  c.expect(open);
  if (c.eat(close))
    return v;
  do
    v.push_back(c.integer());
  while (c.eat(','));
  c.expect(close);
  return v;
}
} // namespace detail

inline Partition parse_partition(const std::string &text) {
  detail::Cursor c{text};
  auto p = detail::int_list(c, '[', ']');
  c.done();
  if (!is_partition(p))
    throw ParseError("not a partition: " + text);
  return p;
}

inline Multipartition parse_multipartition(const std::string &text) {
  detail::Cursor c{text};
  Multipartition mp;
  c.expect('[');
  if (!c.eat(']')) {
    do {
      auto p = detail::int_list(c, '[', ']');
      if (!is_partition(p))
        throw ParseError("not a partition inside " + text);
      mp.push_back(p);
    } while (c.eat(','));
    c.expect(']');
  }
  c.done();
  return mp;
}

/// Accepts `(0,2,-1)`, `[0,2,-1]` or bare `0,2,-1`.
inline Charges parse_charges(const std::string &text) {
  detail::Cursor c{text};
  c.skip();
  Charges v;
  if (c.pos < text.size() && (text[c.pos] == '(' || text[c.pos] == '[')) {
    char open = text[c.pos];
    v = detail::int_list(c, open, open == '(' ? ')' : ']');
  } else {
    do
      v.push_back(c.integer());
    while (c.eat(','));
  }
  c.done();
  return v;
}

} // namespace fock
