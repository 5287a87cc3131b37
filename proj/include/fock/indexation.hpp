#pragma once
// The three labelings of the standard basis of the charge-s wedge space: beta sets,
// l-multipartitions and n-multipartitions, plus the charge lattices and their Weyl actions.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "partitions.hpp"

namespace fock {

struct ChargedPartition {
  Partition lambda;
  int s = 0;
  bool operator==(const ChargedPartition &) const = default;
  auto operator<=>(const ChargedPartition &) const = default;
};

struct ChargedMultipartition {
  Multipartition mp;
  Charges charges;
  bool operator==(const ChargedMultipartition &) const = default;
  auto operator<=>(const ChargedMultipartition &) const = default;
};

/// k = a + n(b-1) + n*l*m with a in [1,n], b in [1,l].
struct BeadCoords {
  int a, b, m;
};

inline BeadCoords decompose(long long k, int n, int l) {
  long long nl = static_cast<long long>(n) * l;
  int r = mod(k - 1, nl);
  int m = static_cast<int>((k - 1 - r) / nl);
  return {r % n + 1, r / n + 1, m};
}

inline long long compose(int a, int b, int m, int n, int l) {
  return a + static_cast<long long>(n) * (b - 1) + static_cast<long long>(n) * l * m;
}

/// Beads k_1 > ... > k_len with k_i = s + λ_i - i + 1; len defaults to the number of parts.
inline std::vector<long long> beta_set(const ChargedPartition &cp, int len = -1) {
  if (len < 0)
    len = static_cast<int>(cp.lambda.size());
  std::vector<long long> k(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    k[i] = cp.s + (i < static_cast<int>(cp.lambda.size()) ? cp.lambda[i] : 0) - i;
  return k;
}

/// Inverse of beta_set for a decreasing prefix of length r; the tail below k_r is implicit.
inline ChargedPartition beta_to_partition(const std::vector<long long> &k, int s) {
  Partition lam;
  for (std::size_t i = 0; i < k.size(); ++i) {
    long long part = k[i] - (s - static_cast<long long>(i));
    if (part < 0 || (i && k[i] >= k[i - 1]))
      throw std::invalid_argument("not a beta set");
    lam.push_back(static_cast<int>(part));
  }
  while (!lam.empty() && lam.back() == 0)
    lam.pop_back();
  return {lam, s};
}

namespace detail {

// Splits the explicit beads above the cut nl*M0 into L components. For the l-side,
// bead (a,b,m) goes to component b with value a + n*m; for the n-side to component a
// with value b + l*m. Below the cut every value <= width*M0 is occupied.
inline ChargedMultipartition split_beads(const ChargedPartition &cp, int n, int l, bool lside) {
  long long nl = static_cast<long long>(n) * l;
  long long tail_top = cp.s - static_cast<long long>(cp.lambda.size()); // every k <= tail_top is a bead
  int M0 = floordiv(tail_top, nl);
  long long cut = nl * M0;
  int L = lside ? l : n, width = lside ? n : l;
  std::vector<std::vector<long long>> comp(static_cast<std::size_t>(L));
  auto ks = beta_set(cp, static_cast<int>(cp.s - cut));
  for (long long k : ks) {
    auto [a, b, m] = decompose(k, n, l);
    if (lside)
      comp[b - 1].push_back(a + static_cast<long long>(n) * m);
    else
      comp[a - 1].push_back(b + static_cast<long long>(l) * m);
  }
  ChargedMultipartition out;
  long long base = static_cast<long long>(width) * M0;
  for (auto &v : comp) {
    std::sort(v.rbegin(), v.rend());
    int sb = static_cast<int>(base + static_cast<long long>(v.size()));
    out.charges.push_back(sb);
    out.mp.push_back(beta_to_partition(v, sb).lambda);
  }
  return out;
}

inline ChargedPartition merge_beads(const ChargedMultipartition &cmp, int n, int l, bool lside) {
  int L = lside ? l : n, width = lside ? n : l;
  if (static_cast<int>(cmp.mp.size()) != L || static_cast<int>(cmp.charges.size()) != L)
    throw std::invalid_argument("label has the wrong number of components");
  long long lowest = 0;
  bool first = true;
  for (int c = 0; c < L; ++c) {
    long long t = cmp.charges[c] - static_cast<long long>(cmp.mp[c].size());
    lowest = first ? t : std::min(lowest, t);
    first = false;
  }
  int M0 = floordiv(lowest, width);
  long long s = 0;
  std::vector<long long> ks;
  for (int c = 0; c < L; ++c) {
    s += cmp.charges[c];
    int len = static_cast<int>(cmp.charges[c] - static_cast<long long>(width) * M0);
    for (long long v : beta_set({cmp.mp[c], cmp.charges[c]}, len)) {
      int r = mod(v - 1, width) + 1;
      int m = static_cast<int>((v - r) / width);
      ks.push_back(lside ? compose(r, c + 1, m, n, l) : compose(c + 1, r, m, n, l));
    }
  }
  std::sort(ks.rbegin(), ks.rend());
  return beta_to_partition(ks, static_cast<int>(s));
}

} // namespace detail

inline ChargedMultipartition to_l_indexation(const ChargedPartition &cp, int n, int l) {
  return detail::split_beads(cp, n, l, true);
}
inline ChargedMultipartition to_n_indexation(const ChargedPartition &cp, int n, int l) {
  return detail::split_beads(cp, n, l, false);
}
inline ChargedPartition from_l_indexation(const ChargedMultipartition &cmp, int n, int l) {
  return detail::merge_beads(cmp, n, l, true);
}
inline ChargedPartition from_n_indexation(const ChargedMultipartition &cmp, int n, int l) {
  return detail::merge_beads(cmp, n, l, false);
}

inline ChargedMultipartition cross_convert(const ChargedMultipartition &lside, int n, int l) {
  return to_n_indexation(from_l_indexation(lside, n, l), n, l);
}
inline ChargedMultipartition cross_convert_back(const ChargedMultipartition &nside, int n, int l) {
  return to_l_indexation(from_n_indexation(nside, n, l), n, l);
}

/// A_{L,N}(s): r_1 >= ... >= r_L, r_1 - r_L <= N, sum s; lexicographic.
inline std::vector<Charges> fundamental_domain(int L, int N, int s) {
  std::vector<Charges> out;
  if (L < 1 || N < 0)
    return out;
  int lo_last = floordiv(s, L) - N - 1, hi_last = floordiv(s, L) + 1;
  Charges cur(static_cast<std::size_t>(L));
  for (int last = lo_last; last <= hi_last; ++last) {
    auto rec = [&](auto &self, int pos, int upper, long long left) -> void {
      if (pos == L - 1) {
        if (left == last && last <= upper)
          out.push_back(cur), out.back()[pos] = last;
        return;
      }
      for (int v = upper; v >= last; --v) {
        cur[pos] = v;
        self(self, pos + 1, v, left - v);
      }
    };
    rec(rec, 0, last + N, s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// θ_{L,N}(s) = (N - s_1 + s_L, s_1 - s_2, ..., s_{L-1} - s_L).
inline std::vector<mpq_class> theta(int L, int N, const std::vector<mpq_class> &s) {
  if (static_cast<int>(s.size()) != L)
    throw std::invalid_argument("theta: wrong length");
  std::vector<mpq_class> out(static_cast<std::size_t>(L));
  out[0] = N - s[0] + s[L - 1];
  for (int i = 1; i < L; ++i)
    out[i] = s[i - 1] - s[i];
  return out;
}

inline std::vector<int> theta(int L, int N, const Charges &s) {
  std::vector<int> out(static_cast<std::size_t>(L));
  out[0] = N - s[0] + s[L - 1];
  for (int i = 1; i < L; ++i)
    out[i] = s[i - 1] - s[i];
  return out;
}

/// Inverse of θ on vectors of sum N; the target sum s is needed to fix the translation.
inline std::vector<mpq_class> theta_inverse(int L, int N, const std::vector<mpq_class> &a, const mpq_class &s) {
  (void)N;
  if (static_cast<int>(a.size()) != L)
    throw std::invalid_argument("theta_inverse: wrong length");
  // s_i = s_L + sum_{j>=i} a_j  (j = i..L-1), sum s_i = s
  std::vector<mpq_class> off(static_cast<std::size_t>(L), 0);
  for (int i = L - 2; i >= 0; --i)
    off[i] = off[i + 1] + a[i + 1];
  mpq_class total = 0;
  for (auto &o : off)
    total += o;
  mpq_class last = (s - total) / L;
  std::vector<mpq_class> out(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i)
    out[i] = last + off[i];
  return out;
}

/// σ_0 rotates the ends with a ±level shift; σ_i (i >= 1) swaps entries i and i+1.
inline Charges weyl_charge_action(int i, Charges s, int L, int level) {
  if (i < 0 || i >= L || static_cast<int>(s.size()) != L)
    throw std::invalid_argument("weyl_charge_action: bad generator");
  if (L == 1)
    return s;
  if (i == 0) {
    int first = s[0];
    s[0] = s[L - 1] + level;
    s[L - 1] = first - level;
  } else {
    std::swap(s[i - 1], s[i]);
  }
  return s;
}

/// τ̇_i: s_i += n, s_{i+1} -= n (1 <= i <= l-1).
inline Charges tau_dot(int i, Charges s, int n) {
  if (i < 1 || i >= static_cast<int>(s.size()))
    throw std::invalid_argument("tau_dot: bad index");
  s[i - 1] += n;
  s[i] -= n;
  return s;
}

inline Charges tau_dot_inverse(int i, Charges s, int n) {
  s[i - 1] -= n;
  s[i] += n;
  return s;
}

/// Walks to the fundamental domain by reflections; returns the representative.
inline Charges domain_representative(Charges s, int level) {
  int L = static_cast<int>(s.size());
  for (int guard = 0; guard < 1000000; ++guard) {
    bool moved = false;
    for (int i = 1; i < L; ++i)
      if (s[i - 1] < s[i]) {
        std::swap(s[i - 1], s[i]);
        moved = true;
      }
    if (L > 1 && s[0] - s[L - 1] > level) {
      s = weyl_charge_action(0, s, L, level);
      moved = true;
    }
    if (!moved)
      return s;
  }
  throw std::runtime_error("domain_representative did not converge");
}

} // namespace fock
