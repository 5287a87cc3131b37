#pragma once
// Bar involution on a weight subspace of the wedge space and the canonical bases G^+ and G^-.
//
// Bar-invariant spanning vectors are built as ḟ-monomial . B_{-μ} . f-monomial . |∅, r⟩ with
// r in A_{l,n}(s). Vacua are bar-fixed and bar commutes with all three families, so the
// matrix C of such vectors gives the bar matrix as A = C * bar(C)^-1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "actions.hpp"
#include "indexation.hpp"
#include "laurent.hpp"
#include "partitions.hpp"
#include "wedge.hpp"
#include "weights.hpp"

namespace fock {

struct SpanningFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PositivityFailed : std::logic_error {
  using std::logic_error::logic_error;
};

/// Standard basis of F_q[s_l]<w>, most dominant big partition first.
struct WeightSpace {
  int n = 0, l = 0, s = 0;
  Charges charges;
  std::vector<int> content;
  std::vector<Multipartition> basis;
  std::vector<Partition> big;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> index_of(const Partition &lam) const {
    auto it = std::find(big.begin(), big.end(), lam);
    if (it == big.end())
      return std::nullopt;
    return static_cast<std::size_t>(it - big.begin());
  }
};

inline WeightSpace weight_space(const Charges &charges_l, const std::vector<int> &content, int n, int l) {
  if (static_cast<int>(charges_l.size()) != l || static_cast<int>(content.size()) != n)
    throw std::invalid_argument("weight_space: charges need l entries and content n entries");
  WeightSpace ws;
  ws.n = n;
  ws.l = l;
  ws.charges = charges_l;
  ws.content = content;
  ws.s = std::accumulate(charges_l.begin(), charges_l.end(), 0);
  std::vector<std::pair<Partition, Multipartition>> rows;
  for (auto &mp : enumerate_by_content(l, charges_l, n, content))
    rows.emplace_back(from_l_indexation({mp, charges_l}, n, l).lambda, mp);
  std::sort(rows.begin(), rows.end(), [](auto &x, auto &y) { return x.first > y.first; });
  for (auto &[b, mp] : rows) {
    ws.big.push_back(b);
    ws.basis.push_back(mp);
  }
  return ws;
}

inline WeightSpace weight_space(const Charges &charges_l, const Weight &w, int n, int l) {
  return weight_space(charges_l, content_of_weight(w, charges_l, n), n, l);
}

// Actions on vectors written in the big-partition labeling at charge s.

inline WedgeVector apply_f(int i, int k, const WedgeVector &v, int n, int l) {
  WedgeVector out{v.s, {}};
  for (auto &[lam, c] : v.coeffs) {
    auto cmp = to_l_indexation({lam, v.s}, n, l);
    auto img = f_action(i, FockVector::basis(cmp.mp, cmp.charges), k, n);
    for (auto &[mu, e] : img.coeffs)
      out.add(from_l_indexation({mu, cmp.charges}, n, l).lambda, c * e);
  }
  return out;
}

inline WedgeVector apply_fdot(int j, int k, const WedgeVector &v, int n, int l) {
  WedgeVector out{v.s, {}};
  for (auto &[lam, c] : v.coeffs) {
    auto cmp = to_n_indexation({lam, v.s}, n, l);
    auto img = fdot_action(j, FockVector::basis(cmp.mp, cmp.charges), k, l);
    for (auto &[mu, e] : img.coeffs)
      out.add(from_n_indexation({mu, cmp.charges}, n, l).lambda, c * e);
  }
  return out;
}

/// Divided-power word: runs (letter, exponent), applied left to right.
using PowerWord = std::vector<std::pair<int, int>>;

struct SpanningWord {
  Charges vacuum;
  PowerWord extremal;
  PowerWord f;
  Partition heisenberg;
  PowerWord fdot;
};

struct SpanOptions {
  int max_heisenberg = -1; // bound on |μ| in B_{-μ}; negative means no bound
  std::optional<std::uint64_t> shuffle_seed;
  std::size_t layer_cap = SIZE_MAX; // bound on each intermediate independent family
};

namespace detail {

inline std::optional<std::vector<int>> nonneg_coords(const Weight &diff) {
  auto c = root_coordinates(diff);
  if (!c)
    return std::nullopt;
  std::vector<int> out;
  for (auto &x : *c) {
    if (x.get_den() != 1 || x < 0)
      return std::nullopt;
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

inline Weight dotted_weight_of_big(const Partition &lam, int s, int n, int l) {
  auto cmp = to_n_indexation({lam, s}, n, l);
  return label_weight(cmp.mp, cmp.charges, l, true);
}

// Rank bookkeeping over F_p at a fixed evaluation point.
class ModRank {
public:
  static constexpr std::uint64_t P = 1000003, X = 12345;
  explicit ModRank(std::size_t dim) : dim_(dim) {}
  bool try_add(std::vector<std::uint64_t> v) {
    for (auto &[piv, row] : rows_)
      if (v[piv]) {
        std::uint64_t f = v[piv];
        for (std::size_t j = 0; j < dim_; ++j)
          v[j] = (v[j] + P - mulmod(f, row[j], P)) % P;
      }
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j]) {
        std::uint64_t inv = powmod(v[j], P - 2, P);
        for (auto &x : v)
          x = mulmod(x, inv, P);
        for (auto &[piv, row] : rows_)
          if (row[j]) {
            std::uint64_t f = row[j];
            for (std::size_t t = 0; t < dim_; ++t)
              row[t] = (row[t] + P - mulmod(f, v[t], P)) % P;
          }
        rows_.emplace_back(j, std::move(v));
        return true;
      }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

} // namespace detail

struct Splitting {
  Charges vacuum;    // r in A_{l,n}(s)
  PowerWord extremal; // ḟ divided powers taking |∅, r⟩ to |∅, start⟩
  Charges start;
  std::vector<int> f_counts;
  int heisenberg = 0;
  std::vector<int> fdot_counts;
};

/// |∅_l, t⟩ reachable from |∅_l, r⟩ by extremal ḟ strings: each step ḟ_i^(k), k = <h_i, ẇt>,
/// maps the vacuum to a single vacuum with coefficient 1, so every such vector is bar-invariant.
struct ExtremalVacuum {
  Charges vacuum, start;
  PowerWord path;
};

inline std::vector<ExtremalVacuum> extremal_vacua(const WeightSpace &ws) {
  int n = ws.n, l = ws.l;
  std::vector<ExtremalVacuum> out;
  if (ws.basis.empty())
    return out;
  Weight wd = detail::dotted_weight_of_big(ws.big[0], ws.s, n, l);
  auto empty = empty_multipartition(l);
  auto vac_big = [&](const Charges &t) { return from_l_indexation({empty, t}, n, l).lambda; };
  std::set<Charges> seen;
  for (auto &r : fundamental_domain(l, n, ws.s)) {
    std::vector<ExtremalVacuum> todo{{r, r, {}}};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      if (!seen.insert(cur.start).second)
        continue;
      Weight wd0 = detail::dotted_weight_of_big(vac_big(cur.start), ws.s, n, l);
      if (!detail::nonneg_coords(wd0 - wd))
        continue;
      out.push_back(cur);
      for (int i = 0; i < l; ++i) {
        int k = wd0.lam[i];
        if (k <= 0)
          continue;
        Charges t = weyl_charge_action(i, cur.start, l, n);
        WedgeVector v{ws.s, {}};
        v.add(vac_big(cur.start), 1);
        v = apply_fdot(i, k, v, n, l);
        if (v.coeffs.size() != 1 || v.coeffs.begin()->first != vac_big(t) || !v.coeffs.begin()->second.is_one())
          throw std::logic_error("extremal string from " + charges_string(cur.start) + " does not end at a vacuum");
        ExtremalVacuum nx{cur.vacuum, t, cur.path};
        nx.path.emplace_back(i, k);
        todo.push_back(std::move(nx));
      }
    }
  }
  return out;
}

/// Letter counts (c, m, ċ) for which ḟ^ċ B_{-m} f^c |∅, t⟩ lands in the combined weight space of ws.
inline std::vector<Splitting> splittings(const WeightSpace &ws, const SpanOptions &opt = {}) {
  int n = ws.n, l = ws.l;
  std::vector<Splitting> out;
  if (ws.basis.empty())
    return out;
  Weight w = label_weight(ws.basis[0], ws.charges, n, false);
  Weight wd = detail::dotted_weight_of_big(ws.big[0], ws.s, n, l);
  auto empty = empty_multipartition(l);
  for (auto &ev : extremal_vacua(ws)) {
    const Charges &r = ev.start;
    Weight w0 = label_weight(empty, r, n, false);
    Weight wd0 = detail::dotted_weight_of_big(from_l_indexation({empty, r}, n, l).lambda, ws.s, n, l);
    auto Np = detail::nonneg_coords(w0 - w);
    auto Nd = detail::nonneg_coords(wd0 - wd);
    if (!Np || !Nd || (*Np)[0] != (*Nd)[0])
      continue;
    int top = (*Np)[0];
    for (int m = 0; m <= top; ++m) {
      if (opt.max_heisenberg >= 0 && m > opt.max_heisenberg)
        break;
      for (int cd0 = 0; cd0 <= top - m; ++cd0) {
        int c0 = top - m - cd0;
        std::vector<int> c(static_cast<std::size_t>(n)), cd(static_cast<std::size_t>(l));
        bool ok = true;
        for (int i = 0; i < n; ++i)
          ok &= (c[i] = (*Np)[i] - cd0 - m) >= 0;
        for (int j = 0; j < l; ++j)
          ok &= (cd[j] = (*Nd)[j] - c0 - m) >= 0;
        if (ok)
          out.push_back({ev.vacuum, ev.path, r, c, m, cd});
      }
    }
  }
  // Cost grows with the number of single letters and, much faster, with B_{-m} on long wedges.
  auto cost = [&](const Splitting &x) {
    long t = static_cast<long>(n) * l * x.heisenberg;
    for (int v : x.f_counts)
      t += v;
    for (int v : x.fdot_counts)
      t += v;
    return t;
  };
  std::stable_sort(out.begin(), out.end(), [&](auto &a, auto &b) { return cost(a) < cost(b); });
  if (opt.shuffle_seed) {
    std::mt19937_64 rng(*opt.shuffle_seed);
    std::shuffle(out.begin(), out.end(), rng);
  }
  return out;
}

namespace detail {

struct Tracked {
  WedgeVector v;
  SpanningWord word;
};

inline void push_letter(PowerWord &w, int x) {
  if (!w.empty() && w.back().first == x)
    ++w.back().second;
  else
    w.emplace_back(x, 1);
}

// Keeps a mod-p independent subfamily, at most cap long.
inline std::vector<Tracked> independent(std::vector<Tracked> cand, std::size_t cap) {
  std::map<Partition, std::size_t> index;
  for (auto &t : cand)
    for (auto &kv : t.v.coeffs)
      index.try_emplace(kv.first, index.size());
  ModRank rank(index.size());
  std::vector<Tracked> out;
  for (auto &t : cand) {
    if (t.v.is_zero())
      continue;
    std::vector<std::uint64_t> ev(index.size(), 0);
    for (auto &[lam, c] : t.v.coeffs)
      ev[index.at(lam)] = c.eval_mod(ModRank::X, ModRank::P);
    if (rank.try_add(std::move(ev)))
      out.push_back(std::move(t));
    if (out.size() >= cap)
      break;
  }
  return out;
}

// Layer x holds an independent family spanning the images of all words with letter counts x.
// Single letters suffice: f_i^k and f_i^(k) differ by a nonzero scalar.
template <class Apply>
std::vector<Tracked> layered(std::vector<Tracked> start, const std::vector<int> &counts, Apply apply, PowerWord SpanningWord::*slot,
                             std::size_t cap) {
  std::map<std::vector<int>, std::vector<Tracked>> layer;
  layer[std::vector<int>(counts.size(), 0)] = independent(std::move(start), cap);
  int total = std::accumulate(counts.begin(), counts.end(), 0);
  for (int deg = 1; deg <= total; ++deg) {
    std::map<std::vector<int>, std::vector<Tracked>> next;
    for (auto &[x, fam] : layer)
      for (std::size_t i = 0; i < counts.size(); ++i) {
        if (x[i] >= counts[i])
          continue;
        auto y = x;
        ++y[i];
        auto &bucket = next[y];
        for (auto &t : fam) {
          Tracked u{apply(static_cast<int>(i), t.v), t.word};
          push_letter(u.word.*slot, static_cast<int>(i));
          bucket.push_back(std::move(u));
        }
      }
    layer.clear();
    for (auto &[y, cand] : next)
      layer[y] = independent(std::move(cand), cap);
  }
  return std::move(layer[counts]);
}

} // namespace detail

struct BarMatrix {
  WeightSpace space;
  LaurentMatrix entries;
  std::vector<SpanningWord> columns;
};

/// Bar-invariant vectors of the combined weight space, as (vector, word) pairs.
inline std::vector<std::pair<WedgeVector, SpanningWord>> spanning_vectors(const Splitting &sp, int n, int l,
                                                                          const Straightener &st, std::size_t cap) {
  int s = std::accumulate(sp.vacuum.begin(), sp.vacuum.end(), 0);
  detail::Tracked vac{{s, {}}, {sp.vacuum, sp.extremal, {}, {}, {}}};
  vac.v.add(from_l_indexation({empty_multipartition(l), sp.start}, n, l).lambda, 1);
  auto fam = detail::layered({vac}, sp.f_counts, [&](int i, const WedgeVector &v) { return apply_f(i, 1, v, n, l); },
                             &SpanningWord::f, cap);
  std::vector<detail::Tracked> mid;
  for (auto &mu : partitions_of(sp.heisenberg))
    for (auto &t : fam) {
      detail::Tracked u = t;
      for (int part : mu)
        u.v = b_operator(-part, u.v, st);
      u.word.heisenberg = mu;
      mid.push_back(std::move(u));
    }
  fam = detail::layered(std::move(mid), sp.fdot_counts,
                        [&](int j, const WedgeVector &v) { return apply_fdot(j, 1, v, n, l); }, &SpanningWord::fdot, cap);
  std::vector<std::pair<WedgeVector, SpanningWord>> out;
  for (auto &t : fam)
    out.emplace_back(std::move(t.v), std::move(t.word));
  return out;
}

inline BarMatrix bar_matrix(const WeightSpace &ws, const Straightener &st, const SpanOptions &opt = {}) {
  if (st.n() != ws.n || st.l() != ws.l)
    throw std::invalid_argument("bar_matrix: straightener built for another (n, l)");
  std::size_t N = ws.dim();
  BarMatrix out{ws, LaurentMatrix(N, N), {}};
  if (N == 0)
    return out;
  detail::ModRank rank(N);
  std::vector<WedgeVector> cols;
  std::size_t cap = opt.layer_cap;
  for (auto &sp : splittings(ws, opt)) {
    for (auto &[v, word] : spanning_vectors(sp, ws.n, ws.l, st, cap)) {
      std::vector<std::uint64_t> ev(N, 0);
      for (auto &[lam, c] : v.coeffs) {
        auto idx = ws.index_of(lam);
        if (!idx)
          throw std::logic_error("spanning vector left the weight space at " + to_string(lam));
        ev[*idx] = c.eval_mod(detail::ModRank::X, detail::ModRank::P);
      }
      if (!rank.try_add(ev))
        continue;
      cols.push_back(v);
      out.columns.push_back(word);
      if (cols.size() == N)
        break;
    }
    if (cols.size() == N)
      break;
  }
  if (cols.size() < N) {
    std::string bound = opt.max_heisenberg < 0 ? "unbounded" : std::to_string(opt.max_heisenberg);
    throw SpanningFailed("found " + std::to_string(cols.size()) + " of " + std::to_string(N) +
                         " independent bar-invariant vectors (Heisenberg bound " + bound + ")");
  }
  LaurentMatrix C(N, N);
  for (std::size_t c = 0; c < N; ++c)
    for (auto &[lam, x] : cols[c].coeffs)
      C(*ws.index_of(lam), c) = x;
  out.entries = right_divide(C, C.bar());
  return out;
}

inline BarMatrix bar_matrix(const Charges &charges_l, const Weight &w, int n, int l, const Straightener &st,
                            const SpanOptions &opt = {}) {
  return bar_matrix(weight_space(charges_l, w, n, l), st, opt);
}

inline bool is_identity(const LaurentMatrix &M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M(i, j) != LaurentPoly(i == j ? 1 : 0))
        return false;
  return true;
}

/// Entry (r, c) nonzero only if r == c (entry 1) or big[r] is strictly dominated by big[c].
inline bool is_unitriangular(const LaurentMatrix &M, const std::vector<Partition> &big) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (r == c) {
        if (!M(r, c).is_one())
          return false;
      } else if (!M(r, c).is_zero() && !dominance_less(big[r], big[c])) {
        return false;
      }
    }
  return true;
}

inline bool is_involution(const LaurentMatrix &A) { return is_identity(A * A.bar()); }

struct TransitionMatrix {
  int n = 0, l = 0, sign = 1;
  bool dotted = false;
  Charges charges;
  std::vector<int> content;
  std::vector<Multipartition> basis;
  std::vector<Partition> big;
  LaurentMatrix entries;

  std::size_t dim() const { return basis.size(); }
  const LaurentPoly &at(const Multipartition &row, const Multipartition &col) const {
    return entries(position(row), position(col));
  }
  std::size_t position(const Multipartition &mp) const {
    auto it = std::find(basis.begin(), basis.end(), mp);
    if (it == basis.end())
      throw std::out_of_range("label " + to_string(mp) + " is not in the basis");
    return static_cast<std::size_t>(it - basis.begin());
  }
  /// Same matrix with rows and columns listed in `order`.
  TransitionMatrix reordered(const std::vector<Multipartition> &order) const {
    if (order.size() != basis.size())
      throw std::invalid_argument("reordered: wrong number of labels");
    TransitionMatrix t = *this;
    std::vector<std::size_t> pos;
    for (auto &mp : order)
      pos.push_back(position(mp));
    if (std::set<std::size_t>(pos.begin(), pos.end()).size() != pos.size())
      throw std::invalid_argument("reordered: repeated label");
    t.basis = order;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      t.big[i] = big[pos[i]];
      for (std::size_t j = 0; j < pos.size(); ++j)
        t.entries(i, j) = entries(pos[i], pos[j]);
    }
    return t;
  }
};

/// Unique bar-fixed unitriangular Δ with off-diagonal entries in qZ[q] (sign +1) or q^-1 Z[q^-1].
inline LaurentMatrix lusztig_lemma(const LaurentMatrix &A, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("lusztig_lemma: sign must be +1 or -1");
  std::size_t N = A.rows();
  LaurentMatrix D = LaurentMatrix::identity(N);
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = c + 1; r < N; ++r) {
      // Δ_rc - bar(Δ_rc) = Σ_{c <= k < r} A_rk bar(Δ_kc)
      LaurentPoly rhs;
      for (std::size_t k = c; k < r; ++k)
        if (!A(r, k).is_zero() && !D(k, c).is_zero())
          rhs += A(r, k) * D(k, c).bar();
      if (!(rhs + rhs.bar()).is_zero())
        throw NoSolution("right-hand side is not bar-antisymmetric at (" + std::to_string(r) + "," +
                         std::to_string(c) + ")");
      std::map<int, mpz_class> keep;
      for (auto &[e, x] : rhs.terms())
        if (sign * e > 0)
          keep[e] = x;
      D(r, c) = LaurentPoly::from_terms(keep);
    }
  return D;
}

inline bool positive_in_q(const LaurentPoly &f) {
  for (auto &[e, c] : f.terms())
    if (c < 0)
      return false;
  return true;
}

/// Nonnegative as a polynomial in p = -q^-1.
inline bool positive_in_p(const LaurentPoly &f) {
  for (auto &[e, c] : f.terms())
    if (e > 0 || ((-e) % 2 ? -c : c) < 0)
      return false;
  return true;
}

inline TransitionMatrix canonical_basis(const BarMatrix &A, int sign) {
  const auto &ws = A.space;
  if (!is_unitriangular(A.entries, ws.big))
    throw NoSolution("bar matrix is not unitriangular");
  TransitionMatrix t;
  t.n = ws.n;
  t.l = ws.l;
  t.sign = sign;
  t.charges = ws.charges;
  t.content = ws.content;
  t.basis = ws.basis;
  t.big = ws.big;
  t.entries = lusztig_lemma(A.entries, sign);
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < t.dim(); ++c) {
      const auto &x = t.entries(r, c);
      if (x.is_zero())
        continue;
      if (sign > 0 ? !positive_in_q(x) : !positive_in_p(x))
        throw PositivityFailed("entry " + x.str() + " at (" + to_string(ws.basis[r]) + ", " + to_string(ws.basis[c]) +
                               ") is not positive");
    }
  return t;
}

inline TransitionMatrix canonical_basis(const Charges &charges_l, const std::vector<int> &content, int n, int l, int sign,
                                        const Straightener &st, const SpanOptions &opt = {}) {
  return canonical_basis(bar_matrix(weight_space(charges_l, content, n, l), st, opt), sign);
}

inline TransitionMatrix canonical_basis(const Charges &charges_l, const Weight &w, int n, int l, int sign,
                                        const Straightener &st, const SpanOptions &opt = {}) {
  return canonical_basis(charges_l, content_of_weight(w, charges_l, n), n, l, sign, st, opt);
}

/// The l-side charges and content of the weight space F_p[s_n]<ẇ>.
inline std::pair<Charges, std::vector<int>> undotted_context(const Charges &charges_n, const Weight &wdot, int n, int l) {
  auto dcont = content_of_weight(wdot, charges_n, l);
  auto labels = enumerate_by_content(n, charges_n, l, dcont);
  if (labels.empty())
    throw NotAWeightShape("dotted weight is not attained");
  auto cl = cross_convert_back({labels[0], charges_n}, n, l);
  return {cl.charges, census(cl.mp, cl.charges, n)};
}

/// Δ̇ on F_p[s_n]<ẇ>, computed on the l-side and relabeled through cross_convert.
inline TransitionMatrix dotted_transition(const Charges &charges_n, const Weight &wdot, int n, int l, int sign,
                                          const Straightener &st, const SpanOptions &opt = {}) {
  auto [sl, cont] = undotted_context(charges_n, wdot, n, l);
  TransitionMatrix t = canonical_basis(sl, cont, n, l, sign, st, opt);
  auto dcont = content_of_weight(wdot, charges_n, l);
  auto nlabels = enumerate_by_content(n, charges_n, l, dcont);
  std::set<Multipartition> expected(nlabels.begin(), nlabels.end()), seen;
  for (auto &mp : t.basis) {
    auto cn = cross_convert({mp, sl}, n, l);
    if (cn.charges != charges_n || !expected.count(cn.mp) || !seen.insert(cn.mp).second)
      throw std::logic_error("dotted relabeling is not a bijection");
    mp = cn.mp;
  }
  if (seen.size() != expected.size())
    throw std::logic_error("dotted relabeling is not onto");
  t.dotted = true;
  t.charges = charges_n;
  t.content = dcont;
  return t;
}

inline nlohmann::json to_json(const TransitionMatrix &t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["l"] = t.l;
  j["charges"] = t.charges;
  j["content"] = t.content;
  j["sign"] = t.sign;
  j["dotted"] = t.dotted;
  j["basis"] = nlohmann::json::array();
  for (auto &mp : t.basis)
    j["basis"].push_back(to_string(mp));
  j["entries"] = nlohmann::json::array();
  for (std::size_t r = 0; r < t.dim(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < t.dim(); ++c)
      row.push_back(t.entries(r, c).str());
    j["entries"].push_back(row);
  }
  return j;
}

inline std::string to_csv(const TransitionMatrix &t) {
  std::ostringstream os;
  os << "label";
  for (auto &mp : t.basis)
    os << ",\"" << to_string(mp) << '"';
  os << '\n';
  for (std::size_t r = 0; r < t.dim(); ++r) {
    os << '"' << to_string(t.basis[r]) << '"';
    for (std::size_t c = 0; c < t.dim(); ++c)
      os << ',' << t.entries(r, c).str();
    os << '\n';
  }
  return os.str();
}

inline std::string to_text(const TransitionMatrix &t) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < t.dim(); ++c) {
      std::string x = c > r ? "." : t.entries(r, c).str();
      width = std::max(width, x.size());
      cells.push_back(x);
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < t.dim(); ++r) {
    for (std::size_t c = 0; c < t.dim(); ++c) {
      const auto &x = cells[r * t.dim() + c];
      os << std::string(width - x.size() + (c ? 2 : 0), ' ') << x;
    }
    os << "   " << to_string(t.basis[r]) << '\n';
  }
  return os.str();
}

} // namespace fock
