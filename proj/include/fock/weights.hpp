#pragma once
// Affine type A weight lattices (undotted for sl_n at level l, dotted for sl_l at level n),
// the invariant form, and the weight formulas for standard basis vectors.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indexation.hpp"
#include "partitions.hpp"

namespace fock {

struct NonIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAWeightShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Σ lam[i] Λ_i + d δ. `dotted` only affects printing.
struct Weight {
  std::vector<int> lam;
  mpq_class d = 0;
  bool dotted = false;

  int rank() const { return static_cast<int>(lam.size()); }
  bool operator==(const Weight &o) const { return lam == o.lam && d == o.d; }
  Weight operator+(const Weight &o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < lam.size(); ++i)
      r.lam[i] += o.lam.at(i);
    r.d += o.d;
    return r;
  }
  Weight operator-(const Weight &o) const { return *this + o * -1; }
  Weight operator*(int k) const {
    Weight r = *this;
    for (auto &x : r.lam)
      x *= k;
    r.d *= k;
    return r;
  }
  int level() const {
    int t = 0;
    for (int x : lam)
      t += x;
    return t;
  }
};

inline Weight zero_weight(int n, bool dotted = false) { return {std::vector<int>(static_cast<std::size_t>(n), 0), 0, dotted}; }

inline Weight fundamental(int i, int n, bool dotted = false) {
  Weight w = zero_weight(n, dotted);
  w.lam[mod(i, n)] = 1;
  return w;
}

inline Weight delta_weight(int n, bool dotted = false) {
  Weight w = zero_weight(n, dotted);
  w.d = 1;
  return w;
}

inline Weight simple_root(int i, int n, bool dotted = false) {
  Weight w = zero_weight(n, dotted);
  w.lam[mod(i, n)] += 2;
  w.lam[mod(i - 1, n)] -= 1;
  w.lam[mod(i + 1, n)] -= 1;
  if (mod(i, n) == 0)
    w.d = 1;
  return w;
}

/// (Λ_i, Λ_j) = min(i,j) - ij/n, (Λ_i, δ) = 1, (δ, δ) = 0.
inline mpq_class inner_product(const Weight &u, const Weight &v) {
  int n = u.rank();
  if (v.rank() != n)
    throw std::invalid_argument("inner_product: rank mismatch");
  mpq_class t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u.lam[i] && v.lam[j])
        t += mpq_class(u.lam[i]) * v.lam[j] * (mpq_class(std::min(i, j)) - mpq_class(i * j, n));
  t += u.d * v.level() + v.d * u.level();
  t.canonicalize();
  return t;
}

inline mpq_class delta_charge_rational(const Charges &s, int N) {
  mpq_class t = 0;
  for (int sb : s) {
    int r = mod(sb, N);
    t += mpq_class(static_cast<long>(sb) * sb, N) - sb - (mpq_class(static_cast<long>(r) * r, N) - r);
  }
  t /= 2;
  t.canonicalize();
  return t;
}

/// Δ(s, N); integral by a theorem, asserted here.
inline long delta_charge(const Charges &s, int N) {
  mpq_class t = delta_charge_rational(s, N);
  if (t.get_den() != 1)
    throw NonIntegral("delta_charge is not an integer: " + t.get_str());
  return t.get_num().get_si();
}

inline long d_shift(const Charges &a, const Charges &b, int n) { return delta_charge(a, n) - delta_charge(b, n); }

/// Weight of |λ, s⟩ for L-multipartitions over residues mod N (N = n on the l-side, N = l dotted).
inline Weight label_weight(const Multipartition &mp, const Charges &s, int N, bool dotted) {
  Weight w = zero_weight(N, dotted);
  for (int sb : s)
    w.lam[mod(sb, N)] += 1;
  w.d = -mpq_class(delta_charge(s, N));
  auto cen = census(mp, s, N);
  for (int i = 0; i < N; ++i)
    if (cen[i])
      w = w - simple_root(i, N, dotted) * cen[i];
  return w;
}

inline Weight wt_l(const ChargedMultipartition &cmp, int n) { return label_weight(cmp.mp, cmp.charges, n, false); }

inline Weight wt_dot(const ChargedMultipartition &nside, int l) { return label_weight(nside.mp, nside.charges, l, true); }

/// Dotted weight read directly off an l-side label.
inline Weight wt_dot_of_l_label(const ChargedMultipartition &cmp, int n, int l) {
  const auto &s = cmp.charges;
  Weight w = zero_weight(l, true);
  w.lam[0] = n - s.front() + s.back();
  for (int i = 1; i < l; ++i)
    w.lam[i] = s[i - 1] - s[i];
  w.d = -mpq_class(delta_charge(s, n) + census(cmp.mp, s, n)[0]);
  return w;
}

/// Undotted weight read off an n-side label.
inline Weight wt_of_n_label(const ChargedMultipartition &cmp, int n, int l) {
  const auto &s = cmp.charges;
  Weight w = zero_weight(n, false);
  w.lam[0] = l - s.front() + s.back();
  for (int i = 1; i < n; ++i)
    w.lam[i] = s[i - 1] - s[i];
  w.d = -mpq_class(delta_charge(s, l) + census(cmp.mp, s, l)[0]);
  return w;
}

namespace detail {
// Exact solve of an over-determined rational system; nullopt if inconsistent or underdetermined.
inline std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b) {
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && A[i][c] != 0) {
        mpq_class f = A[i][c] / A[r][c];
        for (std::size_t k = c; k < cols; ++k)
          A[i][k] -= f * A[r][k];
        b[i] -= f * b[r];
      }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0)
      return std::nullopt;
  if (r != cols)
    return std::nullopt;
  std::vector<mpq_class> x(cols);
  for (std::size_t i = 0; i < r; ++i)
    x[pivcol[i]] = b[i] / A[i][pivcol[i]];
  return x;
}
} // namespace detail

/// Coefficients c with diff = Σ c_i α_i (exact rationals), if any.
inline std::optional<std::vector<mpq_class>> root_coordinates(const Weight &diff) {
  int n = diff.rank();
  std::vector<std::vector<mpq_class>> A(static_cast<std::size_t>(n + 1), std::vector<mpq_class>(static_cast<std::size_t>(n)));
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    auto a = simple_root(i, n);
    for (int j = 0; j < n; ++j)
      A[j][i] = a.lam[j];
    A[n][i] = a.d;
  }
  for (int j = 0; j < n; ++j)
    b[j] = diff.lam[j];
  b[n] = diff.d;
  return detail::solve_exact(A, b);
}

/// N_i(w; s) with wt(∅, s) - w = Σ N_i α_i.
inline std::vector<int> content_of_weight(const Weight &w, const Charges &s, int N) {
  Weight top = label_weight(empty_multipartition(static_cast<int>(s.size())), s, N, w.dotted);
  auto c = root_coordinates(top - w);
  if (!c)
    throw NotAWeightShape("weight is not wt(empty) minus a root combination");
  std::vector<int> out;
  for (auto &x : *c) {
    if (x.get_den() != 1 || x < 0)
      throw NotAWeightShape("root coordinates are not nonnegative integers");
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

inline Weight weight_of_content(const Charges &s, int N, const std::vector<int> &cont, bool dotted = false) {
  Weight w = label_weight(empty_multipartition(static_cast<int>(s.size())), s, N, dotted);
  for (int i = 0; i < N; ++i)
    w = w - simple_root(i, N, dotted) * cont.at(i);
  return w;
}

inline bool weight_is_attained(const Charges &s, const Weight &w, int N) {
  try {
    auto cont = content_of_weight(w, s, N);
    return content_is_attained(static_cast<int>(s.size()), s, N, cont);
  } catch (const NotAWeightShape &) {
    return false;
  }
}

struct DotCorrespondence {
  Charges charges_n;
  Weight wdot;
};

/// The unique (s_n, ẇ) with F_q[s_l]⟨w⟩ = F_p[s_n]⟨ẇ⟩.
inline DotCorrespondence corresponding_dot(const Charges &s_l, const Weight &w, int n, int l) {
  long s = 0;
  for (int x : s_l)
    s += x;
  std::vector<mpq_class> a(w.lam.begin(), w.lam.end());
  auto sn = theta_inverse(n, l, a, mpq_class(s));
  DotCorrespondence out;
  for (auto &x : sn) {
    if (x.get_den() != 1)
      throw NonIntegral("corresponding_dot: non-integral n-charges");
    out.charges_n.push_back(static_cast<int>(x.get_num().get_si()));
  }
  auto cont = content_of_weight(w, s_l, n);
  out.wdot = zero_weight(l, true);
  out.wdot.lam[0] = n + s_l.back() - s_l.front();
  for (int i = 1; i < l; ++i)
    out.wdot.lam[i] = s_l[i - 1] - s_l[i];
  out.wdot.d = -mpq_class(delta_charge(s_l, n) + cont[0]);
  return out;
}

/// σ_i.w = w - (w, α_i) α_i.
inline Weight weyl_reflect(const Weight &w, int i) {
  int n = w.rank();
  return w - simple_root(i, n, w.dotted) * w.lam[mod(i, n)];
}

inline std::string to_string(const Weight &w) {
  std::string L = w.dotted ? "L." : "L", D = w.dotted ? "d." : "d";
  std::string out;
  auto term = [&](const std::string &coef_abs, bool neg, const std::string &sym) {
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coef_abs.empty() ? sym : coef_abs + "*" + sym;
  };
  for (int i = 0; i < w.rank(); ++i) {
    int c = w.lam[i];
    if (!c)
      continue;
    int a = c < 0 ? -c : c;
    term(a == 1 ? "" : std::to_string(a), c < 0, L + std::to_string(i));
  }
  if (w.d != 0) {
    mpq_class a = abs(w.d);
    term(a == 1 ? "" : a.get_str(), w.d < 0, D);
  }
  return out.empty() ? "0" : out;
}

} // namespace fock
