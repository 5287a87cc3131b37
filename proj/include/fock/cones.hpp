#pragma once
// Coordinates x = φ(s) on a translation lattice of multi-charges, the Cartan cones
// C_b = {Ax >= b} and C'_b = {Ax <= b}, Z-connectivity, and the stabilization constants.

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "indexation.hpp"
#include "partitions.hpp"
#include "weights.hpp"

namespace fock {

struct ResidueMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using QVector = std::vector<mpq_class>;
using ZVector = std::vector<long>;
using QMatrix = std::vector<QVector>;

inline mpz_class ceil_q(const mpq_class &x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}
inline mpz_class floor_q(const mpq_class &x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

/// x_i = (1/n) Σ_{j<=i} (s_j - r_j), 1 <= i <= l-1.
inline QVector phi(const Charges &s, const Charges &r, int n) {
  if (s.size() != r.size() || s.empty())
    throw std::invalid_argument("phi: length mismatch");
  long ds = 0;
  for (std::size_t j = 0; j < s.size(); ++j)
    ds += s[j] - r[j];
  if (ds != 0)
    throw std::invalid_argument("phi: charges must have the same sum");
  QVector x;
  long acc = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    acc += s[i] - r[i];
    x.push_back(mpq_class(acc, n));
    x.back().canonicalize();
  }
  return x;
}

/// s_i = n(x_i - x_{i-1}) + r_i with x_0 = x_l = 0.
inline QVector psi_rational(const QVector &x, const Charges &r, int n) {
  std::size_t l = r.size();
  if (x.size() + 1 != l)
    throw std::invalid_argument("psi: length mismatch");
  QVector s(l);
  for (std::size_t i = 0; i < l; ++i) {
    mpq_class cur = i < x.size() ? x[i] : mpq_class(0);
    mpq_class prev = i ? x[i - 1] : mpq_class(0);
    s[i] = n * (cur - prev) + r[i];
    s[i].canonicalize();
  }
  return s;
}

inline Charges psi(const QVector &x, const Charges &r, int n) {
  Charges out;
  for (auto &v : psi_rational(x, r, n)) {
    if (v.get_den() != 1)
      throw NonIntegral("psi: non-integral charge");
    out.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return out;
}

inline Charges psi(const ZVector &x, const Charges &r, int n) {
  QVector q(x.begin(), x.end());
  return psi(q, r, n);
}

inline bool is_integral(const QVector &x) {
  return std::all_of(x.begin(), x.end(), [](const mpq_class &v) { return v.get_den() == 1; });
}

inline ZVector to_integers(const QVector &x) {
  ZVector out;
  for (auto &v : x) {
    if (v.get_den() != 1)
      throw NonIntegral("vector is not integral");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

/// The (l-1)x(l-1) tridiagonal 2/-1 matrix and its exact inverse.
struct CartanData {
  int l = 0;
  QMatrix A, inverse;

  explicit CartanData(int l_) : l(l_) {
    if (l < 1)
      throw std::invalid_argument("CartanData: l must be positive");
    int m = l - 1;
    A.assign(m, QVector(m, 0));
    inverse.assign(m, QVector(m, 0));
    for (int i = 0; i < m; ++i) {
      A[i][i] = 2;
      if (i + 1 < m)
        A[i][i + 1] = A[i + 1][i] = -1;
      for (int j = 0; j < m; ++j) {
        int a = std::min(i, j) + 1, b = std::max(i, j) + 1;
        inverse[i][j] = mpq_class(a * (l - b), l);
        inverse[i][j].canonicalize();
      }
    }
  }
  static QVector apply(const QMatrix &M, const QVector &x) {
    QVector y(M.size(), 0);
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        y[i] += M[i][j] * x[j];
    return y;
  }
  QVector times(const QVector &x) const { return apply(A, x); }
  QVector solve(const QVector &b) const { return apply(inverse, b); }
  /// det via fraction-free elimination; equals l.
  mpq_class det() const {
    QMatrix M = A;
    mpq_class d = 1;
    for (std::size_t c = 0; c < M.size(); ++c) {
      d *= M[c][c];
      for (std::size_t r = c + 1; r < M.size(); ++r) {
        mpq_class f = M[r][c] / M[c][c];
        for (std::size_t k = c; k < M.size(); ++k)
          M[r][k] -= f * M[c][k];
      }
    }
    return d;
  }
};

struct Cone {
  QVector b;
  bool lower = true; // true: Ax >= b, false: Ax <= b

  bool contains(const QVector &x) const {
    CartanData cd(static_cast<int>(b.size()) + 1);
    auto y = cd.times(x);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (lower ? y[i] < b[i] : y[i] > b[i])
        return false;
    return true;
  }
  bool contains(const ZVector &x) const { return contains(QVector(x.begin(), x.end())); }
};

/// b(M)_i = (M + r_{i+1} - r_i)/n.
inline QVector b_of_M(long M, const Charges &r, int n) {
  QVector b;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    b.push_back(mpq_class(M + r[i + 1] - r[i], n));
    b.back().canonicalize();
  }
  return b;
}

/// s_i - s_{i+1} >= M for 1 <= i <= l-1.
inline bool is_M_dominant(const Charges &s, long M) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] - s[i + 1] < M)
      return false;
  return true;
}

inline QVector cone_vertex(const QVector &b) { return CartanData(static_cast<int>(b.size()) + 1).solve(b); }

/// The explicit member of A(b) built from the vertices of C_b and C_{b+2}.
inline QVector constructive_c(const QVector &b) {
  std::size_t m = b.size();
  CartanData cd(static_cast<int>(m) + 1);
  QVector w = cd.solve(b), b2 = b;
  for (auto &x : b2)
    x += 2;
  QVector w1 = cd.solve(b2);
  QVector w2(m + 2, 0); // padded with w2_0 = w2_l = 0
  for (std::size_t i = 0; i < m; ++i)
    w2[i + 1] = std::max(w1[i], mpq_class(ceil_q(w[i])));
  QVector c(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = -w2[i] + 2 * w[i] - w2[i + 2];
    c[i].canonicalize();
  }
  return c;
}

/// min_i floor(c_i) for the constructive c of b(M): a certified lower bound for m_M.
inline long m_M_lower_bound(long M, const Charges &r, int n) {
  auto c = constructive_c(b_of_M(M, r, n));
  long lo = 0;
  bool first = true;
  for (auto &x : c) {
    long f = floor_q(x).get_si();
    lo = first ? f : std::min(lo, f);
    first = false;
  }
  return lo;
}

struct ZConnectivity {
  bool connected = false;
  bool touched_boundary = false;
  std::size_t visited = 0;
  std::string advisory;
};

/// BFS over unit steps inside cone ∩ box, box = [min(x,y) - margin, max(x,y) + margin].
inline ZConnectivity z_connected(const ZVector &x, const ZVector &y, const Cone &cone, long margin) {
  if (x.size() != y.size() || x.size() != cone.b.size())
    throw std::invalid_argument("z_connected: dimension mismatch");
  ZConnectivity out;
  if (!cone.contains(x) || !cone.contains(y)) {
    out.advisory = "endpoint outside the cone";
    return out;
  }
  std::size_t m = x.size();
  ZVector lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = std::min(x[i], y[i]) - margin;
    hi[i] = std::max(x[i], y[i]) + margin;
  }
  std::set<ZVector> seen{x};
  std::deque<ZVector> queue{x};
  while (!queue.empty()) {
    ZVector cur = queue.front();
    queue.pop_front();
    if (cur == y) {
      out.connected = true;
      break;
    }
    for (std::size_t j = 0; j < m; ++j)
      for (int d : {1, -1}) {
        ZVector nb = cur;
        nb[j] += d;
        if (nb[j] < lo[j] || nb[j] > hi[j]) {
          if (cone.contains(nb))
            out.touched_boundary = true;
          continue;
        }
        if (seen.count(nb) || !cone.contains(nb))
          continue;
        seen.insert(nb);
        queue.push_back(nb);
      }
  }
  out.visited = seen.size();
  if (!out.connected && out.touched_boundary)
    out.advisory = "BoxTooSmall: search frontier reached the box boundary";
  return out;
}

/// The fundamental-domain representative shared by s and t, or ResidueMismatch.
inline Charges common_lattice_base(const Charges &s, const Charges &t, int n) {
  Charges r = domain_representative(s, n);
  if (domain_representative(t, n) != r)
    throw ResidueMismatch("charges lie in different orbits");
  if (!is_integral(phi(s, r, n)) || !is_integral(phi(t, r, n)))
    throw ResidueMismatch("charges lie in different translation lattices");
  return r;
}

/// s ≡_M t decided inside a box around φ(s), φ(t).
inline ZConnectivity equiv_M(const Charges &s, const Charges &t, long M, int n, long margin) {
  Charges r = common_lattice_base(s, t, n);
  Cone cone{b_of_M(M, r, n), true};
  return z_connected(to_integers(phi(s, r, n)), to_integers(phi(t, r, n)), cone, margin);
}

struct StabilizationConstants {
  long M = 0, c = 0, N = 0, N_conjectural = 0;
  int N0 = 0;
};

/// M = n(N_0 + 2), c = n + l^2 n + nl (from m_0^(min) >= -l^2), N = M + c, N' = Σ N_i.
inline StabilizationConstants stabilization_constants(const std::vector<int> &content, int n, int l) {
  StabilizationConstants k;
  k.N0 = content.at(0);
  k.M = static_cast<long>(n) * (k.N0 + 2);
  k.c = n + static_cast<long>(l) * l * n + static_cast<long>(n) * l;
  k.N = k.M + k.c;
  for (int x : content)
    k.N_conjectural += x;
  return k;
}

inline StabilizationConstants stabilization_constants(const Charges &r, const Weight &w, int n, int l) {
  return stabilization_constants(content_of_weight(w, r, n), n, l);
}

/// Random integer points of C_b near its vertex; used by the connectivity audits.
inline std::vector<ZVector> sample_cone_points(const QVector &b, std::size_t count, long spread, std::mt19937_64 &rng) {
  QVector w = cone_vertex(b);
  Cone cone{b, true};
  std::uniform_int_distribution<long> step(0, spread);
  std::vector<ZVector> out;
  for (std::size_t guard = 0; out.size() < count && guard < 100000 * count; ++guard) {
    ZVector x;
    for (auto &v : w)
      x.push_back(ceil_q(v).get_si() + step(rng));
    if (cone.contains(x))
      out.push_back(x);
  }
  return out;
}

struct ConnectivityAudit {
  std::size_t pairs = 0, connected = 0, inconclusive = 0;
};

/// Checks that random pairs of integer points of C_b are Z-connected inside C_c.
inline ConnectivityAudit audit_connectivity(const QVector &b, const QVector &c, std::size_t pairs, long spread, long margin,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pts = sample_cone_points(b, 2 * pairs, spread, rng);
  ConnectivityAudit a;
  Cone cc{c, true};
  for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
    ++a.pairs;
    auto r = z_connected(pts[k], pts[k + 1], cc, margin);
    a.connected += r.connected;
    a.inconclusive += !r.connected && r.touched_boundary;
  }
  return a;
}

} // namespace fock
