#pragma once
// Chevalley generators of U_q(sl_n^) on l-side labels and of U_p(sl_l^) on n-side labels.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "partitions.hpp"
#include "weights.hpp"

namespace fock {

struct NonIntegralNorm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite combination of standard basis vectors over one multi-charge.
struct FockVector {
  Charges charges;
  std::map<Multipartition, LaurentPoly> coeffs;

  FockVector() = default;
  explicit FockVector(Charges s) : charges(std::move(s)) {}
  static FockVector basis(const Multipartition &mp, const Charges &s) {
    FockVector v(s);
    v.coeffs[mp] = 1;
    return v;
  }
  bool is_zero() const { return coeffs.empty(); }
  void add(const Multipartition &mp, const LaurentPoly &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = coeffs.try_emplace(mp, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        coeffs.erase(it);
    }
  }
  FockVector &operator+=(const FockVector &o) {
    for (auto &[k, c] : o.coeffs)
      add(k, c);
    return *this;
  }
  FockVector &operator-=(const FockVector &o) {
    for (auto &[k, c] : o.coeffs)
      add(k, -c);
    return *this;
  }
  FockVector scaled(const LaurentPoly &c) const {
    FockVector r(charges);
    if (c.is_zero())
      return r;
    for (auto &[k, x] : coeffs)
      r.coeffs.emplace(k, x * c);
    return r;
  }
  bool operator==(const FockVector &o) const { return coeffs == o.coeffs; }
};

namespace detail {

// All k-subsets of idx range [0, m).
template <class F> void for_each_subset(int m, int k, F &&f) {
  std::vector<int> pick;
  auto rec = [&](auto &self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      f(pick);
      return;
    }
    for (int x = start; x <= m - (k - static_cast<int>(pick.size())); ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

inline LaurentPoly power(int e, bool use_p) {
  LaurentPoly m = LaurentPoly::q(e);
  return use_p ? p_substitute(m) : m;
}

inline FockVector chain_f(int i, const FockVector &v, int k, int N, bool use_p) {
  FockVector out(v.charges);
  if (k == 0)
    return v;
  for (auto &[nu, c] : v.coeffs) {
    auto add = addable_nodes(nu, v.charges, N, i);
    auto rem = removable_nodes(nu, v.charges, N, i);
    for_each_subset(static_cast<int>(add.size()), k, [&](const std::vector<int> &pick) {
      std::vector<Node> S;
      for (int x : pick)
        S.push_back(add[x]);
      Multipartition mu = add_nodes(nu, S);
      auto add_mu = addable_nodes(mu, v.charges, N, i);
      int e = 0;
      for (auto &g : S) {
        for (auto &b : add_mu)
          e += node_order_less(g, b, v.charges);
        for (auto &b : rem)
          e -= node_order_less(g, b, v.charges);
      }
      out.add(mu, c * power(e, use_p));
    });
  }
  return out;
}

inline FockVector chain_e(int i, const FockVector &v, int k, int N, bool use_p) {
  FockVector out(v.charges);
  if (k == 0)
    return v;
  for (auto &[nu, c] : v.coeffs) {
    auto rem = removable_nodes(nu, v.charges, N, i);
    for_each_subset(static_cast<int>(rem.size()), k, [&](const std::vector<int> &pick) {
      std::vector<Node> S;
      for (int x : pick)
        S.push_back(rem[x]);
      Multipartition lam = remove_nodes(nu, S);
      auto add_lam = addable_nodes(lam, v.charges, N, i);
      int e = 0;
      for (auto &g : S) {
        for (auto &b : add_lam)
          e += node_order_less(b, g, v.charges);
        for (auto &b : rem)
          e -= node_order_less(b, g, v.charges);
      }
      out.add(lam, c * power(-e, use_p));
    });
  }
  return out;
}

} // namespace detail

/// f_i^{(k)} on an l-side vector, residues mod n.
inline FockVector f_action(int i, const FockVector &v, int k, int n) { return detail::chain_f(i, v, k, n, false); }
inline FockVector e_action(int i, const FockVector &v, int k, int n) { return detail::chain_e(i, v, k, n, false); }

/// ḟ_j^{(k)} on an n-side vector, residues mod l, coefficients in p = -q^-1.
inline FockVector fdot_action(int j, const FockVector &v, int k, int l) { return detail::chain_f(j, v, k, l, true); }
inline FockVector edot_action(int j, const FockVector &v, int k, int l) { return detail::chain_e(j, v, k, l, true); }

inline FockVector t_action(int i, const FockVector &v, int n, bool use_p = false) {
  FockVector out(v.charges);
  for (auto &[mp, c] : v.coeffs)
    out.add(mp, c * detail::power(node_stats(mp, v.charges, n, i).M, use_p));
  return out;
}

inline FockVector tdot_action(int j, const FockVector &v, int l) { return t_action(j, v, l, true); }

/// ∂ acts by -(Δ(s,N) + N_0).
inline FockVector degree_action(const FockVector &v, int N) {
  FockVector out(v.charges);
  long d = delta_charge(v.charges, N);
  for (auto &[mp, c] : v.coeffs)
    out.add(mp, c * LaurentPoly(-(d + census(mp, v.charges, N)[0])));
  return out;
}

inline FockVector degree_dot_action(const FockVector &v, int l) { return degree_action(v, l); }

/// ‖λ‖ = (wt, wt)/2, possibly fractional.
inline mpq_class label_norm(const Multipartition &mp, const Charges &s, int n) {
  Weight w = label_weight(mp, s, n, false);
  mpq_class t = inner_product(w, w) / 2;
  t.canonicalize();
  return t;
}

/// (u, v) = Σ u_λ v_λ q^{‖λ‖ - ‖∅‖}, no bar twist. The global factor q^{‖∅‖} is dropped so the
/// value stays a Laurent polynomial.
inline LaurentPoly bilinear_form(const FockVector &u, const FockVector &v, int n) {
  LaurentPoly t;
  if (u.coeffs.empty())
    return t;
  mpq_class base = label_norm(empty_multipartition(static_cast<int>(u.charges.size())), u.charges, n);
  for (auto &[mp, c] : u.coeffs) {
    auto it = v.coeffs.find(mp);
    if (it == v.coeffs.end())
      continue;
    mpq_class e = label_norm(mp, u.charges, n) - base;
    e.canonicalize();
    if (e.get_den() != 1)
      throw NonIntegralNorm("norm difference is not an integer: " + e.get_str());
    t += (c * it->second).shifted(static_cast<int>(e.get_num().get_si()));
  }
  return t;
}

inline std::string to_string(const FockVector &v) {
  if (v.coeffs.empty())
    return "0";
  std::string out;
  for (auto &[mp, c] : v.coeffs) {
    if (!out.empty())
      out += " + ";
    out += "(" + c.str() + ")|" + to_string(mp) + "," + charges_string(v.charges) + ">";
  }
  return out;
}

} // namespace fock
