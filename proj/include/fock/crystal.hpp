#pragma once
// The crystal graph at q = 0 on l-side labels: signatures of i-nodes, Kashiwara operators,
// i-strings and the string reflections σ_i and σ̇_i.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indexation.hpp"
#include "partitions.hpp"
#include "weights.hpp"

namespace fock {

struct SignatureEntry {
  Node node;
  bool addable;
};

/// i-nodes of a label in decreasing node order, and the survivors after cancelling A·R pairs.
/// Reduced words read R...RA...A.
struct Signature {
  std::vector<SignatureEntry> word;
  std::vector<SignatureEntry> reduced;

  int phi() const {
    int k = 0;
    for (auto &e : reduced)
      k += e.addable;
    return k;
  }
  int epsilon() const { return static_cast<int>(reduced.size()) - phi(); }
  std::optional<Node> good_addable() const {
    for (auto &e : reduced)
      if (e.addable)
        return e.node;
    return std::nullopt;
  }
  std::optional<Node> good_removable() const {
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
      if (!it->addable)
        return it->node;
    return std::nullopt;
  }
  std::string str() const {
    std::string s;
    for (auto &e : reduced)
      s += e.addable ? 'A' : 'R';
    return s;
  }
};

inline Signature signature(const Multipartition &mp, const Charges &s, int n, int i) {
  Signature sig;
  for (auto &g : addable_nodes(mp, s, n, i))
    sig.word.push_back({g, true});
  for (auto &g : removable_nodes(mp, s, n, i))
    sig.word.push_back({g, false});
  std::sort(sig.word.begin(), sig.word.end(),
            [&](const SignatureEntry &a, const SignatureEntry &b) { return node_order_less(b.node, a.node, s); });
  // stack reduction: an R cancels the nearest surviving A to its left
  for (auto &e : sig.word) {
    if (!e.addable && !sig.reduced.empty() && sig.reduced.back().addable)
      sig.reduced.pop_back();
    else
      sig.reduced.push_back(e);
  }
  return sig;
}

inline int crystal_phi(const Multipartition &mp, const Charges &s, int n, int i) { return signature(mp, s, n, i).phi(); }
inline int crystal_epsilon(const Multipartition &mp, const Charges &s, int n, int i) {
  return signature(mp, s, n, i).epsilon();
}

inline std::optional<Multipartition> kashiwara_f(const Multipartition &mp, const Charges &s, int n, int i) {
  auto g = signature(mp, s, n, i).good_addable();
  if (!g)
    return std::nullopt;
  return add_nodes(mp, {*g});
}

inline std::optional<Multipartition> kashiwara_e(const Multipartition &mp, const Charges &s, int n, int i) {
  auto g = signature(mp, s, n, i).good_removable();
  if (!g)
    return std::nullopt;
  return remove_nodes(mp, {*g});
}

/// f̃^k, or nullopt if the string is too short.
inline std::optional<Multipartition> kashiwara_f_power(Multipartition mp, const Charges &s, int n, int i, int k) {
  for (int t = 0; t < k; ++t) {
    auto next = kashiwara_f(mp, s, n, i);
    if (!next)
      return std::nullopt;
    mp = std::move(*next);
  }
  return mp;
}

inline std::optional<Multipartition> kashiwara_e_power(Multipartition mp, const Charges &s, int n, int i, int k) {
  for (int t = 0; t < k; ++t) {
    auto next = kashiwara_e(mp, s, n, i);
    if (!next)
      return std::nullopt;
    mp = std::move(*next);
  }
  return mp;
}

/// The i-string through mp, from its head (ε = 0) to its tail (φ = 0); second is mp's position.
inline std::pair<std::vector<Multipartition>, int> i_string(const Multipartition &mp, const Charges &s, int n, int i) {
  int eps = crystal_epsilon(mp, s, n, i);
  Multipartition head = *kashiwara_e_power(mp, s, n, i, eps);
  std::vector<Multipartition> out{head};
  while (auto next = kashiwara_f(out.back(), s, n, i))
    out.push_back(std::move(*next));
  return {out, eps};
}

/// (wt(λ), α_i).
inline int weight_pairing(const Multipartition &mp, const Charges &s, int n, int i) {
  return label_weight(mp, s, n, false).lam[mod(i, n)];
}

inline Multipartition sigma_i(const Multipartition &mp, const Charges &s, int n, int i) {
  int d = weight_pairing(mp, s, n, i);
  auto r = d >= 0 ? kashiwara_f_power(mp, s, n, i, d) : kashiwara_e_power(mp, s, n, i, -d);
  if (!r)
    throw std::logic_error("sigma_i: string shorter than the weight pairing");
  return *r;
}

inline Multipartition add_all_addable(const Multipartition &mp, const Charges &s, int n, int i) {
  return add_nodes(mp, addable_nodes(mp, s, n, i));
}

/// σ̇_i through the n-side: returns the l-side image and the new l-charges.
inline ChargedMultipartition sigma_dot_i(const Multipartition &mp, const Charges &s_l, int n, int l, int i) {
  if (i < 0 || i >= l)
    throw std::invalid_argument("sigma_dot_i: generator out of range");
  auto nside = cross_convert({mp, s_l}, n, l);
  auto img = sigma_i(nside.mp, nside.charges, l, i);
  auto back = cross_convert_back({img, nside.charges}, n, l);
  return back;
}

inline std::optional<ChargedMultipartition> kashiwara_fdot(const Multipartition &mp, const Charges &s_l, int n, int l,
                                                          int i) {
  auto nside = cross_convert({mp, s_l}, n, l);
  auto img = kashiwara_f(nside.mp, nside.charges, l, i);
  if (!img)
    return std::nullopt;
  return cross_convert_back({*img, nside.charges}, n, l);
}

inline std::optional<ChargedMultipartition> kashiwara_edot(const Multipartition &mp, const Charges &s_l, int n, int l,
                                                          int i) {
  auto nside = cross_convert({mp, s_l}, n, l);
  auto img = kashiwara_e(nside.mp, nside.charges, l, i);
  if (!img)
    return std::nullopt;
  return cross_convert_back({*img, nside.charges}, n, l);
}

struct CrystalEdge {
  Multipartition from, to;
  int i;
};

/// All f̃-arrows between labels of total size < max_size.
inline std::vector<CrystalEdge> crystal_edges(const Charges &s, int n, int max_size) {
  std::vector<CrystalEdge> out;
  int L = static_cast<int>(s.size());
  for (int k = 0; k < max_size; ++k)
    for (auto &mp : multipartitions_of(k, L))
      for (int i = 0; i < n; ++i)
        if (auto t = kashiwara_f(mp, s, n, i))
          out.push_back({mp, *t, i});
  return out;
}

inline std::string crystal_dot(const std::vector<CrystalEdge> &edges) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (auto &e : edges)
    os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to) << "\" [label=" << e.i << "];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json crystal_json(const std::vector<CrystalEdge> &edges) {
  auto arr = nlohmann::json::array();
  for (auto &e : edges)
    arr.push_back({{"from", to_string(e.from)}, {"to", to_string(e.to)}, {"i", e.i}});
  return arr;
}

} // namespace fock
