#pragma once
// Semi-infinite q-wedges: normal ordering from a data-driven rule table, and the
// bead-shift operators B_m.
//
// Termination. For x < y every term produced by a rule other than the input has
// first index X > x, both indices in [x, y] and X + Y = x + y, so a non-normal
// output pair has strictly smaller gap y - x; the pair recursion bottoms out.
// For whole words, rewriting the first ascent replaces a word by words that are
// strictly larger in lexicographic order, all drawn from the finite set of words
// with the same length, the same sum and entries in [min, max]. Processing words
// in increasing order therefore visits each word at most once.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "indexation.hpp"
#include "laurent.hpp"
#include "partitions.hpp"

#ifndef FOCK_DEFAULT_RULES_PATH
#define FOCK_DEFAULT_RULES_PATH "data/straightening_rules.txt"
#endif

namespace fock {

struct TranscriptionUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RulePattern { Equal, SameB, SameA, MixedUp, MixedDown };

inline const char *pattern_name(RulePattern p) {
  switch (p) {
  case RulePattern::Equal:
    return "equal";
  case RulePattern::SameB:
    return "same-b";
  case RulePattern::SameA:
    return "same-a";
  case RulePattern::MixedUp:
    return "mixed-up";
  case RulePattern::MixedDown:
    return "mixed-down";
  }
  return "?";
}

/// One factor of a rule term: which input supplies a and b, and the degree.
struct RuleFactor {
  bool a_from_y = false, b_from_y = false, deg_from_y = false;
  int theta_sign = 0; // degree offset is theta_sign * t
};

struct RuleTerm {
  LaurentPoly coef;
  RuleFactor left, right;
};

class RuleTable {
public:
  int version = 0;
  std::map<RulePattern, std::vector<RuleTerm>> patterns;
  std::string source;

  static std::string default_path() {
    if (const char *env = std::getenv("FOCK_RULES_PATH"); env && *env)
      return env;
    return FOCK_DEFAULT_RULES_PATH;
  }

  static RuleTable load(const std::string &path = default_path()) {
    std::ifstream in(path);
    if (!in)
      throw TranscriptionUnavailable("straightening rule table not found at " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    RuleTable t = parse(ss.str());
    t.source = path;
    return t;
  }

  static RuleTable parse(const std::string &text) {
    RuleTable t;
    std::istringstream in(text);
    std::string line;
    std::vector<RuleTerm> *cur = nullptr;
    int lineno = 0;
    auto fail = [&](const std::string &why) {
      throw TranscriptionUnavailable("rule table line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos)
        line.erase(h);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head))
        continue;
      if (head == "format") {
        std::string kind;
        ls >> kind >> t.version;
        if (kind != "straightening" || t.version != 1)
          fail("unsupported format");
      } else if (head == "pattern") {
        if (!t.version)
          fail("missing format header");
        std::string name;
        ls >> name;
        RulePattern p;
        if (name == "equal")
          p = RulePattern::Equal;
        else if (name == "same-b")
          p = RulePattern::SameB;
        else if (name == "same-a")
          p = RulePattern::SameA;
        else if (name == "mixed-up")
          p = RulePattern::MixedUp;
        else if (name == "mixed-down")
          p = RulePattern::MixedDown;
        else
          fail("unknown pattern " + name);
        cur = &t.patterns[p];
      } else {
        if (!cur)
          fail("term outside a pattern");
        auto colon = line.find(':');
        if (colon == std::string::npos)
          fail("term without ':'");
        RuleTerm term;
        try {
          term.coef = LaurentPoly::parse(line.substr(0, colon));
        } catch (const std::exception &e) {
          fail(std::string("bad coefficient: ") + e.what());
        }
        std::istringstream fs(line.substr(colon + 1));
        std::string l, r, extra;
        if (!(fs >> l >> r) || (fs >> extra))
          fail("expected two factors");
        term.left = parse_factor(l, fail);
        term.right = parse_factor(r, fail);
        cur->push_back(term);
      }
    }
    if (!t.version)
      throw TranscriptionUnavailable("rule table has no format header");
    return t;
  }

  const std::vector<RuleTerm> &terms(RulePattern p) const {
    auto it = patterns.find(p);
    if (it == patterns.end() || it->second.empty())
      throw TranscriptionUnavailable(std::string("no rule for pattern ") + pattern_name(p));
    return it->second;
  }

private:
  template <class Fail> static RuleFactor parse_factor(const std::string &s, Fail &fail) {
    RuleFactor f;
    if (s.size() < 5 || s[2] != '@')
      fail("bad factor " + s);
    auto src = [&](char c) {
      if (c != 'x' && c != 'y')
        fail("bad factor source in " + s);
      return c == 'y';
    };
    f.a_from_y = src(s[0]);
    f.b_from_y = src(s[1]);
    std::string deg = s.substr(3);
    if (deg.rfind("m1", 0) == 0)
      f.deg_from_y = false;
    else if (deg.rfind("m2", 0) == 0)
      f.deg_from_y = true;
    else
      fail("bad degree in " + s);
    std::string off = deg.substr(2);
    if (off.empty())
      f.theta_sign = 0;
    else if (off == "+t")
      f.theta_sign = 1;
    else if (off == "-t")
      f.theta_sign = -1;
    else
      fail("bad degree offset in " + s);
    return f;
  }
};

/// Normal form of a wedge of two factors: list of (X, coef) with Y = x + y - X, X > Y.
using PairForm = std::vector<std::pair<long long, LaurentPoly>>;

class Straightener {
public:
  Straightener(int n, int l, std::shared_ptr<const RuleTable> rules) : n_(n), l_(l), rules_(std::move(rules)) {
    if (!rules_)
      throw TranscriptionUnavailable("no rule table");
    for (auto p : {RulePattern::Equal, RulePattern::SameB, RulePattern::SameA, RulePattern::MixedUp, RulePattern::MixedDown})
      rules_->terms(p);
  }
  Straightener(int n, int l) : Straightener(n, l, std::make_shared<RuleTable>(RuleTable::load())) {}

  int n() const { return n_; }
  int l() const { return l_; }

  /// u_x ^ u_y in the ordered basis.
  PairForm pair(long long x, long long y) const {
    if (x == y)
      return {};
    if (x > y)
      return {{x, LaurentPoly(1)}};
    long long nl = static_cast<long long>(n_) * l_;
    Key key{mod(x, nl), mod(y, nl), y - x};
    {
      std::shared_lock lk(mu_);
      if (auto it = memo_.find(key); it != memo_.end())
        return shift(it->second, x);
    }
    PairForm rel = expand(x, y);
    std::vector<std::pair<long long, LaurentPoly>> rel_off;
    for (auto &[X, c] : rel)
      rel_off.emplace_back(X - x, c);
    {
      std::unique_lock lk(mu_);
      memo_.emplace(key, rel_off);
    }
    return rel;
  }

  std::size_t memo_size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
  }

private:
  struct Key {
    int r1, r2;
    long long gap;
    bool operator==(const Key &) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key &k) const {
      return std::hash<long long>()(k.gap * 1000003 + k.r1 * 1009 + k.r2);
    }
  };

  static PairForm shift(const PairForm &f, long long x) {
    PairForm r;
    r.reserve(f.size());
    for (auto &[d, c] : f)
      r.emplace_back(x + d, c);
    return r;
  }

  PairForm expand(long long x, long long y) const {
    auto cx = decompose(x, n_, l_), cy = decompose(y, n_, l_);
    int t = std::tie(cx.b, cx.a) > std::tie(cy.b, cy.a) ? 1 : 0;
    RulePattern p;
    if (cx.a == cy.a && cx.b == cy.b)
      p = RulePattern::Equal;
    else if (cx.b == cy.b)
      p = RulePattern::SameB;
    else if (cx.a == cy.a)
      p = RulePattern::SameA;
    else
      p = cx.a < cy.a ? RulePattern::MixedUp : RulePattern::MixedDown;
    auto index = [&](const RuleFactor &f) {
      int a = f.a_from_y ? cy.a : cx.a;
      int b = f.b_from_y ? cy.b : cx.b;
      int m = (f.deg_from_y ? cy.m : cx.m) + f.theta_sign * t;
      return compose(a, b, m, n_, l_);
    };
    LaurentPoly self;
    std::map<long long, LaurentPoly> rest;
    for (const auto &term : rules_->terms(p)) {
      long long X = index(term.left), Y = index(term.right);
      if (X + Y != x + y)
        throw TranscriptionUnavailable("rule term does not preserve the index sum");
      if (X == Y)
        continue;
      if (X == x && Y == y) {
        self += term.coef;
        continue;
      }
      if (X < Y && Y - X >= y - x)
        throw TranscriptionUnavailable("rule term does not shrink the gap of an unordered pair");
      for (auto &[Z, c] : pair(X, Y))
        rest[Z] += term.coef * c;
    }
    if (self.is_zero())
      throw TranscriptionUnavailable("rule leaves the input term with zero coefficient");
    PairForm out;
    for (auto &[Z, c] : rest) {
      if (c.is_zero())
        continue;
      if (Z > y || x + y - Z < x)
        throw TranscriptionUnavailable("rule output leaves the index window of the pair");
      auto quo = (-c).divide_exact(self);
      if (!quo)
        throw TranscriptionUnavailable("rule solve is not exact in Z[q,q^-1]");
      out.emplace_back(Z, *quo);
    }
    return out;
  }

  int n_, l_;
  std::shared_ptr<const RuleTable> rules_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Key, std::vector<std::pair<long long, LaurentPoly>>, KeyHash> memo_;
};

using Word = std::vector<long long>;

/// Charged-partition combination with fixed charge s.
struct WedgeVector {
  int s = 0;
  std::map<Partition, LaurentPoly> coeffs;

  void add(const Partition &p, const LaurentPoly &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = coeffs.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero())
        coeffs.erase(it);
    }
  }
  WedgeVector &operator+=(const WedgeVector &o) {
    for (auto &[k, c] : o.coeffs)
      add(k, c);
    return *this;
  }
  WedgeVector &operator-=(const WedgeVector &o) {
    for (auto &[k, c] : o.coeffs)
      add(k, -c);
    return *this;
  }
  bool operator==(const WedgeVector &o) const { return s == o.s && coeffs == o.coeffs; }
  bool is_zero() const { return coeffs.empty(); }
};

inline bool is_normal(const Word &w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1])
      return false;
  return true;
}

/// Normal form of a finite word, followed by the implicit tail below all its entries.
inline std::map<Word, LaurentPoly> normal_order_words(const Word &word, const Straightener &st) {
  std::map<Word, LaurentPoly> todo, done;
  todo.emplace(word, LaurentPoly(1));
  while (!todo.empty()) {
    auto node = todo.extract(todo.begin());
    Word w = std::move(node.key());
    LaurentPoly c = std::move(node.mapped());
    if (c.is_zero())
      continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] > w[i + 1])
      ++i;
    if (i + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    if (w[i] == w[i + 1])
      continue;
    long long x = w[i], y = w[i + 1];
    for (auto &[X, k] : st.pair(x, y)) {
      Word v = w;
      v[i] = X;
      v[i + 1] = x + y - X;
      auto &slot = todo[v];
      slot += c * k;
    }
  }
  std::map<Word, LaurentPoly> out;
  for (auto &[w, c] : done)
    if (!c.is_zero())
      out.emplace(w, c);
  return out;
}

/// Pads the prefix with tail beads down to its minimum, normal-orders, reads partitions.
inline WedgeVector normal_order(const Word &prefix, int s, const Straightener &st) {
  Word w = prefix;
  long long lo = prefix.empty() ? s : *std::min_element(prefix.begin(), prefix.end());
  for (long long tail = s - static_cast<long long>(prefix.size()); tail >= lo; --tail)
    w.push_back(tail);
  WedgeVector out{s, {}};
  for (auto &[nw, c] : normal_order_words(w, st))
    out.add(beta_to_partition(nw, s).lambda, c);
  return out;
}

/// B_m: shift each bead by -nlm in turn.
inline WedgeVector b_operator(int m, const WedgeVector &v, const Straightener &st) {
  if (m == 0)
    throw std::invalid_argument("B_0 is not defined");
  long long sh = static_cast<long long>(st.n()) * st.l() * m;
  WedgeVector out{v.s, {}};
  for (auto &[lam, c] : v.coeffs) {
    long long depth = static_cast<long long>(lam.size()) + std::llabs(sh) + 1;
    auto base = beta_set({lam, v.s}, static_cast<int>(depth));
    for (std::size_t j = 0; j < base.size(); ++j) {
      Word w = base;
      w[j] -= sh;
      WedgeVector part = normal_order(w, v.s, st);
      for (auto &[mu, k] : part.coeffs)
        out.add(mu, c * k);
    }
  }
  return out;
}

inline WedgeVector b_operator(int m, const Partition &lam, int s, const Straightener &st) {
  WedgeVector v{s, {}};
  v.add(lam, 1);
  return b_operator(m, v, st);
}

struct HeisenbergReport {
  bool central = true;
  std::optional<LaurentPoly> scalar;
  std::string detail;
};

/// [B_m, B_m'] vanishes off the centre and acts by one scalar on the centre.
inline HeisenbergReport heisenberg_commutator_check(int m, int mp, const std::vector<WedgeVector> &samples,
                                                    const Straightener &st) {
  HeisenbergReport rep;
  for (const auto &v : samples) {
    WedgeVector c = b_operator(m, b_operator(mp, v, st), st);
    c -= b_operator(mp, b_operator(m, v, st), st);
    if (m + mp != 0) {
      if (!c.is_zero())
        throw CheckFailed("[B_" + std::to_string(m) + ",B_" + std::to_string(mp) + "] is nonzero on a sample");
      continue;
    }
    // c must equal scalar * v
    std::optional<LaurentPoly> k;
    for (auto &[lam, x] : v.coeffs) {
      auto it = c.coeffs.find(lam);
      LaurentPoly y = it == c.coeffs.end() ? LaurentPoly() : it->second;
      auto r = y.divide_exact(x);
      if (!r || (k && *k != *r))
        throw CheckFailed("commutator is not a scalar on a sample");
      k = *r;
    }
    for (auto &[lam, y] : c.coeffs)
      if (!v.coeffs.count(lam))
        throw CheckFailed("commutator leaves the sample's support");
    if (rep.scalar && k && *rep.scalar != *k)
      throw CheckFailed("commutator scalars differ between samples");
    if (k)
      rep.scalar = k;
  }
  return rep;
}

} // namespace fock
