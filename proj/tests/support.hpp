#pragma once
// Shared helpers for the test binaries: golden matrix files and a shared rule table.

#include <fstream>
#include <map>
#include <mutex>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fock/canonical.hpp"

namespace fock::testing {

inline std::shared_ptr<const RuleTable> rules() {
  static auto r = std::make_shared<const RuleTable>(RuleTable::load());
  return r;
}

inline const Straightener &straightener(int n, int l) {
  static std::map<std::pair<int, int>, std::unique_ptr<Straightener>> cache;
  static std::mutex m;
  std::lock_guard lock(m);
  auto &p = cache[{n, l}];
  if (!p)
    p = std::make_unique<Straightener>(n, l, rules());
  return *p;
}

/// A transition matrix as printed: labels in printed order, '.' read as zero.
struct Golden {
  int n = 0, l = 0, sign = 1;
  std::string charges;
  std::vector<int> content;
  std::vector<Multipartition> labels;
  std::vector<std::vector<LaurentPoly>> entries;
};

inline Golden load_golden(const std::string &name) {
  std::ifstream in(std::string(FOCK_GOLDEN_DIR) + "/" + name + ".txt");
  if (!in)
    throw std::runtime_error("missing golden file " + name);
  Golden g;
  std::string line, key;
  enum { Head, Labels, Entries } mode = Head;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (line == "labels") {
      mode = Labels;
      continue;
    }
    if (line == "entries") {
      mode = Entries;
      continue;
    }
    std::istringstream ls(line);
    if (mode == Head) {
      std::string val;
      ls >> key >> val;
      if (key == "n")
        g.n = std::stoi(val);
      else if (key == "l")
        g.l = std::stoi(val);
      else if (key == "charges")
        g.charges = val;
      else if (key == "content")
        g.content = parse_charges(val);
      else if (key == "sign")
        g.sign = val == "+" ? 1 : -1;
    } else if (mode == Labels) {
      g.labels.push_back(parse_multipartition(line));
    } else {
      std::vector<LaurentPoly> row;
      std::string cell;
      while (ls >> cell)
        row.push_back(cell == "." ? LaurentPoly() : LaurentPoly::parse(cell));
      g.entries.push_back(row);
    }
  }
  return g;
}

struct EntryMismatch {
  Multipartition row, col;
  std::string printed, computed;
};

/// Entrywise comparison of `t` against `g`, reading g's rows and columns with `labels`.
inline std::vector<EntryMismatch> compare_golden(const TransitionMatrix &t, const Golden &g,
                                                 const std::vector<Multipartition> &labels) {
  auto r = t.reordered(labels);
  std::vector<EntryMismatch> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (r.entries(i, j) != g.entries.at(i).at(j))
        out.push_back({labels[i], labels[j], g.entries[i][j].str(), r.entries(i, j).str()});
  return out;
}

inline std::vector<Multipartition> parse_labels(std::initializer_list<const char *> xs) {
  std::vector<Multipartition> out;
  for (auto *x : xs)
    out.push_back(parse_multipartition(x));
  return out;
}

} // namespace fock::testing
