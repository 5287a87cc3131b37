// One line per acceptance criterion. Exit status is zero when every criterion passes, or fails
// only in the documented way (printed errata in the reference matrices).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fock/compare.hpp"
#include "fock/cones.hpp"
#include "fock/crystal.hpp"
#include "support.hpp"

using namespace fock;
using namespace fock::testing;

namespace {

enum class Verdict { Pass, Fail, KnownFail };

struct Outcome {
  Verdict verdict = Verdict::Fail;
  std::string detail;
};

bool unexpected = false;

void report(int id, const std::function<Outcome()> &run) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception &e) {
    o = {Verdict::Fail, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char *tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::KnownFail ? "FAIL (documented)" : "FAIL";
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << "criterion " << id << ": " << tag << " [" << t.str() << "s] " << o.detail << std::endl;
  if (o.verdict == Verdict::Fail)
    unexpected = true;
}

Outcome criterion1() {
  int n = 2, l = 3;
  ChargedPartition cp{{4, 3, 3, 2, 1}, -1};
  ChargedMultipartition ns{parse_multipartition("[[3,3],[]]"), {-1, 0}};
  ChargedMultipartition ls{parse_multipartition("[[1,1],[1,1],[1]]"), {0, 0, -1}};
  bool ok = to_n_indexation(cp, n, l) == ns && to_l_indexation(cp, n, l) == ls && from_n_indexation(ns, n, l) == cp &&
            from_l_indexation(ls, n, l) == cp && cross_convert(ls, n, l) == ns && cross_convert_back(ns, n, l) == ls;
  return {ok ? Verdict::Pass : Verdict::Fail, "([4,3,3,2,1],-1) <-> ([[3,3],[]],(-1,0)) <-> ([[1,1],[1,1],[1]],(0,0,-1))"};
}

Outcome criterion2() {
  Charges s{5, 0, 2, 1};
  auto lam = parse_multipartition("[[5,3,3,1],[3,2],[4,3,1],[2,2,2,1]]");
  auto mu = parse_multipartition("[[5,3,3,1],[3,2],[5,3,1],[2,2,2,1]]");
  auto st = node_stats(lam, s, 3, 0);
  auto nodes = addable_nodes(lam, s, 3, 0);
  auto rem = removable_nodes(lam, s, 3, 0);
  nodes.insert(nodes.end(), rem.begin(), rem.end());
  std::sort(nodes.begin(), nodes.end(), [&](const Node &a, const Node &b) { return node_order_less(a, b, s); });
  std::vector<Node> expected{{5, 1, 4}, {2, 2, 2}, {3, 1, 3}, {3, 2, 4}, {4, 2, 1},
                             {1, 4, 2}, {2, 3, 3}, {1, 3, 4}, {1, 5, 3}, {1, 5, 1}};
  auto [gt, lt] = m_statistics(lam, mu, s, 3, 0);
  bool ok = st.N == 11 && st.A == 5 && st.R == 5 && st.M == 0 && nodes == expected && gt == -1 && lt == 0;
  std::ostringstream d;
  d << "N=" << st.N << " A=" << st.A << " R=" << st.R << " M=" << st.M << " order " << (nodes == expected ? "ok" : "wrong")
    << " M>=" << gt << " M<=" << lt;
  return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

Outcome criterion3() {
  int n = 3, l = 2;
  Charges sl{1, 0};
  Weight w = zero_weight(n);
  w.lam = {-2, 1, 3};
  w.d = -2;
  auto mp = parse_multipartition("[[1,1],[1]]");
  bool attained = label_weight(mp, sl, n, false) == w;
  auto dc = corresponding_dot(sl, w, n, l);
  Weight expect = zero_weight(l, true);
  expect.lam = {2, 1};
  expect.d = -2;
  auto cont = content_of_weight(w, sl, n);
  auto dcont = content_of_weight(dc.wdot, dc.charges_n, l);
  auto ns = cross_convert({mp, sl}, n, l);
  bool ok = attained && dc.charges_n == Charges{2, 1, -2} && dc.wdot == expect && cont == std::vector<int>{2, 1, 0} &&
            dcont == std::vector<int>{0, 0} && ns.charges == dc.charges_n && wt_dot(ns, l) == dc.wdot;
  return {ok ? Verdict::Pass : Verdict::Fail,
          "s_n=" + charges_string(dc.charges_n) + " wdot=" + to_string(dc.wdot) + " contents (" +
              std::to_string(cont[0]) + "," + std::to_string(cont[1]) + "," + std::to_string(cont[2]) + ") and (" +
              std::to_string(dcont[0]) + "," + std::to_string(dcont[1]) + ")"};
}

// Errata in the printed reference matrices; each is cross-checked below, never silently absorbed.
struct Erratum {
  std::string file;
  std::string row, col, printed, computed;
};

const std::vector<Erratum> sign_errata = {
    {"sigma_w_minus", "[[4],[2]]", "[[1],[5]]", "q^-1", "-q^-1"},
    {"sigma_sw_minus", "[[5],[3,1]]", "[[2],[6,1]]", "q^-1", "-q^-1"},
};

Outcome criterion4() {
  std::vector<std::string> problems, documented;
  std::size_t exact = 0, total = 0;
  auto check = [&](const std::string &file, const TransitionMatrix &t, std::vector<Multipartition> labels,
                   const std::string &label_note) {
    ++total;
    auto g = load_golden(file);
    auto mism = compare_golden(t, g, labels);
    std::size_t known = 0;
    for (auto &m : mism) {
      bool doc = false;
      for (auto &e : sign_errata)
        doc |= e.file == file && to_string(m.row) == e.row && to_string(m.col) == e.col && m.printed == e.printed &&
               m.computed == e.computed;
      if (doc) {
        ++known;
        documented.push_back(file + " (" + to_string(m.row) + "," + to_string(m.col) + ") printed " + m.printed +
                             ", computed " + m.computed);
      } else {
        problems.push_back(file + " (" + to_string(m.row) + "," + to_string(m.col) + ") printed " + m.printed +
                           ", computed " + m.computed);
      }
    }
    if (!label_note.empty())
      documented.push_back(file + ": " + label_note);
    if (mism.empty() && label_note.empty())
      ++exact;
  };

  {
    auto &st = straightener(3, 2);
    auto A = bar_matrix(weight_space({1, 0}, {2, 3, 1}, 3, 2), st);
    auto B = bar_matrix(weight_space({1, 0}, {2, 3, 4}, 3, 2), st);
    check("sigma_w_plus", canonical_basis(A, 1), load_golden("sigma_w_plus").labels, "");
    check("sigma_w_minus", canonical_basis(A, -1), load_golden("sigma_w_minus").labels, "");
    check("sigma_sw_plus", canonical_basis(B, 1), load_golden("sigma_sw_plus").labels, "");
    check("sigma_sw_minus", canonical_basis(B, -1), load_golden("sigma_sw_minus").labels, "");
  }
  {
    auto &st = straightener(2, 3);
    auto A = bar_matrix(weight_space({0, 2, -1}, {1, 1}, 2, 3), st);
    auto B = bar_matrix(weight_space({0, -1, 2}, {1, 1}, 2, 3), st);
    // The printed source basis repeats ([],[],[1,1]); its second row is ([],[1,1],[]), the preimage of the
    // printed target's second row under the printed sigma-dot image list.
    auto fixed = load_golden("sigmadot_w_plus").labels;
    bool dup = fixed[1] == fixed[7];
    fixed[1] = parse_multipartition("[[],[1,1],[]]");
    std::string note = dup ? "printed basis repeats [[],[],[1,1]]; row 2 read as [[],[1,1],[]]" : "";
    if (!dup)
      problems.push_back("expected duplicate label not found in sigmadot_w");
    check("sigmadot_w_plus", canonical_basis(A, 1), fixed, note);
    check("sigmadot_w_minus", canonical_basis(A, -1), fixed, note);
    // The printed image list gives rows 4 and 5 each other's images. The corrected list is the image of the
    // corrected source rows under sigma-dot, which also reproduces the printed n-side bijection of the first example.
    auto printed = load_golden("sigmadot_sw_plus").labels;
    std::vector<Multipartition> images;
    for (auto &mp : fixed)
      images.push_back(sigma_dot_i(mp, {0, 2, -1}, 2, 3, 2).mp);
    auto swapped = printed;
    std::swap(swapped[3], swapped[4]);
    if (images != swapped)
      problems.push_back("sigma-dot images differ from the printed list beyond the rows 4/5 exchange");
    auto DBp = canonical_basis(B, 1);
    if (compare_golden(DBp, load_golden("sigmadot_sw_plus"), printed).empty())
      problems.push_back("sigmadot_sw_plus unexpectedly matches its printed labels");
    std::string swap_note = "printed images of rows 4 and 5 are exchanged; read as " + to_string(images[3]) + ", " +
                            to_string(images[4]);
    check("sigmadot_sw_plus", DBp, images, swap_note);
    check("sigmadot_sw_minus", canonical_basis(B, -1), images, swap_note);
  }
  {
    auto &st = straightener(3, 2);
    for (int k : {1, 2}) {
      Charges s{3 * k + 1, -3 * k};
      auto A = bar_matrix(weight_space(s, {1, 1, 1}, 3, 2), st);
      check("translation_k_plus", canonical_basis(A, 1), load_golden("translation_k_plus").labels, "");
      check("translation_k_minus", canonical_basis(A, -1), load_golden("translation_k_minus").labels, "");
    }
    auto A0 = bar_matrix(weight_space({1, 0}, {1, 1, 1}, 3, 2), st);
    auto D0 = canonical_basis(A0, 1);
    // Printed row labels repeat the k >= 1 list; the entries are those of the k = 0 basis in this order.
    auto order = parse_labels({"[[3],[]]", "[[],[3]]", "[[],[2,1]]", "[[2],[1]]", "[[1],[1,1]]", "[[],[1,1,1]]",
                               "[[2,1],[]]", "[[1,1,1],[]]"});
    auto g0 = load_golden("translation_0_plus");
    bool printed_fails = true;
    try {
      printed_fails = !compare_golden(D0, g0, g0.labels).empty();
    } catch (const std::exception &) {
    }
    if (!printed_fails)
      problems.push_back("translation_0_plus unexpectedly matches its printed labels");
    check("translation_0_plus", D0, order, "printed labels belong to k>=1; entries match the k=0 basis read as " +
                                               std::string("((3),0),(0,(3)),(0,(2,1)),((2),(1)),((1),(1,1)),(0,(1,1,1)),((2,1),0),((1,1,1),0)"));
    if (nonzero_count(D0) != 21)
      problems.push_back("Delta_0^+ has " + std::to_string(nonzero_count(D0)) + " nonzero entries");
  }
  std::ostringstream d;
  d << exact << "/" << total << " matrices match verbatim";
  if (!problems.empty()) {
    for (auto &p : problems)
      d << "; UNEXPECTED " << p;
    return {Verdict::Fail, d.str()};
  }
  for (auto &p : documented)
    d << "; " << p;
  return {documented.empty() ? Verdict::Pass : Verdict::KnownFail, d.str()};
}

Outcome criterion5() {
  std::ostringstream d;
  auto r1 = verify_theorem1({1, 0}, {2, 3, 1}, 2, 3, 2, straightener(3, 2));
  auto r2 = verify_theorem2({0, 2, -1}, {1, 1}, 2, 2, 3, straightener(2, 3));
  Theorem3Options o;
  o.k_lo = 1;
  o.k_hi = 2;
  auto r3 = verify_theorem3({1, 0}, {1, 1, 1}, 3, 2, straightener(3, 2), o);
  Theorem3Options forced = o;
  forced.k_lo = 0;
  forced.k_hi = 1;
  auto r0 = verify_theorem3({1, 0}, {1, 1, 1}, 3, 2, straightener(3, 2), forced);
  bool counts = r0.results.at(0).nonzero_source == 21 && r0.results.at(0).nonzero_target == 22 && !r0.results[0].verified;
  bool ok = r1.verified() && r2.verified() && r3.verified() && r3.extra["N"] == 30 && r3.extra["N_prime"] == 3 &&
            !r0.verified() && counts;
  d << "thm1 " << (r1.verified() ? "verified" : "FAILED") << ", thm2 " << (r2.verified() ? "verified" : "FAILED")
    << ", thm3 k=1..2 " << (r3.verified() ? "verified" : "FAILED") << " N=" << r3.extra["N"]
    << " N'=" << r3.extra["N_prime"] << ", forced k=0..1 " << (r0.verified() ? "similar (WRONG)" : "not similar")
    << " nonzero " << r0.results[0].nonzero_source << " vs " << r0.results[0].nonzero_target;
  return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  std::string cmd = std::string("\"") + FOCK_PROPERTY_SUITE + "\" > property_suite.log 2>&1";
  int rc = std::system(cmd.c_str());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = rc == 0 && secs < 15 * 60;
  return {ok ? Verdict::Pass : Verdict::Fail,
          "property suite exit " + std::to_string(rc) + " in " + std::to_string(static_cast<int>(secs)) + "s (log: property_suite.log)"};
}

Outcome criterion7() {
  // No decision procedure for exact m_M; the constructive element of A(b) is used and audited.
  Charges r{1, 0};
  auto k = stabilization_constants(std::vector<int>{1, 1, 1}, 3, 2);
  bool ok = k.N == 30 && k.N_conjectural == 3;
  std::ostringstream d;
  std::size_t audited = 0, connected = 0;
  for (long M : {0L, 3L, 9L, 30L}) {
    auto b = b_of_M(M, r, 3);
    auto c = constructive_c(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      ok = ok && c[i] <= b[i];
    auto a = audit_connectivity(b, c, 5, 6, 6, 100 + M);
    audited += a.pairs;
    connected += a.connected;
  }
  for (int l : {3, 4}) {
    Charges rr(static_cast<std::size_t>(l), 0);
    auto b = b_of_M(0, rr, 2);
    auto c = constructive_c(b);
    auto a = audit_connectivity(b, c, 5, 4, 4, 7 + l);
    audited += a.pairs;
    connected += a.connected;
  }
  ok = ok && audited >= 20 && connected == audited;
  d << "exact m_M not computed; constructive c audited: " << connected << "/" << audited
    << " box-bounded pairs connected; m_M >= " << m_M_lower_bound(9, r, 3) << " at M=9; N=" << k.N << " N'=" << k.N_conjectural;
  return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

} // namespace

int main() {
  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  return unexpected ? 1 : 0;
}
