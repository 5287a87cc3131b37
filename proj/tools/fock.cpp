// Command-line front end for the Fock space engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "fock/actions.hpp"
#include "fock/canonical.hpp"
#include "fock/compare.hpp"
#include "fock/cones.hpp"
#include "fock/crystal.hpp"
#include "fock/indexation.hpp"
#include "fock/wedge.hpp"

using namespace fock;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Unsupported = 2, BadInput = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n = 2, l = 1;
  std::string s, charges, content, weight, sign = "+", format = "json", label, partition, lside, nside, krange = "1..2";
  std::string op = "f", target, dump;
  int i = 0, k = 1, charge = 0, bound = -1, box = 6, jobs = 0, pairs = 20;
  long M = 0;
  std::uint64_t seed = 1;
  bool conjectured = false, round_trip = false, dotted = false;
};

Charges need_charges(const RunConfig &c, int len) {
  if (c.charges.empty())
    throw InputError("--charges is required");
  Charges s = parse_charges(c.charges);
  if (static_cast<int>(s.size()) != len)
    throw InputError("--charges needs " + std::to_string(len) + " entries");
  return s;
}

/// Content from --content, or from --weight "lam_0,...,lam_{n-1};d".
std::vector<int> need_content(const RunConfig &c, const Charges &s) {
  if (!c.content.empty()) {
    auto v = parse_charges(c.content);
    if (static_cast<int>(v.size()) != c.n)
      throw InputError("--content needs n entries");
    for (int x : v)
      if (x < 0)
        throw InputError("--content entries must be nonnegative");
    return v;
  }
  if (!c.weight.empty()) {
    auto semi = c.weight.find(';');
    Weight w = zero_weight(c.n);
    auto lam = parse_charges(c.weight.substr(0, semi));
    if (static_cast<int>(lam.size()) != c.n)
      throw InputError("--weight needs n fundamental coefficients");
    w.lam = lam;
    if (semi != std::string::npos)
      w.d = mpq_class(c.weight.substr(semi + 1));
    return content_of_weight(w, s, c.n);
  }
  throw InputError("--content or --weight is required");
}

void check_rank(const RunConfig &c) {
  if (c.n < 2 || c.l < 1)
    throw InputError("need n >= 2 and l >= 1");
}

std::pair<int, int> parse_range(const std::string &t) {
  auto dots = t.find("..");
  if (dots == std::string::npos)
    throw InputError("--k-range must look like a..b");
  return {std::stoi(t.substr(0, dots)), std::stoi(t.substr(dots + 2))};
}

Straightener make_straightener(const RunConfig &c) {
  return Straightener(c.n, c.l, std::make_shared<RuleTable>(RuleTable::load()));
}

json label_json(const ChargedMultipartition &x) { return {{"label", to_string(x.mp)}, {"charges", x.charges}}; }

void emit(const RunConfig &c, const json &j, const std::string &text) {
  if (c.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_convert(const RunConfig &c) {
  check_rank(c);
  ChargedPartition cp;
  if (!c.partition.empty()) {
    cp = {parse_partition(c.partition), c.s.empty() ? c.charge : std::stoi(c.s)};
  } else if (!c.lside.empty()) {
    cp = from_l_indexation({parse_multipartition(c.lside), need_charges(c, c.l)}, c.n, c.l);
  } else if (!c.nside.empty()) {
    cp = from_n_indexation({parse_multipartition(c.nside), need_charges(c, c.n)}, c.n, c.l);
  } else {
    throw InputError("give --partition, --lside or --nside");
  }
  auto ls = to_l_indexation(cp, c.n, c.l);
  auto ns = to_n_indexation(cp, c.n, c.l);
  json j{{"partition", to_string(cp.lambda)}, {"charge", cp.s}, {"lside", label_json(ls)}, {"nside", label_json(ns)}};
  std::ostringstream t;
  t << "partition " << to_string(cp.lambda) << " charge " << cp.s << '\n'
    << "lside " << to_string(ls.mp) << ' ' << charges_string(ls.charges) << '\n'
    << "nside " << to_string(ns.mp) << ' ' << charges_string(ns.charges) << '\n';
  if (c.round_trip) {
    bool ok = from_l_indexation(ls, c.n, c.l) == cp && from_n_indexation(ns, c.n, c.l) == cp;
    j["round_trip"] = ok;
    t << "round_trip " << (ok ? "ok" : "FAILED") << '\n';
    emit(c, j, t.str());
    return ok ? Ok : Mismatch;
  }
  emit(c, j, t.str());
  return Ok;
}

int cmd_canonical(const RunConfig &c) {
  check_rank(c);
  Charges s = need_charges(c, c.l);
  auto cont = need_content(c, s);
  std::vector<int> signs;
  if (c.sign == "+" || c.sign == "both")
    signs.push_back(1);
  if (c.sign == "-" || c.sign == "both")
    signs.push_back(-1);
  if (signs.empty())
    throw InputError("--sign must be +, - or both");
  auto st = make_straightener(c);
  SpanOptions opt;
  opt.max_heisenberg = c.bound;
  auto A = bar_matrix(weight_space(s, cont, c.n, c.l), st, opt);
  json all = json::array();
  std::string text;
  for (int sg : signs) {
    auto t = canonical_basis(A, sg);
    all.push_back(to_json(t));
    text += c.format == "csv" ? to_csv(t) : to_text(t);
  }
  emit(c, signs.size() == 1 ? all[0] : all, text);
  return Ok;
}

int report_exit(const RunConfig &c, const TheoremReport &r) {
  std::ostringstream t;
  t << r.theorem << ": hypothesis " << (r.hypothesis ? "holds" : "FAILS") << " (" << r.hypothesis_detail << ")\n";
  for (auto &x : r.results)
    t << "  sign " << (x.sign > 0 ? '+' : '-') << ": " << (x.verified ? "similar" : "NOT similar") << " nonzero "
      << x.nonzero_source << "/" << x.nonzero_target << (x.detail.empty() ? "" : "  " + x.detail) << '\n';
  for (auto key : {"N", "N_prime", "M", "c"})
    if (r.extra.contains(key))
      t << "  " << key << " = " << r.extra[key] << '\n';
  if (r.conjectural)
    t << "  (conjectural threshold)\n";
  t << (r.verified() ? "verified\n" : "not verified\n");
  emit(c, r.to_json(), t.str());
  if (!r.hypothesis)
    return Unsupported;
  return r.verified() ? Ok : Mismatch;
}

int cmd_thm(const RunConfig &c, int which) {
  check_rank(c);
  Charges s = need_charges(c, c.l);
  auto cont = need_content(c, s);
  auto st = make_straightener(c);
  if (which == 1)
    return report_exit(c, verify_theorem1(s, cont, c.i, c.n, c.l, st, {}, c.jobs));
  if (which == 2)
    return report_exit(c, verify_theorem2(s, cont, c.i, c.n, c.l, st, {}, c.jobs));
  Theorem3Options o;
  std::tie(o.k_lo, o.k_hi) = parse_range(c.krange);
  o.conjectured_threshold = c.conjectured;
  o.bound = c.bound;
  o.jobs = c.jobs;
  return report_exit(c, verify_theorem3(s, cont, c.n, c.l, st, o));
}

int cmd_gamma(const RunConfig &c) {
  check_rank(c);
  Charges r = need_charges(c, c.l);
  if (domain_representative(r, c.n) != r)
    throw InputError("--charges must lie in the fundamental domain");
  auto g = gamma_graph(r, c.M, c.box, c.n);
  std::ostringstream t;
  t << g.vertices.size() << " vertices, " << g.edges.size() << " edges, " << g.components.size() << " components\n";
  for (auto &e : g.edges)
    t << "  " << charges_string(e.from) << " -" << e.i << "-> " << charges_string(e.to) << '\n';
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    t << "  component " << k << " minimal length:";
    for (auto v : g.minimal_length[k])
      t << ' ' << charges_string(g.vertices[v]);
    t << '\n';
  }
  emit(c, g.to_json(), t.str());
  return Ok;
}

json qvec(const QVector &v) {
  json a = json::array();
  for (auto &x : v)
    a.push_back(x.get_str());
  return a;
}

int cmd_cones(const RunConfig &c) {
  check_rank(c);
  Charges r = need_charges(c, c.l);
  json j;
  std::ostringstream t;
  if (!c.target.empty()) {
    Charges tt = parse_charges(c.target);
    auto res = equiv_M(r, tt, c.M, c.n, c.box);
    j = {{"equivalent", res.connected}, {"visited", res.visited}, {"advisory", res.advisory}};
    t << (res.connected ? "equivalent" : "not connected in box") << (res.advisory.empty() ? "" : " (" + res.advisory + ")")
      << '\n';
    emit(c, j, t.str());
    return Ok;
  }
  if (domain_representative(r, c.n) != r)
    throw InputError("--charges must lie in the fundamental domain");
  auto b = b_of_M(c.M, r, c.n);
  auto w = cone_vertex(b);
  auto cc = constructive_c(b);
  auto audit = audit_connectivity(b, cc, static_cast<std::size_t>(c.pairs), c.box, c.box, c.seed);
  j = {{"b", qvec(b)},
       {"vertex", qvec(w)},
       {"constructive_c", qvec(cc)},
       {"m_M_lower_bound", m_M_lower_bound(c.M, r, c.n)},
       {"audit", {{"pairs", audit.pairs}, {"connected", audit.connected}, {"inconclusive", audit.inconclusive}}}};
  t << "b(M) =";
  for (auto &x : b)
    t << ' ' << x.get_str();
  t << "\nvertex =";
  for (auto &x : w)
    t << ' ' << x.get_str();
  t << "\nconstructive c =";
  for (auto &x : cc)
    t << ' ' << x.get_str();
  t << "\nm_M >= " << j["m_M_lower_bound"] << "\naudit " << audit.connected << "/" << audit.pairs << " connected\n";
  if (!c.content.empty() || !c.weight.empty()) {
    auto k = stabilization_constants(need_content(c, r), c.n, c.l);
    j["constants"] = {{"M", k.M}, {"c", k.c}, {"N", k.N}, {"N_prime", k.N_conjectural}, {"N_prime_conjectural", true}};
    t << "M = " << k.M << "  c = " << k.c << "  N = " << k.N << "  N' = " << k.N_conjectural << " (conjectural)\n";
  }
  emit(c, j, t.str());
  return audit.connected == audit.pairs ? Ok : Mismatch;
}

int cmd_crystal(const RunConfig &c) {
  check_rank(c);
  if (!c.dump.empty()) {
    Charges s = need_charges(c, c.l);
    auto edges = crystal_edges(s, c.n, std::stoi(c.dump));
    if (c.format == "dot")
      std::cout << crystal_dot(edges);
    else
      std::cout << crystal_json(edges).dump(2) << '\n';
    return Ok;
  }
  Charges s = need_charges(c, c.l);
  Multipartition mp = parse_multipartition(c.label);
  if (static_cast<int>(mp.size()) != c.l)
    throw InputError("--label needs l components");
  json j;
  std::ostringstream t;
  if (c.dotted) {
    if (c.i < 0 || c.i >= c.l)
      throw InputError("--i out of range");
    auto img = sigma_dot_i(mp, s, c.n, c.l, c.i);
    auto f = kashiwara_fdot(mp, s, c.n, c.l, c.i), e = kashiwara_edot(mp, s, c.n, c.l, c.i);
    j = {{"sigma_dot", label_json(img)},
         {"f_dot", f ? label_json(*f) : json(nullptr)},
         {"e_dot", e ? label_json(*e) : json(nullptr)}};
    t << "sigma_dot_" << c.i << " = " << to_string(img.mp) << ' ' << charges_string(img.charges) << '\n';
  } else {
    if (c.i < 0 || c.i >= c.n)
      throw InputError("--i out of range");
    auto sig = signature(mp, s, c.n, c.i);
    auto f = kashiwara_f(mp, s, c.n, c.i), e = kashiwara_e(mp, s, c.n, c.i);
    auto img = sigma_i(mp, s, c.n, c.i);
    j = {{"signature", sig.str()},
         {"phi", sig.phi()},
         {"epsilon", sig.epsilon()},
         {"f", f ? json(to_string(*f)) : json(nullptr)},
         {"e", e ? json(to_string(*e)) : json(nullptr)},
         {"sigma", to_string(img)}};
    t << "reduced signature " << sig.str() << "  phi " << sig.phi() << "  epsilon " << sig.epsilon() << '\n'
      << "f = " << (f ? to_string(*f) : "0") << "\ne = " << (e ? to_string(*e) : "0") << "\nsigma_" << c.i << " = "
      << to_string(img) << '\n';
  }
  emit(c, j, t.str());
  return Ok;
}

int cmd_act(const RunConfig &c) {
  check_rank(c);
  Charges s = need_charges(c, c.l);
  Multipartition mp = parse_multipartition(c.label);
  if (static_cast<int>(mp.size()) != c.l)
    throw InputError("--label needs l components");
  auto v = FockVector::basis(mp, s);
  FockVector out(s);
  if (c.op == "f" || c.op == "e") {
    out = c.op == "f" ? f_action(c.i, v, c.k, c.n) : e_action(c.i, v, c.k, c.n);
  } else if (c.op == "fdot" || c.op == "edot" || c.op == "B") {
    auto cp = from_l_indexation({mp, s}, c.n, c.l);
    WedgeVector w{cp.s, {}};
    if (c.op == "B") {
      auto st = make_straightener(c);
      w = b_operator(c.i, cp.lambda, cp.s, st);
    } else {
      auto ns = to_n_indexation(cp, c.n, c.l);
      auto img = c.op == "fdot" ? fdot_action(c.i, FockVector::basis(ns.mp, ns.charges), c.k, c.l)
                                : edot_action(c.i, FockVector::basis(ns.mp, ns.charges), c.k, c.l);
      for (auto &[x, e] : img.coeffs)
        w.add(from_n_indexation({x, ns.charges}, c.n, c.l).lambda, e);
    }
    for (auto &[lam, e] : w.coeffs)
      out.add(to_l_indexation({lam, w.s}, c.n, c.l).mp, e);
  } else {
    throw InputError("--op must be f, e, fdot, edot or B");
  }
  json j = json::array();
  for (auto &[x, e] : out.coeffs)
    j.push_back({to_string(x), e.str()});
  emit(c, j, to_string(out) + "\n");
  return Ok;
}

int cmd_bar(const RunConfig &c) {
  check_rank(c);
  Charges s = need_charges(c, c.l);
  Multipartition mp = parse_multipartition(c.label);
  if (static_cast<int>(mp.size()) != c.l)
    throw InputError("--label needs l components");
  auto st = make_straightener(c);
  auto A = bar_matrix(weight_space(s, census(mp, s, c.n), c.n, c.l), st);
  std::size_t col = static_cast<std::size_t>(std::find(A.space.basis.begin(), A.space.basis.end(), mp) - A.space.basis.begin());
  FockVector out(s);
  for (std::size_t r = 0; r < A.space.dim(); ++r)
    out.add(A.space.basis[r], A.entries(r, col));
  json j = json::array();
  for (auto &[x, e] : out.coeffs)
    j.push_back({to_string(x), e.str()});
  emit(c, j, to_string(out) + "\n");
  return Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"q-deformed Fock space toolkit: labels, actions, canonical bases"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App *sub) {
    sub->add_option("--n", c.n, "rank of the undotted algebra");
    sub->add_option("--l", c.l, "level, number of l-side components");
    sub->add_option("--s", c.s, "total charge");
    sub->add_option("--charges", c.charges, "multi-charge, e.g. (1,0)");
    sub->add_option("--content", c.content, "residue content N_0,...,N_{n-1}");
    sub->add_option("--weight", c.weight, "weight as lam_0,...,lam_{n-1};d");
    sub->add_option("--i", c.i, "generator index");
    sub->add_option("--sign", c.sign, "+, - or both");
    sub->add_option("--format", c.format, "json, csv, text (dot for crystal dumps)");
    sub->add_option("--bound", c.bound, "word-length bound");
    sub->add_option("--box", c.box, "search box margin or window");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--jobs", c.jobs, "parallel weight-space jobs (0 = auto)");
    sub->add_flag("--conjectured-threshold", c.conjectured, "use the conjectural threshold");
  };
  auto *convert = app.add_subcommand("convert", "convert between the three labelings");
  common(convert);
  convert->add_option("--partition", c.partition, "partition, e.g. [4,3,3,2,1]");
  convert->add_option("--charge", c.charge, "charge of the partition");
  convert->add_option("--lside", c.lside, "l-multipartition");
  convert->add_option("--nside", c.nside, "n-multipartition");
  convert->add_flag("--round-trip", c.round_trip, "check both inverse conversions");
  auto *canonical = app.add_subcommand("canonical", "transition matrices of a weight space");
  common(canonical);
  auto *t1 = app.add_subcommand("verify-thm1", "similarity across sigma_i");
  common(t1);
  auto *t2 = app.add_subcommand("verify-thm2", "similarity across sigma_dot_i");
  common(t2);
  auto *t3 = app.add_subcommand("verify-thm3", "similarity along a translation family");
  common(t3);
  t3->add_option("--k-range", c.krange, "a..b");
  auto *gamma = app.add_subcommand("gamma", "the graph Gamma(M) on a window of an orbit");
  common(gamma);
  gamma->add_option("--M", c.M, "gap threshold");
  auto *cones = app.add_subcommand("cones", "cone data, constructive c and audits");
  common(cones);
  cones->add_option("--M", c.M, "dominance level");
  cones->add_option("--pairs", c.pairs, "audit pairs");
  cones->add_option("--target", c.target, "decide equivalence with these charges");
  auto *crystal = app.add_subcommand("crystal", "Kashiwara operators and string reflections");
  common(crystal);
  crystal->add_option("--label", c.label, "l-multipartition");
  crystal->add_flag("--dotted", c.dotted, "dotted operators");
  crystal->add_option("--dump", c.dump, "dump edges up to this size");
  auto *act = app.add_subcommand("act", "apply a generator to a standard basis vector");
  common(act);
  act->add_option("--label", c.label, "l-multipartition");
  act->add_option("--op", c.op, "f, e, fdot, edot or B (B uses --i as m)");
  act->add_option("--k", c.k, "divided power");
  auto *bar = app.add_subcommand("bar", "bar involution of a standard basis vector");
  common(bar);
  bar->add_option("--label", c.label, "l-multipartition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return BadInput;
  }
  try {
    if (*convert)
      return cmd_convert(c);
    if (*canonical)
      return cmd_canonical(c);
    if (*t1)
      return cmd_thm(c, 1);
    if (*t2)
      return cmd_thm(c, 2);
    if (*t3)
      return cmd_thm(c, 3);
    if (*gamma)
      return cmd_gamma(c);
    if (*cones)
      return cmd_cones(c);
    if (*crystal)
      return cmd_crystal(c);
    if (*act)
      return cmd_act(c);
    if (*bar)
      return cmd_bar(c);
  } catch (const HypothesisFailed &e) {
    std::cerr << "hypothesis failed: " << e.what() << '\n';
    return Unsupported;
  } catch (const SpanningFailed &e) {
    std::cerr << "spanning failed: " << e.what() << '\n';
    return Unsupported;
  } catch (const TranscriptionUnavailable &e) {
    std::cerr << e.what() << '\n';
    return Unsupported;
  } catch (const std::invalid_argument &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return BadInput;
  } catch (const std::out_of_range &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return BadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return Unsupported;
  }
  return BadInput;
}
