#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxlat/checks.hpp"
#include "coxlat/closure.hpp"
#include "coxlat/errors.hpp"
#include "coxlat/finite_model.hpp"
#include "coxlat/galois.hpp"
#include "coxlat/orders.hpp"
#include "coxlat/parabolic.hpp"
#include "coxlat/system_io.hpp"
#include "coxlat/weak_order.hpp"
#include "json.hpp"

using namespace coxlat;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kTheoremFailure = 1;
constexpr int kLimit = 2;
constexpr int kBadInput = 3;
constexpr int kCounterexample = 4;

struct Session {
  std::string system_arg = "A3";
  int depth = 40;
  std::string format = "text";

  SystemPtr sys;
  std::optional<RootTable> table;

  RootTable& t() { return *table; }
  bool json() const { return format == "json"; }

  void open() {
    if (format != "text" && format != "json") {
      throw input_error("format must be text or json");
    }
    sys = load_system(system_arg);
    table.emplace(RootTable::generate(sys, depth));
  }
};

RootSet omni_set(const RootTable& t) {
  RootSet s(t);
  for (int k = 0; k < t.size(); ++k) {
    s.insert(k);
    s.insert(RootTable::negate(k));
  }
  return s;
}

ClosureKind kind_of(const std::string& name) {
  if (name == "two") return ClosureKind::two;
  if (name == "cone") return ClosureKind::cone;
  if (name == "zsum") return ClosureKind::zsum;
  throw input_error("closure kind must be two, cone, or zsum");
}

GaloisFlavor flavor_of(const std::string& name) {
  if (name == "R") return GaloisFlavor::inversions;
  if (name == "Rprime") return GaloisFlavor::complement;
  throw input_error("flavor must be R or Rprime");
}

std::vector<int> parse_j(const std::string& csv, int rank) {
  std::vector<int> J;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int s = 0;
    try {
      s = std::stoi(tok);
    } catch (const std::exception&) {
      throw input_error("bad generator index '" + tok + "'");
    }
    if (s < 1 || s > rank) {
      throw input_error("generator index " + tok + " out of range 1.." +
                        std::to_string(rank));
    }
    J.push_back(s - 1);
  }
  return J;
}

std::string words_of(const FiniteModel& fm, const std::vector<int>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += fm.element(idx[i]).str();
  }
  return out + "}";
}

ordered_json words_json(const FiniteModel& fm, const std::vector<int>& idx) {
  ordered_json arr = ordered_json::array();
  for (int i : idx) arr.push_back(fm.element(i).str());
  return arr;
}

std::string seq_str(const RootTable& t, const std::vector<int>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += " ";
    out += t.root_str(seq[i]);
  }
  return out;
}

void cmd_define(Session& s) {
  const RootTable& t = s.t();
  if (s.json()) {
    ordered_json j;
    j["system"] = s.sys->describe();
    j["rank"] = s.sys->rank();
    ordered_json labels = ordered_json::array();
    for (int a = 0; a < s.sys->rank(); ++a) {
      for (int b = a + 1; b < s.sys->rank(); ++b) {
        labels.push_back({a + 1, b + 1, s.sys->label(a, b)});
      }
    }
    j["labels"] = labels;
    j["crystallographic"] = s.sys->crystallographic();
    j["positive_roots"] = t.size();
    j["complete"] = t.complete();
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << s.sys->describe() << "\n";
  std::cout << "positive roots: " << t.size()
            << (t.complete() ? " (complete)"
                             : " (truncated at depth " +
                                   std::to_string(t.depth_cap()) + ")")
            << "\n";
  std::cout << "crystallographic: "
            << (s.sys->crystallographic() ? "yes" : "no") << "\n";
}

void cmd_roots(Session& s) {
  const RootTable& t = s.t();
  if (s.json()) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k < t.size(); ++k) {
      ordered_json j;
      j["root"] = t.root_str(k);
      j["coords"] = t.coords_str(k);
      j["depth"] = t.depth(k);
      arr.push_back(j);
    }
    std::cout << arr.dump() << "\n";
    return;
  }
  for (int k = 0; k < t.size(); ++k) {
    std::cout << t.root_str(k) << "  " << t.coords_str(k) << "  depth "
              << t.depth(k) << "\n";
  }
}

void cmd_closure(Session& s, const std::string& kind,
                 const std::string& literal) {
  RootTable& t = s.t();
  RootSet gamma = parse_root_set(t, literal);
  ClosureResult res = closure(t, kind_of(kind), gamma, omni_set(t));
  if (s.json()) {
    ordered_json j;
    j["infinite"] = res.is_infinite();
    if (res.is_infinite()) {
      auto [a, b] = res.witness();
      j["plane"] = {t.root_str(a), t.root_str(b)};
    } else {
      j["set"] = res.set().str();
    }
    std::cout << j.dump() << "\n";
    return;
  }
  if (res.is_infinite()) {
    auto [a, b] = res.witness();
    std::cout << "INFINITE plane(" << t.root_str(a) << "," << t.root_str(b)
              << ")\n";
  } else {
    std::cout << res.set().str() << "\n";
  }
}

void cmd_join(Session& s, const std::vector<std::string>& words) {
  RootTable& t = s.t();
  std::vector<GroupElement> xs;
  for (const auto& w : words) xs.push_back(parse_element(s.sys, w));
  JoinOutcome j = join(t, xs);
  if (s.json()) {
    ordered_json out;
    out["exists"] = j.has_join();
    if (j.has_join()) {
      out["element"] = j.element().str();
    } else if (j.reason() == NoJoinReason::infinite_closure) {
      auto [a, b] = j.infinite_witness();
      out["reason"] = "InfiniteClosure";
      out["plane"] = {t.root_str(a), t.root_str(b)};
    } else {
      out["reason"] = "NotBiclosed";
      out["residue"] = j.residue().str();
    }
    std::cout << out.dump() << "\n";
    return;
  }
  if (j.has_join()) {
    std::cout << j.element().str() << "\n";
  } else if (j.reason() == NoJoinReason::infinite_closure) {
    auto [a, b] = j.infinite_witness();
    std::cout << "NOJOIN:InfiniteClosure plane(" << t.root_str(a) << ","
              << t.root_str(b) << ")\n";
  } else {
    std::cout << "NOJOIN:NotBiclosed residue=" << j.residue().str() << "\n";
  }
}

void cmd_meet(Session& s, const std::vector<std::string>& words) {
  std::vector<GroupElement> xs;
  for (const auto& w : words) xs.push_back(parse_element(s.sys, w));
  GroupElement m = meet(xs);
  if (s.json()) {
    ordered_json out;
    out["element"] = m.str();
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << m.str() << "\n";
}

void cmd_galois_pairs(Session& s, const std::string& flavor) {
  FiniteModel fm = FiniteModel::build(s.t());
  auto gc = GaloisConnection::build(fm, flavor_of(flavor));
  auto pairs = gc.stable_pairs();
  if (s.json()) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pairs) {
      ordered_json j;
      j["subgroup"] = words_json(fm, p.subgroup);
      j["subsemilattice"] = words_json(fm, p.subsemilattice);
      arr.push_back(j);
    }
    std::cout << arr.dump() << "\n";
    return;
  }
  std::cout << "stable pairs: " << pairs.size() << "\n";
  for (const auto& p : pairs) {
    std::cout << words_of(fm, p.subgroup) << " | "
              << words_of(fm, p.subsemilattice) << "\n";
  }
}

void cmd_galois_dagger(Session& s, const std::string& flavor,
                       const std::vector<std::string>& words) {
  FiniteModel fm = FiniteModel::build(s.t());
  auto gc = GaloisConnection::build(fm, flavor_of(flavor));
  std::vector<int> xs;
  for (const auto& w : words) {
    xs.push_back(fm.index_of(parse_element(s.sys, w)));
  }
  auto d = gc.dagger(xs);
  if (s.json()) {
    ordered_json out;
    out["dagger"] = words_json(fm, d);
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << words_of(fm, d) << "\n";
}

std::vector<RootSet> parabolic_family(Session& s, const ParabolicSet& p,
                                      int max_length) {
  if (max_length >= 0) {
    return biclosed_in_lambda_rank1(s.t(), p, max_length);
  }
  return biclosed_in_lambda(s.t(), p);
}

void cmd_parabolic(Session& s, const std::string& jcsv, int max_length,
                   const std::string& action,
                   const std::vector<std::string>& literals) {
  RootTable& t = s.t();
  ParabolicSet p = lambda_j(t, parse_j(jcsv, s.sys->rank()));
  if (action == "list") {
    auto fam = parabolic_family(s, p, max_length);
    if (s.json()) {
      ordered_json out;
      out["count"] = fam.size();
      ordered_json arr = ordered_json::array();
      for (const auto& g : fam) arr.push_back(g.str());
      out["elements"] = arr;
      std::cout << out.dump() << "\n";
      return;
    }
    std::cout << "elements: " << fam.size() << "\n";
    for (const auto& g : fam) std::cout << g.str() << "\n";
    return;
  }
  if (action == "hasse") {
    PosetCensus pc = poset_census(parabolic_family(s, p, max_length));
    if (s.json()) {
      ordered_json out;
      ordered_json els = ordered_json::array();
      for (const auto& g : pc.elements) els.push_back(g.str());
      out["elements"] = els;
      ordered_json cov = ordered_json::array();
      for (const auto& [lo, hi] : pc.covers) cov.push_back({lo, hi});
      out["covers"] = cov;
      out["chain_lengths"] = pc.chain_lengths;
      std::cout << out.dump() << "\n";
      return;
    }
    std::cout << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < pc.elements.size(); ++i) {
      std::cout << "  n" << i << " [label=\"" << pc.elements[i].str()
                << "\"];\n";
    }
    for (const auto& [lo, hi] : pc.covers) {
      std::cout << "  n" << lo << " -> n" << hi << ";\n";
    }
    std::cout << "}\n";
    return;
  }
  if (action == "join" || action == "meet") {
    if (literals.size() < 2) {
      throw input_error(action + " needs at least two set literals");
    }
    std::vector<RootSet> gammas;
    for (const auto& l : literals) gammas.push_back(parse_root_set(t, l));
    if (action == "meet") {
      RootSet m = pmeet(t, p.lambda, gammas);
      if (s.json()) {
        ordered_json out;
        out["set"] = m.str();
        std::cout << out.dump() << "\n";
      } else {
        std::cout << m.str() << "\n";
      }
      return;
    }
    SetJoin sj = pjoin(t, p.lambda, gammas);
    if (s.json()) {
      ordered_json out;
      out["exists"] = sj.has_join();
      if (sj.has_join()) {
        out["set"] = sj.set().str();
      } else if (sj.reason() == NoJoinReason::infinite_closure) {
        auto [a, b] = sj.infinite_witness();
        out["reason"] = "InfiniteClosure";
        out["plane"] = {t.root_str(a), t.root_str(b)};
      } else {
        out["reason"] = "NotBiclosed";
        out["closure"] = sj.closed_union().str();
      }
      std::cout << out.dump() << "\n";
      return;
    }
    if (sj.has_join()) {
      std::cout << sj.set().str() << "\n";
    } else if (sj.reason() == NoJoinReason::infinite_closure) {
      auto [a, b] = sj.infinite_witness();
      std::cout << "NOJOIN:InfiniteClosure plane(" << t.root_str(a) << ","
                << t.root_str(b) << ")\n";
    } else {
      std::cout << "NOJOIN:NotBiclosed closure=" << sj.closed_union().str()
                << "\n";
    }
    return;
  }
  throw input_error("parabolic action must be list, hasse, join, or meet");
}

void print_orders(Session& s, const std::vector<std::vector<int>>& orders) {
  if (s.json()) {
    ordered_json out;
    out["count"] = orders.size();
    ordered_json arr = ordered_json::array();
    for (const auto& seq : orders) {
      ordered_json one = ordered_json::array();
      for (int k : seq) one.push_back(s.t().root_str(k));
      arr.push_back(one);
    }
    out["orders"] = arr;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "orders: " << orders.size() << "\n";
  for (const auto& seq : orders) std::cout << seq_str(s.t(), seq) << "\n";
}

void cmd_order_tau(Session& s, const std::string& literal, int max_length) {
  RootTable& t = s.t();
  auto reach = tau_bruhat(t, parse_root_set(t, literal), max_length);
  if (s.json()) {
    ordered_json out;
    out["count"] = reach.size();
    ordered_json arr = ordered_json::array();
    for (const auto& g : reach) arr.push_back(g.str());
    out["elements"] = arr;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "elements: " << reach.size() << "\n";
  for (const auto& g : reach) std::cout << g.str() << "\n";
}

int cmd_check(Session& s, const std::string& id, const std::string& out_path) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = check_ids();
  } else {
    ids.push_back(id);
  }
  std::vector<CheckReport> reports;
  for (const auto& one : ids) {
    auto rs = run_check(one, s.t(), s.system_arg);
    reports.insert(reports.end(), rs.begin(), rs.end());
  }

  std::optional<std::ofstream> sink;
  if (!out_path.empty()) {
    sink.emplace(out_path);
    if (!*sink) throw input_error("cannot write '" + out_path + "'");
  }
  for (const auto& r : reports) {
    std::string line = to_jsonl(r);
    if (sink) *sink << line << "\n";
    if (s.json()) {
      std::cout << line << "\n";
    } else {
      std::cout << "[" << r.status << "] " << r.check << " " << r.instance
                << " (" << r.ms << " ms)"
                << (r.witness.empty() ? "" : "  " + r.witness) << "\n";
    }
  }

  bool theorem_fail = false, conjecture_fail = false, limited = false;
  for (const auto& r : reports) {
    if (r.status == "fail") {
      (is_conjecture(r.check) ? conjecture_fail : theorem_fail) = true;
    } else if (r.status == "unknown-limit") {
      limited = true;
    }
  }
  if (theorem_fail) return kTheoremFailure;
  if (conjecture_fail) return kCounterexample;
  if (limited) return kLimit;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system closures, weak-order lattices, and "
               "conjecture probes"};
  app.require_subcommand(1);

  Session s;
  app.add_option("--system", s.system_arg,
                 "system file or shorthand (A<n>, B<n>, G2, H2, I<m>, Ainf)");
  app.add_option("--depth", s.depth, "root table depth cap");
  app.add_option("--format", s.format, "output format: text or json");

  int exit_code = kOk;
  std::function<void()> action;

  auto* define = app.add_subcommand("define", "show the system");
  define->fallthrough();
  define->callback([&] { action = [&] { cmd_define(s); }; });

  auto* roots = app.add_subcommand("roots", "list the positive roots");
  roots->fallthrough();
  roots->callback([&] { action = [&] { cmd_roots(s); }; });

  auto* closure_cmd =
      app.add_subcommand("closure", "close a set of signed roots");
  closure_cmd->fallthrough();
  auto closure_kind = std::make_shared<std::string>("two");
  auto closure_set = std::make_shared<std::string>();
  closure_cmd->add_option("--kind", *closure_kind, "two, cone, or zsum");
  closure_cmd->add_option("set", *closure_set, "set literal, e.g. {#1,-#2}")
      ->required();
  closure_cmd->callback([&, closure_kind, closure_set] {
    action = [&, closure_kind, closure_set] {
      cmd_closure(s, *closure_kind, *closure_set);
    };
  });

  auto* join_cmd = app.add_subcommand("join", "weak-order join of elements");
  join_cmd->fallthrough();
  auto join_words = std::make_shared<std::vector<std::string>>();
  join_cmd->add_option("words", *join_words, "element words, e.g. 1.2.1")
      ->required();
  join_cmd->callback([&, join_words] {
    action = [&, join_words] { cmd_join(s, *join_words); };
  });

  auto* meet_cmd = app.add_subcommand("meet", "weak-order meet of elements");
  meet_cmd->fallthrough();
  auto meet_words = std::make_shared<std::vector<std::string>>();
  meet_cmd->add_option("words", *meet_words, "element words")->required();
  meet_cmd->callback([&, meet_words] {
    action = [&, meet_words] { cmd_meet(s, *meet_words); };
  });

  auto* galois = app.add_subcommand("galois", "stable pair connection");
  galois->require_subcommand(1);
  galois->fallthrough();
  auto flavor = std::make_shared<std::string>("R");
  galois->add_option("--flavor", *flavor, "R or Rprime");
  auto* pairs = galois->add_subcommand("pairs", "all stable pairs");
  pairs->fallthrough();
  pairs->callback([&, flavor] {
    action = [&, flavor] { cmd_galois_pairs(s, *flavor); };
  });
  auto* dagger = galois->add_subcommand("dagger", "elements related to all");
  dagger->fallthrough();
  auto dagger_words = std::make_shared<std::vector<std::string>>();
  dagger->add_option("words", *dagger_words, "element words")->required();
  dagger->callback([&, flavor, dagger_words] {
    action = [&, flavor, dagger_words] {
      cmd_galois_dagger(s, *flavor, *dagger_words);
    };
  });

  auto* parabolic = app.add_subcommand("parabolic", "sliced biclosed order");
  parabolic->fallthrough();
  auto jcsv = std::make_shared<std::string>();
  auto plen = std::make_shared<int>(-1);
  auto paction = std::make_shared<std::string>();
  auto pliterals = std::make_shared<std::vector<std::string>>();
  parabolic->add_option("--j", *jcsv, "generator indices, e.g. 1 or 1,2");
  parabolic->add_option("--max-length", *plen,
                        "length bound for rank-one slices of infinite "
                        "systems");
  parabolic->add_option("action", *paction, "list, hasse, join, or meet")
      ->required();
  parabolic->add_option("sets", *pliterals, "set literals for join/meet");
  parabolic->callback([&, jcsv, plen, paction, pliterals] {
    action = [&, jcsv, plen, paction, pliterals] {
      cmd_parabolic(s, *jcsv, *plen, *paction, *pliterals);
    };
  });

  auto* order = app.add_subcommand("order", "reflection orders and paths");
  order->require_subcommand(1);
  order->fallthrough();
  auto* order_all = order->add_subcommand("all", "every reflection order");
  order_all->fallthrough();
  order_all->callback([&] {
    action = [&] { print_orders(s, enumerate_reflection_orders(s.t())); };
  });
  auto* order_of =
      order->add_subcommand("of", "admissible orders of one element");
  order_of->fallthrough();
  auto order_word = std::make_shared<std::string>();
  order_of->add_option("word", *order_word, "element word")->required();
  order_of->callback([&, order_word] {
    action = [&, order_word] {
      print_orders(s, admissible_orders_of(
                          s.t(), parse_element(s.sys, *order_word)));
    };
  });
  auto* order_tau = order->add_subcommand(
      "tau", "elements reachable along rising labelled steps");
  order_tau->fallthrough();
  auto tau_set = std::make_shared<std::string>();
  auto tau_len = std::make_shared<int>(-1);
  order_tau->add_option("set", *tau_set, "positive-root set literal")
      ->required();
  order_tau->add_option("--max-length", *tau_len, "length bound");
  order_tau->callback([&, tau_set, tau_len] {
    action = [&, tau_set, tau_len] { cmd_order_tau(s, *tau_set, *tau_len); };
  });

  auto* check = app.add_subcommand("check", "run a registered check");
  check->fallthrough();
  auto check_id = std::make_shared<std::string>();
  auto check_out = std::make_shared<std::string>();
  check->add_option("id", *check_id, "check id or 'all'")->required();
  check->add_option("--out", *check_out, "also write JSONL to this file");
  check->callback([&, check_id, check_out] {
    action = [&, check_id, check_out] {
      exit_code = cmd_check(s, *check_id, *check_out);
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    s.open();
    action();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const truncation_error& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kLimit;
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return exit_code;
}
