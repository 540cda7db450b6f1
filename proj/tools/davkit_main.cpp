// davkit_main.cpp -- command line front end.
//
// Thin orchestration only: every computation lives in the library.  Each
// value is printed with the path that produced it (engine, ledger, cap,
// code-bridge, registry, formula, sampling) so independent routes to the
// same number stay distinguishable in output.  Exit codes: 0 = answered,
// 1 = error, 2 = honestly inconclusive (a search or budget limit was hit
// before the question was settled).
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "davkit/asymptotics.hpp"
#include "davkit/bounds.hpp"
#include "davkit/capsets.hpp"
#include "davkit/codes.hpp"
#include "davkit/engine.hpp"
#include "davkit/errors.hpp"
#include "davkit/group.hpp"
#include "davkit/registry.hpp"

namespace {

using nlohmann::ordered_json;
using namespace davkit;

struct RunConfig {
  std::string command;  // e.g. "compute.s", "asymp.table"

  // group and weights
  std::vector<int> factors;
  int p = 0;
  int r = 0;
  std::string weights = "full";

  // parameters
  int d = 0;
  int m = 0;
  std::vector<int> L;
  int n = 0;
  int target = 0;
  int mmax = 5;
  int dmax = 4;
  int count = 100;
  int trials = 2000;
  bool use_registry = true;

  // limits and plumbing
  long long limit = 256;
  double budget = 0;  // seconds, 0 = off
  std::string format = "text";
  std::uint64_t seed = 12345;
  int threads = 1;

  std::string file;
  std::string coords;
  std::string explain;
};

ordered_json config_to_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["factors"] = c.factors;
  j["p"] = c.p;
  j["r"] = c.r;
  j["weights"] = c.weights;
  j["d"] = c.d;
  j["m"] = c.m;
  j["L"] = c.L;
  j["n"] = c.n;
  j["target"] = c.target;
  j["mmax"] = c.mmax;
  j["dmax"] = c.dmax;
  j["count"] = c.count;
  j["trials"] = c.trials;
  j["use_registry"] = c.use_registry;
  j["limit"] = c.limit;
  j["budget"] = c.budget;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["file"] = c.file;
  j["coords"] = c.coords;
  j["explain"] = c.explain;
  return j;
}

RunConfig config_from_json(const ordered_json& j) {
  RunConfig c;
  c.command = j.value("command", std::string());
  c.factors = j.value("factors", std::vector<int>());
  c.p = j.value("p", 0);
  c.r = j.value("r", 0);
  c.weights = j.value("weights", std::string("full"));
  c.d = j.value("d", 0);
  c.m = j.value("m", 0);
  c.L = j.value("L", std::vector<int>());
  c.n = j.value("n", 0);
  c.target = j.value("target", 0);
  c.mmax = j.value("mmax", 5);
  c.dmax = j.value("dmax", 4);
  c.count = j.value("count", 100);
  c.trials = j.value("trials", 2000);
  c.use_registry = j.value("use_registry", true);
  c.limit = j.value("limit", 256LL);
  c.budget = j.value("budget", 0.0);
  c.format = j.value("format", std::string("text"));
  c.seed = j.value("seed", std::uint64_t{12345});
  c.threads = j.value("threads", 1);
  c.file = j.value("file", std::string());
  c.coords = j.value("coords", std::string());
  c.explain = j.value("explain", std::string());
  return c;
}

Group make_group(const RunConfig& cfg) {
  if (!cfg.factors.empty()) return Group(cfg.factors);
  if (cfg.p >= 2) return Group::elementary(cfg.p, cfg.r > 0 ? cfg.r : 1);
  throw BadArgsError("group required: --p [--r] or --factors");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// reads cfg.file, "-" meaning stdin
std::string slurp_input(const RunConfig& cfg) {
  if (cfg.file.empty()) throw BadArgsError("--file required");
  if (cfg.file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(cfg.file);
  if (!in) throw BadArgsError("cannot open " + cfg.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<int>> parse_coord_lists(const std::string& spec) {
  std::vector<std::vector<int>> lists;
  std::istringstream entries(spec);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    std::vector<int> coords;
    std::istringstream cs(entry);
    std::string c;
    while (std::getline(cs, c, ',')) coords.push_back(std::stoi(c));
    if (coords.empty()) throw BadArgsError("empty entry in --coords");
    lists.push_back(std::move(coords));
  }
  if (lists.empty()) throw BadArgsError("--coords is empty");
  return lists;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// compute

int emit_constant(const RunConfig& cfg, const std::string& name,
                  const Group& g, const ConstantValue& v, const char* prov) {
  const char* kind = v.is_finite()    ? "finite"
                     : v.is_infinite() ? "infinite"
                                       : "unknown";
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["group"] = g.str();
    j["weights"] = cfg.weights;
    j["constant"] = name;
    j["kind"] = kind;
    if (v.is_finite()) j["value"] = v.value;
    if (v.is_unknown()) j["limit"] = v.value;
    j["provenance"] = prov;
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "constant,group,weights,value,provenance\n"
              << name << "," << g.str() << "," << csv_field(cfg.weights) << ","
              << v.str() << "," << prov << "\n";
  } else {
    std::cout << name << "(" << g.str() << ") = " << v.str() << "  [" << prov
              << "]\n";
  }
  return v.is_unknown() ? 2 : 0;
}

int cmd_compute_s(const RunConfig& cfg) {
  Group g = make_group(cfg);
  WeightSet w = parse_weights(cfg.weights, g);
  if (cfg.L.empty() && cfg.d < 1)
    throw BadArgsError("compute s needs --d >= 1 or --L");
  ConstantValue v = cfg.L.empty() ? s_le_d(g, w, cfg.d, cfg.limit)
                                  : s_constant(g, w, cfg.L, cfg.limit);
  std::string name =
      cfg.L.empty() ? s_key(cfg.d) : "s_L{" + join_ints(cfg.L, ",") + "}";
  return emit_constant(cfg, name, g, v, "engine");
}

int cmd_compute_d(const RunConfig& cfg) {
  Group g = make_group(cfg);
  WeightSet w = parse_weights(cfg.weights, g);
  int m = cfg.m > 0 ? cfg.m : 1;
  ConstantValue v = d_constant(g, w, m, cfg.limit);
  return emit_constant(cfg, d_key(m), g, v, "engine");
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const RunConfig& cfg) {
  Group g = make_group(cfg);
  WeightSet w = parse_weights(cfg.weights, g);
  LedgerTargets t;
  t.d_max = cfg.dmax;
  t.m_max = cfg.mmax;
  t.use_registry = cfg.use_registry;
  LedgerResult res = ledger_fixpoint(g, w, t);

  if (!cfg.explain.empty()) {
    std::cout << res.explain(cfg.explain);
    return 0;
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["provenance"] = "ledger";
    j["ledger"] = ordered_json::parse(res.to_json());
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "constant,lo,hi,lo_rule,hi_rule\n";
    for (const auto& [key, row] : res.entries)
      std::cout << key << "," << row.lo.value.str() << ","
                << row.hi.value.str() << "," << row.lo.rule << ","
                << row.hi.rule << "\n";
  } else {
    std::printf("ledger %s / %s  (d <= %d, m <= %d, registry %s)  [ledger]\n",
                res.group_label.c_str(), res.weights_label.c_str(), t.d_max,
                t.m_max, t.use_registry ? "on" : "off");
    for (const auto& [key, row] : res.entries)
      std::printf("  %-7s [%s, %s]  lo %s  hi %s\n", key.c_str(),
                  row.lo.value.str().c_str(), row.hi.value.str().c_str(),
                  row.lo.rule.c_str(), row.hi.rule.c_str());
    if (!res.children.empty()) {
      std::printf("subgroup ledgers:");
      for (const auto& [label, rows] : res.children) {
        (void)rows;
        std::printf(" %s", label.c_str());
      }
      std::printf("\n");
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// capset

int cmd_capset_search(const RunConfig& cfg, SearchMode mode) {
  if (mode == SearchMode::find && cfg.target < 1)
    throw BadArgsError("capset find needs --target >= 1");
  int target = cfg.target < 1 ? 1 : cfg.target;  // prove mode: target optional
  CapSearchResult res = max_cap_search(cfg.p, cfg.r, target, mode, cfg.threads);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = cfg.p;
    j["r"] = cfg.r;
    j["target"] = cfg.target;
    j["found"] = res.found;
    j["proven"] = res.proven;
    j["best"] = res.best;
    j["cap"] = res.cap;
    j["provenance"] = "cap";
    emit_json(j);
  } else {
    std::string goal =
        cfg.target >= 1 ? " target " + std::to_string(cfg.target) : "";
    std::string reached =
        cfg.target >= 1
            ? (res.found ? ", target reached" : ", target not reached")
            : "";
    std::printf("cap search PG(%d,%d)%s: best %d%s%s  [cap]\n", cfg.r - 1,
                cfg.p, goal.c_str(), res.best, reached.c_str(),
                res.proven ? ", proven maximum" : "");
    for (const ProjPoint& pt : res.cap)
      std::cout << "  " << join_ints(pt, " ") << "\n";
  }
  if (mode == SearchMode::prove) return 0;
  return res.found ? 0 : 2;
}

int cmd_capset_verify(const RunConfig& cfg) {
  std::istringstream in(slurp_input(cfg));
  CapSet c = parse_cap(in);
  CapCheck chk = is_cap(c.points, c.p);
  if (chk.ok) {
    if (cfg.format == "json") {
      ordered_json j;
      j["command"] = cfg.command;
      j["p"] = c.p;
      j["r"] = c.r;
      j["n"] = c.size();
      j["ok"] = true;
      j["provenance"] = "cap";
      emit_json(j);
    } else {
      std::printf("cap ok: %d points in PG(%d,%d)  [cap]\n", c.size(),
                  c.r - 1, c.p);
    }
    return 0;
  }
  const CollinearTriple& t = *chk.triple;
  std::printf("NOT a cap: points %d,%d,%d vanish with coefficients %d,%d,%d\n",
              t.i, t.j, t.k, t.coeffs[0], t.coeffs[1], t.coeffs[2]);
  return 1;
}

// ---------------------------------------------------------------------------
// code

LinearCode load_code(const RunConfig& cfg) {
  std::istringstream in(slurp_input(cfg));
  return code_from_pcm(parse_pcm(in));
}

int cmd_code_mindist(const RunConfig& cfg) {
  LinearCode c = load_code(cfg);
  ConstantValue dist = min_distance(c);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = c.p();
    j["n"] = c.n();
    j["k"] = c.k();
    j["kind"] = dist.is_finite() ? "finite" : "infinite";
    if (dist.is_finite()) j["value"] = dist.value;
    j["provenance"] = "code-bridge";
    emit_json(j);
  } else {
    std::printf("[%d,%d]_%d code: min distance = %s  [code-bridge]\n", c.n(),
                c.k(), c.p(), dist.str().c_str());
  }
  return 0;
}

int cmd_code_admissible(const RunConfig& cfg) {
  LinearCode c = load_code(cfg);
  int m = cfg.m > 0 ? cfg.m : 2;
  AdmissibleResult res = is_m_admissible(c, m);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = c.p();
    j["n"] = c.n();
    j["k"] = c.k();
    j["m"] = m;
    j["admissible"] = res.admissible;
    if (!res.admissible) j["words"] = res.words;
    j["provenance"] = "code-bridge";
    emit_json(j);
  } else {
    std::printf("[%d,%d]_%d code: %d-admissible: %s  [code-bridge]\n", c.n(),
                c.k(), c.p(), m, res.admissible ? "yes" : "no");
    if (!res.admissible) {
      std::printf("  disjoint-support words:\n");
      for (const auto& word : res.words)
        std::cout << "    " << join_ints(word, " ") << "\n";
    }
  }
  return 0;
}

int cmd_code_from_seq(const RunConfig& cfg) {
  Group g = make_group(cfg);
  if (cfg.coords.empty()) throw BadArgsError("--coords required");
  Seq s = Seq::from_coord_lists(g, parse_coord_lists(cfg.coords));
  LinearCode c = code_from_sequence(s, g);
  ConstantValue dist = min_distance(c);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["group"] = g.str();
    j["p"] = c.p();
    j["n"] = c.n();
    j["k"] = c.k();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < c.pcm.rows; ++i) {
      ordered_json row = ordered_json::array();
      for (int jj = 0; jj < c.pcm.cols; ++jj) row.push_back(c.pcm.at(i, jj));
      rows.push_back(row);
    }
    j["pcm"] = rows;
    j["kind"] = dist.is_finite() ? "finite" : "infinite";
    if (dist.is_finite()) j["value"] = dist.value;
    j["provenance"] = "code-bridge";
    emit_json(j);
  } else {
    write_pcm(c.pcm, std::cout);
    std::printf("min distance = %s  [code-bridge]\n", dist.str().c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// asymp

int cmd_asymp_table(const RunConfig& cfg) {
  CoeffTable t = coeff_table(cfg.p, cfg.mmax);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = t.p;
    ordered_json rows = ordered_json::array();
    for (const CoeffRow& row : t.rows) {
      ordered_json rj;
      rj["m"] = row.m;
      rj["lower"] = row.lower;
      rj["upper"] = row.upper;
      rj["fn"] = bound_kind_str(row.kind);
      rows.push_back(rj);
    }
    j["rows"] = rows;
    j["notes"] = t.notes;
    j["provenance"] = "formula";
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << coeff_table_csv(t);
    for (const std::string& note : t.notes)
      std::cerr << "note: " << note << "\n";
  } else {
    std::printf("coefficient table p = %d  [formula]\n", t.p);
    std::printf("  m   lower   upper   via\n");
    for (const CoeffRow& row : t.rows)
      std::printf("  %-3d %.3f   %.3f   %s\n", row.m, row.lower, row.upper,
                  bound_kind_str(row.kind).c_str());
    for (const std::string& note : t.notes)
      std::printf("note: %s\n", note.c_str());
  }
  return 0;
}

int cmd_asymp_vm(const RunConfig& cfg) {
  std::vector<VmPoint> traj = vm_sequence(cfg.p, cfg.count);
  double M = static_cast<double>(cfg.count);
  double ratio =
      traj.back().V / (2 * std::log(static_cast<double>(cfg.p)) * M / std::log(M));
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = cfg.p;
    j["count"] = cfg.count;
    ordered_json v = ordered_json::array();
    for (const VmPoint& pt : traj) v.push_back(pt.v);
    j["v"] = v;
    j["V"] = traj.back().V;
    j["ratio"] = ratio;
    j["provenance"] = "formula";
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "m,v,V\n";
    for (std::size_t i = 0; i < traj.size(); ++i)
      std::printf("%zu,%.9f,%.9f\n", i + 1, traj[i].v, traj[i].V);
  } else {
    std::printf(
        "v_m trajectory p = %d, %d terms: V = %.6f, "
        "V / (2 log p M / log M) = %.6f  [formula]\n",
        cfg.p, cfg.count, traj.back().V, ratio);
  }
  return 0;
}

int cmd_asymp_exist(const RunConfig& cfg) {
  ExistenceReport rep = random_code_existence_check(
      cfg.p, cfg.r, cfg.n, cfg.m > 0 ? cfg.m : 1, cfg.trials, cfg.seed);
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["trials"] = rep.trials;
    j["inadmissible"] = rep.inadmissible;
    j["observed"] = rep.observed;
    j["union_bound"] = rep.union_bound;
    j["sigma"] = rep.sigma;
    j["guarantee"] = rep.guarantee;
    j["provenance"] = "sampling";
    emit_json(j);
  } else {
    std::printf(
        "random [%d,%d]_%d codes, m = %d: observed %.6f (%lld/%lld), "
        "union bound %.6f, sigma %.6f, guarantee %s  [sampling]\n",
        rep.n, rep.n - rep.r, rep.p, rep.m, rep.observed, rep.inadmissible,
        rep.trials, rep.union_bound, rep.sigma, rep.guarantee ? "yes" : "no");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// registry

int cmd_registry_check(const RunConfig& cfg) {
  Registry reg;
  std::vector<std::string> problems = reg.self_check();
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = cfg.command;
    j["entries"] = reg.entries().size();
    j["problems"] = problems;
    j["provenance"] = "registry";
    emit_json(j);
  } else if (problems.empty()) {
    std::printf("registry consistent: %zu entries  [registry]\n",
                reg.entries().size());
  } else {
    for (const std::string& pr : problems)
      std::cout << "problem: " << pr << "\n";
  }
  return problems.empty() ? 0 : 1;
}

int cmd_registry_dump(const RunConfig& cfg) {
  Registry reg;
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const KnownValue& kv : reg.entries()) {
      ordered_json j;
      j["id"] = kv.id;
      j["lo"] = kv.lo;
      j["hi"] = kv.hi;
      j["source"] = kv.source;
      j["misprint"] = kv.misprint;
      j["note"] = kv.note;
      arr.push_back(j);
    }
    ordered_json j;
    j["command"] = cfg.command;
    j["entries"] = arr;
    j["provenance"] = "registry";
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "id,lo,hi,source,misprint,note\n";
    for (const KnownValue& kv : reg.entries())
      std::cout << csv_field(kv.id) << "," << kv.lo << "," << kv.hi << ","
                << csv_field(kv.source) << "," << (kv.misprint ? 1 : 0) << ","
                << csv_field(kv.note) << "\n";
  } else {
    for (const KnownValue& kv : reg.entries()) {
      std::printf("%-18s [%lld, %lld]  %s", kv.id.c_str(), kv.lo, kv.hi,
                  kv.source.c_str());
      if (kv.misprint) std::printf("  (corrected misprint: %s)", kv.note.c_str());
      std::printf("\n");
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// witness

int cmd_witness_verify(const RunConfig& cfg) {
  ordered_json j = ordered_json::parse(slurp_input(cfg));
  Group g(j.at("group").get<std::vector<int>>());
  WeightSet w = parse_weights(j.value("weight_set", std::string("full")), g);
  Seq parent = Seq::from_coord_lists(
      g, j.at("parent").get<std::vector<std::vector<int>>>());

  bool ok = false;
  std::string kind = j.value("kind", std::string("zerosubsum"));
  if (kind == "packing") {
    PackingWitness pw;
    for (const auto& part : j.at("parts")) {
      ZeroSubsumWitness wit;
      wit.support = Seq::from_coord_lists(
          g, part.at("support").get<std::vector<std::vector<int>>>());
      wit.weights = part.at("weights").get<std::vector<int>>();
      pw.parts.push_back(std::move(wit));
    }
    int target = j.value("target", static_cast<int>(pw.parts.size()));
    ok = packing_valid(pw, parent, w, g, target);
  } else if (kind == "zerosubsum") {
    ZeroSubsumWitness wit;
    wit.support = Seq::from_coord_lists(
        g, j.at("support").get<std::vector<std::vector<int>>>());
    wit.weights = j.at("weights").get<std::vector<int>>();
    ok = witness_valid(wit, parent, w, g);
  } else {
    throw BadArgsError("unknown witness kind: " + kind);
  }

  if (cfg.format == "json") {
    ordered_json out;
    out["command"] = cfg.command;
    out["kind"] = kind;
    out["group"] = g.str();
    out["valid"] = ok;
    emit_json(out);
  } else {
    std::printf("witness %s\n", ok ? "valid" : "INVALID");
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "compute.s") return cmd_compute_s(cfg);
  if (cfg.command == "compute.D") return cmd_compute_d(cfg);
  if (cfg.command == "bounds") return cmd_bounds(cfg);
  if (cfg.command == "capset.find")
    return cmd_capset_search(cfg, SearchMode::find);
  if (cfg.command == "capset.prove")
    return cmd_capset_search(cfg, SearchMode::prove);
  if (cfg.command == "capset.verify") return cmd_capset_verify(cfg);
  if (cfg.command == "code.mindist") return cmd_code_mindist(cfg);
  if (cfg.command == "code.admissible") return cmd_code_admissible(cfg);
  if (cfg.command == "code.from-seq") return cmd_code_from_seq(cfg);
  if (cfg.command == "asymp.table") return cmd_asymp_table(cfg);
  if (cfg.command == "asymp.vm") return cmd_asymp_vm(cfg);
  if (cfg.command == "asymp.exist") return cmd_asymp_exist(cfg);
  if (cfg.command == "registry.check") return cmd_registry_check(cfg);
  if (cfg.command == "registry.dump") return cmd_registry_dump(cfg);
  if (cfg.command == "witness.verify") return cmd_witness_verify(cfg);
  throw BadArgsError("unknown command: " + cfg.command);
}

// The budget is a wall-clock cap on the whole invocation.  The worker is
// not unwound on timeout; the process exits immediately, which is safe
// because no external state is being mutated.
int run_budgeted(const RunConfig& cfg) {
  if (cfg.budget <= 0) return dispatch(cfg);
  auto fut = std::async(std::launch::async, [&cfg] { return dispatch(cfg); });
  if (fut.wait_for(std::chrono::duration<double>(cfg.budget)) ==
      std::future_status::timeout) {
    std::cout.flush();
    std::fflush(stdout);
    std::fprintf(stderr, "inconclusive: time budget exhausted\n");
    std::_Exit(2);
  }
  return fut.get();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  bool echo = false;
  std::string config_file;

  CLI::App app{"davkit: weighted zero-sum invariants over finite abelian "
               "groups, with code, cap, ledger, and table routes"};
  app.require_subcommand(0, 1);

  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker thread cap")
      ->envname("DAVKIT_THREADS");
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--limit", cfg.limit, "search length cap")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget,
                 "wall-clock budget in seconds, 0 = off");
  app.add_flag("--echo-config", echo,
               "print the parsed config as JSON and exit");
  app.add_option("--config", config_file, "run from a config JSON file")
      ->check(CLI::ExistingFile);

  auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto group_opts = [&](CLI::App* s) {
    CLI::Option* p = s->add_option("--p", cfg.p, "prime, group C_p^r");
    s->add_option("--r", cfg.r, "rank")->needs(p);
    s->add_option("--factors", cfg.factors, "invariant factor chain")
        ->delimiter(',')
        ->excludes(p);
    s->add_option("--weights", cfg.weights,
                  "full | pm | classical | integer list")
        ->capture_default_str();
  };

  CLI::App* compute = sub(&app, "compute", "exact engine computations");
  compute->require_subcommand(1);
  CLI::App* compute_s =
      sub(compute, "s", "constrained constant s_{W,<=d} or s_{W,L}");
  group_opts(compute_s);
  compute_s->add_option("--d", cfg.d, "length constraint d");
  compute_s->add_option("--L", cfg.L, "explicit length set")->delimiter(',');
  compute_s->callback([&] { cfg.command = "compute.s"; });
  CLI::App* compute_d = sub(compute, "D", "m-wise Davenport constant D_{W,m}");
  group_opts(compute_d);
  compute_d->add_option("--m", cfg.m, "number of disjoint zero-subsums");
  compute_d->callback([&] { cfg.command = "compute.D"; });

  CLI::App* bounds = sub(&app, "bounds", "fixpoint bound ledger");
  group_opts(bounds);
  bounds->add_option("--dmax", cfg.dmax, "track s_{<=d} up to d")
      ->capture_default_str();
  bounds->add_option("--mmax", cfg.mmax, "track D_m up to m")
      ->capture_default_str();
  bounds->add_flag(
      "--no-registry", [&](std::int64_t) { cfg.use_registry = false; },
      "derive from rules only, no known-value injection");
  bounds->add_option("--explain", cfg.explain,
                     "print the derivation chain of one constant");
  bounds->callback([&] { cfg.command = "bounds"; });

  CLI::App* capset = sub(&app, "capset", "caps in PG(r-1, p)");
  capset->require_subcommand(1);
  CLI::App* cap_find = sub(capset, "find", "search for a cap of target size");
  cap_find->add_option("--p", cfg.p)->required();
  cap_find->add_option("--r", cfg.r, "dimension r, space PG(r-1,p)")
      ->required();
  cap_find->add_option("--target", cfg.target, "cap size to reach");
  cap_find->callback([&] { cfg.command = "capset.find"; });
  CLI::App* cap_prove = sub(capset, "prove", "certify the maximum cap size");
  cap_prove->add_option("--p", cfg.p)->required();
  cap_prove->add_option("--r", cfg.r)->required();
  cap_prove->add_option("--target", cfg.target, "report whether this size is reached");
  cap_prove->callback([&] { cfg.command = "capset.prove"; });
  CLI::App* cap_verify = sub(capset, "verify", "re-check a cap certificate");
  cap_verify->add_option("--file", cfg.file, "cap file, - for stdin");
  cap_verify->callback([&] { cfg.command = "capset.verify"; });

  CLI::App* code = sub(&app, "code", "p-ary linear codes via parity checks");
  code->require_subcommand(1);
  CLI::App* code_mindist = sub(code, "mindist", "exact minimum distance");
  code_mindist->add_option("--file", cfg.file, "pcm file, - for stdin");
  code_mindist->callback([&] { cfg.command = "code.mindist"; });
  CLI::App* code_adm = sub(code, "admissible", "m-admissibility check");
  code_adm->add_option("--file", cfg.file, "pcm file, - for stdin");
  code_adm->add_option("--m", cfg.m, "disjoint-support word count (default 2)");
  code_adm->callback([&] { cfg.command = "code.admissible"; });
  CLI::App* code_seq = sub(code, "from-seq", "parity-check matrix of a sequence");
  group_opts(code_seq);
  code_seq->add_option("--coords", cfg.coords,
                       "entries 'a,b,..;c,d,..' as coordinate lists");
  code_seq->callback([&] { cfg.command = "code.from-seq"; });

  CLI::App* asymp = sub(&app, "asymp", "asymptotic tables and sampling");
  asymp->require_subcommand(1);
  CLI::App* asymp_table = sub(asymp, "table", "coefficient table for C_p");
  asymp_table->add_option("--p", cfg.p)->required();
  asymp_table->add_option("--mmax", cfg.mmax, "last m row")
      ->capture_default_str();
  asymp_table->callback([&] { cfg.command = "asymp.table"; });
  CLI::App* asymp_vm = sub(asymp, "vm", "v_m recursion trajectory");
  asymp_vm->add_option("--p", cfg.p)->required();
  asymp_vm->add_option("--count", cfg.count, "terms to generate")
      ->capture_default_str();
  asymp_vm->callback([&] { cfg.command = "asymp.vm"; });
  CLI::App* asymp_exist = sub(asymp, "exist", "random-code inadmissibility rate");
  asymp_exist->add_option("--p", cfg.p)->required();
  asymp_exist->add_option("--r", cfg.r)->required();
  asymp_exist->add_option("--n", cfg.n, "code length")->required();
  asymp_exist->add_option("--m", cfg.m, "disjoint-support word count");
  asymp_exist->add_option("--trials", cfg.trials)->capture_default_str();
  asymp_exist->callback([&] { cfg.command = "asymp.exist"; });

  CLI::App* registry = sub(&app, "registry", "compiled-in known values");
  registry->require_subcommand(1);
  CLI::App* reg_check = sub(registry, "check", "internal consistency check");
  reg_check->callback([&] { cfg.command = "registry.check"; });
  CLI::App* reg_dump = sub(registry, "dump", "list all entries");
  reg_dump->callback([&] { cfg.command = "registry.dump"; });

  CLI::App* witness = sub(&app, "witness", "zero-subsum witness files");
  witness->require_subcommand(1);
  CLI::App* wit_verify = sub(witness, "verify", "re-validate a witness JSON");
  wit_verify->add_option("--file", cfg.file, "witness file, - for stdin");
  wit_verify->callback([&] { cfg.command = "witness.verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!config_file.empty()) {
      if (!cfg.command.empty())
        throw BadArgsError("--config replaces the command line; drop the subcommand");
      std::ifstream in(config_file);
      cfg = config_from_json(ordered_json::parse(in));
    }
    if (echo) {
      emit_json(config_to_json(cfg));
      return 0;
    }
    if (cfg.command.empty()) {
      std::cerr << app.help();
      return 1;
    }
    return run_budgeted(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
