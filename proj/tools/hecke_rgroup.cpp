#include <hrg/hrg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

using namespace hrg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad partition part '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", pos) != std::string::npos || v <= 0) throw UsageError("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

Rational parse_m(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("m: ") + e.what());
  }
}

std::vector<Rational> parse_m_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_m(tok));
  if (out.empty()) throw UsageError("empty m list");
  return out;
}

json parts_json(const Partition& p) {
  json a = json::array();
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) a.push_back(*it);
  return a;
}

json bip_json(const Bipartition& b) { return json::array({parts_json(b.first), parts_json(b.second)}); }

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json split_json(const std::optional<SplitResult>& s) {
  if (!s) return nullptr;
  json blocks = json::array();
  for (const auto& b : s->blocks)
    blocks.push_back({{"orientation", to_string(b.orientation)}, {"low", to_string(b.entryLow)}, {"high", to_string(b.entryHigh)}, {"size", b.size()}});
  return {{"bipartition", bip_json(s->bipartition)}, {"blocks", blocks}};
}

std::string split_text(const std::optional<SplitResult>& s) {
  if (!s) return "undefined";
  std::string out = s->bipartition.str() + " blocks";
  for (const auto& b : s->blocks) out += std::string(" ") + to_string(b.orientation) + "[" + to_string(b.entryLow) + ".." + to_string(b.entryHigh) + "]";
  return out;
}

json symbol_json(const Symbol& s) {
  json iv = json::array();
  for (auto& i : intervals(s)) iv.push_back({i.lo, i.hi});
  return {{"variant", s.variant.str()}, {"top", s.topRow}, {"bottom", s.bottomRow}, {"intervals", iv}};
}

std::string intervals_text(const Symbol& s) {
  std::string out;
  for (auto& i : intervals(s)) out += "(" + std::to_string(i.lo) + (i.hi > i.lo ? ".." + std::to_string(i.hi) : "") + ")";
  return out.empty() ? "none" : out;
}

bool symbols_available(const Rational& m) { return is_integer(m) || is_half_integer(m); }

// ---- rgroup

json rgroup_report(const InductionDatum& xi, bool oracle, int bound) {
  json r;
  r["schemaVersion"] = kSchemaVersion;
  r["datum"] = {{"n", xi.n}, {"m", to_string(xi.m)}, {"kappa", parts_json(xi.kappa)}, {"mu", parts_json(xi.mu)}};
  r["centralCharacter"] = rationals_json(central_character(xi.kappa, xi.mu, xi.m).exponents);
  if (!xi.mu.empty()) {
    auto g = residual_coordinates(xi.mu, xi.m);
    r["residualDiagnostics"] = {{"defect", residual_defect(g, xi.m)}, {"codimension", xi.l()}};
  } else {
    r["residualDiagnostics"] = nullptr;
  }
  auto sr = xi.mu.empty() ? std::optional<SplitResult>(SplitResult{}) : split(xi.mu, xi.m);
  r["splitResult"] = split_json(sr);

  const auto& k = xi.kappa.parts();
  json poles = json::array();
  for (std::size_t i = 0; i < k.size(); ++i) {
    poles.push_back({{"root", "E" + std::to_string(i + 1)}, {"order", pole_order_short_direct(k[i], xi.mu, xi.m)}});
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      poles.push_back({{"root", "E" + std::to_string(i + 1) + "+E" + std::to_string(j + 1)}, {"order", pole_order_pair(k[i], k[j], Sign::Plus)}});
      poles.push_back({{"root", "E" + std::to_string(i + 1) + "-E" + std::to_string(j + 1)}, {"order", pole_order_pair(k[i], k[j], Sign::Minus)}});
    }
  }
  r["poleOrders"] = poles;

  auto rs = restricted_root_system(xi);
  json factors = json::array();
  for (const auto& f : rs.factors) factors.push_back({{"type", to_string(f.type)}, {"rank", f.rank}, {"length", f.length}});
  r["rootSystemFactors"] = factors;

  auto rg = r_group(xi);
  r["d"] = rg.d;
  r["componentCount"] = rg.componentCount;
  r["gluableLengths"] = rg.gluableLengths;
  json gens = json::array();
  for (const auto& g : rg.generators) gens.push_back({{"word", g.word()}, {"images", g.images}});
  r["generators"] = gens;
  json labels = json::array();
  for (const auto& lab : rg.componentLabels)
    labels.push_back({{"J", lab.J}, {"muJ", lab.muJ ? parts_json(*lab.muJ) : json(nullptr)}, {"ambiguous", lab.ambiguous}});
  r["componentLabels"] = labels;

  json checks;
  if (!xi.mu.empty()) {
    bool ok = true;
    for (int p : k) ok &= pole_order_short_direct(p, xi.mu, xi.m) == pole_order_short_blockwise(p, *sr, xi.m);
    checks["blockwiseEqualsDirect"] = ok;
  }
  bool glue = true;
  for (int p : k) {
    bool cg = can_glue(p, xi.mu, xi.m);
    glue &= cg == (pole_order_short_direct(p, xi.mu, xi.m) == 0) && cg == !glue_strip_geometric(xi.mu, p, xi.m).empty();
  }
  checks["threeWayGluing"] = glue;
  if (symbols_available(xi.m)) {
    auto v = variant_for(xi.m);
    auto cls = springer_correspondents(xi);
    auto sym = symbol(*cls.members.begin(), v);
    json members = json::array();
    for (const auto& b : cls.members) members.push_back(bip_json(b));
    r["springerClass"] = {{"symbol", symbol_json(sym)}, {"size", cls.members.size()}, {"aValue", a_m(*cls.members.begin(), v)}, {"members", members}};
    checks["cardinality"] = cardinality_check(xi);
    checks["intervals"] = interval_count_check(xi);
  } else {
    r["springerClass"] = nullptr;
  }
  if (oracle) {
    auto bf = brute_force(xi, bound);
    bool ok = is_elementary_abelian(bf.R) && bf.R.size() == rg.componentCount;
    for (const auto& g : rg.generators) ok &= std::binary_search(bf.R.begin(), bf.R.end(), g);
    checks["bruteForceR"] = ok;
    checks["semidirectCardinality"] = bf.wCount == rs.weyl_group_order() * rg.componentCount;
    r["oracle"] = {{"WxixiOrder", bf.wCount}, {"ROrder", bf.R.size()}};
  }
  r["checks"] = checks;
  return r;
}

bool all_checks_pass(const json& r) {
  for (auto& [k, v] : r["checks"].items())
    if (!v.get<bool>()) return false;
  return true;
}

void print_rgroup_text(const json& r, std::ostream& os) {
  const auto& d = r["datum"];
  auto plist = [](const json& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i].get<int>());
    return s + ")";
  };
  os << "datum: n=" << d["n"].get<int>() << " m=" << d["m"].get<std::string>() << " kappa=" << plist(d["kappa"]) << " mu=" << plist(d["mu"]) << "\n";
  os << "central character:";
  for (auto& e : r["centralCharacter"]) os << " " << e.get<std::string>();
  os << "\n";
  if (!r["splitResult"].is_null()) {
    const auto& s = r["splitResult"];
    os << "split: (" << plist(s["bipartition"][0]) << "," << plist(s["bipartition"][1]) << ")";
    for (auto& b : s["blocks"]) os << " " << b["orientation"].get<std::string>() << "[" << b["low"].get<std::string>() << ".." << b["high"].get<std::string>() << "]";
    os << "\n";
  }
  os << "pole orders:";
  for (auto& p : r["poleOrders"]) os << " " << p["root"].get<std::string>() << "=" << p["order"].get<int>();
  os << "\n";
  os << "restricted root system:";
  for (auto& f : r["rootSystemFactors"]) os << " " << f["type"].get<std::string>() << f["rank"].get<int>() << "(len " << f["length"].get<int>() << ")";
  os << "\n";
  os << "gluable lengths:";
  for (auto& g : r["gluableLengths"]) os << " " << g.get<int>();
  os << "\n";
  os << "d = " << r["d"].get<int>() << "\n";
  os << "components = " << r["componentCount"].get<std::uint64_t>() << "\n";
  for (auto& g : r["generators"]) os << "generator: " << g["word"].get<std::string>() << "\n";
  for (auto& l : r["componentLabels"]) {
    os << "component J={";
    for (std::size_t i = 0; i < l["J"].size(); ++i) os << (i ? "," : "") << l["J"][i].get<int>();
    os << "} mu_J=" << (l["muJ"].is_null() ? std::string("none") : plist(l["muJ"])) << (l["ambiguous"].get<bool>() ? " (lexicographically least of several)" : "") << "\n";
  }
  if (!r["springerClass"].is_null()) {
    const auto& s = r["springerClass"];
    os << "springer class: symbol (" << plist(s["symbol"]["top"]) << "/" << plist(s["symbol"]["bottom"]) << ") size " << s["size"].get<std::size_t>()
       << " a=" << s["aValue"].get<long long>() << " intervals " << s["symbol"]["intervals"].size() << "\n";
  }
  if (r.contains("oracle"))
    os << "oracle: |W_xixi|=" << r["oracle"]["WxixiOrder"].get<std::uint64_t>() << " |R|=" << r["oracle"]["ROrder"].get<std::size_t>() << "\n";
  for (auto& [k, v] : r["checks"].items()) os << "check " << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
}

// ---- table

const char* kCsvColumns = "n,m,kappa,mu,d,components,gluable,class_size,check_cardinality,check_intervals,check_oracle";

std::string csv_partition(const Partition& p) {
  std::string s;
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) s += (s.empty() ? "" : " ") + std::to_string(*it);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R-groups of parabolically induced discrete series for type B affine Hecke algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool asJson = false, asCsv = false;
  unsigned jobs = 1;
  app.add_flag("--json", asJson, "JSON output");
  app.add_flag("--csv", asCsv, "CSV output (columns: " + std::string(kCsvColumns) + ")");
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

  int n = 0, l = 0, boundN = bound_from_env(kDefaultOracleBound), boundL = 10;
  std::string m, kappa, mu, lambda, xiStr, etaStr, variant, suite = "all", k1, k2;
  bool oracle = false;

  auto* rg = app.add_subcommand("rgroup", "R-group and full report for one datum");
  rg->add_option("-n", n, "rank")->required();
  rg->add_option("-m", m, "parameter m as a fraction p/q")->required();
  rg->add_option("--kappa", kappa, "A-factor sizes, comma separated; empty for none");
  rg->add_option("--mu", mu, "residual partition, comma separated");
  rg->add_flag("--oracle", oracle, "run the brute-force Weyl group oracle");
  rg->add_option("--bound-n", boundN, "oracle bound (env HECKE_RGROUP_BOUND_N)");

  auto* res = app.add_subcommand("residual", "residual partitions of l at m");
  res->add_option("-l", l, "weight")->required();
  res->add_option("-m", m, "parameter m as a fraction p/q")->required();
  res->add_option("--bound-l", boundL, "weight bound")->default_val(12);

  auto* sp = app.add_subcommand("split", "splitting map of one partition");
  sp->add_option("--lambda", lambda, "partition, comma separated")->required();
  sp->add_option("-m", m, "parameter m as a fraction p/q")->required();

  auto* sy = app.add_subcommand("symbols", "symbol, a-value, intervals and similarity class");
  sy->add_option("--xi", xiStr, "first partition")->default_val("");
  sy->add_option("--eta", etaStr, "second partition")->default_val("");
  sy->add_option("-m", m, "parameter m as a fraction p/q")->required();
  sy->add_option("--variant", variant, "+0 or -0 when m=0");

  auto* tb = app.add_subcommand("table", "classification sweep over all data of rank n");
  tb->add_option("-n", n, "rank")->required();
  tb->add_option("-m", m, "comma separated list of fractions")->required();
  tb->add_flag("--oracle", oracle, "include the brute-force oracle column");
  tb->add_option("--bound-n", boundN, "oracle bound (env HECKE_RGROUP_BOUND_N)");

  auto* st = app.add_subcommand("selftest", "run the oracle equivalence suites");
  int stBoundN = bound_from_env(6);
  st->add_option("--bound-n", stBoundN, "rank bound for the oracle and Springer suites");
  st->add_option("--bound-l", boundL, "weight bound for the residual and gluing suites")->default_val(10);
  st->add_option("--suite", suite, "residual|gluing|pairs|oracle|springer|all")
      ->check(CLI::IsMember({"residual", "gluing", "pairs", "oracle", "springer", "all"}));

  auto* cc = app.add_subcommand("convert-c", "labels of the C_n datum to B_n labels");
  cc->add_option("--k1", k1, "label of the short roots")->required();
  cc->add_option("--k2", k2, "label of the long roots +-2e_i")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const Format fmt = asJson ? Format::Json : asCsv ? Format::Csv : Format::Text;

  try {
    if (rg->parsed()) {
      auto xi = make_datum(n, parse_m(m), parse_partition(kappa), parse_partition(mu));
      if (oracle && xi.n > boundN) throw UsageError("n exceeds oracle bound " + std::to_string(boundN));
      auto r = rgroup_report(xi, oracle, boundN);
      if (fmt == Format::Json)
        std::cout << r.dump(2) << "\n";
      else
        print_rgroup_text(r, std::cout);
      return all_checks_pass(r) ? 0 : 1;
    }

    if (res->parsed()) {
      Rational mm = parse_m(m);
      if (l < 1) throw UsageError("l must be positive");
      if (mm < 0) throw UsageError("m must be nonnegative");
      json out = json::array();
      for (const auto& lam : enumerate_partitions(l, boundL)) {
        if (!is_residual_point(lam, mm)) continue;
        auto s = split(lam, mm);
        json row = {{"lambda", parts_json(lam)}, {"split", split_json(s)}};
        if (s && symbols_available(mm)) row["symbol"] = symbol_json(symbol(s->bipartition, variant_for(mm)));
        out.push_back(row);
      }
      if (fmt == Format::Json) {
        std::cout << json{{"schemaVersion", kSchemaVersion}, {"l", l}, {"m", to_string(mm)}, {"residual", out}}.dump(2) << "\n";
      } else {
        if (fmt == Format::Csv) std::cout << "lambda,split,symbol\n";
        for (const auto& lam : enumerate_partitions(l, boundL)) {
          if (!is_residual_point(lam, mm)) continue;
          auto s = split(lam, mm);
          std::string sym = s && symbols_available(mm) ? symbol(s->bipartition, variant_for(mm)).str() : "";
          if (fmt == Format::Csv)
            std::cout << "\"" << lam.str() << "\",\"" << split_text(s) << "\",\"" << sym << "\"\n";
          else
            std::cout << lam.str() << "  " << split_text(s) << (sym.empty() ? "" : "  symbol " + sym) << "\n";
        }
      }
      return 0;
    }

    if (sp->parsed()) {
      Rational mm = parse_m(m);
      if (mm < 0) throw UsageError("m must be nonnegative");
      auto lam = parse_partition(lambda);
      auto s = split(lam, mm);
      if (fmt == Format::Json)
        std::cout << json{{"schemaVersion", kSchemaVersion}, {"lambda", parts_json(lam)}, {"m", to_string(mm)}, {"split", split_json(s)}}.dump(2) << "\n";
      else
        std::cout << lam.str() << "  " << split_text(s) << "\n";
      return 0;
    }

    if (sy->parsed()) {
      Rational mm = parse_m(m);
      if (!symbols_available(mm)) throw UsageError("symbols need m in (1/2)Z");
      SymbolVariant v = variant_for(mm);
      if (!variant.empty()) {
        if (mm != 0 || (variant != "+0" && variant != "-0")) throw UsageError("--variant is +0 or -0 and only with m=0");
        v.kind = variant == "+0" ? SymbolVariant::PlusZero : SymbolVariant::MinusZero;
      }
      Bipartition b{parse_partition(xiStr), parse_partition(etaStr)};
      auto s = symbol(b, v);
      auto cls = similarity_class(b, v);
      if (fmt == Format::Json) {
        json members = json::array();
        for (const auto& c : cls.members) members.push_back(bip_json(c));
        std::cout << json{{"schemaVersion", kSchemaVersion}, {"bipartition", bip_json(b)}, {"symbol", symbol_json(s)}, {"aValue", a_m(b, v)}, {"class", members}}.dump(2)
                  << "\n";
      } else {
        std::cout << "symbol " << s.str() << "\n"
                  << "a = " << a_m(b, v) << "\n"
                  << "intervals " << intervals_text(s) << "\n"
                  << "similarity class (" << cls.members.size() << "):";
        for (const auto& c : cls.members) std::cout << " " << c.str();
        std::cout << "\n";
      }
      return 0;
    }

    if (tb->parsed()) {
      auto ms = parse_m_list(m);
      if (n < 1) throw UsageError("n must be positive");
      if (oracle && n > boundN) throw UsageError("n exceeds oracle bound " + std::to_string(boundN));
      std::vector<InductionDatum> data;
      for (const auto& mm : ms) {
        if (mm < 0) throw UsageError("m must be nonnegative");
        for (auto& xi : enumerate_data(n, mm)) data.push_back(std::move(xi));
      }
      auto rows = parallel_map<json>(data.size(), jobs, [&](std::size_t i) {
        const auto& xi = data[i];
        auto r = r_group(xi);
        json row = {{"n", xi.n}, {"m", to_string(xi.m)}, {"kappa", parts_json(xi.kappa)}, {"mu", parts_json(xi.mu)}, {"d", r.d}, {"components", r.componentCount},
                    {"gluable", r.gluableLengths}};
        if (symbols_available(xi.m)) {
          row["classSize"] = springer_correspondents(xi).members.size();
          row["checkCardinality"] = cardinality_check(xi);
          row["checkIntervals"] = interval_count_check(xi);
        }
        if (oracle) {
          auto bf = brute_force(xi, boundN);
          row["checkOracle"] = is_elementary_abelian(bf.R) && bf.R.size() == r.componentCount &&
                               bf.wCount == restricted_root_system(xi).weyl_group_order() * r.componentCount;
        }
        return row;
      });
      bool ok = true;
      for (auto& row : rows)
        for (auto key : {"checkCardinality", "checkIntervals", "checkOracle"})
          if (row.contains(key)) ok &= row[key].get<bool>();
      if (fmt == Format::Json) {
        std::cout << json{{"schemaVersion", kSchemaVersion}, {"rows", rows}}.dump(2) << "\n";
      } else {
        auto opt = [](const json& row, const char* k) -> std::string {
          if (!row.contains(k)) return "";
          if (row[k].is_boolean()) return row[k].get<bool>() ? "pass" : "fail";
          return row[k].dump();
        };
        std::cout << kCsvColumns << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          const auto& row = rows[i];
          std::string gl;
          for (auto& g : row["gluable"]) gl += (gl.empty() ? "" : " ") + std::to_string(g.get<int>());
          std::cout << row["n"].get<int>() << "," << row["m"].get<std::string>() << "," << csv_partition(data[i].kappa) << "," << csv_partition(data[i].mu) << ","
                    << row["d"].get<int>() << "," << row["components"].get<std::uint64_t>() << "," << gl << "," << opt(row, "classSize") << ","
                    << opt(row, "checkCardinality") << "," << opt(row, "checkIntervals") << "," << opt(row, "checkOracle") << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (st->parsed()) {
      std::vector<SuiteResult> results;
      auto want = [&](const char* s) { return suite == "all" || suite == s; };
      if (want("residual")) results.push_back(suite_residual(boundL, 12, jobs));
      if (want("gluing")) results.push_back(suite_gluing(12, boundL, 12, jobs));
      if (want("pairs")) results.push_back(suite_pairs(12));
      if (want("oracle")) results.push_back(suite_oracle(stBoundN, 8, jobs));
      if (want("springer")) results.push_back(suite_springer(stBoundN, 8, jobs));
      bool ok = true;
      json out = json::array();
      for (const auto& r : results) {
        ok &= r.ok();
        if (fmt == Format::Json) {
          out.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"reproducer", r.reproducer}});
        } else {
          std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures";
          std::cout << " (" << static_cast<long long>(r.seconds * 1000) << " ms)\n";
          if (!r.ok()) std::cout << "  reproducer: " << r.reproducer << "\n";
        }
      }
      if (fmt == Format::Json) std::cout << json{{"schemaVersion", kSchemaVersion}, {"suites", out}, {"pass", ok}}.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (cc->parsed()) {
      auto t = convert_C_labels(parse_m(k1), parse_m(k2));
      if (fmt == Format::Json)
        std::cout << json{{"schemaVersion", kSchemaVersion}, {"k1", to_string(t.k1)}, {"k2", to_string(t.k2)}, {"m", to_string(t.m())}}.dump(2) << "\n";
      else
        std::cout << "k1 = " << to_string(t.k1) << "\nk2 = " << to_string(t.k2) << "\nm = " << to_string(t.m()) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
