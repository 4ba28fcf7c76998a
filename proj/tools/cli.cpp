// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lcv/io.hpp"
#include "lcv/johnson.hpp"
#include "lcv/matroid.hpp"
#include "lcv/measure.hpp"
#include "lcv/seq.hpp"
#include "lcv/verify.hpp"

namespace lcv {
namespace {

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  int cap_n = 16;
  std::string out_path;
};

Json strings(SeqView a) {
  Json out = Json::array();
  for (const Rational& x : a) out.push_back(to_string(x));
  return out;
}

std::string render(const Report& r) {
  std::ostringstream s;
  s << r.check << ": " << to_string(r.verdict);
  if (r.sampled) s << " (sampled)";
  if (r.instances != 1) s << "  instances=" << r.instances;
  if (r.margin) s << "  margin=" << to_string(*r.margin);
  if (r.seed) s << "  seed=" << *r.seed;
  s << '\n';
  if (!r.witness.is_null()) s << "  witness: " << r.witness.dump() << '\n';
  if (r.check == "manifest" && r.data.contains("suites")) {
    for (const Json& suite : r.data["suites"]) {
      s << "  " << suite["check"].get<std::string>() << ": "
        << suite["verdict"].get<std::string>();
      if (suite.contains("data")) {
        const Json& d = suite["data"];
        for (const char* key : {"instances", "hypothesis_holds", "vacuous", "fail"}) {
          if (d.contains(key)) s << "  " << key << "=" << d[key].dump();
        }
      }
      s << '\n';
    }
    return s.str();
  }
  for (const auto& [k, v] : r.data.items()) {
    if (k == "coverage" || k == "suites") continue;
    s << "  " << k << ": " << v.dump() << '\n';
  }
  return s.str();
}

int emit(const Report& r, const Globals& g, std::ostream& out) {
  const std::string text = g.json ? to_json(r).dump(2) + "\n" : render(r);
  if (g.out_path.empty()) {
    out << text;
  } else {
    write_text_file(g.out_path, text);
  }
  return r.failed() ? kExitFail : kExitPass;
}

Report measure_command(const std::string& check, const std::string& file,
                       std::optional<int> level, std::optional<int> window, const Globals& g) {
  const Measure mu = measure_from_json(read_json_file(file));
  ConditioningOptions options;
  options.cap_n = g.cap_n;
  options.max_half_window = window;
  if (check == "app") return has_app(mu);
  if (check == "capp") return has_capp(mu, options);
  if (check == "apu") return is_apu(mu);
  if (check == "capu") return is_capu(mu, options);
  if (check == "nc") return is_nc(mu);
  if (check == "ulc") return is_ulc_measure(mu);
  if (check == "rank") {
    Report r = Report::pass("rank");
    r.data["rank_sequence"] = strings(rank_sequence(mu));
    return r;
  }
  // gamma
  Report r = Report::pass("gamma");
  if (level) {
    if (*level < 0 || *level > mu.n()) throw IndexOutOfRange("level outside 0..n");
    r.data["level"] = *level;
    r.data["value"] = to_string(gamma(mu, *level));
  } else {
    r.data["gamma"] = strings(gamma_sequence(mu));
  }
  return r;
}

Report seq_command(const std::vector<std::string>& positional, const std::string& check,
                   const std::string& file, std::optional<int> n_opt) {
  if (!positional.empty() && positional[0] == "convolve") {
    if (positional.size() != 3) throw InvalidArgument("usage: seq convolve <a> <b>");
    const Seq a = parse_seq_literal(positional[1]);
    const Seq b = parse_seq_literal(positional[2]);
    Report r = Report::pass("convolve");
    r.data["values"] = strings(convolve(a, b));
    return r;
  }
  Seq a;
  if (!file.empty()) {
    if (!positional.empty()) throw InvalidArgument("give either a file or inline values");
    a = seq_from_json(read_json_file(file));
  } else {
    if (positional.size() != 1) throw InvalidArgument("expected one comma-separated sequence");
    a = parse_seq_literal(positional[0]);
  }
  if (check.empty()) throw InvalidArgument("--check is required");
  const Json values = strings(a);
  Report r;
  if (check == "ulc") {
    const int n = n_opt.value_or(static_cast<int>(a.size()) - 1);
    r = Report::from_bool("ulc", is_ulc(a, n), Json{{"values", values}, {"n", n}});
    r.data["ratios"] = strings(binomial_normalized(a, n));
  } else if (check == "lc") {
    r = Report::from_bool("lc", is_lc(a), Json{{"values", values}});
  } else if (check == "unimodal") {
    r = Report::from_bool("unimodal", is_unimodal(a), Json{{"values", values}});
  } else {
    const bool ok = is_symmetric(a) && is_ultra_unimodal(a);
    r = Report::from_bool("symm-uu", ok,
                          Json{{"values", values}, {"symmetric", is_symmetric(a)},
                               {"ultra_unimodal", is_ultra_unimodal(a)}});
    if (ok) {
      Json terms = Json::array();
      for (const SliceTerm& t : symmetric_uu_decompose(a)) {
        terms.push_back(Json{{"coefficient", to_string(t.coefficient)}, {"k", t.k}});
      }
      r.data["decomposition"] = terms;
    }
  }
  r.data["values"] = values;
  return r;
}

struct SchemeArgs {
  std::string action;
  std::optional<int> n, l, k, big_m, big_n;
  std::string a = "0", b = "1";
};

Report scheme_command(const SchemeArgs& s) {
  auto need = [](const std::optional<int>& v, const char* name) {
    if (!v) throw InvalidArgument(std::string("--") + name + " is required");
    return *v;
  };
  if (s.action == "sum-identity") {
    return sum_identity_check(need(s.big_m, "M"), need(s.big_n, "N"), parse_rational(s.a),
                              parse_rational(s.b));
  }
  if (s.action == "inner-sum") {
    return inner_sum_check(need(s.n, "n"), need(s.l, "l"), need(s.k, "k"));
  }
  const SchemeParams params(need(s.n, "n"), need(s.l, "l"));
  if (s.action == "certificate") return master_certificate(params);
  Report r = Report::pass("table");
  Json p = Json::array();
  for (const auto& row : *eigen_table(params)) {
    Json jr = Json::array();
    for (const Integer& x : row) jr.push_back(x.get_str());
    p.push_back(jr);
  }
  Json mult = Json::array();
  for (int j = 0; j <= params.l(); ++j) mult.push_back(multiplicity(params, j).get_str());
  r.data["n"] = params.n();
  r.data["l"] = params.l();
  r.data["P"] = p;
  r.data["multiplicities"] = mult;
  return r;
}

struct MatroidArgs {
  std::string uniform, graph, linear, descriptor, check;
  int t = 6;
};

Report matroid_command(const MatroidArgs& a) {
  const int sources = !a.uniform.empty() + !a.graph.empty() + !a.linear.empty() +
                      !a.descriptor.empty();
  if (sources != 1) {
    throw InvalidArgument("give exactly one of --uniform, --graph, --linear, --descriptor");
  }
  MatroidPtr m;
  if (!a.uniform.empty()) {
    int r = 0;
    int n = 0;
    char comma = 0;
    std::istringstream in(a.uniform);
    if (!(in >> r >> comma >> n) || comma != ',' || !in.eof()) {
      throw InvalidArgument("--uniform expects r,n");
    }
    m = uniform_matroid(r, n);
  } else if (!a.graph.empty()) {
    m = graph_from_text(read_text_file(a.graph));
  } else if (!a.linear.empty()) {
    m = linear_from_json(read_json_file(a.linear));
  } else {
    m = matroid_from_json(read_json_file(a.descriptor));
  }
  Report r;
  if (a.check == "mason") {
    r = mason_check(*m);
  } else if (a.check == "prefix") {
    r = mason_prefix_check(*m, a.t);
  } else if (a.check == "app") {
    r = partition_app_check(*m);
  } else if (a.check == "capp") {
    r = matroid_capp_check(*m);
  } else if (a.check == "capu") {
    r = matroid_capu_check(*m);
  } else if (a.check == "degrees") {
    r = degree_bounds_check(*m);
  } else if (a.check == "axioms") {
    r = axioms_check(*m);
  } else {
    r = Report::pass("independence");
    r.data["rank"] = rank(*m);
    r.data["independence_numbers"] = strings(independence_numbers(*m));
    Json coloops = Json::array();
    const Mask c = coloop_set(*m);
    for (int e = 0; e < m->ground_size(); ++e) {
      if (c >> e & 1) coloops.push_back(e);
    }
    r.data["coloops"] = coloops;
  }
  r.data["matroid"] = m->describe();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for log-concavity and antipodal-pair properties"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit the report as JSON");
  app.add_option("--seed", g.seed, "Seed for generated suites (default: manifest seed or 1)");
  app.add_option("--threads", g.threads, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap-n", g.cap_n, "Largest n for exhaustive conditioning scans")
      ->check(CLI::Range(1, kMaxGroundSize));
  app.add_option("--out", g.out_path, "Write the report here instead of stdout");

  std::string m_check;
  std::string m_file;
  std::optional<int> m_level;
  std::optional<int> m_window;
  auto* measure = app.add_subcommand("measure", "Check a measure file");
  measure->add_option("--check", m_check)
      ->required()
      ->check(CLI::IsMember({"app", "capp", "apu", "capu", "nc", "ulc", "rank", "gamma"}));
  measure->add_option("--level", m_level, "Level for --check gamma");
  measure->add_option("--window", m_window, "Largest half window k for capp/capu");
  measure->add_option("file", m_file)->required();

  std::vector<std::string> s_positional;
  std::string s_check;
  std::string s_file;
  std::optional<int> s_n;
  auto* seq = app.add_subcommand("seq", "Check a sequence, or 'seq convolve a b'");
  seq->add_option("--check", s_check)->check(CLI::IsMember({"ulc", "lc", "unimodal", "symm-uu"}));
  seq->add_option("--n", s_n, "Ambient size for ulc (default: length - 1)");
  seq->add_option("--file", s_file, "Sequence JSON file");
  seq->add_option("values", s_positional, "Comma-separated values, or convolve a b");

  SchemeArgs sa;
  auto* scheme = app.add_subcommand("scheme", "Johnson scheme tables and identities");
  scheme->add_option("action", sa.action)
      ->required()
      ->check(CLI::IsMember({"table", "certificate", "sum-identity", "inner-sum"}));
  scheme->add_option("--n", sa.n);
  scheme->add_option("--l", sa.l);
  scheme->add_option("--k", sa.k);
  scheme->add_option("--M", sa.big_m);
  scheme->add_option("--N", sa.big_n);
  scheme->add_option("--a", sa.a, "Rational a for sum-identity");
  scheme->add_option("--b", sa.b, "Rational b for sum-identity");

  MatroidArgs ma;
  auto* matroid = app.add_subcommand("matroid", "Check a matroid");
  matroid->add_option("--uniform", ma.uniform, "r,n");
  matroid->add_option("--graph", ma.graph, "Graph text file");
  matroid->add_option("--linear", ma.linear, "Linear matroid JSON file");
  matroid->add_option("--descriptor", ma.descriptor, "Matroid descriptor JSON file");
  matroid->add_option("--check", ma.check)
      ->required()
      ->check(CLI::IsMember(
          {"mason", "prefix", "app", "capp", "capu", "degrees", "axioms", "info"}));
  matroid->add_option("--t", ma.t, "Prefix length for --check prefix");

  std::string manifest_path;
  bool print_default = false;
  auto* suite = app.add_subcommand("suite", "Run a suite manifest");
  suite->add_option("manifest", manifest_path, "Manifest JSON file");
  suite->add_flag("--print-default", print_default, "Print the default manifest and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    if (*measure) return emit(measure_command(m_check, m_file, m_level, m_window, g), g, out);
    if (*seq) return emit(seq_command(s_positional, s_check, s_file, s_n), g, out);
    if (*scheme) return emit(scheme_command(sa), g, out);
    if (*matroid) return emit(matroid_command(ma), g, out);
    if (print_default) {
      out << default_manifest(g.seed.value_or(1)).dump(2) << '\n';
      return kExitPass;
    }
    if (manifest_path.empty()) throw InvalidArgument("suite needs a manifest file");
    Json manifest = read_json_file(manifest_path);
    if (g.seed) manifest["seed"] = *g.seed;
    RunOptions run;
    run.threads = g.threads;
    return emit(run_manifest(manifest, run), g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace lcv
