// Copyright 2026 The cfspectrum Authors
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

#include "cfspectrum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfspectrum/cfrac.hpp"
#include "cfspectrum/constructors.hpp"
#include "cfspectrum/dimension.hpp"
#include "cfspectrum/growth.hpp"
#include "cfspectrum/measures.hpp"
#include "cfspectrum/verify.hpp"

namespace cfs {

namespace {

using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string psi_spec;
  std::string word_csv;
  std::string rational;
  std::string real_value;
  std::string real_radius = "1e-15";
  std::string s_seq = "psi";
  std::string check = "limsup";
  std::string kind = "point";
  std::string op = "pressure";
  std::string method = "theorem11";
  std::string suite = "all";
  std::string points_path;
  std::string scales_csv = "2,3,4,5,6,7,8,9,10,11,12";
  std::string epsilon = "1/2";
  std::string t = "2";
  std::string beta = "1";
  std::string b = "2";
  std::string s_exponent = "1/3";
  std::string tolerance = "1/100";
  std::string target_error = "1e-9";
  long horizon = 200;
  long max_n = 64;
  long n = 0;
  long ell = 2;
  long depth = 200;
  long trials = 1000;
  long alphabet_cap = 10000;
  long a_min = 0;
  long count = 1000;
};

Rational parse_decimal_or_fraction(const std::string& s) {
  // Accepts "p/q", integers, decimals, and exponent forms like "1e-9".
  auto e = s.find_first_of("eE");
  if (e != std::string::npos && s.find('/') == std::string::npos) {
    Rational base = parse_fraction(s.substr(0, e));
    long exp = std::stol(s.substr(e + 1));
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp)));
    Rational r = exp >= 0 ? Rational(base * pow) : Rational(base / pow);
    r.canonicalize();
    return r;
  }
  return parse_fraction(s);
}

GrowthFunction make_psi(const std::string& spec) {
  if (spec.empty()) throw usage_error("--psi is required for this subcommand");
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "polynomial")
    return GrowthFunction::polynomial(args.empty() ? Rational(2)
                                                   : parse_decimal_or_fraction(args));
  if (kind == "geometric") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      return GrowthFunction::geometric(args.empty() ? Rational(2)
                                                    : parse_decimal_or_fraction(args));
    return GrowthFunction::geometric(parse_decimal_or_fraction(args.substr(0, comma)),
                                     parse_decimal_or_fraction(args.substr(comma + 1)));
  }
  if (kind == "factorial_block") return GrowthFunction::factorial_block();
  if (kind == "table") {
    if (args.empty()) throw usage_error("table psi needs a path: table:psi.csv");
    return GrowthFunction::table_from_csv(args);
  }
  throw usage_error("unknown psi kind: " + kind);
}

SSeq make_sseq(const Options& o) {
  if (o.s_seq == "psi") return SSeq::from_psi(make_psi(o.psi_spec));
  if (o.s_seq == "doubleexp") return SSeq::doubly_exponential();
  if (o.s_seq.rfind("const:", 0) == 0)
    return SSeq::constant(parse_bigint(o.s_seq.substr(6)));
  throw usage_error("unknown s sequence: " + o.s_seq +
                    " (use psi, doubleexp, or const:<c>)");
}

Word required_word(const Options& o) {
  if (o.word_csv.empty()) throw usage_error("--word is required for this subcommand");
  return Word::parse_csv(o.word_csv);
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg) : format_(cfg.format), path_(cfg.out_path) {}

  void object(const json& j) {
    if (format_ == "csv") {
      std::ostringstream os;
      os << "key,value\n";
      for (auto it = j.begin(); it != j.end(); ++it)
        os << it.key() << "," << cell(it.value()) << "\n";
      write(os.str());
    } else {
      write(j.dump(2) + "\n");
    }
  }

  // Traces: one JSON object per line, or CSV with a header row.
  void trace(const std::vector<json>& lines) {
    std::ostringstream os;
    if (format_ == "csv") {
      if (!lines.empty()) {
        bool first = true;
        for (auto it = lines.front().begin(); it != lines.front().end(); ++it) {
          if (!first) os << ",";
          os << it.key();
          first = false;
        }
        os << "\n";
      }
      for (const auto& line : lines) {
        bool first = true;
        for (auto it = line.begin(); it != line.end(); ++it) {
          if (!first) os << ",";
          os << cell(it.value());
          first = false;
        }
        os << "\n";
      }
    } else {
      for (const auto& line : lines) os << line.dump() << "\n";
    }
    write(os.str());
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  void write(const std::string& payload) {
    if (path_.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path_, std::ios::binary);
      if (!out) throw domain_error("cannot open output path: " + path_);
      out << payload;
    }
  }

  std::string format_;
  std::string path_;
};

json scalar_json(const Scalar& v) {
  if (v.is_exact()) return to_fraction(v.rational());
  return v.to_double();
}

std::vector<json> ratio_trace(const Word& w, const GrowthFunction* psi, long upto,
                              mpfr_prec_t prec) {
  std::vector<json> lines;
  CertifiedReal sum = CertifiedReal::exact(0L, prec);
  for (long k = 1; k <= upto; ++k) {
    sum = sum + CertifiedReal::log_of(w[k - 1], prec);
    json line;
    line["n"] = k;
    line["a_n"] = w[k - 1].get_str();
    line["log_sum"] = sum.to_double();
    if (psi != nullptr)
      line["ratio"] = (sum / (*psi)(k, prec).enclosure(prec)).to_double();
    lines.push_back(std::move(line));
  }
  return lines;
}

int cmd_expand(const Options& o, Emitter& em, const RunConfig& cfg) {
  Word w;
  if (!o.rational.empty()) {
    w = gauss_expand(parse_decimal_or_fraction(o.rational), o.max_n);
  } else if (!o.real_value.empty()) {
    Rational x = parse_decimal_or_fraction(o.real_value);
    Rational r = parse_decimal_or_fraction(o.real_radius);
    w = gauss_expand(
        CertifiedReal::from_endpoints(x - r, x + r,
                                      static_cast<mpfr_prec_t>(cfg.precision_bits)),
        o.max_n);
  } else {
    throw usage_error("expand needs --rational or --real");
  }
  json out;
  out["quotients"] = json::array();
  for (const auto& a : w) out["quotients"].push_back(a.get_str());
  em.object(out);
  return kExitOk;
}

int cmd_evaluate(const Options& o, Emitter& em) {
  json out;
  out["value"] = to_fraction(evaluate(required_word(o)));
  em.object(out);
  return kExitOk;
}

int cmd_convergents(const Options& o, Emitter& em) {
  Word w = required_word(o);
  std::vector<json> lines;
  for (const auto& st : convergents(w)) {
    json line;
    line["n"] = st.n;
    line["p"] = st.p_cur.get_str();
    line["q"] = st.q_cur.get_str();
    line["determinant"] = st.determinant().get_str();
    lines.push_back(std::move(line));
  }
  em.trace(lines);
  return kExitOk;
}

int cmd_cylinder(const Options& o, Emitter& em) {
  Word w = required_word(o);
  Cylinder c = cylinder(w);
  json out;
  out["word"] = json::parse(w.to_json());
  out["left"] = to_fraction(c.left);
  out["right"] = to_fraction(c.right);
  out["diameter"] = to_fraction(c.diameter);
  if (o.a_min > 0) {
    out["a_min"] = o.a_min;
    out["tail_union_diameter"] = to_fraction(tail_union_diameter(w, BigInt(o.a_min)));
  }
  em.object(out);
  return kExitOk;
}

int cmd_growth(const Options& o, Emitter& em) {
  GrowthFunction psi = make_psi(o.psi_spec);
  json out;
  out["psi"] = psi.description();
  out["horizon"] = o.horizon;
  if (o.check == "limsup") {
    auto diag = limsup_ratio(psi, o.horizon,
                             {std::max(1L, o.horizon / 4), std::max(1L, o.horizon / 2)});
    out["b_hat"] = scalar_json(diag.b_hat);
    json maxima = json::array();
    for (const auto& m : diag.window_maxima) maxima.push_back(scalar_json(m));
    out["window_maxima"] = maxima;
    out["divergence"] = diag.divergence_flag;
    json records = json::array();
    for (const auto& [n, v] : diag.records) records.push_back({{"n", n}, {"ratio", v}});
    out["records"] = records;
    em.object(out);
    return kExitOk;
  }
  if (o.check == "superlinear") {
    auto rep = superlinearity_check(psi, o.horizon);
    out["last_half_min"] = scalar_json(rep.last_half_min);
    json minima = json::array();
    for (const auto& m : rep.decile_minima) minima.push_back(scalar_json(m));
    out["decile_minima"] = minima;
    out["passed"] = rep.passed;
    em.object(out);
    return rep.passed ? kExitOk : kExitDiagnosticFailure;
  }
  if (o.check == "equivalence") {
    auto rep = increasing_equivalence_check(
        psi, o.horizon, parse_decimal_or_fraction(o.tolerance).get_d());
    out["tolerance"] = rep.tolerance;
    out["sup_deviation"] = rep.sup_deviation;
    out["argmax"] = rep.argmax;
    out["equivalent"] = rep.equivalent;
    em.object(out);
    return rep.equivalent ? kExitOk : kExitDiagnosticFailure;
  }
  throw usage_error("unknown growth check: " + o.check);
}

int cmd_construct(const Options& o, Emitter& em, const RunConfig& cfg) {
  if (o.n < 1) throw usage_error("construct needs --n >= 1");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
  if (o.kind == "point") {
    GrowthFunction psi = make_psi(o.psi_spec);
    Word w = point_in_E(psi, o.n);
    em.trace(ratio_trace(w, &psi, o.n, prec));
    return kExitOk;
  }
  if (o.kind == "fsample") {
    SSeq s = make_sseq(o);
    Word w = f_set_sampler(s, o.ell, o.n, cfg.seed);
    if (o.s_seq == "psi") {
      GrowthFunction psi = make_psi(o.psi_spec);
      em.trace(ratio_trace(w, &psi, o.n, prec));
    } else {
      em.trace(ratio_trace(w, nullptr, o.n, prec));
    }
    return kExitOk;
  }
  throw usage_error("unknown construct kind: " + o.kind);
}

int cmd_ratio(const Options& o, Emitter& em, const RunConfig& cfg) {
  Word w = required_word(o);
  GrowthFunction psi = make_psi(o.psi_spec);
  long n = o.n > 0 ? o.n : w.order();
  auto lines = ratio_trace(w, &psi, n, static_cast<mpfr_prec_t>(cfg.precision_bits));
  if (!o.epsilon.empty()) {
    Rational eps = parse_decimal_or_fraction(o.epsilon);
    auto m = dn_membership(w, psi, eps, n);
    json tail;
    tail["n"] = n;
    tail["epsilon"] = to_fraction(eps);
    tail["ratio"] = m.ratio.ratio.to_double();
    tail["holds"] = m.holds;
    lines.push_back(std::move(tail));
  }
  em.trace(lines);
  return kExitOk;
}

int cmd_jarnik(const Options& o, Emitter& em) {
  Word w = required_word(o);
  Rational beta = parse_decimal_or_fraction(o.beta);
  json out;
  out["beta"] = to_fraction(beta);
  out["indices"] = jarnik_check(w, beta);
  em.object(out);
  return kExitOk;
}

int cmd_measure(const Options& o, Emitter& em) {
  double err = parse_decimal_or_fraction(o.target_error).get_d();
  if (o.op == "pressure") {
    Rational t = parse_decimal_or_fraction(o.t);
    CertifiedReal p = pressure(t, err);
    json out;
    out["t"] = to_fraction(t);
    out["p"] = p.to_double();
    out["err"] = p.radius().get_d();
    em.object(out);
    return kExitOk;
  }
  if (o.op == "mu") {
    Rational t = parse_decimal_or_fraction(o.t);
    Word w = required_word(o);
    MuValue v = mu(t, w, err);
    json out;
    out["t"] = to_fraction(t);
    out["word"] = json::parse(w.to_json());
    out["log_mu"] = v.log_mu.to_double();
    out["err"] = v.log_mu.radius().get_d();
    out["mu"] = v.mu.to_double();
    em.object(out);
    return kExitOk;
  }
  if (o.op == "consistency") {
    Rational t = parse_decimal_or_fraction(o.t);
    Word w = o.word_csv.empty() ? Word() : Word::parse_csv(o.word_csv);
    auto rep = consistency_check(t, w, o.alphabet_cap);
    json out;
    out["t"] = to_fraction(t);
    out["word"] = json::parse(w.to_json());
    out["alphabet_cap"] = rep.alphabet_cap;
    out["children_low"] = rep.children.lower().get_d();
    out["children_high"] = rep.children.upper().get_d();
    out["parent_low"] = rep.parent.lower().get_d();
    out["parent_high"] = rep.parent.upper().get_d();
    out["overlap"] = rep.overlap;
    out["gap"] = rep.gap;
    em.object(out);
    return rep.overlap ? kExitOk : kExitDiagnosticFailure;
  }
  if (o.op == "inequality4") {
    Rational eps = parse_decimal_or_fraction(o.epsilon);
    Word w = required_word(o);
    GrowthFunction psi = make_psi(o.psi_spec);
    long n = o.n > 0 ? o.n : w.order();
    auto rep = inequality4_check(eps, w, psi, n);
    json out;
    out["t"] = to_fraction(rep.t);
    out["word"] = json::parse(w.to_json());
    out["lhs"] = rep.lhs_log.to_double();
    out["rhs"] = rep.rhs_log.to_double();
    out["err"] = rep.lhs_log.radius().get_d() + rep.rhs_log.radius().get_d();
    out["holds"] = rep.status == Ineq4Status::holds;
    switch (rep.status) {
      case Ineq4Status::holds: out["status"] = "holds"; break;
      case Ineq4Status::fails: out["status"] = "fails"; break;
      case Ineq4Status::inapplicable: out["status"] = "inapplicable"; break;
      case Ineq4Status::undecided: out["status"] = "undecided"; break;
    }
    if (!rep.reason.empty()) out["reason"] = rep.reason;
    em.object(out);
    return rep.status == Ineq4Status::fails ? kExitDiagnosticFailure : kExitOk;
  }
  throw usage_error("unknown measure op: " + o.op);
}

int cmd_threshold(const Options& o, Emitter& em) {
  GrowthFunction psi = make_psi(o.psi_spec);
  Rational eps = parse_decimal_or_fraction(o.epsilon);
  auto res = n_epsilon_threshold(psi, eps, o.horizon);
  json out;
  out["psi"] = psi.description();
  out["epsilon"] = to_fraction(eps);
  out["t"] = to_fraction(res.t);
  out["horizon"] = res.horizon;
  if (res.n_epsilon.has_value())
    out["n_epsilon"] = *res.n_epsilon;
  else
    out["n_epsilon"] = nullptr;
  em.object(out);
  return kExitOk;
}

int cmd_dimension(const Options& o, Emitter& em, const RunConfig& cfg) {
  json out;
  if (o.method == "theorem11") {
    GrowthFunction psi = make_psi(o.psi_spec);
    auto est = fast_khintchine_dimension(psi, o.horizon);
    out["value"] = scalar_json(est.value);
    out["method"] = est.method;
    out["horizon"] = est.horizon;
    out["empty_set"] = est.empty_set;
    out["b_infinite"] = est.b_infinite;
    out["diagnostics_ok"] = est.diagnostics_ok;
    em.object(out);
    return est.diagnostics_ok ? kExitOk : kExitDiagnosticFailure;
  }
  if (o.method == "lemma31") {
    auto est = lemma31_dimension(make_sseq(o), o.horizon);
    if (cfg.format == "csv") {
      std::vector<json> lines;
      double running = est.trend.empty() ? 0.0 : est.trend.front();
      for (size_t i = 0; i < est.trend.size(); ++i) {
        if (static_cast<long>(i) + 1 >= o.horizon / 2)
          running = std::min(running, est.trend[i]);
        else
          running = est.trend[i];
        json line;
        line["level"] = i + 1;
        line["ratio"] = est.trend[i];
        line["running_estimate"] = running;
        lines.push_back(std::move(line));
      }
      em.trace(lines);
      return kExitOk;
    }
    out["value"] = scalar_json(est.value);
    out["method"] = est.method;
    out["horizon"] = est.horizon;
    out["trend_tail"] = est.trend.empty() ? 0.0 : est.trend.back();
    em.object(out);
    return kExitOk;
  }
  if (o.method == "jarnik") {
    auto [upper, star] = jarnik_bounds(parse_decimal_or_fraction(o.beta));
    out["method"] = "jarnik";
    out["upper_bound"] = to_fraction(upper);
    out["star_value"] = to_fraction(star);
    em.object(out);
    return kExitOk;
  }
  if (o.method == "beta") {
    auto r = beta_exponent(parse_decimal_or_fraction(o.b),
                           parse_decimal_or_fraction(o.epsilon));
    out["method"] = "beta";
    out["b"] = to_fraction(r.b);
    out["epsilon"] = to_fraction(r.epsilon);
    out["beta"] = to_fraction(r.beta);
    out["positive"] = r.positive;
    out["induced_bound"] = to_fraction(r.induced_bound);
    em.object(out);
    return kExitOk;
  }
  if (o.method == "covering") {
    auto trace = covering_sum_trace(make_sseq(o), o.ell,
                                    parse_decimal_or_fraction(o.s_exponent), o.depth);
    std::vector<json> lines;
    for (const auto& lv : trace.levels) {
      json line;
      line["level"] = lv.n;
      line["log_lower"] = lv.log_lower;
      line["log_upper"] = lv.log_upper;
      line["upper_tail_decreasing"] = trace.upper_tail_decreasing;
      line["lower_tail_increasing"] = trace.lower_tail_increasing;
      lines.push_back(std::move(line));
    }
    em.trace(lines);
    return kExitOk;
  }
  if (o.method == "box") {
    std::vector<Rational> pts;
    if (!o.points_path.empty()) {
      std::ifstream in(o.points_path);
      if (!in) throw domain_error("cannot open points file: " + o.points_path);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) pts.push_back(parse_fraction(line));
    } else {
      pts = sample_f_points(make_sseq(o), o.ell, o.depth, o.count, cfg.seed);
    }
    Word scales_word = Word::parse_csv(o.scales_csv);
    std::vector<long> scales;
    for (const auto& j : scales_word) scales.push_back(j.get_si());
    auto res = box_counting(pts, scales);
    if (cfg.format == "csv") {
      std::vector<json> lines;
      std::vector<double> xs, ys;
      for (const auto& [j, c] : res.scale_counts) {
        xs.push_back(static_cast<double>(j) * std::log(2.0));
        ys.push_back(std::log(static_cast<double>(c)));
        double running = 0.0;
        if (xs.size() >= 2) {
          double mx = 0, my = 0;
          for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
          mx /= xs.size();
          my /= ys.size();
          double sxy = 0, sxx = 0;
          for (size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
          }
          running = sxy / sxx;
        }
        json line;
        line["scale"] = j;
        line["count"] = c;
        line["running_estimate"] = running;
        lines.push_back(std::move(line));
      }
      em.trace(lines);
      return kExitOk;
    }
    out["value"] = scalar_json(res.estimate.value);
    out["method"] = res.estimate.method;
    out["slope"] = res.slope_raw;
    out["residual"] = res.residual;
    json counts = json::array();
    for (const auto& [j, c] : res.scale_counts) counts.push_back({{"scale", j}, {"count", c}});
    out["counts"] = counts;
    em.object(out);
    return kExitOk;
  }
  throw usage_error("unknown dimension method: " + o.method);
}

int cmd_verify(const Options& o, Emitter& em, const RunConfig& cfg) {
  std::vector<SuiteReport> reports;
  if (o.suite == "all") {
    reports = verify_all(o.depth, o.trials, cfg.seed);
  } else if (o.suite == "identities") {
    reports.push_back(verify_identities(o.depth, o.trials, cfg.seed));
  } else if (o.suite == "roundtrip") {
    reports.push_back(verify_roundtrip(o.trials, cfg.seed));
  } else if (o.suite == "tailunion") {
    reports.push_back(verify_tailunion(o.trials, cfg.seed));
  } else if (o.suite == "construction") {
    reports.push_back(verify_construction(cfg.seed));
  } else if (o.suite == "measures") {
    reports.push_back(verify_measures(std::min(o.trials, 50L), cfg.seed));
  } else if (o.suite == "dimension") {
    reports.push_back(verify_dimension(cfg.seed));
  } else {
    throw usage_error("unknown suite: " + o.suite);
  }

  long failures = 0;
  json out;
  out["suites"] = json::array();
  for (const auto& rep : reports) {
    json js;
    js["suite"] = rep.suite;
    js["checks"] = json::array();
    for (const auto& c : rep.checks) {
      json jc;
      jc["name"] = c.name;
      jc["trials"] = c.trials;
      jc["failures"] = c.failures;
      if (!c.messages.empty()) jc["messages"] = c.messages;
      js["checks"].push_back(std::move(jc));
    }
    js["passed"] = rep.passed();
    out["suites"].push_back(std::move(js));
    failures += rep.failures();
  }
  out["total_failures"] = failures;
  em.object(out);
  return failures == 0 ? kExitOk : kExitDiagnosticFailure;
}

Options g_options;  // bound by the CLI11 layer, consumed by run()

}  // namespace

const std::map<std::string, std::string>& dispatch_table() {
  static const std::map<std::string, std::string> table = {
      {"gauss_expand", "expand"},
      {"evaluate", "evaluate"},
      {"convergents", "convergents"},
      {"cylinder", "cylinder"},
      {"tail_union_diameter", "cylinder"},
      {"limsup_ratio", "growth"},
      {"superlinearity_check", "growth"},
      {"increasing_equivalence_check", "growth"},
      {"point_in_E", "construct"},
      {"f_set_sampler", "construct"},
      {"khintchine_ratio", "ratio"},
      {"dn_membership", "ratio"},
      {"jarnik_check", "jarnik"},
      {"pressure", "measure"},
      {"mu", "measure"},
      {"consistency_check", "measure"},
      {"n_epsilon_threshold", "threshold"},
      {"inequality4_check", "measure"},
      {"lemma31_dimension", "dimension"},
      {"fast_khintchine_dimension", "dimension"},
      {"jarnik_bounds", "dimension"},
      {"beta_exponent", "dimension"},
      {"covering_sum_trace", "dimension"},
      {"box_counting", "dimension"},
      {"verify_harness", "verify"},
  };
  return table;
}

int run(const RunConfig& config) {
  const Options& o = g_options;
  try {
    Emitter em(config);
    if (config.subcommand == "expand") return cmd_expand(o, em, config);
    if (config.subcommand == "evaluate") return cmd_evaluate(o, em);
    if (config.subcommand == "convergents") return cmd_convergents(o, em);
    if (config.subcommand == "cylinder") return cmd_cylinder(o, em);
    if (config.subcommand == "growth") return cmd_growth(o, em);
    if (config.subcommand == "construct") return cmd_construct(o, em, config);
    if (config.subcommand == "ratio") return cmd_ratio(o, em, config);
    if (config.subcommand == "jarnik") return cmd_jarnik(o, em);
    if (config.subcommand == "measure") return cmd_measure(o, em);
    if (config.subcommand == "threshold") return cmd_threshold(o, em);
    if (config.subcommand == "dimension") return cmd_dimension(o, em, config);
    if (config.subcommand == "verify") return cmd_verify(o, em, config);
    std::cerr << "unknown subcommand: " << config.subcommand << "\n";
    return kExitUsage;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResourceError;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const precision_error& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"continued-fraction spectrum toolkit"};
  app.set_config("--config");

  RunConfig cfg;
  g_options = Options{};
  Options& o = g_options;

  app.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "output path (default stdout)");
  app.add_option("--seed", cfg.seed, "deterministic sampler seed");
  app.add_option("--precision-bits", cfg.precision_bits, "working precision");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--psi", o.psi_spec,
                    "growth function: polynomial:<gamma> | geometric:<base>[,<scale>] "
                    "| factorial_block | table:<path>");
    sub->add_option("--word", o.word_csv, "comma-separated partial quotients");
    sub->add_option("--horizon", o.horizon, "diagnostic horizon");
    sub->add_option("--epsilon", o.epsilon, "epsilon parameter");
    sub->add_option("--n", o.n, "order / prefix length");
    sub->fallthrough();
  };

  CLI::App* expand = app.add_subcommand("expand", "continued fraction expansion");
  add_common(expand);
  expand->add_option("--rational", o.rational, "rational input p/q in [0,1)");
  expand->add_option("--real", o.real_value, "decimal midpoint of a certified real");
  expand->add_option("--radius", o.real_radius, "radius of the certified real");
  expand->add_option("--max-n", o.max_n, "maximum quotients to emit");

  CLI::App* evaluate = app.add_subcommand("evaluate", "word -> p_n/q_n");
  add_common(evaluate);

  CLI::App* conv = app.add_subcommand("convergents", "convergent trace of a word");
  add_common(conv);

  CLI::App* cyl = app.add_subcommand("cylinder", "cylinder interval of a word");
  add_common(cyl);
  cyl->add_option("--a-min", o.a_min, "also report the tail union diameter from a_min");

  CLI::App* growth = app.add_subcommand("growth", "growth-function diagnostics");
  add_common(growth);
  growth->add_option("--check", o.check, "limsup | superlinear | equivalence");
  growth->add_option("--tolerance", o.tolerance, "equivalence tolerance");

  CLI::App* construct = app.add_subcommand("construct", "build level-set words");
  add_common(construct);
  construct->add_option("--kind", o.kind, "point | fsample");
  construct->add_option("--s-seq", o.s_seq, "psi | doubleexp | const:<c>");
  construct->add_option("--ell", o.ell, "F-set width parameter (>= 2)");

  CLI::App* ratio = app.add_subcommand("ratio", "normalized log-sum trace");
  add_common(ratio);

  CLI::App* jarnik = app.add_subcommand("jarnik", "indices with a_{n+1} >= q_n^beta");
  add_common(jarnik);
  jarnik->add_option("--beta", o.beta, "exponent beta > 0");

  CLI::App* measure = app.add_subcommand("measure", "cylinder measure stack");
  add_common(measure);
  measure->add_option("--op", o.op, "pressure | mu | consistency | inequality4");
  measure->add_option("--t", o.t, "measure parameter t > 1");
  measure->add_option("--alphabet-cap", o.alphabet_cap, "partial-sum cutoff A");
  measure->add_option("--target-error", o.target_error, "certified error target");

  CLI::App* threshold = app.add_subcommand("threshold", "least level for the pressure inequality");
  add_common(threshold);

  CLI::App* dimension = app.add_subcommand("dimension", "dimension calculators");
  add_common(dimension);
  dimension->add_option("--method", o.method,
                        "lemma31 | theorem11 | jarnik | beta | covering | box");
  dimension->add_option("--beta", o.beta, "Jarnik exponent");
  dimension->add_option("--b", o.b, "limsup ratio b");
  dimension->add_option("--s-seq", o.s_seq, "psi | doubleexp | const:<c>");
  dimension->add_option("--ell", o.ell, "F-set width parameter");
  dimension->add_option("--s-exponent", o.s_exponent, "covering exponent s");
  dimension->add_option("--depth", o.depth, "covering depth / sample depth");
  dimension->add_option("--points", o.points_path, "file of p/q points for box counting");
  dimension->add_option("--scales", o.scales_csv, "dyadic scale exponents, comma separated");
  dimension->add_option("--count", o.count, "sample count for box counting");

  CLI::App* verify = app.add_subcommand("verify", "verification harness");
  add_common(verify);
  verify->add_option("--suite", o.suite,
                     "identities | roundtrip | tailunion | construction | measures "
                     "| dimension | all");
  verify->add_option("--depth", o.depth, "max word length for random words");
  verify->add_option("--trials", o.trials, "number of random trials");

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  std::vector<CLI::App*> subs = app.get_subcommands();
  if (subs.empty()) {
    std::cerr << app.help() << "\n";
    return kExitUsage;
  }
  cfg.subcommand = subs.front()->get_name();
  return run(cfg);
}

}  // namespace cfs
