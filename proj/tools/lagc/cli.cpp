#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iomanip>
#include <map>
#include <iostream>
#include <sstream>

#include "lagc/lagc.hpp"

namespace lagc::cli {
namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::vector<std::string> lines;
  json doc = json::object();
  bool failed = false;

  void line(std::string text) { lines.push_back(std::move(text)); }
};

Document load(const std::string& path, const std::optional<Signature>& sig) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return read_document(in, sig);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.what());
  }
}

// Runs `fn` and turns parse errors into file:line:col diagnostics.
template <class Fn>
auto with_file(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<Lagrangian> load_lagrangians(const std::string& path, const std::optional<Signature>& sig) {
  const Document doc = load(path, sig);
  return with_file(path, [&] {
    std::vector<Lagrangian> out;
    for (auto& e : parse_lines(doc)) out.emplace_back(std::move(e));
    if (out.empty()) throw DomainError("no Lagrangians in file");
    return out;
  });
}

void require_inputs(const JobSpec& job, std::size_t count) {
  if (job.inputs.size() != count) {
    throw InputError(job.command + " expects " + std::to_string(count) + " input file(s), got " +
                     std::to_string(job.inputs.size()));
  }
}

json expr_list(const std::vector<Expression>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(print(e));
  return out;
}

void cmd_canon(const JobSpec& job, Report& rep) {
  require_inputs(job, 1);
  const Document doc = load(job.inputs[0], job.sig);
  const auto exprs = with_file(job.inputs[0], [&] { return parse_lines(doc); });
  rep.doc["signature"] = to_string(*doc.sig);
  rep.doc["expressions"] = expr_list(exprs);
  for (const auto& e : exprs) rep.line(print(e));
}

void cmd_el(const JobSpec& job, Report& rep) {
  require_inputs(job, 1);
  const auto ls = load_lagrangians(job.inputs[0], job.sig);
  json items = json::array();
  for (const auto& l : ls) {
    const Covector c = with_file(job.inputs[0], [&] { return var_deriv_all(l); });
    for (const auto& e : c.components) rep.line(print(e));
    items.push_back({{"lagrangian", print(l.body())}, {"variational_derivative", expr_list(c.components)}});
  }
  rep.doc["signature"] = to_string(ls.front().signature());
  rep.doc["results"] = items;
}

void cmd_diff(const JobSpec& job, Report& rep) {
  require_inputs(job, 1);
  const auto ls = load_lagrangians(job.inputs[0], job.sig);
  json items = json::array();
  for (const auto& l : ls) {
    const Lagrangian dl = with_file(job.inputs[0], [&] { return apply_d(l); });
    const FiltrationReport f = filtration_check(l);
    rep.line(print(dl.body()));
    items.push_back({{"lagrangian", print(l.body())},
                     {"differential", print(dl.body())},
                     {"signature", to_string(dl.signature())},
                     {"order", f.order},
                     {"order_of_differential", f.order_of_differential},
                     {"filtration_preserved", f.preserved}});
  }
  rep.doc["results"] = items;
}

struct CorpusRow {
  std::string config;
  int order;
  int count;
  int nonzero;
  std::vector<std::string> offenders;
};

void emit_d2_rows(const std::vector<CorpusRow>& rows, Report& rep) {
  std::ostringstream head;
  head << std::left << std::setw(12) << "config" << std::setw(7) << "order" << std::setw(7)
       << "count" << std::setw(9) << "nonzero" << "status";
  rep.line(head.str());
  json items = json::array();
  for (const auto& row : rows) {
    std::ostringstream os;
    const bool ok = row.nonzero == 0;
    os << std::left << std::setw(12) << row.config << std::setw(7) << row.order << std::setw(7)
       << row.count << std::setw(9) << row.nonzero << (ok ? "PASS" : "FAIL");
    rep.line(os.str());
    for (const auto& o : row.offenders) rep.line("  d2 = " + o);
    rep.failed |= !ok;
    items.push_back({{"config", row.config},
                     {"order", row.order},
                     {"count", row.count},
                     {"nonzero", row.nonzero},
                     {"status", ok ? "PASS" : "FAIL"},
                     {"offenders", row.offenders}});
  }
  rep.doc["rows"] = items;
}

Signature corpus_signature(const JobSpec& job) {
  Signature base = job.sig.value_or(Signature(1, 0, 1, 0));
  return Signature(job.n.value_or(base.n), job.m.value_or(base.m), job.r.value_or(base.r),
                   job.s.value_or(base.s));
}

void cmd_d2check(const JobSpec& job, Report& rep) {
  std::vector<CorpusRow> rows;
  if (!job.inputs.empty()) {
    for (const auto& path : job.inputs) {
      const auto ls = load_lagrangians(path, job.sig);
      CorpusRow row{path, 0, static_cast<int>(ls.size()), 0, {}};
      for (const auto& l : ls) {
        row.order = std::max(row.order, order_of(l.body()));
        const Expression d2 = with_file(path, [&] { return d_squared_check(l); });
        if (!d2.is_zero()) {
          ++row.nonzero;
          row.offenders.push_back(print(d2));
        }
      }
      rows.push_back(std::move(row));
    }
  } else {
    CorpusConfig cfg;
    cfg.sig = corpus_signature(job);
    cfg.order = job.order;
    cfg.coeff_degree = job.degree;
    const auto ls = random_corpus(cfg, job.seed, job.count);
    CorpusRow row{to_string(cfg.sig), cfg.order, job.count, 0, {}};
    for (const auto& l : ls) {
      const Expression d2 = d_squared_check(l);
      if (!d2.is_zero()) {
        ++row.nonzero;
        row.offenders.push_back(print(d2));
      }
    }
    rep.doc["seed"] = job.seed;
    rows.push_back(std::move(row));
  }
  emit_d2_rows(rows, rep);
}

void cmd_helmholtz(const JobSpec& job, Report& rep) {
  require_inputs(job, 1);
  const Document doc = load(job.inputs[0], job.sig);
  const Expression obstruction = with_file(job.inputs[0], [&] {
    Covector f{*doc.sig, parse_lines(doc)};
    return helmholtz_check(f);
  });
  rep.line(print(obstruction));
  rep.failed = !obstruction.is_zero();
  rep.doc["obstruction"] = print(obstruction);
  rep.doc["status"] = rep.failed ? "FAIL" : "PASS";
}

void cmd_pullback_check(const JobSpec& job, Report& rep) {
  require_inputs(job, 2);
  const auto ls = load_lagrangians(job.inputs[0], job.sig);
  const Document change_doc = load(job.inputs[1], ls.front().signature());
  const CoordinateChange change = with_file(job.inputs[1], [&] {
    return CoordinateChange(*change_doc.sig, parse_bindings(change_doc, *change_doc.sig));
  });
  json items = json::array();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto cov = with_file(job.inputs[0], [&] { return covector_check(ls[i], change); });
    const auto nat = with_file(job.inputs[0], [&] { return naturality_check(ls[i], change); });
    const bool cov_ok = std::all_of(cov.begin(), cov.end(), [](const auto& e) { return e.is_zero(); });
    const bool nat_ok = nat.is_zero();
    rep.line("L" + std::to_string(i + 1) + " covector " + (cov_ok ? "PASS" : "FAIL") +
             " naturality " + (nat_ok ? "PASS" : "FAIL"));
    if (!cov_ok) {
      for (const auto& e : cov) rep.line("  covector: " + print(e));
    }
    if (!nat_ok) rep.line("  naturality: " + print(nat));
    rep.failed |= !(cov_ok && nat_ok);
    items.push_back({{"lagrangian", print(ls[i].body())},
                     {"covector", expr_list(cov)},
                     {"naturality", print(nat)},
                     {"status", cov_ok && nat_ok ? "PASS" : "FAIL"}});
  }
  rep.doc["results"] = items;
}

void cmd_divergence(const JobSpec& job, Report& rep) {
  require_inputs(job, 1);
  const auto ls = load_lagrangians(job.inputs[0], job.sig);
  json items = json::array();
  for (const auto& l : ls) {
    const auto cert = with_file(job.inputs[0], [&] { return divergence_decompose(l); });
    json flux = json::object();
    for (const auto& [f, h] : cert.flux) {
      const std::string name = "h" + std::to_string(f);
      rep.line(name + " = " + print(h));
      flux[name] = print(h);
    }
    rep.line("residual = " + print(cert.residual));
    rep.failed |= !cert.residual.is_zero();
    items.push_back({{"lagrangian", print(l.body())},
                     {"defect", print(cert.defect)},
                     {"flux", flux},
                     {"residual", print(cert.residual)}});
  }
  rep.doc["results"] = items;
}

void cmd_stokes(const JobSpec& job, Report& rep) {
  require_inputs(job, 2);
  const auto ls = load_lagrangians(job.inputs[0], job.sig);
  const Signature base = ls.front().signature();
  const Document hdoc = load(job.inputs[1], base);
  const Homotopy h = with_file(job.inputs[1], [&] {
    return Homotopy(base, parse_bindings(hdoc, base.lifted()));
  });
  json items = json::array();
  for (const auto& l : ls) {
    const StokesResult res = with_file(job.inputs[1], [&] { return stokes_check(l, h); });
    const bool ok = res.lhs == res.rhs;
    rep.line("lhs = " + to_string(res.lhs));
    rep.line("rhs = " + to_string(res.rhs));
    rep.line(ok ? "PASS" : "FAIL");
    rep.failed |= !ok;
    items.push_back({{"lagrangian", print(l.body())},
                     {"lhs", to_string(res.lhs)},
                     {"rhs", to_string(res.rhs)},
                     {"status", ok ? "PASS" : "FAIL"}});
  }
  rep.doc["results"] = items;
}

// Every monomial form x^alpha dx^I on R^n with |alpha| <= degree, deg I <= n.
std::vector<PolyForm> monomial_forms(int n, int degree) {
  const Signature sig(n, 0, 0, 0);
  std::vector<Expression> monos{Expression::constant(sig, 1)};
  for (int d = 1; d <= degree; ++d) {
    std::vector<Expression> next;
    for (const auto& e : monos) {
      for (int a = 1; a <= n; ++a) next.push_back(e * Expression::jet(sig, a));
    }
    monos.insert(monos.end(), next.begin(), next.end());
  }
  // dedupe via print
  std::map<std::string, Expression> unique;
  for (const auto& e : monos) unique.emplace(print(e), e);

  std::vector<PolyForm> out;
  for (int k = 0; k <= n; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> idx;
      for (int a = 1; a <= n; ++a) {
        if (mask & (1u << (a - 1))) idx.push_back(a);
      }
      for (const auto& [name, e] : unique) {
        PolyForm w(n, k);
        w.add(idx, e);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

void cmd_derham_check(const JobSpec& job, Report& rep) {
  if (!job.inputs.empty()) {
    require_inputs(job, 1);
    const Document doc = load(job.inputs[0], job.sig);
    const PolyForm w = with_file(job.inputs[0], [&] { return read_form(doc); });
    const Expression residual = with_file(job.inputs[0], [&] { return bridge_check(w); });
    const Lagrangian lw = form_to_lagrangian(w);
    rep.line("L = " + print(lw.body()));
    rep.line("dL = " + print(apply_d(lw).body()));
    rep.line("residual = " + print(residual));
    rep.failed = !residual.is_zero();
    rep.doc = {{"lagrangian", print(lw.body())},
               {"differential", print(apply_d(lw).body())},
               {"residual", print(residual)}};
    return;
  }
  const int n = job.n.value_or(3);
  const auto forms = monomial_forms(n, job.degree);
  int failures = 0;
  json offenders = json::array();
  for (const auto& w : forms) {
    const Expression residual = bridge_check(w);
    if (!residual.is_zero()) {
      ++failures;
      offenders.push_back(print(form_to_lagrangian(w).body()));
    }
  }
  std::ostringstream os;
  os << "bridge n=" << n << " degree<=" << job.degree << " forms=" << forms.size()
     << " nonzero=" << failures << " " << (failures == 0 ? "PASS" : "FAIL");
  rep.line(os.str());
  for (const auto& o : offenders) rep.line("  L = " + o.get<std::string>());
  rep.failed = failures != 0;
  rep.doc = {{"n", n}, {"degree", job.degree}, {"forms", forms.size()}, {"nonzero", failures}, {"offenders", offenders}};
}

void cmd_cohomology(const JobSpec& job, Report& rep) {
  const int n = job.n.value_or(2);
  const auto dims = with_file("cohomology", [&] { return cohomology_dims(n, job.degree); });
  bool poincare = true;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    rep.line("H" + std::to_string(k) + " " + std::to_string(dims[k]));
    poincare &= dims[k] == (k == 0 ? 1 : 0);
  }
  rep.failed = !poincare;
  rep.doc = {{"n", n}, {"degree_bound", job.degree}, {"dims", dims}};
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  Report rep;
  try {
    if (job.command == "canon") {
      cmd_canon(job, rep);
    } else if (job.command == "el") {
      cmd_el(job, rep);
    } else if (job.command == "diff") {
      cmd_diff(job, rep);
    } else if (job.command == "d2check") {
      cmd_d2check(job, rep);
    } else if (job.command == "helmholtz") {
      cmd_helmholtz(job, rep);
    } else if (job.command == "pullback-check") {
      cmd_pullback_check(job, rep);
    } else if (job.command == "divergence") {
      cmd_divergence(job, rep);
    } else if (job.command == "stokes") {
      cmd_stokes(job, rep);
    } else if (job.command == "derham-check") {
      cmd_derham_check(job, rep);
    } else if (job.command == "cohomology") {
      cmd_cohomology(job, rep);
    } else {
      throw InputError("unknown command '" + job.command + "'");
    }
  } catch (const InputError& e) {
    result.exit_code = kInputError;
    result.error = e.what();
    return result;
  } catch (const Error& e) {
    result.exit_code = kInputError;
    result.error = e.what();
    return result;
  }

  result.exit_code = rep.failed ? kContractFailed : kOk;
  if (job.json) {
    rep.doc["command"] = job.command;
    rep.doc["status"] = rep.failed ? "FAIL" : "PASS";
    result.output = rep.doc.dump(2) + "\n";
  } else {
    for (const auto& l : rep.lines) result.output += l + "\n";
  }
  return result;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact engine for the variational complex of Lagrangians"};
  app.require_subcommand(1);

  JobSpec job;
  std::string sig_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("inputs", job.inputs, "Input files");
    sub->add_option("--sig", sig_text, "Signature override, \"n|m r|s\"");
    sub->add_flag("--json", job.json, "Emit a JSON report");
    sub->add_option("--out", job.out, "Write the report to FILE");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--seed", job.seed, "Corpus seed");
    sub->add_option("--order", job.order, "Derivative order of generated Lagrangians");
    sub->add_option("--n", job.n, "Even coordinates");
    sub->add_option("--m", job.m, "Odd coordinates");
    sub->add_option("--r", job.r, "Even times");
    sub->add_option("--s", job.s, "Odd times");
    sub->add_option("--count", job.count, "Corpus size");
    sub->add_option("--degree", job.degree, "Coefficient degree bound");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"canon", "Print expressions in canonical form"},
      {"el", "Variational derivatives (Euler-Lagrange expressions)"},
      {"diff", "Apply the differential d"},
      {"d2check", "Check d^2 = 0 on files or on a seeded random corpus"},
      {"helmholtz", "Necessary condition for a covector to be variational"},
      {"pullback-check", "Covector transformation and naturality of d under a coordinate change"},
      {"divergence", "Total-divergence certificate for dL - D_{r+1}L"},
      {"stokes", "Generalized Stokes formula on a homotopy"},
      {"derham-check", "d on form-like Lagrangians versus the exterior derivative"},
      {"cohomology", "Truncated polynomial de Rham cohomology dimensions"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    add_corpus(sub);
    sub->callback([&job, name = name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (!sig_text.empty()) {
    try {
      job.sig = parse_signature(sig_text);
    } catch (const Error& e) {
      std::cerr << "--sig: " << e.what() << "\n";
      return kInputError;
    }
  }

  const RunResult result = run(job);
  if (!result.error.empty()) std::cerr << result.error << "\n";
  if (job.out) {
    std::ofstream out(*job.out);
    if (!out) {
      std::cerr << *job.out << ": cannot write\n";
      return kInputError;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}

}  // namespace lagc::cli
