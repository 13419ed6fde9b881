#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk/errors.hpp"
#include "qk/invariants.hpp"
#include "qk/presets.hpp"
#include "qk/vafa_intriligator.hpp"

namespace {

using qk::Complex;

qk::GDegree parse_degree(const std::string& s) {
  qk::GDegree d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) d.pairings.push_back(std::stoll(tok));
  if (d.pairings.empty()) qk::fail("invalid-argument", "empty degree");
  return d;
}

std::vector<Complex> parse_q(const std::string& s) {
  std::vector<Complex> q;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    double re = std::stod(tok.substr(0, colon));
    double im = colon == std::string::npos ? 0.0 : std::stod(tok.substr(colon + 1));
    q.emplace_back(re, im);
  }
  if (q.empty()) qk::fail("invalid-argument", "empty q");
  return q;
}

void print_table(const nlohmann::json& j, std::ostream& out) {
  std::size_t width = 0;
  for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << it.key() << std::string(width - it.key().size() + 2, ' ');
    if (it.value().is_string())
      out << it.value().get<std::string>();
    else
      out << it.value().dump();
    out << "\n";
  }
}

void emit(const nlohmann::json& j, const std::string& format) {
  if (format == "table")
    print_table(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

int threads_default() {
  const char* env = std::getenv("QMI_THREADS");
  return env ? std::atoi(env) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasimap invariants of GIT quotients via residue formulas"};
  app.require_subcommand(1);

  std::string preset, degree_str, insertion_str, q_str, format = "json", mode = "nonequivariant";
  std::int64_t kappa_bound = 8;
  bool dualize = false, explain = false;
  int threads = threads_default();

  auto add_common = [&](CLI::App* cmd, bool needs_degree, bool needs_q) {
    cmd->add_option("--preset", preset, "preset spec (p:n, pp:a,b, gr:r,n) or JSON path")
        ->required();
    cmd->add_option("--insertion", insertion_str, "insertion polynomial in u1..ur (and z)")
        ->required();
    if (needs_degree) cmd->add_option("--degree", degree_str, "degree, comma-separated")->required();
    if (needs_q) cmd->add_option("--q", q_str, "dual-group coordinates re[:im],...")->required();
    cmd->add_option("--format", format, "json or table");
    cmd->add_option("--threads", threads, "worker threads (results are order-independent)");
  };

  auto* inv_cmd = app.add_subcommand("invariant", "single graph-quasimap invariant");
  add_common(inv_cmd, true, false);
  inv_cmd->add_option("--mode", mode, "equivariant or nonequivariant");
  inv_cmd->add_flag("--dualize", dualize, "pair with the dual Chern roots (u -> -u)");
  inv_cmd->add_flag("--explain", explain, "stream the residue debug dump");

  auto* explain_cmd = app.add_subcommand("explain", "invariant with the full residue trace");
  add_common(explain_cmd, true, false);
  explain_cmd->add_option("--mode", mode, "equivariant or nonequivariant");
  explain_cmd->add_flag("--dualize", dualize, "pair with the dual Chern roots (u -> -u)");

  auto* series_cmd = app.add_subcommand("series", "truncated generating series at q");
  add_common(series_cmd, false, true);
  series_cmd->add_option("--kappa-bound", kappa_bound, "anticanonical degree cutoff");

  auto* vi_cmd = app.add_subcommand("vi", "Vafa-Intriligator fiber sum at q");
  add_common(vi_cmd, false, true);

  auto* check_cmd = app.add_subcommand("check", "series vs Vafa-Intriligator comparison");
  add_common(check_cmd, false, true);
  check_cmd->add_option("--kappa-bound", kappa_bound, "anticanonical degree cutoff");

  auto* presets_cmd = app.add_subcommand("presets", "list preset syntaxes");
  std::string presets_format = "json";
  presets_cmd->add_option("--format", presets_format, "json or table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (presets_cmd->parsed()) {
      std::cout << qk::preset_catalogue();
      return 0;
    }
    qk::GitPresentation p = qk::preset_from_spec(preset);
    if (inv_cmd->parsed() || explain_cmd->parsed()) {
      qk::InvariantRequest req;
      req.presentation = p;
      req.degree = parse_degree(degree_str);
      req.insertion = qk::parse_polynomial(insertion_str, p.rank);
      req.dualize = dualize;
      const bool equivariant = mode == "equivariant";
      if (!equivariant && mode != "nonequivariant")
        qk::fail("invalid-argument", "mode must be equivariant or nonequivariant");
      req.mode = equivariant ? qk::InvariantMode::equivariant : qk::InvariantMode::nonequivariant;
      std::string trace;
      std::string* trace_ptr = (explain || explain_cmd->parsed()) ? &trace : nullptr;
      qk::InvariantResult res = equivariant ? qk::equivariant_invariant(req, trace_ptr)
                                            : qk::nonequivariant_invariant(req, trace_ptr);
      nlohmann::json out = nlohmann::json::parse(qk::result_to_json(res));
      out["value_display"] = res.value.str();
      if (trace_ptr) out["residue_trace"] = nlohmann::json::parse(trace);
      emit(out, format);
      return 0;
    }
    qk::Polynomial insertion = qk::parse_polynomial(insertion_str, p.rank);
    if (series_cmd->parsed()) {
      double last = 0.0;
      Complex v = qk::generating_series_truncated(p, insertion, parse_q(q_str), kappa_bound, &last);
      nlohmann::json out;
      out["series_value"] = {v.real(), v.imag()};
      out["last_term"] = last;
      out["kappa_bound"] = kappa_bound;
      emit(out, format);
      return 0;
    }
    if (vi_cmd->parsed()) {
      auto q = qk::dual_group_point(parse_q(q_str), p);
      Complex v = qk::vi_sum(insertion, q, p);
      nlohmann::json out;
      out["vi_value"] = {v.real(), v.imag()};
      emit(out, format);
      return 0;
    }
    if (check_cmd->parsed()) {
      auto q = qk::dual_group_point(parse_q(q_str), p);
      auto rep = qk::vi_vs_series_check(insertion, q, p, kappa_bound);
      emit(nlohmann::json::parse(qk::report_to_json(rep)), format);
      return 0;
    }
  } catch (const qk::Error& e) {
    nlohmann::json err;
    err["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"code", "invalid-argument"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 2;
}
