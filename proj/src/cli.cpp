/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qtheta/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtheta/catalog.hpp"
#include "qtheta/formal/prover.hpp"
#include "qtheta/qtrig.hpp"
#include "qtheta/report.hpp"
#include "qtheta/sweep.hpp"
#include "qtheta/theta.hpp"

namespace qtheta::cli {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ContractError("cannot parse '" + std::string(whole) + "' as a complex number");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw ContractError("empty list '" + s + "'");
  return out;
}

std::pair<double, double> parse_range(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw ContractError("range '" + s + "' must be 'min,max'");
  return {parse_real(parts[0], s), parse_real(parts[1], s)};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::non_converged:
    case ErrorKind::numeric_instability:
      return exit_non_converged;
    case ErrorKind::domain:
    case ErrorKind::range:
    case ErrorKind::contract:
      return exit_usage;
  }
  return exit_usage;
}

enum class Format { json, csv, text };

struct Common {
  std::string format = "text";
  std::string out_path;
  double tol = TruncationPolicy::default_tol;
  std::size_t max_terms = TruncationPolicy::default_max_terms;
  int threads = 0;

  Format parsed_format() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }
  TruncationPolicy policy() const { return TruncationPolicy(tol, max_terms); }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--tol", c.tol, "Truncation tolerance of every series and product")->capture_default_str();
  cmd->add_option("--max-terms", c.max_terms, "Term cap of every series and product")->capture_default_str();
  cmd->add_option("--threads", c.threads, "OpenMP threads (0 keeps the runtime default)");
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ContractError("cannot open '" + c.out_path + "' for writing");
  file << text;
  if (!file) throw ContractError("failed writing '" + c.out_path + "'");
}

// Resolves "all" and validates every id before any work starts.
std::vector<const IdentityDescriptor*> resolve_ids(const std::vector<std::string>& ids, bool formal_only) {
  std::vector<const IdentityDescriptor*> out;
  const bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
  if (all) {
    for (const auto& d : catalog()) {
      if (formal_only ? d.formal : d.numeric) out.push_back(&d);
    }
  } else {
    for (const auto& id : ids) {
      const IdentityDescriptor& d = find_identity(id);
      if (formal_only && !d.formal) throw ContractError("identity '" + d.id + "' has no formal mode");
      if (std::find(out.begin(), out.end(), &d) == out.end()) out.push_back(&d);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  return out;
}

Mutation mutation_from(const std::string& name) {
  const auto m = parse_mutation(name);
  if (!m) throw ContractError("unknown mutation '" + name + "'");
  return *m;
}

std::string eval_output(Format format, const std::string& fn, Complex z, const std::optional<Complex>& q,
                        const std::optional<Complex>& tau, Complex value, const TruncationPolicy& policy,
                        const std::optional<QTrigRoute>& route) {
  const auto route_name = [&]() -> std::string {
    if (!route) return "";
    return *route == QTrigRoute::product ? "product" : "theta_bridge";
  };
  if (format == Format::json) {
    using nlohmann::json;
    const auto cj = [](Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; };
    json j{{"function", fn}, {"value", cj(value)}, {"policy", {{"tol", policy.tol()}, {"max_terms", policy.max_terms()}}}};
    if (fn == "sinq" || fn == "cosq" || fn == "theta1") j["z"] = cj(z);
    if (q) j["q"] = cj(*q);
    if (tau) j["tau"] = cj(*tau);
    if (route) j["route"] = route_name();
    return j.dump() + "\n";
  }
  if (format == Format::csv) {
    std::string s = "function,value_re,value_im,tol,max_terms,route\n";
    std::ostringstream row;
    row.precision(17);
    row << fn << "," << value.real() << "," << value.imag() << "," << policy.tol() << "," << policy.max_terms()
        << "," << route_name() << "\n";
    return s + row.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << fn << " = " << format_complex(value) << "\n";
  os.precision(6);
  os << "policy: tol=" << policy.tol() << " max_terms=" << policy.max_terms();
  if (route) os << " route=" << route_name();
  os << "\n";
  return os.str();
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw ContractError("empty complex number");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the sign of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string_view re = split_at == std::string_view::npos ? std::string_view() : body.substr(0, split_at);
  std::string_view im = split_at == std::string_view::npos ? body : body.substr(split_at);
  double im_value = 0.0;
  if (im.empty() || im == "+") {
    im_value = 1.0;
  } else if (im == "-") {
    im_value = -1.0;
  } else {
    im_value = parse_real(im, text);
  }
  return {re.empty() ? 0.0 : parse_real(re, text), im_value};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numeric and formal verification of theta-function and q-trigonometric identities", "qtheta"};
  app.require_subcommand(1);

  Common list_opts;
  auto* list_cmd = app.add_subcommand("list", "List catalog identities");
  add_common(list_cmd, list_opts);

  Common eval_opts;
  std::string eval_fn;
  std::string eval_z = "0";
  std::string eval_q;
  std::string eval_tau;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate sinq, cosq, piq or theta1");
  eval_cmd->add_option("function", eval_fn, "Function name")
      ->required()
      ->check(CLI::IsMember({"sinq", "cosq", "piq", "theta1"}));
  eval_cmd->add_option("--z", eval_z, "Argument z, e.g. 0.3+0.1i")->capture_default_str();
  eval_cmd->add_option("--q", eval_q, "Nome q with 0 < |q| < 1");
  eval_cmd->add_option("--tau", eval_tau, "Modular parameter tau with Im(tau) > 0");
  add_common(eval_cmd, eval_opts);

  Common check_opts;
  std::vector<std::string> check_ids;
  std::string check_q;
  std::string check_z_re;
  std::string check_z_im;
  GridSpec grid;
  std::string check_mutation = "none";
  bool check_unsquared = false;
  bool check_serial = false;
  auto* check_cmd = app.add_subcommand("check", "Sweep identities over a seeded grid");
  check_cmd->add_option("ids", check_ids, "Identity ids or 'all'")->required();
  check_cmd->add_option("--q", check_q, "Comma-separated q values (default 0.1,0.2,0.3,0.5,0.7)");
  check_cmd->add_option("--grid-n", grid.z_count, "z points per q value")->capture_default_str();
  check_cmd->add_option("--seed", grid.seed, "Grid seed")->capture_default_str();
  check_cmd->add_option("--z-re", check_z_re, "Real range of z as 'min,max' (default 0.05,1.5)");
  check_cmd->add_option("--z-im", check_z_im, "Imaginary range of z as 'min,max' (default -0.5,0.5)");
  check_cmd->add_option("--threshold", grid.tolerance, "Pass threshold on the maximum relative error")
      ->capture_default_str();
  check_cmd->add_option("--mutation", check_mutation, "Corrupt one constant: none, half-to-third, "
                                                      "pi-ratio-9-to-8, sign-flip")
      ->capture_default_str();
  check_cmd->add_flag("--unsquared", check_unsquared, "Check square-root identities with the principal root");
  check_cmd->add_flag("--serial", check_serial, "Use the single-threaded reference sweep");
  add_common(check_cmd, check_opts);

  Common prove_opts;
  std::vector<std::string> prove_ids;
  std::optional<int> prove_order;
  std::string prove_mutation = "none";
  auto* prove_cmd = app.add_subcommand("prove", "Compare formal series coefficients exactly");
  prove_cmd->add_option("ids", prove_ids, "Identity ids or 'all'")->required();
  prove_cmd->add_option("--order", prove_order, "Truncation order in t (default: per identity)");
  prove_cmd->add_option("--mutation", prove_mutation, "Corrupt one constant")->capture_default_str();
  add_common(prove_cmd, prove_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "qtheta: " << msg << "\n";
    return exit_usage;
  }

  try {
    if (list_cmd->parsed()) {
      const auto& c = catalog();
      switch (list_opts.parsed_format()) {
        case Format::json:
          emit(list_opts, out, catalog_json(c));
          break;
        case Format::csv:
          emit(list_opts, out, catalog_csv(c));
          break;
        case Format::text:
          emit(list_opts, out, catalog_text(c));
          break;
      }
      return exit_pass;
    }

    if (eval_cmd->parsed()) {
      const TruncationPolicy policy = eval_opts.policy();
      const Complex z = parse_complex(eval_z);
      std::optional<Complex> q;
      std::optional<Complex> tau;
      if (!eval_q.empty()) q = parse_complex(eval_q);
      if (!eval_tau.empty()) tau = parse_complex(eval_tau);
      if (q.has_value() == tau.has_value()) throw ContractError("give exactly one of --q and --tau");
      Complex value;
      std::optional<QTrigRoute> route;
      if (eval_fn == "theta1") {
        const ModularPoint m = q ? ModularPoint::from_nome(*q) : ModularPoint(*tau);
        value = theta1_series(z, m, policy);
      } else {
        const QParameter qp = q ? QParameter(*q) : QParameter::from_tau(*tau);
        if (eval_fn == "piq") {
          value = pi_q(qp, policy);
        } else {
          const QTrigValue v = eval_fn == "sinq" ? sin_q_routed(z, qp, policy) : cos_q_routed(z, qp, policy);
          value = v.value;
          route = v.route;
        }
      }
      emit(eval_opts, out, eval_output(eval_opts.parsed_format(), eval_fn, z, q, tau, value, policy, route));
      return exit_pass;
    }

    if (check_cmd->parsed()) {
      const auto ids = resolve_ids(check_ids, false);
      const TruncationPolicy policy = check_opts.policy();
      const SweepOptions options{mutation_from(check_mutation), check_unsquared};
      if (!check_q.empty()) grid.q_values = parse_complex_list(check_q);
      if (!check_z_re.empty()) std::tie(grid.z_re_min, grid.z_re_max) = parse_range(check_z_re);
      if (!check_z_im.empty()) std::tie(grid.z_im_min, grid.z_im_max) = parse_range(check_z_im);
      for (Complex qv : grid.q_values) QParameter{qv};  // domain check before any sweep
      if (check_opts.threads > 0) omp_set_num_threads(check_opts.threads);

      std::vector<SweepReport> reports;
      for (const auto* d : ids) {
        reports.push_back(check_serial ? sweep_serial(*d, grid, policy, options) : sweep(*d, grid, policy, options));
      }
      switch (check_opts.parsed_format()) {
        case Format::json:
          emit(check_opts, out, sweeps_json(reports));
          break;
        case Format::csv:
          emit(check_opts, out, sweeps_csv(reports));
          break;
        case Format::text:
          emit(check_opts, out, sweeps_text(reports));
          break;
      }
      // A plain failure outranks non-convergence.
      bool failed = false;
      bool non_converged = false;
      for (const auto& r : reports) {
        if (r.pass) continue;
        bool only_convergence = r.failed > 0 && r.max_rel_err < grid.tolerance;
        for (const auto& p : r.points) {
          if (p.status == PointStatus::error && p.error_kind != ErrorKind::non_converged) only_convergence = false;
        }
        (only_convergence ? non_converged : failed) = true;
      }
      if (failed) return exit_verification_failed;
      if (non_converged) return exit_non_converged;
      return exit_pass;
    }

    if (prove_cmd->parsed()) {
      const auto ids = resolve_ids(prove_ids, true);
      const Mutation mutation = mutation_from(prove_mutation);
      if (prove_order && *prove_order < 0) throw ContractError("--order must be non-negative");
      if (prove_opts.threads > 0) omp_set_num_threads(prove_opts.threads);
      std::vector<formal::ProofReport> reports;
      for (const auto* d : ids) reports.push_back(formal::prove(d->id, prove_order, mutation));
      switch (prove_opts.parsed_format()) {
        case Format::json:
          emit(prove_opts, out, proofs_json(reports));
          break;
        case Format::csv:
          emit(prove_opts, out, proofs_csv(reports));
          break;
        case Format::text:
          emit(prove_opts, out, proofs_text(reports));
          break;
      }
      bool mismatch = false;
      bool inconclusive = false;
      for (const auto& r : reports) {
        if (r.first_mismatch) mismatch = true;
        if (r.inconclusive) inconclusive = true;
      }
      if (mismatch) return exit_verification_failed;
      if (inconclusive) return exit_inconclusive;
      return exit_pass;
    }
  } catch (const Error& e) {
    err << "qtheta: " << to_string(e.kind()) << " error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "qtheta: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace qtheta::cli
