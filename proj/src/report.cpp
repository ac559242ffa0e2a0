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

#include "qtheta/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qtheta {

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json cjson(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json grid_json(const GridSpec& g) {
  json qs = json::array();
  for (Complex q : g.q_values) qs.push_back(cjson(q));
  return json{{"z_re", {g.z_re_min, g.z_re_max}},
              {"z_im", {g.z_im_min, g.z_im_max}},
              {"z_count", g.z_count},
              {"q_values", qs},
              {"seed", g.seed},
              {"tolerance", g.tolerance}};
}

const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::ok:
      return "ok";
    case PointStatus::skipped:
      return "skipped";
    case PointStatus::error:
      return "error";
  }
  return "unknown";
}

json mismatch_json(const std::optional<formal::Mismatch>& m) {
  if (!m) return nullptr;
  return json{{"t_exponent", m->t_exponent}, {"u_exponent", m->u_exponent}, {"lhs", m->lhs}, {"rhs", m->rhs}};
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::vector<std::string> modes(const IdentityDescriptor& d) {
  std::vector<std::string> out;
  if (d.numeric) out.emplace_back("numeric");
  if (d.formal) out.emplace_back("formal");
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return num(z.real());
  if (z.real() == 0.0) return num(z.imag()) + "i";
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string catalog_json(const std::vector<IdentityDescriptor>& entries) {
  json arr = json::array();
  for (const auto& d : entries) {
    json parts = json::array();
    for (const auto& p : d.formal_parts) {
      parts.push_back({{"part", p.label}, {"nome", formal::to_string(p.nome)}, {"root_m", p.root_m},
                       {"default_order", p.default_order}});
    }
    arr.push_back({{"id", d.id},
                   {"statement_ref", d.statement_ref},
                   {"variables", {{"z", d.has_z}, {"nome", to_string(d.nome)}}},
                   {"squared_form", d.squared_form},
                   {"modes", modes(d)},
                   {"formal", parts}});
  }
  return dump(arr);
}

std::string catalog_text(const std::vector<IdentityDescriptor>& entries) {
  std::ostringstream os;
  for (const auto& d : entries) {
    os << d.id << "  [" << join(modes(d), "+") << "]";
    if (!d.has_z) os << "  nome-only";
    if (d.squared_form) os << "  squared";
    for (const auto& p : d.formal_parts) {
      os << "  " << p.label << ":m=" << p.root_m << ",N=" << p.default_order;
    }
    os << "\n    " << d.statement_ref << "\n";
  }
  return os.str();
}

std::string catalog_csv(const std::vector<IdentityDescriptor>& entries) {
  std::ostringstream os;
  os << "id,modes,has_z,nome,squared_form,formal_parts,statement_ref\n";
  for (const auto& d : entries) {
    std::vector<std::string> parts;
    for (const auto& p : d.formal_parts) {
      parts.push_back(p.label + ":" + std::to_string(p.root_m) + ":" + std::to_string(p.default_order));
    }
    os << d.id << "," << join(modes(d), "+") << "," << (d.has_z ? "true" : "false") << "," << to_string(d.nome)
       << "," << (d.squared_form ? "true" : "false") << "," << join(parts, ";") << ","
       << csv_quote(d.statement_ref) << "\n";
  }
  return os.str();
}

std::string sweeps_json(const std::vector<SweepReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json worst = nullptr;
    if (r.worst) {
      worst = {{"z", cjson(r.worst->z)}, {"q", cjson(r.worst->nome)}, {"lhs", cjson(r.worst->lhs)},
               {"rhs", cjson(r.worst->rhs)}};
    }
    json errors = json::array();
    for (const auto& p : r.points) {
      if (p.status == PointStatus::error) {
        errors.push_back({{"index", p.index}, {"z", cjson(p.point.z)}, {"q", cjson(p.point.q)}, {"message", p.error}});
      }
    }
    arr.push_back({{"id", r.id},
                   {"grid", grid_json(r.grid)},
                   {"max_rel_err", r.max_rel_err},
                   {"worst", worst},
                   {"pass", r.pass},
                   {"evaluated", r.evaluated},
                   {"skipped", r.skipped},
                   {"errors", errors}});
  }
  return dump(arr);
}

std::string sweeps_text(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  max_rel_err=" << num(r.max_rel_err)
       << "  points=" << r.evaluated << " skipped=" << r.skipped << " errors=" << r.failed << "\n";
    if (r.worst) {
      os << "    worst at z=" << format_complex(r.worst->z) << " q=" << format_complex(r.worst->nome)
         << "  lhs=" << format_complex(r.worst->lhs) << "  rhs=" << format_complex(r.worst->rhs) << "\n";
    }
    for (const auto& p : r.points) {
      if (p.status == PointStatus::error) os << "    error at index " << p.index << ": " << p.error << "\n";
    }
  }
  return os.str();
}

std::string sweeps_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  os << "id,index,z_re,z_im,q_re,q_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,status\n";
  for (const auto& r : reports) {
    for (const auto& p : r.points) {
      const bool ok = p.status == PointStatus::ok;
      os << r.id << "," << p.index << "," << num(p.point.z.real()) << "," << num(p.point.z.imag()) << ","
         << num(p.point.q.real()) << "," << num(p.point.q.imag()) << ",";
      if (ok) {
        os << num(p.record.lhs.real()) << "," << num(p.record.lhs.imag()) << "," << num(p.record.rhs.real()) << ","
           << num(p.record.rhs.imag()) << "," << num(p.record.abs_err) << "," << num(p.record.rel_err);
      } else {
        os << ",,,,,";
      }
      os << "," << status_name(p.status) << "\n";
    }
  }
  return os.str();
}

std::string proofs_json(const std::vector<formal::ProofReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json parts = json::array();
    for (const auto& p : r.parts) {
      parts.push_back({{"part", p.label},
                       {"nome", formal::to_string(p.nome)},
                       {"root_m", p.root_m},
                       {"order", p.order},
                       {"verified", p.verified},
                       {"inconclusive", p.inconclusive},
                       {"leading_exponent", p.leading_exponent},
                       {"coefficients_compared", p.coefficients_compared},
                       {"first_mismatch", mismatch_json(p.first_mismatch)}});
    }
    arr.push_back({{"id", r.id},
                   {"verified", r.verified},
                   {"inconclusive", r.inconclusive},
                   {"order", r.order},
                   {"root_m", r.root_m},
                   {"elapsed", r.elapsed_ms / 1000.0},
                   {"parts", parts},
                   {"first_mismatch", mismatch_json(r.first_mismatch)}});
  }
  return dump(arr);
}

std::string proofs_text(const std::vector<formal::ProofReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    const char* verdict = r.verified ? "VERIFIED" : (r.inconclusive ? "INCONCLUSIVE" : "FAILED");
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms / 1000.0);
    os << verdict << " " << r.id << "  (" << elapsed << " s)\n";
    for (const auto& p : r.parts) {
      os << "    " << formal::to_string(p.nome) << "-side, t^" << p.root_m << " = " << formal::to_string(p.nome)
         << ": ";
      if (p.verified) {
        os << "verified through t^" << p.order << " (" << p.coefficients_compared << " coefficients)";
      } else if (p.inconclusive) {
        os << "order " << p.order << " is below the leading exponent " << p.leading_exponent;
      } else if (p.first_mismatch) {
        const auto& m = *p.first_mismatch;
        os << "mismatch at t^" << m.t_exponent << " u^" << m.u_exponent << ": " << m.lhs << " vs " << m.rhs;
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string proofs_csv(const std::vector<formal::ProofReport>& reports) {
  std::ostringstream os;
  os << "id,part,nome,root_m,order,verified,inconclusive,leading_exponent,coefficients_compared,mismatch_t,"
        "mismatch_u,elapsed\n";
  for (const auto& r : reports) {
    for (const auto& p : r.parts) {
      os << r.id << "," << p.label << "," << formal::to_string(p.nome) << "," << p.root_m << "," << p.order << ","
         << (p.verified ? "true" : "false") << "," << (p.inconclusive ? "true" : "false") << ","
         << p.leading_exponent << "," << p.coefficients_compared << ",";
      if (p.first_mismatch) {
        os << p.first_mismatch->t_exponent << "," << p.first_mismatch->u_exponent;
      } else {
        os << ",";
      }
      os << "," << num(r.elapsed_ms / 1000.0) << "\n";
    }
  }
  return os.str();
}

}  // namespace qtheta
