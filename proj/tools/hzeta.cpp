// hzeta: Hurwitz zeta evaluation, Laurent expansion at s = 1 and identity
// checks from the command line. Output is JSON Lines or CSV.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hz/error.hpp"
#include "hz/hurwitz.hpp"
#include "hz/identities.hpp"
#include "hz/stieltjes.hpp"

namespace {

using hz::Complex;
using hz::Error;
using hz::ErrorCode;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kNonconvergence = 3, kVerifyFailed = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonconvergence:
      return kNonconvergence;
    case ErrorCode::kInvalidArgument:
      return kUsage;
    default:
      return kDomain;
  }
}

// "RE" or "RE,IM", no spaces.
std::optional<Complex> parse_complex(const std::string& text) {
  auto parse_real = [](const std::string& part) -> std::optional<double> {
    if (part.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end != part.c_str() + part.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  auto re = parse_real(text.substr(0, comma));
  auto im = parse_real(text.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

std::string complex_validator(const std::string& text) {
  return parse_complex(text) ? std::string() : "expected RE or RE,IM, got '" + text + "'";
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json cjson(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json cjson_list(const std::vector<Complex>& zs) {
  json out = json::array();
  for (Complex z : zs) out.push_back(cjson(z));
  return out;
}

void warn_near_excluded(Complex alpha) {
  const double n = std::round(-alpha.real());
  if (n < 0.0) return;
  if (std::abs(alpha + n) < 1e-3) {
    std::cerr << "warning: alpha is within 1e-3 of the excluded point " << -n
              << "; head term (" << n << " + alpha)^-s is ill-conditioned\n";
  }
}

struct Common {
  std::string format = "json";
  std::string k = "auto";
  double tol = 1e-12;
  int nmax = 400;

  hz::SeriesParams params() const {
    hz::SeriesParams p;
    if (k != "auto") p.k = std::stoi(k);
    p.tol = tol;
    p.max_terms = nmax;
    return p;
  }

  json echo() const {
    json j = {{"tol", tol}, {"nmax", nmax}};
    if (k == "auto") {
      j["k"] = "auto";
    } else {
      j["k"] = std::stoi(k);
    }
    return j;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--k", c.k, "series shift K, or auto")
      ->check([](const std::string& v) -> std::string {
        if (v == "auto") return {};
        char* end = nullptr;
        const long k = std::strtol(v.c_str(), &end, 10);
        if (v.empty() || *end != '\0' || k < 1) return "expected a positive integer or auto";
        return {};
      });
  cmd->add_option("--tol", c.tol, "series stopping tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nmax", c.nmax, "maximum series terms")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

json error_json(const Error& e) {
  return {{"code", std::string(hz::to_string(e.code()))}, {"message", e.what()}};
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
  std::string s;
  std::string alpha;
  int order = 0;
};

int run_eval(const EvalArgs& a, const Common& c) {
  const Complex s = *parse_complex(a.s);
  const Complex alpha = *parse_complex(a.alpha);
  warn_near_excluded(alpha);

  json rec = {{"command", "eval"}};
  json inputs = {{"s", cjson(s)}, {"alpha", cjson(alpha)}, {"order", a.order}};
  inputs.update(c.echo());
  rec["inputs"] = inputs;

  int code = kOk;
  std::optional<hz::EvalResult> res;
  std::optional<Error> err;
  try {
    res = hz::hurwitz_jet(s, alpha, a.order, c.params());
  } catch (const Error& e) {
    err = e;
    code = exit_code_for(e.code());
  }

  if (c.format == "csv") {
    std::cout << "command,s_re,s_im,alpha_re,alpha_im,order,value_re,value_im,err,k,terms,"
                 "status\n";
    const std::string head = "eval," + g17(s.real()) + "," + g17(s.imag()) + "," +
                             g17(alpha.real()) + "," + g17(alpha.imag()) + ",";
    if (res) {
      for (int j = 0; j <= a.order; ++j) {
        const Complex v = res->value[j];
        std::cout << head << j << "," << g17(v.real()) << "," << g17(v.imag()) << ","
                  << g17(res->err_estimate) << "," << res->k_used << "," << res->terms_used
                  << ",OK\n";
      }
    } else {
      std::cout << head << a.order << ",,,,,," << hz::to_string(err->code()) << "\n";
      std::cerr << "error: " << err->what() << "\n";
    }
    return code;
  }

  if (res) {
    if (a.order == 0) {
      rec["value"] = cjson(res->value.value());
    } else {
      rec["jet"] = cjson_list({res->value.coeffs().begin(), res->value.coeffs().end()});
    }
    rec["err_estimate"] = res->err_estimate;
    rec["k_used"] = res->k_used;
    rec["terms_used"] = res->terms_used;
    rec["status"] = "OK";
  } else {
    rec["status"] = "ERROR";
    rec["error"] = error_json(*err);
  }
  std::cout << rec.dump() << "\n";
  return code;
}

// ---- laurent ----------------------------------------------------------

struct LaurentArgs {
  std::string alpha;
  int order = 0;
};

int run_laurent(const LaurentArgs& a, const Common& c) {
  const Complex alpha = *parse_complex(a.alpha);
  warn_near_excluded(alpha);

  json rec = {{"command", "laurent"}};
  json inputs = {{"alpha", cjson(alpha)}, {"order", a.order}};
  inputs.update(c.echo());
  rec["inputs"] = inputs;

  int code = kOk;
  std::optional<hz::LaurentExpansion> lx;
  std::optional<Error> err;
  try {
    lx = hz::generalized_stieltjes(alpha, a.order, c.params());
  } catch (const Error& e) {
    err = e;
    code = exit_code_for(e.code());
  }

  // gamma_r(alpha) in the classical normalization: (-1)^r r! times the
  // coefficient of (s - 1)^r.
  std::vector<Complex> classical;
  if (lx) {
    double scale = 1.0;
    for (int r = 0; r <= a.order; ++r) {
      if (r > 0) scale *= -r;
      classical.push_back(scale * lx->gammas[r]);
    }
  }

  if (c.format == "csv") {
    std::cout << "command,alpha_re,alpha_im,r,laurent_re,laurent_im,gamma_re,gamma_im,err,k,"
                 "terms,status\n";
    const std::string head = "laurent," + g17(alpha.real()) + "," + g17(alpha.imag()) + ",";
    if (lx) {
      const std::string tail = "," + g17(lx->err_estimate) + "," +
                               std::to_string(lx->k_used) + "," +
                               std::to_string(lx->terms_used) + ",OK\n";
      // r = -1 carries the residue at the pole.
      std::cout << head << -1 << "," << g17(lx->pole_coeff.real()) << ","
                << g17(lx->pole_coeff.imag()) << ",," << tail;
      for (int r = 0; r <= a.order; ++r) {
        std::cout << head << r << "," << g17(lx->gammas[r].real()) << ","
                  << g17(lx->gammas[r].imag()) << "," << g17(classical[r].real()) << ","
                  << g17(classical[r].imag()) << tail;
      }
    } else {
      std::cout << head << a.order << ",,,,,,,," << hz::to_string(err->code()) << "\n";
      std::cerr << "error: " << err->what() << "\n";
    }
    return code;
  }

  if (lx) {
    rec["pole_coeff"] = cjson(lx->pole_coeff);
    rec["jet"] = cjson_list(lx->gammas);
    rec["gammas"] = cjson_list(classical);
    rec["err_estimate"] = lx->err_estimate;
    rec["k_used"] = lx->k_used;
    rec["terms_used"] = lx->terms_used;
    rec["status"] = "OK";
  } else {
    rec["status"] = "ERROR";
    rec["error"] = error_json(*err);
  }
  std::cout << rec.dump() << "\n";
  return code;
}

// ---- verify -----------------------------------------------------------

struct GridPoint {
  Complex s0;
  Complex alpha;
  int r = 0;
  int m = 1;
};

struct VerifyArgs {
  std::string identity;
  std::vector<std::string> grid{"default"};
  std::optional<double> h;
  int m = 2;
};

std::vector<GridPoint> default_grid(hz::Identity id, int m) {
  const std::vector<Complex> s_grid = {-2.5, -1.0, -0.3, 0.5, 2.0, {3.0, 2.0}};
  const std::vector<Complex> a_grid = {0.3, 1.0, 1.7, {2.0, 2.0}};
  std::vector<GridPoint> out;
  switch (id) {
    case hz::Identity::kInterchange:
    case hz::Identity::kRecurrence:
      for (Complex s : s_grid)
        for (Complex a : a_grid)
          for (int r = 0; r <= 3; ++r) out.push_back({s, a, r, 1});
      if (id == hz::Identity::kRecurrence) {
        for (Complex a : a_grid)
          for (int r = 0; r <= 3; ++r) out.push_back({0.0, a, r, 1});
      }
      break;
    case hz::Identity::kAtZero:
      for (Complex a : a_grid)
        for (int r = 0; r <= 4; ++r) out.push_back({0.0, a, r, 1});
      break;
    case hz::Identity::kAtOne:
    case hz::Identity::kGammaDeriv:
      for (Complex a : a_grid)
        for (int r = 0; r <= 3; ++r) out.push_back({1.0, a, r, 1});
      break;
    case hz::Identity::kMixedPartials:
      // s0 + m == 1 puts the closed form on the pole.
      for (Complex s : s_grid) {
        if (s + static_cast<double>(m) == Complex{1.0, 0.0}) continue;
        for (Complex a : a_grid)
          for (int r = 0; r <= 2; ++r) out.push_back({s, a, r, m});
      }
      for (int r = 0; r <= 2; ++r) out.push_back({-0.5, 1.3, r, m});
      break;
  }
  return out;
}

// Rows of s_re,s_im,alpha_re,alpha_im,r[,m]; blank lines, '#' comments and a
// non-numeric header line are skipped.
std::optional<std::vector<GridPoint>> read_grid(const std::string& path, int default_m,
                                                std::string& why) {
  std::ifstream in(path);
  if (!in) {
    why = "cannot open grid file '" + path + "'";
    return std::nullopt;
  }
  std::vector<GridPoint> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> cols;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0') {
        numeric = false;
        break;
      }
      cols.push_back(v);
    }
    if (!numeric) {
      if (out.empty() && lineno == 1) continue;
      why = path + ":" + std::to_string(lineno) + ": non-numeric row";
      return std::nullopt;
    }
    if (cols.size() != 5 && cols.size() != 6) {
      why = path + ":" + std::to_string(lineno) + ": expected 5 or 6 columns";
      return std::nullopt;
    }
    GridPoint p{{cols[0], cols[1]}, {cols[2], cols[3]}, static_cast<int>(cols[4]),
                cols.size() == 6 ? static_cast<int>(cols[5]) : default_m};
    if (p.r < 0 || p.r != cols[4] || p.m < 1 || p.m > 2) {
      why = path + ":" + std::to_string(lineno) + ": r must be >= 0 and m in {1, 2}";
      return std::nullopt;
    }
    out.push_back(p);
  }
  return out;
}

int run_verify(const VerifyArgs& a, const Common& c, const std::string& usage) {
  std::vector<hz::Identity> ids;
  if (a.identity == "all") {
    ids = {hz::Identity::kInterchange, hz::Identity::kRecurrence, hz::Identity::kAtZero,
           hz::Identity::kAtOne,       hz::Identity::kGammaDeriv, hz::Identity::kMixedPartials};
  } else {
    ids = {*hz::parse_identity(a.identity)};
  }

  std::optional<std::vector<GridPoint>> file_grid;
  if (a.grid.size() == 2) {
    std::string why;
    file_grid = read_grid(a.grid[1], a.m, why);
    if (!file_grid) {
      std::cerr << "error: " << why << "\n" << usage;
      return kUsage;
    }
  }

  const hz::SeriesParams params = c.params();
  const bool csv = c.format == "csv";
  if (csv) {
    std::cout << "command,identity,s_re,s_im,alpha_re,alpha_im,r,m,h,lhs_re,lhs_im,rhs_re,"
                 "rhs_im,abs_residual,rel_residual,status\n";
  }

  int failed = 0, errors = 0, points = 0;
  double max_rel = 0.0;
  int code = kOk;
  for (hz::Identity id : ids) {
    const std::vector<GridPoint> grid = file_grid ? *file_grid : default_grid(id, a.m);
    for (const GridPoint& g : grid) {
      ++points;
      hz::IdentityQuery q;
      q.id = id;
      q.s0 = g.s0;
      q.alpha = g.alpha;
      q.r = g.r;
      q.m = id == hz::Identity::kMixedPartials ? g.m : 1;
      q.h = a.h ? *a.h : (q.m >= 2 ? 1e-3 : 1e-4);

      std::optional<hz::IdentityReport> rep;
      std::optional<Error> err;
      try {
        rep = hz::verify_identity(q, params);
      } catch (const Error& e) {
        err = e;
      }
      std::string status;
      if (rep) {
        const bool pass = rep->rel_residual <= hz::identity_tolerance(id);
        status = pass ? "OK" : "FAIL";
        if (!pass) ++failed;
        max_rel = std::max(max_rel, rep->rel_residual);
      } else {
        status = "ERROR";
        ++errors;
        if (code == kOk) code = exit_code_for(err->code());
      }

      if (csv) {
        std::cout << "verify," << hz::to_string(id) << "," << g17(q.s0.real()) << ","
                  << g17(q.s0.imag()) << "," << g17(q.alpha.real()) << ","
                  << g17(q.alpha.imag()) << "," << q.r << "," << q.m << "," << g17(q.h) << ",";
        if (rep) {
          std::cout << g17(rep->lhs.real()) << "," << g17(rep->lhs.imag()) << ","
                    << g17(rep->rhs.real()) << "," << g17(rep->rhs.imag()) << ","
                    << g17(rep->abs_residual) << "," << g17(rep->rel_residual) << ",";
        } else {
          std::cout << ",,,,,,";
        }
        std::cout << (rep ? status : std::string(hz::to_string(err->code()))) << "\n";
        continue;
      }

      json rec = {{"command", "verify"}, {"identity", std::string(hz::to_string(id))}};
      json inputs = {{"s", cjson(q.s0)}, {"alpha", cjson(q.alpha)}, {"r", q.r}, {"h", q.h}};
      if (id == hz::Identity::kMixedPartials) inputs["m"] = q.m;
      inputs.update(c.echo());
      rec["inputs"] = inputs;
      if (rep) {
        rec["lhs"] = cjson(rep->lhs);
        rec["rhs"] = cjson(rep->rhs);
        rec["abs_residual"] = rep->abs_residual;
        rec["rel_residual"] = rep->rel_residual;
        rec["tolerance"] = hz::identity_tolerance(id);
        rec["method_notes"] = rep->method_notes;
        rec["status"] = status;
      } else {
        rec["status"] = "ERROR";
        rec["error"] = error_json(*err);
      }
      std::cout << rec.dump() << "\n";
    }
  }

  const bool all_pass = failed == 0 && errors == 0;
  if (csv) {
    std::cerr << "summary: points=" << points << " failed=" << failed << " errors=" << errors
              << " max_rel_residual=" << g17(max_rel) << "\n";
  } else {
    json summary = {{"command", "verify"},   {"summary", true},
                    {"identity", a.identity}, {"points", points},
                    {"failed", failed},       {"errors", errors},
                    {"max_rel_residual", max_rel},
                    {"status", all_pass ? "OK" : "FAIL"}};
    std::cout << summary.dump() << "\n";
  }
  if (code != kOk) return code;
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz zeta function and its s-derivatives"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("HZ_DEFAULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*env == '\0' || *end != '\0' || !(v > 0.0)) {
      std::cerr << "error: HZ_DEFAULT_TOL must be a positive number\n";
      return kUsage;
    }
    common.tol = v;
  }

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "zeta(s, alpha) and its s-derivatives");
  eval->add_option("--s", eval_args.s, "RE or RE,IM")->required()->check(complex_validator);
  eval->add_option("--alpha", eval_args.alpha, "RE or RE,IM")
      ->required()
      ->check(complex_validator);
  eval->add_option("--order", eval_args.order, "jet order R")->check(CLI::NonNegativeNumber);
  add_common(eval, common);

  LaurentArgs laurent_args;
  auto* laurent = app.add_subcommand("laurent", "Laurent coefficients at s = 1");
  laurent->add_option("--alpha", laurent_args.alpha, "RE or RE,IM")
      ->required()
      ->check(complex_validator);
  laurent->add_option("--order", laurent_args.order, "highest gamma_r")
      ->check(CLI::Range(0, hz::kMaxLaurentOrder));
  add_common(laurent, common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check derivative identities on a grid");
  verify->set_help_flag("--help", "print this help message and exit");
  verify
      ->add_option("--identity", verify_args.identity,
                   "interchange|recurrence|at_zero|at_one|gamma_deriv|mixed|all")
      ->required()
      ->check(CLI::IsMember({"interchange", "recurrence", "at_zero", "at_one", "gamma_deriv",
                             "mixed", "all"}));
  verify->add_option("--grid", verify_args.grid, "default | file PATH")
      ->expected(1, 2)
      ->check([](const std::string&) { return std::string(); });
  verify->add_option("--h", verify_args.h, "finite-difference step")
      ->check(CLI::PositiveNumber);
  verify->add_option("--m", verify_args.m, "alpha-derivative order for mixed")
      ->check(CLI::Range(1, 2));
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    const auto parsed = app.get_subcommands();
    std::cerr << (parsed.empty() ? app.help() : parsed.back()->help());
    return kUsage;
  }

  if (*verify) {
    const auto& g = verify_args.grid;
    const bool ok = (g.size() == 1 && g[0] == "default") || (g.size() == 2 && g[0] == "file");
    if (!ok) {
      std::cerr << "error: --grid takes 'default' or 'file PATH'\n" << verify->help();
      return kUsage;
    }
    return run_verify(verify_args, common, verify->help());
  }
  if (*laurent) return run_laurent(laurent_args, common);
  return run_eval(eval_args, common);
}
