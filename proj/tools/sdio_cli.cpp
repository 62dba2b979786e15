// Command-line front end. Every subcommand forwards to the C API and prints
// the resulting JSON records, one per line.
//
// Exit codes: 0 success, 1 negative answer (not smooth, verification
// failed, no relation), 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sdio/sdio.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

int exit_code(sdio_status st) {
  if (st == SDIO_OK) return kExitOk;
  if (st == SDIO_NEGATIVE) return kExitNegative;
  return kExitUsage;
}

void print_line(const char* json, void*) {
  std::fputs(json, stdout);
  std::fputc('\n', stdout);
}

int emit(sdio_status st, char* json) {
  if (json) print_line(json, nullptr);
  sdio_string_free(json);
  if (st != SDIO_OK && st != SDIO_NEGATIVE) std::cerr << "sdio: " << sdio_last_error() << "\n";
  return exit_code(st);
}

int report_stream(sdio_status st) {
  if (st != SDIO_OK && st != SDIO_NEGATIVE) std::cerr << "sdio: " << sdio_last_error() << "\n";
  return exit_code(st);
}

struct PrimeSetDeleter {
  void operator()(sdio_primeset* p) const { sdio_primeset_free(p); }
};
struct PolyDeleter {
  void operator()(sdio_poly* p) const { sdio_poly_free(p); }
};
using PrimeSetHandle = std::unique_ptr<sdio_primeset, PrimeSetDeleter>;
using PolyHandle = std::unique_ptr<sdio_poly, PolyDeleter>;

// Thrown when a handle cannot be built from the command line.
struct HandleError {
  sdio_status status;
};

struct PrimeArgs {
  std::string list;
  std::string file;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--primes", list, "Comma-separated primes, e.g. 2,3,193");
    auto* b = cmd->add_option("--primes-file", file, "File with one prime per line");
    a->excludes(b);
  }

  bool given() const { return !list.empty() || !file.empty(); }

  PrimeSetHandle load() const {
    sdio_primeset* p = nullptr;
    sdio_status st = SDIO_ERR_INVALID_INPUT;
    if (!file.empty()) st = sdio_primeset_load(file.c_str(), &p);
    else if (!list.empty()) st = sdio_primeset_parse(list.c_str(), &p);
    if (st != SDIO_OK) {
      std::cerr << "sdio: " << (given() ? sdio_last_error() : "--primes or --primes-file is required") << "\n";
      throw HandleError{st};
    }
    return PrimeSetHandle(p);
  }
};

PolyHandle load_poly(const std::string& text) {
  sdio_poly* p = nullptr;
  sdio_status st = sdio_poly_parse(text.c_str(), &p);
  if (st != SDIO_OK) {
    std::cerr << "sdio: " << sdio_last_error() << "\n";
    throw HandleError{st};
  }
  return PolyHandle(p);
}

std::string read_json_arg(const std::string& value) {
  auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && value[first] == '{') return value;
  std::ifstream in(value);
  if (!in) {
    std::cerr << "sdio: cannot read family JSON file '" << value << "'\n";
    throw HandleError{SDIO_ERR_INVALID_INPUT};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void progress_to_stderr(size_t done, size_t total, void*) {
  std::cerr << "search: " << done << "/" << total << " S-units scanned\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-unit and S-Diophantine tuple toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sdio_version()));

  std::function<int()> run;

  // smooth
  PrimeArgs smooth_primes;
  std::string smooth_n;
  auto* smooth = app.add_subcommand("smooth", "Factor n over S, if it is S-smooth");
  smooth_primes.add_to(smooth);
  smooth->add_option("--n", smooth_n, "Positive integer")->required();
  smooth->callback([&] {
    run = [&] {
      auto S = smooth_primes.load();
      char* out = nullptr;
      const sdio_status st = sdio_smooth(S.get(), smooth_n.c_str(), &out);
      return emit(st, out);
    };
  });

  // enumerate
  PrimeArgs enum_primes;
  std::string enum_bound;
  auto* enumerate = app.add_subcommand("enumerate", "List the S-smooth integers up to a bound, ascending");
  enum_primes.add_to(enumerate);
  enumerate->add_option("--bound", enum_bound, "Upper bound (inclusive)")->required();
  enumerate->callback([&] {
    run = [&] {
      auto S = enum_primes.load();
      return report_stream(sdio_enumerate(S.get(), enum_bound.c_str(), print_line, nullptr));
    };
  });

  // gcd
  std::string gcd_a, gcd_b;
  auto* gcd = app.add_subcommand("gcd", "gcd(A, B) as a product of minimal prime valuations");
  gcd->add_option("--a", gcd_a)->required();
  gcd->add_option("--b", gcd_b)->required();
  gcd->callback([&] {
    run = [&] {
      char* out = nullptr;
      const sdio_status st = sdio_gcd(gcd_a.c_str(), gcd_b.c_str(), &out);
      return emit(st, out);
    };
  });

  // pairs
  PrimeArgs pairs_primes;
  std::string pairs_poly, pairs_bound;
  auto* pairs = app.add_subcommand("pairs", "All a <= b <= bound with ab = f(s), s an S-unit");
  pairs_primes.add_to(pairs);
  pairs->add_option("--poly", pairs_poly, "Ascending coefficients, e.g. -1,1 for X-1")->required();
  pairs->add_option("--bound", pairs_bound)->required();
  pairs->callback([&] {
    run = [&] {
      auto S = pairs_primes.load();
      auto f = load_poly(pairs_poly);
      return report_stream(sdio_pairs(S.get(), f.get(), pairs_bound.c_str(), print_line, nullptr));
    };
  });

  // search
  PrimeArgs search_primes;
  std::string search_poly, search_bound;
  unsigned search_size = 3, search_threads = 1;
  bool search_strict = false, search_exclude = false, search_progress = false;
  auto* search = app.add_subcommand("search", "Find all tuples a_1 <= ... <= a_n <= bound with a_i a_j = f(s_ij)");
  search_primes.add_to(search);
  search->add_option("--poly", search_poly)->required();
  search->add_option("--size", search_size, "Tuple size n >= 2")->capture_default_str();
  search->add_option("--bound", search_bound, "Largest allowed a_n")->required();
  search->add_flag("--strict", search_strict, "Require a_1 < ... < a_n");
  search->add_flag("--exclude-trivial", search_exclude, "Drop tuples with two or more entries equal to 1");
  search->add_option("--threads", search_threads, "Worker threads (speed only)")->capture_default_str();
  search->add_flag("--progress", search_progress, "Report progress on stderr");
  search->callback([&] {
    run = [&] {
      auto S = search_primes.load();
      auto f = load_poly(search_poly);
      sdio_search_options opts{search_bound.c_str(), search_size, search_strict ? 1 : 0, search_exclude ? 1 : 0,
                               search_threads, search_progress ? progress_to_stderr : nullptr, nullptr};
      return report_stream(sdio_search(S.get(), f.get(), &opts, print_line, nullptr));
    };
  });

  // verify
  PrimeArgs verify_primes;
  std::string verify_poly, verify_tuple;
  auto* verify = app.add_subcommand("verify", "Check a tuple and report the witness matrix");
  verify_primes.add_to(verify);
  verify->add_option("--poly", verify_poly)->required();
  verify->add_option("--tuple", verify_tuple, "Comma-separated, non-decreasing")->required();
  verify->callback([&] {
    run = [&] {
      auto S = verify_primes.load();
      auto f = load_poly(verify_poly);
      char* out = nullptr;
      const sdio_status st = sdio_verify(S.get(), f.get(), verify_tuple.c_str(), &out);
      return emit(st, out);
    };
  });

  // identity
  std::string id_a, id_b, id_c, id_q;
  unsigned long id_k = 0, id_m = 0, id_n = 0;
  auto* identity = app.add_subcommand("identity", "Single-prime identity b - a = b q^m - a q^n and (ab+1) | (b-a)");
  identity->add_option("--a", id_a)->required();
  identity->add_option("--b", id_b)->required();
  identity->add_option("--c", id_c)->required();
  identity->add_option("--q", id_q)->required();
  identity->add_option("--k", id_k)->required();
  identity->add_option("--m", id_m)->required();
  identity->add_option("--n", id_n)->required();
  identity->callback([&] {
    run = [&] {
      char* out = nullptr;
      const sdio_status st = sdio_identity(id_a.c_str(), id_b.c_str(), id_c.c_str(), id_q.c_str(), id_k, id_m, id_n, &out);
      return emit(st, out);
    };
  });

  // construct
  PrimeArgs construct_primes;
  std::string construct_tuple, construct_units;
  auto* construct = app.add_subcommand("construct", "Interpolate a polynomial realizing a triple at three units");
  construct->add_option("--tuple", construct_tuple, "a,b,c")->required();
  construct->add_option("--units", construct_units, "u,v,w (distinct)")->required();
  construct->add_option("--primes", construct_primes.list, "Optional: check units and re-verify over S");
  construct->callback([&] {
    run = [&] {
      PrimeSetHandle S;
      if (construct_primes.given()) S = construct_primes.load();
      char* out = nullptr;
      const sdio_status st = sdio_construct(construct_tuple.c_str(), construct_units.c_str(), S.get(), &out);
      return emit(st, out);
    };
  });

  // check-poly
  std::string check_poly;
  auto* check = app.add_subcommand("check-poly", "Report the finiteness-theorem hypotheses for f");
  check->add_option("--poly", check_poly)->required();
  check->callback([&] {
    run = [&] {
      auto f = load_poly(check_poly);
      char* out = nullptr;
      const sdio_status st = sdio_check_poly(f.get(), &out);
      return emit(st, out);
    };
  });

  // squarefree
  std::string sqf_poly;
  auto* sqf = app.add_subcommand("squarefree", "Yun squarefree decomposition");
  sqf->add_option("--poly", sqf_poly)->required();
  sqf->callback([&] {
    run = [&] {
      auto f = load_poly(sqf_poly);
      char* out = nullptr;
      const sdio_status st = sdio_squarefree(f.get(), &out);
      return emit(st, out);
    };
  });

  // scaling
  std::string scaling_poly, scaling_phi;
  auto* scaling = app.add_subcommand("scaling", "Test f(phi X) = phi^n f(X)");
  scaling->add_option("--poly", scaling_poly)->required();
  scaling->add_option("--phi", scaling_phi, "Positive rational")->required();
  scaling->callback([&] {
    run = [&] {
      auto f = load_poly(scaling_poly);
      char* out = nullptr;
      const sdio_status st = sdio_scaling(f.get(), scaling_phi.c_str(), &out);
      return emit(st, out);
    };
  });

  // compose
  std::string compose_poly, compose_eta;
  unsigned compose_d = 0;
  auto* compose = app.add_subcommand("compose", "Expand f(eta X^d)");
  compose->add_option("--poly", compose_poly)->required();
  compose->add_option("--eta", compose_eta, "Positive rational")->required();
  compose->add_option("--d", compose_d)->required();
  compose->callback([&] {
    run = [&] {
      auto f = load_poly(compose_poly);
      char* out = nullptr;
      const sdio_status st = sdio_compose(f.get(), compose_eta.c_str(), compose_d, &out);
      return emit(st, out);
    };
  });

  // eval
  std::string eval_poly, eval_x;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial exactly");
  eval->add_option("--poly", eval_poly, "Coefficients may be p/q")->required();
  eval->add_option("--x", eval_x)->required();
  eval->callback([&] {
    run = [&] {
      char* out = nullptr;
      const sdio_status st = sdio_eval(eval_poly.c_str(), eval_x.c_str(), &out);
      return emit(st, out);
    };
  });

  // interpolate
  std::string interp_points;
  auto* interp = app.add_subcommand("interpolate", "Lagrange interpolation through x:y points");
  interp->add_option("--points", interp_points, "e.g. 2:2,3:3,4:6")->required();
  interp->callback([&] {
    run = [&] {
      char* out = nullptr;
      const sdio_status st = sdio_interpolate(interp_points.c_str(), &out);
      return emit(st, out);
    };
  });

  // dependence
  PrimeArgs dep_primes;
  std::string dep_pairs;
  auto* dependence = app.add_subcommand("dependence", "Find (k, l, g) with v^k w^l = g on every pair");
  dep_primes.add_to(dependence);
  dependence->add_option("--pairs", dep_pairs, "v:w,v:w,...")->required();
  dependence->callback([&] {
    run = [&] {
      auto S = dep_primes.load();
      char* out = nullptr;
      const sdio_status st = sdio_dependence(S.get(), dep_pairs.c_str(), &out);
      return emit(st, out);
    };
  });

  // rho
  PrimeArgs rho_primes;
  std::string rho_rel, rho_base, rho_sample;
  auto* rho = app.add_subcommand("rho", "Parametrize a pair family: w = w0 rho^k, v = v0 rho^-l");
  rho_primes.add_to(rho);
  rho->add_option("--rel", rho_rel, "k,l or the dependence JSON")->required();
  rho->add_option("--base", rho_base, "v:w")->required();
  rho->add_option("--sample", rho_sample, "v:w")->required();
  rho->callback([&] {
    run = [&] {
      auto S = rho_primes.load();
      char* out = nullptr;
      const sdio_status st = sdio_rho(S.get(), rho_rel.c_str(), rho_base.c_str(), rho_sample.c_str(), &out);
      return emit(st, out);
    };
  });

  // family
  PrimeArgs fam_primes;
  std::string fam_vw, fam_uw, fam_base, fam_sample;
  auto* family = app.add_subcommand("family", "Combine two relations into (x, y, z, psi, eta, d, X)");
  fam_primes.add_to(family);
  family->add_option("--rel-vw", fam_vw, "k,l or JSON")->required();
  family->add_option("--rel-uw", fam_uw, "m,r or JSON")->required();
  family->add_option("--base", fam_base, "u,v,w")->required();
  family->add_option("--sample", fam_sample, "u,v,w")->required();
  family->callback([&] {
    run = [&] {
      auto S = fam_primes.load();
      char* out = nullptr;
      const sdio_status st = sdio_family(S.get(), fam_vw.c_str(), fam_uw.c_str(), fam_base.c_str(), fam_sample.c_str(), &out);
      return emit(st, out);
    };
  });

  // audit
  std::string audit_poly, audit_family, audit_curve;
  auto* audit = app.add_subcommand("audit", "Count odd-multiplicity roots of f(eta_1 X^d_1) f(eta_2 X^d_2) f(eta_3 X^d_3)");
  auto* ap = audit->add_option("--poly", audit_poly);
  auto* af = audit->add_option("--family-json", audit_family, "Inline JSON or a file with \"eta\" and \"d\"");
  auto* ac = audit->add_option("--curve", audit_curve, "Audit this polynomial directly");
  ap->needs(af);
  af->needs(ap);
  ac->excludes(ap);
  ac->excludes(af);
  audit->callback([&] {
    run = [&] {
      char* out = nullptr;
      if (!audit_curve.empty()) {
        const sdio_status st = sdio_audit_curve(audit_curve.c_str(), &out);
        return emit(st, out);
      }
      if (audit_poly.empty()) {
        std::cerr << "sdio: audit needs --poly with --family-json, or --curve\n";
        return kExitUsage;
      }
      auto f = load_poly(audit_poly);
      std::string fam = read_json_arg(audit_family);
      const sdio_status st = sdio_audit(f.get(), fam.c_str(), &out);
      return emit(st, out);
    };
  });

  // gcd-probe
  PrimeArgs probe_primes;
  std::string probe_poly, probe_pairs;
  double probe_eps = 0.25;
  auto* probe = app.add_subcommand("gcd-probe", "Exact gcd(f(v), f(w)) and log-gcd / height ratios");
  probe_primes.add_to(probe);
  probe->add_option("--poly", probe_poly)->required();
  probe->add_option("--pairs", probe_pairs, "v:w,v:w,...")->required();
  probe->add_option("--epsilon", probe_eps, "Flag threshold")->capture_default_str();
  probe->callback([&] {
    run = [&] {
      auto S = probe_primes.load();
      auto f = load_poly(probe_poly);
      char* out = nullptr;
      const sdio_status st = sdio_gcd_probe(S.get(), f.get(), probe_pairs.c_str(), probe_eps, &out);
      return emit(st, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    int code = run ? run() : kExitUsage;
    std::fflush(stdout);
    return code;
  } catch (const HandleError& e) {
    return exit_code(e.status);
  }
}
