#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hexa/algebra.hpp"
#include "hexa/float_backend.hpp"
#include "hexa/hadamard.hpp"
#include "hexa/serialize.hpp"

namespace {

using hexa::Json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;

struct JobConfig {
  std::string backend = "exact";
  double tol = 1e-9;
  int threads = 1;
  std::string out;
  std::string format = "json";
};

int write_output(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file " << cfg.out << "\n";
    return kExitIo;
  }
  f << text;
  return f.good() ? kExitPass : kExitIo;
}

int write_json(const JobConfig& cfg, const Json& j) {
  return write_output(cfg, j.dump(2) + "\n");
}

std::optional<Json> read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  Json j = Json::parse(f, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

bool is_phase_function_json(const Json& j) {
  return j.is_object() && j.contains("kind");
}

std::optional<hexa::PhaseFunction> load_lambda_arg(const std::string& spec) {
  if (spec == "sparse") return hexa::artisanal(hexa::ArtisanalKind::Sparse);
  if (spec == "sym") return hexa::artisanal(hexa::ArtisanalKind::Sym);
  auto j = read_json(spec);
  if (!j || !is_phase_function_json(*j)) return std::nullopt;
  return hexa::phase_function_from_json(*j);
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int cmd_construct(const JobConfig& cfg, const std::string& kind, long d, long n,
                  const std::string& nlist, long alpha, long alpha_index,
                  long d1, long d2, long alpha1, long alpha2,
                  const std::string& lambda_spec) {
  try {
    if (kind == "sparse" || kind == "sym") {
      auto lam = hexa::artisanal(kind == "sparse" ? hexa::ArtisanalKind::Sparse
                                                  : hexa::ArtisanalKind::Sym);
      if (cfg.format == "csv")
        return write_output(cfg, hexa::phase_function_to_csv(lam));
      return write_json(cfg, hexa::phase_function_to_json(lam));
    }
    if (kind == "lambda3") {
      auto rep = hexa::derive_lambda3();
      if (!rep.roundtrip || !rep.flags.all()) {
        std::cerr << "error: lambda3 derivation failed its own checks\n";
        return kExitVerifyFail;
      }
      if (cfg.format == "csv")
        return write_output(cfg, hexa::phase_function_to_csv(rep.lambda3));
      return write_json(cfg, hexa::phase_function_to_json(rep.lambda3));
    }
    if (kind == "quadratic") {
      std::vector<long> N = parse_long_list(nlist);
      if (static_cast<long>(N.size()) != 2 * n * 2 * n) {
        std::cerr << "error: --N must list a symmetric 2n x 2n matrix\n";
        return kExitBadArgs;
      }
      auto lam = hexa::quadratic_lambda(N, d, n);
      if (cfg.format == "csv")
        return write_output(cfg, hexa::phase_function_to_csv(lam));
      return write_json(cfg, hexa::phase_function_to_json(lam));
    }
    if (kind == "gf2n") {
      auto lam = hexa::gf2n_lambda(n, alpha_index);
      if (cfg.format == "csv")
        return write_output(cfg, hexa::phase_function_to_csv(lam));
      return write_json(cfg, hexa::phase_function_to_json(lam));
    }
    if (kind == "ols") {
      auto [K, L] = hexa::linear_ols(d, alpha);
      Json j = hexa::latin_to_json(K, L);
      j["matrix"] = hexa::matrix_to_json(hexa::ols_to_unitary(K, L));
      return write_json(cfg, j);
    }
    if (kind == "product") {
      auto [K1, L1] = hexa::linear_ols(d1, alpha1);
      auto [K2, L2] = hexa::linear_ols(d2, alpha2);
      hexa::ExactMatrix U = hexa::box_product(hexa::ols_to_unitary(K1, L1), d1,
                                              hexa::ols_to_unitary(K2, L2), d2);
      return write_json(cfg, hexa::matrix_to_json(U));
    }
    if (kind == "hadamard-G" || kind == "hadamard-H") {
      auto lam = load_lambda_arg(lambda_spec);
      if (!lam) {
        std::cerr << "error: cannot load --lambda " << lambda_spec << "\n";
        return kExitIo;
      }
      hexa::HadamardPair hp = hexa::build_hadamard(*lam);
      return write_json(cfg, hexa::matrix_to_json(
                                 kind == "hadamard-G" ? hp.G : hp.H));
    }
    std::cerr << "error: unknown construct kind " << kind << "\n";
    return kExitBadArgs;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadArgs;
  }
}

hexa::TwoUnitaryFlags flags_for(const JobConfig& cfg,
                                const hexa::ExactMatrix& U) {
  if (cfg.backend == "float")
    return hexa::is_two_unitary_f(hexa::to_float(U), cfg.tol);
  return hexa::is_two_unitary(U);
}

int cmd_verify(const JobConfig& cfg, const std::string& path,
               const std::string& checks) {
  auto j = read_json(path);
  if (!j) {
    std::cerr << "error: cannot read or parse " << path << "\n";
    return kExitIo;
  }
  bool want_all = checks == "all";
  auto wanted = [&](const std::string& c) { return want_all || checks == c; };
  Json rep;
  bool pass = true;
  try {
    if (is_phase_function_json(*j)) {
      hexa::PhaseFunction lam = hexa::phase_function_from_json(*j);
      rep["target"] = "phase_function";
      Json cj = Json::object();
      if (wanted("dpf")) {
        hexa::DpfFlags f = hexa::is_doubly_perfect(lam);
        cj["unimodular"] = f.unimodular;
        cj["perfect"] = f.perfect;
        cj["doubly"] = f.doubly;
        pass = pass && f.all();
      }
      if (wanted("unitary") || wanted("dual") || wanted("gamma")) {
        hexa::TwoUnitaryFlags f = flags_for(cfg, hexa::u_lambda(lam));
        if (wanted("unitary")) cj["unitary"] = f.unitary;
        if (wanted("dual")) cj["dual"] = f.dual;
        if (wanted("gamma")) cj["gamma_dual"] = f.gamma_dual;
        if (wanted("unitary")) pass = pass && f.unitary;
        if (wanted("dual")) pass = pass && f.dual;
        if (wanted("gamma")) pass = pass && f.gamma_dual;
      }
      if (checks == "hadamard") {
        hexa::HadamardPair hp = hexa::build_hadamard(lam);
        bool g_ok = flags_for(cfg, hp.G).all();
        bool h_ok = flags_for(cfg, hp.H).all();
        cj["hadamard_G"] = g_ok;
        cj["hadamard_H"] = h_ok;
        pass = pass && g_ok && h_ok;
      }
      if (checks == "algebra") {
        hexa::EtaPair eta = hexa::eta_conjugated_left(hexa::u_lambda(lam),
                                                      lam.d, lam.n);
        cj["eta_to_L"] = eta.to_L.get_str();
        cj["eta_to_R"] = eta.to_R.get_str();
        bool ok = eta.to_L == 1 && eta.to_R == 1;
        cj["quasi_orthogonal"] = ok;
        pass = pass && ok;
      }
      rep["checks"] = cj;
    } else {
      hexa::ExactMatrix U = hexa::matrix_from_json(*j);
      rep["target"] = "matrix";
      Json cj = Json::object();
      if (checks == "dpf" || checks == "algebra") {
        std::cerr << "error: check '" << checks
                  << "' applies to phase functions\n";
        return kExitBadArgs;
      }
      hexa::TwoUnitaryFlags f = flags_for(cfg, U);
      if (wanted("unitary") || checks == "hadamard") cj["unitary"] = f.unitary;
      if (wanted("dual") || checks == "hadamard") cj["dual"] = f.dual;
      if (wanted("gamma") || checks == "hadamard")
        cj["gamma_dual"] = f.gamma_dual;
      if (wanted("unitary")) pass = pass && f.unitary;
      if (wanted("dual")) pass = pass && f.dual;
      if (wanted("gamma")) pass = pass && f.gamma_dual;
      if (checks == "hadamard") {
        bool uni = true;
        for (const auto& v : U.e) uni = uni && v.is_unimodular();
        cj["entries_unimodular"] = uni;
        pass = pass && uni && f.all();
      }
      rep["checks"] = cj;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitIo;
  }
  rep["pass"] = pass;
  int wrc = write_json(cfg, rep);
  if (wrc != kExitPass) return wrc;
  return pass ? kExitPass : kExitVerifyFail;
}

int cmd_scan(const JobConfig& cfg) {
  hexa::ScanReport rep = hexa::classification_scan(cfg.threads);
  return write_json(cfg, hexa::scan_report_to_json(rep));
}

int cmd_orbit(const JobConfig& cfg, const std::string& seed) {
  std::optional<hexa::SectorPair> pq;
  if (seed == "sparse") {
    pq = hexa::artisanal_pq(hexa::ArtisanalKind::Sparse);
  } else if (seed == "sym") {
    pq = hexa::artisanal_pq(hexa::ArtisanalKind::Sym);
  } else {
    auto j = read_json(seed);
    if (!j || !is_phase_function_json(*j)) {
      std::cerr << "error: cannot read or parse " << seed << "\n";
      return kExitIo;
    }
    pq = hexa::pq_from_lambda(hexa::phase_function_from_json(*j));
    if (!pq) {
      std::cerr << "error: seed is not in the (P,Q) ansatz class\n";
      return kExitBadArgs;
    }
  }
  return write_json(cfg, hexa::orbit_to_json(hexa::orbit(*pq)));
}

int cmd_export(const JobConfig& cfg, const std::string& path) {
  auto j = read_json(path);
  if (!j) {
    std::cerr << "error: cannot read or parse " << path << "\n";
    return kExitIo;
  }
  try {
    if (is_phase_function_json(*j)) {
      hexa::PhaseFunction lam = hexa::phase_function_from_json(*j);
      if (cfg.format == "csv")
        return write_output(cfg, hexa::phase_function_to_csv(lam));
      return write_json(cfg, hexa::phase_function_to_json(lam));
    }
    hexa::ExactMatrix U = hexa::matrix_from_json(*j);
    if (cfg.format == "csv") {
      std::cerr << "error: CSV export is only for exponent tables\n";
      return kExitBadArgs;
    }
    if (cfg.backend == "float")
      return write_json(cfg, hexa::matrix_to_float_json(U));
    return write_json(cfg, hexa::matrix_to_json(U));
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitBadArgs;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and verification of order-6 perfect "
               "tensors, doubly perfect phase-space functions, and Hadamard "
               "two-unitaries"};
  app.require_subcommand(1);

  JobConfig cfg;
  if (const char* env = std::getenv("HEXAPERFECT_THREADS")) {
    try {
      cfg.threads = std::max(1, std::stoi(env));
    } catch (...) {
    }
  }
  app.add_option("--backend", cfg.backend, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", cfg.tol, "float-backend tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker count for scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string kind, checks = "all", target, seed, lambda_spec = "sparse";
  std::string nlist;
  long d = 3, n = 1, alpha = 2, alpha_index = 1;
  long d1 = 3, d2 = 3, alpha1 = 2, alpha2 = 2;

  CLI::App* c = app.add_subcommand("construct", "build an artifact file");
  c->fallthrough();
  c->add_option("kind", kind, "sparse|sym|quadratic|gf2n|ols|product|"
                              "hadamard-G|hadamard-H|lambda3")
      ->required();
  c->add_option("--d", d, "qudit dimension");
  c->add_option("--n", n, "number of qudits / GF(2^n) exponent");
  c->add_option("--N", nlist, "comma-separated symmetric 2n x 2n matrix");
  c->add_option("--alpha", alpha, "OLS slope (not 0 or 1)");
  c->add_option("--alpha-index", alpha_index, "power of the GF generator");
  c->add_option("--d1", d1, "product: first OLS dimension");
  c->add_option("--d2", d2, "product: second OLS dimension");
  c->add_option("--alpha1", alpha1, "product: first OLS slope");
  c->add_option("--alpha2", alpha2, "product: second OLS slope");
  c->add_option("--lambda", lambda_spec, "sparse|sym|path to phase function");

  CLI::App* v = app.add_subcommand("verify", "verify an artifact file");
  v->fallthrough();
  v->add_option("target", target, "artifact JSON file")->required();
  v->add_option("--checks", checks,
                "all|unitary|dual|gamma|dpf|hadamard|algebra")
      ->check(CLI::IsMember(
          {"all", "unitary", "dual", "gamma", "dpf", "hadamard", "algebra"}));

  app.add_subcommand("scan", "exhaustive (P,Q) classification scan")
      ->fallthrough();

  CLI::App* o = app.add_subcommand("orbit", "GL(Z_3^2) orbit of a seed");
  o->fallthrough();
  o->add_option("seed", seed, "sparse|sym|path to phase function")->required();

  CLI::App* x = app.add_subcommand("export", "re-emit an artifact file");
  x->fallthrough();
  x->add_option("target", target, "artifact JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadArgs;
  }

  if (app.got_subcommand("construct"))
    return cmd_construct(cfg, kind, d, n, nlist, alpha, alpha_index, d1, d2,
                         alpha1, alpha2, lambda_spec);
  if (app.got_subcommand("verify")) return cmd_verify(cfg, target, checks);
  if (app.got_subcommand("scan")) return cmd_scan(cfg);
  if (app.got_subcommand("orbit")) return cmd_orbit(cfg, seed);
  if (app.got_subcommand("export")) return cmd_export(cfg, target);
  return kExitBadArgs;
}
