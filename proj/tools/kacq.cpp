// kacq: t-string functions of twisted affine algebras and checks of their product formulas.
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kacq/identities.hpp"
#include "kacq/io.hpp"
#include "kacq/kernels.hpp"
#include "kacq/kostka.hpp"

using namespace kacq;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algebra = "A2~2";
  int order = 4;
  std::vector<std::string> routes{"c"};
  std::string format = "text";
  std::string cacheDir;
  bool twoVariable = false;
  int boxPadding = 0;
};

struct KernelArgs {
  std::string kind;
  int rank = 0;
  MacdonaldParams p;
};

AffineAlgebra load_algebra(const std::string& id) {
  try {
    return build(id);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::unique_ptr<TableCache> open_cache(const RunConfig& cfg) {
  if (cfg.cacheDir.empty()) return nullptr;
  return std::make_unique<TableCache>(cfg.cacheDir);
}

// ---- output ----

std::string finite_text(const Vec& v) {
  std::string s;
  for (int i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void emit_csv_header(std::ostream& out) { out << "label,d2,finite,t,s,coefficient\n"; }

void emit_series(std::ostream& out, const std::string& format, const std::string& label, const RunConfig& cfg,
                 const Series& x) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["algebra"] = cfg.algebra;
    j["label"] = label;
    j["order"] = cfg.order;
    if (x.rank() == 0) {
      auto c = nlohmann::ordered_json::array();
      for (int d2 = 0; d2 <= x.spec().maxD2; d2 += 2) c.push_back(x.q_coefficient(d2).str());
      j["coefficients"] = std::move(c);
    }
    j["series"] = series_to_json(x);
    out << j.dump() << '\n';
  } else if (format == "csv") {
    for (const auto& [m, c] : x.sorted_terms())
      for (const auto& t : c.terms())
        out << label << ',' << m.d2 << ',' << finite_text(m.finite) << ',' << t.t << ',' << t.s << ',' << t.c.str()
            << '\n';
  } else {
    out << label << ": " << to_text(x) << '\n';
  }
}

// ---- string-function ----

Series compute_route(const AffineAlgebra& g, const std::string& route, const RunConfig& cfg) {
  if (route == "a") {
    auto cache = open_cache(cfg);
    std::string warning;
    PartitionTable table = cached_partition_table(g, cfg.order, cfg.boxPadding, cfg.twoVariable, cache.get(), &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << ", recomputing\n";
    return string_function_weylsum(g, lambda0(g), lambda0(g), cfg.order, cfg.twoVariable, &table);
  }
  if (route == "b") {
    if (cfg.twoVariable) throw UsageError("route b has no two-variable form");
    return string_function_ct(g, cfg.order, default_ct_box(g, 2 * cfg.order) + cfg.boxPadding);
  }
  if (cfg.twoVariable) {
    if (g.family != Family::A2l) throw UsageError("two-variable products exist only for A_{2l}^(2)");
    return two_var_product(g.l, cfg.order);
  }
  return product_route_c(g, cfg.order);
}

int cmd_string_function(const RunConfig& cfg) {
  auto g = load_algebra(cfg.algebra);
  if (cfg.twoVariable && g.family != Family::A2l) throw UsageError("--two-variable needs an A_{2l}^(2) algebra");
  if (cfg.format == "csv") emit_csv_header(std::cout);
  std::optional<Series> first;
  int status = 0;
  for (const auto& r : cfg.routes) {
    Series x = compute_route(g, r, cfg);
    emit_series(std::cout, cfg.format, "route " + r, cfg, x);
    if (!first) {
      first = x;
    } else if (!(x == *first)) {
      std::cerr << "error: route " << r << " disagrees with route " << cfg.routes.front() << '\n';
      status = 1;
    }
  }
  return status;
}

// ---- verify ----

int emit_reports(const std::vector<VerificationReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << report_to_json(r).dump() << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& target) {
  std::vector<VerificationReport> reports;
  const int maxD2 = 2 * cfg.order;
  if (target == "jacobi") {
    reports.push_back(jacobi_triple_product_check({maxD2, 2 * maxD2}));
    return emit_reports(reports);
  }
  auto g = load_algebra(cfg.algebra);
  if (target == "routes") {
    RunConfig c = cfg;
    Series ref = compute_route(g, "c", c);
    for (const auto& r : cfg.routes) {
      if (r == "c") continue;
      reports.push_back(compare(compute_route(g, r, c), ref, maxD2, g.id + " route " + r, g.id + " route c"));
      if (r == "b")
        reports.push_back(ct_box_stability(g, maxD2, default_ct_box(g, maxD2) + cfg.boxPadding));
    }
    if (reports.empty()) reports.push_back(compare(ref, ref, maxD2, g.id + " route c", g.id + " route c"));
  } else if (target == "cmm") {
    Series rhs = g.family == Family::A2l ? cmm_rhs_a2l2(g.l, cfg.order) : cmm_rhs_general(g, cfg.order);
    reports.push_back(compare(ct_mu_theta(g, maxD2, default_ct_box(g, maxD2) + cfg.boxPadding), rhs, maxD2,
                              "ct(mu theta) for " + g.id, "constant term product for " + g.id));
  } else if (target == "specialization") {
    reports.push_back(specialization_check(g, cfg.order));
  } else if (target == "kernel") {
    if (g.family != Family::A2l) throw UsageError("the kernel specializations concern A_{2l}^(2)");
    MacdonaldParams p;
    reports.push_back(macdonald_specialization_check(g.l, p, maxD2));
    p.k4Infinite = true;
    reports.push_back(macdonald_specialization_check(g.l, p, maxD2));
  } else if (target == "two-variable") {
    if (g.family != Family::A2l) throw UsageError("two-variable identities concern A_{2l}^(2)");
    RunConfig c = cfg;
    c.twoVariable = true;
    Series a = compute_route(g, "a", c);
    reports.push_back(compare(a, two_var_product(g.l, cfg.order), maxD2, g.id + " two-variable Weyl sum",
                              "two-variable product"));
    VerificationReport pos{g.id + " two-variable Weyl sum", "nonnegative coefficients", {maxD2, 0}, true, {}};
    for (const auto& [m, coeff] : a.sorted_terms())
      if (!coeff.nonnegative()) {
        pos.pass = false;
        pos.firstDiscrepancy = Discrepancy{m, coeff, {}};
        break;
      }
    reports.push_back(pos);
  }
  return emit_reports(reports);
}

// ---- kostka, kernel, theta, exponents ----

int cmd_kostka(const RunConfig& cfg, int k) {
  auto g = load_algebra(cfg.algebra);
  if (cfg.twoVariable && g.family != Family::A2l) throw UsageError("--two-variable needs an A_{2l}^(2) algebra");
  AffineWeight mu = lambda0(g);
  mu.d2 -= 2 * k;
  CoeffPoly K = kostka_poly(g, lambda0(g), mu, cfg.twoVariable);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["algebra"] = g.id;
    j["k"] = k;
    j["twoVariable"] = cfg.twoVariable;
    j["kostka"] = K.str();
    std::cout << j.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "algebra,k,t,s,coefficient\n";
    for (const auto& t : K.terms()) std::cout << g.id << ',' << k << ',' << t.t << ',' << t.s << ',' << t.c.str() << '\n';
  } else {
    std::cout << "K(Lambda0, Lambda0 - " << k << " delta) = " << K.str() << '\n';
  }
  return 0;
}

int cmd_kernel(const RunConfig& cfg, const KernelArgs& args) {
  const int maxD2 = 2 * cfg.order;
  Series x(0, {0, 0});
  if (args.kind == "delta") {
    int l = args.rank;
    if (l == 0) {
      auto g = load_algebra(cfg.algebra);
      if (g.family != Family::A2l) throw UsageError("give --rank or an A_{2l}^(2) algebra");
      l = g.l;
    }
    try {
      x = macdonald_kernel_cc(l, args.p, {maxD2, macdonald_lossless_box(l, maxD2) + cfg.boxPadding});
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    auto g = load_algebra(cfg.algebra);
    if (args.kind == "mu")
      x = cherednik_kernel(g, {maxD2, kernel_lossless_box(g, maxD2) + cfg.boxPadding});
    else if (args.kind == "mu-im")
      x = imaginary_kernel(g, maxD2);
    else
      x = theta_series(g, {maxD2, default_ct_box(g, 0) + cfg.boxPadding});
  }
  if (cfg.format == "csv") emit_csv_header(std::cout);
  emit_series(std::cout, cfg.format, args.kind, cfg, x);
  return 0;
}

int cmd_theta(const RunConfig& cfg) {
  auto g = load_algebra(cfg.algebra);
  const int maxD2 = 2 * cfg.order;
  int ball = 0;
  for (const auto& v : lattice_ball(g, maxD2)) ball = std::max(ball, v.max_abs());
  if (cfg.format == "csv") emit_csv_header(std::cout);
  emit_series(std::cout, cfg.format, "theta", cfg, theta_series(g, {maxD2, ball + cfg.boxPadding}));
  return 0;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

int cmd_exponents(const std::vector<std::string>& ids) {
  std::cout << "family,rank,n,catalog,recomputed,match\n";
  int status = 0;
  for (const auto& id : ids) {
    auto g = load_algebra(id);
    for (int n = 0; n < g.r; ++n) {
      const auto& catalog = g.exponents_at(n);
      auto recomputed = recomputed_exponents(g, n);
      bool match = catalog == recomputed;
      if (!match) status = 1;
      std::cout << id << ',' << g.l << ',' << n << ',' << join(catalog) << ',' << join(recomputed) << ','
                << (match ? "yes" : "no") << '\n';
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kacq: t-string functions of the basic representation of twisted affine algebras.\n"
               "Algebra ids are written X<n>~<r>, e.g. A2~2, A4~2, A5~2, D3~2, E6~2, D4~3, A1~1."};
  app.set_config("--config", "", "TOML or INI file with option values");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("KACQ_CACHE_DIR")) cfg.cacheDir = env;
  std::string routes = "c";
  app.add_option("--algebra", cfg.algebra, "algebra id")->capture_default_str();
  app.add_option("--order", cfg.order, "highest power of q")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--route,--routes", routes, "comma-separated subset of a (Weyl sum), b (constant term), c (product)")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--two-variable", cfg.twoVariable, "separate s for the short roots (A_{2l}^(2) only)");
  app.add_option("--cache-dir", cfg.cacheDir, "partition table cache (default: $KACQ_CACHE_DIR)");
  app.add_option("--box-padding", cfg.boxPadding, "extra room in the finite box")->check(CLI::NonNegativeNumber);

  auto* sf = app.add_subcommand("string-function", "t-string function of L(Lambda0) by the chosen routes");
  std::string target = "routes";
  auto* verify = app.add_subcommand("verify", "compare routes and identities; JSON lines, exit 0 iff all pass");
  verify->add_option("target", target, "routes, jacobi, cmm, specialization, kernel or two-variable")
      ->check(CLI::IsMember({"routes", "jacobi", "cmm", "specialization", "kernel", "two-variable"}))
      ->capture_default_str();
  int k = 1;
  auto* kostka = app.add_subcommand("kostka", "K_{Lambda0, Lambda0 - k delta}(t)");
  kostka->add_option("--k", k, "depth below Lambda0")->check(CLI::NonNegativeNumber)->capture_default_str();
  KernelArgs kargs;
  auto* kernel = app.add_subcommand("kernel", "expand a kernel: mu, mu-im, theta or delta");
  kernel->add_option("kind", kargs.kind)->required()->check(CLI::IsMember({"mu", "mu-im", "theta", "delta"}));
  kernel->add_option("--rank", kargs.rank, "rank l of the (C^v, C) kernel")->check(CLI::PositiveNumber);
  kernel->add_option("--k1", kargs.p.k1, "q-exponents in half-units")->capture_default_str();
  kernel->add_option("--k2", kargs.p.k2)->capture_default_str();
  kernel->add_option("--k3", kargs.p.k3)->capture_default_str();
  kernel->add_option("--k4", kargs.p.k4)->capture_default_str();
  kernel->add_option("--k5", kargs.p.k5)->capture_default_str();
  kernel->add_flag("--k4-infinite", kargs.p.k4Infinite, "drop the u4 factors");
  auto* exps = app.add_subcommand("exponents", "CSV of catalog and recomputed exponents; exit 1 on mismatch");
  auto* theta = app.add_subcommand("theta", "lattice theta series of M");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.routes.clear();
  std::set<std::string> seen;
  std::stringstream rs(routes);
  for (std::string r; std::getline(rs, r, ',');) {
    if (r != "a" && r != "b" && r != "c") {
      std::cerr << "error: unknown route '" << r << "'\n";
      return kUsage;
    }
    if (seen.insert(r).second) cfg.routes.push_back(r);
  }
  if (cfg.routes.empty()) {
    std::cerr << "error: no route given\n";
    return kUsage;
  }

  try {
    if (*sf) return cmd_string_function(cfg);
    if (*verify) return cmd_verify(cfg, target);
    if (*kostka) return cmd_kostka(cfg, k);
    if (*kernel) return cmd_kernel(cfg, kargs);
    if (*theta) return cmd_theta(cfg);
    if (*exps) {
      std::vector<std::string> ids = catalog_ids();
      if (app.count("--algebra")) ids = {cfg.algebra};
      return cmd_exponents(ids);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
