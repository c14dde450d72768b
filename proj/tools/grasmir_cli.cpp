// Batch front-end: verification suites, series tables, and exports, all
// deterministic given the flags (including --seed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grasmir/cluster.hpp"
#include "grasmir/combinat.hpp"
#include "grasmir/connection.hpp"
#include "grasmir/fields.hpp"
#include "grasmir/gridpot.hpp"
#include "grasmir/liepot.hpp"
#include "grasmir/pluecker.hpp"
#include "grasmir/qseries.hpp"
#include "grasmir/rng.hpp"

using json = nlohmann::ordered_json;
using namespace grasmir;

namespace {

// Comma-separated parts, empty string for the empty partition.
std::string lam_key(const Partition& lam) {
  std::string s;
  for (size_t i = 0; i < lam.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam.parts[i]);
  }
  return s;
}

json seed_json(const Seed& s) {
  json labels = json::array();
  for (const auto& l : s.labels) labels.push_back(l);
  json arrows = json::array();
  for (const auto& [e, m] : s.arrows) arrows.push_back({e.first, e.second, m});
  json frozen = json::array();
  for (size_t v = 0; v < s.size(); ++v)
    if (s.frozen[v]) frozen.push_back(v);
  return json{{"labels", labels}, {"arrows", arrows}, {"frozen", frozen}};
}

Matrix<Rational> random_matrix(int rows, int cols, Rng& rng, int height) {
  Matrix<Rational> m(static_cast<size_t>(rows), static_cast<size_t>(cols), Rational(0));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rng.nonzero_int(height));
  return m;
}

json matrix_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

struct Case {
  std::string key;
  bool ok;
  std::string detail;
};

// Shared report shape: cases sorted by key, failures listed separately,
// exit 0 iff everything passed.
int emit_report(json report, std::vector<Case> cases) {
  std::sort(cases.begin(), cases.end(),
            [](const Case& a, const Case& b) { return a.key < b.key; });
  json jcases = json::array();
  json failures = json::array();
  bool ok = true;
  for (const auto& c : cases) {
    json jc{{"case", c.key}, {"ok", c.ok}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    jcases.push_back(jc);
    if (!c.ok) {
      ok = false;
      failures.push_back(c.detail.empty() ? json{{"case", c.key}}
                                          : json{{"case", c.key}, {"detail", c.detail}});
    }
  }
  report["cases"] = jcases;
  report["failures"] = failures;
  report["ok"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? 0 : 1;
}

// Structured form of a Laurent polynomial: one object per term.
json laurent_terms(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json{{"exponents", e},
                       {"numerator", c.numerator().get_str()},
                       {"denominator", c.denominator().get_str()}});
  return out;
}

int run_connection(int k, int n, const std::string& dir, bool terms) {
  GrassContext ctx(k, n);
  Matrix<LaurentPoly> m = nabla_matrix(ctx, monk_matrix(ctx), dir[0]);
  json basis = json::array();
  for (const auto& lam : ctx.basis()) basis.push_back(lam_key(lam));
  json entries = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
      if (terms)
        row.push_back(laurent_terms(m.at(r, c)));
      else
        row.push_back(m.at(r, c).str());
    }
    entries.push_back(row);
  }
  json out{{"schema", 1},
           {"k", k},
           {"n", n},
           {"dir", dir},
           {"variables", *m.at(0, 0).vars()},
           {"basis", basis},
           {"entries", entries}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_superpotential(int k, int n, const std::string& file, const std::string& qstr) {
  GrassContext ctx(k, n);
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open point file: " << file << "\n";
    return 2;
  }
  json jp = json::parse(in);
  int rows = jp.at("rows").get<int>();
  int cols = jp.at("cols").get<int>();
  auto entries = jp.at("entries").get<std::vector<std::string>>();
  if (rows != k || cols != n || entries.size() != static_cast<size_t>(rows * cols)) {
    std::cerr << "point file must hold a " << k << "x" << n << " row-major matrix\n";
    return 2;
  }
  Matrix<Rational> m(static_cast<size_t>(rows), static_cast<size_t>(cols), Rational(0));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      m.at(r, c) = Rational::from_string(entries[r * m.cols() + c]);
  Rational q = Rational::from_string(qstr);
  Rational w;
  try {
    w = eval_W<Rational>(ctx, m, q);
  } catch (const std::domain_error& e) {
    json out{{"schema", 1}, {"k", k}, {"n", n}, {"q", q.str()}, {"error", e.what()}};
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  json out{{"schema", 1}, {"k", k}, {"n", n}, {"q", q.str()}, {"w", w.str()}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_aseries(int k, int n, int order, const std::string& method) {
  GrassContext ctx(k, n);
  auto so = static_cast<size_t>(order);
  if (method == "closed" || method == "constterm") {
    QSeries s = method == "closed" ? aseries_closed(ctx, so) : aseries_constterm(ctx, so);
    std::cout << "order,numerator,denominator\n";
    for (size_t d = 0; d <= so; ++d)
      std::cout << d << "," << s[d].numerator().get_str() << "," << s[d].denominator().get_str()
                << "\n";
    return 0;
  }
  QSeries a = aseries_closed(ctx, so);
  QSeries b = aseries_constterm(ctx, so);
  std::cout << "order,closed_numerator,closed_denominator,constterm_numerator,constterm_"
               "denominator\n";
  for (size_t d = 0; d <= so; ++d)
    std::cout << d << "," << a[d].numerator().get_str() << "," << a[d].denominator().get_str()
              << "," << b[d].numerator().get_str() << "," << b[d].denominator().get_str() << "\n";
  long mism = first_mismatch(a, b);
  if (mism >= 0) {
    std::cerr << "methods disagree first at order " << mism << ": closed "
              << a[static_cast<size_t>(mism)].str() << " vs constterm "
              << b[static_cast<size_t>(mism)].str() << "\n";
    return 1;
  }
  return 0;
}

int run_walk(int k, int n, int steps, uint64_t seed, std::vector<std::string> checks,
             int matrices, int height) {
  GrassContext ctx(k, n);
  if (checks.empty()) checks = {"ws"};
  std::set<std::string> cs(checks.begin(), checks.end());
  Rng root(seed);
  Rng walk_rng = root.split("walk");
  Rng mat_root = root.split("matrices");

  Seed start = initial_seed(ctx);
  json walk = json::array();
  std::vector<Case> cases;
  Seed last = start;
  random_walk(start, steps, walk_rng, [&](const Seed& s, int step, int vertex) {
    last = s;
    if (step > 0)
      walk.push_back(json{{"step", step}, {"vertex", vertex}, {"label", s.labels[vertex]}});
    char key[32];
    std::snprintf(key, sizeof key, "step=%03d", step);
    if (cs.count("ws")) {
      bool ok = seed_weakly_separated(s, n);
      cases.push_back({std::string(key) + " check=ws", ok,
                       ok ? "" : "weak separation lost after mutating vertex " +
                                     std::to_string(vertex)});
    }
    if (cs.count("exchange") && step > 0) {
      bool ok = true;
      std::string detail;
      for (int t = 0; t < matrices && ok; ++t) {
        Rng mr = mat_root.split(std::to_string(step) + "/" + std::to_string(t));
        Matrix<Rational> pt = random_matrix(k, n, mr, height);
        if (!exchange_check(s, vertex, pt)) {
          ok = false;
          detail = "exchange relation fails at vertex " + std::to_string(vertex) +
                   " on matrix " + std::to_string(t);
        }
      }
      cases.push_back({std::string(key) + " check=exchange", ok, detail});
    }
    if (cs.count("additivity")) {
      bool ok = true;
      std::string detail;
      for (const auto& lam : ctx.basis()) {
        Subset jl = subset_of_partition(lam, k, n);
        bool in_seed = s.vertex_of(jl).has_value();
        for (int m = 1; m <= n && ok; ++m) {
          bool balanced = !additivity_violation(ctx, s, lam, m).has_value();
          if (balanced != in_seed) {
            ok = false;
            detail = "membership equivalence fails at lam=(" + lam_key(lam) +
                     ") m=" + std::to_string(m);
          }
        }
        if (!ok) break;
      }
      cases.push_back({std::string(key) + " check=additivity", ok, detail});
    }
  });

  json report{{"schema", 1},          {"k", k},
              {"n", n},               {"steps", steps},
              {"seed", seed},         {"checks", json(std::vector<std::string>(cs.begin(),
                                                                               cs.end()))},
              {"walk", walk},         {"final_seed", seed_json(last)}};
  return emit_report(std::move(report), std::move(cases));
}

int verify_main_thm(int k, int n) {
  GrassContext ctx(k, n);
  std::vector<Case> cases;
  std::string fail;
  GmConnection g{Matrix<Rational>(0, 0, Rational(0)), Matrix<Rational>(0, 0, Rational(0)), {}};
  bool built = false;
  try {
    g = gm_connection_coeffs(ctx);
    built = true;
  } catch (const std::exception& e) {
    fail = e.what();
  }
  cases.push_back({"field actions on the superpotential", built, fail});
  ConnectionPencil p = monk_matrix(ctx);
  if (built) {
    cases.push_back({"classical part matches one-box product", g.classical == p.classical, ""});
    cases.push_back({"quantum part matches rim removal", g.quantum == p.quantum, ""});
    cases.push_back({"grading matches weight", g.grading == p.grading, ""});
  }
  json displays = json::array();
  for (size_t i = 0; i < ctx.size(); ++i)
    displays.push_back("nabla_q " + ctx.partition_at(i).str() + " = " +
                       coh_str(ctx, nabla_q(ctx, p, basis_section(ctx, i))));
  for (size_t i = 0; i < ctx.size(); ++i)
    displays.push_back("nabla_z " + ctx.partition_at(i).str() + " = " +
                       coh_str(ctx, nabla_z(ctx, p, basis_section(ctx, i))));
  json report{{"schema", 1}, {"theorem", "main"}, {"k", k}, {"n", n}, {"displays", displays}};
  return emit_report(std::move(report), std::move(cases));
}

int verify_action_or_sum(int k, int n, const std::string& theorem, std::string mode, int points,
                         int64_t seed) {
  GrassContext ctx(k, n);
  if (mode == "auto") mode = ctx.dim() <= 4 ? "symbolic" : "point";
  if (mode == "point" && seed < 0) {
    std::cerr << "--seed is required in point mode\n";
    return 2;
  }
  std::optional<TorusChart> chart;
  if (mode == "symbolic") chart = make_torus_chart(ctx);
  Rng root(static_cast<uint64_t>(seed < 0 ? 0 : seed));
  std::vector<Case> cases;
  for (const auto& lam : ctx.basis()) {
    Seed seed_l = find_seed_containing(ctx, subset_of_partition(lam, k, n));
    if (theorem == "action") {
      for (int m = 1; m <= n; ++m) {
        std::string key = "lam=(" + lam_key(lam) + ") m=" + std::to_string(m);
        if (mode == "symbolic") {
          ActionReport r = verify_action_symbolic(*chart, seed_l, lam, m);
          cases.push_back({key, r.equal, r.detail});
        } else {
          bool ok = true;
          std::string detail = std::to_string(points) + " exact random points";
          for (int t = 0; t < points && ok; ++t) {
            Rng child = root.split(key + "/" + std::to_string(t));
            ok = verify_action_at_point(ctx, seed_l, lam, m, child).equal;
            if (!ok) detail = "fails at point " + std::to_string(t);
          }
          cases.push_back({key, ok, detail});
        }
      }
    } else {
      std::string key = "lam=(" + lam_key(lam) + ")";
      if (mode == "symbolic") {
        cases.push_back({key, verify_sum_symbolic(*chart, seed_l, lam), ""});
      } else {
        bool ok = true;
        std::string detail = std::to_string(points) + " exact random points";
        for (int t = 0; t < points && ok; ++t) {
          Rng child = root.split(key + "/" + std::to_string(t));
          ok = verify_sum_at_point(ctx, seed_l, lam, child);
          if (!ok) detail = "fails at point " + std::to_string(t);
        }
        cases.push_back({key, ok, detail});
      }
    }
  }
  json report{{"schema", 1}, {"theorem", theorem}, {"k", k}, {"n", n}, {"mode", mode}};
  if (mode == "point") {
    report["points"] = points;
    report["seed"] = seed;
  }
  return emit_report(std::move(report), std::move(cases));
}

int verify_boundary(int k, int n, bool sum) {
  GrassContext ctx(k, n);
  auto v = sum ? boundary_sum_violation(ctx) : boundary_lemma_violation(ctx);
  std::vector<Case> cases{{sum ? "shift sum equals weight, all lambda"
                               : "closed form equals definition, all lambda and intervals",
                           !v.has_value(), v.value_or("")}};
  json report{{"schema", 1}, {"theorem", sum ? "boundary-sum" : "boundary"}, {"k", k}, {"n", n}};
  return emit_report(std::move(report), std::move(cases));
}

int verify_additivity(int k, int n, int steps, int64_t seed) {
  if (seed < 0) {
    std::cerr << "--seed is required for the mutation walk\n";
    return 2;
  }
  GrassContext ctx(k, n);
  Rng rng = Rng(static_cast<uint64_t>(seed)).split("walk");
  std::vector<Case> cases;
  random_walk(initial_seed(ctx), steps, rng, [&](const Seed& s, int step, int) {
    bool ok = true;
    std::string detail;
    for (const auto& lam : ctx.basis()) {
      bool in_seed = s.vertex_of(subset_of_partition(lam, k, n)).has_value();
      for (int m = 1; m <= n; ++m) {
        bool balanced = !additivity_violation(ctx, s, lam, m).has_value();
        if (balanced != in_seed) {
          ok = false;
          detail = "lam=(" + lam_key(lam) + ") m=" + std::to_string(m) +
                   (balanced ? " balances off-seed" : " fails in-seed");
        }
      }
    }
    char key[32];
    std::snprintf(key, sizeof key, "step=%03d", step);
    cases.push_back({key, ok, detail});
  });
  json report{{"schema", 1}, {"theorem", "additivity"}, {"k", k},
              {"n", n},      {"steps", steps},          {"seed", seed}};
  return emit_report(std::move(report), std::move(cases));
}

int verify_liepot(int k, int n, const std::string& theorem, int samples, int64_t seed,
                  int height) {
  if (seed < 0) {
    std::cerr << "--seed is required for random sampling\n";
    return 2;
  }
  GrassContext ctx(k, n);
  Rng root(static_cast<uint64_t>(seed));
  std::vector<Case> cases;
  for (int t = 0; t < samples; ++t) {
    char key[32];
    std::snprintf(key, sizeof key, "sample=%04d", t);
    Rng child = root.split(static_cast<uint64_t>(t));
    Matrix<Rational> params = random_fact_params(ctx, child, height);
    bool ok;
    std::string detail;
    if (theorem == "eistar") {
      ok = verify_eistar(ctx, params);
      if (!ok) detail = "character identities fail at params " + matrix_json(params).dump();
    } else {
      Rational q(child.nonzero_int(height));
      try {
        ok = compare_F_W(ctx, params, q);
        if (!ok)
          detail = "F != W at q=" + q.str() + " params " + matrix_json(params).dump();
      } catch (const std::domain_error& e) {
        ok = false;
        detail = e.what();
      }
    }
    cases.push_back({key, ok, detail});
  }
  json report{{"schema", 1}, {"theorem", theorem}, {"k", k},
              {"n", n},      {"samples", samples}, {"seed", seed}};
  return emit_report(std::move(report), std::move(cases));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the quantum connection of a Grassmannian and its "
               "Landau-Ginzburg models"};
  app.require_subcommand(1);
  int k = 0, n = 0;

  auto add_kn = [&](CLI::App* c) {
    c->add_option("--k", k, "columns of the partition rectangle")->required();
    c->add_option("--n", n, "ambient dimension")->required();
  };
  auto check_kn = [&]() {
    if (1 <= k && k < n) return true;
    std::cerr << "need 1 <= k < n\n";
    return false;
  };

  auto* conn = app.add_subcommand("connection", "matrix of the connection in one direction");
  std::string dir = "q", entries = "text";
  add_kn(conn);
  conn->add_option("--dir", dir, "direction, q or z")->check(CLI::IsMember({"q", "z"}));
  conn->add_option("--entries", entries, "text strings or structured term lists")
      ->check(CLI::IsMember({"text", "terms"}));

  auto* sup = app.add_subcommand("superpotential", "evaluate W exactly at a rational point");
  std::string point_file, qstr = "1";
  add_kn(sup);
  sup->add_option("--point", point_file, "JSON file: {rows, cols, entries row-major}")
      ->required();
  sup->add_option("--q", qstr, "rational value of q");

  auto* ase = app.add_subcommand("aseries", "two-point descendent series of the small J-function");
  int order = 2;
  std::string method = "both";
  add_kn(ase);
  ase->add_option("--order", order, "truncation order in q")->check(CLI::NonNegativeNumber);
  ase->add_option("--method", method, "closed, constterm, or both")
      ->check(CLI::IsMember({"closed", "constterm", "both"}));

  auto* clu = app.add_subcommand("cluster", "cluster seed operations");
  auto* walk = clu->add_subcommand("walk", "random mutation walk with per-step checks");
  int steps = 20, matrices = 3;
  int64_t seed = -1;
  std::vector<std::string> checks;
  add_kn(walk);
  walk->add_option("--steps", steps, "number of mutations")->check(CLI::NonNegativeNumber);
  walk->add_option("--seed", seed, "RNG seed")->required();
  walk->add_option("--check", checks, "ws, exchange, additivity (repeatable)")
      ->check(CLI::IsMember({"ws", "exchange", "additivity"}));
  walk->add_option("--matrices", matrices, "random matrices per exchange check");
  int height = 9;
  walk->add_option("--height", height, "entry bound for random matrices")
      ->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "verify one identity family, machine-readable report");
  std::string theorem, mode = "auto";
  int samples = 100, points = 2, vsteps = 20;
  int64_t vseed = -1;
  add_kn(ver);
  ver->add_option("--theorem", theorem, "main, action, sum, boundary, boundary-sum, additivity, "
                                        "eistar, fw")
      ->required()
      ->check(CLI::IsMember(
          {"main", "action", "sum", "boundary", "boundary-sum", "additivity", "eistar", "fw"}));
  ver->add_option("--mode", mode, "symbolic or point (default picks by chart size)")
      ->check(CLI::IsMember({"auto", "symbolic", "point"}));
  ver->add_option("--samples", samples, "random samples for eistar/fw");
  ver->add_option("--points", points, "exact random points per case in point mode");
  ver->add_option("--steps", vsteps, "walk length for additivity");
  ver->add_option("--seed", vseed, "RNG seed (required when sampling)");
  int vheight = 9;
  ver->add_option("--height", vheight, "entry bound for random parameters")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!check_kn()) return 2;

  try {
    if (conn->parsed()) return run_connection(k, n, dir, entries == "terms");
    if (sup->parsed()) return run_superpotential(k, n, point_file, qstr);
    if (ase->parsed()) return run_aseries(k, n, order, method);
    if (clu->parsed()) {
      if (!walk->parsed()) {
        std::cerr << "cluster requires the walk subcommand\n";
        return 2;
      }
      return run_walk(k, n, steps, static_cast<uint64_t>(seed), checks, matrices, height);
    }
    if (ver->parsed()) {
      if (theorem == "main") return verify_main_thm(k, n);
      if (theorem == "action" || theorem == "sum")
        return verify_action_or_sum(k, n, theorem, mode, points, vseed);
      if (theorem == "boundary") return verify_boundary(k, n, false);
      if (theorem == "boundary-sum") return verify_boundary(k, n, true);
      if (theorem == "additivity") return verify_additivity(k, n, vsteps, vseed);
      return verify_liepot(k, n, theorem, samples, vseed, vheight);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
