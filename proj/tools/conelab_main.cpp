// conelab: build the structured generator on H_n(D), verify cross-positivity,
// exponentiate semigroup orbits, and run the indecomposability machinery.
// JSON reports go to stdout, a human summary to stderr.
// Exit codes: 0 pass, 1 check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conelab/json_io.hpp"
#include "conelab/version.hpp"

namespace {

using namespace conelab;

json config_json(int n, const std::string& alg, const std::string& mode, std::size_t samples,
                 std::uint64_t seed, double eps) {
  return json{{"n", n},         {"algebra", alg}, {"mode", mode},
              {"samples", samples}, {"seed", seed},   {"eps", eps}};
}

void emit(const json& report, const std::string& summary, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << std::endl;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << report.dump(2) << std::endl;
  }
  std::cerr << summary << std::endl;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
  return grid;
}

int run(int argc, char** argv) {
  CLI::App app{"exotic cross-positive generators on symmetric cones"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int n = 3;
  std::string algebra = "R";
  std::string mode = "sampled";
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double eps = 1e-9;
  std::string out_path;
  std::string in_path;
  std::string t_grid = "0,0.1,1,10";
  std::string x0_spec = "identity";
  std::string space = "H3O";
  std::size_t pairs = 1000;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--n", n, "matrix size (>= 3)");
    cmd->add_option("--algebra", algebra, "R, C, H or O");
    if (with_mode) cmd->add_option("--mode", mode);
    cmd->add_option("--samples", samples, "sample budget");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--eps", eps, "pass tolerance");
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  CLI::App* c_build = app.add_subcommand("build", "emit the generator as an operator matrix");
  add_common(c_build, false);

  CLI::App* c_verify = app.add_subcommand("verify", "verify cross-positivity");
  add_common(c_verify, true);

  CLI::App* c_exp = app.add_subcommand("exp", "semigroup orbit table e^{tB} X0");
  add_common(c_exp, false);
  c_exp->add_option("--t-grid", t_grid, "comma-separated nonnegative increasing times");
  c_exp->add_option("--x0", x0_spec, "identity, random:<k>, or a hermitian-matrix JSON file");

  CLI::App* c_lie = app.add_subcommand("lie-check", "orthogonal-pair zero test for group membership");
  add_common(c_lie, false);
  c_lie->add_option("--in", in_path, "operator JSON (defaults to the built generator)");

  CLI::App* c_dec = app.add_subcommand("decompose", "indecomposability certificate or LP falsifier");
  add_common(c_dec, true);
  c_dec->add_option("--pairs", pairs, "random LP pairs");

  CLI::App* c_dims = app.add_subcommand("dims", "derivation algebra dimensions");
  c_dims->add_option("--space", space, "O or H3O");
  c_dims->add_option("--out", out_path, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Algebra alg = algebra_from_name(algebra);

  if (app.got_subcommand(c_build)) {
    const ExoticGenerator B = ExoticGenerator::build(n, alg);
    json rep = to_json(B.as_cone_map());
    rep["p"] = B.p_exact().str();
    rep["q"] = B.q_exact().str();
    rep["config"] = config_json(n, algebra, "build", 0, 0, 0);
    rep["version"] = kVersion;
    std::ostringstream sum;
    sum << "built generator on H_" << n << "(" << algebra << "): p = " << B.p_exact().str()
        << ", q = " << B.q_exact().str();
    emit(rep, sum.str(), out_path);
    return 0;
  }

  if (app.got_subcommand(c_verify)) {
    const ExoticGenerator B = ExoticGenerator::build(n, alg);
    const VerifyMode m = (mode == "exact") ? VerifyMode::Exact : VerifyMode::Sampled;
    if (mode != "exact" && mode != "sampled") throw CLI::ValidationError("--mode", "sampled|exact");
    VerifyReport r = verify_cross_positive(B, m, samples, seed, eps);
    json rep = to_json(r);
    rep["config"] = config_json(n, algebra, mode, samples, seed, eps);
    std::ostringstream sum;
    sum << "cross-positivity (" << mode << "): min = " << r.min_value << ", "
        << (r.pass ? "PASS" : "FAIL");
    emit(rep, sum.str(), out_path);
    return r.pass ? 0 : 1;
  }

  if (app.got_subcommand(c_exp)) {
    const ExoticGenerator B = ExoticGenerator::build(n, alg);
    HermitianMatrix<double> X0 = HermitianMatrix<double>::identity(alg, n);
    if (x0_spec.rfind("random:", 0) == 0) {
      // Jordan square of a random hermitian matrix: a guaranteed cone point.
      const std::uint64_t k = std::stoull(x0_spec.substr(7));
      SampleRng rng(k, 0);
      HermitianMatrix<double> Y(alg, n);
      for (int l = 0; l < n; ++l) {
        Y.set_entry(l, l, HurwitzScalar<double>::real(alg, rng.gaussian()));
        for (int m2 = l + 1; m2 < n; ++m2) {
          HurwitzScalar<double> x(alg);
          for (int k2 = 0; k2 < algebra_dim(alg); ++k2) x[k2] = rng.gaussian();
          Y.set_entry(l, m2, x);
        }
      }
      X0 = jordan_product(Y, Y);
    } else if (x0_spec != "identity") {
      std::ifstream f(x0_spec);
      if (!f) throw std::runtime_error("cannot open X0 file: " + x0_spec);
      json j;
      f >> j;
      X0 = hermitian_from_json(j);
    }
    const auto grid = parse_grid(t_grid);
    const auto orbit = semigroup_orbit(B, X0, grid);
    json points = json::array();
    bool all_member = true;
    for (const auto& p : orbit) {
      points.push_back(json{{"t", p.t}, {"min_eigenvalue", p.min_eigenvalue},
                            {"cone_member", p.cone_member}});
      all_member = all_member && p.cone_member;
    }
    json rep{{"check", "semigroup_orbit"},
             {"config", config_json(n, algebra, "exp", 0, seed, eps)},
             {"x0", x0_spec},
             {"points", points},
             {"pass", all_member},
             {"version", kVersion}};
    std::ostringstream sum;
    sum << "orbit over " << grid.size() << " times: " << (all_member ? "all in cone" : "LEFT CONE");
    emit(rep, sum.str(), out_path);
    return all_member ? 0 : 1;
  }

  if (app.got_subcommand(c_lie)) {
    ConeMap A = [&]() {
      if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open operator file: " + in_path);
        json j;
        f >> j;
        return cone_map_from_json(j);
      }
      return ExoticGenerator::build(n, alg).as_cone_map();
    }();
    const SampleCheckReport r = check_lie_condition(A, samples, seed, eps);
    json rep = to_json(r);
    rep["config"] = config_json(A.n(), algebra_name(A.algebra()), "lie-check", samples, seed, eps);
    std::ostringstream sum;
    sum << "lie condition: max |value| = " << r.max_abs << ", " << (r.pass ? "PASS" : "FAIL");
    emit(rep, sum.str(), out_path);
    return r.pass ? 0 : 1;
  }

  if (app.got_subcommand(c_dec)) {
    if (c_dec->count("--mode") == 0) mode = "certificate";
    if (mode == "certificate") {
      const Certificate cert = indecomposability_certificate(n, alg);
      const bool replay = replay_certificate(cert);
      json rep = to_json(cert);
      rep["replay_ok"] = replay;
      rep["config"] = config_json(n, algebra, "certificate", 0, seed, eps);
      std::ostringstream sum;
      if (cert.inconclusive)
        sum << "certificate: inconclusive (residual 0)";
      else
        sum << "certificate: residual " << cert.residual.str() << ", "
            << (cert.indecomposable ? "INDECOMPOSABLE" : "no verdict") << ", replay "
            << (replay ? "ok" : "FAILED");
      emit(rep, sum.str(), out_path);
      return (cert.indecomposable && replay) ? 0 : 1;
    }
    if (mode != "lp") throw CLI::ValidationError("--mode", "certificate|lp");
    const ExoticGenerator B = ExoticGenerator::build(n, alg);
    const JordanOp apply_B = [&B](const HermQ& X) { return B.apply(X); };
    std::vector<LpPair> all = structured_pair_family(n, alg);
    const auto rand_pairs = sample_lp_pairs(n, alg, pairs, seed);
    all.insert(all.end(), rand_pairs.begin(), rand_pairs.end());
    const LpReport r = attempt_decomposition_lp(apply_B, n, alg, all, true);
    json rep = to_json(r);
    rep["config"] = config_json(n, algebra, "lp", pairs, seed, eps);
    std::ostringstream sum;
    sum << "LP falsifier: "
        << (r.status == LpReport::Status::Infeasible
                ? "infeasible (no Lie part works)"
                : r.status == LpReport::Status::Feasible ? "feasible" : "numerical failure")
        << ", replay " << (r.replay_ok ? "ok" : "FAILED");
    emit(rep, sum.str(), out_path);
    return (r.status == LpReport::Status::Infeasible && r.replay_ok) ? 0 : 1;
  }

  if (app.got_subcommand(c_dims)) {
    int dim = 0;
    if (space == "O")
      dim = derivation_dimension(DerivationSpace::Octonions);
    else if (space == "H3O")
      dim = derivation_dimension(DerivationSpace::AlbertAlgebra);
    else
      throw CLI::ValidationError("--space", "O|H3O");
    json rep{{"check", "derivation_dimension"},
             {"space", space},
             {"dimension", dim},
             {"version", kVersion}};
    std::ostringstream sum;
    sum << "dim Der(" << space << ") = " << dim;
    emit(rep, sum.str(), out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
