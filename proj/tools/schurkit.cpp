// schurkit command-line front end.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schurkit/schurkit.hpp"

namespace {

using namespace schurkit;

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int d = 0;
  std::string lambda;
  std::string mu;
  std::string mu2;
  std::string json_path;
  std::string target = "report";
  int threads = 1;
  int trials = 20;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::size_t max_dim = 4096;
};

/// Writes JSON to the --json target; "-" means stdout.
template <class Writer>
void emit_json(const Options& opt, Writer&& write) {
  if (opt.json_path.empty()) return;
  if (opt.json_path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(opt.json_path);
  if (!out) throw ArgumentError("cannot open '" + opt.json_path + "' for writing");
  write(out);
}

bool text_output(const Options& opt) { return opt.json_path != "-"; }

std::string padded(const Partition& p, int d) {
  std::string out = "(";
  const auto parts = p.padded(static_cast<std::size_t>(std::max(d, 1)));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts[k]);
  }
  return out + ")";
}

void print_matrix(std::ostream& os, const CMatrix& m) {
  const bool real = m.imag().cwiseAbs().maxCoeff() == 0.0;
  os << std::fixed << std::setprecision(6);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (real) {
        os << std::setw(10) << m(r, c).real();
      } else {
        os << " (" << m(r, c).real() << "," << m(r, c).imag() << ")";
      }
    }
    os << '\n';
  }
  os << std::defaultfloat;
}

Partition parse_lambda(const std::string& text, int d) {
  auto lambda = Partition::parse(text);
  if (d > 0 && lambda.length() > static_cast<std::size_t>(d)) {
    throw ArgumentError("(" + lambda.to_string() + ") has more than d = " + std::to_string(d) + " rows");
  }
  return lambda;
}

int run_dims(const Options& opt) {
  const auto parts = enumerate_partitions(opt.d, opt.n);
  BigInt total = 0;
  std::vector<std::pair<BigInt, BigInt>> dims;
  for (const auto& lambda : parts) {
    dims.emplace_back(dim_q(lambda, opt.d), dim_p(lambda));
    total += dims.back().first * dims.back().second;
  }
  if (text_output(opt)) {
    std::cout << std::left << std::setw(24) << "lambda" << std::setw(16) << "dim_Q" << "dim_P\n";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::cout << std::setw(24) << padded(parts[k], opt.d) << std::setw(16) << dims[k].first.str()
                << dims[k].second.str() << '\n';
    }
    std::cout << "sum dim_Q * dim_P = " << total.str() << '\n';
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"n\": " << opt.n << ", \"d\": " << opt.d << ", \"rows\": [";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) os << ", ";
      os << "{\"lambda\": ";
      json::write_string(os, parts[k].to_string());
      os << ", \"dim_q\": " << dims[k].first.str() << ", \"dim_p\": " << dims[k].second.str() << '}';
    }
    os << "], \"total\": " << total.str() << "}\n";
  });
  return kExitOk;
}

int run_partitions(const Options& opt) {
  const auto parts = enumerate_partitions(opt.d, opt.n);
  if (text_output(opt)) {
    for (const auto& p : parts) std::cout << padded(p, opt.d) << '\n';
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"n\": " << opt.n << ", \"d\": " << opt.d << ", \"partitions\": [";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) os << ", ";
      json::write_string(os, parts[k].to_string());
    }
    os << "]}\n";
  });
  return kExitOk;
}

int run_gz(const Options& opt) {
  const auto lambda = parse_lambda(opt.lambda, opt.d);
  const auto patterns = enumerate_gz(lambda, opt.d);
  if (text_output(opt)) {
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      std::cout << std::setw(6) << k << "  " << patterns[k].to_string() << "   "
                << gz_to_ssyt(patterns[k]).to_string() << '\n';
    }
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"lambda\": ";
    json::write_string(os, lambda.to_string());
    os << ", \"d\": " << opt.d << ", \"patterns\": [";
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      if (k) os << ",\n  ";
      os << "{\"index\": " << k << ", \"gz\": ";
      json::write_string(os, patterns[k].to_string());
      os << ", \"ssyt\": ";
      json::write_string(os, gz_to_ssyt(patterns[k]).to_string());
      os << '}';
    }
    os << "]}\n";
  });
  return kExitOk;
}

int run_paths(const Options& opt) {
  const auto lambda = parse_lambda(opt.lambda, 0);
  if (lambda.empty()) throw ArgumentError("paths: lambda must be nonempty");
  const auto paths = enumerate_paths(lambda);
  if (text_output(opt)) {
    for (const auto& p : paths) std::cout << std::setw(8) << rank_path(p).str() << "  " << p.to_string() << '\n';
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"lambda\": ";
    json::write_string(os, lambda.to_string());
    os << ", \"paths\": [";
    for (std::size_t k = 0; k < paths.size(); ++k) {
      if (k) os << ",\n  ";
      os << "{\"rank\": " << rank_path(paths[k]).str() << ", \"path\": ";
      json::write_string(os, paths[k].to_string());
      os << '}';
    }
    os << "]}\n";
  });
  return kExitOk;
}

int run_wigner(const Options& opt) {
  const auto mu = parse_lambda(opt.mu, opt.d);
  const auto mu2 = Partition::parse(opt.mu2);
  const auto w = reduced_wigner_matrix(mu, mu2, opt.d);
  if (text_output(opt)) {
    std::cout << "rows j = 1.." << opt.d << ", columns j' = 0.." << opt.d - 1 << '\n';
    print_matrix(std::cout, w.cast<Complex>());
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"mu\": ";
    json::write_string(os, mu.to_string());
    os << ", \"mu2\": ";
    json::write_string(os, mu2.to_string());
    os << ", \"d\": " << opt.d << ", \"matrix\": ";
    json::write_real_matrix(os, w);
    os << "}\n";
  });
  return kExitOk;
}

int run_cg(const Options& opt) {
  const auto lambda = parse_lambda(opt.lambda, opt.d);
  const auto block = cg_block(lambda, opt.d, opt.threads);
  if (text_output(opt)) {
    std::cout << "cg block (" << lambda.to_string() << "), d = " << opt.d << ": " << block.matrix.rows()
              << " x " << block.matrix.cols() << ", unitarity residual " << unitarity_residual(block.matrix)
              << '\n';
    if (block.matrix.rows() <= 16) print_matrix(std::cout, block.matrix);
  }
  emit_json(opt, [&](std::ostream& os) { json::write_cg_block(os, block); });
  return kExitOk;
}

int run_schur(const Options& opt) {
  const auto schur = schur_unitary(opt.n, opt.d, SchurOptions{opt.threads, opt.max_dim});
  if (text_output(opt)) {
    std::cout << "Schur transform n = " << opt.n << ", d = " << opt.d << ": dimension "
              << schur.index.dimension() << ", unitarity residual " << unitarity_residual(schur.matrix)
              << '\n';
    if (schur.index.dimension() <= 16) {
      for (std::size_t r = 0; r < schur.index.dimension(); ++r) {
        const auto label = schur.index.label(r);
        std::cout << "  row " << r << ": lambda=(" << label.lambda.to_string() << ") q=" << label.q.to_string()
                  << " p=[" << label.p.to_string() << "]\n";
      }
      print_matrix(std::cout, schur.matrix);
    }
  }
  emit_json(opt, [&](std::ostream& os) { json::write_schur(os, schur); });
  return kExitOk;
}

int run_verify(const Options& opt) {
  const auto schur = schur_unitary(opt.n, opt.d, SchurOptions{opt.threads, opt.max_dim});
  const SchurConjugator conj(schur);
  std::mt19937_64 rng(opt.seed);

  const double unitarity = unitarity_residual(schur.matrix);
  double cg_unitarity = 0.0;
  for (int k = 0; k < opt.n; ++k) {
    for (const auto& lambda : enumerate_partitions(opt.d, k)) {
      cg_unitarity = std::max(cg_unitarity, unitarity_residual(cg_block(lambda, opt.d).matrix));
    }
  }
  double off_block = 0.0, factor = 0.0, perm_q = 0.0, character = 0.0;
  for (int t = 0; t < opt.trials; ++t) {
    const CMatrix u = haar_unitary(opt.d, rng);
    const auto s = Permutation::random(opt.n, rng);
    const CMatrix m = conj.conjugate(u, s);
    off_block = std::max(off_block, off_block_mass(schur.index, m));
    factor = std::max(factor, factorization_residual(schur.index, m));
    const CMatrix ms = conj.conjugate(s);
    off_block = std::max(off_block, off_block_mass(schur.index, ms));
    perm_q = std::max(perm_q, q_constancy_residual(schur.index, ms));

    const Eigen::ComplexEigenSolver<CMatrix> eig(u, false);
    std::vector<Complex> ev(eig.eigenvalues().data(), eig.eigenvalues().data() + opt.d);
    const CMatrix mu = conj.conjugate(u, Permutation::identity(opt.n));
    for (const auto& b : schur.index.blocks()) {
      const CMatrix q = detail::read_q_factor(schur.index, mu, b.lambda);
      character = std::max(character, std::abs(q.trace() - schur_polynomial(b.lambda, ev)));
    }
  }

  struct Line {
    const char* name;
    double value;
  };
  const std::vector<Line> lines{{"schur_unitarity", unitarity}, {"cg_unitarity", cg_unitarity},
                                {"off_block_mass", off_block},  {"factorization", factor},
                                {"perm_q_constancy", perm_q},  {"character", character}};
  bool pass = true;
  for (const auto& l : lines) pass = pass && l.value < opt.tol;
  if (text_output(opt)) {
    std::cout << "verify n = " << opt.n << ", d = " << opt.d << ", trials = " << opt.trials
              << ", seed = " << opt.seed << ", tol = " << opt.tol << '\n';
    for (const auto& l : lines) {
      std::cout << "  " << std::left << std::setw(20) << l.name << std::scientific << std::setprecision(3)
                << l.value << (l.value < opt.tol ? "  ok" : "  FAIL") << std::defaultfloat << '\n';
    }
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
  }
  emit_json(opt, [&](std::ostream& os) {
    os << "{\"n\": " << opt.n << ", \"d\": " << opt.d << ", \"trials\": " << opt.trials
       << ", \"seed\": " << opt.seed << ", \"tol\": ";
    json::write_number(os, opt.tol);
    for (const auto& l : lines) {
      os << ", \"" << l.name << "\": ";
      json::write_number(os, l.value);
    }
    os << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
  });
  if (!pass) throw VerificationFailure("verification residual above tolerance");
  return kExitOk;
}

int run_circuit(const Options& opt) {
  if (opt.target == "report") {
    const auto report = gate_count_report(opt.n, opt.d);
    if (text_output(opt)) {
      std::cout << "step  wigner_dim  control_pairs\n";
      for (const auto& s : report.steps) {
        std::cout << std::setw(4) << s.step << std::setw(12) << s.wigner_dimension << std::setw(15)
                  << s.control_pairs << '\n';
      }
      std::cout << "total " << report.total_control_pairs() << '\n';
    }
    emit_json(opt, [&](std::ostream& os) {
      os << "{\"n\": " << report.n << ", \"d\": " << report.d << ", \"steps\": [";
      for (std::size_t k = 0; k < report.steps.size(); ++k) {
        if (k) os << ", ";
        os << "{\"step\": " << report.steps[k].step << ", \"wigner_dim\": " << report.steps[k].wigner_dimension
           << ", \"control_pairs\": " << report.steps[k].control_pairs << '}';
      }
      os << "], \"total\": " << report.total_control_pairs() << "}\n";
    });
    return kExitOk;
  }

  CMatrix u;
  if (opt.target == "cg") {
    if (opt.lambda.empty()) throw ArgumentError("circuit --target cg needs --lambda");
    u = cg_block(parse_lambda(opt.lambda, opt.d), opt.d, opt.threads).matrix;
  } else {
    u = schur_unitary(opt.n, opt.d, SchurOptions{opt.threads, opt.max_dim}).matrix;
  }
  const auto gates = two_level_decompose(u, opt.tol);
  const double residual = (gates.replay() - u).cwiseAbs().maxCoeff();
  if (text_output(opt)) {
    std::cout << "size " << gates.size << ", rotations " << gates.rotation_count() << " (bound "
              << gates.size * (gates.size - 1) / 2 << "), phases " << gates.phase_count()
              << ", reconstruction residual " << residual << '\n';
  }
  emit_json(opt, [&](std::ostream& os) { json::write_gate_list(os, gates); });
  if (residual >= 10 * opt.tol) throw VerificationFailure("gate list does not reconstruct the unitary");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurkit: Schur transform, Clebsch-Gordan transforms and oracles"};
  app.require_subcommand(1);
  Options opt;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", opt.n, "number of tensor factors")->required()->check(CLI::Range(1, 64)); };
  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", opt.d, "local dimension")->required()->check(CLI::Range(1, 4096)); };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", opt.json_path, "write JSON to FILE ('-' for stdout)"); };
  auto add_threads = [&](CLI::App* sub) { sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256)); };
  auto add_max_dim = [&](CLI::App* sub) {
    sub->add_option("--max-dim", opt.max_dim, "largest d^n to materialise")->check(CLI::PositiveNumber);
  };

  auto* dims = app.add_subcommand("dims", "dim_Q and dim_P over I_{d,n}");
  add_n(dims);
  add_d(dims);
  add_json(dims);

  auto* partitions = app.add_subcommand("partitions", "list I_{d,n} in canonical order");
  add_n(partitions);
  add_d(partitions);
  add_json(partitions);

  auto* gz = app.add_subcommand("gz", "Gel'fand-Zetlin patterns of lambda");
  gz->add_option("--lambda", opt.lambda, "partition, e.g. 2,1")->required();
  add_d(gz);
  add_json(gz);

  auto* paths = app.add_subcommand("paths", "Young-Yamanouchi paths of lambda with ranks");
  paths->add_option("--lambda", opt.lambda, "partition, e.g. 2,1")->required();
  add_json(paths);

  auto* wigner = app.add_subcommand("wigner", "reduced Wigner matrix for (mu, mu'')");
  wigner->add_option("--mu", opt.mu, "U_d irrep mu")->required();
  wigner->add_option("--mu2", opt.mu2, "U_{d-1} label mu''")->required();
  add_d(wigner);
  add_json(wigner);

  auto* cg = app.add_subcommand("cg", "dense CG block for lambda (x) (1)");
  cg->add_option("--lambda", opt.lambda, "partition")->required();
  add_d(cg);
  add_json(cg);
  add_threads(cg);

  auto* schur = app.add_subcommand("schur", "full Schur transform");
  add_n(schur);
  add_d(schur);
  add_json(schur);
  add_threads(schur);
  add_max_dim(schur);

  auto* verify = app.add_subcommand("verify", "residual report against the oracles");
  add_n(verify);
  add_d(verify);
  add_json(verify);
  add_threads(verify);
  add_max_dim(verify);
  verify->add_option("--trials", opt.trials, "random (U, s) pairs")->check(CLI::Range(1, 100000));
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);

  auto* circuit = app.add_subcommand("circuit", "two-level gate synthesis and gate-count report");
  circuit->add_option("--target", opt.target, "report | cg | schur")
      ->check(CLI::IsMember({"report", "cg", "schur"}));
  circuit->add_option("--n", opt.n, "number of tensor factors")->check(CLI::Range(1, 64));
  add_d(circuit);
  circuit->add_option("--lambda", opt.lambda, "partition (target cg)");
  add_json(circuit);
  add_threads(circuit);
  add_max_dim(circuit);
  circuit->add_option("--tol", opt.tol, "unitarity tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "schurkit: " << e.what() << '\n';
    return kExitArgument;
  }

  try {
    if (circuit->parsed() && opt.target != "cg" && opt.n < 1) {
      throw ArgumentError("circuit --target " + opt.target + " needs --n");
    }
    if (dims->parsed()) return run_dims(opt);
    if (partitions->parsed()) return run_partitions(opt);
    if (gz->parsed()) return run_gz(opt);
    if (paths->parsed()) return run_paths(opt);
    if (wigner->parsed()) return run_wigner(opt);
    if (cg->parsed()) return run_cg(opt);
    if (schur->parsed()) return run_schur(opt);
    if (verify->parsed()) return run_verify(opt);
    if (circuit->parsed()) return run_circuit(opt);
  } catch (const ArgumentError& e) {
    std::cerr << "schurkit: argument error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const ResourceError& e) {
    std::cerr << "schurkit: resource bound: " << e.what() << '\n';
    return kExitResource;
  } catch (const VerificationFailure& e) {
    std::cerr << "schurkit: verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ConsistencyError& e) {
    std::cerr << "schurkit: consistency check failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "schurkit: " << e.what() << '\n';
    return 1;
  }
  return kExitArgument;
}
