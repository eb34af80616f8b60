#include "dagger/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <vector>

#include "dagger/io.hpp"
#include "dagger/linalg.hpp"

namespace dagger {

const char* to_string(AxiomId id) {
  switch (id) {
    case AxiomId::invol_double:
      return "invol_double";
    case AxiomId::invol_scalar:
      return "invol_scalar";
    case AxiomId::invol_sum:
      return "invol_sum";
    case AxiomId::invol_product:
      return "invol_product";
    case AxiomId::norm_adjoint:
      return "norm_adjoint";
    case AxiomId::norm_cstar:
      return "norm_cstar";
    case AxiomId::leibniz:
      return "leibniz";
    case AxiomId::linearity:
      return "linearity";
  }
  return "unknown";
}

namespace {

constexpr std::array<AxiomId, 8> kAllAxioms = {
    AxiomId::invol_double, AxiomId::invol_scalar, AxiomId::invol_sum,
    AxiomId::invol_product, AxiomId::norm_adjoint, AxiomId::norm_cstar,
    AxiomId::leibniz,       AxiomId::linearity,
};

struct Residual {
  double raw = 0.0;
  double scale = 1.0;

  double normalized() const { return raw / std::max(1.0, scale); }
  bool passes(const ToleranceConfig& tol) const {
    return raw <= tol.abs_tol || normalized() <= tol.rel_tol;
  }
};

std::array<Residual, 4> involution_residuals(const Operator& a,
                                             const Operator& b,
                                             Complex lambda) {
  require_square(a, "check_involution");
  require_same_shape(a, b, "check_involution");
  const double na = cstar_norm(a);
  const double nb = cstar_norm(b);
  std::array<Residual, 4> r;
  r[0] = {cstar_norm(adjoint(adjoint(a)) - a), na};
  r[1] = {cstar_norm(adjoint(lambda * a) - std::conj(lambda) * adjoint(a)),
          std::abs(lambda) * na};
  r[2] = {cstar_norm(adjoint(a + b) - (adjoint(a) + adjoint(b))), na + nb};
  r[3] = {cstar_norm(adjoint(a * b) - adjoint(b) * adjoint(a)), na * nb};
  return r;
}

std::array<Residual, 2> cstar_residuals(const Operator& a, NormKind kind) {
  const auto norm = [kind](const Operator& x) {
    return kind == NormKind::cstar ? cstar_norm(x) : spectral_radius(x);
  };
  const double n = norm(a);
  const double n_adj = norm(adjoint(a));
  const double n_gram = norm(adjoint(a) * a);
  const double scale = std::max(1.0, n * n);
  return {Residual{std::abs(n_adj - n), scale},
          Residual{std::abs(n_gram - n * n), scale}};
}

io::json operator_witness(const char* key, const Operator& a) {
  io::json j;
  j[key] = io::operator_to_json(a);
  return j;
}

AxiomReport make_report(AxiomId id, const Residual& r,
                        const ToleranceConfig& tol, io::json witness_inputs,
                        long trials = 1, std::uint64_t seed = 0) {
  AxiomReport report;
  report.axiom_id = id;
  report.passed = r.passes(tol);
  report.max_residual = r.normalized();
  report.trials = trials;
  report.seed = seed;
  if (!report.passed) {
    witness_inputs["residual"] = report.max_residual;
    report.witness = witness_inputs.dump();
  }
  return report;
}

}  // namespace

std::vector<AxiomReport> check_involution(const Operator& a, const Operator& b,
                                          Complex lambda,
                                          const ToleranceConfig& tol) {
  validate(tol);
  const auto residuals = involution_residuals(a, b, lambda);
  io::json inputs;
  inputs["a"] = io::operator_to_json(a);
  inputs["b"] = io::operator_to_json(b);
  inputs["lambda"] = {lambda.real(), lambda.imag()};
  const std::array<AxiomId, 4> ids = {AxiomId::invol_double,
                                      AxiomId::invol_scalar, AxiomId::invol_sum,
                                      AxiomId::invol_product};
  std::vector<AxiomReport> out;
  out.reserve(4);
  for (std::size_t k = 0; k < 4; ++k) {
    out.push_back(make_report(ids[k], residuals[k], tol, inputs));
  }
  return out;
}

std::vector<AxiomReport> check_cstar_identity(const Operator& a,
                                              const ToleranceConfig& tol,
                                              NormKind norm) {
  validate(tol);
  require_square(a, "check_cstar_identity");
  require_finite(a, "check_cstar_identity");
  const auto residuals = cstar_residuals(a, norm);
  std::vector<AxiomReport> out;
  out.push_back(make_report(AxiomId::norm_adjoint, residuals[0], tol,
                            operator_witness("a", a)));
  out.push_back(make_report(AxiomId::norm_cstar, residuals[1], tol,
                            operator_witness("a", a)));
  return out;
}

AxiomReport check_leibniz(const Derivation& delta, const Operator& a,
                          const Operator& b, const ToleranceConfig& tol) {
  validate(tol);
  const double r = leibniz_residual(delta, a, b);
  io::json inputs;
  inputs["a"] = io::operator_to_json(a);
  inputs["b"] = io::operator_to_json(b);
  return make_report(AxiomId::leibniz, Residual{r, 1.0}, tol, inputs);
}

AxiomReport check_linearity(const Derivation& delta, const Operator& a,
                            const Operator& b, Complex alpha, Complex beta,
                            const ToleranceConfig& tol) {
  validate(tol);
  const double r = linearity_residual(delta, a, b, alpha, beta);
  io::json inputs;
  inputs["a"] = io::operator_to_json(a);
  inputs["b"] = io::operator_to_json(b);
  inputs["alpha"] = {alpha.real(), alpha.imag()};
  inputs["beta"] = {beta.real(), beta.imag()};
  return make_report(AxiomId::linearity, Residual{r, 1.0}, tol, inputs);
}

namespace {

struct TrialInputs {
  Operator a;
  Operator b;
  Complex lambda;
  Operator t;
  Complex alpha;
  Complex beta;
};

TrialInputs draw_trial(const SweepConfig& cfg, long k) {
  std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(k));
  TrialInputs in;
  in.a = draw_operator(cfg.spec, rng);
  in.b = draw_operator(cfg.spec, rng);
  in.lambda = standard_complex_gaussian(rng);
  in.t = draw_operator(cfg.spec, rng);
  in.alpha = standard_complex_gaussian(rng);
  in.beta = standard_complex_gaussian(rng);
  return in;
}

std::array<Residual, 8> trial_residuals(const SweepConfig& cfg, long k) {
  const TrialInputs in = draw_trial(cfg, k);
  const Derivation delta = inner_derivation(in.t, 1.0);
  const auto invol = involution_residuals(in.a, in.b, in.lambda);
  const auto norms = cstar_residuals(in.a, NormKind::cstar);
  std::array<Residual, 8> r;
  r[0] = invol[0];
  r[1] = invol[1];
  r[2] = invol[2];
  r[3] = invol[3];
  r[4] = norms[0];
  r[5] = norms[1];
  r[6] = {leibniz_residual(delta, in.a, in.b), 1.0};
  r[7] = {linearity_residual(delta, in.a, in.b, in.alpha, in.beta), 1.0};
  return r;
}

int resolve_thread_count(int requested, long work_items) {
  long threads = requested > 0
                     ? requested
                     : static_cast<long>(std::thread::hardware_concurrency());
  threads = std::max(1L, std::min(threads, work_items));
  return static_cast<int>(threads);
}

}  // namespace

std::vector<AxiomReport> run_axiom_sweep(const SweepConfig& cfg) {
  validate(cfg.spec);
  validate(cfg.tol);
  if (cfg.trials < 1) {
    throw InvalidArgumentError("run_axiom_sweep: trials must be >= 1");
  }

  std::vector<std::array<Residual, 8>> results(cfg.trials);
  const int threads = resolve_thread_count(cfg.max_threads, cfg.trials);
  if (threads == 1) {
    for (long k = 0; k < cfg.trials; ++k) {
      results[k] = trial_residuals(cfg, k);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid] {
        for (long k = tid; k < cfg.trials; k += threads) {
          results[k] = trial_residuals(cfg, k);
        }
      });
    }
    for (auto& worker : pool) {
      worker.join();
    }
  }

  std::vector<AxiomReport> reports;
  reports.reserve(kAllAxioms.size());
  for (std::size_t axiom = 0; axiom < kAllAxioms.size(); ++axiom) {
    AxiomReport report;
    report.axiom_id = kAllAxioms[axiom];
    report.passed = true;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    long worst_trial = 0;
    for (long k = 0; k < cfg.trials; ++k) {
      const Residual& r = results[k][axiom];
      if (r.normalized() > report.max_residual) {
        report.max_residual = r.normalized();
        worst_trial = k;
      }
      report.passed = report.passed && r.passes(cfg.tol);
    }
    if (!report.passed) {
      // Regenerate the worst trial's inputs; trials are pure in (spec, seed).
      const TrialInputs in = draw_trial(cfg, worst_trial);
      io::json witness;
      witness["trial"] = worst_trial;
      witness["seed"] = cfg.seed + static_cast<std::uint64_t>(worst_trial);
      witness["a"] = io::operator_to_json(in.a);
      witness["b"] = io::operator_to_json(in.b);
      witness["lambda"] = {in.lambda.real(), in.lambda.imag()};
      witness["t"] = io::operator_to_json(in.t);
      witness["alpha"] = {in.alpha.real(), in.alpha.imag()};
      witness["beta"] = {in.beta.real(), in.beta.imag()};
      witness["residual"] = report.max_residual;
      report.witness = witness.dump();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace dagger
