#include "dagger/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace dagger {

namespace {

void require_strictly_increasing(std::span<const double> values,
                                 const char* context) {
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    if (!(values[k] < values[k + 1])) {
      throw InvalidArgumentError(std::string(context) +
                                 ": flow parameters must be strictly increasing");
    }
  }
}

}  // namespace

Operator heisenberg_evolve(const Operator& f, const Operator& t, double s,
                           double hbar) {
  require_square(f, "heisenberg_evolve");
  require_finite(f, "heisenberg_evolve");
  require_same_shape(f, t, "heisenberg_evolve");
  const Operator u = evolution_unitary(t, s, hbar);
  if (s == 0.0) {
    return f;
  }
  return u.adjoint() * f * u;
}

EvolutionTrace observable_flow_trace(const Operator& f, const Operator& t,
                                     std::span<const double> s_values,
                                     double hbar) {
  require_square(f, "observable_flow_trace");
  require_finite(f, "observable_flow_trace");
  require_same_shape(f, t, "observable_flow_trace");
  require_strictly_increasing(s_values, "observable_flow_trace");
  const EigenDecomposition eig = hermitian_eig(t);

  EvolutionTrace trace;
  trace.samples.reserve(s_values.size());
  for (double s : s_values) {
    EvolutionSample sample;
    sample.s = s;
    if (s == 0.0) {
      sample.observable = f;
    } else {
      const Operator u = evolution_unitary(eig, s, hbar);
      sample.observable = u.adjoint() * f * u;
    }
    sample.deviation_from_initial = cstar_norm(sample.observable - f);
    trace.samples.push_back(std::move(sample));
  }
  return trace;
}

FlowDerivativeReport flow_derivative_check(const Operator& f,
                                           const Operator& t, double hbar,
                                           double h) {
  require_same_shape(f, t, "flow_derivative_check");
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgumentError("flow_derivative_check: step must be positive and finite");
  }
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("flow_derivative_check: hbar must be positive");
  }
  const Operator expected = commutator(f, t) / Complex(0.0, hbar);
  const auto residual_at = [&](double step) {
    const Operator forward = heisenberg_evolve(f, t, step, hbar);
    const Operator backward = heisenberg_evolve(f, t, -step, hbar);
    return cstar_norm((forward - backward) / (2.0 * step) - expected);
  };
  FlowDerivativeReport report;
  report.step = h;
  report.residual = residual_at(h);
  report.residual_half = residual_at(0.5 * h);
  report.observed_order = std::log2(report.residual / report.residual_half);
  return report;
}

EvolutionTrace conserved_quantity_check(const Operator& t,
                                        std::span<const double> s_values,
                                        double hbar) {
  return observable_flow_trace(t, t, s_values, hbar);
}

TimeOperatorFlow time_operator_flow(const Operator& t_op, const Operator& t,
                                    std::span<const double> s_values,
                                    double hbar) {
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("time_operator_flow: hbar must be positive");
  }
  TimeOperatorFlow flow;
  flow.trace = observable_flow_trace(t_op, t, s_values, hbar);
  flow.instantaneous_rate = commutator(t_op, t) / Complex(0.0, hbar);
  return flow;
}

Operator translation_generator(const TranslationParams& params,
                               const Operator& p, const Operator& h) {
  if (!std::isfinite(params.eps_time) || !std::isfinite(params.eps_space)) {
    throw InvalidArgumentError("translation_generator: parameters must be finite");
  }
  require_square(p, "translation_generator");
  require_same_shape(p, h, "translation_generator");
  require_finite(p, "translation_generator");
  require_finite(h, "translation_generator");
  for (const Operator* op : {&p, &h}) {
    const double defect = hermiticity_defect(*op);
    const double gate = default_hermiticity_tol(*op);
    if (defect > gate) {
      throw NotHermitianError(
          "translation_generator: input operator is not Hermitian", defect);
    }
  }
  return params.eps_space * p - params.eps_time * h;
}

SchrodingerSolution generalized_schrodinger(const Operator& t) {
  const EigenDecomposition eig = hermitian_eig(t);
  SchrodingerSolution solution;
  solution.eigenvalues = eig.eigenvalues;
  solution.eigenkets = eig.eigenvectors;
  solution.residuals.resize(eig.source_dim);
  for (Eigen::Index n = 0; n < eig.source_dim; ++n) {
    solution.residuals(n) =
        (t * eig.eigenvectors.col(n) -
         eig.eigenvalues(n) * eig.eigenvectors.col(n))
            .norm();
  }
  return solution;
}

namespace {

// FWHM → Gaussian σ.
double packet_sigma(const WavepacketSpec& packet) {
  return packet.width / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

// Distance on the unit circle, wrapped to the nearest image.
double wrap_unit(double x) { return x - std::round(x); }

Complex packet_amplitude(const WavepacketSpec& packet, double sigma, double x,
                         double shift) {
  const double dx = wrap_unit(x - packet.center - shift);
  const double envelope = std::exp(-dx * dx / (2.0 * sigma * sigma));
  const double phase = packet.wavenumber * (x - shift);
  return Complex(std::cos(phase) * envelope, std::sin(phase) * envelope);
}

}  // namespace

std::vector<ConvergenceRow> continuum_limit_study(
    std::span<const Eigen::Index> site_counts, const WavepacketSpec& packet,
    double shift, double hbar) {
  if (site_counts.empty()) {
    throw InvalidArgumentError("continuum_limit_study: empty site list");
  }
  for (std::size_t k = 0; k < site_counts.size(); ++k) {
    if (site_counts[k] < 16) {
      throw InvalidArgumentError("continuum_limit_study: each site count must be >= 16");
    }
    if (k + 1 < site_counts.size() && !(site_counts[k] < site_counts[k + 1])) {
      throw InvalidArgumentError("continuum_limit_study: site counts must be strictly increasing");
    }
  }
  if (!(hbar > 0.0)) {
    throw InvalidArgumentError("continuum_limit_study: hbar must be positive");
  }
  if (!(packet.width > 0.0) || !std::isfinite(packet.center) ||
      !std::isfinite(packet.wavenumber) || !std::isfinite(shift)) {
    throw InvalidArgumentError("continuum_limit_study: packet parameters must be finite, width > 0");
  }
  const double coarse_spacing = 1.0 / static_cast<double>(site_counts.front());
  if (packet.width < 4.0 * coarse_spacing) {
    throw InvalidArgumentError(
        "continuum_limit_study: under-resolved wavepacket, width spans fewer "
        "than 4 sites at the coarsest lattice");
  }

  const double sigma = packet_sigma(packet);
  std::vector<double> errors;
  errors.reserve(site_counts.size());
  for (Eigen::Index d : site_counts) {
    LatticeSpec spec;
    spec.sites = d;
    spec.spacing = 1.0 / static_cast<double>(d);
    spec.centering = Centering::from_zero;
    spec.boundary = Boundary::periodic;
    PlanckUnits units;
    units.hbar = hbar;

    const Operator p = momentum_operator(spec, units);
    const Operator u = evolution_unitary(p, shift, hbar);

    Ket initial(d);
    Ket target(d);
    for (Eigen::Index n = 0; n < d; ++n) {
      const double x = static_cast<double>(n) / static_cast<double>(d);
      initial(n) = packet_amplitude(packet, sigma, x, 0.0);
      target(n) = packet_amplitude(packet, sigma, x, shift);
    }
    initial.normalize();
    target.normalize();
    errors.push_back((u * initial - target).norm());
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(site_counts.size());
  for (std::size_t k = 0; k < site_counts.size(); ++k) {
    ConvergenceRow row;
    row.sites = site_counts[k];
    row.error = errors[k];
    if (k + 1 < site_counts.size() && errors[k] > 0.0 &&
        errors[k + 1] > 0.0) {
      row.order = std::log(errors[k] / errors[k + 1]) /
                  std::log(static_cast<double>(site_counts[k + 1]) /
                           static_cast<double>(site_counts[k]));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dagger
