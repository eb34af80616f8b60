#include "dagger/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dagger::io {

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const json& require_field(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgumentError(std::string(context) + ": missing field '" +
                               key + "'");
  }
  return j.at(key);
}

double require_number(const json& j, const char* context) {
  if (!j.is_number()) {
    throw InvalidArgumentError(std::string(context) + ": expected a number");
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    throw InvalidArgumentError(std::string(context) + ": non-finite number");
  }
  return value;
}

Eigen::Index require_dim(const json& j, const char* context) {
  const json& dim = require_field(j, "dim", context);
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    throw InvalidArgumentError(std::string(context) +
                               ": 'dim' must be a positive integer");
  }
  return static_cast<Eigen::Index>(dim.get<long long>());
}

// Reads a dim×dim row-major numeric grid.
Eigen::MatrixXd grid_from_json(const json& j, Eigen::Index dim,
                               const char* context) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    throw InvalidArgumentError(std::string(context) + ": expected " +
                               std::to_string(dim) + " rows");
  }
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw InvalidArgumentError(std::string(context) + ": row " +
                                 std::to_string(i) + " must have " +
                                 std::to_string(dim) + " entries");
    }
    for (Eigen::Index k = 0; k < dim; ++k) {
      m(i, k) = require_number(row.at(static_cast<std::size_t>(k)), context);
    }
  }
  return m;
}

}  // namespace

json operator_to_json(const Operator& a) {
  require_square(a, "operator_to_json");
  require_finite(a, "operator_to_json");
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      re_row.push_back(a(i, j).real());
      im_row.push_back(a(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json out;
  out["dim"] = a.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Operator operator_from_json(const json& j) {
  const char* context = "operator";
  const Eigen::Index dim = require_dim(j, context);
  const Eigen::MatrixXd re =
      grid_from_json(require_field(j, "re", context), dim, context);
  const Eigen::MatrixXd im =
      grid_from_json(require_field(j, "im", context), dim, context);
  Operator a(dim, dim);
  a.real() = re;
  a.imag() = im;
  return a;
}

json ket_to_json(const Ket& k) {
  if (k.size() < 1) {
    throw InvalidArgumentError("ket_to_json: empty ket");
  }
  json re = json::array();
  json im = json::array();
  for (Eigen::Index n = 0; n < k.size(); ++n) {
    re.push_back(k(n).real());
    im.push_back(k(n).imag());
  }
  json out;
  out["dim"] = k.size();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Ket ket_from_json(const json& j) {
  const char* context = "ket";
  const Eigen::Index dim = require_dim(j, context);
  const json& re = require_field(j, "re", context);
  const json& im = require_field(j, "im", context);
  if (!re.is_array() || !im.is_array() ||
      static_cast<Eigen::Index>(re.size()) != dim ||
      static_cast<Eigen::Index>(im.size()) != dim) {
    throw InvalidArgumentError("ket: 're' and 'im' must be length-dim arrays");
  }
  Ket k(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    k(n) = Complex(require_number(re.at(static_cast<std::size_t>(n)), context),
                   require_number(im.at(static_cast<std::size_t>(n)), context));
  }
  return k;
}

json lattice_spec_to_json(const LatticeSpec& spec) {
  json out;
  out["sites"] = spec.sites;
  out["spacing"] = spec.spacing;
  out["centering"] = to_string(spec.centering);
  out["boundary"] = to_string(spec.boundary);
  return out;
}

LatticeSpec lattice_spec_from_json(const json& j) {
  const char* context = "lattice spec";
  LatticeSpec spec;
  const json& sites = require_field(j, "sites", context);
  if (!sites.is_number_integer() || sites.get<long long>() < 1) {
    throw InvalidArgumentError("lattice spec: 'sites' must be a positive integer");
  }
  spec.sites = static_cast<Eigen::Index>(sites.get<long long>());
  spec.spacing = require_number(require_field(j, "spacing", context), context);
  const json& centering = require_field(j, "centering", context);
  const json& boundary = require_field(j, "boundary", context);
  if (!centering.is_string() || !boundary.is_string()) {
    throw InvalidArgumentError("lattice spec: 'centering' and 'boundary' must be strings");
  }
  spec.centering = centering_from_string(centering.get<std::string>());
  spec.boundary = boundary_from_string(boundary.get<std::string>());
  validate(spec);
  return spec;
}

json derivation_to_json(const Derivation& delta) {
  validate(delta);
  json out;
  out["algebra_dim"] = delta.algebra_dim;
  out["superoperator"] = operator_to_json(delta.matrix);
  if (delta.known_generator) {
    json tag;
    tag["hbar"] = delta.known_generator->hbar;
    tag["convention"] = to_string(delta.known_generator->convention);
    out["generator_tag"] = std::move(tag);
    out["generator"] = operator_to_json(delta.known_generator->generator);
  } else {
    out["generator_tag"] = nullptr;
  }
  return out;
}

Derivation derivation_from_json(const json& j) {
  const char* context = "derivation";
  Derivation delta;
  const json& dim = require_field(j, "algebra_dim", context);
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    throw InvalidArgumentError("derivation: 'algebra_dim' must be a positive integer");
  }
  delta.algebra_dim = static_cast<Eigen::Index>(dim.get<long long>());
  delta.matrix = operator_from_json(require_field(j, "superoperator", context));
  const json& tag = require_field(j, "generator_tag", context);
  if (!tag.is_null()) {
    if (!tag.is_object()) {
      throw InvalidArgumentError("derivation: 'generator_tag' must be null or an object");
    }
    KnownGenerator gen;
    gen.hbar = require_number(require_field(tag, "hbar", context), context);
    const json& convention = require_field(tag, "convention", context);
    if (!convention.is_string()) {
      throw InvalidArgumentError("derivation: 'convention' must be a string");
    }
    gen.convention =
        generator_convention_from_string(convention.get<std::string>());
    gen.generator = operator_from_json(require_field(j, "generator", context));
    delta.known_generator = std::move(gen);
  }
  validate(delta);
  return delta;
}

json axiom_report_to_json(const AxiomReport& report) {
  json out;
  out["axiom_id"] = to_string(report.axiom_id);
  out["passed"] = report.passed;
  out["max_residual"] = report.max_residual;
  if (report.witness) {
    out["witness"] = parse_json_text(*report.witness);
  }
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  return out;
}

json generator_extraction_to_json(const GeneratorExtraction& extraction) {
  json out;
  out["generator"] = operator_to_json(extraction.generator);
  out["minimal_norm_generator"] =
      operator_to_json(extraction.minimal_norm_generator);
  out["residual"] = extraction.residual;
  out["derivation_norm_lower_bound"] = extraction.derivation_norm_lower_bound;
  if (extraction.derivation_norm_exact) {
    out["derivation_norm_exact"] = *extraction.derivation_norm_exact;
  }
  return out;
}

std::string evolution_trace_csv(const EvolutionTrace& trace) {
  std::string out = "s,deviation\n";
  for (const EvolutionSample& sample : trace.samples) {
    out += g17(sample.s);
    out += ",";
    out += g17(sample.deviation_from_initial);
    out += "\n";
  }
  return out;
}

std::string convergence_table_csv(std::span<const ConvergenceRow> rows) {
  std::string out = "sites,error,order\n";
  for (const ConvergenceRow& row : rows) {
    out += std::to_string(row.sites);
    out += ",";
    out += g17(row.error);
    out += ",";
    if (row.order) {
      out += g17(*row.order);
    }
    out += "\n";
  }
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgumentError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

json load_json_file(const std::filesystem::path& path) {
  return parse_json_text(read_text_file(path));
}

void save_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace dagger::io
