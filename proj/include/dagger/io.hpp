#pragma once

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>

#include "dagger/axioms.hpp"
#include "dagger/derivation.hpp"
#include "dagger/dynamics.hpp"
#include "dagger/lattice.hpp"
#include "dagger/types.hpp"

namespace dagger::io {

// Insertion order is preserved so output files are byte-stable.
using json = nlohmann::ordered_json;

// Operator interchange format, used repo-wide:
//   {"dim": d, "re": [[...]], "im": [[...]]}   (row-major, d×d)
// Kets use the same fields with length-d arrays.
json operator_to_json(const Operator& a);
Operator operator_from_json(const json& j);

json ket_to_json(const Ket& k);
Ket ket_from_json(const json& j);

// {"sites": int, "spacing": number, "centering": "from_zero"|"centered",
//  "boundary": "periodic"|"open"}
json lattice_spec_to_json(const LatticeSpec& spec);
LatticeSpec lattice_spec_from_json(const json& j);

// {"algebra_dim": d, "superoperator": <Operator with dim d²>,
//  "generator_tag": null | {"hbar": number, "convention": "eq2"|"eq3"},
//  "generator": <Operator, required when the tag is non-null>}
json derivation_to_json(const Derivation& delta);
Derivation derivation_from_json(const json& j);

json axiom_report_to_json(const AxiomReport& report);
json generator_extraction_to_json(const GeneratorExtraction& extraction);

// CSV columns: s,deviation
std::string evolution_trace_csv(const EvolutionTrace& trace);
// CSV columns: sites,error,order (order empty on the last row)
std::string convergence_table_csv(std::span<const ConvergenceRow> rows);

// Throws InvalidArgumentError on bad syntax.
json parse_json_text(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

}  // namespace dagger::io
