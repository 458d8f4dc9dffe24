#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyhom/fuzzy.hpp"
#include "fuzzyhom/fuzzy_homology.hpp"
#include "fuzzyhom/homology.hpp"
#include "fuzzyhom/lattice.hpp"
#include "fuzzyhom/ring.hpp"
#include "fuzzyhom/smith.hpp"

namespace fuzzyhom {

using Json = nlohmann::ordered_json;

/// A loaded project: mu after completion (not yet validated) and the ring.
struct Project {
  FuzzySubcomplex mu;
  Ring ring;
};

/// {"kind":"total","levels":[..]} | {"kind":"fdl","generators":[..]} |
/// {"kind":"upset","elements":[..],"covers":[["a","b"],..]}
std::shared_ptr<const Lattice> lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& lattice);

/// Exactly one of "complex", "chromatic", "filtration". Relative CSV paths
/// resolve against `base_dir`. Throws ParseError naming the offending field.
Project project_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Project load_project(const std::filesystem::path& path);
/// Lattice, maximal simplices, and mu on every simplex.
Json project_to_json(const FuzzySubcomplex& mu, const Ring& ring);

/// Filtration object: {"poset":{"elements":[..],"covers":[..]},
/// "stages":{"a":[[0],[1,2]],..}} with stages given by maximal simplices.
FuzzySubcomplex filtration_from_json(const Json& j);

/// Decimal ("-1.25", "3e-2") or fraction ("7/3") text, exactly.
mpq_class parse_rational(const std::string& text);
/// One point per row: coordinate columns, then the label. A first row whose
/// leading field is not a number is taken as a header.
ChromaticDataset read_chromatic_csv(std::istream& in);
ChromaticDataset read_chromatic_csv(const std::filesystem::path& path);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& x);
/// Sparse chain {"[0,1]": 1, ...} over the d-simplices.
Json chain_to_json(const SimplicialComplex& k, int d, const Vector& chain);
Json structure_to_json(const ModuleStructure& s);
Json homology_to_json(const SimplicialComplex& k, const HomologyStructure& h);
Json eta_report_to_json(const FuzzyHomologyContext& ctx, const EtaReport& report);
/// Debug dump of a decomposition for golden files.
Json smith_to_json(const SmithDecomposition& s);
Json matrix_to_json(const Matrix& m);

}  // namespace fuzzyhom
