#include "fuzzyhom/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "fuzzyhom/error.hpp"

namespace fuzzyhom {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<Vertex> vertex_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vertex ids");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() > std::numeric_limits<Vertex>::max())
      fail(where + "[" + std::to_string(i) + "]", "expected a non-negative vertex id");
    out.push_back(static_cast<Vertex>(v.get<long long>()));
  }
  return out;
}

SimplicialComplex maximal_from_json(const Json& j, const std::string& where, bool allow_empty) {
  if (!j.is_array()) fail(where, "expected an array of simplices");
  if (j.empty() && !allow_empty) fail(where, "complex is empty");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    try {
      simplices.emplace_back(vertex_list(j[i], w));
    } catch (const InvalidArgument& e) {
      fail(w, e.what());
    }
  }
  return SimplicialComplex::closure_of(simplices);
}

Poset poset_from_json(const Json& j, const std::string& where) {
  Poset p;
  p.elements = string_list(field(j, "elements", where), where + ".elements");
  if (j.contains("covers")) {
    const Json& covers = j["covers"];
    if (!covers.is_array()) fail(where + ".covers", "expected an array of pairs");
    for (std::size_t i = 0; i < covers.size(); ++i) {
      const auto pair = string_list(covers[i], where + ".covers[" + std::to_string(i) + "]");
      if (pair.size() != 2) fail(where + ".covers[" + std::to_string(i) + "]", "expected [lower, upper]");
      p.covers.emplace_back(pair[0], pair[1]);
    }
  }
  return p;
}

Ring ring_from_json(const Json& j) {
  if (!j.contains("ring")) return Ring::integers();
  if (!j["ring"].is_string()) fail("ring", "expected \"z\" or \"zmod:<p>\"");
  try {
    return Ring::parse(j["ring"].get<std::string>());
  } catch (const Error& e) {
    fail("ring", e.what());
  }
}

FuzzySubcomplex mu_from_json(const Json& j, SimplicialComplex k, std::shared_ptr<const Lattice> lattice) {
  const Json& mu = field(j, "mu", "project");
  if (!mu.is_array()) fail("mu", "expected an array of {\"simplex\", \"value\"} entries");
  std::vector<std::pair<Simplex, LatticeValue>> given;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const std::string w = "mu[" + std::to_string(i) + "]";
    const Json& value = field(mu[i], "value", w);
    if (!value.is_string()) fail(w + ".value", "expected a lattice expression");
    try {
      Simplex s(vertex_list(field(mu[i], "simplex", w), w + ".simplex"));
      given.emplace_back(std::move(s), lattice->parse(value.get<std::string>()));
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      if (msg.rfind("mu[", 0) == 0) throw;
      fail(w, msg);
    } catch (const InvalidArgument& e) {
      fail(w, e.what());
    }
  }
  try {
    return FuzzySubcomplex::complete(std::move(k), std::move(lattice), given);
  } catch (const InvalidArgument& e) {
    fail("mu", e.what());
  }
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::shared_ptr<const Lattice> lattice_from_json(const Json& j) {
  const Json& kind = field(j, "kind", "lattice");
  if (!kind.is_string()) fail("lattice.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "total") return Lattice::total_order(string_list(field(j, "levels", "lattice"), "lattice.levels"));
    if (k == "fdl") return Lattice::free_distributive(string_list(field(j, "generators", "lattice"), "lattice.generators"));
    if (k == "upset") return Lattice::up_set(poset_from_json(j, "lattice"));
  } catch (const InvalidArgument& e) {
    fail("lattice", e.what());
  }
  fail("lattice.kind", "unknown lattice kind \"" + k + "\" (expected total, fdl or upset)");
}

Json lattice_to_json(const Lattice& lattice) {
  Json j;
  switch (lattice.kind()) {
    case LatticeKind::TotalOrder:
      j["kind"] = "total";
      j["levels"] = lattice.names();
      break;
    case LatticeKind::FreeDistributive:
      j["kind"] = "fdl";
      j["generators"] = lattice.names();
      break;
    case LatticeKind::UpSet: {
      j["kind"] = "upset";
      j["elements"] = lattice.poset().elements;
      Json covers = Json::array();
      for (const auto& [lo, hi] : lattice.poset().covers) covers.push_back({lo, hi});
      j["covers"] = covers;
      break;
    }
  }
  return j;
}

FuzzySubcomplex filtration_from_json(const Json& j) {
  const Poset poset = poset_from_json(field(j, "poset", "filtration"), "filtration.poset");
  std::map<std::string, SimplicialComplex> stages;
  if (j.contains("stages")) {
    const Json& s = j["stages"];
    if (!s.is_object()) fail("filtration.stages", "expected an object keyed by poset element");
    for (auto it = s.begin(); it != s.end(); ++it)
      stages[it.key()] = maximal_from_json(it.value(), "filtration.stages." + it.key(), true);
  }
  try {
    return from_filtration(poset, stages);
  } catch (const InvalidArgument& e) {
    fail("filtration", e.what());
  }
}

Project project_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("project", "expected a JSON object");
  const int sources = static_cast<int>(j.contains("complex")) + static_cast<int>(j.contains("chromatic")) +
                      static_cast<int>(j.contains("filtration"));
  if (sources != 1) fail("project", "exactly one of \"complex\", \"chromatic\", \"filtration\" is required");
  const Ring ring = ring_from_json(j);

  if (j.contains("complex")) {
    auto lattice = lattice_from_json(field(j, "lattice", "project"));
    SimplicialComplex k = maximal_from_json(field(j["complex"], "maximal", "complex"), "complex.maximal", false);
    return Project{mu_from_json(j, std::move(k), std::move(lattice)), ring};
  }

  if (j.contains("mu")) fail("mu", "values are derived from the source; mu is only allowed with \"complex\"");

  if (j.contains("filtration")) {
    if (j.contains("lattice")) fail("lattice", "a filtration project derives its lattice from the poset");
    return Project{filtration_from_json(j["filtration"]), ring};
  }

  const Json& c = j["chromatic"];
  const Json& csv = field(c, "csv", "chromatic");
  if (!csv.is_string()) fail("chromatic.csv", "expected a path");
  const Json& radius = field(c, "radius", "chromatic");
  mpq_class r;
  try {
    r = radius.is_string() ? parse_rational(radius.get<std::string>()) : parse_rational(radius.dump());
  } catch (const ParseError& e) {
    fail("chromatic.radius", e.what());
  }
  int max_dim = 2;
  if (c.contains("max_dim")) {
    if (!c["max_dim"].is_number_integer()) fail("chromatic.max_dim", "expected an integer");
    max_dim = c["max_dim"].get<int>();
  }
  std::filesystem::path path = csv.get<std::string>();
  if (path.is_relative()) path = base_dir / path;
  const ChromaticDataset data = read_chromatic_csv(path);
  try {
    FuzzySubcomplex mu = vietoris_rips(data, r, max_dim);
    if (j.contains("lattice")) {
      // A declared lattice must be an FDL covering the observed labels.
      auto declared = lattice_from_json(j["lattice"]);
      std::map<Vertex, std::string> labels;
      for (std::size_t i = 0; i < data.labels.size(); ++i) labels.emplace(static_cast<Vertex>(i), data.labels[i]);
      mu = chromatic(mu.complex(), labels, declared);
    }
    return Project{std::move(mu), ring};
  } catch (const InvalidArgument& e) {
    fail("chromatic", e.what());
  }
}

Project load_project(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return project_from_json(j, path.parent_path());
}

Json project_to_json(const FuzzySubcomplex& mu, const Ring& ring) {
  Json j;
  j["ring"] = ring.name();
  j["lattice"] = lattice_to_json(mu.lattice());
  Json maximal = Json::array();
  for (const Simplex& s : mu.complex().maximal_simplices()) maximal.push_back(s.vertices());
  j["complex"] = {{"maximal", maximal}};
  Json values = Json::array();
  for (const Simplex& s : mu.complex().all_simplices())
    values.push_back({{"simplex", s.vertices()}, {"value", mu.lattice().format(mu.value(s))}});
  j["mu"] = values;
  return j;
}

mpq_class parse_rational(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw ParseError("bad fraction '" + text + "'");
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false, dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any = true;
      if (dot) --scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) throw ParseError("bad number '" + text + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw ParseError("bad number '" + text + "'");
    const std::string exp = text.substr(i + 1);
    if (exp.empty() || exp.find_first_not_of("+-0123456789") != std::string::npos || exp.size() > 6)
      throw ParseError("bad exponent in '" + text + "'");
    try {
      scale += std::stol(exp);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + text + "'");
    }
  }
  mpz_class num(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class q = scale >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

ChromaticDataset read_chromatic_csv(std::istream& in) {
  ChromaticDataset data;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    const std::string where = "line " + std::to_string(line_no);
    if (cells.size() < 2) fail(where, "expected coordinates followed by a label");
    std::vector<mpq_class> point;
    try {
      for (std::size_t c = 0; c + 1 < cells.size(); ++c) point.push_back(parse_rational(cells[c]));
    } catch (const ParseError& e) {
      if (data.points.empty() && width == 0) {
        width = cells.size();  // header row
        continue;
      }
      fail(where, e.what());
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) fail(where, "expected " + std::to_string(width) + " columns");
    if (cells.back().empty()) fail(where, "empty label");
    data.points.push_back(std::move(point));
    data.labels.push_back(cells.back());
  }
  if (data.points.empty()) throw ParseError("CSV has no points");
  return data;
}

ChromaticDataset read_chromatic_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return read_chromatic_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json chain_to_json(const SimplicialComplex& k, int d, const Vector& chain) {
  Json j = Json::object();
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i] != 0) j[k.simplex(d, i).to_string()] = integer_to_json(chain[i]);
  return j;
}

Json structure_to_json(const ModuleStructure& s) {
  Json torsion = Json::array();
  for (const Integer& a : s.torsion) torsion.push_back(integer_to_json(a));
  return Json{{"betti", s.betti}, {"torsion", torsion}};
}

Json homology_to_json(const SimplicialComplex& k, const HomologyStructure& h) {
  Json degrees = Json::array();
  for (std::size_t d = 0; d < h.degrees.size(); ++d) {
    const DegreeHomology& dh = h.degrees[d];
    Json j = {{"degree", d}};
    const Json s = structure_to_json(dh.structure);
    j["betti"] = s["betti"];
    j["torsion"] = s["torsion"];
    Json gens = Json::array();
    for (const Vector& v : dh.torsion_generators)
      gens.push_back({{"kind", "torsion"}, {"chain", chain_to_json(k, static_cast<int>(d), v)}});
    for (const Vector& v : dh.free_generators)
      gens.push_back({{"kind", "free"}, {"chain", chain_to_json(k, static_cast<int>(d), v)}});
    j["generators"] = gens;
    degrees.push_back(j);
  }
  return Json{{"ring", h.ring.name()}, {"degrees", degrees}};
}

Json eta_report_to_json(const FuzzyHomologyContext& ctx, const EtaReport& report) {
  const Lattice& l = ctx.lattice();
  const SimplicialComplex& k = ctx.mu().complex();
  Json j = {{"degree", report.degree}};
  const Json s = structure_to_json(report.structure);
  j["betti"] = s["betti"];
  j["torsion"] = s["torsion"];
  Json gens = Json::array();
  for (const GeneratorEta& g : report.generators) {
    Json cls = Json::array();
    for (const Integer& x : g.coordinates.flat()) cls.push_back(integer_to_json(x));
    Json levels = Json::array();
    for (const LatticeValue& v : g.eta.solvable_levels) levels.push_back(l.format(v));
    gens.push_back({{"chain", chain_to_json(k, report.degree, g.chain)},
                    {"class", cls},
                    {"eta", l.format(g.eta.value)},
                    {"solvable_levels", levels}});
  }
  j["generators"] = gens;
  Json hdl = Json::object();
  for (const auto& [level, st] : report.hdl) hdl[l.format(level)] = structure_to_json(st);
  j["hdl"] = hdl;
  Json cuts = Json::object();
  for (const auto& [level, st] : report.cuts) cuts[l.format(level)] = structure_to_json(st);
  j["cuts"] = cuts;
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json smith_to_json(const SmithDecomposition& s) {
  Json factors = Json::array();
  for (const Integer& d : s.invariant_factors) factors.push_back(integer_to_json(d));
  return Json{{"rank", s.rank},
              {"invariant_factors", factors},
              {"P", matrix_to_json(s.P)},
              {"Q", matrix_to_json(s.Q)},
              {"D", matrix_to_json(s.D)}};
}

}  // namespace fuzzyhom
