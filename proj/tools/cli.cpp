#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "fuzzyhom/error.hpp"
#include "fuzzyhom/fuzzy_homology.hpp"
#include "fuzzyhom/io.hpp"

namespace fuzzyhom::cli {

namespace {

struct Options {
  std::string input;
  bool json = false;
  std::string ring;
  std::optional<int> degree;
  std::vector<std::string> levels;
  std::string class_text;
  std::string radius;
  int max_dim = 2;
  std::string out_path;
};

std::string module_text(const Ring& ring, const ModuleStructure& s) {
  if (s.is_zero()) return "0";
  const std::string base = ring.is_field() ? "F_" + std::to_string(ring.modulus()) : "Z";
  std::vector<std::string> parts;
  for (const Integer& a : s.torsion) parts.push_back("Z/" + a.get_str());
  if (s.betti == 1) parts.push_back(base);
  if (s.betti > 1) parts.push_back(base + "^" + std::to_string(s.betti));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string chain_text(const SimplicialComplex& k, int d, const Vector& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0) continue;
    Integer c = chain[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += c.get_str() + "*";
    out += k.simplex(d, i).to_string();
  }
  return out.empty() ? "0" : out;
}

Project load(const Options& o) {
  Project p = load_project(o.input);
  if (!o.ring.empty()) p.ring = Ring::parse(o.ring);
  return p;
}

std::vector<int> degrees_of(const Options& o, int top) {
  if (o.degree) {
    if (*o.degree < 0 || *o.degree > top)
      throw InvalidArgument("--degree " + std::to_string(*o.degree) + " outside [0, " + std::to_string(top) + "]");
    return {*o.degree};
  }
  std::vector<int> all;
  for (int d = 0; d <= top; ++d) all.push_back(d);
  return all;
}

std::optional<std::vector<LatticeValue>> parse_levels(const Options& o, const Lattice& l) {
  if (o.levels.empty()) return std::nullopt;
  std::vector<LatticeValue> out;
  for (const std::string& group : o.levels) {
    std::stringstream ss(group);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(l.parse(item));
  }
  return out;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Project p = load(o);
  const auto violations = validate(p.mu);
  const Lattice& l = p.mu.lattice();
  if (o.json) {
    Json list = Json::array();
    for (const Violation& v : violations)
      list.push_back({{"face", v.face.vertices()},
                      {"coface", v.coface.vertices()},
                      {"face_value", l.format(p.mu.value(v.face))},
                      {"coface_value", l.format(p.mu.value(v.coface))}});
    out << Json{{"valid", violations.empty()},
                {"zero_meet_prime", l.is_zero_meet_prime()},
                {"violations", list}}
               .dump(2)
        << "\n";
  } else {
    if (violations.empty()) out << "valid (" << p.mu.complex().size() << " simplices)\n";
    else out << "invalid: " << violations.size() << " violation(s)\n";
    for (const Violation& v : violations)
      out << "  mu" << v.face.to_string() << " = " << l.format(p.mu.value(v.face)) << " is not >= mu"
          << v.coface.to_string() << " = " << l.format(p.mu.value(v.coface)) << "\n";
    if (!l.is_zero_meet_prime()) out << "note: 0 is not meet-prime in this lattice\n";
  }
  return violations.empty() ? kOk : kInvalid;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Project p = load(o);
  const SimplicialComplex& k = p.mu.complex();
  const HomologyStructure h = homology(k, p.ring);
  if (o.json) {
    out << homology_to_json(k, h).dump(2) << "\n";
    return kOk;
  }
  out << "ring: " << p.ring.name() << "\n";
  for (std::size_t d = 0; d < h.degrees.size(); ++d) {
    const DegreeHomology& dh = h.degrees[d];
    out << "H_" << d << ": " << module_text(p.ring, dh.structure) << "\n";
    for (std::size_t i = 0; i < dh.torsion_generators.size(); ++i)
      out << "  torsion (" << dh.structure.torsion[i].get_str()
          << "): " << chain_text(k, static_cast<int>(d), dh.torsion_generators[i]) << "\n";
    for (const Vector& g : dh.free_generators) out << "  free: " << chain_text(k, static_cast<int>(d), g) << "\n";
  }
  return kOk;
}

int cmd_eta(const Options& o, std::ostream& out) {
  const Project p = load(o);
  const FuzzyHomologyContext ctx(p.mu, p.ring);
  const Lattice& l = ctx.lattice();

  if (!o.class_text.empty()) {
    if (!o.degree) throw InvalidArgument("--class needs --degree");
    const int d = degrees_of(o, ctx.top_degree())[0];
    Vector flat;
    std::stringstream ss(o.class_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Integer x;
      if (x.set_str(item, 10) != 0) throw ParseError("--class: bad coordinate '" + item + "'");
      flat.push_back(x);
    }
    const ClassCoordinates c = class_from_flat(ctx.reduced(), d, flat);
    const EtaTrace t = eta_trace(ctx, c);
    const Vector chain = cycle_of_class(ctx.reduced(), c);
    if (o.json) {
      Json levels = Json::array();
      for (const auto& v : t.solvable_levels) levels.push_back(l.format(v));
      Json cls = Json::array();
      for (const Integer& x : c.flat()) cls.push_back(integer_to_json(x));
      out << Json{{"degree", d},
                  {"class", cls},
                  {"chain", chain_to_json(ctx.mu().complex(), d, chain)},
                  {"eta", l.format(t.value)},
                  {"solvable_levels", levels}}
                 .dump(2)
          << "\n";
    } else {
      out << "eta_" << d << "(" << chain_text(ctx.mu().complex(), d, chain) << ") = " << l.format(t.value) << "\n";
    }
    return kOk;
  }

  Json reports = Json::array();
  for (int d : degrees_of(o, ctx.top_degree())) {
    const EtaReport r = eta_report(ctx, d, parse_levels(o, l));
    if (o.json) {
      reports.push_back(eta_report_to_json(ctx, r));
      continue;
    }
    out << "degree " << d << ": H_" << d << " = " << module_text(p.ring, r.structure) << "\n";
    for (const GeneratorEta& g : r.generators) {
      out << "  eta(" << chain_text(ctx.mu().complex(), d, g.chain) << ") = " << l.format(g.eta.value)
          << "   solvable at:";
      for (const auto& v : g.eta.solvable_levels) out << " {" << l.format(v) << "}";
      out << "\n";
    }
    out << "  H_" << d << "(l):\n";
    for (const auto& [level, s] : r.hdl) out << "    " << l.format(level) << ": " << module_text(p.ring, s) << "\n";
    out << "  cuts:\n";
    for (const auto& [level, s] : r.cuts) out << "    " << l.format(level) << ": " << module_text(p.ring, s) << "\n";
  }
  if (o.json) out << Json{{"reports", reports}}.dump(2) << "\n";
  return kOk;
}

int cmd_cuts(const Options& o, std::ostream& out, bool ranks_only) {
  const Project p = load(o);
  const FuzzyHomologyContext ctx(p.mu, p.ring);
  const Lattice& l = ctx.lattice();
  const auto requested = parse_levels(o, l);
  Json degrees = Json::array();
  for (int d : degrees_of(o, ctx.top_degree())) {
    std::vector<LatticeValue> levels;
    if (requested) levels = *requested;
    else levels = ranks_only ? default_rank_levels(ctx, d) : ctx.kappa_values(d);
    Json table = Json::object();
    if (!o.json) out << "degree " << d << ":\n";
    if (ranks_only) {
      for (const auto& [level, rank] : rank_cut_table(ctx, d, levels)) {
        if (o.json) table[l.format(level)] = rank;
        else out << "  " << l.format(level) << "\t" << rank << "\n";
      }
    } else {
      for (const LatticeValue& level : levels) {
        const ModuleStructure s = module_structure(eta_cut(ctx, d, level));
        if (o.json) table[l.format(level)] = structure_to_json(s);
        else out << "  " << l.format(level) << ": " << module_text(p.ring, s) << "\n";
      }
    }
    degrees.push_back({{"degree", d}, {ranks_only ? "ranks" : "cuts", table}});
  }
  if (o.json) out << Json{{"degrees", degrees}}.dump(2) << "\n";
  return kOk;
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw InvalidArgument("cannot write " + o.out_path);
  f << j.dump(2) << "\n";
}

int cmd_build_chromatic(const Options& o, std::ostream& out) {
  const ChromaticDataset data = read_chromatic_csv(std::filesystem::path(o.input));
  const mpq_class radius = parse_rational(o.radius);
  const FuzzySubcomplex mu = vietoris_rips(data, radius, o.max_dim);
  emit(o, project_to_json(mu, o.ring.empty() ? Ring::integers() : Ring::parse(o.ring)), out);
  return kOk;
}

int cmd_import_filtration(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.input);
  if (!in) throw ParseError("cannot open " + o.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(o.input + ": " + e.what());
  }
  const FuzzySubcomplex mu = filtration_from_json(j.contains("filtration") ? j["filtration"] : j);
  if (!mu.lattice().is_zero_meet_prime())
    err << "warning: 0 is not meet-prime in the up-set lattice of this poset; eta, cuts and rank-table will refuse "
           "the project\n";
  emit(o, project_to_json(mu, o.ring.empty() ? Ring::integers() : Ring::parse(o.ring)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial and lattice-valued fuzzy homology", "fuzzyhom"};
  app.require_subcommand(1);
  Options o;

  auto add_project = [&](CLI::App* sub) {
    sub->add_option("project", o.input, "Project JSON file")->required();
    sub->add_flag("--json", o.json, "Print JSON instead of text");
    sub->add_option("--ring", o.ring, "Coefficients: z or zmod:<p> (overrides the project)");
  };
  auto add_degree = [&](CLI::App* sub) { sub->add_option("--degree", o.degree, "Homology degree (default: all)"); };
  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--levels", o.levels, "Lattice levels, repeatable or separated by ';'");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check face monotonicity of mu");
  add_project(validate_cmd);
  auto* homology_cmd = app.add_subcommand("homology", "Crisp homology with generators");
  add_project(homology_cmd);
  auto* eta_cmd = app.add_subcommand("eta", "Fuzzy homology values of generators or of one class");
  add_project(eta_cmd);
  add_degree(eta_cmd);
  add_levels(eta_cmd);
  eta_cmd->add_option("--class", o.class_text, "Class coordinates: torsion part then free part, comma separated");
  auto* cuts_cmd = app.add_subcommand("cuts", "Structure of the cuts eta^{>=l}");
  add_project(cuts_cmd);
  add_degree(cuts_cmd);
  add_levels(cuts_cmd);
  auto* rank_cmd = app.add_subcommand("rank-table", "Betti number of each cut");
  add_project(rank_cmd);
  add_degree(rank_cmd);
  add_levels(rank_cmd);
  auto* chromatic_cmd = app.add_subcommand("build-chromatic", "Vietoris-Rips project from a labelled CSV");
  chromatic_cmd->add_option("csv", o.input, "Points: coordinates then label per row")->required();
  chromatic_cmd->add_option("--radius", o.radius, "Edge threshold (closed), decimal or fraction")->required();
  chromatic_cmd->add_option("--max-dim", o.max_dim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
  chromatic_cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
  chromatic_cmd->add_option("--ring", o.ring, "Ring recorded in the project");
  auto* filtration_cmd = app.add_subcommand("import-filtration", "Project from a poset-indexed filtration");
  filtration_cmd->add_option("filtration", o.input, "Filtration JSON")->required();
  filtration_cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
  filtration_cmd->add_option("--ring", o.ring, "Ring recorded in the project");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*homology_cmd) return cmd_homology(o, out);
    if (*eta_cmd) return cmd_eta(o, out);
    if (*cuts_cmd) return cmd_cuts(o, out, false);
    if (*rank_cmd) return cmd_cuts(o, out, true);
    if (*chromatic_cmd) return cmd_build_chromatic(o, out);
    if (*filtration_cmd) return cmd_import_filtration(o, out, err);
  } catch (const CapabilityError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LatticeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace fuzzyhom::cli
