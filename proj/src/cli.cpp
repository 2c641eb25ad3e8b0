#include "conifold/cli.hpp"

#include <fstream>
#include <sstream>

#include "conifold/b_model.hpp"
#include "conifold/gluing.hpp"

namespace conifold {

using nlohmann::json;

namespace {

Integer parse_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(where + ": expected an integer");
}

Rational parse_rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(parse_integer(v, where));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw ParseError(where + ": expected a rational \"p/q\"");
}

IntMatrix parse_matrix(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  for (const auto& r : v) {
    if (!r.is_array()) throw ParseError(where + ": rows must be arrays");
    cols = std::max(cols, r.size());
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (v[i].size() != cols) throw ParseError(where + ": ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(v[i][j], where);
  }
  return m;
}

IntVector parse_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  IntVector out;
  for (const auto& x : v) out.push_back(parse_integer(x, where));
  return out;
}

std::string integer_text(const Integer& v) { return v.get_str(); }

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json vector_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json scalar_matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(format_scalar(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json rational_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(format_rational(Rational(m(i, j))));
    rows.push_back(r);
  }
  return rows;
}

json gw_json(const std::vector<GwEntry>& entries) {
  json a = json::array();
  for (const auto& e : entries) a.push_back({{"class", vector_json(e.cls)}, {"n", format_rational(e.n)}});
  return a;
}

struct Loaded {
  std::optional<PresentationFile> file;
  CommandResult failure;
};

Loaded load_or_fail(const std::string& path) {
  Loaded l;
  try {
    l.file = load_presentation(path);
  } catch (const Error& e) {
    l.failure.exit_code = exit_code::kParseOrUsage;
    l.failure.diagnostics = e.what();
    l.failure.output = {{"error", e.what()}};
  }
  return l;
}

json validation_json(const PresentationFile& file, bool& ok) {
  const TransitionPresentation& p = file.presentation;
  ValidationReport report = validate(p);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  ok = report.ok();
  if (p.hodge) {
    EulerReport e = euler_check(p);
    json entry = {{"name", "hodge_numbers_consistent"}, {"passed", e.ok()}};
    if (!e.ok()) {
      std::ostringstream os;
      os << "Hodge data give mu=" << e.mu_from_hodge << " rho=" << e.rho_from_hodge;
      entry["detail"] = os.str();
    }
    checks.push_back(entry);
    ok = ok && e.ok();
  }
  return {{"k", p.k}, {"mu", p.mu()}, {"rho", p.rho()}, {"checks", checks}, {"valid", ok}};
}

json log_series_terms(const LogSeries& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t = {{"coefficient", format_scalar(c)}};
    if (m.hyperplane >= 0) {
      t["hyperplane"] = m.hyperplane + 1;
      t["w_power"] = m.w_power;
      t["log"] = m.log;
    }
    terms.push_back(t);
  }
  return terms;
}

json monodromy_section(const PresentationFile& file) {
  const TransitionPresentation& p = file.presentation;
  ExtremalModel model(p, 0);
  json residues = json::array();
  for (std::size_t i = 0; i < p.k; ++i)
    residues.push_back({{"node", i + 1}, {"matrix", scalar_matrix_json(dubrovin_residue(model, i))}});
  json blocks = json::array();
  bool oracle_ok = true;
  for (std::size_t l = 0; l < p.rho(); ++l) {
    ScalarMatrix block = monodromy_block(model, l);
    oracle_ok = oracle_ok && block == residue_oracle(model, l);
    blocks.push_back({{"l", l + 1}, {"matrix", scalar_matrix_json(block)}});
  }
  json pl = json::array();
  bool lattice_ok = true;
  if (p.mu() > 0) {
    SymplecticLattice lattice = standard_vanishing_lattice(p.mu(), p.mu());
    for (std::size_t l = 0; l < p.mu(); ++l) {
      IntMatrix m = monodromy_pairing(p, l);
      IntMatrix on_lattice = monodromy_pairing_on_lattice(lattice, p.A, l);
      for (std::size_t j = 0; j < p.mu(); ++j)
        for (std::size_t q = 0; q <= p.mu(); ++q)
          lattice_ok = lattice_ok && on_lattice(j, q) == (q == 0 ? Integer(0) : m(j, q - 1));
      pl.push_back({{"l", l + 1}, {"matrix", rational_matrix_json(m)}});
    }
  }
  return {{"dubrovin_residues", residues},
          {"monodromy_blocks", blocks},
          {"monodromy_blocks_match_series_residues", oracle_ok},
          {"picard_lefschetz_pairings", pl},
          {"picard_lefschetz_matches_lattice", lattice_ok}};
}

json yukawa_section(const PresentationFile& file) {
  const TransitionPresentation& p = file.presentation;
  const std::size_t mu = p.mu();
  OmegaJets jets = minimal_jets(mu);
  json couplings = json::array();
  json forms = json::array();
  for (std::size_t i = 0; i < p.k; ++i) forms.push_back({{"hyperplane", i + 1}, {"w", vector_json(p.A.row(i))}});
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = a; b < mu; ++b)
      for (std::size_t c = b; c < mu; ++c) {
        LogSeries y = yukawa_principal(p, a, b, c);
        bool agrees = y == yukawa_from_periods(p, jets, a, b, c);
        couplings.push_back({{"indices", {a + 1, b + 1, c + 1}}, {"principal_part", log_series_terms(y)},
                             {"matches_period_derivative", agrees}});
      }
  json residues = json::array();
  auto tensors = gm_residue_tensors(p);
  for (std::size_t i = 0; i < tensors.size(); ++i)
    residues.push_back({{"node", i + 1}, {"matrix", rational_matrix_json(tensors[i])}});
  return {{"hyperplanes", forms}, {"couplings", couplings}, {"gauss_manin_residues", residues}};
}

json verdict_json(const GlueVerdict& v) {
  return {{"verdict", v.passed ? "pass" : "fail"}, {"mismatches", v.mismatches}};
}

json substitution_json(const Substitution& s) {
  json forms = json::array();
  for (std::size_t i = 0; i < s.forms.size(); ++i)
    forms.push_back({{"y", i + 1}, {s.target, vector_json(s.forms[i])}});
  json out = {{"target", s.target}, {"forms", forms}};
  out["z"] = s.z_is_two_pi_i ? "2 pi sqrt(-1), z^-1 -> lambda" : "unchanged";
  return out;
}

json glue_section(const PresentationFile& file) {
  GlueReport r = glue_check(file.presentation);
  return {{"dubrovin", verdict_json(r.dubrovin)},
          {"gauss_manin", verdict_json(r.gauss_manin)},
          {"orthogonal", r.orthogonal},
          {"orthogonality_violations", r.orthogonality_violations},
          {"invertible", r.invertible},
          {"determinant", integer_text(r.determinant)},
          {"substitutions", {{"b_side", substitution_json(r.b_side)}, {"a_side", substitution_json(r.a_side)}}},
          {"passed", r.ok()}};
}

json structural_section(const PresentationFile& file, int order) {
  const TransitionPresentation& p = file.presentation;
  ExtremalModel model(p, order);
  json out = json::array();
  for (std::size_t l = 0; l < p.rho(); ++l)
    for (std::size_t m = l; m < p.rho(); ++m)
      for (std::size_t n = m; n < p.rho(); ++n)
        out.push_back({{"indices", {l + 1, m + 1, n + 1}}, {"series", to_string(structural_coefficient(model, l, m, n))}});
  return {{"order", order}, {"coefficients", out}};
}

TransformOptions transform_options(const PresentationFile& file, std::size_t base_rank) {
  TransformOptions o;
  o.base_count = base_rank;
  o.lift = file.lift;
  return o;
}

}  // namespace

PresentationFile parse_presentation(const json& doc) {
  if (!doc.is_object()) throw ParseError("presentation must be a JSON object");
  PresentationFile f;
  if (!doc.contains("k")) throw ParseError("missing field k");
  if (!doc["k"].is_number_integer() || doc["k"].get<long long>() < 1) throw ParseError("k must be a positive integer");
  const std::size_t k = doc["k"].get<std::size_t>();
  TransitionPresentation& p = f.presentation;
  p.k = k;
  f.had_A = doc.contains("A");
  f.had_B = doc.contains("B");
  if (!f.had_A && !f.had_B) throw ParseError("at least one of A and B is required");
  try {
    if (f.had_A) {
      p.A = parse_matrix(doc["A"], "A");
      if (p.A.rows() != k) throw ParseError("A must have k rows");
    }
    if (f.had_B) {
      p.B = parse_matrix(doc["B"], "B");
      if (p.B.rows() != k) throw ParseError("B must have k rows");
    }
    if (f.had_A && !f.had_B) p.B = complete_from_A(k, p.A).B;
    if (f.had_B && !f.had_A) p.A = complete_from_B(k, p.B).A;
  } catch (const RankDeficient& e) {
    throw ParseError(std::string("cannot complete the presentation: ") + e.what());
  }
  if (doc.contains("triple")) {
    const json& t = doc["triple"];
    const std::size_t n = t.size();
    TripleTensor tensor(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!t[a].is_array() || t[a].size() != n) throw ParseError("triple must be an n x n x n array");
      for (std::size_t b = 0; b < n; ++b) {
        if (!t[a][b].is_array() || t[a][b].size() != n) throw ParseError("triple must be an n x n x n array");
        for (std::size_t c = 0; c < n; ++c) tensor(a, b, c) = parse_rational_field(t[a][b][c], "triple");
      }
    }
    p.triple = tensor;
  }
  if (doc.contains("hodge")) {
    const json& h = doc["hodge"];
    HodgeData d;
    try {
      d.h3_x = h.at("h3X").get<long>();
      d.h3_y = h.at("h3Y").get<long>();
      d.h2_x = h.at("h2X").get<long>();
      d.h2_y = h.at("h2Y").get<long>();
    } catch (const json::exception&) {
      throw ParseError("hodge needs integer fields h3X, h3Y, h2X, h2Y");
    }
    p.hodge = d;
  }
  if (doc.contains("gw")) {
    f.had_gw = true;
    if (!doc["gw"].is_array()) throw ParseError("gw must be an array");
    for (const auto& e : doc["gw"]) {
      if (!e.is_object() || !e.contains("class") || !e.contains("n")) throw ParseError("gw entries need class and n");
      f.gw.push_back({parse_vector(e["class"], "gw class"), parse_rational_field(e["n"], "gw n")});
    }
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer() || doc["order"].get<long long>() < 0) throw ParseError("order must be >= 0");
    f.order = doc["order"].get<int>();
  }
  if (doc.contains("base_rank")) {
    if (!doc["base_rank"].is_number_integer() || doc["base_rank"].get<long long>() < 0)
      throw ParseError("base_rank must be >= 0");
    f.base_rank = doc["base_rank"].get<std::size_t>();
  }
  if (doc.contains("lift")) f.lift = parse_matrix(doc["lift"], "lift");
  if (doc.contains("mixed")) {
    const json& m = doc["mixed"];
    const std::size_t rho = p.rho();
    MixedConstants mc(m.size(), rho);
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (!m[e].is_array() || m[e].size() != rho) throw ParseError("mixed must be x_dim x rho x rho");
      for (std::size_t a = 0; a < rho; ++a) {
        if (!m[e][a].is_array() || m[e][a].size() != rho) throw ParseError("mixed must be x_dim x rho x rho");
        for (std::size_t b = 0; b < rho; ++b) mc.set(e, a, b, parse_rational_field(m[e][a][b], "mixed"));
      }
    }
    f.mixed = mc;
  }
  return f;
}

PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_presentation(doc);
}

json presentation_to_json(const PresentationFile& f) {
  const TransitionPresentation& p = f.presentation;
  json doc = {{"k", p.k}, {"A", matrix_json(p.A)}, {"B", matrix_json(p.B)}, {"order", f.order}};
  if (p.triple) {
    json t = json::array();
    for (std::size_t a = 0; a < p.triple->dim(); ++a) {
      json ta = json::array();
      for (std::size_t b = 0; b < p.triple->dim(); ++b) {
        json tb = json::array();
        for (std::size_t c = 0; c < p.triple->dim(); ++c) tb.push_back(format_rational((*p.triple)(a, b, c)));
        ta.push_back(tb);
      }
      t.push_back(ta);
    }
    doc["triple"] = t;
  }
  if (p.hodge)
    doc["hodge"] = {{"h3X", p.hodge->h3_x}, {"h3Y", p.hodge->h3_y}, {"h2X", p.hodge->h2_x}, {"h2Y", p.hodge->h2_y}};
  if (f.had_gw) doc["gw"] = gw_json(f.gw);
  if (f.base_rank) doc["base_rank"] = *f.base_rank;
  if (f.lift) doc["lift"] = matrix_json(*f.lift);
  if (f.mixed) {
    json m = json::array();
    for (std::size_t e = 0; e < f.mixed->x_dim(); ++e) {
      json me = json::array();
      for (std::size_t a = 0; a < f.mixed->rho(); ++a) {
        json ma = json::array();
        for (std::size_t b = 0; b < f.mixed->rho(); ++b) ma.push_back(format_rational((*f.mixed)(e, a, b)));
        me.push_back(ma);
      }
      m.push_back(me);
    }
    doc["mixed"] = m;
  }
  return doc;
}

CommandResult cmd_validate(const std::string& path) {
  Loaded l = load_or_fail(path);
  if (!l.file) return l.failure;
  CommandResult r;
  bool ok = false;
  r.output = validation_json(*l.file, ok);
  if (!ok) {
    r.exit_code = exit_code::kValidationFailed;
    r.diagnostics = "validation failed";
  }
  return r;
}

CommandResult cmd_report(const std::string& path, const ReportOptions& options) {
  Loaded l = load_or_fail(path);
  if (!l.file) return l.failure;
  const PresentationFile& file = *l.file;
  CommandResult r;
  bool ok = false;
  r.output["validation"] = validation_json(file, ok);
  if (!ok) {
    r.exit_code = exit_code::kValidationFailed;
    r.diagnostics = "validation failed";
    return r;
  }
  if (options.series_order && *options.series_order < 0) {
    r.exit_code = exit_code::kParseOrUsage;
    r.diagnostics = "--series-order must be >= 0";
    r.output = {{"error", r.diagnostics}};
    return r;
  }
  const bool all = options.all_sections();
  if (all || options.monodromy) r.output["monodromy"] = monodromy_section(file);
  if (all || options.yukawa) r.output["yukawa"] = yukawa_section(file);
  if (all || options.glue) r.output["glue"] = glue_section(file);
  if (options.series_order) r.output["structural_coefficients"] = structural_section(file, *options.series_order);
  return r;
}

CommandResult cmd_transform(const std::string& path, const std::string& direction) {
  CommandResult r;
  if (direction != "x-to-y" && direction != "y-to-x") {
    r.exit_code = exit_code::kParseOrUsage;
    r.diagnostics = "direction must be x-to-y or y-to-x";
    r.output = {{"error", r.diagnostics}};
    return r;
  }
  Loaded l = load_or_fail(path);
  if (!l.file) return l.failure;
  const PresentationFile& file = *l.file;
  if (!file.had_gw) {
    r.exit_code = exit_code::kParseOrUsage;
    r.diagnostics = "transform needs a gw list";
    r.output = {{"error", r.diagnostics}};
    return r;
  }
  bool ok = false;
  json validation = validation_json(file, ok);
  if (!ok) {
    r.exit_code = exit_code::kValidationFailed;
    r.diagnostics = "validation failed";
    r.output = {{"validation", validation}};
    return r;
  }
  const TransitionPresentation& p = file.presentation;
  std::size_t base_rank = 0;
  if (file.base_rank) {
    base_rank = *file.base_rank;
  } else if (!file.gw.empty()) {
    std::size_t len = file.gw.front().cls.size();
    std::size_t free = p.k - rank(p.A);
    if (direction == "x-to-y")
      base_rank = len;
    else
      base_rank = len >= free ? len - free : 0;
  }
  try {
    ExtremalModel model(p, file.order);
    TransformOptions options = transform_options(file, base_rank);
    if (direction == "x-to-y") {
      TransformResult t = transform_prepotential(model, file.gw, options);
      std::vector<GwEntry> entries;
      for (const auto& [cls, n] : t.classes) entries.push_back({cls, n});
      r.output = {{"direction", direction},
                  {"base_rank", base_rank},
                  {"gw", gw_json(entries)},
                  {"cross_terms", to_string(t.cross_terms)}};
    } else {
      r.output = {{"direction", direction},
                  {"base_rank", base_rank},
                  {"gw", gw_json(restrict_prepotential(model, file.gw, options))}};
    }
  } catch (const Error& e) {
    r.exit_code = exit_code::kParseOrUsage;
    r.diagnostics = e.what();
    r.output = {{"error", e.what()}};
  }
  return r;
}

}  // namespace conifold
