#include "liederiv/io_json.hpp"

#include <json.hpp>

#include "liederiv/parse.hpp"

namespace liederiv {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json algebra_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  json brackets = json::array();
  for (const auto& [ij, terms] : L.constants()) {
    json b;
    b["i"] = ij.first + 1;
    b["j"] = ij.second + 1;
    json ts = json::array();
    for (const auto& [s, c] : terms) ts.push_back(json::array({s + 1, rational_to_string(c)}));
    b["terms"] = ts;
    brackets.push_back(b);
  }
  j["brackets"] = brackets;
  return j;
}

AlgebraPtr algebra_from(const json& j, bool validate = true) {
  if (!j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
    throw InvalidInput("algebra JSON needs dim, basis and brackets");
  const std::size_t m = j.at("dim").get<std::size_t>();
  std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
  if (names.size() != m) throw InvalidInput("basis length does not match dim");
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms> constants;
  for (const auto& b : j.at("brackets")) {
    const std::size_t i = b.at("i").get<std::size_t>();
    const std::size_t jj = b.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i > m || jj > m || i >= jj)
      throw InvalidInput("bracket indices must satisfy 1 <= i < j <= dim");
    if (constants.count({i - 1, jj - 1})) throw InvalidInput("duplicate bracket entry");
    LieAlgebra::Terms terms;
    for (const auto& t : b.at("terms")) {
      const std::size_t s = t.at(0).get<std::size_t>();
      if (s < 1 || s > m) throw InvalidInput("bracket component out of range");
      terms.emplace_back(s - 1, parse_rational(t.at(1).get<std::string>()));
    }
    constants[{i - 1, jj - 1}] = std::move(terms);
  }
  auto algebra = std::make_shared<LieAlgebra>(std::move(names), std::move(constants));
  if (validate) {
    const JacobiReport report = validate_jacobi(*algebra);
    if (!report.ok) {
      const auto& v = report.violations.front();
      throw InvalidInput("structure constants violate the Jacobi identity at (" +
                         algebra->basis_name(v.i) + ", " + algebra->basis_name(v.j) + ", " +
                         algebra->basis_name(v.t) + ")");
    }
  }
  return algebra;
}

json rf_matrix_json(const Matrix<RationalFunction>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json rf_list_json(const std::vector<RationalFunction>& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

std::vector<RationalFunction> rf_list_from(const json& j, const Vars& vars) {
  std::vector<RationalFunction> out;
  for (const auto& s : j) out.push_back(parse_rational_function(s.get<std::string>(), vars));
  return out;
}

} // namespace

std::string algebra_to_json(const LieAlgebra& L) { return dump(algebra_json(L)); }

AlgebraPtr algebra_from_json(const std::string& text, bool validate) {
  return algebra_from(parse_json(text), validate);
}

std::string problem_to_json(const EmbeddingProblem& p) {
  json j;
  j["algebra"] = algebra_json(*p.algebra);
  json l1 = json::array();
  for (std::size_t i = 0; i < p.L1.rows.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < p.L1.rows.cols(); ++c)
      row.push_back(rational_to_string(p.L1.rows.at(i, c)));
    l1.push_back(row);
  }
  j["L1"] = l1;
  json comp = json::array();
  for (auto c : p.complement) comp.push_back(p.algebra->basis_name(c));
  j["complement"] = comp;
  return dump(j);
}

EmbeddingProblem problem_from_json(const std::string& text) {
  const json j = parse_json(text);
  AlgebraPtr algebra = algebra_from(j.at("algebra"));
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j.at("L1")) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
    if (r.size() != algebra->dim()) throw InvalidInput("L1 row arity mismatch");
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> complement;
  for (const auto& name : j.at("complement"))
    complement.push_back(algebra->basis_index(name.get<std::string>()));
  Subspace<Rational> L1 = span(algebra, rows, Rational(0));
  return EmbeddingProblem{std::move(algebra), std::move(L1), std::move(complement)};
}

ResultStats compute_stats(const EmbeddingResult& r) {
  ResultStats s;
  s.rank = module_rank(r.phi);
  s.kernel_dim = kernel(r.algebra, r.phi).dim();
  const TildeResult t = tilde_subalgebra(r.algebra, r.phi);
  s.tilde_codim = t.codim;
  s.tilde_trivial_intersection = t.trivial_intersection();
  return s;
}

std::string result_to_json(const EmbeddingResult& r, const ResultStats& stats) {
  json j;
  json phi;
  for (std::size_t i = 0; i < r.phi.size(); ++i)
    phi[r.algebra->basis_name(i)] = r.phi[i].to_string();
  j["phi"] = phi;
  j["rank"] = stats.rank;
  j["kernel_dim"] = stats.kernel_dim;
  j["tilde_codim"] = stats.tilde_codim;
  j["tilde_trivial_intersection"] = stats.tilde_trivial_intersection;
  j["variables"] = r.vars.names();
  j["k"] = r.k;
  j["w"] = rf_list_json(r.w.coeffs());
  json images = json::array();
  for (const auto& u : r.images) {
    json img;
    img["display"] = u.to_string();
    img["vf"] = rf_list_json(u.vf().coeffs());
    img["tensor"] = rf_list_json(u.tensor().coeffs());
    images.push_back(img);
  }
  j["images"] = images;
  j["B"] = rf_matrix_json(r.B);
  j["algebra"] = algebra_json(*r.algebra);
  return dump(j);
}

EmbeddingResult result_from_json(const std::string& text) {
  const json j = parse_json(text);
  AlgebraPtr algebra = algebra_from(j.at("algebra"));
  const Vars vars{j.at("variables").get<std::vector<std::string>>()};
  const std::size_t k = j.at("k").get<std::size_t>();
  const std::size_t m = algebra->dim();

  TensorElement w(algebra, vars, rf_list_from(j.at("w"), vars));
  std::vector<SemidirectElement> images;
  for (const auto& img : j.at("images")) {
    VectorField vf(vars, rf_list_from(img.at("vf"), vars));
    TensorElement t(algebra, vars, rf_list_from(img.at("tensor"), vars));
    images.emplace_back(std::move(vf), std::move(t));
  }
  Matrix<RationalFunction> B(m, m, RationalFunction::zero(vars));
  {
    const json& rows = j.at("B");
    if (rows.size() != m) throw InvalidInput("B must be dim x dim");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < m; ++c)
        B.at(i, c) = parse_rational_function(rows[i][c].get<std::string>(), vars);
  }
  std::vector<VectorField> phi;
  for (std::size_t i = 0; i < m; ++i)
    phi.push_back(parse_vector_field(j.at("phi").at(algebra->basis_name(i)).get<std::string>(), vars));
  return EmbeddingResult{std::move(algebra), vars, k, std::move(w), std::move(images), std::move(B),
                         std::move(phi)};
}

std::string candidate_to_json(const CandidateMatrix<RationalFunction>& c,
                              const std::vector<std::string>& params) {
  json j;
  j["algebra"] = algebra_json(*c.algebra);
  j["k"] = c.k;
  j["params"] = params;
  j["rows"] = rf_matrix_json(c.rows);
  return dump(j);
}

std::string candidate_to_json(const CandidateMatrix<Rational>& c) {
  json j;
  j["algebra"] = algebra_json(*c.algebra);
  j["k"] = c.k;
  j["params"] = json::array();
  json rows = json::array();
  for (std::size_t i = 0; i < c.rows.rows(); ++i) {
    json row = json::array();
    for (std::size_t col = 0; col < c.rows.cols(); ++col)
      row.push_back(rational_to_string(c.rows.at(i, col)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

CandidateMatrix<Rational> point_from_json(const std::string& text, AlgebraPtr algebra) {
  const json j = parse_json(text);
  if (!algebra) algebra = algebra_from(j.at("algebra"));
  const std::size_t k = j.at("k").get<std::size_t>();
  const std::size_t m = algebra->dim();
  const json& rows = j.at("rows");
  Matrix<Rational> mat(rows.size(), m, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m) throw InvalidInput("candidate row arity mismatch");
    for (std::size_t c = 0; c < m; ++c)
      mat.at(i, c) = parse_rational(rows[i][c].get<std::string>());
  }
  CandidateMatrix<Rational> out{std::move(algebra), k, std::move(mat)};
  out.check_shape();
  return out;
}

CandidateMatrix<RationalFunction> family_from_json(const std::string& text,
                                                   std::vector<std::string>* params_out,
                                                   AlgebraPtr algebra) {
  const json j = parse_json(text);
  if (!algebra) algebra = algebra_from(j.at("algebra"));
  const std::size_t k = j.at("k").get<std::size_t>();
  const std::size_t m = algebra->dim();
  std::vector<std::string> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
  if (params_out) *params_out = params;
  const Vars vars{params};
  const json& rows = j.at("rows");
  Matrix<RationalFunction> mat(rows.size(), m, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m) throw InvalidInput("candidate row arity mismatch");
    for (std::size_t c = 0; c < m; ++c)
      mat.at(i, c) = parse_rational_function(rows[i][c].get<std::string>(), vars);
  }
  CandidateMatrix<RationalFunction> out{std::move(algebra), k, std::move(mat)};
  out.check_shape();
  return out;
}

std::string variety_to_json(const VarietySystem& sys) {
  json j;
  j["unknowns"] = sys.unknowns.names();
  j["k"] = sys.k;
  json closure = json::array();
  for (const auto& p : sys.closure_eqs) closure.push_back(p.to_string());
  j["closure"] = closure;
  json degeneracy = json::array();
  for (const auto& p : sys.degeneracy_eqs) degeneracy.push_back(p.to_string());
  j["degeneracy"] = degeneracy;
  return dump(j);
}

std::string variety_to_text(const VarietySystem& sys) {
  std::string out;
  out += "# closure equations (" + std::to_string(sys.closure_eqs.size()) + ")\n";
  for (const auto& p : sys.closure_eqs) out += p.to_string() + "\n";
  out += "# degeneracy equations (" + std::to_string(sys.degeneracy_eqs.size()) + ")\n";
  for (const auto& p : sys.degeneracy_eqs) out += p.to_string() + "\n";
  return out;
}

VarietySystem variety_from_json(const std::string& text) {
  const json j = parse_json(text);
  VarietySystem sys;
  sys.unknowns = Vars{j.at("unknowns").get<std::vector<std::string>>()};
  sys.k = j.at("k").get<std::size_t>();
  for (const auto& s : j.at("closure"))
    sys.closure_eqs.push_back(parse_polynomial(s.get<std::string>(), sys.unknowns));
  for (const auto& s : j.at("degeneracy"))
    sys.degeneracy_eqs.push_back(parse_polynomial(s.get<std::string>(), sys.unknowns));
  return sys;
}

std::string jacobi_report_to_json(const JacobiReport& report, const LieAlgebra& L) {
  json j;
  j["ok"] = report.ok;
  json v = json::array();
  for (const auto& viol : report.violations) {
    json e;
    e["i"] = L.basis_name(viol.i);
    e["j"] = L.basis_name(viol.j);
    e["t"] = L.basis_name(viol.t);
    e["component"] = L.basis_name(viol.s);
    e["residual"] = rational_to_string(viol.residual);
    v.push_back(e);
  }
  j["violations"] = v;
  return dump(j);
}

std::string point_check_to_json(const PointCheck& c) {
  json j;
  j["full_rank"] = c.full_rank;
  j["closed"] = c.closed;
  j["in_Mk"] = c.in_Mk;
  j["in_M0k"] = c.in_M0k;
  return dump(j);
}

std::string family_check_to_json(const FamilyCheck& c) {
  json j;
  j["closed_generically"] = c.closed_generically;
  j["generic_rank"] = c.generic_rank;
  j["constant_intersection_dim"] = c.constant_intersection.dim();
  j["theorem1_ii_holds"] = c.theorem1_ii_holds;
  return dump(j);
}

std::string result_to_latex(const EmbeddingResult& r) {
  std::string out;
  out += "\\begin{align*}\n";
  for (std::size_t i = 0; i < r.images.size(); ++i)
    out += "e^{\\operatorname{ad} w} u_{" + std::to_string(i + 1) + "} &= " +
           r.images[i].to_latex() + "\\\\\n";
  for (std::size_t i = 0; i < r.phi.size(); ++i)
    out += "\\varphi(" + r.algebra->basis_name(i) + ") &= " + r.phi[i].to_latex() +
           (i + 1 < r.phi.size() ? "\\\\" : "") + "\n";
  out += "\\end{align*}\n";
  return out;
}

} // namespace liederiv
