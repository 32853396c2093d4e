#include "liederiv/vector_field.hpp"

#include <cctype>

#include "liederiv/parse.hpp"

namespace liederiv {

VectorField::VectorField(Vars vars) : vars_(vars) {
  coeffs_.assign(vars_.size(), RationalFunction::zero(vars_));
}

VectorField::VectorField(Vars vars, std::vector<RationalFunction> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != vars_.size()) throw VariableMismatch("coefficient count != variable count");
  for (const auto& c : coeffs_) require_same_vars(c.vars(), vars_);
}

VectorField VectorField::basis(Vars vars, std::size_t i) {
  VectorField d(std::move(vars));
  d.coeffs_[i] = RationalFunction::one(d.vars_);
  return d;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_vars(a.vars_, b.vars_);
  VectorField r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const RationalFunction& r, const VectorField& d) {
  require_same_vars(r.vars(), d.vars_);
  VectorField out = d;
  for (auto& c : out.coeffs_) c = r * c;
  return out;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  require_same_vars(vars_, f.vars());
  RationalFunction acc = RationalFunction::zero(vars_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    acc += coeffs_[i] * f.derivative(i);
  }
  return acc;
}

VectorField bracket(const VectorField& a, const VectorField& b) {
  require_same_vars(a.vars(), b.vars());
  const Vars& vars = a.vars();
  std::vector<RationalFunction> out(vars.size(), RationalFunction::zero(vars));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    RationalFunction acc = RationalFunction::zero(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!a.coeff(i).is_zero()) acc += a.coeff(i) * b.coeff(j).derivative(i);
      if (!b.coeff(i).is_zero()) acc -= b.coeff(i) * a.coeff(j).derivative(i);
    }
    out[j] = std::move(acc);
  }
  return VectorField(vars, std::move(out));
}

namespace {

struct SignedPiece {
  bool negative;
  std::string magnitude; // rendered without sign
};

SignedPiece split_sign(const RationalFunction& f) {
  const bool neg = f.num().leading_coefficient() < 0;
  return SignedPiece{neg, (neg ? -f : f).to_string()};
}

std::string join_signed(const std::vector<SignedPiece>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].negative ? "-" : "";
    else
      out += pieces[i].negative ? " - " : " + ";
    out += pieces[i].magnitude;
  }
  return out;
}

bool needs_parens(const std::string& s) {
  return s.find_first_of("+-/ ") != std::string::npos;
}

std::string latex_var(const std::string& n) {
  std::size_t split = n.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(n[split - 1]))) --split;
  if (split > 0 && split < n.size())
    return n.substr(0, split) + "_" +
           (n.size() - split > 1 ? "{" + n.substr(split) + "}" : n.substr(split));
  return n;
}

} // namespace

std::string VectorField::to_string() const {
  std::vector<SignedPiece> pieces;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    SignedPiece p = split_sign(coeffs_[i]);
    const std::string d = "d/d" + vars_.name(i);
    if (p.magnitude == "1")
      p.magnitude = d;
    else if (needs_parens(p.magnitude))
      p.magnitude = "(" + p.magnitude + ")*" + d;
    else
      p.magnitude += "*" + d;
    pieces.push_back(std::move(p));
  }
  if (pieces.empty()) return "0";
  return join_signed(pieces);
}

std::string VectorField::to_latex() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const bool neg = coeffs_[i].num().leading_coefficient() < 0;
    const RationalFunction mag = neg ? -coeffs_[i] : coeffs_[i];
    out += first ? (neg ? "-" : "") : (neg ? "-" : "+");
    first = false;
    std::string ms = mag.to_latex();
    if (ms == "1")
      ms.clear();
    else if (mag.is_polynomial() && mag.num().term_count() > 1)
      ms = "\\left(" + ms + "\\right)";
    out += ms + "\\partial_{" + latex_var(vars_.name(i)) + "}";
  }
  return out.empty() ? "0" : out;
}

VectorField parse_vector_field(const std::string& text, const Vars& vars) {
  VectorField out(vars);
  std::string trimmed;
  for (char c : text)
    if (!trimmed.empty() || !std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed.empty() || trimmed == "0") return out;

  // Split into signed terms at parenthesis depth zero.
  std::vector<std::pair<bool, std::string>> terms; // (negative, body)
  bool neg = false;
  std::string cur;
  int depth = 0;
  for (char c : trimmed) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!cur.empty()) terms.emplace_back(neg, cur);
      neg = (c == '-');
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) terms.emplace_back(neg, cur);

  std::vector<RationalFunction> coeffs(vars.size(), RationalFunction::zero(vars));
  for (auto& [negative, body] : terms) {
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    const std::size_t pos = body.rfind("d/d");
    if (pos == std::string::npos) throw ParseError("vector-field term without d/d: '" + body + "'");
    const std::string var_name = body.substr(pos + 3);
    const std::size_t idx = vars.index_of(var_name);
    if (idx == Vars::npos) throw ParseError("unknown direction 'd/d" + var_name + "'");
    std::string coeff_text = body.substr(0, pos);
    while (!coeff_text.empty() &&
           (coeff_text.back() == '*' || std::isspace(static_cast<unsigned char>(coeff_text.back()))))
      coeff_text.pop_back();
    RationalFunction c = coeff_text.empty() ? RationalFunction::one(vars)
                                            : parse_rational_function(coeff_text, vars);
    if (negative) c = -c;
    coeffs[idx] += c;
  }
  return VectorField(vars, std::move(coeffs));
}

} // namespace liederiv
