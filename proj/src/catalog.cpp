#include "tetracenters/catalog.hpp"

#include <fstream>
#include <sstream>

namespace tc {

CenterExpr CatalogEntry::areal() const {
  if (form == CoordForm::Areal) return expr;
  return CenterExpr::from_node(expr_binary(ExprNode::Kind::Mul, expr_symbol(ExprNode::Kind::SymA), expr.root()));
}

void Catalog::add(CatalogEntry e) {
  if (index_.count(e.id)) throw Error(ErrorCode::ValidationError, "duplicate center id " + e.id);
  index_[e.id] = entries_.size();
  entries_.push_back(std::move(e));
}

void Catalog::merge(const Catalog& other) {
  for (const auto& e : other.entries()) add(e);
}

const CatalogEntry* Catalog::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::at(const std::string& id) const {
  if (auto* e = find(id)) return *e;
  throw Error(ErrorCode::UnknownId, "no center '" + id + "'");
}

namespace {

CatalogEntry make_entry(const std::string& id, const std::string& name, CoordForm form, const std::string& text) {
  CatalogEntry e;
  e.id = id;
  e.name = name;
  e.form = form;
  try {
    e.expr = CenterExpr::parse(text);
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& err) {
    throw Error(ErrorCode::ValidationError, id + ": " + err.what());
  }
  e.takes_r = e.expr.uses_r();
  e.rational_only = e.expr.rational_only();
  return e;
}

struct Row {
  const char* id;
  const char* name;
  CoordForm form;
  const char* expr;
};

constexpr CoordForm T = CoordForm::Trilinear;
constexpr CoordForm A = CoordForm::Areal;

// ETC entries with angles eliminated via sin A = 2K/(bc), cos A = (b^2+c^2-a^2)/(2bc).
// Common factors symmetric in a,b,c (abc, K, a+b+c) are dropped.
const Row kRows[] = {
    {"X1", "incenter", T, "1"},
    {"X2", "centroid", T, "1/a"},                           // bc : ca : ab
    {"X3", "circumcenter", T, "a*(b^2+c^2-a^2)"},            // cos A
    {"X4", "orthocenter", T, "1/(a*(b^2+c^2-a^2))"},         // sec A
    // cos(B-C) = [a^2(b^2+c^2) - (b^2-c^2)^2] / (2a^2 bc)
    {"X5", "nine-point center", T, "(a^2*(b^2+c^2)-(b^2-c^2)^2)/a"},
    {"X6", "symmedian point", T, "a"},
    {"X7", "Gergonne point", A, "1/(b+c-a)"},               // trilinear bc/(b+c-a)
    {"X8", "Nagel point", A, "b+c-a"},                      // trilinear (b+c-a)/a
    {"X9", "Mittenpunkt", T, "b+c-a"},
    {"X10", "Spieker center", T, "(b+c)/a"},
    // 1 - cos(B-C) = (b-c)^2 (b+c-a)(a+b+c) / (2a^2 bc)
    {"X11", "Feuerbach point", T, "(b-c)^2*(b+c-a)/a"},
    {"X19", "Clawson point", T, "1/(b^2+c^2-a^2)"},          // tan A
    // reflection of X4 in X3; barycentrics -(3a^4 - 2a^2(b^2+c^2) - (b^2-c^2)^2)
    {"X20", "de Longchamps point", A, "2*a^2*(b^2+c^2)-3*a^4+(b^2-c^2)^2"},
    {"X25", "homothetic center of orthic and tangential triangles", T, "a/(b^2+c^2-a^2)"},  // a sec A
    {"X31", "2nd power point", T, "a^2"},
    {"X32", "3rd power point", T, "a^3"},
    {"X37", "crosspoint of X1 and X2", T, "b+c"},
    {"X38", "crosspoint of X1 and X75", T, "b^2+c^2"},
    {"X39", "Brocard midpoint", T, "a*(b^2+c^2)"},
    // cos B + cos C - cos A - 1, times 2abc
    {"X40", "Bevan point", T, "a^3+a^2*(b+c)-a*(b+c)^2-(b+c)*(b-c)^2"},
    {"X41", "X41", T, "a^2*(b+c-a)"},
    {"X42", "crosspoint of X1 and X6", T, "a*(b+c)"},
    {"X43", "X43", T, "1/b+1/c-1/a"},                       // ab + ac - bc
    {"X44", "X44", T, "b+c-2*a"},
    {"X48", "crosspoint of X1 and X63", T, "a^2*(b^2+c^2-a^2)"},  // a cos A
    // tan A cos(B-C)
    {"X53", "symmedian point of the orthic triangle", T,
     "(a^2*(b^2+c^2)-(b^2-c^2)^2)/(a*(b^2+c^2-a^2))"},
    {"X55", "internal center of similitude of circumcircle and incircle", T, "a*(b+c-a)"},
    {"X56", "external center of similitude of circumcircle and incircle", T, "a/(b+c-a)"},
    {"X57", "isogonal conjugate of X9", T, "1/(b+c-a)"},
    {"X58", "isogonal conjugate of X10", T, "a/(b+c)"},
    {"X63", "isogonal conjugate of X19", T, "b^2+c^2-a^2"},
    {"X69", "retrocenter", A, "b^2+c^2-a^2"},               // trilinear (b^2+c^2-a^2)/a
    {"X75", "isotomic conjugate of X1", T, "1/a^2"},
    {"X76", "3rd Brocard point", T, "1/a^3"},
    {"X81", "X81", T, "1/(b+c)"},
    {"X86", "X86", T, "1/(a*(b+c))"},
    // table of additional centers, verbatim trilinears
    {"Y1", "Y1", T, "1/(a^2*(b+c)-a*b*c)"},
    {"Y2", "Y2", T, "a/((b-a)*(c-a))"},
    {"Y3", "Y3", T, "a^2*(b+c)"},
    {"Y4", "Y4", T, "1/(a^2*(b+c))"},
    {"Y5", "Y5", T, "a/(b^2+c^2)"},
    {"Y6", "Y6", T, "a^2*(b^2+c^2)"},
    {"Y7", "Y7", T, "1/(a^2*(b^2+c^2))"},
    {"Y8", "Y8", T, "(b^2+c^2)/a"},
    {"Y9", "Y9", T, "a*(b+c-2*a)"},
    {"Y10", "Y10", T, "1/(a*(b+c-2*a))"},
    {"Y11", "Y11", T, "a/(b+c-2*a)"},
    {"Y12", "Y12", T, "a^2*(b+c-2*a)"},
    {"Y13", "Y13", T, "1/(a^2*(b+c-2*a))"},
    {"Y14", "Y14", T, "b+c-b*c/a"},
    {"POW", "r-power point", T, "a^r"},
    {"Z1", "Z1", T, "a^r*(b+c)"},
    {"Z2", "Z2", T, "a^r*(b^2+c^2)"},
    {"Z3", "Z3", T, "a^r*(b+c-a)"},
    {"Z4", "Z4", T, "a^r*(b+c-2*a)"},
    {"Z5", "Z5", T, "a^r*(b^2+c^2-a^2)"},
    {"Z6", "Z6", T, "a^r*(b^3+c^3)"},
    {"Z7", "Z7", T, "a^r*(b^2+c^2+b*c)"},
    {"Z8", "Z8", T, "2*a^r+b^r+c^r"},
    {"Z9", "Z9", T, "(b^r+c^r)/a"},
    {"Z10", "Z10", T, "(b^r+c^r-a^r)/a"},
    {"Z11", "Z11", T, "(b^r+c^r+2*a^r)/a"},
    // parametric families in areal form
    {"CONC1", "(b+c-a)^r", A, "(b+c-a)^r"},
    {"CONC2", "(b^2+c^2-a^2)^r", A, "(b^2+c^2-a^2)^r"},
    {"CONC3", "(1/b+1/c-1/a)^r", A, "(1/b+1/c-1/a)^r"},
    {"HYP1", "a^r(b+c-a)", A, "a^r*(b+c-a)"},
    {"HYP2", "a^r(b^2+c^2-a^2)", A, "a^r*(b^2+c^2-a^2)"},
    {"HYP3", "a^r(1/b+1/c-1/a)", A, "a^r*(1/b+1/c-1/a)"},
    {"Z8A", "2a^r+b^r+c^r (areal)", A, "2*a^r+b^r+c^r"},
    // harmonic-family centers, labelled as in the X43 note
    {"X102N", "X102 of the X43 note", T, "a*(1/b+1/c-1/a)"},
    {"X117N", "X117 of the X43 note", T, "(1/b+1/c-1/a)/a"},
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Catalog builtin_catalog() {
  Catalog cat;
  for (const auto& row : kRows) cat.add(make_entry(row.id, row.name, row.form, row.expr));
  return cat;
}

Catalog parse_catalog_text(const std::string& text, const std::string& source) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '|')) fields.push_back(trim(f));
    std::string where = source + ":" + std::to_string(lineno);
    if (fields.size() != 4) throw SyntaxError(0, where + ": expected 4 '|'-separated fields");
    CoordForm form;
    if (fields[1] == "trilinear") form = CoordForm::Trilinear;
    else if (fields[1] == "areal") form = CoordForm::Areal;
    else throw SyntaxError(0, where + ": form must be 'trilinear' or 'areal'");
    if (fields[3] != "yes" && fields[3] != "no") throw SyntaxError(0, where + ": takes_r must be yes or no");
    if (fields[0].empty() || fields[0].find_first_of(" @,") != std::string::npos)
      throw SyntaxError(0, where + ": bad id '" + fields[0] + "'");
    CatalogEntry e;
    try {
      e = make_entry(fields[0], fields[0], form, fields[2]);
    } catch (const SyntaxError& err) {
      throw SyntaxError(err.position(), where + ": " + fields[0]);
    }
    if (e.takes_r != (fields[3] == "yes"))
      throw Error(ErrorCode::ValidationError, fields[0] + ": takes_r flag disagrees with the expression");
    cat.add(std::move(e));
  }
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog_text(ss.str(), path);
}

std::string CenterRef::label() const {
  if (!entry.takes_r || !r) return entry.id;
  return entry.id + "@" + r->str();
}

CenterRef resolve_center(const Catalog& cat, const std::string& center_id) {
  std::size_t at = center_id.find('@');
  std::string id = center_id.substr(0, at);
  const CatalogEntry& e = cat.at(id);
  CenterRef ref{e, std::nullopt};
  if (at != std::string::npos) {
    if (!e.takes_r) throw Error(ErrorCode::InvalidArgument, id + " takes no parameter");
    ref.r = Rational::parse(center_id.substr(at + 1));
  } else if (e.takes_r) {
    throw Error(ErrorCode::InvalidArgument, id + " needs a parameter, e.g. " + id + "@2");
  }
  return ref;
}

namespace {

CatalogEntry derived(const CatalogEntry& e, const std::string& id, ExprPtr node) {
  CatalogEntry d;
  d.id = id;
  d.name = id;
  d.form = CoordForm::Areal;
  d.expr = CenterExpr::from_node(std::move(node));
  d.takes_r = e.takes_r;
  d.rational_only = d.expr.rational_only();
  return d;
}

}  // namespace

CatalogEntry isotomic_of(const CatalogEntry& e) {
  return derived(e, "isot(" + e.id + ")",
                 expr_binary(ExprNode::Kind::Div, expr_const(Rational(1)), e.areal().root()));
}

CatalogEntry isogonal_of(const CatalogEntry& e) {
  return derived(e, "isog(" + e.id + ")",
                 expr_binary(ExprNode::Kind::Div, expr_pow(expr_symbol(ExprNode::Kind::SymA), 2), e.areal().root()));
}

CatalogEntry power_of(const CatalogEntry& e, long q) {
  return derived(e, "(" + e.id + ")^" + std::to_string(q), expr_pow(e.areal().root(), q));
}

CatalogEntry a_power_times(const CatalogEntry& e, long r, long q) {
  return derived(e, "a^" + std::to_string(r) + "*(" + e.id + ")^" + std::to_string(q),
                 expr_binary(ExprNode::Kind::Mul, expr_pow(expr_symbol(ExprNode::Kind::SymA), r),
                             expr_pow(e.areal().root(), q)));
}

std::vector<Rational> default_r_values() { return {Rational(-2), Rational(-1), Rational(1), Rational(2), Rational(3)}; }

}  // namespace tc
