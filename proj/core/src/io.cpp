#include "planch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "planch/errors.hpp"

namespace planch {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace {

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  return j.at(key);
}

long long integer_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long long>();
}

double number_of(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

template <class F>
auto with_context(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected a rational string \"a/b\" or an integer");
}

Json to_json(const Rational& r) { return to_string(r); }
// + 0.0 turns -0 into 0 so reports do not depend on the sign of zero
Json to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json to_json(const LocalFieldSpec& f) {
  return Json{{"p", f.p}, {"f", f.f}, {"q", f.q()}, {"psi_level", f.psi_level}};
}

LocalFieldSpec field_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("field: expected an object");
  long psi = j.contains("psi_level") ? static_cast<long>(integer_of(j.at("psi_level"), "field.psi_level")) : 0;
  if (j.contains("p")) {
    long f = j.contains("f") ? static_cast<long>(integer_of(j.at("f"), "field.f")) : 1;
    return LocalFieldSpec::from_pf(static_cast<long>(integer_of(j.at("p"), "field.p")), f, psi);
  }
  return LocalFieldSpec::from_q(static_cast<long>(integer_of(field_of(j, "q", "field"), "field.q")), psi);
}

Json to_json(const SpectralFunction& f) {
  auto list = [](std::vector<GeometricFactor> v) {
    std::sort(v.begin(), v.end());
    Json a = Json::array();
    for (const auto& g : v) a.push_back({{"angle", to_string(g.angle)}, {"shift", to_string(g.shift)}});
    return a;
  };
  Json j{{"scalar", to_json(f.scalar().value())},
         {"exact_unit", f.scalar().exact_unit()},
         {"exponent", to_string(f.exponent())},
         {"num", list(f.numerator())},
         {"den", list(f.denominator())}};
  if (f.scalar().exact_unit()) {
    j["scalar_phase"] = to_string(f.scalar().phase());
    j["scalar_magnitude"] = f.scalar().magnitude().str();
  }
  return j;
}

Json to_json(const WDRep& r) {
  Json a = Json::array();
  for (const auto& x : r.atoms()) a.push_back({{"angle", to_string(x.angle)}, {"sp", x.sp}});
  return Json{{"atoms", a}};
}

WDRep rep_from_json(const Json& j) {
  if (j.is_string()) return parse_rep(j.get<std::string>());
  const Json& atoms = field_of(j, "atoms", "rep");
  if (!atoms.is_array()) throw InputError("rep.atoms: expected an array");
  std::vector<WDAtom> out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    std::string w = "rep.atoms[" + std::to_string(i) + "]";
    long long m = atoms[i].contains("sp") ? integer_of(atoms[i].at("sp"), w + ".sp") : 1;
    if (m < 1) throw InputError(w + ".sp: must be >= 1");
    out.emplace_back(rational_from_json(field_of(atoms[i], "angle", w), w + ".angle"), static_cast<int>(m));
  }
  return WDRep(std::move(out));
}

Json to_json(const TempPoint& pt) {
  Json a = Json::array();
  for (const auto& b : pt.blocks)
    a.push_back({{"k", b.k}, {"angle", to_string(b.angle)}, {"twist", to_string(b.twist)}});
  return Json{{"blocks", a}};
}

TempPoint point_from_json(const Json& j) {
  const Json& blocks = field_of(j, "blocks", "point");
  if (!blocks.is_array() || blocks.empty()) throw InputError("point.blocks: expected a non-empty array");
  TempPoint pt;
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::string w = "point.blocks[" + std::to_string(i) + "]";
    TempBlock b;
    long long k = integer_of(field_of(blocks[i], "k", w), w + ".k");
    if (k < 1) throw InputError(w + ".k: must be >= 1");
    b.k = static_cast<int>(k);
    b.angle = blocks[i].contains("angle") ? mod1(rational_from_json(blocks[i].at("angle"), w + ".angle")) : Rational(0);
    b.twist = blocks[i].contains("twist") ? mod1(rational_from_json(blocks[i].at("twist"), w + ".twist")) : Rational(0);
    pt.blocks.push_back(b);
  }
  return pt;
}

namespace {

Json entries_to_json(const std::vector<OrthEntry>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back({{"angle", to_string(e.atom.angle)}, {"sp", e.atom.sp}, {"mult", e.mult}});
  return a;
}

std::vector<OrthEntry> entries_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<OrthEntry> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    long long sp = j[i].contains("sp") ? integer_of(j[i].at("sp"), w + ".sp") : 1;
    long long mult = j[i].contains("mult") ? integer_of(j[i].at("mult"), w + ".mult") : 1;
    if (sp < 1 || mult < 1) throw InputError(w + ": sp and mult must be >= 1");
    OrthEntry e;
    e.atom = WDAtom(rational_from_json(field_of(j[i], "angle", w), w + ".angle"), static_cast<int>(sp));
    e.mult = static_cast<int>(mult);
    e.dim = e.atom.sp;
    out.push_back(e);
  }
  return out;
}

}  // namespace

Json to_json(const OrthTriple& t) {
  return Json{{"pairs", entries_to_json(t.pairs)},
              {"symplectic", entries_to_json(t.symplectic)},
              {"orthogonal", entries_to_json(t.orthogonal)}};
}

OrthTriple triple_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("triple: expected an object");
  OrthTriple t;
  auto part = [&](const char* key, const char* alias, std::vector<OrthEntry>& dst) {
    if (j.contains(key)) dst = entries_from_json(j.at(key), std::string("triple.") + key);
    else if (j.contains(alias)) dst = entries_from_json(j.at(alias), std::string("triple.") + alias);
  };
  part("pairs", "I^n", t.pairs);
  part("symplectic", "I^s", t.symplectic);
  part("orthogonal", "I^o", t.orthogonal);
  t.validate();
  return t;
}

Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    a.push_back(row);
  }
  return a;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix: expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw InputError("matrix[" + std::to_string(i) + "]: expected an array");
    std::vector<Rational> row;
    for (size_t k = 0; k < j[i].size(); ++k)
      row.push_back(rational_from_json(j[i][k], "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return QMatrix::from_rows(rows);
}

Json to_json(const TestFunction& phi) {
  if (phi.kind() == "constant") return Json{{"kind", "constant"}, {"c", phi.c0()}};
  if (phi.kind() == "gaussian")
    return Json{{"kind", "gaussian"}, {"amplitude", phi.c0()}, {"sigma", phi.sigma()},
                {"center", phi.center()}, {"modes", phi.modes()}};
  Json terms = Json::array();
  for (const auto& t : phi.terms())
    terms.push_back({{"coef", t.coef}, {"freq", t.freq}, {"phase", t.phase}, {"block", t.block}});
  return Json{{"kind", "trig"}, {"c0", phi.c0()}, {"symmetrize", phi.symmetrized()}, {"terms", terms}};
}

TestFunction test_function_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("phi: expected an object");
  std::string kind = j.contains("kind") && j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
  auto num = [&](const char* key, double dflt) { return j.contains(key) ? number_of(j.at(key), std::string("phi.") + key) : dflt; };
  if (kind == "constant") return TestFunction::constant(num("c", 1));
  if (kind == "gaussian") {
    long long modes = j.contains("modes") ? integer_of(j.at("modes"), "phi.modes") : 40;
    return TestFunction::gaussian(num("amplitude", 1), num("sigma", 0.1), num("center", 0), static_cast<int>(modes));
  }
  if (kind == "trig") {
    std::vector<TestFunction::Term> terms;
    const Json& arr = field_of(j, "terms", "phi");
    if (!arr.is_array()) throw InputError("phi.terms: expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string w = "phi.terms[" + std::to_string(i) + "]";
      TestFunction::Term t;
      t.coef = arr[i].contains("coef") ? number_of(arr[i].at("coef"), w + ".coef") : 1;
      t.freq = arr[i].contains("freq") ? static_cast<int>(integer_of(arr[i].at("freq"), w + ".freq")) : 1;
      t.phase = arr[i].contains("phase") ? number_of(arr[i].at("phase"), w + ".phase") : 0;
      t.block = arr[i].contains("block") ? static_cast<int>(integer_of(arr[i].at("block"), w + ".block")) : -1;
      terms.push_back(t);
    }
    bool sym = j.contains("symmetrize") ? with_context("phi.symmetrize", [&] { return j.at("symmetrize").get<bool>(); })
                                        : false;
    return TestFunction::trig(num("c0", 0), std::move(terms), sym);
  }
  throw InputError("phi.kind: expected constant, trig or gaussian");
}

Json to_json(const LimitReport& r) {
  Json lhs = Json::array();
  for (size_t i = 0; i < r.s.size(); ++i)
    lhs.push_back({{"s", r.s[i]}, {"value", to_json(r.lhs[i])}, {"error", r.lhs_error[i]}});
  return Json{{"field", to_json(r.field)},
              {"lhs_sequence", lhs},
              {"lhs_extrapolated", to_json(r.lhs_extrapolated)},
              {"extrapolation_error", r.extrapolation_error},
              {"rhs", to_json(r.rhs)},
              {"rhs_error", r.rhs_error},
              {"abs_discrepancy", r.abs_discrepancy},
              {"rel_discrepancy", r.rel_discrepancy},
              {"tol", r.tol},
              {"pass", r.pass},
              {"grid", r.grid},
              {"evaluations", r.evaluations},
              {"max_panels_used", r.max_panels_used},
              {"covering_order", r.covering},
              {"orthogonal_components", r.components},
              {"fit_exponent", r.fit_exponent}};
}

}  // namespace planch
