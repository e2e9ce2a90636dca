// planch: command-line front end.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 input error, 3 precondition violated, 4 budget exhausted.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planch/errors.hpp"
#include "planch/field.hpp"
#include "planch/forms.hpp"
#include "planch/io.hpp"
#include "planch/limit.hpp"
#include "planch/temp.hpp"
#include "planch/version.hpp"
#include "planch/wd.hpp"

using namespace planch;

namespace {

struct Options {
  long q = 0, p = 0, f = 1, psi_level = 0;
  std::string format = "json";
  std::string out;
};

LocalFieldSpec field_of(const Options& o) {
  if (o.q && o.p) {
    LocalFieldSpec a = LocalFieldSpec::from_q(o.q, o.psi_level);
    if (a.p != o.p) throw InputError("--q and --p disagree");
    return a;
  }
  if (o.q) return LocalFieldSpec::from_q(o.q, o.psi_level);
  if (o.p) return LocalFieldSpec::from_pf(o.p, o.f, o.psi_level);
  return LocalFieldSpec::from_q(3, o.psi_level);
}

long prime_of(const Options& o) { return field_of(o).p; }

// A path to a JSON file, or inline JSON / compact text.
Json load_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_json_file(arg);
  try {
    Json j = Json::parse(arg);
    if (j.is_object() || j.is_array()) return j;
  } catch (const Json::parse_error&) {
  }
  return Json(arg);
}

Json report_header(const std::string& command, const std::string& formula) {
  return Json{{"tool", "planch"}, {"version", kVersion}, {"command", command}, {"formula", formula}};
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_number_float()) {
    rows.emplace_back(prefix, fmt12(j.get<double>()));
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  }
  return os.str();
}

void emit(const Json& report, const Options& o) {
  std::string text = render(report, o.format);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

Json complex_pair(Complex z) { return to_json(z); }

// ------------------------------------------------------------ commands

int cmd_gamma(const Options& o, const std::string& rep_arg, const std::string& r, const std::vector<std::string>& s_values) {
  LocalFieldSpec field = field_of(o);
  WDRep rho = rep_from_json(load_arg(rep_arg));
  WDRep target;
  if (r == "std") target = rho;
  else if (r == "sym2") target = sym2(rho);
  else if (r == "wedge2") target = wedge2(rho);
  else if (r == "ad") target = ad_M(rho);
  else if (r == "ad-over-a") target = ad_M_over_A(rho);
  else throw InputError("--r must be one of std, sym2, wedge2, ad, ad-over-a");
  Json rep = report_header("gamma", "gamma(s, r(rho), psi) = eps(s) L(1-s, dual) / L(s)");
  rep["field"] = to_json(field);
  rep["rep"] = to_json(rho);
  rep["r"] = r;
  rep["target"] = to_json(target);
  if (target.empty()) {
    rep["gamma"] = "1";
    emit(rep, o);
    return 0;
  }
  SpectralFunction g = gamma_factor(target, field).normalized();
  rep["gamma"] = to_json(g);
  rep["gamma_text"] = g.str();
  rep["ord_at_zero"] = g.ord_zero_at_zero();
  rep["gamma_star"] = complex_pair(g.regularized_value());
  if (auto ex = g.regularized_value_exact()) {
    rep["gamma_star_exact"] = {{"phase", to_string(ex->phase())}, {"magnitude", ex->magnitude().str()}};
  }
  Json vals = Json::array();
  for (const auto& sv : s_values) {
    Rational s = parse_rational(sv);
    vals.push_back({{"s", to_string(s)}, {"value", complex_pair(g.evaluate(s))}});
  }
  rep["values"] = vals;
  emit(rep, o);
  return 0;
}

int cmd_density(const Options& o, const std::string& point_arg, const std::optional<std::string>& chi) {
  LocalFieldSpec field = field_of(o);
  TempPoint pt = point_from_json(load_arg(point_arg));
  Json rep = report_header("density", "mu_M(pi) = omega_pi(-1)^{d-1} gamma*(pi, Ad_M, psi)");
  rep["field"] = to_json(field);
  rep["point"] = to_json(pt);
  rep["parameter"] = to_json(parameter_of(pt));
  rep["density"] = complex_pair(plancherel_density(pt, field));
  WeylOrders w = weyl_orders(pt);
  rep["weyl_order"] = w.w.get_str();
  if (chi) {
    Rational a = mod1(parse_rational(*chi));
    rep["chi_angle"] = to_string(a);
    rep["density_chi"] = complex_pair(plancherel_density_chi(pt, a, field));
    rep["central_quotient_relation"] = central_quotient_relation_check(pt, a, field);
  }
  emit(rep, o);
  return 0;
}

int cmd_component_group(const Options& o, const std::string& rep_arg) {
  WDRep rho = rep_from_json(load_arg(rep_arg));
  ComponentGroups g = component_groups(rho);
  Json rep = report_header("component-group", "|S_phi+| = 2^K, |S_phi| by the determinant parity rule");
  rep["rep"] = to_json(rho);
  rep["self_duality"] = to_string(self_duality(rho));
  rep["s_plus"] = g.s_plus;
  rep["s"] = g.s;
  rep["fiber_ratio"] = g.fiber_ratio;
  emit(rep, o);
  return 0;
}

int cmd_fd_rhs(const Options& o, const std::string& rep_arg) {
  LocalFieldSpec field = field_of(o);
  WDRep rho = rep_from_json(load_arg(rep_arg));
  Json rep = report_header("fd-rhs", "|gamma*(wedge2 sigma, psi)| / |S_sigma|");
  rep["field"] = to_json(field);
  rep["rep"] = to_json(rho);
  rep["value"] = formal_degree_rhs(rho, field);
  if (auto ex = formal_degree_rhs_exact(rho, field)) rep["exact"] = ex->str();
  emit(rep, o);
  return 0;
}

struct LimitArgs {
  std::string triple, phi, s_seq = "0.1,8";
  double tol = 1e-3;
  int grid = 4096;
};

int cmd_limit_verify(const Options& o, const LimitArgs& a) {
  LocalFieldSpec field = field_of(o);
  OrthTriple t = triple_from_json(load_arg(a.triple));
  TestFunction phi = a.phi.empty() ? TestFunction::constant(1) : test_function_from_json(load_arg(a.phi));
  LimitConfig cfg;
  auto comma = a.s_seq.find(',');
  if (comma == std::string::npos) throw InputError("--s-seq expects \"s0,count\"");
  try {
    cfg.s0 = std::stod(a.s_seq.substr(0, comma));
    cfg.s_count = std::stoi(a.s_seq.substr(comma + 1));
  } catch (const std::exception&) {
    throw InputError("--s-seq expects \"s0,count\"");
  }
  if (!(a.tol > 0)) throw InputError("--tol must be positive");
  if (a.grid < 16 || a.grid > (1 << 22)) throw InputError("--grid must lie in [16, 2^22]");
  cfg.tol = a.tol;
  cfg.grid = a.grid;
  cfg.threads = threads_from_env();
  LimitReport r = verify(t, phi, field, cfg);
  Json rep = report_header("limit-verify",
                           "lim_{s->0+} d gamma(s,1) int Phi gamma(s,Sym2)^{-1} mu_chi = "
                           "2 int Phi gamma*(wedge2) / |S+| over the orthogonal locus");
  rep["triple"] = to_json(t);
  rep["phi"] = to_json(phi);
  rep["s_seq"] = {{"s0", cfg.s0}, {"count", cfg.s_count}};
  rep.update(to_json(r));
  emit(rep, o);
  return r.pass ? 0 : 1;
}

int cmd_classify_form(const Options& o, const std::string& matrix_arg) {
  long p = prime_of(o);
  QMatrix g = matrix_from_json(load_arg(matrix_arg));
  Json rep = report_header("classify-form", "gamma_t / gamma_0 orbit types in the twisted space of bilinear forms");
  rep["p"] = p;
  rep["matrix"] = to_json(g);
  auto [bs, ba] = split_sym_alt(g);
  rep["B_sym"] = to_json(bs);
  rep["B_alt"] = to_json(ba);
  rep["label"] = classify_sharp(g, p).str();
  rep["disc"] = disc_twisted(g, p).name();
  rep["char_poly"] = char_poly_twisted(g).str();
  emit(rep, o);
  return 0;
}

int cmd_charpoly(const Options& o, const std::string& matrix_arg, const std::string& flavor) {
  QMatrix g = matrix_from_json(load_arg(matrix_arg));
  Poly chi = char_poly_twisted(g);
  Json rep = report_header("charpoly", "det(T - Gamma^{-T} Gamma)");
  rep["matrix"] = to_json(g);
  rep["char_poly"] = chi.str();
  Json coeffs = Json::array();
  for (const auto& c : chi.coeffs()) coeffs.push_back(to_string(c));
  rep["coefficients"] = coeffs;
  if (!flavor.empty()) {
    Flavor fl;
    if (flavor == "orthogonal") fl = Flavor::orthogonal_even;
    else if (flavor == "symplectic") fl = Flavor::symplectic_odd;
    else throw InputError("--flavor must be orthogonal or symplectic");
    rep["flavor"] = flavor;
    rep["corresponding"] = correspond_char_poly(chi, fl).str();
  }
  if (o.p || o.q) {
    try {
      WeylDiscriminant w = weyl_discriminant_twisted(g, field_of(o));
      rep["weyl_discriminant"] = {{"fixed_dim", w.fixed_dim}, {"product", to_string(w.product)},
                                  {"valuation", w.valuation}, {"value", w.value}};
    } catch (const PreconditionError& e) {
      rep["weyl_discriminant"] = {{"regular", false}, {"reason", e.what()}};
    }
  }
  emit(rep, o);
  return 0;
}

int cmd_so_embed(const Options& o, int d, const std::string& ubar_arg) {
  OddSOEmbedding emb = build_odd_so(static_cast<size_t>(d));
  QMatrix u = matrix_from_json(load_arg(ubar_arg));
  Json rep = report_header("so-embed", "B_g(x, y) = Q(gx, y) on V inside SO(2d+1); Bruhat middle factor of u-bar");
  rep["d"] = d;
  rep["Q"] = to_json(emb.Q);
  std::string viol = group_violation(emb, u);
  if (!viol.empty()) throw PreconditionError("input is not in SO(U, Q): " + viol);
  QMatrix b = b_of_g(emb, u);
  auto [bs, ba] = split_sym_alt(b);
  rep["B"] = to_json(b);
  rep["B_sym"] = to_json(bs);
  rep["in_G_prime"] = det(b) != 0;
  if (in_nbar_shape(emb, u)) {
    QMatrix ell = ell_of(emb, u);
    rep["ell"] = to_json(ell);
    rep["B_sym_equals_minus_ell_ell"] = bs == -(ell.transpose() * ell);
    if (auto f = m_tilde_of(emb, u)) {
      rep["u1"] = to_json(f->u1);
      rep["w"] = to_json(f->w);
      rep["u2"] = to_json(f->u2);
      rep["m_tilde"] = to_json(f->m_tilde);
      rep["round_trip"] = f->u1 * f->w * f->u2 == u;
    }
  }
  emit(rep, o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planch: local gamma factors, Plancherel densities, spectral limits and form orbits"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sc, bool field) {
    if (field) {
      sc->add_option("--q", o.q, "residue field size (prime power)");
      sc->add_option("--p", o.p, "residue characteristic");
      sc->add_option("--f", o.f, "residue degree when --p is given")->check(CLI::PositiveNumber);
      sc->add_option("--psi-level", o.psi_level, "conductor exponent n(psi)");
    }
    sc->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sc->add_option("--out", o.out, "write the report to a file");
  };

  std::string rep_arg, r = "std", point_arg, matrix_arg, flavor, ubar_arg;
  std::vector<std::string> s_values;
  std::optional<std::string> chi;
  LimitArgs la;
  int d = 2;

  auto* g = app.add_subcommand("gamma", "gamma factor of r(rho)");
  g->add_option("--rep", rep_arg, "rep JSON file, inline JSON or compact text")->required();
  g->add_option("--r", r, "std, sym2, wedge2, ad, ad-over-a");
  g->add_option("--s", s_values, "rational points at which to evaluate");
  common(g, true);

  auto* dn = app.add_subcommand("density", "Plancherel densities of a tempered point");
  dn->add_option("--point", point_arg, "point JSON")->required();
  dn->add_option("--chi", chi, "angle of an unramified quadratic character at a uniformizer (0 or 1/2)");
  common(dn, true);

  auto* cg = app.add_subcommand("component-group", "component groups of an orthogonal parameter");
  cg->add_option("--rep", rep_arg)->required();
  common(cg, false);

  auto* fd = app.add_subcommand("fd-rhs", "formal degree right-hand side");
  fd->add_option("--rep", rep_arg)->required();
  common(fd, true);

  auto* lv = app.add_subcommand("limit-verify", "singular spectral limit check for an orthogonal triple");
  lv->add_option("--triple", la.triple)->required();
  lv->add_option("--phi", la.phi, "test function JSON (default: constant 1)");
  lv->add_option("--s-seq", la.s_seq, "\"s0,count\": s_k = s0 2^-k");
  lv->add_option("--tol", la.tol, "relative tolerance");
  lv->add_option("--grid", la.grid, "panel budget per one-dimensional pass");
  lv->add_option("--report", o.out, "alias of --out");
  common(lv, true);

  auto* cf = app.add_subcommand("classify-form", "orbit label of a bilinear form");
  cf->add_option("--matrix", matrix_arg)->required();
  common(cf, true);

  auto* cp = app.add_subcommand("charpoly", "twisted characteristic polynomial");
  cp->add_option("--matrix", matrix_arg)->required();
  cp->add_option("--flavor", flavor, "orthogonal or symplectic correspondence");
  common(cp, true);

  auto* so = app.add_subcommand("so-embed", "embedding into SO(2d+1) and the Bruhat middle factor");
  so->add_option("--d", d)->check(CLI::Range(1, 16));
  so->add_option("--ubar", ubar_arg)->required();
  common(so, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*g) return cmd_gamma(o, rep_arg, r, s_values);
    if (*dn) return cmd_density(o, point_arg, chi);
    if (*cg) return cmd_component_group(o, rep_arg);
    if (*fd) return cmd_fd_rhs(o, rep_arg);
    if (*lv) return cmd_limit_verify(o, la);
    if (*cf) return cmd_classify_form(o, matrix_arg);
    if (*cp) return cmd_charpoly(o, matrix_arg, flavor);
    if (*so) return cmd_so_embed(o, d, ubar_arg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
