// disclab: discriminants, resultants, degree formulas, elimination of
// critical/KKT systems, cone scans, copositivity and curve grids.
//
// Exit status: 0 on success, 1 on input or domain errors, 2 when a
// reduction budget is exhausted.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "disclab/disclab.hpp"
#include "disclab/job.hpp"

namespace fs = std::filesystem;
using namespace disclab;

namespace {

Rational parse_number(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::InputParse, "empty number");
  std::string sign;
  if (s[0] == '-' || s[0] == '+') {
    if (s[0] == '-') sign = "-";
    s = s.substr(1);
  }
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (ip.empty()) ip = "0";
      std::string den = "1" + std::string(fp.size(), '0');
      Rational r(sign + ip + fp + "/" + den, 10);
      r.canonicalize();
      return r;
    }
    Rational r(sign + s, 10);
    if (r.get_den() == 0) throw Error(ErrorKind::InputParse, "zero denominator in '" + raw + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InputParse, "not a number: '" + raw + "'");
  }
}

/// "a=1,b=3/2" -> {a: 1, b: 3/2}
std::map<std::string, Rational> parse_assignments(const std::string& text) {
  std::map<std::string, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InputParse, "expected name=value, got '" + item + "'");
    auto name = split_names(item.substr(0, eq));
    if (name.size() != 1) throw Error(ErrorKind::InputParse, "bad assignment '" + item + "'");
    out[name[0]] = parse_number(item.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item).get_d());
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& s : split_names(text)) {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size() || v < 0) throw std::invalid_argument(s);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InputParse, "not a nonnegative integer: '" + s + "'");
    }
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputParse, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InputParse, "'" + path + "': " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputParse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json report_json(const MinReport& r) {
  json w = json::object();
  for (std::size_t i = 0; i < r.witness.size(); ++i) w[r.witness_vars->name(i)] = r.witness[i];
  return {{"value", r.value},       {"witness", w},        {"starts_used", r.starts_used},
          {"converged", r.converged}, {"spread", r.spread}, {"attained", r.attained},
          {"feasibility", r.feasibility}, {"seed", r.seed}};
}

/// Everything a subcommand produced: the JSON result, what to print, and
/// any extra files for the output directory.
struct Outcome {
  json result = json::object();
  std::string text;
  std::map<std::string, std::string> files;
};

struct Common {
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_dir, "Write manifest.json and result files into this directory");
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void write_outputs(const Outcome& o, const Common& c, const std::vector<std::string>& argv, const std::string& command,
                   double seconds) {
  if (c.out_dir.empty()) return;
  fs::create_directories(c.out_dir);
  std::vector<std::string> files{"manifest.json", "result.json"};
  {
    std::ofstream f(fs::path(c.out_dir) / "result.json");
    f << o.result.dump(2) << '\n';
  }
  for (const auto& [name, body] : o.files) {
    std::ofstream f(fs::path(c.out_dir) / name);
    f << body;
    files.push_back(name);
  }
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  json manifest = {{"command", command},   {"invocation", argv}, {"seed", c.seed},
                   {"version", kVersion},  {"finished_at", stamp}, {"elapsed_seconds", seconds},
                   {"files", files}};
  std::ofstream f(fs::path(c.out_dir) / "manifest.json");
  f << manifest.dump(2) << '\n';
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> invocation(argv, argv + argc);
  CLI::App app{"Discriminants, resultants and nonnegativity cone boundaries"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;

  // disc
  std::string d_poly, d_vars, d_coeff;
  bool d_affine = false;
  auto* disc = app.add_subcommand("disc", "Discriminant of a form (or of an affine polynomial with --affine)");
  disc->add_option("--poly", d_poly, "Polynomial")->required();
  disc->add_option("--vars", d_vars, "Form variables, comma separated")->required();
  disc->add_option("--coeff-vars", d_coeff, "Coefficient symbols, comma separated");
  disc->add_flag("--affine", d_affine, "Homogenize first");
  add_common(disc, common);

  // res
  std::vector<std::string> r_polys;
  std::string r_vars, r_var, r_coeff;
  auto* res = app.add_subcommand("res", "Resultant: Sylvester in --var, or of n forms in the n --vars");
  res->add_option("--poly", r_polys, "Polynomial (repeat)")->required();
  res->add_option("--vars", r_vars, "Form variables");
  res->add_option("--var", r_var, "Eliminate this single variable (Sylvester)");
  res->add_option("--coeff-vars", r_coeff, "Coefficient symbols");
  add_common(res, common);

  // degree
  unsigned g_num_vars = 0;
  std::string g_degrees, g_groups, g_group_degrees;
  long g_k = -1;
  auto* degree = app.add_subcommand("degree", "Discriminant degree formulas");
  degree->add_option("--num-vars", g_num_vars, "Number of variables of the forms");
  degree->add_option("--degrees", g_degrees, "Degrees d0,...,dm");
  degree->add_option("--k", g_k, "Report the degree in the coefficients of f_k only");
  degree->add_option("--groups", g_groups, "Multihomogeneous group sizes n1,...,nr");
  degree->add_option("--group-degrees", g_group_degrees, "Multihomogeneous group degrees d1,...,dr");
  add_common(degree, common);

  // eliminate
  std::string e_job;
  double e_seconds = 0;
  auto* elim = app.add_subcommand("eliminate", "Discriminantal locus of a parametric family (JSON job)");
  elim->add_option("--job", e_job, "Job file")->required();
  elim->add_option("--max-seconds", e_seconds, "Wall-clock budget (0 = none)");
  add_common(elim, common);

  // scan
  std::string s_poly, s_poly2, s_vars, s_params, s_at, s_kind = "sphere", s_groups;
  std::vector<std::string> s_eq, s_ineq;
  bool s_homog = false, s_compact = false, s_closed = false;
  unsigned s_starts = 64, s_thetas = 11;
  double s_band = 1e-4;
  auto* scan = app.add_subcommand("scan", "Numerical minimization and cone membership");
  scan->add_option("--poly", s_poly, "Objective")->required();
  scan->add_option("--vars", s_vars, "Variables")->required();
  scan->add_option("--params", s_params, "Parameters (fixed by --at)");
  scan->add_option("--at", s_at, "Parameter values, e.g. a=1,b=3");
  scan->add_option("--kind", s_kind, "sphere|product|simplex|constrained|classify|barrier|concavity")
      ->check(CLI::IsMember({"sphere", "product", "simplex", "constrained", "classify", "barrier", "concavity"}))
      ->capture_default_str();
  scan->add_option("--groups", s_groups, "Group sizes for --kind product");
  scan->add_option("--eq", s_eq, "Equality constraint g = 0 (repeat)");
  scan->add_option("--ineq", s_ineq, "Inequality constraint p >= 0 (repeat)");
  scan->add_flag("--homogenized", s_homog, "Minimize f^h over the hemisphere-projectivization");
  scan->add_flag("--compact", s_compact, "Assert K is compact");
  scan->add_flag("--closed-at-infinity", s_closed, "Assert K is closed at infinity");
  scan->add_option("--starts", s_starts, "Multistart count")->capture_default_str();
  scan->add_option("--tol-band", s_band, "Classification band")->capture_default_str();
  scan->add_option("--poly2", s_poly2, "Second form for --kind concavity");
  scan->add_option("--thetas", s_thetas, "Theta samples for --kind concavity")->capture_default_str();
  add_common(scan, common);

  // copositive
  std::string c_matrix, c_at;
  double c_band = 1e-4;
  unsigned c_starts = 64;
  auto* copos = app.add_subcommand("copositive", "Boundary product of principal minors; copositivity check");
  copos->add_option("--matrix", c_matrix, "Matrix JSON file")->required();
  copos->add_option("--at", c_at, "Parameter values for a numerical check");
  copos->add_option("--tol-band", c_band, "Classification band")->capture_default_str();
  copos->add_option("--starts", c_starts, "Multistart count")->capture_default_str();
  add_common(copos, common);

  // curve
  std::string v_phi, v_phi_file, v_params = "a,b", v_range = "-2,2,-2,2";
  std::size_t v_res = 256;
  auto* curve = app.add_subcommand("curve", "Sign grid and zero-level segments of phi(a,b)");
  curve->add_option("--phi", v_phi, "Polynomial in two parameters");
  curve->add_option("--phi-file", v_phi_file, "File holding phi");
  curve->add_option("--params", v_params, "The two parameter names")->capture_default_str();
  curve->add_option("--range", v_range, "amin,amax,bmin,bmax")->capture_default_str();
  curve->add_option("--resolution", v_res, "Cells per axis")->capture_default_str();
  add_common(curve, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (command == "disc") {
      auto fv = split_names(d_vars);
      auto vars = VarSet::make(concat(fv, split_names(d_coeff)));
      Polynomial f = parse_expression(d_poly, vars);
      Polynomial d = discriminant(f, fv, d_affine ? DiscMode::Affine : DiscMode::Form);
      o.text = to_string(d);
      o.result = {{"discriminant", o.text}, {"degree", d.is_zero() ? json(nullptr) : json(*d.degree())}};
    } else if (command == "res") {
      std::vector<std::string> fv = split_names(r_vars);
      if (!r_var.empty()) fv = {r_var};
      if (fv.empty()) throw Error(ErrorKind::Usage, "give --var or --vars");
      auto vars = VarSet::make(concat(fv, split_names(r_coeff)));
      std::vector<Polynomial> ps;
      for (const auto& s : r_polys) ps.push_back(parse_expression(s, vars));
      Polynomial r(vars);
      if (!r_var.empty()) {
        if (ps.size() != 2) throw Error(ErrorKind::Usage, "Sylvester resultant needs exactly two polynomials");
        r = sylvester_resultant(ps[0], ps[1], 0);
      } else if (fv.size() == 2 && ps.size() == 2) {
        r = binary_form_resultant(ps[0], ps[1], 0, 1);
      } else {
        std::vector<std::size_t> idx(fv.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        r = macaulay_resultant(ps, idx);
      }
      o.text = to_string(r);
      o.result = {{"resultant", o.text}};
    } else if (command == "degree") {
      if (!g_groups.empty()) {
        MultiHomogSpec ms{parse_unsigned_list(g_groups), parse_unsigned_list(g_group_degrees)};
        auto v = multihomog_disc_degree(ms);
        o.text = v.get_str();
        o.result = {{"multihomogeneous_degree", o.text}};
      } else {
        if (g_num_vars == 0 || g_degrees.empty())
          throw Error(ErrorKind::Usage, "give --num-vars and --degrees, or --groups and --group-degrees");
        DiscriminantSpec ds{g_num_vars, parse_unsigned_list(g_degrees)};
        json per = json::array();
        for (std::size_t k = 0; k < ds.degrees.size(); ++k) per.push_back(disc_degree_in_fk(ds, k).get_str());
        auto total = disc_total_degree(ds);
        if (g_k >= 0) o.text = disc_degree_in_fk(ds, static_cast<std::size_t>(g_k)).get_str();
        else o.text = total.get_str();
        o.result = {{"total_degree", total.get_str()}, {"degree_in_f", per}};
      }
    } else if (command == "eliminate") {
      auto job = parse_elimination_job(read_json_file(e_job));
      auto opt = GroebnerOptions::from_env();
      opt.max_seconds = e_seconds;
      auto rs = discriminantal_locus(job.family, opt, job.order);
      o.result = locus_to_json(rs, job);
      o.text = o.result.dump(2);
    } else if (command == "scan") {
      auto xs = split_names(s_vars);
      auto ps = split_names(s_params);
      auto at = parse_assignments(s_at);
      for (const auto& [k, v] : at)
        if (std::find(ps.begin(), ps.end(), k) == ps.end()) ps.push_back(k);
      auto vars = VarSet::make(concat(xs, ps));
      std::map<std::size_t, Rational> vals;
      for (const auto& p : ps) {
        auto it = at.find(p);
        if (it == at.end()) throw Error(ErrorKind::MissingCoordinate, "no value for parameter '" + p + "'");
        vals.emplace(vars->index(p), it->second);
      }
      auto prep = [&](const std::string& s) { return restrict_vars(specialize(parse_expression(s, vars), vals), xs); };
      ScanOptions so;
      so.starts = s_starts;
      so.seed = common.seed;
      so.threads = common.threads;
      Polynomial f = prep(s_poly);
      ConstraintSet K;
      for (const auto& s : s_eq) K.equalities.push_back(embed(prep(s), f.vars()));
      for (const auto& s : s_ineq) K.inequalities.push_back(embed(prep(s), f.vars()));
      K.compact = s_compact;
      K.closed_at_infinity = s_closed;
      if (s_kind == "sphere") {
        o.result = report_json(sphere_min(f, so));
      } else if (s_kind == "product") {
        std::vector<std::size_t> groups;
        for (auto g : parse_unsigned_list(s_groups)) groups.push_back(g);
        o.result = report_json(product_sphere_min(f, groups, so));
      } else if (s_kind == "simplex") {
        o.result = report_json(simplex_min(f, so));
      } else if (s_kind == "constrained") {
        o.result = report_json(constrained_min(f, K, s_homog, so));
      } else if (s_kind == "classify") {
        auto m = classify(f, K, s_band, so);
        o.result = {{"verdict", to_string(m.verdict)}, {"margin", m.margin}, {"report", report_json(m.report)}};
      } else if (s_kind == "barrier") {
        o.result = {{"barrier", barrier_value(f, s_band, so)}};
      } else {
        if (s_poly2.empty()) throw Error(ErrorKind::Usage, "--kind concavity needs --poly2");
        auto rep = concavity_probe(f, embed(prep(s_poly2), f.vars()), s_thetas, so);
        o.result = {{"thetas", rep.thetas},   {"lhs", rep.lhs}, {"rhs", rep.rhs}, {"lambda1", rep.lambda1},
                    {"lambda2", rep.lambda2}, {"worst_violation", rep.worst_violation}};
      }
      o.result["seed"] = common.seed;
      o.text = o.result.dump(2);
    } else if (command == "copositive") {
      auto A = parse_matrix_json(read_json_file(c_matrix));
      auto bp = copositive_boundary_poly(A);
      json factors = json::array();
      for (const auto& [I, d] : bp.factors) {
        json idx = json::array();
        for (auto i : I) idx.push_back(i + 1);
        factors.push_back({{"subset", idx}, {"minor", to_string(d)}});
      }
      o.result = {{"factors", factors}, {"total_degree", bp.total_degree}};
      if (bp.expanded) o.result["expanded"] = to_string(*bp.expanded);
      if (!c_at.empty()) {
        ScanOptions so;
        so.starts = c_starts;
        so.seed = common.seed;
        so.threads = common.threads;
        auto m = copositive_check(A, parse_assignments(c_at), c_band, so);
        o.result["check"] = {{"verdict", to_string(m.verdict)}, {"margin", m.margin}, {"report", report_json(m.report)}};
      }
      o.text = o.result.dump(2);
    } else if (command == "curve") {
      std::string text = v_phi;
      if (!v_phi_file.empty()) text = read_text_file(v_phi_file);
      if (text.empty()) throw Error(ErrorKind::Usage, "give --phi or --phi-file");
      auto names = split_names(v_params);
      if (names.size() != 2) throw Error(ErrorKind::WrongArity, "--params must name exactly two parameters");
      auto range = parse_doubles(v_range);
      if (range.size() != 4) throw Error(ErrorKind::Usage, "--range needs amin,amax,bmin,bmax");
      Polynomial phi = parse_expression(text, VarSet::make(names));
      auto g = curve_trace(phi, names[0], names[1], range[0], range[1], range[2], range[3], v_res);
      o.files["grid.csv"] = g.csv();
      o.files["curve.svg"] = g.svg();
      o.result = {{"phi", to_string(phi)},
                  {"resolution", v_res},
                  {"range", range},
                  {"segments", g.segments.size()},
                  {"components", count_components(g)}};
      o.text = common.out_dir.empty() ? g.csv() : o.result.dump(2);
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InputParse"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    write_outputs(o, common, invocation, command, secs);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InputParse"}, {"message", std::string("writing outputs: ") + e.what()}}.dump() << '\n';
    return 1;
  }
  std::cout << o.text << '\n';
  return 0;
}
