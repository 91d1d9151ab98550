#include "huckel/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "huckel/oracle.hpp"
#include "huckel/schur.hpp"

namespace huckel {

PolyMatrix build_matrix(const MatrixSpec& spec) {
  BoundaryParams params = spec.params == ParamMode::Distinct ? BoundaryParams::distinct() : BoundaryParams::uniform();
  if (spec.x || spec.y) {
    if (!spec.x || !spec.y) throw Error(Errc::Usage, "--x and --y go together");
    params = BoundaryParams::constant(*spec.x, *spec.y);
  }
  const std::string& f = spec.family;
  if (f == "huckel") return build_huckel(spec.k, spec.n, params);
  if (f == "reduced") return build_reduced(spec.k, spec.n, params);
  if (f == "bordered") return build_bordered(spec.n, params);
  if (f == "symmetrized") return build_symmetrized(spec.k, spec.n, params).matrix;
  if (f == "pascal") return to_poly(build_pascal(PascalKind::Symmetric, spec.n));
  if (f == "pascal-lower") return to_poly(build_pascal(PascalKind::Lower, spec.n));
  if (f == "pascal-inverse") return to_poly(build_pascal(PascalKind::InverseLower, spec.n));
  throw Error(Errc::Usage, "unknown matrix family '" + f + "'");
}

namespace {

Json matrix_spec_json(const MatrixSpec& s) {
  Json j = {{"family", s.family}, {"k", s.k}, {"n", s.n}};
  if (s.x && s.y) j["x"] = *s.x, j["y"] = *s.y;
  else j["params"] = param_mode_name(s.params);
  return j;
}

void emit_json(const RunConfig& c, const Json& j, std::ostream& out) {
  if (!c.output) return;
  const std::string text = j.dump(2) + "\n";
  if (*c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(*c.output, std::ios::binary);
  if (!f || !(f << text)) throw Error(Errc::Io, "cannot write " + *c.output);
}

int verdict_code(bool pass) { return pass ? 0 : 1; }

void print_report(const VerifyReport& r, std::ostream& out, int verbosity) {
  out << r.id << " (k=" << r.k << ", n=" << r.n << ", " << r.params << ", " << mode_name(r.mode);
  if (r.seed) out << ", seed " << *r.seed;
  out << "): " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
    if (verbosity > 0 || !c.pass) {
      if (!c.lhs.empty()) out << "      lhs: " << c.lhs << "\n";
      if (!c.rhs.empty()) out << "      rhs: " << c.rhs << "\n";
    }
  }
}

std::string pi4_text(const ThetaRow& r) { return r.pi4.str() + (r.pi4_sqrt2 ? "*sqrt2" : ""); }

int cmd_tables(const RunConfig& c, std::ostream& out) {
  Json j = {{"schema", kSchemaVersion}, {"command", "tables"}};
  Json dets = Json::array();
  out << "det H_n(x, y):\n";
  for (int n = 0; n <= c.max_n; ++n) {
    const MultiPoly p = huckel_bivariate_det(n);
    out << "  n=" << n << ": " << p.to_string() << "\n";
    dets.push_back({{"n", n}, {"det", poly_json(p)}});
  }
  j["determinants"] = std::move(dets);
  Json rows = Json::array();
  out << "\n" << std::setw(3) << "n" << std::setw(10) << "A" << std::setw(8) << "A_HT" << std::setw(10) << "0"
      << std::setw(16) << "pi/6" << std::setw(10) << "pi/3" << std::setw(8) << "pi/2" << std::setw(18) << "pi/4"
      << std::setw(12) << "Mitra" << "\n";
  for (int n = 2; n <= c.max_n; ++n) {
    const ThetaRow r = theta_row(n);
    out << std::setw(3) << n << std::setw(10) << r.a.str() << std::setw(8) << r.aht.str();
    for (int t = 0; t < 4; ++t) out << std::setw(t == 1 ? 16 : t == 3 ? 8 : 10) << r.theta[std::size_t(t)].to_string();
    out << std::setw(18) << pi4_text(r);
    if (r.mitra) out << std::setw(12) << std::fixed << std::setprecision(2) << *r.mitra;
    out << "\n";
    Json row = {{"n", n}, {"A", r.a.str()}, {"A_HT", r.aht.str()}};
    Json th = Json::object();
    const char* names[] = {"0", "pi/6", "pi/3", "pi/2"};
    for (int t = 0; t < 4; ++t) th[names[t]] = cyc_json(r.theta[std::size_t(t)]);
    th["pi/4"] = pi4_text(r);
    row["theta"] = std::move(th);
    if (r.mitra) row["mitra"] = *r.mitra;
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  emit_json(c, j, out);
  return 0;
}

int cmd_formulas(const RunConfig& c, std::ostream& out) {
  if (c.table) {
    RunConfig t = c;
    return cmd_tables(t, out);
  }
  Json j = {{"schema", kSchemaVersion}, {"command", "formulas"}, {"target", c.target}};
  const std::string& t = c.target;
  std::string value;
  if (t == "A") {
    value = formula_A(c.n).str();
  } else if (t == "AHT") {
    value = formula_AHT(c.n).str();
  } else if (t == "macmahon") {
    if (c.box.size() != 3) throw Error(Errc::Usage, "macmahon needs --box a b c");
    value = formula_macmahon(c.box[0], c.box[1], c.box[2]).str();
  } else if (t == "identity") {
    value = unit_identity(c.n).str();
  } else if (t == "mitra") {
    std::ostringstream s;
    s << std::setprecision(10) << mitra_ratio(c.n) << " (series " << mitra_series(c.n) << ")";
    value = s.str();
  } else if (t == "predict") {
    value = predicted_det(parse_case(c.predict_case), c.n).value.to_string();
    j["case"] = c.predict_case;
  } else {
    throw Error(Errc::Usage, "formulas target is one of A, AHT, macmahon, identity, mitra, predict (or --table)");
  }
  out << value << "\n";
  j["n"] = c.n;
  j["value"] = value;
  emit_json(c, j, out);
  return 0;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  Json j = {{"schema", kSchemaVersion}, {"command", "oracle"}, {"target", c.target}};
  if (c.target == "partitions") {
    if (c.box.size() != 3) throw Error(Errc::Usage, "partitions needs three box sides");
    const BigInt count = count_plane_partitions(c.box[0], c.box[1], c.box[2]);
    const BigInt formula = formula_macmahon(c.box[0], c.box[1], c.box[2]);
    out << "enumerated " << count << ", product formula " << formula << "\n";
    j["count"] = count.str();
    j["formula"] = formula.str();
    j["verdict"] = count == formula ? "pass" : "fail";
    emit_json(c, j, out);
    return verdict_code(count == formula);
  }
  if (c.target == "audit-squares") {
    const MultiPoly p = det(build_huckel(c.k, c.n), DetStrategy::MultivariateInterpolation);
    const SquareAudit a = square_coefficient_audit(p);
    Json entries = Json::array();
    for (const auto& e : a.entries) {
      out << "  " << (e.monomial.empty() ? "1" : e.monomial) << ": " << e.coef;
      if (e.root) out << " = " << *e.root << "^2";
      else out << "  NOT A SQUARE";
      out << "\n";
      entries.push_back({{"monomial", e.monomial}, {"coef", e.coef.str()}, {"root", e.root ? Json(e.root->str()) : Json()}});
    }
    out << (a.all_squares ? "all coefficients are squares" : "some coefficients are not squares") << "\n";
    j["instance"] = {{"k", c.k}, {"n", c.n}};
    j["entries"] = std::move(entries);
    j["verdict"] = a.all_squares ? "pass" : "fail";
    emit_json(c, j, out);
    return verdict_code(a.all_squares);
  }
  throw Error(Errc::Usage, "oracle target is partitions or audit-squares");
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions opt;
  opt.mode = c.mode;
  opt.params = c.params;
  opt.seed = c.seed;
  std::vector<std::function<VerifyReport()>> tasks;
  const std::string& t = c.target;
  auto points_or = [&](int d) {
    VerifyOptions o = opt;
    o.points = c.points.value_or(d);
    return o;
  };
  if (t == "conj1") {
    tasks.push_back([n = c.n, o = points_or(5)] { return verify_conjecture1(n, o); });
  } else if (t == "conj2") {
    tasks.push_back([k = c.k, n = c.n, o = points_or(5)] { return verify_conjecture2(k, n, o); });
  } else if (t == "conj3") {
    tasks.push_back([k = c.k, n = c.n, o = points_or(3)] { return verify_conjecture3(k, n, o); });
  } else if (t == "props") {
    tasks.push_back([n = c.n, opt] { return verify_props(n, opt); });
  } else if (t == "lemma") {
    tasks.push_back([n = c.n] { return verify_rank1_coupling(n); });
  } else if (t == "bordered") {
    tasks.push_back([n = c.n] { return verify_bordered(n); });
  } else if (t == "condense") {
    tasks.push_back([n = c.n, opt] { return verify_condense(n, opt); });
  } else {
    throw Error(Errc::Usage, "verify target is conj1, conj2, conj3, props, lemma, bordered or condense");
  }
  const auto reports = run_parallel(tasks, c.jobs);
  bool pass = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    print_report(r, out, c.verbosity);
    pass = pass && r.pass();
    arr.push_back(report_json(r, c.timing));
  }
  emit_json(c, {{"schema", kSchemaVersion}, {"command", "verify"}, {"reports", arr}, {"verdict", pass ? "pass" : "fail"}}, out);
  return verdict_code(pass);
}

int run_inner(const RunConfig& c, std::ostream& out) {
  const std::string& s = c.subcommand;
  if (s == "build") {
    const PolyMatrix m = build_matrix(c.matrix);
    out << to_grid(m);
    emit_json(c, {{"schema", kSchemaVersion}, {"command", "build"}, {"matrix", matrix_spec_json(c.matrix)}, {"value", matrix_json(m)}}, out);
    return 0;
  }
  if (s == "det" || s == "perm") {
    const PolyMatrix m = build_matrix(c.matrix);
    const MultiPoly v = s == "det" ? det(m, c.strategy) : permanent(m);
    out << v.to_string() << "\n";
    Json j = {{"schema", kSchemaVersion}, {"command", s}, {"matrix", matrix_spec_json(c.matrix)}};
    if (s == "det") j["strategy"] = strategy_name(c.strategy);
    j["value"] = poly_json(v);
    emit_json(c, j, out);
    return 0;
  }
  if (s == "charpoly") {
    const MultiPoly p = charpoly(build_pascal(PascalKind::Symmetric, c.n));
    out << p.to_string() << "\n";
    emit_json(c, {{"schema", kSchemaVersion}, {"command", "charpoly"}, {"n", c.n}, {"value", poly_json(p)}}, out);
    return 0;
  }
  if (s == "condense") {
    const auto params = c.params == ParamMode::Distinct ? BoundaryParams::distinct() : BoundaryParams::uniform();
    const CondensationTrace t = condense(c.n, params);
    Json steps = Json::array();
    for (const auto& st : t.steps) {
      if (c.trace) out << "eliminated T_" << st.block << (st.border_added ? ", border added" : "") << ", size " << st.size << "\n";
      steps.push_back({{"block", st.block}, {"border_added", st.border_added}, {"size", st.size}});
    }
    out << to_grid(t.final_matrix);
    Json j = {{"schema", kSchemaVersion}, {"command", "condense"}, {"n", c.n}, {"params", param_mode_name(c.params)}};
    if (c.trace) j["steps"] = std::move(steps);
    j["final"] = matrix_json(t.final_matrix);
    j["matches_reduced"] = t.matches_reduced;
    emit_json(c, j, out);
    return 0;
  }
  if (s == "formulas") return cmd_formulas(c, out);
  if (s == "tables") return cmd_tables(c, out);
  if (s == "oracle") return cmd_oracle(c, out);
  if (s == "verify") return cmd_verify(c, out);
  throw Error(Errc::Usage, "missing subcommand");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_inner(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::NotDivisible:
      case Errc::NotRankOne:
      case Errc::BlockMismatch:
        return 1;
      default:
        return 2;
    }
  }
}

namespace {

void add_matrix_options(CLI::App* app, MatrixSpec& spec, std::vector<int>& huckel, std::vector<int>& reduced) {
  app->add_option("family", spec.family, "huckel, reduced, bordered, symmetrized, pascal, pascal-lower or pascal-inverse")
      ->check(CLI::IsMember({"huckel", "reduced", "bordered", "symmetrized", "pascal", "pascal-lower", "pascal-inverse"}));
  app->add_option("--k", spec.k, "first row index");
  app->add_option("--n", spec.n, "last row index (or Pascal size index)");
  app->add_option("--huckel", huckel, "shorthand for: huckel --k K --n N")->expected(2);
  app->add_option("--reduced", reduced, "shorthand for: reduced --k K --n N")->expected(2);
  app->add_option("--x", spec.x, "integer value for every x_i");
  app->add_option("--y", spec.y, "integer value for every y_i");
  app->add_flag_callback("--uniform", [&spec] { spec.params = ParamMode::Bivariate; }, "one symbolic pair x0, y0 for all rows");
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{"Exact determinants, permanents and conjecture checks for Hueckel matrices of honeycomb triangles"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::vector<int> huckel_kn, reduced_kn;
  std::string mode = "symbolic", params = "distinct", strategy = "auto";
  app.add_option("--json", c.output, "write a JSON report to this path ('-' for stdout)");
  app.add_flag("--timing", c.timing, "include elapsed seconds in JSON");
  app.add_option("--jobs", c.jobs, "worker threads for independent instances")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", c.verbosity, "print both sides of every check");

  auto* build = app.add_subcommand("build", "Print a matrix: H_{k,n}, its binomial counterpart, the bordered or symmetrized form, Pascal matrices");
  add_matrix_options(build, c.matrix, huckel_kn, reduced_kn);

  auto* detc = app.add_subcommand("det", "Exact determinant of a matrix family (e.g. the Hueckel matrix H_n)");
  add_matrix_options(detc, c.matrix, huckel_kn, reduced_kn);
  detc->add_option("--strategy", strategy,
                   "auto, fraction-free-elimination, sparse-minor-expansion, bivariate-interpolation, "
                   "permutation-expansion or multivariate-interpolation");

  auto* perm = app.add_subcommand("perm", "Permanent by Ryser's formula (determinant = permanent conjecture)");
  add_matrix_options(perm, c.matrix, huckel_kn, reduced_kn);

  auto* cp = app.add_subcommand("charpoly", "det(z I + Q_n) for the symmetric Pascal matrix Q_n");
  cp->add_option("--n", c.n)->required();

  auto* cond = app.add_subcommand("condense", "Schur condensation of H_n to a bordered matrix of size n+1");
  cond->add_option("--n", c.n)->required();
  cond->add_flag("--trace", c.trace, "report every eliminated block");
  cond->add_flag_callback("--uniform", [&c] { c.params = ParamMode::Bivariate; });

  auto* form = app.add_subcommand("formulas", "Product formulas: A(n), A_HT(n), MacMahon boxes, predicted angle determinants, Mitra ratio");
  form->add_option("target", c.target, "A, AHT, macmahon, identity, mitra or predict");
  form->add_flag("--table", c.table, "angle table with A, A_HT and det H_n(theta)");
  form->add_option("--max-n", c.max_n, "last n of the table");
  form->add_option("--n", c.n);
  form->add_option("--box", c.box)->expected(3);
  form->add_option("--case", c.predict_case, "theta0, thetaPi6, thetaPi3, thetaPi2, andrewsQI, ciucuMinusI, ciucuOmega3, ciucuOmega6");

  auto* orc = app.add_subcommand("oracle", "Brute force: plane partitions in a box, square coefficients of det H_{k,n}");
  orc->add_option("target", c.target, "partitions or audit-squares")->required();
  orc->add_option("sides", c.box, "box sides a b c")->expected(0, 3);
  orc->add_option("--n", c.n);
  orc->add_option("--k", c.k);

  auto* ver = app.add_subcommand("verify", "Check the triangle, trapezium and permanent conjectures and the structural propositions");
  ver->add_option("target", c.target, "conj1, conj2, conj3, props, lemma, bordered or condense")->required();
  ver->add_option("--n", c.n);
  ver->add_option("--k", c.k);
  ver->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "specialized"}));
  ver->add_option("--params", params)->check(CLI::IsMember({"distinct", "bivariate"}));
  ver->add_option("--seed", c.seed);
  ver->add_option("--points", c.points, "random points in specialized mode");

  auto* tab = app.add_subcommand("tables", "The determinant list of H_0..H_6 and the angle table");
  tab->add_option("--max-n", c.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (huckel_kn.size() == 2) c.matrix = {"huckel", huckel_kn[0], huckel_kn[1], c.matrix.params, c.matrix.x, c.matrix.y};
  if (reduced_kn.size() == 2) c.matrix = {"reduced", reduced_kn[0], reduced_kn[1], c.matrix.params, c.matrix.x, c.matrix.y};
  c.mode = mode == "symbolic" ? Mode::Symbolic : Mode::Specialized;
  c.params = params == "distinct" ? c.params : ParamMode::Bivariate;
  try {
    c.strategy = parse_strategy(strategy);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return run(c, std::cout, std::cerr);
}

}  // namespace huckel
