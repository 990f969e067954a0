#include "canonx/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "canonx/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace canonx::cli {

using nlohmann::json;

std::vector<double> GridSpec::materialize() const { return linspace(lo, hi, n); }

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.n, &extra) != 3)
    fail(Errc::usage, "grid must be lo:hi:n, got '" + text + "'");
  if (g.n < 2) fail(Errc::usage, "grid needs n >= 2");
  if (!(g.lo < g.hi)) fail(Errc::usage, "grid needs lo < hi");
  return g;
}

namespace {

CanonicalParams parse_params(const std::string& text) {
  double a, b, c, d;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &a, &b, &c, &d, &extra) != 4)
    fail(Errc::usage, "--params must be a,b,c,d");
  return CanonicalParams::validate(a, b, c, d);
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2)
    return Complex(j[0].get<double>(), j[1].get<double>());
  fail(Errc::usage, "complex values are a number or [re, im]");
}

FunctionSpec parse_function(const json& j);

FunctionSpec parse_inner(const json& j) {
  if (!j.contains("inner")) fail(Errc::usage, "missing \"inner\" node");
  return parse_function(j.at("inner"));
}

FunctionSpec parse_function(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return fs::zero();
  if (kind == "constant") return fs::constant(parse_complex(j.at("value")));
  if (kind == "gaussian")
    return fs::gaussian(j.at("sigma").get<double>(), j.value("center", 0.0));
  if (kind == "gaussian_moment") return fs::gaussian_moment(j.at("sigma").get<double>());
  if (kind == "triangular_delta")
    return fs::triangular_delta(j.at("n").get<int>(), j.value("x", 0.0),
                                j.value("chirp_rate", 0.0));
  if (kind == "tabulated") {
    std::vector<double> grid = j.at("grid").get<std::vector<double>>();
    std::vector<Complex> values;
    for (const json& v : j.at("values")) values.push_back(parse_complex(v));
    return fs::tabulated(std::move(grid), std::move(values));
  }
  if (kind == "sum" || kind == "product") {
    const json& terms = j.at(kind == "sum" ? "terms" : "factors");
    if (!terms.is_array() || terms.empty())
      fail(Errc::usage, kind + " needs a nonempty array");
    FunctionSpec acc = parse_function(terms[0]);
    for (std::size_t i = 1; i < terms.size(); ++i)
      acc = kind == "sum" ? fs::sum(acc, parse_function(terms[i]))
                          : fs::product(acc, parse_function(terms[i]));
    return acc;
  }
  if (kind == "scale") return fs::scale(parse_complex(j.at("factor")), parse_inner(j));
  if (kind == "translate") return fs::translate(j.at("shift").get<double>(), parse_inner(j));
  if (kind == "dilate") return fs::dilate(j.at("factor").get<double>(), parse_inner(j));
  if (kind == "modulate_cos")
    return fs::modulate_cos(j.at("omega").get<double>(), parse_inner(j));
  if (kind == "modulate_sin")
    return fs::modulate_sin(j.at("omega").get<double>(), parse_inner(j));
  if (kind == "modulate_cexp")
    return fs::modulate_cexp(j.at("omega").get<double>(), parse_inner(j));
  if (kind == "chirp") return fs::chirp(j.at("rate").get<double>(), parse_inner(j));
  if (kind == "reflect_abs") return fs::reflect_abs(parse_inner(j));
  fail(Errc::usage, "unknown function kind '" + kind + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct BoehmianSpecJson {
  ConvKind kind = ConvKind::star;
  FunctionSpec f = fs::zero();
  double den_x = 0.0;
  int depth = 16;
};

BoehmianSpecJson parse_boehmian_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::usage, std::string("bad Boehmian JSON: ") + e.what());
  }
  BoehmianSpecJson out;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "star")
    out.kind = ConvKind::star;
  else if (kind == "theta")
    out.kind = ConvKind::theta;
  else
    fail(Errc::usage, "Boehmian kind must be star or theta");
  const json& num = j.at("numerator");
  if (num.at("template").get<std::string>() != "embed")
    fail(Errc::usage, "numerator template must be \"embed\"");
  out.f = parse_function(num.at("f"));
  const json& den = j.at("denominator");
  if (den.at("family").get<std::string>() != "triangular")
    fail(Errc::usage, "denominator family must be \"triangular\"");
  out.den_x = den.value("x", 0.0);
  out.depth = j.value("depth", 16);
  return out;
}

}  // namespace

FunctionSpec parse_function_json(const std::string& text) {
  try {
    return parse_function(json::parse(text));
  } catch (const json::exception& e) {
    fail(Errc::usage, std::string("bad function JSON: ") + e.what());
  }
}

FunctionSpec load_function(const std::string& path) {
  return parse_function_json(slurp(path));
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write " + tmp);
    out << content;
    if (!out) fail(Errc::io, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::io, "cannot rename " + tmp + " to " + path);
}

void write_field_csv(const std::string& path, const SampledField& field,
                     const std::string& label) {
  std::ostringstream os;
  os << label << ",re,im\n";
  for (std::size_t i = 0; i < field.grid.size(); ++i)
    os << fmt_double(field.grid[i]) << "," << fmt_double(field.values[i].real()) << ","
       << fmt_double(field.values[i].imag()) << "\n";
  write_text_atomic(path, os.str());
}

SampledField read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot read " + path);
  SampledField field;
  std::string line;
  if (!std::getline(in, line)) fail(Errc::io, "empty CSV " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double s, re, im;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &s, &re, &im) != 3)
      fail(Errc::io, "bad CSV row '" + line + "'");
    field.grid.push_back(s);
    field.values.push_back(Complex(re, im));
  }
  return field;
}

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"canonical cosine/sine transform toolkit"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string params_text = "0,1,-1,0";
  std::string grid_text;
  std::string kind_text = "lct", op_text = "classic", mode_text = "signed";
  double trunc = 0.0;
  int points = 0;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", params_text, "canonical quadruple a,b,c,d");
    sub->add_option("--trunc", trunc, "quadrature half-width T");
    sub->add_option("--points", points, "quadrature panel count N");
    sub->add_option("--tol", tol, "check tolerance");
  };

  CLI::App* tr = app.add_subcommand("transform", "evaluate a transform on a grid");
  add_common(tr);
  tr->add_option("--kind", kind_text, "lct|cct|cst");
  tr->add_option("--input", rc.input_path, "function spec JSON")->required();
  tr->add_option("--sgrid", grid_text, "output grid lo:hi:n")->required();
  tr->add_option("--out", rc.out_path, "output CSV path")->required();

  CLI::App* cv = app.add_subcommand("convolve", "evaluate a convolution on a grid");
  add_common(cv);
  cv->add_option("--op", op_text, "classic|star|theta|otimes");
  cv->add_option("--f", rc.input_path, "first operand JSON")->required();
  cv->add_option("--g", rc.g_path, "second operand JSON")->required();
  cv->add_option("--tgrid", grid_text, "output grid lo:hi:n")->required();
  cv->add_option("--out", rc.out_path, "output CSV path")->required();
  cv->add_option("--abs-mode", mode_text, "signed|mirrored");

  CLI::App* dl = app.add_subcommand("delta", "delta-sequence axiom report");
  add_common(dl);
  std::string family = "triangular";
  dl->add_option("--family", family, "delta family");
  dl->add_option("--x", rc.delta_x, "modulation parameter");
  dl->add_option("--nmax", rc.nmax, "deepest index");
  dl->add_option("--report", rc.report_path, "report JSON path")->required();

  CLI::App* bo = app.add_subcommand("boehmian", "finite-depth Boehmian checks");
  add_common(bo);
  bo->add_option("--check", rc.check, "quotient|equivalence|limit|delta-lim")->required();
  bo->add_option("--spec", rc.spec_path, "Boehmian JSON")->required();
  bo->add_option("--spec2", rc.spec2_path, "second Boehmian JSON");
  bo->add_option("--depth", rc.depth, "depth override");
  bo->add_option("--kmax", rc.kmax, "sequence length for delta-lim");
  bo->add_option("--report", rc.report_path, "report JSON path")->required();

  CLI::App* vf = app.add_subcommand("verify", "theorem adjudication suites");
  add_common(vf);
  vf->add_option("--suite", rc.suite, "conv-theorems|identities|semigroup|delta|roundtrip|all");
  vf->add_option("--abs-mode", mode_text, "signed|mirrored");
  vf->add_option("--report", rc.report_path, "report JSON path")->required();

  std::vector<std::string> args = argv;
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    fail(Errc::usage, e.what());
  }

  if (tr->parsed()) rc.command = Command::transform;
  if (cv->parsed()) rc.command = Command::convolve;
  if (dl->parsed()) {
    rc.command = Command::delta;
    if (family != "triangular") fail(Errc::usage, "--family must be triangular");
    if (rc.nmax < 4) fail(Errc::usage, "--nmax must be >= 4");
  }
  if (bo->parsed()) rc.command = Command::boehmian;
  if (vf->parsed()) rc.command = Command::verify;

  rc.params = parse_params(params_text);

  if (kind_text == "lct") rc.kind = TransformKind::lct;
  else if (kind_text == "cct") rc.kind = TransformKind::cct;
  else if (kind_text == "cst") rc.kind = TransformKind::cst;
  else fail(Errc::usage, "--kind must be lct, cct or cst");

  if (op_text == "classic") rc.op = ConvKind::classic;
  else if (op_text == "star") rc.op = ConvKind::star;
  else if (op_text == "theta") rc.op = ConvKind::theta;
  else if (op_text == "otimes") rc.op = ConvKind::otimes;
  else fail(Errc::usage, "--op must be classic, star, theta or otimes");

  if (mode_text == "signed") rc.abs_mode = AbsMode::signed_arg;
  else if (mode_text == "mirrored") rc.abs_mode = AbsMode::mirrored;
  else fail(Errc::usage, "--abs-mode must be signed or mirrored");

  if (!grid_text.empty()) rc.grid = parse_grid(grid_text);

  QuadratureConfig q = default_quadrature();
  rc.quadrature_overridden = trunc > 0.0 || points > 0 || tol > 0.0;
  rc.quadrature = QuadratureConfig::make(trunc > 0.0 ? trunc : q.trunc,
                                         points > 0 ? points : q.points,
                                         tol > 0.0 ? tol : q.tol);

  if (rc.command == Command::verify) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), rc.suite) == names.end())
      fail(Errc::usage, "unknown --suite " + rc.suite);
  }
  if (rc.command == Command::boehmian) {
    if (rc.check != "quotient" && rc.check != "equivalence" && rc.check != "limit" &&
        rc.check != "delta-lim")
      fail(Errc::usage, "--check must be quotient, equivalence, limit or delta-lim");
    if (rc.check == "equivalence" && rc.spec2_path.empty())
      fail(Errc::usage, "--check equivalence needs --spec2");
    if (rc.depth < 2) fail(Errc::usage, "--depth must be >= 2");
    if (rc.kmax < 2) fail(Errc::usage, "--kmax must be >= 2");
  }
  return rc;
}

namespace {

int run_transform(const RunConfig& rc) {
  const FunctionSpec f = load_function(rc.input_path);
  const SampledField field =
      transform_grid(f, rc.params, rc.kind, rc.grid.materialize(), rc.quadrature);
  write_field_csv(rc.out_path, field, "s");
  return 0;
}

int run_convolve(const RunConfig& rc) {
  const FunctionSpec f = load_function(rc.input_path);
  const FunctionSpec g = load_function(rc.g_path);
  const FunctionSpec conv = convolve(rc.op, f, g, rc.params, rc.abs_mode);
  const SampledField field = sample(conv, rc.grid.materialize(), rc.quadrature);
  write_field_csv(rc.out_path, field, "t");
  return 0;
}

int run_delta(const RunConfig& rc) {
  const DeltaSeqSpec spec{DeltaFamilyKind::triangular, rc.delta_x, rc.params};
  QuadratureConfig cfg = rc.quadrature;
  if (!rc.quadrature_overridden) cfg = QuadratureConfig::make(4.0, 4096, cfg.tol);
  const DeltaAxiomReport rep = check_axioms(spec, rc.nmax, cfg);
  json j;
  j["family"] = "triangular";
  j["x"] = rc.delta_x;
  j["params"] = rc.params.quad();
  j["checked_n"] = rep.checked_n;
  j["unit_integral_residuals"] = rep.unit_integral_residuals;
  j["norm_bound"] = rep.norm_bound;
  j["epsilons"] = rep.epsilons;
  j["tail_mass"] = rep.tail_mass;
  j["pass"] = rep.pass;
  write_text_atomic(rc.report_path, j.dump(2) + "\n");
  return rep.pass ? 0 : 1;
}

int run_boehmian(const RunConfig& rc) {
  const BoehmianSpecJson bj = parse_boehmian_json(slurp(rc.spec_path));
  const int depth = rc.depth > 0 ? rc.depth : bj.depth;
  const DeltaSeqSpec den{DeltaFamilyKind::triangular, bj.den_x, rc.params};
  const Boehmian B = embed(bj.f, den, bj.kind, depth);
  const QuadratureConfig cfg = rc.quadrature;
  json j;
  j["check"] = rc.check;
  j["depth"] = depth;
  j["kind"] = conv_kind_name(bj.kind);
  bool pass = false;
  if (rc.check == "quotient") {
    const QuotientReport qr = quotient_check(B, cfg, cfg.tol);
    j["max_residual"] = qr.max_residual;
    j["pairs_checked"] = qr.pairs_checked;
    pass = qr.pass;
  } else if (rc.check == "equivalence") {
    const BoehmianSpecJson bj2 = parse_boehmian_json(slurp(rc.spec2_path));
    const DeltaSeqSpec den2{DeltaFamilyKind::triangular, bj2.den_x, rc.params};
    const Boehmian B2 = embed(bj2.f, den2, bj2.kind, depth);
    pass = equivalence_check(B, B2, cfg, cfg.tol);
  } else if (rc.check == "limit") {
    const TransformKind which =
        bj.kind == ConvKind::star ? TransformKind::cct : TransformKind::cst;
    const TransformedBoehmian tb =
        transform_boehmian(B, which, linspace(-2.0, 2.0, 17), cfg);
    const LimitReport lr = limit_estimate(tb, tb.indices);
    j["sup_deltas"] = lr.sup_deltas;
    j["monotone"] = lr.monotone;
    pass = lr.monotone;
  } else {  // delta-lim
    std::vector<Boehmian> seq;
    for (int k = 1; k <= rc.kmax; ++k)
      seq.push_back(embed(fs::scale(1.0 + 1.0 / k, bj.f), den, bj.kind, depth));
    const DeltaLimReport dr = delta_lim_check(seq, B, cfg, cfg.tol);
    j["norms"] = dr.norms;
    j["probe_index"] = dr.probe_index;
    j["decreasing"] = dr.decreasing;
    pass = dr.decreasing;
  }
  j["pass"] = pass;
  write_text_atomic(rc.report_path, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

int run_verify(const RunConfig& rc) {
  AbsMode mode = rc.abs_mode;
  const SuiteResult res =
      run_suite(rc.suite, rc.params, mode, rc.quadrature, rc.quadrature_overridden);
  write_text_atomic(rc.report_path, reports_to_json(res.reports) + "\n");
  return res.all_pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& rc) {
  switch (rc.command) {
    case Command::transform: return run_transform(rc);
    case Command::convolve: return run_convolve(rc);
    case Command::delta: return run_delta(rc);
    case Command::boehmian: return run_boehmian(rc);
    case Command::verify: return run_verify(rc);
  }
  return 2;
}

int main_entry(const std::vector<std::string>& argv) {
#ifdef _OPENMP
  if (const char* cap = std::getenv("CANON_XFORM_THREADS")) {
    const int n = std::atoi(cap);
    if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
  }
#endif
  try {
    return run(parse_args(argv));
  } catch (const Error& e) {
    json err;
    err["error"] = errc_name(e.code());
    err["message"] = e.what();
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = "Exception";
    err["message"] = e.what();
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 2;
  }
}

}  // namespace canonx::cli
