#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "pencilrank/btd.hpp"
#include "pencilrank/catalog.hpp"
#include "pencilrank/classification.hpp"
#include "pencilrank/document.hpp"
#include "pencilrank/kronecker.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/numeric_kronecker.hpp"
#include "pencilrank/polynomial_ranks.hpp"
#include "pencilrank/sequences.hpp"

namespace pencilrank::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultTolerance = 1e-8;

PencilDocument load(const std::string& path) {
  if (path == "-") return read_document(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_document(in);
  } catch (const DocumentError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("malformed ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const Integer num = q.numerator(), den = q.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

json rho_json(const MinimalRanks& r) { return json::array({r.r, r.s}); }

json structure_json(const KroneckerStructure& ks) {
  json divisors = json::array();
  for (const auto& d : ks.finite_divisors) {
    divisors.push_back({{"eigenvalue", d.eigenvalue.to_string()}, {"power", d.power}});
  }
  return {{"normal_rank", ks.normal_rank},
          {"min_col_indices", ks.min_col_indices},
          {"min_row_indices", ks.min_row_indices},
          {"finite_divisors", divisors},
          {"infinite_divisor_degrees", ks.infinite_divisor_degrees},
          {"text", ks.to_string()}};
}

json structure_json(const NumericStructure& ns) {
  json groups = json::array();
  for (const auto& g : ns.eigen_groups) {
    groups.push_back({{"re", g.value.real()},
                      {"im", g.value.imag()},
                      {"conjugate_pair", g.conjugate_pair},
                      {"powers", g.powers}});
  }
  return {{"normal_rank", ns.normal_rank},
          {"min_col_indices", ns.min_col_indices},
          {"min_row_indices", ns.min_row_indices},
          {"eigen_groups", groups},
          {"infinite_divisor_degrees", ns.infinite_divisor_degrees},
          {"threshold", ns.threshold},
          {"ill_conditioned", ns.ill_conditioned},
          {"warnings", ns.warnings},
          {"text", ns.to_string()}};
}

json attain_json(const AttainResult& at) {
  json j;
  j["verified_ranks"] = at.verified_ranks;
  j["rational"] = at.is_rational;
  if (at.is_rational) {
    const auto& t = at.rational;
    j["matrix"] = json::array({json::array({t.t11.to_string(), t.t12.to_string()}),
                               json::array({t.t21.to_string(), t.t22.to_string()})});
  } else {
    json rows = json::array();
    for (const auto& row : at.rows) {
      rows.push_back({{"modulus", row.modulus.to_string()},
                      {"t", row.t.to_string()},
                      {"u", row.u.to_string()},
                      {"point", row.point.to_string()},
                      {"decimal", row.decimal}});
    }
    j["rows"] = rows;
  }
  return j;
}

json family_json(const Classification& c, const FamilyLabel& label) {
  json params = json::object();
  for (const auto& [k, v] : label.parameters) params[k] = v.to_string();
  json j = {{"name", label.name},
            {"parameters", params},
            {"padding", {{"zero_rows", c.padding.zero_rows},
                         {"zero_cols", c.padding.zero_cols},
                         {"transposed", c.padding.transposed}}}};
  j["tensor_rank"] = c.in_catalog ? json(tensor_rank_lookup(label)) : json(0);
  return j;
}

std::array<int, 3> numeric_multilinear_rank(const FloatPencil& p, double threshold) {
  Eigen::MatrixXd ab(p.m(), 2 * p.n());
  ab << p.a, p.b;
  Eigen::MatrixXd abt(p.n(), 2 * p.m());
  abt << p.a.transpose(), p.b.transpose();
  Eigen::MatrixXd v(p.m() * p.n(), 2);
  v.col(0) = p.a.reshaped();
  v.col(1) = p.b.reshaped();
  return {numeric_rank(ab, threshold), numeric_rank(abt, threshold), numeric_rank(v, threshold)};
}

json analyze_exact(const Pencil& p, Field field) {
  json j;
  const KroneckerStructure ks = kronecker_structure(p, field);
  j["normal_rank"] = ks.normal_rank;
  j["kronecker"] = structure_json(ks);
  const AttainResult at = attain_transform(p, field);
  j["minimal_ranks"] = rho_json(at.ranks);
  j["attaining_transform"] = attain_json(at);
  j["multilinear_rank"] = multilinear_rank(p);
  if (p.m() <= 4 && p.n() <= 4) {
    const Classification c = classify(p);
    j["family"] = family_json(c, c.label);
  } else {
    j["family"] = "out of catalog";
  }
  return j;
}

json analyze_float(const FloatPencil& fp, Field field) {
  json j;
  const NumericStructure ns = staircase_structure(fp, field);
  j["normal_rank"] = ns.normal_rank;
  j["kronecker"] = structure_json(ns);
  j["minimal_ranks"] = rho_json(numeric_minimal_ranks(ns));
  j["multilinear_rank"] = numeric_multilinear_rank(fp, ns.threshold);
  j["family"] = "undetermined";
  if (fp.m() <= 4 && fp.n() <= 4) {
    // Snap to nearby rationals; accept the label only when the snapped pencil has the same structure.
    MatrixQ a(fp.m(), fp.n()), b(fp.m(), fp.n());
    bool snapped = true;
    for (int i = 0; i < fp.m() && snapped; ++i)
      for (int k = 0; k < fp.n() && snapped; ++k) {
        snapped = rational_reconstruction(fp.a(i, k), ns.threshold, 1000000L, a(i, k)) &&
                  rational_reconstruction(fp.b(i, k), ns.threshold, 1000000L, b(i, k));
      }
    if (snapped) {
      const Pencil p(a, b);
      if (ns.matches(kronecker_structure(p, field))) {
        const Classification c = classify(p);
        j["family"] = family_json(c, c.label);
        j["family"]["from_rationalized_entries"] = true;
      }
    }
  }
  return j;
}

json analyze_polynomial(const MatrixPolynomial& p, Field field) {
  const RankMinimizingDecomposition d = poly_minimal_ranks(p, field);
  json subspaces = json::array();
  for (const auto& s : d.subspaces) {
    json basis = json::array();
    for (const auto& v : s.basis) basis.push_back(v.to_string());
    subspaces.push_back({{"rank", s.rank_value}, {"basis", basis}});
  }
  return {{"minimal_ranks", d.tuple}, {"certified", d.certified}, {"subspaces", subspaces}};
}

std::string join(const json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].dump();
  return s + ")";
}

void print_text(const json& j, std::ostream& out) {
  out << "dimensions: " << j["m"].get<int>() << " x " << j["n"].get<int>() << "\n";
  out << "field: " << j["field"].get<std::string>() << "\n";
  out << "mode: " << j["mode"].get<std::string>() << "\n";
  if (j.contains("tolerance")) out << "tolerance: " << fmt(j["tolerance"].get<double>()) << "\n";
  if (j.contains("degree")) {
    out << "degree: " << j["degree"].get<int>() << "\n";
    out << "minimal ranks: " << join(j["minimal_ranks"]) << (j["certified"].get<bool>() ? "" : " (uncertified)")
        << "\n";
    for (const auto& s : j["subspaces"]) {
      out << "  rank " << s["rank"].get<int>() << ":";
      for (const auto& v : s["basis"]) out << " " << v.get<std::string>();
      out << "\n";
    }
    return;
  }
  out << "normal rank: " << j["normal_rank"].get<int>() << "\n";
  std::string text = j["kronecker"]["text"].get<std::string>();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  out << "kronecker structure: " << text << "\n";
  if (j["kronecker"].contains("ill_conditioned") && j["kronecker"]["ill_conditioned"].get<bool>()) {
    out << "  ill-conditioned: some singular value lies near the cutoff\n";
  }
  out << "minimal ranks: " << join(j["minimal_ranks"]) << "\n";
  if (j.contains("attaining_transform")) {
    const json& at = j["attaining_transform"];
    if (at["rational"].get<bool>()) {
      const json& t = at["matrix"];
      out << "attaining transform: [[" << t[0][0].get<std::string>() << ", " << t[0][1].get<std::string>()
          << "], [" << t[1][0].get<std::string>() << ", " << t[1][1].get<std::string>() << "]]\n";
    } else {
      out << "attaining transform (algebraic rows):\n";
      for (const auto& row : at["rows"]) {
        out << "  (" << row["decimal"][0].get<std::string>() << ", " << row["decimal"][1].get<std::string>()
            << ") over Q[x]/(" << row["modulus"].get<std::string>() << ")\n";
      }
    }
    out << "  ranks of transformed pair: " << join(at["verified_ranks"]) << "\n";
  }
  out << "multilinear rank: " << join(j["multilinear_rank"]) << "\n";
  const json& f = j["family"];
  if (f.is_string()) {
    out << "family: " << f.get<std::string>() << "\n";
  } else {
    out << "family: " << f["name"].get<std::string>();
    if (!f["parameters"].empty()) {
      out << " (";
      bool first = true;
      for (const auto& [k, v] : f["parameters"].items()) {
        out << (first ? "" : ", ") << k << " = " << v.get<std::string>();
        first = false;
      }
      out << ")";
    }
    out << "\n";
    const json& pad = f["padding"];
    if (pad["zero_rows"].get<int>() || pad["zero_cols"].get<int>() || pad["transposed"].get<bool>()) {
      out << "  padding: " << pad["zero_rows"].get<int>() << " zero rows, " << pad["zero_cols"].get<int>()
          << " zero columns" << (pad["transposed"].get<bool>() ? ", transposed" : "") << "\n";
    }
    out << "tensor rank: " << f["tensor_rank"].get<int>() << "\n";
  }
  for (const auto& w : j.value("warnings", json::array())) out << "warning: " << w.get<std::string>() << "\n";
}

struct AnalyzeOptions {
  std::string file;
  std::string field = "real";
  std::optional<double> tolerance;
  bool numeric = false;
  bool as_json = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const PencilDocument doc = load(o.file);
  const Field field = parse_field(o.field);
  json j = {{"m", doc.m}, {"n", doc.n}, {"field", to_string(field)}};
  j["mode"] = doc.mode == EntryMode::rational && !o.numeric ? "exact" : "numeric";
  if (doc.degree() > 2) {
    if (doc.mode != EntryMode::rational) throw InputError("matrix polynomials require rational entries");
    j["degree"] = doc.degree();
    j.update(analyze_polynomial(doc.polynomial(), field));
  } else if (doc.mode == EntryMode::rational && !o.numeric) {
    j.update(analyze_exact(doc.pencil(), field));
  } else {
    double tol = kDefaultTolerance;
    if (o.tolerance) {
      tol = *o.tolerance;
    } else if (doc.tolerance) {
      tol = *doc.tolerance;
    } else {
      err << "warning: no tolerance given; using " << fmt(kDefaultTolerance) << "\n";
    }
    if (!(tol > 0)) throw InputError("tolerance must be positive");
    j["tolerance"] = tol;
    FloatPencil fp = doc.float_pencil(tol);
    fp.tolerance = tol;
    j.update(analyze_float(fp, field));
    if (j["kronecker"]["ill_conditioned"].get<bool>()) {
      err << "warning: rank decisions are ill-conditioned at this tolerance\n";
    }
  }
  if (o.as_json) {
    out << j.dump(2) << "\n";
  } else {
    print_text(j, out);
  }
  return ok;
}

struct CanonicalOptions {
  std::string family;
  std::vector<std::string> params;
  bool equivalent = false;
  std::string output;
};

int cmd_canonical(const CanonicalOptions& o, std::ostream& out) {
  const FamilyRecord* rec = Catalog::builtin().find(normalize_family_name(o.family));
  if (!rec) throw InputError("unknown family '" + o.family + "'");
  std::map<std::string, Rational> params;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter '" + kv + "' is not of the form name=value");
    try {
      params[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("parameter '" + kv + "' has a malformed value");
    }
  }
  Pencil p = canonical_representative(rec->name, params);
  if (o.equivalent) {
    if (!rec->has_equivalent()) throw InputError("family " + rec->name + " lists no equivalent pencil");
    p = equivalent_representative(*rec, params);
  }
  PencilDocument doc = PencilDocument::from_pencil(p);
  std::string label = " " + rec->name;
  for (const auto& [k, v] : params) label += " " + k + "=" + v.to_string();
  doc.comments.push_back(label + (o.equivalent ? " (equivalent form)" : " (canonical form)"));
  const std::string text = write_document(doc);
  if (o.output.empty() || o.output == "-") {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return ok;
}

struct ApproxOptions {
  std::string file;
  std::string ranks;
  int trials = 20;
  int iters = 1000;
  unsigned long long seed = kDefaultSeed;
  std::string csv;
  std::string summary;
  std::optional<double> tolerance;
};

int cmd_approx(const ApproxOptions& o, std::ostream& out, std::ostream& err) {
  const PencilDocument doc = load(o.file);
  if (doc.degree() != 2) throw InputError("approx needs a pencil (degree 2 document)");
  const std::vector<int> rs = parse_int_list(o.ranks, "ranks");
  if (rs.size() != 2) throw InputError("--ranks expects r,s");
  const int r = rs[0], s = rs[1];
  if (r < 1 || s < 1) throw InputError("ranks must be positive");
  if (std::max(r, s) > std::min(doc.m, doc.n)) {
    throw InputError("ranks exceed min(m, n) = " + std::to_string(std::min(doc.m, doc.n)));
  }
  if (o.trials < 1 || o.iters < 1) throw InputError("--trials and --iters must be positive");
  AlsConfig config;
  config.max_iters = o.iters;
  std::vector<TrialOutcome> trials;
  std::string summary;
  bool experiment = false;
  if (doc.mode == EntryMode::rational) {
    const Pencil p = doc.pencil();
    experiment = r == s && p.m() == p.n() && r == p.n() - 1 && in_c(p);
    if (experiment) {
      const DivergenceReport report = divergence_experiment(p, r, s, o.trials, o.iters, o.seed, config);
      trials = report.trials;
      summary = summary_json(report);
    }
  }
  if (!experiment) {
    const Tensor3 t = doc.mode == EntryMode::rational ? pencil_to_tensor(doc.pencil())
                                                      : pencil_to_tensor(doc.float_pencil(kDefaultTolerance));
    trials = run_trials(t, r, s, o.trials, o.seed, config);
    summary = summary_json(trials, r, s, t.norm());
  }
  if (o.csv.empty() || o.csv == "-") {
    write_csv(out, trials);
  } else {
    std::ofstream f(o.csv);
    if (!f) throw InputError("cannot write '" + o.csv + "'");
    write_csv(f, trials);
  }
  if (o.summary.empty()) {
    (o.csv.empty() || o.csv == "-" ? err : out) << summary << "\n";
  } else {
    write_file(o.summary, summary + "\n");
  }
  return ok;
}

struct SequenceOptions {
  std::string kind;
  // pn
  int rows = 6, cols = 6, s = 4;
  bool tight = false;
  std::string indices = "1,10,100,1000,10000,100000";
  // zp
  int k = 1;
  std::string a = "0";
  std::string p_values = "1,10,100,1000";
  std::string q_file;
  unsigned long long seed = kDefaultSeed;
  std::string out_dir;
  std::string summary;
};

int cmd_sequence(const SequenceOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<std::filesystem::path> dir;
  if (!o.out_dir.empty()) {
    dir = o.out_dir;
    std::filesystem::create_directories(*dir);
  }
  json summary;
  if (o.kind == "pn") {
    const std::vector<int> idx = parse_int_list(o.indices, "indices");
    for (int n : idx) {
      if (n < 1) throw InputError("sequence index must be >= 1");
    }
    const PnInstance inst = o.tight ? tight_pn_instance(o.rows, o.cols, o.seed)
                                    : random_pn_instance(o.rows, o.cols, o.s, o.seed);
    const PnCondition cond = check_condition(inst);
    summary = {{"sequence", "pn"},
               {"m", inst.m()},
               {"n", inst.n()},
               {"s", inst.s()},
               {"tight", o.tight},
               {"seed", o.seed},
               {"condition", {{"rank_ab", cond.rank_ab}, {"rank_cd", cond.rank_cd}, {"holds", cond.holds}}},
               {"bound_constant", pn_bound_constant(inst)}};
    if (dir) write_file(*dir / "limit.pencil", write_document(PencilDocument::from_pencil(pn_limit(inst))));
    out << "n,distance,n_times_distance,max_factor_norm\n";
    for (int n : idx) {
      const double dist = std::sqrt(pn_distance_squared(inst, n).to_double());
      const double fnorm = pn_decomposition(inst, n).max_factor_norm();
      out << n << "," << fmt(dist) << "," << fmt(n * dist) << "," << fmt(fnorm) << "\n";
      if (dir) {
        write_file(*dir / ("P_" + std::to_string(n) + ".pencil"),
                   write_document(PencilDocument::from_pencil(sequence_pn(inst, n))));
      }
    }
  } else if (o.kind == "zp") {
    if (o.k < 1) throw InputError("k must be >= 1");
    const std::vector<int> ps = parse_int_list(o.p_values, "p values");
    for (int p : ps) {
      if (p < 1) throw InputError("p must be >= 1");
    }
    const Rational a = Rational::parse(o.a);
    std::optional<MatrixQ> q;
    if (!o.q_file.empty()) q = load(o.q_file).coefficient(0);
    const Pencil limit = zp_limit(o.k, a, q);
    summary = {{"sequence", "zp"},
               {"k", o.k},
               {"a", a.to_string()},
               {"limit_minimal_ranks", rho_json(minimal_ranks(limit, Field::real))}};
    if (dir) write_file(*dir / "limit.pencil", write_document(PencilDocument::from_pencil(limit)));
    out << "p,distance_squared,distance,rho_r,rho_s\n";
    for (int p : ps) {
      const Pencil z = sequence_zp(o.k, a, p, q);
      const Rational d2 = (z.a() - limit.a()).frobenius_norm_squared() + (z.b() - limit.b()).frobenius_norm_squared();
      const auto d = exact_sqrt(d2);
      const MinimalRanks rho = minimal_ranks(z, Field::real);
      out << p << "," << d2.to_string() << "," << (d ? d->to_string() : fmt(std::sqrt(d2.to_double()))) << ","
          << rho.r << "," << rho.s << "\n";
      if (dir) {
        write_file(*dir / ("Z_" + std::to_string(p) + ".pencil"), write_document(PencilDocument::from_pencil(z)));
      }
    }
  } else {
    throw InputError("unknown sequence '" + o.kind + "' (expected pn or zp)");
  }
  if (o.summary.empty()) {
    err << summary.dump() << "\n";
  } else {
    write_file(o.summary, summary.dump(2) + "\n");
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker structure, minimal ranks and approximation experiments for matrix pencils",
               args.empty() ? "pencilrank" : args[0]};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Structure, minimal ranks and family of a pencil file");
  analyze->add_option("file", ao.file, "Pencil document ('-' for stdin)")->required();
  analyze->add_option("--field", ao.field, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  analyze->add_option("--tolerance", ao.tolerance, "Rank tolerance for float input");
  analyze->add_flag("--numeric", ao.numeric, "Use the floating-point path for rational input too");
  analyze->add_flag("--json", ao.as_json, "Emit JSON");

  CanonicalOptions co;
  auto* canonical = app.add_subcommand("canonical", "Write the representative of a catalog family");
  canonical->add_option("family", co.family, "Family name such as R2,2 or S'3,2")->required();
  canonical->add_option("--param,-p", co.params, "Parameter binding name=value (repeatable)");
  canonical->add_flag("--equivalent", co.equivalent, "Write the listed equivalent pencil instead");
  canonical->add_option("--output,-o", co.output, "Output file (default stdout)");

  ApproxOptions xo;
  auto* approx = app.add_subcommand("approx", "Seeded ALS block-term approximation trials");
  approx->add_option("file", xo.file, "Pencil document")->required();
  approx->add_option("--ranks", xo.ranks, "Block ranks r,s")->required();
  approx->add_option("--trials", xo.trials, "Number of trials");
  approx->add_option("--iters", xo.iters, "Iterations per trial");
  approx->add_option("--seed", xo.seed, "Random seed");
  approx->add_option("--csv", xo.csv, "CSV log file (default stdout)");
  approx->add_option("--summary", xo.summary, "JSON summary file");

  SequenceOptions so;
  auto* sequence = app.add_subcommand("sequence", "Emit the P_n or Z_p sequence and its distance log");
  sequence->add_option("kind", so.kind, "pn or zp")->required()->check(CLI::IsMember({"pn", "zp"}));
  sequence->add_option("--rows", so.rows, "pn: rows of A, B");
  sequence->add_option("--cols", so.cols, "pn: rows of C, D");
  sequence->add_option("--s", so.s, "pn: columns of A, B, C, D");
  sequence->add_flag("--tight", so.tight, "pn: shared-column instance with s' = 4");
  sequence->add_option("--indices", so.indices, "pn: comma-separated n values");
  sequence->add_option("--k", so.k, "zp: half the Jordan block size");
  sequence->add_option("--a", so.a, "zp: eigenvalue (rational)");
  sequence->add_option("--p", so.p_values, "zp: comma-separated p values");
  sequence->add_option("--q", so.q_file, "zp: document whose A is the appended block");
  sequence->add_option("--seed", so.seed, "Random seed");
  sequence->add_option("--out-dir", so.out_dir, "Directory for the member pencil files");
  sequence->add_option("--summary", so.summary, "JSON summary file (default stderr)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*analyze) return cmd_analyze(ao, out, err);
    if (*canonical) return cmd_canonical(co, out);
    if (*approx) return cmd_approx(xo, out, err);
    if (*sequence) return cmd_sequence(so, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}

}  // namespace pencilrank::cli
