#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "majdist/closed_forms.hpp"
#include "majdist/errors.hpp"
#include "majdist/json.hpp"
#include "majdist/kr_koh.hpp"
#include "majdist/permutations.hpp"
#include "majdist/schur.hpp"
#include "majdist/tableaux.hpp"
#include "majdist/verify.hpp"

namespace majdist::cli {

namespace {

struct Config {
  int max_cells = 18;
  int perm_limit = 10;
  int jobs = 1;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--max-cells", cfg.max_cells, "Oracle cell limit")
      ->envname("MAJDIST_MAX_CELLS")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->envname("MAJDIST_JOBS")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "Output format (verify only honours csv)")
      ->envname("MAJDIST_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", cfg.out_path, "Write the document to this file");
}

OracleConfig oracle_config(const Config& cfg) {
  OracleConfig o;
  o.cell_limit = cfg.max_cells;
  o.two_row_limit = std::max(o.two_row_limit, cfg.max_cells);
  return o;
}

void emit(const std::string& doc, const Config& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file: " + cfg.out_path);
  file << doc;
}

void emit_json(const Json& j, const Config& cfg, std::ostream& out) { emit(j.dump(2) + "\n", cfg, out); }

SkewShape shape_arg(const std::string& shape, const std::string& inner) {
  if (inner.empty()) return parse_shape(shape);
  if (shape.find('/') != std::string::npos) throw DomainError("give the inner shape once");
  return SkewShape(parse_partition(shape), parse_partition(inner));
}

Params parse_params(const std::string& text) {
  Params out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("bad parameter: " + item);
    try {
      std::size_t used = 0;
      const int value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw DomainError("bad parameter value: " + item);
    }
    pos = end + 1;
  }
  return out;
}

Json tableau_json(const StandardTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.entries()) rows.push_back(row);
  return rows;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Major index distributions over standard Young tableaux", "majdist"};
  app.require_subcommand(1);
  Config cfg;

  std::string shape, inner, method = "h", suite = "all", params_text, id, perm;
  std::optional<int> n, k, j, i, a;
  int vars = 0, descents = 0, bound = 0;

  auto* dist_cmd = app.add_subcommand("dist", "Descent/major-index distribution of a shape");
  dist_cmd->add_option("--shape", shape, "Shape, e.g. 3,2,1 or 3,2/1")->required();
  dist_cmd->add_option("--inner", inner, "Inner partition");
  add_common(dist_cmd, cfg);

  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed formula");
  formula_cmd->add_option("--id", id, "Formula id")->required();
  formula_cmd->add_option("--params", params_text, "Parameters, e.g. n=3,k=2,i=1");
  formula_cmd->add_option("--n", n);
  formula_cmd->add_option("--k", k);
  formula_cmd->add_option("--j", j);
  formula_cmd->add_option("--i", i);
  add_common(formula_cmd, cfg);

  auto* schur_cmd = app.add_subcommand("schur", "Principal specialization of a Schur function");
  schur_cmd->add_option("--shape", shape)->required();
  schur_cmd->add_option("--inner", inner);
  schur_cmd->add_option("--vars", vars, "Number of variables m")->required()->check(CLI::PositiveNumber);
  schur_cmd->add_option("--method", method)->check(CLI::IsMember({"h", "e", "ssyt"}));
  add_common(schur_cmd, cfg);

  auto* kr_cmd = app.add_subcommand("kr", "Kostka polynomial through admissible sequences");
  kr_cmd->add_option("--shape", shape)->required();
  kr_cmd->add_option("--descents", descents)->required()->check(CLI::NonNegativeNumber);
  add_common(kr_cmd, cfg);

  auto* koh_cmd = app.add_subcommand("koh", "KOH expansion of [n+a, n]");
  koh_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  koh_cmd->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
  add_common(koh_cmd, cfg);

  auto* sagan_cmd = app.add_subcommand("sagan", "A_{n,k} polynomials over 321-avoiders");
  sagan_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sagan_cmd->add_option("--perm-limit", cfg.perm_limit)->envname("MAJDIST_PERM_LIMIT");
  add_common(sagan_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "Suite id or all");
  verify_cmd->add_option("--bound", bound, "Principal grid bound (0 = suite default)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--perm-limit", cfg.perm_limit)->envname("MAJDIST_PERM_LIMIT");
  add_common(verify_cmd, cfg);

  auto* rsk_cmd = app.add_subcommand("rsk", "Row-insertion RSK of a permutation");
  rsk_cmd->add_option("--perm", perm, "Permutation, e.g. 2,1,3")->required();
  add_common(rsk_cmd, cfg);

  std::vector<const char*> argv{"majdist"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const OracleConfig oracle = oracle_config(cfg);
    if (dist_cmd->parsed()) {
      emit_json(to_json(distribution(shape_arg(shape, inner), oracle)), cfg, out);
      return 0;
    }
    if (formula_cmd->parsed()) {
      Params p = parse_params(params_text);
      for (auto [name, v] : {std::pair{"n", n}, std::pair{"k", k}, std::pair{"j", j}, std::pair{"i", i}}) {
        if (v) p[name] = *v;
      }
      emit_json(to_json(evaluate_formula(id, p)), cfg, out);
      return 0;
    }
    if (schur_cmd->parsed()) {
      const SkewShape s = shape_arg(shape, inner);
      const QPoly h = jt_h_specialization(s, vars);
      const QPoly e = jt_e_specialization(s, vars);
      const QPoly direct = ssyt_principal_spec(s, vars);
      const QPoly& value = method == "h" ? h : method == "e" ? e : direct;
      const bool agree = h == direct && e == direct;
      const auto st = shape_stats(value);
      Json doc{{"shape", format_shape(s)},
               {"vars", vars},
               {"method", method},
               {"value", to_json(value)},
               {"cross_check", {{"jt_h", h == direct}, {"jt_e", e == direct}, {"agree", agree}}},
               {"symmetric", st.symmetric},
               {"unimodal", st.unimodal}};
      emit_json(doc, cfg, out);
      return agree ? 0 : 1;
    }
    if (kr_cmd->parsed()) {
      const Partition lambda = parse_partition(shape);
      const int nn = lambda.size();
      Json summands = Json::array();
      bool identities = true;
      for (const auto& alpha : admissible_sequences(lambda, descents)) {
        const auto d = kr_summand_details(alpha);
        Json alphas = Json::array();
        for (const auto& p : alpha.alphas) alphas.push_back(format_partition(p));
        const bool ok = central_degree_identity(alpha, lambda, descents);
        identities = identities && ok;
        const auto st = shape_stats(d.value);
        summands.push_back(Json{{"alphas", alphas},
                                {"c", d.c},
                                {"value", to_json(d.value)},
                                {"darga", st.darga ? Json(*st.darga) : Json(nullptr)},
                                {"identity", ok}});
      }
      const QPoly value = kr_kostka(lambda, descents);
      Json doc{{"shape", format_partition(lambda)},
               {"descents", descents},
               {"value", to_json(value)},
               {"summands", summands},
               {"identity_holds", identities}};
      bool reversal_ok = true;
      if (nn <= oracle.cell_limit) {
        const QPoly f = distribution(SkewShape(lambda), oracle).at(descents);
        const QPoly expected = f.is_zero() ? f : reciprocal_shift(f, nn * (nn - 1) / 2);
        reversal_ok = expected == value;
        doc["reversal_check"] = reversal_ok;
      } else {
        doc["reversal_check"] = nullptr;
      }
      emit_json(doc, cfg, out);
      return identities && reversal_ok ? 0 : 1;
    }
    if (koh_cmd->parsed()) {
      Json terms = Json::array();
      for (const auto& t : koh_terms(*n, *a)) {
        const auto st = shape_stats(t.value);
        terms.push_back(Json{{"lambda", format_partition(t.lambda)},
                             {"Y", t.Y},
                             {"value", to_json(t.value)},
                             {"darga", st.darga ? Json(*st.darga) : Json(nullptr)},
                             {"unimodal", st.unimodal}});
      }
      const QPoly value = koh_expansion(*n, *a);
      const bool match = value == gauss_binomial(*n + *a, *n);
      Json doc{{"n", *n}, {"a", *a}, {"value", to_json(value)}, {"binomial_match", match}, {"terms", terms}};
      emit_json(doc, cfg, out);
      return match ? 0 : 1;
    }
    if (sagan_cmd->parsed()) {
      SuiteBounds b;
      b.jobs = cfg.jobs;
      b.oracle = oracle;
      b.permutation_limit = cfg.perm_limit;
      const Report r = sagan(*n, b);
      Json A = Json::object();
      Json uni = Json::object();
      for (const auto& f : r.cases) {
        if (f.label != "A") continue;
        A[std::to_string(f.params.at("k"))] = to_json(f.actual);
        uni[std::to_string(f.params.at("k"))] = f.stats.unimodal;
      }
      Json doc{{"n", *n}, {"A", A}, {"unimodal", uni}, {"status", to_string(r.status)}, {"failures", r.failures()}};
      emit_json(doc, cfg, out);
      return r.ok() ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      SuiteBounds b;
      b.max = bound;
      b.jobs = cfg.jobs;
      b.oracle = oracle;
      b.permutation_limit = cfg.perm_limit;
      std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
      if (suite == "all" && bound != 0) throw DomainError("--bound needs a single --suite");
      std::vector<Report> reports;
      for (const auto& sid : ids) reports.push_back(run_suite(sid, b));
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      if (cfg.format == "csv") {
        std::string doc;
        for (std::size_t idx = 0; idx < reports.size(); ++idx) doc += report_csv(reports[idx], idx == 0);
        emit(doc, cfg, out);
      } else if (reports.size() == 1) {
        emit_json(to_json(reports.front()), cfg, out);
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit_json(arr, cfg, out);
      }
      for (const auto& r : reports) {
        err << r.suite_id << ": " << to_string(r.status) << " (" << r.cases.size() << " cases, "
            << r.failures() << " failing)\n";
      }
      return ok ? 0 : 1;
    }
    if (rsk_cmd->parsed()) {
      std::vector<int> word;
      for (std::size_t pos = 0; pos < perm.size();) {
        std::size_t end = perm.find(',', pos);
        if (end == std::string::npos) end = perm.size();
        try {
          word.push_back(std::stoi(perm.substr(pos, end - pos)));
        } catch (const std::logic_error&) {
          throw DomainError("bad permutation: " + perm);
        }
        pos = end + 1;
      }
      const Permutation p(word);
      const RskPair pq = rsk(p);
      const auto dp = perm_statistics(p);
      const auto dq = statistics(pq.recording);
      Json doc{{"perm", word},
               {"shape", format_shape(pq.insertion.shape())},
               {"P", tableau_json(pq.insertion)},
               {"Q", tableau_json(pq.recording)},
               {"descents_perm", dp.descent_set},
               {"descents_Q", dq.descent_set},
               {"match", dp.descent_set == dq.descent_set}};
      emit_json(doc, cfg, out);
      return dp.descent_set == dq.descent_set ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace majdist::cli
