#include "coneangle/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coneangle/cones.hpp"
#include "coneangle/gq.hpp"
#include "coneangle/numbers.hpp"
#include "coneangle/rng.hpp"
#include "coneangle/srg.hpp"
#include "coneangle/symmat.hpp"

namespace coneangle::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

using nlohmann::ordered_json;

std::string fmt15(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.15g", x);
  return b;
}

// Reports carry floating values at 15 significant digits in every format.
double round15(double x) { return std::strtod(fmt15(x).c_str(), nullptr); }

void put(ordered_json& o, const std::string& key, double v) {
  o[key] = round15(v);
}

ordered_json matrix_json(const SymmetricMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.order(); ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < m.order(); ++j) r.push_back(round15(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

struct Report {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  ordered_json rows;  // array when present, else null
  std::optional<std::uint64_t> seed;

  explicit Report(std::string cmd) : command(std::move(cmd)), rows(nullptr) {}
};

std::string cell_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt15(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned())
    return std::to_string(v.get<unsigned long long>());
  return v.dump();
}

void render_text(const Report& rep, std::ostream& out) {
  out << rep.command << "\n";
  for (auto it = rep.inputs.begin(); it != rep.inputs.end(); ++it)
    out << "  " << it.key() << " = " << cell_text(it.value()) << "\n";
  if (rep.seed) out << "  seed = " << *rep.seed << "\n";
  for (auto it = rep.results.begin(); it != rep.results.end(); ++it) {
    const auto& v = it.value();
    if (v.is_array()) {  // matrix block
      out << "  " << it.key() << " =\n";
      for (const auto& row : v) {
        out << "   ";
        for (const auto& x : row) out << " " << cell_text(x);
        out << "\n";
      }
    } else {
      out << "  " << it.key() << " = " << cell_text(v) << "\n";
    }
  }
  if (rep.rows.is_array() && !rep.rows.empty()) {
    std::vector<std::string> keys;
    for (auto it = rep.rows[0].begin(); it != rep.rows[0].end(); ++it)
      keys.push_back(it.key());
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rep.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < keys.size(); ++c) {
        line.push_back(row.contains(keys[c]) ? cell_text(row[keys[c]]) : "");
        width[c] = std::max(width[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    out << "\n  ";
    for (std::size_t c = 0; c < keys.size(); ++c) {
      out << keys[c] << std::string(width[c] - keys[c].size(), ' ');
      if (c + 1 < keys.size()) out << "  ";
    }
    out << "\n";
    for (const auto& line : cells) {
      out << "  ";
      for (std::size_t c = 0; c < keys.size(); ++c) {
        out << line[c] << std::string(width[c] - line[c].size(), ' ');
        if (c + 1 < keys.size()) out << "  ";
      }
      out << "\n";
    }
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += "\"\"";
    else q += ch;
  }
  return q + "\"";
}

void render_csv(const Report& rep, std::ostream& out) {
  if (rep.rows.is_array() && !rep.rows.empty()) {
    std::vector<std::string> keys;
    for (auto it = rep.rows[0].begin(); it != rep.rows[0].end(); ++it)
      keys.push_back(it.key());
    for (std::size_t c = 0; c < keys.size(); ++c)
      out << (c ? "," : "") << csv_escape(keys[c]);
    out << "\n";
    for (const auto& row : rep.rows) {
      for (std::size_t c = 0; c < keys.size(); ++c)
        out << (c ? "," : "")
            << csv_escape(row.contains(keys[c]) ? cell_text(row[keys[c]]) : "");
      out << "\n";
    }
    return;
  }
  out << "key,value\n";
  out << "command," << csv_escape(rep.command) << "\n";
  for (auto it = rep.inputs.begin(); it != rep.inputs.end(); ++it)
    out << "input." << it.key() << "," << csv_escape(cell_text(it.value()))
        << "\n";
  if (rep.seed) out << "seed," << *rep.seed << "\n";
  for (auto it = rep.results.begin(); it != rep.results.end(); ++it)
    out << it.key() << "," << csv_escape(cell_text(it.value())) << "\n";
}

void render(const Report& rep, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json doc;
    doc["command"] = rep.command;
    doc["inputs"] = rep.inputs;
    doc["results"] = rep.results;
    if (rep.rows.is_array()) doc["rows"] = rep.rows;
    if (rep.seed) doc["seed"] = *rep.seed;
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    render_csv(rep, out);
  } else {
    render_text(rep, out);
  }
}

void add_angle_fields(ordered_json& o, double cosine, double ang) {
  put(o, "cosine", cosine);
  put(o, "angle_rad", ang);
  put(o, "angle_over_pi", ang / kPi);
}

Report run_angle(const std::string& kind, const std::string& matrix_path,
                 const std::string& out_path) {
  Report rep("angle");
  rep.inputs["kind"] = kind;
  rep.inputs["matrix"] = matrix_path;
  const SymmetricMatrix a = read_matrix_file(matrix_path);
  const AngleResult r =
      kind == "psd" ? max_angle_psd(a) : max_angle_nonneg(a);
  rep.results["order"] = a.order();
  add_angle_fields(rep.results, r.cosine, r.angle);
  rep.results["witness"] = matrix_json(*r.witness);
  if (!out_path.empty()) {
    write_matrix_file(out_path, *r.witness);
    rep.results["witness_file"] = out_path;
  }
  return rep;
}

void add_srg_fields(ordered_json& o, const SrgParams& p) {
  o["n"] = p.n;
  o["k"] = p.k;
  o["a"] = p.a;
  o["c"] = p.c;
}

void add_spectrum_fields(ordered_json& o, const SrgSpectrum& s) {
  o["k"] = s.k;
  put(o, "theta", s.theta);
  o["m_theta"] = s.m_theta;
  put(o, "tau", s.tau);
  o["m_tau"] = s.m_tau;
  o["discriminant"] = s.discriminant;
}

Report run_gq(int q, const std::string& kind, bool check_axioms,
              const std::string& out_path, const std::string& structure_path) {
  Report rep("gq");
  rep.inputs["q"] = q;
  rep.inputs["kind"] = kind;
  const QuadrangleStructure gq =
      kind == "qq" ? build_gq_symplectic(q) : build_gq_elliptic(q);
  rep.results["s"] = gq.s;
  rep.results["t"] = gq.t;
  rep.results["points"] = static_cast<long long>(gq.points.size());
  rep.results["lines"] = static_cast<long long>(gq.lines.size());
  const SrgParams params = verify_srg(gq.adjacency);
  ordered_json srg = ordered_json::object();
  add_srg_fields(srg, params);
  rep.results["srg"] = srg;
  ordered_json spec = ordered_json::object();
  add_spectrum_fields(spec, srg_spectrum(params));
  rep.results["spectrum"] = spec;
  const SrgAngle sa = srg_angle(params);
  add_angle_fields(rep.results, sa.cosine, sa.angle);
  if (sa.exact)
    rep.results["cos2_exact"] = std::to_string(sa.cos2_num) + "/" +
                                std::to_string(sa.cos2_den);
  if (check_axioms) {
    const AxiomReport ax = gq_axiom_check(gq);
    rep.results["axioms_ok"] = ax.ok;
    if (!ax.ok) rep.results["axiom_failure"] = ax.detail;
    collinearity_graph(gq);  // cross-check the two adjacency routes
    rep.results["line_form_adjacency_match"] = true;
  }
  if (!out_path.empty()) {
    write_edge_list_file(out_path, gq.adjacency);
    rep.results["edge_list_file"] = out_path;
  }
  if (!structure_path.empty()) {
    std::ofstream sf(structure_path);
    if (!sf)
      throw std::invalid_argument("cannot open file for write: " +
                                  structure_path);
    write_structure_report(sf, gq);
    rep.results["structure_file"] = structure_path;
  }
  return rep;
}

Report run_srg_spectrum(const SrgParams& p) {
  Report rep("srg spectrum");
  add_srg_fields(rep.inputs, p);
  add_spectrum_fields(rep.results, srg_spectrum(p));
  return rep;
}

Report run_srg_feasible(const SrgParams& p) {
  Report rep("srg feasible");
  add_srg_fields(rep.inputs, p);
  const Feasibility f = srg_feasible(p);
  rep.results["feasible"] = f.ok;
  if (!f.ok) {
    std::string all;
    for (const auto& r : f.reasons) {
      if (!all.empty()) all += "; ";
      all += r;
    }
    rep.results["reasons"] = all;
  }
  return rep;
}

Report run_srg_angle(const SrgParams& p) {
  Report rep("srg angle");
  add_srg_fields(rep.inputs, p);
  const SrgAngle sa = srg_angle(p);
  add_angle_fields(rep.results, sa.cosine, sa.angle);
  if (sa.exact)
    rep.results["cos2_exact"] = std::to_string(sa.cos2_num) + "/" +
                                std::to_string(sa.cos2_den);
  return rep;
}

Report run_srg_verify(const std::string& path) {
  Report rep("srg verify");
  rep.inputs["graph"] = path;
  const Graph g = read_edge_list_file(path);
  const SrgParams p = verify_srg(g);
  ordered_json srg = ordered_json::object();
  add_srg_fields(srg, p);
  rep.results["srg"] = srg;
  ordered_json spec = ordered_json::object();
  add_spectrum_fields(spec, srg_spectrum(p));
  rep.results["spectrum"] = spec;
  const SrgAngle sa = srg_angle(p);
  add_angle_fields(rep.results, sa.cosine, sa.angle);
  return rep;
}

Report run_search(int n, std::uint64_t seed, int restarts, int iters,
                  double tol, const std::string& out_prefix) {
  if (n < 2) throw std::invalid_argument("search: n must be >= 2");
  if (restarts < 1)
    throw std::invalid_argument("search: restarts must be >= 1");
  Report rep("search");
  rep.inputs["n"] = n;
  rep.inputs["restarts"] = restarts;
  rep.inputs["iters"] = iters;
  put(rep.inputs, "tol", tol);
  rep.seed = seed;

  rep.rows = ordered_json::array();
  double best = -1.0;
  int best_restart = -1;
  std::optional<CriticalPairTrace> best_trace;

  for (int r = 0; r < restarts; ++r) {
    std::string start;
    std::optional<SymmetricMatrix> n0;
    if (r == 0) {
      // Deterministic structured start: the n-cycle (single edge for n=2).
      if (n >= 3) {
        n0 = build_named("cycle", n).adjacency_matrix();
        start = "cycle(" + std::to_string(n) + ")";
      } else {
        n0 = build_named("K_mm", 1).adjacency_matrix();
        start = "edge";
      }
    } else {
      Rng rng(seed + static_cast<std::uint64_t>(r));
      do {
        n0 = random_nonneg_zero_diag(rng, n);
      } while (n0->is_zero());
      start = "random";
    }
    const CriticalPairTrace trace = critical_pair_search(*n0, tol, iters);
    const double final_angle = trace.angles.back();
    ordered_json row = ordered_json::object();
    row["restart"] = r;
    row["seed"] = seed + static_cast<std::uint64_t>(r);
    row["start"] = start;
    row["responses"] = static_cast<long long>(trace.angles.size());
    put(row, "final_angle_rad", final_angle);
    put(row, "final_angle_over_pi", final_angle / kPi);
    row["converged"] = trace.converged;
    row["stop_reason"] = trace.stop_reason;
    rep.rows.push_back(std::move(row));
    if (final_angle > best) {
      best = final_angle;
      best_restart = r;
      best_trace = trace;
    }
  }

  rep.results["best_restart"] = best_restart;
  put(rep.results, "best_cosine", std::cos(best));
  put(rep.results, "best_angle_rad", best);
  put(rep.results, "best_angle_over_pi", best / kPi);
  rep.results["best_n"] = matrix_json(best_trace->final_n);
  rep.results["best_p"] = matrix_json(best_trace->final_p);
  if (!out_prefix.empty()) {
    write_matrix_file(out_prefix + ".N.txt", best_trace->final_n);
    write_matrix_file(out_prefix + ".P.txt", best_trace->final_p);
    rep.results["best_n_file"] = out_prefix + ".N.txt";
    rep.results["best_p_file"] = out_prefix + ".P.txt";
  }
  return rep;
}

Report run_sniep(const std::string& list) {
  std::vector<double> eigs;
  std::string token;
  for (char ch : list + ",") {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) {
        std::size_t used = 0;
        try {
          eigs.push_back(std::stod(token, &used));
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size())
          throw std::invalid_argument("sniep: bad number '" + token + "'");
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  Report rep("sniep");
  rep.inputs["eigs"] = list;
  const SniepVerdict v = sniep_realizable(eigs);
  rep.results["n"] = static_cast<long long>(eigs.size());
  rep.results["realizable"] = v.realizable;
  rep.results["sorted"] = v.sorted_ok;
  rep.results["lambda1_positive"] = v.positive_perron_ok;
  rep.results["lambda_n_ge_minus_lambda1"] = v.spectral_radius_ok;
  rep.results["trace_zero"] = v.trace_zero_ok;
  if (eigs.size() == 5) {
    rep.results["lambda2_plus_lambda5_le_0"] = v.pair_sum_ok;
    rep.results["cube_sum_nonneg"] = v.cube_sum_ok;
  }
  if (!v.failed.empty()) rep.results["failed"] = v.failed;
  return rep;
}

Report run_table1(long long qmax, bool construct) {
  Report rep("table1");
  rep.inputs["qmax"] = qmax;
  rep.inputs["construct"] = construct;
  rep.rows = ordered_json::array();
  for (const Table1Row& r : table1_rows(qmax, construct)) {
    ordered_json row = ordered_json::object();
    row["q"] = r.q;
    row["n"] = r.n;
    put(row, "cosine", r.cosine);
    put(row, "angle_rad", r.angle);
    put(row, "angle_over_pi", r.angle_over_pi);
    if (r.constructed) {
      row["srg_n"] = r.srg_n;
      row["srg_k"] = r.srg_k;
      row["srg_a"] = r.srg_a;
      row["srg_c"] = r.srg_c;
      put(row, "constructed_cosine", r.constructed_cosine);
      row["cos2_exact"] = std::to_string(r.cos2_num) + "/" +
                          std::to_string(r.cos2_den);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

std::vector<Table1Row> table1_rows(long long qmax, bool construct) {
  if (qmax < 2) throw std::invalid_argument("table1: qmax must be >= 2");
  if (construct && qmax > 8)
    throw std::invalid_argument(
        "table1: --construct is limited to q <= 8");
  std::vector<Table1Row> rows;
  for (long long q = 2; q <= qmax; ++q) {
    if (!is_prime_power(q)) continue;
    Table1Row r;
    r.q = q;
    r.n = (q + 1) * (q * q * q + 1);
    r.cosine = -std::sqrt(static_cast<double>(q * q + 1)) /
               static_cast<double>(q + 1);
    r.angle = std::acos(std::clamp(r.cosine, -1.0, 1.0));
    r.angle_over_pi = r.angle / kPi;
    if (construct) {
      const QuadrangleStructure gq = build_gq_elliptic(static_cast<int>(q));
      const SrgParams params = verify_srg(gq.adjacency);
      const SrgAngle sa = srg_angle(params);
      if (std::abs(sa.cosine - r.cosine) > 1e-10)
        throw numerical_error(
            "table1: constructed cosine disagrees with the closed form at q=" +
            std::to_string(q));
      r.constructed = true;
      r.srg_n = params.n;
      r.srg_k = params.k;
      r.srg_a = params.a;
      r.srg_c = params.c;
      r.constructed_cosine = sa.cosine;
      r.cos2_num = sa.cos2_num;
      r.cos2_den = sa.cos2_den;
    }
    rows.push_back(r);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "maximal angles between symmetric matrices and the positive "
      "semidefinite / nonnegative cones, with strongly regular graph and "
      "generalized quadrangle constructions"};
  app.name("coneangle");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  // table1
  long long qmax = 7;
  bool construct = false;
  CLI::App* t1 = app.add_subcommand(
      "table1", "lower bounds on the maximal PSD/nonnegative angle from "
                "elliptic quadrangles of order (q,q^2)");
  t1->add_option("--qmax", qmax, "largest prime power")->capture_default_str();
  t1->add_flag("--construct", construct,
               "also build each quadrangle and certify the bound (q <= 8)");
  add_format(t1);

  // angle
  std::string angle_kind, angle_matrix, angle_out;
  CLI::App* an = app.add_subcommand(
      "angle", "maximal angle from a matrix file to a cone");
  an->add_option("--kind", angle_kind, "target cone")
      ->check(CLI::IsMember({"psd", "nonneg"}))
      ->required();
  an->add_option("--matrix", angle_matrix, "dense matrix file")->required();
  an->add_option("--out", angle_out, "write the witness matrix here");
  add_format(an);

  // gq
  int gq_q = 0;
  std::string gq_kind, gq_out, gq_structure;
  bool gq_axioms = false;
  CLI::App* gq = app.add_subcommand(
      "gq", "build a generalized quadrangle and certify its collinearity "
            "graph");
  gq->add_option("--q", gq_q, "prime power")->required();
  gq->add_option("--kind", gq_kind, "qq = symplectic (q,q), qq2 = elliptic "
                                    "(q,q^2)")
      ->check(CLI::IsMember({"qq", "qq2"}))
      ->required();
  gq->add_flag("--check-axioms", gq_axioms, "run the exhaustive axiom check");
  gq->add_option("--out", gq_out, "write the collinearity edge list here");
  gq->add_option("--structure-out", gq_structure,
                 "write the point/line report here");
  add_format(gq);

  // srg with sub-subcommands
  CLI::App* srg = app.add_subcommand("srg", "strongly regular graph tools");
  srg->require_subcommand(1);
  SrgParams sp;
  CLI::App* srg_spec = srg->add_subcommand("spectrum", "eigenvalues from parameters");
  CLI::App* srg_feas = srg->add_subcommand("feasible", "parameter feasibility");
  CLI::App* srg_ang = srg->add_subcommand("angle", "maximal PSD angle from parameters");
  for (CLI::App* sub : {srg_spec, srg_feas, srg_ang}) {
    sub->add_option("n", sp.n, "vertices")->required();
    sub->add_option("k", sp.k, "degree")->required();
    sub->add_option("a", sp.a, "common neighbours, adjacent pairs")->required();
    sub->add_option("c", sp.c, "common neighbours, non-adjacent pairs")->required();
    add_format(sub);
  }
  std::string srg_graph;
  CLI::App* srg_ver = srg->add_subcommand("verify", "certify an edge list");
  srg_ver->add_option("--graph", srg_graph, "edge list file")->required();
  add_format(srg_ver);

  // search
  int search_n = 0, search_restarts = 100, search_iters = 10000;
  std::uint64_t search_seed = 0;
  double search_tol = 1e-12;
  std::string search_out;
  CLI::App* se = app.add_subcommand(
      "search", "multistart alternating critical-pair search");
  se->add_option("--n", search_n, "matrix order")->required();
  se->add_option("--seed", search_seed, "base seed")->capture_default_str();
  se->add_option("--restarts", search_restarts, "number of starts")
      ->capture_default_str();
  se->add_option("--iters", search_iters, "max rounds per start")
      ->capture_default_str();
  se->add_option("--tol", search_tol, "stop when the angle gain drops below")
      ->capture_default_str();
  se->add_option("--out", search_out, "prefix for best pair matrix files");
  add_format(se);

  // sniep
  std::string sniep_eigs;
  CLI::App* sn = app.add_subcommand(
      "sniep", "realizability of a trace-zero spectrum by a symmetric "
               "nonnegative matrix (orders 2..5)");
  sn->add_option("eigs", sniep_eigs, "comma-separated eigenvalues, "
                                     "non-increasing")
      ->required();
  add_format(sn);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("coneangle");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const bool help = dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
                      dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr;
    const int code = app.exit(e, out, err);
    return help ? code : 1;
  }

  try {
    Report rep("");
    if (t1->parsed())
      rep = run_table1(qmax, construct);
    else if (an->parsed())
      rep = run_angle(angle_kind, angle_matrix, angle_out);
    else if (gq->parsed())
      rep = run_gq(gq_q, gq_kind, gq_axioms, gq_out, gq_structure);
    else if (srg_spec->parsed())
      rep = run_srg_spectrum(sp);
    else if (srg_feas->parsed())
      rep = run_srg_feasible(sp);
    else if (srg_ang->parsed())
      rep = run_srg_angle(sp);
    else if (srg_ver->parsed())
      rep = run_srg_verify(srg_graph);
    else if (se->parsed())
      rep = run_search(search_n, search_seed, search_restarts, search_iters,
                       search_tol, search_out);
    else if (sn->parsed())
      rep = run_sniep(sniep_eigs);
    render(rep, format, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace coneangle::cli
