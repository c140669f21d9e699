#include "jordan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/flow.hpp"
#include "jordan/io.hpp"
#include "jordan/moment.hpp"
#include "jordan/stratify.hpp"

namespace jordan {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  double tol = kSolitonTol;
  int max_steps = FlowOptions{}.max_steps;
  std::uint64_t seed = 0;
  int jobs = 0;
};

struct Input {
  std::string file;
  std::string catalog;

  void attach(CLI::App* sub) {
    sub->add_option("file", file, "tensor JSON file");
    sub->add_option("--catalog", catalog, "use a catalog entry, e.g. A_3_7");
  }
  std::string source() const { return catalog.empty() ? file : catalog; }
  StructureTensor load() const {
    if (!catalog.empty() && !file.empty()) throw CLI::ValidationError("give either a file or --catalog, not both");
    if (!catalog.empty()) {
      if (!has_entry(catalog)) throw FormatError("unknown catalog entry " + catalog);
      return refined_tensor(builtin(catalog));
    }
    if (file.empty()) throw CLI::ValidationError("a tensor file or --catalog NAME is required");
    return load_tensor(file);
  }
};

void header(std::ostream& out, const std::string& cmd, const std::string& source, const Globals& g) {
  out << "# jordan-flow " << cmd;
  if (!source.empty()) out << " " << source;
  out << "  seed " << g.seed << "\n";
}

json json_header(const std::string& cmd, const std::string& source, const Globals& g) {
  return {{"command", cmd}, {"source", source}, {"seed", g.seed}};
}

FlowOptions flow_options(const Globals& g) {
  FlowOptions o;
  o.max_steps = g.max_steps;
  o.soliton_tol = g.tol;
  o.seed = g.seed;
  return o;
}

bool is_diagonal(const CMat& M) {
  CMat off = M;
  off.diagonal().setZero();
  return off.norm() <= 1e-12 * std::max(1.0, M.norm());
}

void print_matrix(std::ostream& out, const std::string& name, const CMat& M) {
  if (is_diagonal(M)) {
    out << name << " = diag(";
    for (Eigen::Index i = 0; i < M.rows(); ++i) out << (i ? ", " : "") << fmt(M(i, i));
    out << ")\n";
    return;
  }
  out << name << " =\n";
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    out << "  ";
    for (Eigen::Index c = 0; c < M.cols(); ++c) out << (c ? "  " : "") << fmt(M(r, c));
    out << "\n";
  }
}

std::string energy_text(double e) {
  const auto f = snap(e);
  return f ? f->str() : fmt(e);
}

int cmd_validate(const Input& in, const Globals& g, std::ostream& out) {
  const StructureTensor mu = in.load();
  const double defect = jordan_defect(mu);
  const bool ok = defect <= 1e-9;
  if (g.json) {
    json j = json_header("validate", in.source(), g);
    j["dim"] = mu.dim();
    j["jordan_defect"] = defect;
    j["is_jordan"] = ok;
    out << j.dump(2) << "\n";
  } else {
    header(out, "validate", in.source(), g);
    out << "dim " << mu.dim() << "\njordan defect " << fmt(defect) << "\n" << (ok ? "Jordan" : "not Jordan") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_invariants(const Input& in, bool do_match, const Globals& g, std::ostream& out) {
  const StructureTensor mu = in.load();
  const Flags f = compute_flags(mu);
  const PowerChain pc = power_dims(mu);
  const int der = derivation_algebra(mu).dim;
  const int rad = radical(mu).dim();
  const int ann = annihilator(mu).dim();
  const int cen = centroid(mu).dim();
  const int rank = product_rank(mu);
  std::vector<std::string> candidates;
  std::optional<Fingerprint> fp;
  if (do_match) {
    FlowOptions o = flow_options(g);
    fp = fingerprint(mu, o);
    candidates = match(mu, o);
  }
  if (g.json) {
    json j = json_header("invariants", in.source(), g);
    j["flags"] = f.str();
    j["power_dims"] = pc.dims;
    j["nilpotent"] = pc.nilpotent;
    j["dim_der"] = der;
    j["dim_radical"] = rad;
    j["dim_annihilator"] = ann;
    j["dim_centroid"] = cen;
    j["product_rank"] = rank;
    if (fp) {
      j["fingerprint"] = fingerprint_to_json(*fp);
      j["candidates"] = candidates;
    }
    out << j.dump(2) << "\n";
  } else {
    header(out, "invariants", in.source(), g);
    out << "flags " << f.str() << "\npower dims";
    for (int d : pc.dims) out << " " << d;
    out << (pc.nilpotent ? " (nilpotent)" : "") << "\ndim Der " << der << "\ndim radical " << rad
        << "\ndim annihilator " << ann << "\ndim centroid " << cen << "\nproduct rank " << rank << "\n";
    if (fp) {
      out << "stratum energy " << energy_text(fp->stratum_energy) << "\ncandidates";
      if (candidates.empty()) out << " none";
      for (const auto& c : candidates) out << " " << c;
      out << "\n";
    }
  }
  return kOk;
}

int cmd_moment(const Input& in, const Globals& g, std::ostream& out) {
  const StructureTensor mu = in.load();
  if (mu.is_zero()) throw FormatError("the zero tensor has no moment data");
  const MomentReport r = soliton_check(mu, g.tol);
  const auto type = r.is_soliton ? try_soliton_type(mu) : std::nullopt;
  if (g.json) {
    json j = json_header("moment", in.source(), g);
    j["report"] = report_to_json(r);
    j["type"] = type ? type_to_json(*type) : json(nullptr);
    j["sl_residual"] = sl_residual(mu);
    out << j.dump(2) << "\n";
  } else {
    header(out, "moment", in.source(), g);
    print_matrix(out, "M", r.M);
    out << "E = " << energy_text(r.energy) << "\nc = " << fmt(r.c) << "\n";
    print_matrix(out, "D", r.D);
    out << "soliton " << (r.is_soliton ? "yes" : "no") << " (residual " << fmt(r.soliton_residual) << ")\n";
    if (type) out << "type " << type->str() << "\n";
  }
  return kOk;
}

int cmd_flow(const Input& in, bool random_start, const std::string& trace_path, const Globals& g, std::ostream& out) {
  const StructureTensor mu = in.load();
  if (mu.is_zero()) throw FormatError("cannot flow the zero tensor");
  FlowOptions o = flow_options(g);
  o.random_start = random_start;
  const FlowTrace tr = run_flow(mu, o);
  if (!trace_path.empty()) {
    std::ofstream os(trace_path);
    if (!os) throw FormatError("cannot write " + trace_path);
    write_trace_csv(tr, os);
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(tr.terminal_report.m);
  const StratumLabel label = label_from(es.eigenvalues());
  if (g.json) {
    json j = json_header("flow", in.source(), g);
    j["steps"] = tr.steps_taken;
    j["stop"] = to_string(tr.stop);
    j["converged"] = tr.converged;
    j["limit_extracted"] = tr.limit_extracted;
    j["start_energy"] = tr.energies.front();
    j["terminal_energy"] = tr.terminal_energy();
    j["terminal_residual"] = tr.terminal_report.soliton_residual;
    j["label"] = label_to_json(label);
    j["type"] = tr.terminal_type ? json(tr.terminal_type->str()) : json(nullptr);
    j["terminal"] = tensor_to_json(tr.terminal);
    out << j.dump(2) << "\n";
  } else {
    header(out, "flow", in.source(), g);
    out << "steps " << tr.steps_taken << " (" << to_string(tr.stop) << (tr.limit_extracted ? ", limit extracted" : "")
        << ")\nenergy " << fmt(tr.energies.front()) << " -> " << energy_text(tr.terminal_energy())
        << "\nterminal residual " << fmt(tr.terminal_report.soliton_residual) << "\n";
    out << "beta";
    if (label.snapped) {
      for (const auto& b : label.beta) out << " " << b.str();
    } else {
      for (Eigen::Index i = 0; i < label.beta_float.size(); ++i) out << " " << fmt(label.beta_float(i));
    }
    out << "\n";
    if (tr.terminal_type) out << "type " << tr.terminal_type->str() << "\n";
  }
  return tr.converged ? kOk : kFailed;
}

int cmd_stratify(const Input& in, bool eigenbasis, bool by_flow, const Globals& g, std::ostream& out) {
  StructureTensor mu = in.load();
  if (mu.is_zero()) throw FormatError("the zero tensor has no stratum label");
  if (by_flow) {
    const StratumLabel l = stratum_of(mu, flow_options(g));
    if (g.json) {
      json j = json_header("stratify", in.source(), g);
      j.update(label_to_json(l));
      out << j.dump(2) << "\n";
    } else {
      header(out, "stratify", in.source(), g);
      out << "flow terminal beta " << join(l.beta, " ") << "\nenergy " << l.norm_sq.str() << "\n";
    }
    return l.snapped ? kOk : kFailed;
  }
  if (eigenbasis) {
    Eigen::SelfAdjointEigenSolver<CMat> es(moment_matrix(mu));
    mu = act(es.eigenvectors().adjoint(), mu);
  }
  const BetaResult r = beta_mu_full(mu);
  json support = json::array();
  for (const auto& w : r.support) support.push_back({w.i + 1, w.j + 1, w.k + 1});
  if (g.json) {
    json j = json_header("stratify", in.source(), g);
    j.update(label_to_json(r.label));
    j["support"] = support;
    j["certificate_gap"] = r.mnp.certificate_gap;
    out << j.dump(2) << "\n";
  } else {
    header(out, "stratify", in.source(), g);
    out << "beta";
    if (r.label.snapped) {
      for (const auto& b : r.label.beta) out << " " << b.str();
      out << "\nenergy " << r.label.norm_sq.str() << "\n";
    } else {
      for (Eigen::Index i = 0; i < r.label.beta_float.size(); ++i) out << " " << fmt(r.label.beta_float(i));
      out << "\nenergy " << fmt(r.label.norm_sq_float) << "\n";
    }
    out << "support " << r.support.size() << " weights\ncertificate gap " << fmt(r.mnp.certificate_gap) << "\n";
  }
  return kOk;
}

int cmd_reproduce(int dim, const std::string& format, const Globals& g, std::ostream& out) {
  if (dim < 0 || dim > 4) throw CLI::ValidationError("--dim must be 1..4 (0 for all)");
  const ReproReport r = reproduce_tables(dim, g.jobs);
  if (g.json) {
    json rows = json::array();
    for (const ReproRow& row : r.rows) {
      std::vector<std::string> beta, expected;
      for (const auto& b : row.beta) beta.push_back(b.str());
      for (const auto& b : row.expected_beta) expected.push_back(b.str());
      rows.push_back({{"name", row.name},
                      {"soliton", row.soliton},
                      {"residual", row.residual},
                      {"type", row.type},
                      {"expected_type", row.expected_type},
                      {"beta", beta},
                      {"expected_beta", expected},
                      {"energy", row.energy},
                      {"expected_energy", row.expected_energy.str()},
                      {"pass", row.pass},
                      {"detail", row.detail}});
    }
    json j = json_header("reproduce", dim ? "dim " + std::to_string(dim) : "all", g);
    j["rows"] = rows;
    j["failures"] = r.failures;
    j["strata"] = r.strata;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    write_report_csv(r, out);
  } else {
    header(out, "reproduce", dim ? "dim " + std::to_string(dim) : "all", g);
    write_report_md(r, out);
  }
  return r.failures == 0 ? kOk : kFailed;
}

int cmd_catalog_list(int dim, const Globals& g, std::ostream& out) {
  const auto entries = catalog_dim(dim);
  if (g.json) {
    json rows = json::array();
    for (const CatalogEntry* e : entries)
      rows.push_back({{"name", e->name},
                      {"dim", e->dim},
                      {"flags", e->table_flags.str()},
                      {"type", e->expected_type},
                      {"energy", e->expected_energy.str()}});
    out << rows.dump(2) << "\n";
  } else {
    for (const CatalogEntry* e : entries)
      out << e->name << "  " << e->expected_type << "  E=" << e->expected_energy.str() << "  " << e->table_flags.str()
          << "\n";
  }
  return kOk;
}

int cmd_catalog_export(const std::string& name, bool table_constants, std::ostream& out) {
  if (!has_entry(name)) throw FormatError("unknown catalog entry " + name);
  const CatalogEntry& e = builtin(name);
  out << dump_tensor(table_constants ? e.tensor : refined_tensor(e)) << "\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment map, energy flow and stratification for Jordan algebra structure tensors", "jordan-flow"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--tol", g.tol, "soliton residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-steps", g.max_steps, "flow step limit")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for every random choice");
  app.add_option("--jobs", g.jobs, "worker threads for reproduce (0: all cores)")->check(CLI::NonNegativeNumber);

  Input in;
  auto* validate = app.add_subcommand("validate", "check the Jordan identity");
  in.attach(validate);
  bool do_match = false;
  auto* invariants = app.add_subcommand("invariants", "flags, power chain and fingerprint");
  in.attach(invariants);
  invariants->add_flag("--match", do_match, "list catalog entries with the same fingerprint");
  auto* moment = app.add_subcommand("moment", "moment matrix, energy and soliton test");
  in.attach(moment);
  bool random_start = false;
  std::string trace;
  auto* flow = app.add_subcommand("flow", "run the energy flow");
  in.attach(flow);
  flow->add_flag("--random-start", random_start, "start from a random basis change of the input");
  flow->add_option("--trace", trace, "write step,energy,grad_norm rows");
  bool eigenbasis = false, by_flow = false;
  auto* stratify = app.add_subcommand("stratify", "beta_mu by the minimum-norm point");
  in.attach(stratify);
  stratify->add_flag("--eigenbasis", eigenbasis, "rotate to the eigenbasis of M first");
  stratify->add_flag("--flow", by_flow, "label by the flow terminal instead");

  int dim = 0;
  std::string format = "md";
  auto* reproduce = app.add_subcommand("reproduce", "compare the catalog with the stratum tables");
  reproduce->add_option("--dim", dim, "dimension (0 for all)");
  reproduce->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));

  auto* cat = app.add_subcommand("catalog", "catalog access");
  cat->require_subcommand(1, 1);
  auto* list = cat->add_subcommand("list", "list entries");
  list->add_option("--dim", dim, "dimension (0 for all)");
  std::string name;
  bool table_constants = false;
  auto* exp = cat->add_subcommand("export", "emit an entry as tensor JSON");
  exp->add_option("--name", name, "entry name")->required();
  exp->add_flag("--table-constants", table_constants, "skip flow refinement of approximate entries");
  auto* crep = cat->add_subcommand("reproduce", "same as the top-level reproduce");
  crep->add_option("--dim", dim, "dimension (0 for all)");
  crep->add_option("--format", format, "md or csv")->check(CLI::IsMember({"md", "csv"}));

  for (CLI::App* sub : {validate, invariants, moment, flow, stratify, reproduce, cat, list, exp, crep})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(in, g, out);
    if (*invariants) return cmd_invariants(in, do_match, g, out);
    if (*moment) return cmd_moment(in, g, out);
    if (*flow) return cmd_flow(in, random_start, trace, g, out);
    if (*stratify) return cmd_stratify(in, eigenbasis, by_flow, g, out);
    if (*reproduce || *crep) return cmd_reproduce(dim, format, g, out);
    if (*list) return cmd_catalog_list(dim, g, out);
    if (*exp) return cmd_catalog_export(name, table_constants, out);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const JordanError& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace jordan
