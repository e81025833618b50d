#include "natgt/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "natgt/disjunct.hpp"
#include "natgt/scheme.hpp"
#include "natgt/separating.hpp"
#include "natgt/simulation.hpp"
#include "natgt/text_format.hpp"

namespace natgt::cli {
namespace {

struct SchemeFlags {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t u = 0;
  std::string mode = "rand";
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::string construction = "rs";

  void attach(CLI::App& cmd) {
    cmd.add_option("--n", n, "Number of items")->required();
    cmd.add_option("--d", d, "Maximum number of defectives")->required();
    cmd.add_option("--u", u, "Threshold: a test is positive with >= u defectives")->required();
    cmd.add_option("--mode", mode, "det (every d-subset separated) or rand (each with prob. 1 - epsilon)")
        ->check(CLI::IsMember({"det", "rand"}));
    cmd.add_option("--epsilon", epsilon, "Failure probability for rand mode");
    cmd.add_option("--seed", seed, "Generator seed");
    cmd.add_option("--construction", construction, "Disjunct matrix construction")
        ->check(CLI::IsMember({"rs", "random"}));
  }

  SchemeOptions options() const {
    SchemeOptions o;
    o.n = n;
    o.d = d;
    o.u = u;
    o.mode = parse_mode(mode);
    o.epsilon = epsilon;
    o.seed = seed;
    o.construction = parse_construction(construction);
    return o;
  }
};

std::string join(const IndexSet& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + std::to_string(items[i]);
  return out + "}";
}

IndexSet parse_index_list(const std::string& text) {
  IndexSet items;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size()) throw std::invalid_argument("invalid item index '" + token + "'");
    items.push_back(static_cast<std::size_t>(value));
  }
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end())
    throw std::invalid_argument("duplicate item index");
  return items;
}

int cmd_gen(const SchemeFlags& flags, const std::string& out_path, bool dry_run, std::ostream& out) {
  const SchemeOptions o = flags.options();
  if (dry_run) {
    const double h_real = separating_rows_real(o);
    const std::size_t h = separating_rows(o);
    const std::uint64_t k = disjunct_rows(o.d, o.n, o.construction);
    out << fmt::format("h_bound = {}\nh = {}\nk = {}\nt = {}\n", h_real, h, k, (2 * k + 1) * h);
    return kSuccess;
  }
  if (out_path.empty()) throw std::invalid_argument("gen: --out is required unless --dry-run is given");
  const MeasurementScheme scheme = build_scheme(o);
  save_scheme(out_path, scheme);
  out << fmt::format("h = {}\nk = {}\nt = {}\n", scheme.h(), scheme.k(), scheme.tests());
  return kSuccess;
}

int cmd_encode(const std::string& scheme_path, const std::string& defectives, const std::string& out_path,
               std::ostream& out) {
  const MeasurementScheme scheme = load_scheme(scheme_path);
  const IndexSet items = parse_index_list(defectives);
  for (std::size_t j : items)
    if (j < 1 || j > scheme.n())
      throw std::invalid_argument(fmt::format("item index {} outside [1, {}]", j, scheme.n()));
  if (items.size() > scheme.d())
    throw std::invalid_argument(fmt::format("{} defectives given but the scheme supports at most d = {}", items.size(),
                                            scheme.d()));
  const BitVector outcome = simulate_instance(scheme, items);
  if (out_path.empty())
    write_vector(out, outcome);
  else
    save_vector(out_path, outcome);
  return kSuccess;
}

int cmd_decode(const std::string& scheme_path, const std::string& outcome_path, std::ostream& out, std::ostream& err) {
  const MeasurementScheme scheme = load_scheme(scheme_path);
  const BitVector outcome = load_vector(outcome_path);
  const IndexSet found = decode(scheme, outcome);
  for (std::size_t j : found) out << j << '\n';
  if (found.empty())
    err << fmt::format("warning: no defectives decoded; fewer than u = {} defectives are indistinguishable from none\n",
                       scheme.u());
  return kSuccess;
}

int cmd_simulate(const SchemeFlags& flags, std::size_t trials, const std::string& csv_path, std::ostream& out) {
  const TrialReport report = run_simulation(flags.options(), trials);
  const std::string csv = format_report_csv(report);
  out << format_report_text(report) << '\n' << csv;
  if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) throw std::runtime_error("cannot write '" + csv_path + "'");
    file << csv;
  }
  return kSuccess;
}

int cmd_verify(const std::string& matrix_path, const std::string& kind, std::size_t r, std::size_t u, std::size_t w,
               std::uint64_t work_cap, std::ostream& out, std::ostream& err) {
  const BitMatrix m = load_matrix(matrix_path);
  if (kind == "disjunct") {
    if (r >= m.cols()) throw std::invalid_argument("verify: --r must be smaller than the column count");
    const std::uint64_t work = disjunct_work(m.cols(), r);
    if (work > work_cap) {
      err << fmt::format("refusing: {} unions to check exceeds the work cap {}\n", work, work_cap);
      return kWorkCapExceeded;
    }
    const DisjunctVerdict verdict = is_disjunct(m, r);
    if (verdict) {
      out << "true\n";
      return kSuccess;
    }
    out << "false\n"
        << fmt::format("witness: column {} is covered by columns {}\n", verdict.witness->column,
                       join(verdict.witness->cover));
    return kVerificationFalse;
  }

  if (u < 1 || u + w > m.cols()) throw std::invalid_argument("verify: requires u >= 1 and u + w <= column count");
  const std::uint64_t work = separating_work(m.cols(), u, w);
  if (work > work_cap) {
    err << fmt::format("refusing: {} (I, J) pairs to check exceeds the work cap {}\n", work, work_cap);
    return kWorkCapExceeded;
  }
  const SeparatingVerdict verdict = is_completely_separating(m, u, w);
  if (verdict) {
    out << "true\n";
    return kSuccess;
  }
  out << "false\n"
      << fmt::format("witness: I = {} J = {} has no singular row\n", join(verdict.witness->included),
                     join(verdict.witness->excluded));
  return kVerificationFalse;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold group testing: scheme generation, encoding, decoding and verification", "natgt"};
  app.require_subcommand(1);

  SchemeFlags gen_flags;
  std::string gen_out;
  bool dry_run = false;
  auto* gen = app.add_subcommand("gen", "Generate a measurement scheme");
  gen_flags.attach(*gen);
  gen->add_option("--out", gen_out, "Scheme output file");
  gen->add_flag("--dry-run", dry_run, "Print h, k, t from the row-count bounds without generating");

  std::string scheme_path;
  std::string defectives;
  std::string encode_out;
  auto* encode = app.add_subcommand("encode", "Simulate test outcomes for a defective set");
  encode->add_option("--scheme", scheme_path, "Scheme file")->required();
  encode->add_option("--defectives", defectives, "Comma-separated 1-based item indices")->required();
  encode->add_option("--out", encode_out, "Outcome output file (stdout if omitted)");

  std::string outcome_path;
  auto* decode_cmd = app.add_subcommand("decode", "Recover the defective set from an outcome vector");
  decode_cmd->add_option("--scheme", scheme_path, "Scheme file")->required();
  decode_cmd->add_option("--outcome", outcome_path, "Outcome vector file")->required();

  SchemeFlags sim_flags;
  std::size_t trials = 100;
  std::string csv_path;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo encode/decode experiment");
  sim_flags.attach(*simulate);
  simulate->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--out", csv_path, "Also write the CSV report to this file");

  std::string matrix_path;
  std::string kind;
  std::size_t r = 0;
  std::size_t vu = 1;
  std::size_t vw = 1;
  std::uint64_t work_cap = kDefaultWorkCap;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a matrix property");
  verify->add_option("--matrix", matrix_path, "Matrix file")->required();
  verify->add_option("--kind", kind, "disjunct (uses --r) or separating (uses --u, --w)")
      ->required()
      ->check(CLI::IsMember({"disjunct", "separating"}));
  verify->add_option("--r", r, "Disjunctness order");
  verify->add_option("--u", vu, "Size of I");
  verify->add_option("--w", vw, "Size of J");
  verify->add_option("--work-cap", work_cap, "Maximum number of enumerated subsets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen) return cmd_gen(gen_flags, gen_out, dry_run, out);
    if (*encode) return cmd_encode(scheme_path, defectives, encode_out, out);
    if (*decode_cmd) return cmd_decode(scheme_path, outcome_path, out, err);
    if (*simulate) return cmd_simulate(sim_flags, trials, csv_path, out);
    return cmd_verify(matrix_path, kind, r, vu, vw, work_cap, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace natgt::cli
