#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "kfin/cli/commands.hpp"

namespace {

using kfin::cli::CommandOutput;
using kfin::cli::Format;

// Reads the named file, or stdin for "-".
bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

Format parse_format(const std::string& s) { return s == "text" ? Format::Text : Format::Json; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanskii-finiteness of genus-2 rational curves"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input = "-";
  std::optional<std::string> point;
  long max_k = kfin::kDefaultCap;
  bool no_cap = false;
  std::optional<long> ell;

  auto* decide = app.add_subcommand("decide", "Decide Khovanskii-finiteness at a point or anywhere");
  decide->add_option("input", input, "CurveSpec or StratumSpec JSON file ('-' for stdin)");
  decide->add_option("--point", point, "Point as \"alpha,beta\"");
  decide->add_option("--max-k", max_k, "Largest k examined")->check(CLI::PositiveNumber);
  decide->add_flag("--no-cap", no_cap, "Search up to the full theoretical bound");
  decide->add_option("--ell", ell, "Degree of the field of definition")->check(CLI::PositiveNumber);

  std::vector<std::string> points;
  auto* classify = app.add_subcommand("classify", "Classify the singularities of a curve");
  classify->add_option("input", input, "CurveSpec or StratumSpec JSON file ('-' for stdin)");
  classify->add_option("--points", points, "Preimages of one singular point");

  std::string sg_point;
  int k_max = 3;
  auto* semigroup = app.add_subcommand("semigroup", "Value semigroup at a point");
  semigroup->add_option("input", input, "CurveSpec JSON file ('-' for stdin)");
  semigroup->add_option("--point", sg_point, "Point as \"alpha,beta\"")->required();
  semigroup->add_option("--k-max", k_max, "Largest degree k examined")->check(CLI::PositiveNumber);

  kfin::cli::SweepOptions sweep_opts;
  std::vector<std::string> grid;
  auto* sweep = app.add_subcommand("sweep", "Decide every cell of a parameter grid (JSON lines)");
  sweep->add_option("stratum", sweep_opts.stratum, "Stratum name")->required();
  sweep->add_option("--n", sweep_opts.n, "Ambient dimension n");
  sweep->add_option("--grid", grid, "Axis as a=-2..2 or a=1,5/2");
  sweep->add_option("--max-k", sweep_opts.max_k, "Largest k examined per cell")->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", sweep_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string locus_stratum;
  int locus_n = 3;
  auto* locus = app.add_subcommand("locus", "Polynomial of the Khovanskii-finite locus");
  locus->add_option("stratum", locus_stratum, "OrdinaryTriplePoint or TwoNodes")->required();
  locus->add_option("--n", locus_n, "Ambient dimension n");

  auto* exporter = app.add_subcommand("export", "Write a StratumSpec's representative curve as a CurveSpec");
  exporter->add_option("input", input, "StratumSpec JSON file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kfin::cli::kExitMalformed;
  }
  const Format fmt = parse_format(format);

  auto load = [&](std::string& text) {
    if (read_input(input, text)) return true;
    std::cerr << "kfin: cannot read '" << input << "'\n";
    return false;
  };

  CommandOutput out;
  std::string text;
  if (*decide) {
    if (!load(text)) return kfin::cli::kExitMalformed;
    kfin::cli::DecideOptions opts;
    opts.point = point;
    opts.max_k = no_cap ? std::nullopt : std::optional<long>(max_k);
    opts.ell = ell;
    opts.format = fmt;
    out = kfin::cli::cmd_decide(text, opts);
  } else if (*classify) {
    if (!load(text)) return kfin::cli::kExitMalformed;
    out = kfin::cli::cmd_classify(text, points, fmt);
  } else if (*semigroup) {
    if (!load(text)) return kfin::cli::kExitMalformed;
    out = kfin::cli::cmd_semigroup(text, sg_point, k_max, fmt);
  } else if (*sweep) {
    try {
      for (const auto& g : grid) sweep_opts.grid.push_back(kfin::cli::parse_axis(g));
    } catch (const std::exception& e) {
      std::cerr << "kfin: " << e.what() << "\n";
      return kfin::cli::kExitMalformed;
    }
    sweep_opts.format = fmt;
    out = kfin::cli::cmd_sweep(sweep_opts);
  } else if (*locus) {
    out = kfin::cli::cmd_locus(locus_stratum, locus_n, fmt);
  } else if (*exporter) {
    if (!load(text)) return kfin::cli::kExitMalformed;
    out = kfin::cli::cmd_export(text);
  }
  std::cout << out.text;
  return out.exit_code;
}
