// hopfcyc: verify identities and compute (co)homology from structure-constant files.
//
//   hopfcyc verify  <target> -i file.json [--pmax P --qmax Q --nmax N]
//   hopfcyc compute <target> -i file.json [--nmax N --rmax R]
//   hopfcyc compare <target> -i file.json [--nmax N]
//   hopfcyc normalize -i file.json
//
// Common flags: -o report.json, --csv dir/. Exit codes: 0 pass, 1 check failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hopfcyc/cli.hpp"

namespace fs = std::filesystem;
using namespace hopfcyc;

namespace {

struct Common {
  std::string input;
  std::string output;
  std::string csv;
  std::optional<std::size_t> pmax, qmax, nmax, rmax;
  std::string target;
};

bool write_file(const fs::path& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const Common& c, const std::string& command)
{
  cli::Invocation inv{command, c.target, c.input, c.pmax, c.qmax, c.nmax, c.rmax};
  auto result = cli::run(inv);
  const std::string text = cli::render(result.report);
  if (c.output.empty()) std::cout << text;
  else if (!write_file(c.output, text)) {
    std::cerr << "cannot write " << c.output << "\n";
    return cli::InputError;
  }
  if (!c.csv.empty()) {
    std::error_code ec;
    fs::create_directories(c.csv, ec);
    for (const auto& t : result.tables)
      if (!write_file(fs::path(c.csv) / (command + "_" + c.target + "_" + t.name + ".csv"), cli::to_csv(t))) {
        std::cerr << "cannot write into " << c.csv << "\n";
        return cli::InputError;
      }
  }
  if (result.exit_code != 0) {
    const auto& r = result.report;
    if (r.contains("error")) std::cerr << r["error"]["message"].get<std::string>() << "\n";
    else if (r.contains("first_failure") && !r["first_failure"].is_null())
      std::cerr << "failed: " << r["first_failure"]["name"].get<std::string>() << " (" << r["first_failure"]["detail"].get<std::string>()
                << ")\n";
  }
  return result.exit_code;
}

int normalize(const Common& c)
{
  try {
    auto doc = load_json(c.input);
    std::string text = with_document(doc, [](const auto& d) { return pretty(serialize(d)); });
    if (c.output.empty()) std::cout << text;
    else if (!write_file(c.output, text)) return cli::InputError;
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return cli::InputError;
  }
}

CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& help, Common& c, const std::vector<std::string>* targets)
{
  auto* sub = app.add_subcommand(name, help);
  if (targets) sub->add_option("target", c.target, "what to run")->required()->check(CLI::IsMember(*targets));
  sub->add_option("-i,--input", c.input, "input JSON file")->required();
  sub->add_option("-o,--output", c.output, "write the report here instead of stdout");
  if (targets) {
    sub->add_option("--csv", c.csv, "also write every table as CSV into this directory");
    sub->add_option("--pmax", c.pmax, "window size in the Hopf direction");
    sub->add_option("--qmax", c.qmax, "window size in the algebra direction");
    sub->add_option("--nmax", c.nmax, "top degree reported");
    sub->add_option("--rmax", c.rmax, "last page computed");
  }
  return sub;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cyclic homology of Hopf crossed products, by exact linear algebra"};
  app.require_subcommand(1);
  Common c;
  auto* v = subcommand(app, "verify", "run an identity suite", c, &cli::verify_targets());
  auto* k = subcommand(app, "compute", "compute dimension tables", c, &cli::compute_targets());
  auto* m = subcommand(app, "compare", "compare two computations of the same invariant", c, &cli::compare_targets());
  auto* n = subcommand(app, "normalize", "rewrite an input file in normal form", c, nullptr);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : cli::InputError;
  }
  if (v->parsed()) return emit(c, "verify");
  if (k->parsed()) return emit(c, "compute");
  if (m->parsed()) return emit(c, "compare");
  if (n->parsed()) return normalize(c);
  return cli::InputError;
}
