#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "spancalc/diagram.hpp"
#include "spancalc/fock.hpp"
#include "spancalc/report.hpp"
#include "spancalc/sln.hpp"

using namespace spancalc;

namespace {

struct Options {
  std::string suite, what;
  std::string format = "text";
  std::string out_path;
  std::string stuff = "identity";
  std::string kind = "horizontal";
  int max_card = 6;
  int rank = 2;
  int from = 0, to = 1, k = 1;
  int terms = 5;
  int max_n = 4;
};

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void require_format(const Options& opt,
                    const std::vector<std::string>& allowed) {
  for (const auto& f : allowed)
    if (opt.format == f) return;
  std::string msg = "--format must be one of:";
  for (const auto& f : allowed) msg += " " + f;
  throw std::invalid_argument(msg);
}

int run_verify(const Options& opt) {
  if (opt.max_card < 2)
    throw std::invalid_argument(
        "window too small: --max-card must be at least 2");
  require_format(opt, {"json", "csv", "text"});
  if (opt.suite == "heisenberg") {
    const auto results = check_catalog(heisenberg_catalog(), opt.max_card);
    write_out(opt.format == "json"
                  ? heisenberg_report_json(results, opt.max_card)
              : opt.format == "csv" ? heisenberg_report_csv(results)
                                    : heisenberg_report_text(results,
                                                             opt.max_card),
              opt.out_path);
    return all_pass(results) ? 0 : 1;
  }
  if (opt.rank < 2) throw std::invalid_argument("--rank must be at least 2");
  const auto checks = verify_sln_all(opt.rank, opt.max_card);
  write_out(opt.format == "json" ? sln_report_json(checks, opt.max_card)
            : opt.format == "csv"
                ? sln_report_csv(checks)
                : sln_report_text(checks, opt.max_card),
            opt.out_path);
  return all_pass(checks) ? 0 : 1;
}

void emit_dimblock(const Options& opt, const DimBlock& b,
                   const std::string& title) {
  require_format(opt, {"json", "csv", "text"});
  write_out(opt.format == "json"  ? dimblock_json(b, title)
            : opt.format == "csv" ? dimblock_csv(b)
                                  : dimblock_text(b, title),
            opt.out_path);
}

void emit_sequence(const Options& opt, const std::vector<Rational>& values,
                   const std::string& title) {
  require_format(opt, {"json", "csv", "text"});
  write_out(opt.format == "json"  ? sequence_json(values, title)
            : opt.format == "csv" ? sequence_csv(values)
                                  : sequence_text(values, title),
            opt.out_path);
}

int run_emit(const Options& opt) {
  if (opt.what == "block") {
    emit_dimblock(opt, path_block(opt.from, opt.to),
                  "paths " + std::to_string(opt.from) + " -> " +
                      std::to_string(opt.to));
  } else if (opt.what == "number-block") {
    emit_dimblock(opt, number_block(opt.from),
                  "shared lower neighbors at stage " +
                      std::to_string(opt.from));
  } else if (opt.what == "sym-block") {
    const bool vertical = opt.kind == "vertical";
    const DimBlock b = vertical ? antisymmetrized_block(opt.k, opt.from)
                                : symmetrized_block(opt.k, opt.from);
    emit_dimblock(opt, b,
                  std::string(vertical ? "anti" : "") + "symmetrized block k=" +
                      std::to_string(opt.k) + " from stage " +
                      std::to_string(opt.from));
  } else if (opt.what == "lattice") {
    require_format(opt, {"dot", "json"});
    write_out(opt.format == "dot" ? lattice_dot(opt.max_n)
                                  : lattice_json(opt.max_n),
              opt.out_path);
  } else if (opt.what == "gf") {
    if (opt.terms < 1)
      throw std::invalid_argument("--terms must be at least 1");
    const StuffType psi = opt.stuff == "pointed"
                              ? pointed_stuff_type(opt.max_card)
                          : opt.stuff == "empty"
                              ? empty_stuff_type(opt.max_card)
                              : identity_stuff_type(opt.max_card);
    emit_sequence(opt, stuff_type_gf(psi, opt.terms - 1),
                  opt.stuff + " stuff type gf");
  } else {  // moments
    if (opt.terms < 1)
      throw std::invalid_argument("--terms must be at least 1");
    std::vector<Rational> values;
    values.reserve(opt.terms);
    for (int k = 0; k < opt.terms; ++k)
      values.push_back(vacuum_moment(k, opt.max_card));
    emit_sequence(opt, values,
                  "vacuum moments at window " + std::to_string(opt.max_card));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spancalc: exact span calculus over finite groupoids.\n"
      "Verifies the ladder-diagram relation catalogs and emits the derived\n"
      "matrices, blocks, lattices, and generating functions exactly."};
  app.set_version_flag("--version", std::string("spancalc ") + kToolVersion);
  app.require_subcommand(1);

  Options opt;

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite; exit 0 iff every check passes");
  verify->add_option("suite,--suite", opt.suite, "heisenberg or sln")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "sln"}));
  verify
      ->add_option("--max-card", opt.max_card,
                   "cardinality window; cost grows factorially above 6")
      ->envname("SPANCALC_MAX_CARD")
      ->capture_default_str();
  verify->add_option("--rank", opt.rank, "rank n for the sln suite")
      ->capture_default_str();
  verify->add_option("--format", opt.format, "json, csv, or text")
      ->capture_default_str();
  verify->add_option("--out", opt.out_path,
                     "write to this file instead of stdout");

  auto* emit = app.add_subcommand(
      "emit", "emit a block, matrix, lattice, or coefficient sequence");
  emit->add_option("what,--what", opt.what,
                   "block, number-block, sym-block, lattice, gf, or moments")
      ->required()
      ->check(CLI::IsMember({"block", "number-block", "sym-block", "lattice",
                             "gf", "moments"}));
  emit->add_option("--from", opt.from, "source stage (block, number-block, "
                                       "sym-block)")
      ->capture_default_str();
  emit->add_option("--to", opt.to, "target stage (block)")
      ->capture_default_str();
  emit->add_option("--k", opt.k, "boxes added (sym-block)")
      ->capture_default_str();
  emit->add_option("--terms", opt.terms, "coefficient count (gf, moments)")
      ->capture_default_str();
  emit->add_option("--max", opt.max_n, "largest total (lattice)")
      ->capture_default_str();
  emit->add_option("--stuff", opt.stuff, "identity, pointed, or empty (gf)")
      ->check(CLI::IsMember({"identity", "pointed", "empty"}))
      ->capture_default_str();
  emit->add_option("--kind", opt.kind, "horizontal or vertical (sym-block)")
      ->check(CLI::IsMember({"horizontal", "vertical"}))
      ->capture_default_str();
  emit->add_option("--max-card", opt.max_card,
                   "cardinality window (gf, moments)")
      ->envname("SPANCALC_MAX_CARD")
      ->capture_default_str();
  emit->add_option("--format", opt.format,
                   "json, csv, or text; dot or json for the lattice")
      ->capture_default_str();
  emit->add_option("--out", opt.out_path,
                   "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return verify->parsed() ? run_verify(opt) : run_emit(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
