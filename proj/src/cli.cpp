#include "loopforge/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopforge/analysis.hpp"
#include "loopforge/builtins.hpp"
#include "loopforge/errors.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/table_io.hpp"
#include "loopforge/twisted.hpp"

namespace loopforge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCap = 2;
constexpr int kExitUsage = 64;

bool is_cap_code(Errc c) { return c == Errc::order_cap_exceeded || c == Errc::enumeration_too_large; }

int exit_code_for(const LoopError& e) { return is_cap_code(e.code()) ? kExitCap : kExitValidation; }

struct InputSpec {
  std::string file;
  std::string builtin;
};

/// Exactly one of file / --builtin; a violation is a usage error.
LoopTable load_input(const InputSpec& in) {
  if (in.file.empty() == in.builtin.empty())
    throw CLI::ValidationError("input", "give exactly one of <file> or --builtin NAME");
  return in.file.empty() ? builtin_table(in.builtin) : read_table_file(in.file);
}

std::vector<int> parse_subset(const std::string& csv, int n) {
  std::vector<int> out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad --subset entry '" + tok + "'");
    }
    if (used != tok.size()) fail(Errc::parse_error, "bad --subset entry '" + tok + "'");
    if (v < 1 || v > n) fail(Errc::parse_error, "--subset entry " + tok + " outside 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  if (out.empty()) fail(Errc::parse_error, "--subset is empty");
  return out;
}

int cmd_analyze(const InputSpec& in, bool json, bool isotopes) {
  LoopTable L = load_input(in);
  AnalyzeOptions opt;
  opt.with_isotopes = isotopes;
  AnalysisReport rep = analyze(L, opt);
  std::cout << (json ? emit_json(rep) : emit_text(rep));
  if (rep.errors.empty()) return kExitOk;
  for (const PhaseError& e : rep.errors)
    if (e.code == errc_name(Errc::order_cap_exceeded) || e.code == errc_name(Errc::enumeration_too_large))
      return kExitCap;
  return kExitValidation;
}

int cmd_isotopes(const InputSpec& in) {
  LoopTable L = load_input(in);
  IsotopyPartition part = isotopy_classes(L);
  std::cout << part.classes.size() << " isotopy class" << (part.classes.size() == 1 ? "" : "es") << "\n";
  for (const IsotopyClass& c : part.classes) {
    std::cout << "  representative a=" << c.representative + 1 << ", members:";
    for (int m : c.members) std::cout << ' ' << m + 1;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_thalf(const InputSpec& in, const std::string& subset_csv) {
  GroupTable G = GroupTable::certify(load_input(in));
  TwistedSubset T = subset_csv.empty()
                        ? [&] {
                            std::vector<int> all(static_cast<std::size_t>(G.size()));
                            for (int i = 0; i < G.size(); ++i) all[static_cast<std::size_t>(i)] = i;
                            return twisted_subset(G, std::move(all));
                          }()
                        : twisted_subset(G, parse_subset(subset_csv, G.size()));
  std::cout << format_table(t_half(G, T));
  return kExitOk;
}

int cmd_check(const std::string& file) {
  LoopTable L = read_table_file(file);
  std::cout << "ok: loop of order " << L.size() << ", identity " << L.identity() + 1 << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Finite loop analysis: Cayley tables, multiplication groups, isotopes, and the T(1/2) construction", "loopforge"};
  app.require_subcommand(1);

  InputSpec an_in, iso_in, th_in;
  bool an_json = false, an_isotopes = false;
  std::string th_subset, chk_file;

  CLI::App* an = app.add_subcommand("analyze", "Full structural report");
  an->add_option("file", an_in.file, "loop table file");
  an->add_option("--builtin", an_in.builtin, "embedded dataset name");
  an->add_flag("--json", an_json, "machine-readable JSON report");
  an->add_flag("--isotopes", an_isotopes, "include the isotopy classification");

  CLI::App* iso = app.add_subcommand("isotopes", "Partition principal isotopes by isomorphism");
  iso->add_option("file", iso_in.file, "loop table file");
  iso->add_option("--builtin", iso_in.builtin, "embedded dataset name");

  CLI::App* th = app.add_subcommand("thalf", "Glauberman T(1/2) Bruck loop of a group");
  th->add_option("file", th_in.file, "group table file");
  th->add_option("--builtin", th_in.builtin, "embedded dataset name");
  th->add_option("--subset", th_subset, "1-based member list of a twisted subset, e.g. 1,4,6");

  CLI::App* chk = app.add_subcommand("check", "Validate a table file");
  chk->add_option("file", chk_file, "loop table file")->required();

  std::vector<const char*> argv;
  argv.push_back("loopforge");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (an->parsed()) return cmd_analyze(an_in, an_json, an_isotopes);
    if (iso->parsed()) return cmd_isotopes(iso_in);
    if (th->parsed()) return cmd_thalf(th_in, th_subset);
    if (chk->parsed()) return cmd_check(chk_file);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const LoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace loopforge
