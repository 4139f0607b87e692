#include "cli.hpp"

#include <fstream>   // for ifstream
#include <iostream>  // for istream, ostream
#include <iterator>  // for istreambuf_iterator
#include <sstream>   // for ostringstream

#include "CLI11.hpp"

#include "bzf/core.hpp"
#include "bzf/errors.hpp"
#include "bzf/io.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/suite.hpp"
#include "bzf/verify.hpp"

namespace bzf::cli {

  namespace {
    std::string slurp(std::string const& path, std::istream& in) {
      if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      }
      std::ifstream file(path);
      if (!file) {
        throw MalformedInput("cannot open " + path);
      }
      return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    int verdict_code(Report const& r) {
      return r.passed() ? ok : violated;
    }

    void print_report(Report const& r, std::ostream& out, std::ostream& err) {
      out << to_json(r).dump() << '\n';
      err << r.summary() << '\n';
      for (auto const& sub : r.subreports) {
        err << "  " << sub.summary() << '\n';
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Exact arithmetic, injective endomorphisms and brute-force "
                 "verification for the semigroup B_Z^F over {[0), [1)}",
                 "bzf"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads for exhaustive scans (0 = all cores)");

    std::string x_text, y_text, endo_text, endo2_text, path = "-";
    std::int64_t window = 4, kmax = 4, trials = 100, corner = 0;
    std::uint64_t seed  = 7;
    std::string   check = "all";

    auto* mul_cmd = app.add_subcommand("mul", "Multiply two elements i,j,f");
    mul_cmd->add_option("x", x_text)->required();
    mul_cmd->add_option("y", y_text)->required();

    auto* apply_cmd = app.add_subcommand("apply", "Apply an endomorphism alpha:k,p@t or beta:k,p@t");
    apply_cmd->add_option("endo", endo_text)->required();
    apply_cmd->add_option("x", x_text)->required();

    auto* compose_cmd = app.add_subcommand("compose", "Canonical form of e1 then e2");
    compose_cmd->add_option("e1", endo_text)->required();
    compose_cmd->add_option("e2", endo2_text)->required();
    compose_cmd->add_option("--window", window, "Verification window")->capture_default_str();

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "Split e into a (0,0,[0))-endomorphism and an automorphism");
    decompose_cmd->add_option("endo", endo_text)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify a map table (JSON)");
    classify_cmd->add_option("file", path, "Map table file, or - for stdin")->capture_default_str();

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check a map table for the homomorphism and injectivity properties");
    verify_cmd->add_option("file", path, "Map table file, or - for stdin")->capture_default_str();
    verify_cmd->add_option("--check", check, "hom, inj or all")
        ->check(CLI::IsMember({"hom", "inj", "all"}))
        ->capture_default_str();

    auto* table_cmd = app.add_subcommand("table", "Tabulate an endomorphism as a map table (JSON)");
    table_cmd->add_option("endo", endo_text)->required();
    table_cmd->add_option("--window", window, "Window size n")->capture_default_str();

    auto* suite_cmd = app.add_subcommand("suite", "Run the full theorem suite");
    suite_cmd->add_option("--window", window)->capture_default_str();
    suite_cmd->add_option("--kmax", kmax)->capture_default_str();
    suite_cmd->add_option("--trials", trials)->capture_default_str();
    suite_cmd->add_option("--seed", seed)->capture_default_str();

    auto* corner_cmd = app.add_subcommand(
        "corner", "Check the corner diagram of a base alpha:k,p or beta:k,p");
    corner_cmd->add_option("base", endo_text)->required();
    corner_cmd->add_option("--corner", corner, "Corner index n >= 0")->capture_default_str();
    corner_cmd->add_option("--window", window)->capture_default_str();

    std::vector<char const*> argv{"bzf"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : bad_input;
    }

    CheckOptions const opts{threads, {}};
    try {
      if (mul_cmd->parsed()) {
        out << to_string(mul(parse_element(x_text), parse_element(y_text))) << '\n';
        return ok;
      }
      if (apply_cmd->parsed()) {
        out << to_string(apply(parse_endo(endo_text), parse_element(x_text))) << '\n';
        return ok;
      }
      if (compose_cmd->parsed()) {
        if (window < 2) {
          throw MalformedInput("--window must be >= 2");
        }
        out << to_string(compose(parse_endo(endo_text), parse_endo(endo2_text), window))
            << '\n';
        return ok;
      }
      if (decompose_cmd->parsed()) {
        auto const d = decompose(parse_endo(endo_text));
        out << to_string(d.endo0) << '\n' << to_string(d.automorphism) << '\n';
        return ok;
      }
      if (classify_cmd->parsed()) {
        auto const table  = map_table_from_json(parse_json(slurp(path, in)));
        auto const result = classify(table, opts);
        if (result.endo) {
          out << to_string(*result.endo) << '\n';
        }
        print_report(result.report, out, err);
        return verdict_code(result.report);
      }
      if (verify_cmd->parsed()) {
        auto const table = map_table_from_json(parse_json(slurp(path, in)));
        Report     report;
        report.name = "verify";
        if (check != "inj") {
          report.absorb(check_homomorphism(table, opts));
        }
        if (check != "hom") {
          report.absorb(check_injective(table, opts));
        }
        if (report.subreports.size() == 1) {
          report = report.subreports.front();
        }
        print_report(report, out, err);
        return verdict_code(report);
      }
      if (table_cmd->parsed()) {
        out << to_json(tabulate(parse_endo(endo_text), window)).dump() << '\n';
        return ok;
      }
      if (suite_cmd->parsed()) {
        SuiteOptions so;
        so.n       = window;
        so.kmax    = kmax;
        so.trials  = trials;
        so.seed    = seed;
        so.threads = threads;
        auto const report = theorem_suite(so);
        print_report(report, out, err);
        return verdict_code(report);
      }
      if (corner_cmd->parsed()) {
        auto const e = parse_endo(endo_text);
        if (e.twist != 0) {
          throw MalformedInput("corner takes a base without a twist");
        }
        auto const report = corner_diagram_check(e.base, corner, window);
        print_report(report, out, err);
        return verdict_code(report);
      }
    } catch (NormalizationFailed const& e) {
      err << "error: " << e.what() << '\n';
      return violated;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return bad_input;
    }
    return bad_input;
  }

}  // namespace bzf::cli
