// gamma-aq: exact computation of relative derived functors of pi_0 on the
// functor category of finite pointed sets, with the classical Andre-Quillen
// oracle for verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gaq/commands.hpp"

namespace {

void emit(const gaq::Report& report, const std::string& json_path) {
  std::cout << report.human;
  if (!json_path.empty()) {
    if (json_path == "-") {
      std::cout << report.doc.dump(2) << "\n";
    } else {
      std::ofstream out(json_path);
      out << report.doc.dump(2) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gamma-aq: Andre-Quillen homology via relative functor homology"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  app.add_option("--json", json_path, "write the machine-readable report to this path ('-' for stdout)");

  std::string file;
  std::string gamma_parts;
  std::string field_name = "Fp2";
  gaq::PiyOptions piy;
  int classical_degree = 0;
  std::vector<std::string> suite_args;
  bool verify_all = false;
  std::string cache_action;

  auto* c_pi0 = app.add_subcommand("pi0", "dim pi_0(L(A,M)) against the Kaehler presentation");
  c_pi0->add_option("file", file, "problem file")->required();

  auto* c_piy = app.add_subcommand("piy", "relative derived functors pi_i^Y (or weighted Tor)");
  c_piy->add_option("file", file, "problem file");
  c_piy->add_option("--gamma", gamma_parts, "use Gamma(lambda) as the module (comma-separated parts)");
  c_piy->add_option("--field", field_name, "field for --gamma runs: Q or Fp<p> (default Fp2)");
  c_piy->add_option("--degree", piy.d, "top homological degree d")->capture_default_str();
  c_piy->add_option("--trunc", piy.N, "truncation level N")->capture_default_str();
  c_piy->add_option("--bound", piy.B, "partition bound B")->capture_default_str();
  c_piy->add_flag("--absolute", piy.absolute, "resolve by representables only");
  c_piy->add_option("--weight", piy.weight, "compute Tor^Y(T,-) for T = t or lambda^<k>");
  bool no_empty = false;
  c_piy->add_flag("--no-empty-partition", no_empty, "exclude the empty partition from covers");
  c_piy->add_option("--cap", piy.cap, "resource cap: max cover dimension per level")->capture_default_str();
  bool no_cache = false;
  c_piy->add_flag("--no-cache", no_cache, "skip the resolution cache");

  auto* c_classical = app.add_subcommand("classical", "classical Andre-Quillen oracle D_0 / D_1");
  c_classical->add_option("file", file, "problem file")->required();
  c_classical->add_option("--degree", classical_degree, "0 or 1")->required();

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite_args,
                       "one of: lemma21 lemma22 lemma32 lemma33 lemma41 lemma42 theorem45 remark-t");
  c_verify->add_flag("--all", verify_all, "run every suite");

  auto* c_cache = app.add_subcommand("cache", "inspect or clear the resolution cache");
  c_cache->add_option("action", cache_action, "ls or clear")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    gaq::Report report;
    if (c_pi0->parsed()) {
      report = gaq::cmd_pi0(gaq::parse_problem(file));
    } else if (c_piy->parsed()) {
      piy.include_empty = !no_empty;
      piy.use_cache = !no_cache;
      if (!gamma_parts.empty()) {
        std::vector<int> parts;
        std::stringstream ss(gamma_parts);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        gaq::FieldSpec fs = gaq::FieldSpec::prime(2);
        if (field_name == "Q")
          fs = gaq::FieldSpec::rationals();
        else if (field_name.rfind("Fp", 0) == 0 && field_name.size() > 2)
          fs = gaq::FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(field_name.substr(2))));
        report = gaq::cmd_piy_gamma(fs, gaq::Partition(parts), piy);
      } else if (!file.empty()) {
        auto p = gaq::parse_problem(file);
        if (!c_piy->count("--degree")) piy.d = p.d;
        if (!c_piy->count("--trunc")) piy.N = p.N;
        if (!c_piy->count("--bound")) piy.B = p.B;
        report = gaq::cmd_piy(p, piy);
      } else {
        std::cerr << "piy needs a problem file or --gamma\n";
        return 2;
      }
    } else if (c_classical->parsed()) {
      report = gaq::cmd_classical(gaq::parse_problem(file), classical_degree);
    } else if (c_verify->parsed()) {
      auto names = verify_all ? gaq::suite_names() : suite_args;
      if (names.empty()) {
        std::cerr << "verify needs a suite name or --all\n";
        return 2;
      }
      report = gaq::cmd_verify(names);
    } else if (c_cache->parsed()) {
      report = gaq::cmd_cache(cache_action);
    }
    emit(report, json_path);
    return report.exit_code;
  } catch (const gaq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gaq::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const gaq::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    std::cerr << "try a smaller truncation or raise --cap\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
