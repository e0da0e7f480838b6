// Command-line surface over the library: each subcommand loads its inputs,
// runs one computation, and prints a deterministic report.

#include <CLI11.hpp>
#include <iostream>

#include "koszul/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Koszul cohomology of embedded curves from presentation data"};
  app.require_subcommand(1);

  std::string output = "json";
  app.add_option("--output", output, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  struct Flag {
    std::string name, help;
    bool is_model = false;
  };
  // subcommand -> accepted parameters
  const std::map<std::string, std::vector<Flag>> commands = {
      {"dims",
       {{"model", "Model file", true},
        {"p", "Wedge degree p"},
        {"subspace", "JSON file with a basis of W"},
        {"basis", "Set to true to include the cycle basis"}}},
      {"build-gl",
       {{"model", "Rational model file", true},
        {"d1", "Degree of L1"},
        {"d2", "Degree of L2"},
        {"s1", "Basis index of the section of L1 (default 0)"},
        {"s2", "Basis index of the section of L2 (default d2)"},
        {"s1-coeffs", "Comma-separated coordinates of s1"},
        {"s2-coeffs", "Comma-separated coordinates of s2"}}},
      {"build-voisin",
       {{"model", "Model file", true},
        {"datum", "Determinant datum file"},
        {"t", "Comma-separated coordinates of t in H"},
        {"U", "JSON file with a basis of U"},
        {"p", "Wedge degree p"}}},
      {"class-rank",
       {{"model", "Model file", true}, {"class", "Koszul class file"}}},
      {"split-detect",
       {{"model", "Model file", true},
        {"datum", "Determinant datum file"},
        {"t", "Comma-separated coordinates of t in H"},
        {"U", "JSON file with a basis of U"},
        {"p", "Wedge degree p"}}},
      {"check-ks",
       {{"model", "Model file", true},
        {"class", "Koszul class file"},
        {"W", "JSON file with an explicit support basis"}}},
      {"check-four-term",
       {{"model", "Model file", true}, {"datum", "Determinant datum file"}}},
      {"gen-zero",
       {{"model", "Model file", true}, {"datum", "Determinant datum file"}}},
      {"plucker",
       {{"model", "Model file (symbolic check)", true},
        {"datum", "Determinant datum file (symbolic check)"},
        {"matrix", "JSON file with a numeric skew matrix"}}},
      {"mu-coker", {{"model", "Model file with a canonical_mult block", true}}},
      {"pfaffian",
       {{"model", "Model file", true},
        {"datum", "Determinant datum file"},
        {"i", "Row index"},
        {"j", "Row index"},
        {"k", "Row index"},
        {"l", "Row index"}}},
  };

  std::map<std::string, std::map<std::string, std::string>> values;
  for (const auto& [name, flags] : commands) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();  // let --output after the subcommand reach the app
    for (const auto& f : flags) {
      auto& slot = values[name][f.name];
      auto* opt = sub->add_option("--" + f.name, slot, f.help);
      if (f.is_model && name != "plucker") opt->required();
    }
  }

  CLI11_PARSE(app, argc, argv);

  auto* sub = app.get_subcommands().front();
  koszul::JobSpec job;
  job.command = sub->get_name();
  job.json_output = (output == "json");
  for (auto& [key, val] : values[job.command]) {
    if (val.empty()) continue;
    if (key == "model")
      job.model_path = val;
    else
      job.params[key] = val;
  }
  return koszul::run_job(job, std::cout);
}
