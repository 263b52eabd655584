#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/run.hpp"

int main(int argc, char** argv) {
  using birat::cli::Command;
  using birat::cli::Format;

  CLI::App app{"Exact inversion and implicitization of rational curves and surfaces"};
  app.require_subcommand(1);

  birat::cli::JobSpec job;
  std::string format = "text";
  std::size_t marked = 0;

  const std::map<std::string, std::string> help{
      {"curve-invert", "Invert a plane curve through its Sylvester matrix"},
      {"surface-invert", "Decide properness of a surface and compute its inverse"},
      {"moving-matrix", "Print the moving-surface bases and the assembled matrix"},
      {"dixon", "Build the hybrid Cayley-Dixon matrix of an affine surface"},
      {"verify", "Check a supplied inverse or implicit equation"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (Command c : {Command::curve_invert, Command::surface_invert, Command::moving_matrix, Command::dixon,
                    Command::verify}) {
    const std::string name = birat::cli::command_name(c);
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", job.input_path, "Input file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--m-max", job.m_max, "Largest row degree tried by the moving-surface search")
        ->check(CLI::Range(1u, 8u));
    sub->add_option("--marked-column", marked, "Column left out of the minors");
    sub->add_option("--seed", job.seed, "Seed of the random pre-checks");
    sub->add_flag("--timing", job.timing, "Report wall-clock time");
    subs.emplace_back(sub, c);
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, c] : subs) {
    if (!sub->parsed()) continue;
    job.command = c;
    if (sub->count("--marked-column") > 0) job.marked_column = marked;
  }
  job.format = format == "structured" ? Format::structured : Format::text;
  return birat::cli::run(job, std::cout, std::cerr);
}
