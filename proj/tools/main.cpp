#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using stabring::cli::RunConfig;

RunConfig::Output parse_output(const std::string& s) {
  if (s == "csv") return RunConfig::Output::csv;
  if (s == "text") return RunConfig::Output::text;
  return RunConfig::Output::json;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability indices, Fourier-algebra norms, difference sets, "
               "half-graph spectra, and exact combinatorial bounds on finite "
               "abelian groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output = "json";
  int max_k = -1;
  int sample = -1;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "report format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  const auto add_set_options = [&](CLI::App* sub) {
    auto* set = sub->add_option("--set", cfg.set_spec,
                                "element indices '1,2,4' or residue tuples '(0,1),(1,0)'");
    auto* file = sub->add_option("--set-file", cfg.set_file,
                                 "file with one set per line");
    set->excludes(file);
    sub->callback([sub] {
      if (!sub->count("--set") && !sub->count("--set-file"))
        throw CLI::ValidationError("need --set or --set-file");
    });
  };

  auto* st = app.add_subcommand("stability", "exact stability index by complete witness search");
  st->add_option("--group", cfg.group_spec, "group spec, e.g. Z/12 or Z/2xZ/3")->required();
  add_set_options(st);
  st->add_option("--max-k", max_k, "cap the witness search order");
  add_output(st);

  auto* nm = app.add_subcommand("norm", "Fourier-algebra norm of an indicator");
  nm->add_option("--group", cfg.group_spec, "group spec")->required();
  add_set_options(nm);
  add_output(nm);

  auto* sd = app.add_subcommand("sidon", "Sidon test with explicit violation");
  sd->add_option("--group", cfg.group_spec, "group spec")->required();
  add_set_options(sd);
  add_output(sd);

  auto* sg = app.add_subcommand("singer", "perfect difference set from GF(q^3)");
  sg->add_option("--q", cfg.q, "prime power in {2,3,4,5,7,8,9,11,13}")->required();
  add_output(sg);

  auto* hg = app.add_subcommand("halfgraph", "half-graph singular values and trace norm");
  hg->add_option("--k", cfg.k, "matrix size (1..4096)")->required();
  add_output(hg);

  auto* bd = app.add_subcommand("bounds", "exact big-integer combinatorial bounds");
  bd->add_option("--multinomial", cfg.multinomial, "colour sizes, e.g. 2,2,2");
  bd->add_option("--representation", cfg.representation, "'k,s' for the two-step chain");
  add_output(bd);

  auto* iv = app.add_subcommand("interval", "integer-interval norm: quadrature vs series");
  iv->add_option("--k", cfg.k, "interval length")->required();
  iv->add_option("--tol", cfg.tol, "certified series tolerance (default 1e-9)");
  add_output(iv);

  auto* vf = app.add_subcommand("verify", "sweep subsets and check every inequality");
  vf->add_option("--groups", cfg.groups_spec,
                 "ranges/specs, e.g. 'Z/2..Z/10' or 'Z/6,Z/2xZ/4' (default Z/2..Z/10)");
  vf->add_flag("--exhaustive", cfg.exhaustive, "enumerate all subsets (order <= 16)");
  vf->add_option("--sample", sample, "seeded random subsets per group");
  vf->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
  add_output(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (st->parsed()) cfg.command = RunConfig::Command::stability;
  if (nm->parsed()) cfg.command = RunConfig::Command::norm;
  if (sd->parsed()) cfg.command = RunConfig::Command::sidon;
  if (sg->parsed()) cfg.command = RunConfig::Command::singer;
  if (hg->parsed()) cfg.command = RunConfig::Command::halfgraph;
  if (bd->parsed()) cfg.command = RunConfig::Command::bounds;
  if (iv->parsed()) cfg.command = RunConfig::Command::interval;
  if (vf->parsed()) cfg.command = RunConfig::Command::verify;
  cfg.output = parse_output(output);
  if (max_k >= 0) cfg.max_k = max_k;
  if (sample >= 0) cfg.sample = sample;

  return stabring::cli::run(cfg, std::cout, std::cerr);
}
