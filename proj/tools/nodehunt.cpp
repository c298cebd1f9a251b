#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nodehunt/error.hpp"
#include "nodehunt/parallel.hpp"
#include "nodehunt/pipeline.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::optional<unsigned> env_threads() {
  const char* v = std::getenv("NODEHUNT_THREADS");
  if (!v || !*v) return std::nullopt;
  try {
    const long n = std::stol(v);
    if (n >= 1) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring NODEHUNT_THREADS=" << v << "\n";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  using nodehunt::RunConfig;

  CLI::App app{"nodehunt: singular members of hypersurface families, multimodular lifting, "
               "and intersection-lattice and abelian-cover verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "nodehunt 0.1.0");

  RunConfig c;
  bool json = false;
  bool no_timings = false;
  std::string output;
  unsigned threads = 0;
  std::uint64_t seed = 1;

  app.add_flag("--json", json, "emit the report as JSON");
  app.add_flag("--no-timings", no_timings, "omit the timings section (byte-stable reports)");
  app.add_option("-o,--output", output, "write the report to a file instead of stdout");
  app.add_option("--threads", threads,
                 "worker threads (default: $NODEHUNT_THREADS, else all cores for hunt and 1 elsewhere)")
      ->check(CLI::PositiveNumber);

  auto* hunt = app.add_subcommand("hunt", "find parameter values whose member is singular");
  hunt->add_option("--family", c.family_path, "family file (one polynomial in x0.., p1..)")->required();
  hunt->add_option("--field", c.field, "p or p,k")->required();
  hunt->add_option("--trials", c.trials, "random parameter draws when the space is too big to scan");
  hunt->add_option("--seed", seed, "RNG seed");
  hunt->add_option("--budget", c.budget, "maximum parameter points examined");
  hunt->add_flag("--classify", c.classify, "classify each singular point");
  hunt->add_flag("--solve-at-point", c.solve_at_point, "solve for parameters at random points instead");
  hunt->add_option("--degree-cap", c.degree_cap, "jet order cap for classification");
  hunt->add_option("--nvars", c.nvars, "number of x variables (default: inferred)");
  hunt->add_option("--nparams", c.nparams, "number of parameters (default: inferred)");

  auto* interp = app.add_subcommand("interpolate", "polynomials of given degree vanishing on points");
  interp->add_option("--points", c.points_path, "points file, one point per line")->required();
  interp->add_option("--field", c.field, "p or p,k")->required();
  interp->add_option("--degree", c.degree, "degree of the interpolating polynomials")->required();
  interp->add_flag("--homogeneous", c.homogeneous, "use only monomials of exactly that degree");
  interp->add_option("--slack", c.slack, "use dim + slack random points and check the rest");
  interp->add_option("--seed", seed, "RNG seed for the oversampled subset");

  auto* lift = app.add_subcommand("lift", "reconstruct rationals from residues modulo primes");
  lift->add_option("--residues", c.residues_path, "residue file, lines `p: payload`")->required();
  auto* pairs = lift->add_flag("--pairs", c.pairs, "payloads are unordered pairs `a,b`");
  lift->add_option("--tuples", c.tuples, "payloads are unordered k-tuples")->excludes(pairs);

  auto* classify = app.add_subcommand("classify", "ADE type of singular points of one plane curve");
  classify->add_option("--poly", c.poly, "homogeneous polynomial in x0, x1, x2")->required();
  classify->add_option("--field", c.field, "p, p,k or Q")->required();
  classify->add_option("--point", c.point, "projective point (a:b:c); required over Q");
  classify->add_option("--degree-cap", c.degree_cap, "jet order cap");
  classify->add_option("--budget", c.budget, "maximum points examined over finite fields");

  auto* lattice = app.add_subcommand("lattice", "intersection lattice relations");
  lattice->add_option("--gram", c.lattice_path, "lattice file (names: line plus matrix)")->required();
  lattice->require_subcommand(1);
  auto* search = lattice->add_subcommand("search", "search pairings of a new curve for radical relations");
  search->add_option("--bounds", c.bounds, "box, e.g. `N1-N8=0:1 K=0:4 self=-2:4`");
  search->add_option("--seed", seed, "RNG seed when the box is sampled");
  search->add_option("--trials", c.trials, "samples when the box exceeds the exhaustive limit");
  auto* solve = lattice->add_subcommand("solve", "solve a relation template under constraints");
  solve->add_option("--template", c.template_path, "template file")->required();
  solve->add_option("--constraints", c.constraints_path, "constraints file")->required();

  auto* cover = app.add_subcommand("cover", "abelian cover building data");
  std::string mode;
  cover->add_option("--lattice", c.lattice_path, "lattice file")->required();
  cover->add_option("--cover", c.cover_path, "cover description file")->required();
  cover->add_option("mode", mode, "verify or invariants")->required()->check(CLI::IsMember({"verify", "invariants"}));

  auto* fixture = app.add_subcommand("fixture", "built-in verification fixture");
  fixture->add_option("name", c.fixture_name, "fixture name (godeaux-2a1-2a3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (hunt->parsed()) c.command = "hunt";
  else if (interp->parsed()) c.command = "interpolate";
  else if (lift->parsed()) c.command = "lift";
  else if (classify->parsed()) c.command = "classify";
  else if (search->parsed()) c.command = "lattice-search";
  else if (solve->parsed()) c.command = "lattice-solve";
  else if (cover->parsed()) c.command = mode == "verify" ? "cover-verify" : "cover-invariants";
  else if (fixture->parsed()) c.command = "fixture";
  c.seed = seed;

  if (threads > 0) c.threads = threads;
  else if (auto env = env_threads()) c.threads = *env;
  else c.threads = c.command == "hunt" ? nodehunt::default_thread_count() : 1;

  nodehunt::Report report;
  try {
    report = nodehunt::run(c);
  } catch (const nodehunt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == nodehunt::Errc::Usage ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }

  const std::string body = json ? report.json(!no_timings) : report.text(!no_timings);
  if (output.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    out << body;
    if (!body.empty() && body.back() != '\n') out << '\n';
  }

  if (const auto* f = report.first_failure()) {
    std::cerr << "FAIL " << f->id << ": " << f->check << "; expected " << f->expected << ", got " << f->actual << "\n";
    return kExitFail;
  }
  return kExitPass;
}
