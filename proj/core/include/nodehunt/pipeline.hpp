#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nodehunt {

struct Verdict {
  std::string id;
  std::string check;  ///< operation and fixture value checked
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Structured run report. Everything except the timings is a pure function of the config.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::vector<std::string>>> sections;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool passed() const;
  const Verdict* first_failure() const;
  std::vector<std::string>& section(const std::string& name);
  void verdict(std::string id, std::string check, std::string expected, std::string actual);

  std::string text(bool with_timings = true) const;
  std::string json(bool with_timings = true) const;
};

struct RunConfig {
  /// hunt, interpolate, lift, classify, lattice-search, lattice-solve,
  /// cover-verify, cover-invariants, fixture
  std::string command;

  std::string family_path;
  std::string points_path;
  std::string residues_path;
  std::string lattice_path;
  std::string cover_path;
  std::string template_path;
  std::string constraints_path;
  std::string poly;  ///< classify: polynomial text
  std::string point;  ///< classify: optional projective point "(a:b:c)"
  std::string fixture_name;

  std::string field;  ///< "p" or "p,k"; classify also accepts "Q"
  std::optional<int> nvars;
  std::optional<int> nparams;
  int degree = 2;
  bool homogeneous = false;
  std::optional<int> slack;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'000'000;
  bool classify = false;
  bool solve_at_point = false;
  int degree_cap = 8;
  unsigned threads = 1;
  bool pairs = false;
  std::optional<std::size_t> tuples;
  std::string bounds;
};

/// Dispatches one subcommand. Module errors propagate as nodehunt::Error with
/// the offending file named in the message.
Report run(const RunConfig& config);

/// Built-in verification of the two-node, two-A3 Godeaux data and its
/// Z/2 x Z/4 cover; no files or network.
Report fixture_godeaux();

/// Infers (nvars, nparams) from the highest x<i> and p<j> indices in the text.
std::pair<int, int> infer_arity(const std::string& text);

}  // namespace nodehunt
