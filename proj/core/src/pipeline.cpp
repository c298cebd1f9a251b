#include "nodehunt/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "nodehunt/cover.hpp"
#include "nodehunt/fixture.hpp"
#include "nodehunt/hunt.hpp"
#include "nodehunt/interp.hpp"
#include "nodehunt/lattice.hpp"
#include "nodehunt/lift.hpp"
#include "nodehunt/poly.hpp"

namespace nodehunt {

bool Report::passed() const { return first_failure() == nullptr; }

const Verdict* Report::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.pass) return &v;
  return nullptr;
}

std::vector<std::string>& Report::section(const std::string& name) {
  for (auto& [n, lines] : sections)
    if (n == name) return lines;
  sections.emplace_back(name, std::vector<std::string>{});
  return sections.back().second;
}

void Report::verdict(std::string id, std::string check, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  verdicts.push_back({std::move(id), std::move(check), std::move(expected), std::move(actual), pass});
}

std::string Report::text(bool with_timings) const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "[inputs]\n";
  for (const auto& [k, v] : inputs) out << "  " << k << " = " << v << "\n";
  for (const auto& [name, lines] : sections) {
    out << "[" << name << "]\n";
    for (const auto& l : lines) out << "  " << l << "\n";
  }
  out << "[verdicts]\n";
  for (const auto& v : verdicts) {
    out << "  " << (v.pass ? "PASS" : "FAIL") << " " << v.id << ": " << v.check << "; expected " << v.expected
        << ", got " << v.actual << "\n";
  }
  if (with_timings && !timings_ms.empty()) {
    out << "[timings]\n";
    for (const auto& [k, ms] : timings_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out << "  " << k << " = " << buf << " ms\n";
    }
  }
  out << "status: " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string Report::json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& [name, lines] : sections) j["sections"].push_back({{"name", name}, {"lines", lines}});
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    j["verdicts"].push_back(
        {{"id", v.id}, {"check", v.check}, {"expected", v.expected}, {"actual", v.actual}, {"pass", v.pass}});
  }
  if (with_timings) {
    j["timings_ms"] = nlohmann::ordered_json::object();
    for (const auto& [k, ms] : timings_ms) j["timings_ms"][k] = ms;
  }
  j["status"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::pair<int, int> infer_arity(const std::string& text) {
  int nv = 0, np = 0;
  static const std::regex var(R"(([xp])\s*(\d+))");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it) {
    const int idx = std::stoi((*it)[2].str());
    if ((*it)[1].str() == "x") {
      nv = std::max(nv, idx + 1);
    } else {
      np = std::max(np, idx);
    }
  }
  return {nv, np};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

std::string read_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw Error(Errc::Usage, "missing " + what + " file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Usage, "cannot open " + what + " file `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs fn and prefixes module errors with the file they came from.
template <class F>
auto with_file(const std::string& path, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.message()));
  }
}

std::string single_poly(const std::string& path, const std::string& contents) {
  const auto lines = with_file(path, [&] { return read_poly_lines(contents); });
  if (lines.size() != 1) {
    throw Error(Errc::SyntaxError, path + ": expected exactly one polynomial, found " + std::to_string(lines.size()));
  }
  return lines.front();
}

std::string first_line(const std::string& path, const std::string& contents) {
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw Error(Errc::SyntaxError, path + ": file is empty");
}

std::string fq_tuple(std::span<const Fq> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string q_tuple(const std::vector<mpq_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

const FieldCtx& field_of(const RunConfig& c) {
  if (c.field.empty()) throw Error(Errc::Usage, "--field is required");
  return parse_field_spec(c.field);
}

Report run_hunt(const RunConfig& c) {
  Report r;
  r.command = "hunt";
  const auto start = Clock::now();
  const std::string text = single_poly(c.family_path, read_file(c.family_path, "family"));
  const auto [inv, inp] = infer_arity(text);
  const int nv = c.nvars.value_or(inv), np = c.nparams.value_or(inp);
  const FieldCtx& field = field_of(c);
  const ParametricFamily fam = with_file(c.family_path, [&] { return parse_family(text, nv, np); });
  HuntConfig hc;
  hc.strategy = c.solve_at_point ? HuntStrategy::SolveAtPoint : HuntStrategy::RandomParams;
  hc.trials = c.trials;
  hc.seed = c.seed;
  hc.budget = c.budget;
  hc.classify = c.classify;
  hc.degree_cap = c.degree_cap;
  hc.threads = c.threads;
  r.inputs = {{"family", fam.str()},
              {"nvars", std::to_string(nv)},
              {"nparams", std::to_string(np)},
              {"field", c.field},
              {"strategy", c.solve_at_point ? "solve-at-point" : "random-params"},
              {"trials", std::to_string(c.trials)},
              {"seed", std::to_string(c.seed)},
              {"budget", std::to_string(c.budget)},
              {"classify", yes(c.classify)},
              {"degree_cap", std::to_string(c.degree_cap)}};
  const auto members = hunt_members(fam, field, hc);
  r.timings_ms.emplace_back("hunt", ms_since(start));

  auto& sec = r.section("members");
  std::size_t rechecked = 0, total = 0;
  for (const auto& m : members) {
    std::string pts;
    const FqPoly f = specialize(fam, m.params);
    std::vector<FqPoly> grads;
    for (int i = 0; i < fam.nvars; ++i) grads.push_back(f.partial(i));
    for (const auto& p : m.points) {
      pts += (pts.empty() ? "" : " ") + format_point(p.coords);
      ++total;
      bool ok = f.eval(p.coords).is_zero();
      for (const auto& g : grads) ok = ok && g.eval(p.coords).is_zero();
      rechecked += ok;
    }
    sec.push_back(fq_tuple(m.params) + " | " + m.signature() + " | " + pts);
  }
  r.section("summary").push_back("members: " + std::to_string(members.size()));
  r.verdict("hunt.recheck", "f and all partials vanish at every reported point", std::to_string(total),
            std::to_string(rechecked));
  return r;
}

Report run_interpolate(const RunConfig& c) {
  Report r;
  r.command = "interpolate";
  const auto start = Clock::now();
  const FieldCtx& field = field_of(c);
  const PointSet pts =
      with_file(c.points_path, [&] { return parse_points(read_file(c.points_path, "points"), field); });
  r.inputs = {{"points", std::to_string(pts.size())},
              {"field", c.field},
              {"degree", std::to_string(c.degree)},
              {"homogeneous", yes(c.homogeneous)}};
  VanishingSystem vs;
  if (c.slack) {
    r.inputs.emplace_back("slack", std::to_string(*c.slack));
    r.inputs.emplace_back("seed", std::to_string(c.seed));
    OversampleConfig oc;
    oc.slack = *c.slack;
    oc.seed = c.seed;
    vs = oversampled_system(pts, c.degree, c.homogeneous, oc);
  } else {
    vs = vanishing_system(pts, c.degree, c.homogeneous);
  }
  r.timings_ms.emplace_back("interpolate", ms_since(start));
  const auto polys = vs.polys(field);
  auto& sec = r.section("polynomials");
  for (const auto& f : polys) sec.push_back(to_string(f));
  r.section("summary").push_back("dimension: " + std::to_string(polys.size()) + " of " +
                                 std::to_string(vs.monomials.size()) + " monomials");
  std::size_t vanish = 0;
  for (const auto& f : polys) {
    bool ok = true;
    for (const auto& p : pts.points) ok = ok && f.eval(p).is_zero();
    vanish += ok;
  }
  r.verdict("interpolate.vanish", "every output polynomial vanishes on every input point", std::to_string(polys.size()),
            std::to_string(vanish));
  return r;
}

Report run_lift(const RunConfig& c) {
  Report r;
  r.command = "lift";
  const auto start = Clock::now();
  const std::string text = read_file(c.residues_path, "residues");
  const ResidueKind kind = c.pairs ? ResidueKind::Pair : c.tuples ? ResidueKind::Tuple : ResidueKind::Integer;
  const std::size_t arity = c.pairs ? 2 : c.tuples.value_or(1);
  const ResidueSystem rs = with_file(c.residues_path, [&] { return parse_residues(text, kind, arity); });
  r.inputs = {{"primes", std::to_string(rs.primes.size())},
              {"mode", c.pairs ? "pairs" : c.tuples ? "tuples " + std::to_string(*c.tuples) : "rational"}};
  auto& sec = r.section("lift");
  try {
    if (kind == ResidueKind::Integer) {
      std::vector<mpz_class> res;
      for (const auto& p : rs.payloads) res.push_back(p.at(0));
      const auto lifted = lift_rational(rs.primes, res);
      sec.push_back("value: " + format_rational(lifted.value));
      sec.push_back("modulus bits: " + std::to_string(mpz_sizeinbase(lifted.modulus.get_mpz_t(), 2)));
      if (lifted.held_out) sec.push_back("held-out prime: " + std::to_string(*lifted.held_out));
      std::size_t agree = 0;
      for (std::size_t i = 0; i < rs.primes.size(); ++i) {
        const mpz_class want = ((res[i] % rs.primes[i]) + rs.primes[i]) % rs.primes[i];
        agree += mpz_class(static_cast<unsigned long>(reduce_rational(lifted.value, rs.primes[i]))) == want;
      }
      r.verdict("lift.residues", "value reduces to the given residue mod every prime", std::to_string(rs.primes.size()),
                std::to_string(agree));
    } else if (kind == ResidueKind::Pair) {
      std::vector<std::pair<mpz_class, mpz_class>> pairs;
      for (const auto& p : rs.payloads) pairs.emplace_back(p.at(0), p.at(1));
      const auto lp = lift_unordered_pairs(rs.primes, pairs);
      sec.push_back("sum: " + format_rational(lp.e1));
      sec.push_back("product: " + format_rational(lp.e2));
      sec.push_back("quadratic: " + lp.quadratic());
      if (lp.roots) {
        sec.push_back("roots: {" + format_rational(lp.roots->first) + ", " + format_rational(lp.roots->second) + "}");
        std::size_t agree = 0;
        for (std::size_t i = 0; i < rs.primes.size(); ++i) {
          const auto p = rs.primes[i];
          auto red = [&](const mpz_class& v) { return mpz_class(((v % p) + p) % p); };
          const mpz_class a = static_cast<unsigned long>(reduce_rational(lp.roots->first, p));
          const mpz_class b = static_cast<unsigned long>(reduce_rational(lp.roots->second, p));
          const auto& [x, y] = pairs[i];
          agree += (red(x) == a && red(y) == b) || (red(x) == b && red(y) == a);
        }
        r.verdict("lift.pairs", "roots reduce to the given unordered pair mod every prime",
                  std::to_string(rs.primes.size()), std::to_string(agree));
      } else {
        sec.push_back("roots: irrational");
      }
    } else {
      const auto comps = lift_extension_tuples(rs.primes, rs.payloads);
      sec.push_back("components: " + q_tuple(comps));
      std::size_t agree = 0;
      for (std::size_t i = 0; i < rs.primes.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < comps.size(); ++j) {
          const auto p = rs.primes[i];
          const mpz_class want = ((rs.payloads[i][j] % p) + p) % p;
          ok = ok && mpz_class(static_cast<unsigned long>(reduce_rational(comps[j], p))) == want;
        }
        agree += ok;
      }
      r.verdict("lift.tuples", "components reduce to the given tuple mod every prime", std::to_string(rs.primes.size()),
                std::to_string(agree));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::HeldOutMismatch) throw;
    sec.push_back(std::string(e.message()));
    r.verdict("lift.held-out", "held-out prime agrees with the lift", "agree", "mismatch");
  }
  r.timings_ms.emplace_back("lift", ms_since(start));
  return r;
}

template <class D>
void classify_points(Report& r, const Poly<D>& f, const std::vector<std::vector<typename D::value_type>>& points,
                     int cap, const std::function<std::string(const std::vector<typename D::value_type>&)>& fmt) {
  auto& sec = r.section("points");
  std::vector<LocalType> types;
  for (const auto& p : points) {
    const LocalType t = classify(f, std::span<const typename D::value_type>(p), cap);
    types.push_back(t);
    std::string line = fmt(p) + " | " + t.label() + " | corank " + std::to_string(t.corank);
    if (t.tjurina) line += " | tau " + std::to_string(*t.tjurina);
    if (!t.diagnostic.empty()) line += " | " + t.diagnostic;
    sec.push_back(line);
  }
  r.section("summary").push_back("signature: " + signature_of(types));
}

std::vector<std::string> split_point(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == '(' || ch == ')' || ch == ':' || ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Report run_classify(const RunConfig& c) {
  Report r;
  r.command = "classify";
  const auto start = Clock::now();
  std::string text = c.poly;
  if (text.empty()) text = single_poly(c.family_path, read_file(c.family_path, "polynomial"));
  const int nv = c.nvars.value_or(infer_arity(text).first);
  r.inputs = {{"poly", text}, {"field", c.field.empty() ? "Q" : c.field}, {"degree_cap", std::to_string(c.degree_cap)}};
  if (!c.point.empty()) r.inputs.emplace_back("point", c.point);
  if (c.field.empty() || c.field == "Q" || c.field == "0") {
    if (c.point.empty()) throw Error(Errc::Usage, "classification over Q needs --point");
    const RatPoly f = to_rational(parse_family(text, nv, 0).poly);
    std::vector<mpq_class> pt;
    for (const auto& t : split_point(c.point)) {
      mpq_class v;
      if (v.set_str(t, 10) != 0 || v.get_den() == 0) throw Error(Errc::SyntaxError, "bad coordinate `" + t + "`");
      v.canonicalize();
      pt.push_back(v);
    }
    classify_points<Rationals>(r, f, {pt}, c.degree_cap, [](const std::vector<mpq_class>& p) {
      std::string s = "(";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].get_str();
      return s + ")";
    });
  } else {
    const FieldCtx& field = parse_field_spec(c.field);
    const FqPoly f = parse_poly_over(text, field, nv);
    std::vector<std::vector<Fq>> points;
    if (!c.point.empty()) {
      std::vector<Fq> pt;
      for (const auto& t : split_point(c.point)) pt.push_back(field.parse(t));
      points.push_back(std::move(pt));
    } else {
      points = singular_points(f, c.budget);
    }
    classify_points<FiniteField>(r, f, points, c.degree_cap, [](const std::vector<Fq>& p) { return format_point(p); });
  }
  r.timings_ms.emplace_back("classify", ms_since(start));
  return r;
}

GramLattice load_lattice(const RunConfig& c) {
  const std::string text = read_file(c.lattice_path, "lattice");
  return with_file(c.lattice_path, [&] { return parse_lattice(text); });
}

Report run_lattice_search(const RunConfig& c) {
  Report r;
  r.command = "lattice search";
  const auto start = Clock::now();
  const GramLattice lat = load_lattice(c);
  const PairingBounds bounds = parse_bounds(c.bounds, lat);
  SearchConfig sc;
  sc.seed = c.seed;
  sc.trials = c.trials;
  r.inputs = {{"basis", std::to_string(lat.dim())},
              {"bounds", c.bounds.empty() ? "default -2:8" : c.bounds},
              {"seed", std::to_string(c.seed)},
              {"trials", std::to_string(c.trials)}};
  const auto found = search_relations(lat, bounds, sc);
  r.timings_ms.emplace_back("search", ms_since(start));
  auto& sec = r.section("relations");
  std::size_t ok = 0, total = 0;
  for (const auto& f : found) {
    std::vector<mpq_class> v(f.pairing.begin(), f.pairing.end() - 1);
    const GramLattice ext = extend_with_curve(lat, "C", v, f.pairing.back());
    std::string p = "(";
    for (std::size_t i = 0; i < f.pairing.size(); ++i) p += (i ? "," : "") + std::to_string(f.pairing[i]);
    p += ")";
    for (const auto& rel : f.relations) {
      ++total;
      ok += in_radical(ext, rel);
      sec.push_back(p + " | " + format_divisor(rel, ext) + " = 0");
    }
  }
  r.section("summary").push_back("pairing vectors with a relation: " + std::to_string(found.size()));
  r.verdict("lattice.radical", "every reported relation pairs to zero with the extended basis", std::to_string(total),
            std::to_string(ok));
  return r;
}

Report run_lattice_solve(const RunConfig& c) {
  Report r;
  r.command = "lattice solve";
  const auto start = Clock::now();
  const GramLattice lat = load_lattice(c);
  const std::string tline = first_line(c.template_path, read_file(c.template_path, "template"));
  const RelationTemplate t = with_file(c.template_path, [&] { return parse_template(tline, lat); });
  const std::string ctext = read_file(c.constraints_path, "constraints");
  const CurveConstraints cons = with_file(c.constraints_path, [&] { return parse_constraints(ctext, lat); });
  r.inputs = {{"basis", std::to_string(lat.dim())}, {"template", tline}};
  const auto sols = solve_curve_intersections(lat, t, cons);
  r.timings_ms.emplace_back("solve", ms_since(start));
  auto& sec = r.section("solutions");
  std::size_t ok = 0;
  for (const auto& s : sols) {
    const GramLattice ext = extend_with_curve(lat, t.curve, s.pairings, s.self);
    ok += in_radical(ext, s.relation);
    std::string m = "(";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i) m += (i ? "," : "") + s.multiplicities[i].get_str();
    m += ")";
    sec.push_back("multiplicities " + m + " | " + t.curve + ".basis " + q_tuple(s.pairings) + " | " + t.curve +
                  "^2 " + s.self.get_str() + " | " + format_divisor(s.relation, ext) + " = 0");
  }
  r.section("summary").push_back("solutions: " + std::to_string(sols.size()) + (sols.size() == 1 ? " (unique)" : ""));
  r.verdict("lattice.radical", "every solution's relation lies in the extended radical", std::to_string(sols.size()),
            std::to_string(ok));
  return r;
}

Report run_cover(const RunConfig& c, bool invariants) {
  Report r;
  r.command = invariants ? "cover invariants" : "cover verify";
  const auto start = Clock::now();
  const GramLattice lat = load_lattice(c);
  const std::string text = read_file(c.cover_path, "cover");
  const CoverSpec spec = with_file(c.cover_path, [&] { return parse_cover(text, lat); });
  std::string orders;
  for (int m : spec.data.group.orders()) orders += (orders.empty() ? "" : " x ") + ("Z/" + std::to_string(m));
  r.inputs = {{"group", orders}, {"slots", std::to_string(spec.data.slots.size())}};
  const Derivation der = derive_all_L(spec.data, spec.generators, spec.plan);
  const Character one = trivial_character(spec.data.group);
  if (!invariants) {
    auto& tables = r.section("coefficient tables");
    for (const auto& [chi, l] : spec.generators) {
      tables.push_back(spec.label(chi) + " " + format_element(chi.exps) + ": " +
                       format_table(coefficient_table(spec.data, chi)));
    }
    auto& ls = r.section("L classes");
    std::size_t in_rad = 0;
    for (const auto& [chi, l] : der.L) {
      if (chi == one) continue;
      const bool ok = in_radical(lat, reduced_building_data(spec.data, chi, l));
      in_rad += ok;
      ls.push_back(spec.label(chi) + " = " + format_divisor(l, lat));
    }
    auto& steps = r.section("derivation");
    for (const auto& s : der.steps) {
      steps.push_back(spec.label(s.target) + " = " + spec.label(s.left) + " + " + spec.label(s.right) + " - (" +
                      format_divisor(s.correction, lat) + ")");
    }
    const std::size_t nontrivial = der.L.size() - 1;
    r.verdict("cover.building-data", "order(chi) L_chi - sum coeff D in the radical", std::to_string(nontrivial),
              std::to_string(in_rad));
    const std::size_t n = der.L.size();
    r.verdict("cover.paths", "derivation paths agree modulo the radical", std::to_string(n * (n + 1) / 2),
              std::to_string(der.checked_pairs));
  } else {
    const ChiCover chi = chi_cover(spec.base, spec.data, der.L);
    auto& sec = r.section("invariants");
    for (const auto& [ch, t] : chi.terms) sec.push_back("1/2 " + spec.label(ch) + "(K + " + spec.label(ch) + ") = " + t.get_str());
    sec.push_back("chi = " + chi.total.get_str());
    const long k2 = cover_canonical_square(spec.data.group.order(), spec.base.K2);
    sec.push_back("K^2 = " + std::to_string(k2) + " (assuming K pulls back from the base)");
    std::vector<long> h0;
    for (const auto& [ch, l] : der.L) {
      if (ch == one) continue;
      if (auto it = spec.h0.find(ch); it != spec.h0.end()) h0.push_back(it->second);
    }
    if (h0.size() + 1 == der.L.size()) {
      const long pg = pg_cover(spec.base.pg, h0);
      const long chi_s = chi.total.get_num().get_si();
      const long q = 1 - chi_s + pg;
      sec.push_back("p_g = " + std::to_string(pg));
      sec.push_back("q = " + std::to_string(q) + " (from chi = 1 - q + p_g)");
      sec.push_back("b2 = " + std::to_string(b2({chi_s, k2, q, pg})));
      r.verdict("cover.q", "irregularity from chi and p_g is nonnegative", "true", yes(q >= 0));
    } else {
      sec.push_back("p_g = unknown (h0 inputs missing for some characters)");
    }
  }
  r.timings_ms.emplace_back(invariants ? "invariants" : "verify", ms_since(start));
  return r;
}

}  // namespace

Report run(const RunConfig& c) {
  if (c.command == "hunt") return run_hunt(c);
  if (c.command == "interpolate") return run_interpolate(c);
  if (c.command == "lift") return run_lift(c);
  if (c.command == "classify") return run_classify(c);
  if (c.command == "lattice-search") return run_lattice_search(c);
  if (c.command == "lattice-solve") return run_lattice_solve(c);
  if (c.command == "cover-verify") return run_cover(c, false);
  if (c.command == "cover-invariants") return run_cover(c, true);
  if (c.command == "fixture") {
    if (c.fixture_name != godeaux::kFixtureName) {
      throw Error(Errc::Usage, "unknown fixture `" + c.fixture_name + "`; available: " + std::string(godeaux::kFixtureName));
    }
    return fixture_godeaux();
  }
  throw Error(Errc::Usage, "unknown command `" + c.command + "`");
}

}  // namespace nodehunt
