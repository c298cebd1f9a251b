#include "nodehunt/cover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace nodehunt {

namespace {

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::vector<mpq_class> zeros(std::size_t n) { return std::vector<mpq_class>(n, 0); }

void axpy(std::vector<mpq_class>& y, const mpq_class& a, const std::vector<mpq_class>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(Errc::Usage, "group needs at least one cyclic factor");
  for (int m : orders_) {
    if (m < 2) throw Error(Errc::Usage, "cyclic factor order " + std::to_string(m) + " is below 2");
  }
  if (order() > 1 << 16) throw Error(Errc::BudgetExceeded, "group order above 65536");
}

int AbelianGroup::order() const {
  long n = 1;
  for (int m : orders_) {
    n *= m;
    if (n > 1L << 20) return static_cast<int>(1L << 20) + 1;
  }
  return static_cast<int>(n);
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  Element e = zero();
  const int n = order();
  out.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    out.push_back(e);
    for (std::size_t j = rank(); j-- > 0;) {
      if (++e[j] < orders_[j]) break;
      e[j] = 0;
    }
  }
  return out;
}

Element AbelianGroup::normalize(Element g) const {
  if (g.size() != rank()) {
    throw Error(Errc::DimensionMismatch, "element of length " + std::to_string(g.size()) + " in a group of rank " +
                                             std::to_string(rank()));
  }
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = mod(g[j], orders_[j]);
  return g;
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element out = normalize(a);
  const Element nb = normalize(b);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + nb[j]) % orders_[j];
  return out;
}

Element AbelianGroup::scale(const Element& a, int k) const {
  Element out = normalize(a);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(static_cast<long>(out[j]) * k, orders_[j]);
  return out;
}

int AbelianGroup::element_order(const Element& g) const {
  const Element n = normalize(g);
  int o = 1;
  for (std::size_t j = 0; j < n.size(); ++j) o = std::lcm(o, orders_[j] / std::gcd(n[j], orders_[j]));
  return o;
}

Character trivial_character(const AbelianGroup& g) { return {g.zero()}; }

Character multiply(const AbelianGroup& g, const Character& a, const Character& b) { return {g.add(a.exps, b.exps)}; }

Character conjugate(const AbelianGroup& g, const Character& a) { return {g.scale(a.exps, -1)}; }

mpq_class character_value(const AbelianGroup& g, const Character& chi, const Element& x) {
  const Element c = g.normalize(chi.exps), e = g.normalize(x);
  mpq_class v = 0;
  for (std::size_t j = 0; j < c.size(); ++j) v += mpq_class(static_cast<long>(c[j]) * e[j], g.orders()[j]);
  v.canonicalize();
  const mpz_class whole = v.get_num() / v.get_den();
  v -= whole;
  return v;
}

int character_order(const AbelianGroup& g, const Character& chi) { return g.element_order(chi.exps); }

std::vector<Character> all_characters(const AbelianGroup& g) {
  std::vector<Character> out;
  for (auto& e : g.elements()) out.push_back({std::move(e)});
  return out;
}

bool generates(const AbelianGroup& g, const std::vector<Character>& chis) {
  std::set<Element> reached{g.zero()};
  std::deque<Element> queue{g.zero()};
  while (!queue.empty()) {
    const Element e = queue.front();
    queue.pop_front();
    for (const auto& c : chis) {
      Element n = g.add(e, c.exps);
      if (reached.insert(n).second) queue.push_back(std::move(n));
    }
  }
  return reached.size() == static_cast<std::size_t>(g.order());
}

std::vector<CyclicSubgroup> cyclic_subgroups(const AbelianGroup& g) {
  std::map<std::vector<Element>, CyclicSubgroup> seen;
  for (const auto& x : g.elements()) {
    const int o = g.element_order(x);
    if (o < 2) continue;
    std::vector<Element> members;
    for (int j = 0; j < o; ++j) members.push_back(g.scale(x, j));
    std::vector<Element> key = members;
    std::sort(key.begin(), key.end());
    // Elements come in lexicographic order, so the first generator seen is the least.
    seen.try_emplace(std::move(key), CyclicSubgroup{x, o, std::move(members)});
  }
  std::vector<CyclicSubgroup> out;
  for (auto& [k, h] : seen) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return a.order != b.order ? a.order < b.order : a.generator < b.generator;
  });
  return out;
}

std::vector<int> character_generators(const CyclicSubgroup& h) {
  std::vector<int> out;
  for (int s = 1; s < h.order; ++s)
    if (std::gcd(s, h.order) == 1) out.push_back(s);
  return out;
}

int exponent_from_restriction(const AbelianGroup& g, const Character& chi, const CyclicSubgroup& h, int psi) {
  const int m = h.order;
  if (m < 1 || std::gcd(mod(psi, m), m) != 1 || (m > 1 && mod(psi, m) == 0)) {
    throw Error(Errc::NotAGenerator, "psi_" + std::to_string(psi) + " does not generate the characters of a subgroup of order " +
                                         std::to_string(m));
  }
  const mpq_class v = character_value(g, chi, h.generator) * m;
  const long c = v.get_num().get_si();
  for (int r = 0; r < m; ++r)
    if (mod(static_cast<long>(r) * psi - c, m) == 0) return r;
  throw Error(Errc::InconsistentData, "no exponent matches the restriction");
}

long reduced_coeff(const AbelianGroup& g, const Character& chi, const CyclicSubgroup& h, int psi) {
  const long num = static_cast<long>(character_order(g, chi)) * exponent_from_restriction(g, chi, h, psi);
  if (num % h.order != 0) {
    throw Error(Errc::NonIntegral, "order(chi) r = " + std::to_string(num) + " is not divisible by |H| = " +
                                       std::to_string(h.order));
  }
  return num / h.order;
}

int epsilon(int r, int r_prime, int order_h) { return r + r_prime >= order_h ? 1 : 0; }

int epsilon(const AbelianGroup& g, const Character& a, const Character& b, const CyclicSubgroup& h, int psi) {
  return epsilon(exponent_from_restriction(g, a, h, psi), exponent_from_restriction(g, b, h, psi), h.order);
}

CoverData empty_cover(AbelianGroup g, GramLattice lattice) {
  CoverData d{std::move(g), {}, {}, std::move(lattice)};
  d.subgroups = cyclic_subgroups(d.group);
  for (std::size_t i = 0; i < d.subgroups.size(); ++i) {
    for (int s : character_generators(d.subgroups[i])) d.slots.push_back({i, s, zeros(d.lattice.dim())});
  }
  return d;
}

BranchSlot& slot_for(CoverData& data, const Element& generator, int psi) {
  const Element gen = data.group.normalize(generator);
  for (auto& s : data.slots) {
    if (data.subgroups[s.subgroup].generator == gen && s.psi == psi) return s;
  }
  throw Error(Errc::IndexOutOfRange, "no branch slot for subgroup " + format_element(gen) + " and psi_" +
                                         std::to_string(psi) + " (use the least generator of maximal order)");
}

std::vector<std::vector<long>> coefficient_table(const CoverData& data, const Character& chi) {
  std::vector<std::vector<long>> table(data.subgroups.size());
  for (const auto& s : data.slots) {
    table[s.subgroup].push_back(reduced_coeff(data.group, chi, data.subgroups[s.subgroup], s.psi));
  }
  return table;
}

std::string format_table(const std::vector<std::vector<long>>& table) {
  std::string out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < table[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(table[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<mpq_class> reduced_building_data(const CoverData& data, const Character& chi,
                                             const std::vector<mpq_class>& l_chi) {
  if (l_chi.size() != data.lattice.dim()) throw Error(Errc::DimensionMismatch, "L class does not match the lattice rank");
  std::vector<mpq_class> v = zeros(data.lattice.dim());
  axpy(v, character_order(data.group, chi), l_chi);
  for (const auto& s : data.slots) {
    const long c = reduced_coeff(data.group, chi, data.subgroups[s.subgroup], s.psi);
    if (c) axpy(v, -c, s.divisor);
  }
  return v;
}

std::vector<mpq_class> epsilon_correction(const CoverData& data, const Character& a, const Character& b) {
  std::vector<mpq_class> v = zeros(data.lattice.dim());
  for (const auto& s : data.slots) {
    if (epsilon(data.group, a, b, data.subgroups[s.subgroup], s.psi)) axpy(v, 1, s.divisor);
  }
  return v;
}

bool numerically_equal(const GramLattice& lattice, const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> d(a);
  axpy(d, -1, b);
  return in_radical(lattice, d);
}

Derivation derive_all_L(const CoverData& data, const std::map<Character, std::vector<mpq_class>>& generators,
                        const std::vector<std::pair<Character, std::pair<Character, Character>>>& plan) {
  const auto& g = data.group;
  std::vector<Character> gens;
  for (const auto& [chi, l] : generators) {
    if (l.size() != data.lattice.dim()) throw Error(Errc::DimensionMismatch, "generator L class has the wrong length");
    gens.push_back({g.normalize(chi.exps)});
  }
  if (!generates(g, gens)) throw Error(Errc::Usage, "the given characters do not generate the character group");

  Derivation out;
  out.L[trivial_character(g)] = zeros(data.lattice.dim());
  for (const auto& [chi, l] : generators) {
    const Character c{g.normalize(chi.exps)};
    if (c == trivial_character(g)) {
      if (!in_radical(data.lattice, l)) throw Error(Errc::InconsistentData, "trivial character needs L = 0");
      continue;
    }
    out.L[c] = l;
  }
  auto step = [&](const Character& left, const Character& right) {
    const Character target = multiply(g, left, right);
    std::vector<mpq_class> l = out.L.at(left);
    axpy(l, 1, out.L.at(right));
    auto corr = epsilon_correction(data, left, right);
    axpy(l, -1, corr);
    out.L[target] = std::move(l);
    out.steps.push_back({target, left, right, std::move(corr)});
  };
  for (const auto& [target, factors] : plan) {
    const Character t{g.normalize(target.exps)}, a{g.normalize(factors.first.exps)}, b{g.normalize(factors.second.exps)};
    if (multiply(g, a, b) != t) {
      throw Error(Errc::Usage, "plan step " + format_element(t.exps) + " is not the product of its factors");
    }
    if (!out.L.count(a) || !out.L.count(b)) {
      throw Error(Errc::Usage, "plan step " + format_element(t.exps) + " uses an underived factor");
    }
    if (out.L.count(t)) throw Error(Errc::Usage, "plan derives " + format_element(t.exps) + " twice");
    step(a, b);
  }
  // Breadth first: multiply known classes by generators.
  std::deque<Character> queue;
  for (const auto& [c, l] : out.L) queue.push_back(c);
  while (!queue.empty()) {
    const Character c = queue.front();
    queue.pop_front();
    for (const auto& gen : gens) {
      const Character t = multiply(g, c, gen);
      if (out.L.count(t)) continue;
      step(c, gen);
      queue.push_back(t);
    }
  }
  for (const auto& [a, la] : out.L) {
    for (const auto& [b, lb] : out.L) {
      if (b < a) continue;
      std::vector<mpq_class> lhs(la);
      axpy(lhs, 1, lb);
      axpy(lhs, -1, epsilon_correction(data, a, b));
      if (!numerically_equal(data.lattice, lhs, out.L.at(multiply(g, a, b)))) {
        throw Error(Errc::InconsistentData, "L_" + format_element(a.exps) + " + L_" + format_element(b.exps) +
                                                " disagrees with L_" + format_element(multiply(g, a, b).exps));
      }
      ++out.checked_pairs;
    }
  }
  return out;
}

ChiCover chi_cover(const SurfaceInvariants& base, const CoverData& data, const std::map<Character, std::vector<mpq_class>>& L) {
  const auto k = basis_class(data.lattice, "K").coeffs;
  ChiCover out;
  out.total = static_cast<long>(data.group.order()) * base.chi;
  for (const auto& [chi, l] : L) {
    if (chi == trivial_character(data.group)) continue;
    std::vector<mpq_class> kl(k);
    axpy(kl, 1, l);
    mpq_class term = pairing(data.lattice, l, kl) / 2;
    term.canonicalize();
    out.terms[chi] = term;
    out.total += term;
  }
  out.total.canonicalize();
  if (out.terms.size() + 1 != static_cast<std::size_t>(data.group.order())) {
    throw Error(Errc::InconsistentData, "chi of the cover needs L for every nontrivial character");
  }
  if (out.total.get_den() != 1) throw Error(Errc::NonIntegral, "chi of the cover is " + out.total.get_str());
  return out;
}

long pg_cover(long pg_base, const std::vector<long>& h0) {
  if (pg_base < 0) throw Error(Errc::NegativeH0, "p_g of the base is negative");
  long total = pg_base;
  for (std::size_t i = 0; i < h0.size(); ++i) {
    if (h0[i] < 0) throw Error(Errc::NegativeH0, "h0 entry " + std::to_string(i) + " is " + std::to_string(h0[i]));
    total += h0[i];
  }
  return total;
}

long cover_canonical_square(long order_g, long k2_base) { return order_g * k2_base; }

Element parse_element(std::string_view text) {
  std::string s = trim(std::string(text));
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw Error(Errc::SyntaxError, "element `" + s + "` is not of the form (a,b,...)");
  }
  s = s.substr(1, s.size() - 2);
  Element out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, "bad element entry `" + tok + "`");
    }
  }
  if (out.empty()) throw Error(Errc::SyntaxError, "empty element");
  return out;
}

std::string format_element(const Element& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string CoverSpec::label(const Character& chi) const {
  auto it = labels.find(chi);
  return it != labels.end() ? it->second : "chi" + format_element(chi.exps);
}

CoverSpec parse_cover(std::string_view text, const GramLattice& lattice) {
  CoverSpec spec;
  std::optional<AbelianGroup> group;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto need_group = [&](const std::string& where) -> const AbelianGroup& {
    if (!group) throw Error(Errc::SyntaxError, where + "`group` must come first");
    return *group;
  };
  auto character = [&](const std::string& tok) { return Character{need_group("").normalize(parse_element(tok))}; };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    const auto colon = line.find(':');
    const std::string head = trim(line.substr(kw.size(), colon == std::string::npos ? std::string::npos : colon - kw.size()));
    const std::string tail = colon == std::string::npos ? "" : trim(line.substr(colon + 1));
    try {
      if (kw == "group") {
        if (group) throw Error(Errc::SyntaxError, "group given twice");
        std::vector<int> orders;
        int m = 0;
        while (ls >> m) orders.push_back(m);
        if (!ls.eof()) throw Error(Errc::SyntaxError, "bad group order");
        group = AbelianGroup(orders);
        spec.data = empty_cover(*group, lattice);
      } else if (kw == "base") {
        long v[4];
        for (auto& x : v)
          if (!(ls >> x)) throw Error(Errc::SyntaxError, "base needs chi K2 q pg");
        spec.base = {v[0], v[1], v[2], v[3]};
      } else if (kw == "slot") {
        need_group("");
        if (colon == std::string::npos) throw Error(Errc::SyntaxError, "slot needs `: divisor`");
        std::istringstream hs(head);
        std::string gen;
        int psi = 0;
        if (!(hs >> gen >> psi)) throw Error(Errc::SyntaxError, "slot needs a generator and psi");
        slot_for(spec.data, parse_element(gen), psi).divisor = parse_divisor(tail, lattice).coeffs;
      } else if (kw == "L") {
        if (colon == std::string::npos) throw Error(Errc::SyntaxError, "L needs `: divisor`");
        spec.generators[character(head)] = parse_divisor(tail, lattice).coeffs;
      } else if (kw == "label") {
        std::string chi, name;
        if (!(ls >> chi >> name)) throw Error(Errc::SyntaxError, "label needs a character and a name");
        spec.labels[character(chi)] = name;
      } else if (kw == "h0") {
        if (colon == std::string::npos) throw Error(Errc::SyntaxError, "h0 needs `: value`");
        spec.h0[character(head)] = std::stol(tail);
      } else if (kw == "step") {
        const auto eq = line.find('='), star = line.find('*');
        if (eq == std::string::npos || star == std::string::npos || star < eq) {
          throw Error(Errc::SyntaxError, "step needs `target = left * right`");
        }
        const auto t = character(trim(line.substr(kw.size(), eq - kw.size())));
        const auto a = character(trim(line.substr(eq + 1, star - eq - 1)));
        const auto b = character(trim(line.substr(star + 1)));
        spec.plan.push_back({t, {a, b}});
      } else {
        throw Error(Errc::SyntaxError, "unknown keyword `" + kw + "`");
      }
    } catch (const Error& e) {
      throw Error(e.code(), where + std::string(e.message()));
    } catch (const std::logic_error&) {
      throw Error(Errc::SyntaxError, where + "bad number");
    }
  }
  if (!group) throw Error(Errc::SyntaxError, "cover description has no `group` line");
  if (spec.generators.empty()) throw Error(Errc::SyntaxError, "cover description has no `L` lines");
  return spec;
}

}  // namespace nodehunt
