#include "group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qrz {

namespace {

std::string power_name(std::string_view base, std::size_t k) {
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

std::string invalid_position(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<Element> table, std::vector<std::string> names,
                                    std::string spec) {
  const std::size_t n = names.size();
  if (n == 0) fail(ErrorCode::invalid_group, "group must have at least one element");
  if (table.size() != n * n)
    fail(ErrorCode::invalid_group, "table has " + std::to_string(table.size()) +
                                       " entries, expected " + std::to_string(n * n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      fail(ErrorCode::invalid_group, "table entry at " + invalid_position(i / n, i % n) +
                                         " is out of range");
  {
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (nm.empty()) fail(ErrorCode::invalid_group, "element names must be non-empty");
      if (!seen.insert(nm).second) fail(ErrorCode::invalid_group, "duplicate element name '" + nm + "'");
    }
  }

  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      fail(ErrorCode::invalid_group, "identity axiom violated: element 0 is not a two-sided identity");

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]) fail(ErrorCode::invalid_group, "Latin square violated: row " + std::to_string(a) + " repeats an element");
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(b, a)]) fail(ErrorCode::invalid_group, "Latin square violated: column " + std::to_string(a) + " repeats an element");
      seen[at(b, a)] = 1;
    }
  }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      fail(ErrorCode::invalid_group, "associativity violated at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 10000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.n_ = n;
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (at(a, b) == kIdentity) g.inverse_[a] = static_cast<Element>(b);
    if (at(g.inverse_[a], a) != kIdentity)
      fail(ErrorCode::invalid_group, "inverse axiom violated for element " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n && g.abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a)) {
        g.abelian_ = false;
        break;
      }
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.spec_ = std::move(spec);
  return g;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  if (name == "e" || name == "1") return kIdentity;
  return std::nullopt;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != kIdentity; x = mul(a, x)) ++k;
  return k;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "cyclic:" + std::to_string(n);
    case Kind::symmetric: return "symmetric:" + std::to_string(n);
    case Kind::dihedral: return "dihedral:" + std::to_string(n);
    case Kind::quaternion: return "quaternion";
    case Kind::product: return "product(" + left->to_string() + "," + right->to_string() + ")";
    case Kind::table: return "table:" + path;
  }
  return {};
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) fail(ErrorCode::precondition, "cyclic group order must be at least 1");
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : power_name("g", a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup::from_table(std::move(table), std::move(names), "cyclic:" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n < 2 || n > 5) fail(ErrorCode::precondition, "symmetric group degree must be in 2..5");
  using Perm = std::vector<int>;
  struct Entry {
    Perm perm;
    std::size_t moved;
    std::string digits;
    std::string name;
  };
  std::vector<Entry> entries;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    Entry e{p, 0, {}, {}};
    std::vector<char> visited(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (visited[i] || p[i] == static_cast<int>(i)) continue;
      e.name += '(';
      for (std::size_t j = i; !visited[j]; j = p[j]) {
        visited[j] = 1;
        ++e.moved;
        e.digits += static_cast<char>('1' + j);
        e.name += static_cast<char>('1' + j);
      }
      e.name += ')';
    }
    if (e.moved == 0) e.name = "e";
    entries.push_back(std::move(e));
  } while (std::next_permutation(p.begin(), p.end()));

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.moved != b.moved) return a.moved < b.moved;
    if (a.digits != b.digits) return a.digits < b.digits;
    return a.name < b.name;
  });

  const std::size_t order = entries.size();
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < order; ++i) index.emplace(entries[i].perm, static_cast<Element>(i));

  std::vector<Element> table(order * order);
  Perm composed(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      // (ab)(x) = a(b(x)): b acts first.
      for (std::size_t x = 0; x < n; ++x) composed[x] = entries[a].perm[entries[b].perm[x]];
      table[a * order + b] = index.at(composed);
    }
  std::vector<std::string> names;
  names.reserve(order);
  for (auto& e : entries) names.push_back(std::move(e.name));
  return FiniteGroup::from_table(std::move(table), std::move(names), "symmetric:" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 2) fail(ErrorCode::precondition, "dihedral group parameter must be at least 2");
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    std::string rot = a == 0 ? "" : power_name("r", a);
    names[x] = b == 0 ? (a == 0 ? "e" : rot) : rot + "s";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
      const std::size_t rot_part = b == 0 ? (a + c) % n : (a + n - c) % n;
      table[x * order + y] = static_cast<Element>(((b + d) % 2) * n + rot_part);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(names), "dihedral:" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // Index = 2 * basis + sign, basis in {1, i, j, k}, sign bit set for negatives.
  // unit[u][v] = {sign, basis} of the product of basis units u*v.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const auto [sign, basis] = unit[x / 2][y / 2];
      table[x * 8 + y] = static_cast<Element>(2 * basis + ((sign + x % 2 + y % 2) % 2));
    }
  return FiniteGroup::from_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                                 "quaternion");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), order = na * nb;
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = "(" + a.name(static_cast<Element>(x / nb)) + "," + b.name(static_cast<Element>(x % nb)) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const Element left = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element right = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * order + y] = static_cast<Element>(left * nb + right);
    }
  }
  std::string spec;
  if (!a.spec().empty() && !b.spec().empty()) spec = "product(" + a.spec() + "," + b.spec() + ")";
  return FiniteGroup::from_table(std::move(table), std::move(names), std::move(spec));
}

namespace {

FiniteGroup load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open group table '" + path + "'");
  std::size_t n = 0;
  if (!(in >> n) || n == 0) fail(ErrorCode::parse, "group table '" + path + "': first line must be a positive order");
  std::vector<Element> table(n * n);
  for (auto& entry : table) {
    long long v = -1;
    if (!(in >> v)) fail(ErrorCode::parse, "group table '" + path + "': expected " + std::to_string(n * n) + " table entries");
    if (v < 0 || static_cast<unsigned long long>(v) >= n)
      fail(ErrorCode::invalid_group, "group table '" + path + "': entry " + std::to_string(v) + " out of range");
    entry = static_cast<Element>(v);
  }
  std::vector<std::string> names(n);
  for (auto& name : names)
    if (!(in >> name)) fail(ErrorCode::parse, "group table '" + path + "': expected " + std::to_string(n) + " element names");
  for (const auto& name : names)
    if (name.find('*') != std::string::npos)
      fail(ErrorCode::parse, "group table '" + path + "': element name '" + name + "' contains '*'");
  return FiniteGroup::from_table(std::move(table), std::move(names), "table:" + path);
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return cyclic_group(spec.n);
    case GroupSpec::Kind::symmetric: return symmetric_group(spec.n);
    case GroupSpec::Kind::dihedral: return dihedral_group(spec.n);
    case GroupSpec::Kind::quaternion: return quaternion_group();
    case GroupSpec::Kind::product: return direct_product(build_group(*spec.left), build_group(*spec.right));
    case GroupSpec::Kind::table: return load_table_file(spec.path);
  }
  fail(ErrorCode::internal, "unknown group kind");
}

Subgroup Subgroup::from_members(const FiniteGroup& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h;
  h.mask_.assign(g.order(), false);
  for (Element a : members) {
    if (a >= g.order()) fail(ErrorCode::precondition, "subgroup member out of range");
    h.mask_[a] = true;
  }
  if (members.empty() || members.front() != kIdentity)
    fail(ErrorCode::precondition, "subgroup must contain the identity");
  for (Element a : members) {
    if (!h.mask_[g.inv(a)]) fail(ErrorCode::precondition, "subgroup is not closed under inverses");
    for (Element b : members)
      if (!h.mask_[g.mul(a, b)]) fail(ErrorCode::precondition, "subgroup is not closed under products");
  }
  if (g.order() % members.size() != 0)
    fail(ErrorCode::internal, "subgroup order does not divide group order");
  h.members_ = std::move(members);
  return h;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> found{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element s : gens) {
      if (s >= g.order()) fail(ErrorCode::precondition, "generator out of range");
      const Element y = g.mul(s, found[i]);
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  return Subgroup::from_members(g, std::move(found));
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup::from_members(g, std::move(all));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> known;
  std::vector<std::vector<Element>> cyclic;
  for (Element a = 0; a < g.order(); ++a) {
    const Element gen[] = {a};
    auto h = subgroup_generated(g, gen);
    std::vector<Element> m(h.members().begin(), h.members().end());
    if (known.insert(m).second) cyclic.push_back(std::move(m));
  }
  // Every subgroup is a join of cyclic ones; close the set under joins.
  std::vector<std::vector<Element>> frontier(known.begin(), known.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        std::vector<Element> gens = h;
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = subgroup_generated(g, gens);
        std::vector<Element> m(j.members().begin(), j.members().end());
        if (known.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& m : known) out.push_back(Subgroup::from_members(g, m));
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

CosetPartition right_cosets(const FiniteGroup& g, const Subgroup& h) {
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  CosetPartition part;
  part.coset_of.assign(g.order(), unassigned);
  for (Element x = 0; x < g.order(); ++x) {
    if (part.coset_of[x] != unassigned) continue;
    std::vector<Element> coset;
    for (Element m : h.members()) {
      const Element y = g.mul(m, x);
      part.coset_of[y] = part.cosets.size();
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    part.representatives.push_back(x);
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t m = h.order();
  std::vector<std::optional<Element>> local(g.order());
  for (std::size_t i = 0; i < m; ++i) local[h.members()[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = g.name(h.members()[i]);
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = *local[g.mul(h.members()[i], h.members()[j])];
  }
  return EmbeddedGroup{FiniteGroup::from_table(std::move(table), std::move(names)),
                       std::vector<Element>(h.members().begin(), h.members().end()), std::move(local)};
}

AbelianizationMap abelianization(const FiniteGroup& g) {
  std::vector<Element> commutators;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      commutators.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  Subgroup derived = subgroup_generated(g, commutators);
  CosetPartition cosets = right_cosets(g, derived);

  const std::size_t q = cosets.cosets.size();
  std::vector<Element> table(q * q);
  std::vector<std::string> names(q);
  for (std::size_t i = 0; i < q; ++i) {
    names[i] = "[" + g.name(cosets.representatives[i]) + "]";
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = static_cast<Element>(
          cosets.coset_of[g.mul(cosets.representatives[i], cosets.representatives[j])]);
  }
  std::vector<Element> projection(g.order());
  for (Element a = 0; a < g.order(); ++a) projection[a] = static_cast<Element>(cosets.coset_of[a]);
  return AbelianizationMap{FiniteGroup::from_table(std::move(table), std::move(names)),
                           std::move(projection), std::move(derived)};
}

}  // namespace qrz
