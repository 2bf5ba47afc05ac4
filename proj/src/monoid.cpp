#include "rcq/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "rcq/calculus.hpp"
#include "rcq/error.hpp"

namespace rcq {

std::int64_t MonoidElement::length() const noexcept {
  return std::accumulate(_coords.begin(), _coords.end(), std::int64_t(0));
}

bool GroupElement::is_identity() const noexcept {
  return std::all_of(_coords.begin(), _coords.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

// (sigma[v])_u = v_{sigma^-1(u)}: the entry at t moves to sigma(t).
Coords permute_coords(Perm const& sigma, Coords const& v) {
  Coords out(v.size());
  for (Elem t = 0; t < v.size(); ++t) {
    out[sigma(t)] = v[t];
  }
  return out;
}

OpTable prepared(OpTable const& table) {
  require_bijective_rc_quasigroup(table);
  OpTable derived = derive_left_operation(table.without_lop());
  if (table.has_lop() && table.lop_data() != derived.lop_data()) {
    throw PropertyError("supplied left operation differs from the derived one", {});
  }
  return derived;
}

}  // namespace

StructureMonoid::StructureMonoid(OpTable const& table) : _table(prepared(table)) {
  for (Elem s = 0; s < rank(); ++s) {
    _left.push_back(_table.left_translation(s));
  }
}

StructureMonoid::~StructureMonoid() = default;

void StructureMonoid::check_coords(Coords const& c, bool nonnegative) const {
  if (c.size() != rank()) {
    throw StructuralError("coordinate vector has " + std::to_string(c.size())
                          + " entries, expected " + std::to_string(rank()));
  }
  if (nonnegative) {
    for (auto x : c) {
      if (x < 0) {
        throw StructuralError("monoid coordinates must be nonnegative");
      }
    }
  }
}

Coords StructureMonoid::twisted_sum(Coords const& a, Perm const& psi_a, Coords const& b) const {
  Coords out(a.size());
  for (Elem t = 0; t < a.size(); ++t) {
    out[t] = a[t] + b[psi_a(t)];
  }
  return out;
}

Perm StructureMonoid::psi_of(Coords const& c) const {
  check_coords(c, true);
  Tuple prefix;
  for (Elem s = 0; s < rank(); ++s) {
    prefix.insert(prefix.end(), static_cast<std::size_t>(c[s]), s);
  }
  return Perm(omega_prefix_images(_table, prefix));
}

MonoidElement StructureMonoid::one() const {
  return MonoidElement(Coords(rank(), 0), Perm::identity(rank()));
}

MonoidElement StructureMonoid::generator(Elem s) const {
  if (s >= rank()) {
    throw StructuralError("generator out of range");
  }
  Coords c(rank(), 0);
  c[s] = 1;
  return MonoidElement(std::move(c), _left[s]);
}

MonoidElement StructureMonoid::element(Coords c) const {
  check_coords(c, true);
  Perm p = psi_of(c);
  return MonoidElement(std::move(c), std::move(p));
}

MonoidElement StructureMonoid::element_from_word(Word const& w) const {
  Coords c(rank(), 0);
  Perm psi = Perm::identity(rank());
  for (Elem s : w) {
    if (s >= rank()) {
      throw StructuralError("letter out of range");
    }
    ++c[psi.inverse()(s)];
    psi = compose(_left[s], psi);
  }
  return MonoidElement(std::move(c), std::move(psi));
}

Word StructureMonoid::canonical_word(MonoidElement const& g) const {
  Tuple x;
  for (Elem s = 0; s < rank(); ++s) {
    x.insert(x.end(), static_cast<std::size_t>(g.coords()[s]), s);
  }
  return pi_word(_table, x);
}

std::string StructureMonoid::format(MonoidElement const& g) const {
  return format_word(_table, canonical_word(g));
}

MonoidElement StructureMonoid::multiply(MonoidElement const& g, MonoidElement const& h) const {
  return MonoidElement(twisted_sum(g.coords(), g.psi(), h.coords()), compose(h.psi(), g.psi()));
}

MonoidElement StructureMonoid::power(MonoidElement const& g, std::uint64_t k) const {
  MonoidElement result = one();
  MonoidElement base = g;
  while (k > 0) {
    if (k & 1) {
      result = multiply(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

bool StructureMonoid::word_problem(Word const& u, Word const& v) const {
  return element_from_word(u) == element_from_word(v);
}

bool StructureMonoid::left_divides(MonoidElement const& g, MonoidElement const& h) const {
  for (Elem s = 0; s < rank(); ++s) {
    if (g.coords()[s] > h.coords()[s]) {
      return false;
    }
  }
  return true;
}

MonoidElement StructureMonoid::right_lcm(MonoidElement const& g, MonoidElement const& h) const {
  Coords c(rank());
  for (Elem s = 0; s < rank(); ++s) {
    c[s] = std::max(g.coords()[s], h.coords()[s]);
  }
  return element(std::move(c));
}

MonoidElement StructureMonoid::left_gcd(MonoidElement const& g, MonoidElement const& h) const {
  Coords c(rank());
  for (Elem s = 0; s < rank(); ++s) {
    c[s] = std::min(g.coords()[s], h.coords()[s]);
  }
  return element(std::move(c));
}

std::optional<MonoidElement> StructureMonoid::left_quotient(MonoidElement const& g,
                                                            MonoidElement const& h) const {
  if (!left_divides(g, h)) {
    return std::nullopt;
  }
  Coords diff(rank());
  for (Elem s = 0; s < rank(); ++s) {
    diff[s] = h.coords()[s] - g.coords()[s];
  }
  return element(permute_coords(g.psi(), diff));
}

MonoidElement StructureMonoid::right_complement(MonoidElement const& g,
                                                MonoidElement const& h) const {
  return *left_quotient(g, right_lcm(g, h));
}

StructureMonoid const& StructureMonoid::opposite() const {
  std::call_once(_opp_once, [this] {
    std::size_t n = rank();
    std::vector<Elem> op(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        op[x * n + y] = _table.lop(y, x);
      }
    }
    _opp = std::make_unique<StructureMonoid>(OpTable(_table.names(), std::move(op)));
  });
  return *_opp;
}

MonoidElement StructureMonoid::to_opposite(MonoidElement const& g) const {
  Word w = canonical_word(g);
  std::reverse(w.begin(), w.end());
  return opposite().element_from_word(w);
}

MonoidElement StructureMonoid::from_opposite(MonoidElement const& g) const {
  Word w = opposite().canonical_word(g);
  std::reverse(w.begin(), w.end());
  return element_from_word(w);
}

bool StructureMonoid::right_divides(MonoidElement const& g, MonoidElement const& h) const {
  return opposite().left_divides(to_opposite(g), to_opposite(h));
}

MonoidElement StructureMonoid::left_lcm(MonoidElement const& g, MonoidElement const& h) const {
  return from_opposite(opposite().right_lcm(to_opposite(g), to_opposite(h)));
}

MonoidElement StructureMonoid::right_gcd(MonoidElement const& g, MonoidElement const& h) const {
  return from_opposite(opposite().left_gcd(to_opposite(g), to_opposite(h)));
}

MonoidElement StructureMonoid::left_complement(MonoidElement const& g,
                                               MonoidElement const& h) const {
  return from_opposite(opposite().right_complement(to_opposite(g), to_opposite(h)));
}

MonoidElement StructureMonoid::delta() const {
  return element(Coords(rank(), 1));
}

MonoidElement StructureMonoid::delta_of_subset(std::vector<bool> const& subset) const {
  if (subset.size() != rank()) {
    throw StructuralError("subset indicator has the wrong size");
  }
  Coords c(rank());
  for (Elem s = 0; s < rank(); ++s) {
    c[s] = subset[s] ? 1 : 0;
  }
  return element(std::move(c));
}

std::vector<MonoidElement> StructureMonoid::garside_family() const {
  if (rank() > 20) {
    throw BudgetError("Garside family too large to list");
  }
  std::vector<MonoidElement> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << rank()); ++mask) {
    std::vector<bool> subset(rank());
    for (Elem s = 0; s < rank(); ++s) {
      subset[s] = (mask >> s) & 1;
    }
    out.push_back(delta_of_subset(subset));
  }
  return out;
}

std::vector<MonoidElement> StructureMonoid::greedy_normal_form(MonoidElement const& g) const {
  std::vector<MonoidElement> out;
  MonoidElement rest = g;
  while (rest.length() > 0) {
    Coords head(rank());
    for (Elem s = 0; s < rank(); ++s) {
      head[s] = std::min<std::int64_t>(rest.coords()[s], 1);
    }
    MonoidElement h = element(std::move(head));
    rest = *left_quotient(h, rest);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Relation> StructureMonoid::presentation() const {
  std::vector<Relation> out;
  for (Elem s = 0; s < rank(); ++s) {
    for (Elem t = s + 1; t < rank(); ++t) {
      out.push_back({{s, _table.op(s, t)}, {t, _table.op(t, s)}});
    }
  }
  return out;
}

ClassData const& StructureMonoid::class_data() const {
  std::call_once(_class_once, [this] { _class = std::make_unique<ClassData>(class_of(_table)); });
  return *_class;
}

MonoidElement StructureMonoid::frozen(Elem s, std::uint64_t q) const {
  if (s >= rank()) {
    throw StructuralError("generator out of range");
  }
  Coords c(rank(), 0);
  c[s] = static_cast<std::int64_t>(q);
  return element(std::move(c));
}

Perm StructureMonoid::psi_reduced(Coords const& c) const {
  check_coords(c, false);
  auto d = static_cast<std::int64_t>(class_number());
  Coords r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    r[i] = ((c[i] % d) + d) % d;
  }
  return psi_of(r);
}

GroupElement StructureMonoid::group_one() const {
  return GroupElement(Coords(rank(), 0), Perm::identity(rank()));
}

GroupElement StructureMonoid::to_group(MonoidElement const& g) const {
  return GroupElement(g.coords(), g.psi());
}

GroupElement StructureMonoid::group_element(Coords c) const {
  Perm p = psi_reduced(c);
  return GroupElement(std::move(c), std::move(p));
}

GroupElement StructureMonoid::group_generator(Elem s, bool inverse) const {
  GroupElement g = to_group(generator(s));
  return inverse ? group_inverse(g) : g;
}

GroupElement StructureMonoid::group_element_from_word(GroupWord const& w) const {
  GroupElement g = group_one();
  for (auto const& l : w) {
    g = group_multiply(g, group_generator(l.gen, l.inverse));
  }
  return g;
}

GroupElement StructureMonoid::group_multiply(GroupElement const& g, GroupElement const& h) const {
  return GroupElement(twisted_sum(g.coords(), g.psi(), h.coords()), compose(h.psi(), g.psi()));
}

GroupElement StructureMonoid::group_inverse(GroupElement const& g) const {
  Coords c = permute_coords(g.psi(), g.coords());
  for (auto& x : c) {
    x = -x;
  }
  return GroupElement(std::move(c), g.psi().inverse());
}

GroupElement StructureMonoid::group_power(GroupElement const& g, std::int64_t k) const {
  GroupElement base = k < 0 ? group_inverse(g) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GroupElement result = group_one();
  while (e > 0) {
    if (e & 1) {
      result = group_multiply(result, base);
    }
    e >>= 1;
    if (e > 0) {
      base = group_multiply(base, base);
    }
  }
  return result;
}

}  // namespace rcq
