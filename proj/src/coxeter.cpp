#include "rcq/coxeter.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rcq/error.hpp"
#include "rcq/graph.hpp"

namespace rcq {

CoxGroup::CoxGroup(StructureMonoid const& M, std::uint64_t budget)
    : _M(M), _d(M.class_number()) {
  init(budget);
}

CoxGroup::CoxGroup(StructureMonoid const& M, std::uint64_t d, std::uint64_t budget)
    : _M(M), _d(d) {
  if (!has_class(M.table(), d)) {
    throw PropertyError("table is not of class " + std::to_string(d), {});
  }
  init(budget);
}

void CoxGroup::init(std::uint64_t budget) {
  std::size_t n = rank();
  _order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(_order, _d, &_order) || _order > budget) {
      throw BudgetError("quotient of order d^n with d = " + std::to_string(_d)
                        + ", n = " + std::to_string(n) + " exceeds the budget of "
                        + std::to_string(budget));
    }
  }
  // psi(x s) = L_s o psi(x), propagated from the identity.
  constexpr Elem unset = ~Elem(0);
  _psi.assign(_order * n, unset);
  for (Elem t = 0; t < n; ++t) {
    _psi[t] = t;
  }
  std::deque<std::uint64_t> queue{0};
  std::uint64_t reached = 1;
  std::vector<Elem> inv(n), next(n);
  while (!queue.empty()) {
    std::uint64_t i = queue.front();
    queue.pop_front();
    Residues x = element(i);
    Elem const* p = &_psi[i * n];
    for (Elem t = 0; t < n; ++t) {
      inv[p[t]] = t;
    }
    for (Elem s = 0; s < n; ++s) {
      Residues y = x;
      Elem r = inv[s];
      y[r] = static_cast<std::uint32_t>((y[r] + 1) % _d);
      for (Elem t = 0; t < n; ++t) {
        next[t] = _M.table().op(s, p[t]);
      }
      std::uint64_t j = index(y);
      Elem* q = &_psi[j * n];
      if (q[0] == unset) {
        std::copy(next.begin(), next.end(), q);
        queue.push_back(j);
        ++reached;
      } else if (!std::equal(next.begin(), next.end(), q)) {
        throw InconsistencyError("psi is not well defined modulo the class");
      }
    }
  }
  _generated = reached == _order;
  if (!_generated) {
    for (std::uint64_t i = 0; i < _order; ++i) {
      if (_psi[i * n] == unset) {
        Residues x = element(i);
        Perm p = _M.psi_of(Coords(x.begin(), x.end()));
        std::copy(p.images().begin(), p.images().end(), _psi.begin() + i * n);
      }
    }
  }
}

std::uint64_t CoxGroup::index(Residues const& x) const {
  if (x.size() != rank()) {
    throw StructuralError("residue vector has the wrong size");
  }
  std::uint64_t idx = 0;
  for (std::size_t i = rank(); i-- > 0;) {
    if (x[i] >= _d) {
      throw StructuralError("residue out of range");
    }
    idx = idx * _d + x[i];
  }
  return idx;
}

Residues CoxGroup::element(std::uint64_t idx) const {
  if (idx >= _order) {
    throw StructuralError("element index out of range");
  }
  Residues x(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    x[i] = static_cast<std::uint32_t>(idx % _d);
    idx /= _d;
  }
  return x;
}

Residues CoxGroup::identity() const {
  return Residues(rank(), 0);
}

Residues CoxGroup::generator(Elem s) const {
  Residues x(rank(), 0);
  x.at(s) = static_cast<std::uint32_t>(1 % _d);
  return x;
}

Perm CoxGroup::psi(Residues const& x) const {
  std::uint64_t i = index(x);
  return Perm(std::vector<Elem>(_psi.begin() + i * rank(), _psi.begin() + (i + 1) * rank()));
}

Residues CoxGroup::multiply(Residues const& x, Residues const& y) const {
  Elem const* p = &_psi[index(x) * rank()];
  Residues z(rank());
  for (Elem t = 0; t < rank(); ++t) {
    z[t] = static_cast<std::uint32_t>((x[t] + y.at(p[t])) % _d);
  }
  return z;
}

Residues CoxGroup::inverse(Residues const& x) const {
  Elem const* p = &_psi[index(x) * rank()];
  Residues z(rank());
  for (Elem t = 0; t < rank(); ++t) {
    z[p[t]] = static_cast<std::uint32_t>((_d - x[t]) % _d);
  }
  return z;
}

Residues CoxGroup::power(Residues const& x, std::uint64_t k) const {
  Residues r = identity();
  for (std::uint64_t i = 0; i < k; ++i) {
    r = multiply(r, x);
  }
  return r;
}

Residues CoxGroup::project(GroupElement const& g) const {
  auto d = static_cast<std::int64_t>(_d);
  Residues x(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    x[i] = static_cast<std::uint32_t>(((g.coords()[i] % d) + d) % d);
  }
  return x;
}

Residues CoxGroup::project(MonoidElement const& g) const {
  return project(_M.to_group(g));
}

MonoidElement CoxGroup::section(Residues const& x) const {
  index(x);
  return _M.element(Coords(x.begin(), x.end()));
}

std::uint64_t CoxGroup::norm(Residues const& x) const {
  return std::accumulate(x.begin(), x.end(), std::uint64_t(0));
}

std::optional<Residues> CoxGroup::germ_product(Residues const& x, Residues const& y) const {
  Residues z = multiply(x, y);
  if (norm(x) + norm(y) == norm(z)) {
    return z;
  }
  return std::nullopt;
}

bool CoxGroup::twisted_sum_in_box(Residues const& x, Residues const& y) const {
  Elem const* p = &_psi[index(x) * rank()];
  for (Elem t = 0; t < rank(); ++t) {
    if (x[t] + y.at(p[t]) >= _d) {
      return false;
    }
  }
  return true;
}

std::uint64_t CoxGroup::element_order(Residues const& x) const {
  Residues r = x;
  std::uint64_t k = 1;
  while (norm(r) != 0) {
    r = multiply(r, x);
    ++k;
  }
  return k;
}

std::uint64_t CoxGroup::exponent() const {
  std::uint64_t e = 1;
  for (std::uint64_t i = 0; i < _order; ++i) {
    e = lcm_u64(e, element_order(element(i)));
  }
  return e;
}

IybQuotient CoxGroup::iyb_quotient() const {
  IybQuotient q;
  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(rank());
  seen.insert(id);
  queue.push_back(id);
  for (Elem s = 0; s < rank(); ++s) {
    q.generators.push_back(_M.generator(s).psi().inverse());
  }
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (auto const& g : q.generators) {
      Perm r = compose(p, g);
      if (seen.insert(r).second) {
        queue.push_back(r);
      }
    }
  }
  std::set<Perm> image;
  for (std::uint64_t i = 0; i < _order; ++i) {
    image.insert(psi(element(i)).inverse());
  }
  if (image != seen) {
    throw InconsistencyError("image of psi^-1 differs from the group its generators span");
  }
  q.elements.assign(seen.begin(), seen.end());
  q.order = q.elements.size();
  return q;
}

namespace {

std::uint64_t ipow(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n;
  }
  return r;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

GermReport CoxGroup::verify_germ_presentation(std::size_t max_length,
                                              std::uint64_t pair_limit) const {
  if (_d < 2) {
    throw StructuralError("germ presentation needs a class of at least 2");
  }
  GermReport rep;
  std::size_t n = rank();
  OpTable const& T = _M.table();

  auto check_pair = [&](Residues const& x, Residues const& y) {
    ++rep.pairs_checked;
    bool defined = germ_product(x, y).has_value();
    bool sections = _M.multiply(section(x), section(y)) == section(multiply(x, y));
    if (defined != sections && rep.section_multiplicative) {
      rep.section_multiplicative = false;
      rep.failures.push_back("section product mismatch at " + format(x) + " , " + format(y));
    }
  };
  if (_order <= pair_limit / _order) {
    for (std::uint64_t i = 0; i < _order; ++i) {
      for (std::uint64_t j = 0; j < _order; ++j) {
        check_pair(element(i), element(j));
      }
    }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, _order - 1);
    for (std::uint64_t k = 0; k < pair_limit; ++k) {
      check_pair(element(pick(rng)), element(pick(rng)));
    }
  }

  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (s == t) {
        continue;
      }
      auto l = germ_product(generator(s), generator(T.op(s, t)));
      auto r = germ_product(generator(t), generator(T.op(t, s)));
      if (!l || !r || *l != *r) {
        rep.relations_are_germ_instances = false;
        rep.failures.push_back("relation " + T.name(s) + " " + T.name(T.op(s, t)) + " = "
                               + T.name(t) + " " + T.name(T.op(t, s))
                               + " is not a germ instance");
      }
    }
  }

  LabeledGraph cayley = germ_cayley_graph(*this);
  LabeledGraph lattice = divisor_lattice(_M, _d - 1, _order);
  if (cayley.vertex_coords != lattice.vertex_coords || cayley.edges != lattice.edges) {
    rep.cayley_matches_divisors = false;
    rep.failures.push_back("germ Cayley graph differs from the divisor lattice");
  }

  // Words over S are identified when a factor is replaced by another factor
  // with the same defined germ evaluation.
  auto germ_eval = [&](Word const& w, std::size_t from, std::size_t to) -> std::optional<Residues> {
    Residues x = identity();
    for (std::size_t i = from; i < to; ++i) {
      auto y = germ_product(x, generator(w[i]));
      if (!y) {
        return std::nullopt;
      }
      x = *y;
    }
    return x;
  };
  for (std::size_t len = 1; len <= max_length && rep.growth_matches; ++len) {
    std::uint64_t total = ipow(n, len);
    if (total > 1'000'000) {
      rep.failures.push_back("growth check stopped at length " + std::to_string(len - 1));
      break;
    }
    std::vector<std::map<std::uint64_t, std::vector<Word>>> buckets(len + 1);
    for (std::size_t m = 2; m <= len; ++m) {
      for (std::uint64_t idx = 0; idx < ipow(n, m); ++idx) {
        Word u(m);
        std::uint64_t r = idx;
        for (std::size_t i = m; i-- > 0;) {
          u[i] = static_cast<Elem>(r % n);
          r /= n;
        }
        if (auto v = germ_eval(u, 0, m)) {
          buckets[m][index(*v)].push_back(u);
        }
      }
    }
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto word_index = [&](Word const& w) {
      std::uint64_t idx = 0;
      for (Elem x : w) {
        idx = idx * n + x;
      }
      return idx;
    };
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Word w(len);
      std::uint64_t r = idx;
      for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Elem>(r % n);
        r /= n;
      }
      for (std::size_t from = 0; from < len; ++from) {
        for (std::size_t to = from + 2; to <= len; ++to) {
          auto v = germ_eval(w, from, to);
          if (!v) {
            continue;
          }
          for (auto const& alt : buckets[to - from][index(*v)]) {
            Word w2 = w;
            std::copy(alt.begin(), alt.end(), w2.begin() + static_cast<std::ptrdiff_t>(from));
            parent[find_root(parent, idx)] = find_root(parent, word_index(w2));
          }
        }
      }
    }
    std::map<std::size_t, Coords> class_coords;
    std::map<Coords, std::size_t> coords_class;
    for (std::uint64_t idx = 0; idx < total && rep.growth_matches; ++idx) {
      Word w(len);
      std::uint64_t r = idx;
      for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Elem>(r % n);
        r /= n;
      }
      Coords c = _M.element_from_word(w).coords();
      std::size_t root = find_root(parent, idx);
      auto [a, fa] = class_coords.emplace(root, c);
      auto [b, fb] = coords_class.emplace(c, root);
      if (a->second != c || b->second != root) {
        rep.growth_matches = false;
        rep.failures.push_back("germ-presented monoid differs from the structure monoid at length "
                               + std::to_string(len));
      }
    }
  }
  return rep;
}

ModularReport CoxGroup::check_modular_istructure() const {
  ModularReport rep;
  rep.generated_by_atoms = _generated;
  std::size_t n = rank();
  for (std::uint64_t i = 0; i < _order; ++i) {
    Residues x = element(i);
    Coords c(x.begin(), x.end());
    Perm base = _M.psi_of(c);
    if (base != psi(x)) {
      rep.psi_well_defined = false;
    }
    for (Elem s = 0; s < n && rep.psi_well_defined; ++s) {
      Coords c2 = c;
      c2[s] += static_cast<std::int64_t>(_d);
      if (_M.psi_of(c2) != base) {
        rep.psi_well_defined = false;
      }
    }
    // {x + e_s} against {pi(sigma(x) s)} with the product taken in the monoid.
    std::set<Residues> shifted, products;
    MonoidElement sx = section(x);
    for (Elem s = 0; s < n; ++s) {
      Residues y = x;
      y[s] = static_cast<std::uint32_t>((y[s] + 1) % _d);
      shifted.insert(y);
      products.insert(project(_M.multiply(sx, _M.generator(s))));
    }
    if (shifted != products) {
      rep.istructure = false;
    }
  }
  return rep;
}

WreathReport CoxGroup::wreath_embedding_check(std::uint64_t pair_limit, std::uint64_t seed) const {
  WreathReport rep;
  std::size_t n = rank();
  // iota(x) = (x, psi(x)^-1) with psi folded from coordinates.
  auto iota = [&](Residues const& x) {
    return std::pair{x, _M.psi_of(Coords(x.begin(), x.end())).inverse()};
  };
  std::set<std::pair<Residues, Perm>> images;
  for (std::uint64_t i = 0; i < _order; ++i) {
    images.insert(iota(element(i)));
  }
  rep.injective = images.size() == _order;

  auto check = [&](Residues const& x, Residues const& y) {
    ++rep.pairs_checked;
    auto [a, alpha] = iota(x);
    auto [b, beta] = iota(y);
    // (a, alpha)(b, beta) = (a + alpha[b], alpha o beta)
    Residues sum(n);
    for (Elem u = 0; u < n; ++u) {
      sum[alpha(u)] = b[u];
    }
    for (Elem u = 0; u < n; ++u) {
      sum[u] = static_cast<std::uint32_t>((a[u] + sum[u]) % _d);
    }
    auto expect = iota(multiply(x, y));
    if (expect.first != sum || expect.second != compose(alpha, beta)) {
      rep.homomorphism = false;
    }
  };
  if (_order <= pair_limit / _order) {
    for (std::uint64_t i = 0; i < _order; ++i) {
      for (std::uint64_t j = 0; j < _order; ++j) {
        check(element(i), element(j));
      }
    }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, _order - 1);
    for (std::uint64_t k = 0; k < pair_limit; ++k) {
      check(element(pick(rng)), element(pick(rng)));
    }
  }
  return rep;
}

std::string CoxGroup::format(Residues const& x) const {
  return _M.format(section(x));
}

}  // namespace rcq
