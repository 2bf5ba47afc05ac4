#include "rcq/linrep.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "rcq/error.hpp"

namespace rcq {

namespace {

std::int64_t reduce(std::int64_t e, std::optional<std::uint64_t> modulus) {
  if (!modulus) {
    return e;
  }
  auto d = static_cast<std::int64_t>(*modulus);
  return ((e % d) + d) % d;
}

}  // namespace

bool MonomialMatrix::is_identity() const noexcept {
  for (auto e : exps) {
    if (e != 0) {
      return false;
    }
  }
  return perm.is_identity();
}

MonomialMatrix identity_matrix(std::size_t n, std::optional<std::uint64_t> modulus) {
  return MonomialMatrix{std::vector<std::int64_t>(n, 0), Perm::identity(n), modulus};
}

MonomialMatrix multiply(MonomialMatrix const& a, MonomialMatrix const& b) {
  if (a.dim() != b.dim() || a.modulus != b.modulus) {
    throw StructuralError("incompatible monomial matrices");
  }
  std::vector<std::int64_t> e(a.dim());
  for (Elem i = 0; i < a.dim(); ++i) {
    e[i] = reduce(a.exps[i] + b.exps[a.perm(i)], a.modulus);
  }
  return MonomialMatrix{std::move(e), compose(b.perm, a.perm), a.modulus};
}

MonomialMatrix theta(MonoidElement const& g) {
  return MonomialMatrix{g.coords(), g.psi(), std::nullopt};
}

MonomialMatrix theta(GroupElement const& g) {
  return MonomialMatrix{g.coords(), g.psi(), std::nullopt};
}

MonomialMatrix theta_generator(StructureMonoid const& M, Elem s) {
  return theta(M.generator(s));
}

MonomialMatrix specialize(MonomialMatrix const& m, std::uint64_t d) {
  if (d == 0) {
    throw StructuralError("modulus must be positive");
  }
  MonomialMatrix r{m.exps, m.perm, d};
  for (auto& e : r.exps) {
    e = reduce(e, d);
  }
  return r;
}

std::uint64_t matrix_order(MonomialMatrix const& m) {
  if (!m.modulus) {
    throw StructuralError("matrix order needs a specialized matrix");
  }
  // m^k is diagonal for k the permutation order, so the order divides k d.
  std::uint64_t bound = m.perm.order() * *m.modulus;
  MonomialMatrix p = m;
  for (std::uint64_t j = 1; j <= bound; ++j) {
    if (p.is_identity()) {
      return j;
    }
    p = multiply(p, m);
  }
  throw InconsistencyError("matrix order search failed");
}

bool is_unitary_specialized(MonomialMatrix const& m) {
  if (!m.modulus || m.perm.degree() != m.dim() || !is_permutation(m.perm.images())) {
    return false;
  }
  for (auto e : m.exps) {
    if (e < 0 || static_cast<std::uint64_t>(e) >= *m.modulus) {
      return false;
    }
  }
  return true;
}

std::string render(MonomialMatrix const& m, std::string const& var) {
  std::ostringstream out;
  for (Elem i = 0; i < m.dim(); ++i) {
    out << '[';
    for (Elem j = 0; j < m.dim(); ++j) {
      if (j > 0) {
        out << ' ';
      }
      if (m.perm(i) != j) {
        out << '0';
      } else if (m.exps[i] == 0) {
        out << '1';
      } else if (m.exps[i] == 1) {
        out << var;
      } else {
        out << var << '^' << m.exps[i];
      }
    }
    out << "]\n";
  }
  return out.str();
}

bool relations_respected(StructureMonoid const& M) {
  OpTable const& T = M.table();
  for (Elem s = 0; s < M.rank(); ++s) {
    for (Elem t = 0; t < M.rank(); ++t) {
      if (s == t) {
        continue;
      }
      auto l = multiply(theta_generator(M, s), theta_generator(M, T.op(s, t)));
      auto r = multiply(theta_generator(M, t), theta_generator(M, T.op(t, s)));
      if (l != r) {
        return false;
      }
    }
  }
  return true;
}

FaithfulnessReport check_specialized_faithfulness(CoxGroup const& G) {
  StructureMonoid const& M = G.monoid();
  FaithfulnessReport rep;
  rep.expected = G.order();
  std::vector<MonomialMatrix> gens;
  for (Elem s = 0; s < M.rank(); ++s) {
    gens.push_back(specialize(theta_generator(M, s), G.d()));
  }
  std::set<MonomialMatrix> seen{identity_matrix(M.rank(), G.d())};
  std::deque<MonomialMatrix> queue{identity_matrix(M.rank(), G.d())};
  while (!queue.empty()) {
    MonomialMatrix a = queue.front();
    queue.pop_front();
    for (auto const& g : gens) {
      MonomialMatrix b = multiply(a, g);
      if (seen.insert(b).second) {
        if (seen.size() > rep.expected) {
          rep.generated = seen.size();
          return rep;
        }
        queue.push_back(b);
      }
    }
  }
  rep.generated = seen.size();
  std::set<MonomialMatrix> image;
  for (std::uint64_t i = 0; i < G.order(); ++i) {
    Residues x = G.element(i);
    image.insert(specialize(theta(G.section(x)), G.d()));
  }
  rep.matches_quotient = image.size() == G.order() && image == seen;
  return rep;
}

}  // namespace rcq
