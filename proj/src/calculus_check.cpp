#include "rcq/calculus_check.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>

#include "rcq/calculus.hpp"
#include "rcq/error.hpp"
#include "rcq/monoid.hpp"

namespace rcq {

char const* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed:
      return "passed";
    case CheckStatus::failed:
      return "failed";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool CalculusReport::ok() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](IdentityCheck const& c) { return c.status == CheckStatus::failed; });
}

IdentityCheck const& CalculusReport::find(std::string const& name) const {
  for (auto const& c : checks) {
    if (c.name == name) {
      return c;
    }
  }
  throw StructuralError("no check named '" + name + "'");
}

namespace {

void fail(IdentityCheck& c, std::vector<Elem> witness) {
  if (c.status != CheckStatus::failed) {
    c.status = CheckStatus::failed;
    c.witness = std::move(witness);
  }
}

void check_symmetry(OpTable const& T, Tuple const& x, IdentityCheck& c) {
  if (x.size() < 3) {
    return;
  }
  Elem base = omega(T, x);
  Tuple y = x;
  for (std::size_t i = 0; i + 2 < x.size(); ++i) {
    std::swap(y[i], y[i + 1]);
    if (omega(T, y) != base) {
      fail(c, x);
      return;
    }
    std::swap(y[i], y[i + 1]);
  }
}

void check_splitting(OpTable const& T, Tuple const& s, IdentityCheck& c) {
  Tuple whole = pi_word(T, s);
  for (std::size_t p = 1; p < s.size(); ++p) {
    std::span<Elem const> x(s.data(), p);
    auto phi = omega_prefix_images(T, x);
    Tuple rhs = pi_word(T, x);
    Tuple z;
    for (std::size_t k = p; k < s.size(); ++k) {
      z.push_back(phi[s[k]]);
    }
    Tuple tail = pi_word(T, z);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    if (rhs != whole) {
      fail(c, s);
      return;
    }
  }
}

void check_retrieval(OpTable const& T, Tuple const& s, IdentityCheck& c) {
  std::size_t n = s.size();
  Tuple st = tilde_vector(T, s);
  std::vector<Elem> pi(n);
  std::iota(pi.begin(), pi.end(), Elem(0));
  Tuple lhs_args, rhs_args;
  do {
    for (std::size_t i = 1; i <= n; ++i) {
      lhs_args.clear();
      rhs_args.clear();
      for (std::size_t k = 0; k < i; ++k) {
        lhs_args.push_back(s[pi[k]]);
      }
      for (std::size_t k = i - 1; k < n; ++k) {
        rhs_args.push_back(st[pi[k]]);
      }
      if (omega(T, lhs_args) != omega_tilde(T, rhs_args)) {
        std::vector<Elem> w = s;
        w.insert(w.end(), pi.begin(), pi.end());
        w.push_back(static_cast<Elem>(i));
        fail(c, std::move(w));
        return;
      }
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

void check_pi_tilde(StructureMonoid const& M, Tuple const& s, IdentityCheck& c) {
  OpTable const& T = M.table();
  auto lhs = M.element_from_word(pi_word(T, s));
  auto rhs = M.element_from_word(pi_tilde_word(T, tilde_vector(T, s)));
  if (!(lhs == rhs)) {
    fail(c, s);
  }
}

}  // namespace

CalculusReport check_calculus_identities(OpTable const& table, CalculusCheckOptions const& opts) {
  CalculusReport rep;
  rep.seed = opts.seed;
  IdentityCheck sym{"omega-symmetry", {}, {}, {}}, split{"splitting", {}, {}, {}};
  IdentityCheck retr{"retrieval", {}, {}, {}}, pit{"pi-pi-tilde", {}, {}, {}};

  std::unique_ptr<StructureMonoid> M;
  auto v = validate(table);
  if (v.is_bijective_rc_quasigroup()) {
    M = std::make_unique<StructureMonoid>(table.without_lop());
  } else {
    retr.status = pit.status = CheckStatus::skipped;
    retr.note = pit.note = "needs a bijective RC-quasigroup";
  }

  std::size_t n = table.size();
  std::mt19937_64 rng(opts.seed);
  auto run = [&](Tuple const& x) {
    ++rep.tuples_checked;
    check_symmetry(table, x, sym);
    check_splitting(table, x, split);
    if (M) {
      if (x.size() <= 6) {
        check_retrieval(M->table(), x, retr);
      }
      check_pi_tilde(*M, x, pit);
    }
  };

  for (std::size_t len = 1; len <= opts.max_length; ++len) {
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < len && small; ++i) {
      if (__builtin_mul_overflow(total, n, &total) || total > opts.exhaustive_limit) {
        small = false;
      }
    }
    Tuple x(len);
    if (small) {
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t i = len; i-- > 0;) {
          x[i] = static_cast<Elem>(r % n);
          r /= n;
        }
        run(x);
      }
    } else {
      rep.exhaustive = false;
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (std::size_t k = 0; k < opts.samples; ++k) {
        for (auto& e : x) {
          e = pick(rng);
        }
        run(x);
      }
    }
  }
  if (opts.max_length > 6 && M) {
    retr.note = "checked on tuples of length at most 6";
  }
  rep.checks = {sym, split, retr, pit};
  return rep;
}

}  // namespace rcq
