#include "rcq/op_table.hpp"

#include <algorithm>

#include "rcq/error.hpp"

namespace rcq {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      out.emplace_back(1, static_cast<char>('a' + i));
    } else {
      out.push_back("x" + std::to_string(i));
    }
  }
  return out;
}

namespace {

void check_names(std::vector<std::string> const& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto const& s = names[i];
    if (s.empty() || s == "1") {
      throw StructuralError("element label '" + s + "' is reserved or empty");
    }
    for (char c : s) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\'' || c == '|') {
        throw StructuralError("element label '" + s + "' contains a reserved character");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == s) {
        throw StructuralError("duplicate element label '" + s + "'");
      }
    }
  }
}

std::vector<Elem> flatten(std::size_t n, std::vector<std::vector<Elem>> const& rows) {
  if (rows.size() != n) {
    throw StructuralError("table has " + std::to_string(rows.size()) + " rows, expected "
                          + std::to_string(n));
  }
  std::vector<Elem> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw StructuralError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                            + " entries, expected " + std::to_string(n));
    }
    out.insert(out.end(), rows[i].begin(), rows[i].end());
  }
  return out;
}

}  // namespace

OpTable::OpTable(std::vector<std::string> names, std::vector<Elem> op)
    : _names(std::move(names)), _op(std::move(op)) {
  check_names(_names);
  check_shape(_op, "operation");
}

OpTable::OpTable(std::vector<std::string> names, std::vector<std::vector<Elem>> const& rows)
    : OpTable(names, flatten(names.size(), rows)) {}

void OpTable::check_shape(std::vector<Elem> const& data, char const* what) const {
  std::size_t n = size();
  if (n == 0) {
    throw StructuralError("empty table");
  }
  if (data.size() != n * n) {
    throw StructuralError(std::string(what) + " table has " + std::to_string(data.size())
                          + " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i] >= n) {
      throw StructuralError(std::string(what) + " entry (" + std::to_string(i / n) + ", "
                            + std::to_string(i % n) + ") = " + std::to_string(data[i])
                            + " is out of range");
    }
  }
}

Elem OpTable::lop(Elem s, Elem t) const {
  if (!has_lop()) {
    throw StructuralError("left operation not available");
  }
  return _lop[s * size() + t];
}

Elem OpTable::index_of(std::string_view label) const {
  auto it = std::find(_names.begin(), _names.end(), label);
  if (it == _names.end()) {
    throw StructuralError("unknown element label '" + std::string(label) + "'");
  }
  return static_cast<Elem>(it - _names.begin());
}

Perm OpTable::left_translation(Elem s) const {
  std::vector<Elem> row(_op.begin() + s * size(), _op.begin() + (s + 1) * size());
  if (!is_permutation(row)) {
    throw StructuralError("row " + _names[s] + " is not a permutation");
  }
  return Perm(std::move(row));
}

OpTable OpTable::with_lop(std::vector<Elem> lop) const {
  check_shape(lop, "left operation");
  OpTable t = *this;
  t._lop = std::move(lop);
  return t;
}

OpTable OpTable::without_lop() const {
  OpTable t = *this;
  t._lop.clear();
  return t;
}

OpTable permutation_table(Perm const& f, std::vector<std::string> names) {
  std::size_t n = f.degree();
  if (names.empty()) {
    names = default_names(n);
  }
  std::vector<Elem> op(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      op[s * n + t] = f(t);
    }
  }
  return OpTable(std::move(names), std::move(op));
}

OpTable table_from_rows(std::vector<Perm> const& rows, std::vector<std::string> names) {
  std::size_t n = rows.size();
  if (names.empty()) {
    names = default_names(n);
  }
  std::vector<Elem> op;
  for (auto const& r : rows) {
    if (r.degree() != n) {
      throw StructuralError("row permutation has wrong degree");
    }
    op.insert(op.end(), r.images().begin(), r.images().end());
  }
  return OpTable(std::move(names), std::move(op));
}

namespace {

Flag check_quasigroup(OpTable const& T) {
  std::size_t n = T.size();
  for (Elem s = 0; s < n; ++s) {
    std::vector<Elem> first(n, static_cast<Elem>(n));
    for (Elem t = 0; t < n; ++t) {
      Elem v = T.op(s, t);
      if (first[v] != n) {
        return {false, {s, first[v], t}};
      }
      first[v] = t;
    }
  }
  return {};
}

Flag check_rc(OpTable const& T) {
  std::size_t n = T.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (T.op(T.op(x, y), T.op(x, z)) != T.op(T.op(y, x), T.op(y, z))) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

Flag check_bijective(OpTable const& T) {
  std::size_t n = T.size();
  std::vector<std::size_t> pre(n * n, n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      std::size_t img = T.op(s, t) * n + T.op(t, s);
      if (pre[img] != n * n) {
        return {false,
                {static_cast<Elem>(pre[img] / n), static_cast<Elem>(pre[img] % n), s, t}};
      }
      pre[img] = s * n + t;
    }
  }
  return {};
}

Flag check_lc(OpTable const& T) {
  std::size_t n = T.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (T.lop(T.lop(z, x), T.lop(y, x)) != T.lop(T.lop(z, y), T.lop(x, y))) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

Flag check_involutive_pair(OpTable const& T) {
  std::size_t n = T.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (T.lop(T.op(y, x), T.op(x, y)) != x || T.op(T.lop(y, x), T.lop(x, y)) != x) {
        return {false, {x, y}};
      }
    }
  }
  return {};
}

}  // namespace

ValidationReport validate(OpTable const& table) {
  ValidationReport r;
  r.quasigroup = check_quasigroup(table);
  r.rc = check_rc(table);
  r.bijective = check_bijective(table);
  if (table.has_lop()) {
    r.lc = check_lc(table);
    r.involutive_pair = check_involutive_pair(table);
  }
  return r;
}

void require_bijective_rc_quasigroup(OpTable const& table) {
  auto r = validate(table);
  if (!r.quasigroup.holds) {
    throw PropertyError("not a quasigroup: repeated value in a row", r.quasigroup.witness);
  }
  if (!r.rc.holds) {
    throw PropertyError("right-cyclic law fails", r.rc.witness);
  }
  if (!r.bijective.holds) {
    throw PropertyError("not bijective: (s,t) -> (s*t, t*s) is not injective",
                        r.bijective.witness);
  }
  if (r.lc && !r.lc->holds) {
    throw PropertyError("left operation fails the left-cyclic law", r.lc->witness);
  }
  if (r.involutive_pair && !r.involutive_pair->holds) {
    throw PropertyError("left operation does not invert the pair map",
                        r.involutive_pair->witness);
  }
}

OpTable derive_left_operation(OpTable const& table) {
  std::size_t n = table.size();
  std::vector<Elem> lop(n * n, static_cast<Elem>(n));
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      Elem& slot = lop[table.op(t, s) * n + table.op(s, t)];
      if (slot != n) {
        throw NotBijectiveError("(s,t) -> (s*t, t*s) is not injective");
      }
      slot = s;
    }
  }
  return table.with_lop(std::move(lop));
}

YbeSolution to_ybe(OpTable const& table) {
  require_bijective_rc_quasigroup(table);
  std::size_t n = table.size();
  YbeSolution rho{table.names(), std::vector<Elem>(n * n), std::vector<Elem>(n * n)};
  for (Elem a = 0; a < n; ++a) {
    Perm inv = table.left_translation(a).inverse();
    for (Elem b = 0; b < n; ++b) {
      Elem a2 = inv(b);
      rho.rho1[a * n + b] = a2;
      rho.rho2[a * n + b] = table.op(a2, a);
    }
  }
  return rho;
}

namespace {

void require(Flag const& f, char const* what) {
  if (!f.holds) {
    throw PropertyError(what, f.witness);
  }
}

}  // namespace

OpTable from_ybe(YbeSolution const& rho) {
  std::size_t n = rho.size();
  if (n == 0 || rho.rho1.size() != n * n || rho.rho2.size() != n * n) {
    throw StructuralError("solution tables have the wrong size");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (rho.rho1[i] >= n || rho.rho2[i] >= n) {
      throw StructuralError("solution entry out of range");
    }
  }
  auto rep = validate_ybe(rho);
  require(rep.bijective, "solution is not bijective");
  require(rep.nondegenerate, "solution is degenerate");
  require(rep.involutive, "solution is not involutive");
  require(rep.braid, "solution does not satisfy the braid relation");
  std::vector<Elem> op(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem r = 0; r < n; ++r) {
      op[s * n + rho.first(s, r)] = r;
    }
  }
  return OpTable(rho.names, std::move(op));
}

YbeReport validate_ybe(YbeSolution const& rho) {
  std::size_t n = rho.size();
  YbeReport rep;
  auto apply = [&](Elem a, Elem b) { return std::pair{rho.first(a, b), rho.second(a, b)}; };

  std::vector<std::size_t> pre(n * n, n * n);
  for (Elem a = 0; a < n && rep.bijective.holds; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto [x, y] = apply(a, b);
      std::size_t img = x * n + y;
      if (pre[img] != n * n) {
        rep.bijective = {false,
                         {static_cast<Elem>(pre[img] / n), static_cast<Elem>(pre[img] % n), a, b}};
        break;
      }
      pre[img] = a * n + b;
    }
  }

  for (Elem a = 0; a < n && rep.braid.holds; ++a) {
    for (Elem b = 0; b < n && rep.braid.holds; ++b) {
      for (Elem c = 0; c < n; ++c) {
        // rho12 rho23 rho12
        auto [l1, l2] = apply(a, b);
        auto [l3, l4] = apply(l2, c);
        auto [l5, l6] = apply(l1, l3);
        // rho23 rho12 rho23
        auto [r2, r3] = apply(b, c);
        auto [r1, r4] = apply(a, r2);
        auto [r5, r6] = apply(r4, r3);
        if (l5 != r1 || l6 != r5 || l4 != r6) {
          rep.braid = {false, {a, b, c}};
          break;
        }
      }
    }
  }

  for (Elem a = 0; a < n && rep.involutive.holds; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto [x, y] = apply(a, b);
      auto [u, v] = apply(x, y);
      if (u != a || v != b) {
        rep.involutive = {false, {a, b}};
        break;
      }
    }
  }

  for (Elem a = 0; a < n && rep.nondegenerate.holds; ++a) {
    std::vector<Elem> left(n), right(n);
    for (Elem b = 0; b < n; ++b) {
      left[b] = rho.first(a, b);
      right[b] = rho.second(b, a);
    }
    for (Elem b1 = 0; b1 < n && rep.nondegenerate.holds; ++b1) {
      for (Elem b2 = b1 + 1; b2 < n; ++b2) {
        if (left[b1] == left[b2] || right[b1] == right[b2]) {
          rep.nondegenerate = {false, {a, b1, b2}};
          break;
        }
      }
    }
  }
  return rep;
}

Birack to_birack(OpTable const& table) {
  YbeSolution rho = to_ybe(table);
  return Birack{std::move(rho.names), std::move(rho.rho1), std::move(rho.rho2)};
}

OpTable from_birack(Birack const& b) {
  std::size_t n = b.size();
  if (n == 0 || b.up.size() != n * n || b.down.size() != n * n) {
    throw StructuralError("birack tables have the wrong size");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (b.up[i] >= n || b.down[i] >= n) {
      throw StructuralError("birack entry out of range");
    }
  }
  auto rep = validate_birack(b);
  require(rep.translations, "birack translations are not bijective");
  require(rep.rack1, "birack law 1 fails");
  require(rep.rack2, "birack law 2 fails");
  require(rep.rack3, "birack law 3 fails");
  require(rep.rack4, "birack is not involutive");
  return from_ybe(YbeSolution{b.names, b.up, b.down});
}

BirackReport validate_birack(Birack const& B) {
  std::size_t n = B.size();
  BirackReport rep;
  auto up = [&](Elem a, Elem b) { return B.up_op(a, b); };
  auto dn = [&](Elem a, Elem b) { return B.down_op(a, b); };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (rep.rack1.holds && up(up(a, b), up(dn(a, b), c)) != up(a, up(b, c))) {
          rep.rack1 = {false, {a, b, c}};
        }
        if (rep.rack2.holds
            && dn(up(a, b), up(dn(a, b), c)) != up(dn(a, up(b, c)), dn(b, c))) {
          rep.rack2 = {false, {a, b, c}};
        }
        if (rep.rack3.holds && dn(dn(a, b), c) != dn(dn(a, up(b, c)), dn(b, c))) {
          rep.rack3 = {false, {a, b, c}};
        }
      }
      if (rep.rack4.holds
          && (up(up(a, b), dn(a, b)) != a || dn(up(a, b), dn(a, b)) != b)) {
        rep.rack4 = {false, {a, b}};
      }
    }
  }
  for (Elem a = 0; a < n && rep.translations.holds; ++a) {
    std::vector<Elem> left(n), right(n);
    for (Elem b = 0; b < n; ++b) {
      left[b] = up(a, b);
      right[b] = dn(b, a);
    }
    if (!is_permutation(left) || !is_permutation(right)) {
      rep.translations = {false, {a}};
    }
  }
  return rep;
}

Flag check_cube_condition(OpTable const& theta) {
  std::size_t n = theta.size();
  for (Elem r = 0; r < n; ++r) {
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (theta.op(theta.op(r, s), theta.op(r, t)) != theta.op(theta.op(s, r), theta.op(s, t))) {
          return {false, {r, s, t}};
        }
      }
    }
  }
  return {};
}

OpTable reconstruct_from_complement(std::vector<std::string> names,
                                    std::vector<std::vector<std::optional<Elem>>> const& partial) {
  std::size_t n = names.size();
  if (partial.size() != n) {
    throw StructuralError("complement table has the wrong number of rows");
  }
  std::vector<Elem> op(n * n);
  for (Elem s = 0; s < n; ++s) {
    if (partial[s].size() != n) {
      throw StructuralError("complement table row " + std::to_string(s) + " has the wrong length");
    }
    std::vector<Elem> first(n, static_cast<Elem>(n));
    for (Elem t = 0; t < n; ++t) {
      if (t == s) {
        continue;
      }
      if (!partial[s][t]) {
        throw StructuralError("complement entry (" + std::to_string(s) + ", " + std::to_string(t)
                              + ") is missing");
      }
      Elem v = *partial[s][t];
      if (v >= n) {
        throw StructuralError("complement entry out of range");
      }
      if (first[v] != n) {
        throw InjectivityError("complement is not injective in a row", {s, first[v], t});
      }
      first[v] = t;
      op[s * n + t] = v;
    }
    for (Elem v = 0; v < n; ++v) {
      if (first[v] == n) {
        op[s * n + s] = v;
        break;
      }
    }
  }
  OpTable table(std::move(names), std::move(op));
  auto rep = validate(table);
  if (!rep.rc.holds) {
    throw ReconstructionError("reconstructed table fails the right-cyclic law", rep.rc.witness);
  }
  if (!rep.bijective.holds) {
    throw ReconstructionError("reconstructed table is not bijective", rep.bijective.witness);
  }
  return table;
}

}  // namespace rcq
