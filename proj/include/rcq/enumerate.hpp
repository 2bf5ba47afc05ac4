#ifndef RCQ_ENUMERATE_HPP
#define RCQ_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "rcq/op_table.hpp"

namespace rcq {

struct EnumerationOptions {
  std::size_t max_n = 4;
  bool up_to_iso = false;
};

// Depth-first search over rows (each a permutation in lexicographic order),
// pruning on every right-cyclic triple whose rows are already fixed.  Tables
// are produced in lexicographic order of their flattened entries.  With
// up_to_iso only the lexicographically least member of each relabeling class
// is produced.  Returns the number of tables produced.
std::size_t for_each_rc_quasigroup(std::size_t n, EnumerationOptions const& opts,
                                   std::function<void(OpTable const&)> const& emit);

std::vector<OpTable> enumerate_rc_quasigroups(std::size_t n, EnumerationOptions const& opts = {});

// Filters all n^(n*n) tables; intended for cross-checking with n <= 3.
std::vector<OpTable> enumerate_rc_quasigroups_naive(std::size_t n, bool up_to_iso = false);

// Applies the relabeling pi: the result satisfies r(pi s, pi t) = pi(s * t).
OpTable relabel(OpTable const& table, Perm const& pi);

// Lexicographically least relabeling; names are kept.
OpTable canonical_form(OpTable const& table);

bool is_canonical(OpTable const& table);

}  // namespace rcq

#endif
