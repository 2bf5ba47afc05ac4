#ifndef RCQ_REWRITING_HPP
#define RCQ_REWRITING_HPP

#include <cstdint>
#include <vector>

#include "rcq/op_table.hpp"

namespace rcq {

enum class OracleVerdict { equal, not_equal, inconclusive };

// Decides u = v by breadth-first search over words reachable from u with the
// defining relations s (s*t) <-> t (t*s), s != t.  Never uses coordinates.
// Gives up with inconclusive once more than budget words have been visited.
OracleVerdict oracle_equal_bfs(OpTable const& table, Word const& u, Word const& v,
                               std::uint64_t budget = 1'000'000);

// Connected components of the relation graph on all words of the given
// length.  Words are indexed in lexicographic order (first letter most
// significant); the result maps each index to the least index in its class.
std::vector<std::uint64_t> word_classes(OpTable const& table, std::size_t length);

Word word_from_index(std::uint64_t index, std::size_t n, std::size_t length);
std::uint64_t index_of_word(Word const& w, std::size_t n);

}  // namespace rcq

#endif
