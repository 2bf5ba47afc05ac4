#ifndef RCQ_IO_HPP
#define RCQ_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rcq/op_table.hpp"

namespace rcq {

using ordered_json = nlohmann::ordered_json;

struct GroupLetter {
  Elem gen;
  bool inverse;
  bool operator==(GroupLetter const&) const = default;
};

using GroupWord = std::vector<GroupLetter>;

// {"names": [...], "op": [[...], ...], "lop": [[...], ...]}; "lop" optional.
ordered_json table_to_json(OpTable const& table, bool include_lop = false);
OpTable table_from_json(nlohmann::json const& j);
OpTable read_table_file(std::string const& path);

ordered_json ybe_to_json(YbeSolution const& rho);
YbeSolution ybe_from_json(nlohmann::json const& j);
ordered_json birack_to_json(Birack const& b);
Birack birack_from_json(nlohmann::json const& j);

// Whitespace-separated labels; "1" or the empty string is the empty word.
Word parse_word(OpTable const& table, std::string_view text);
std::string format_word(OpTable const& table, Word const& w);

// As parse_word, but a trailing ' marks an inverse letter.
GroupWord parse_group_word(OpTable const& table, std::string_view text);

}  // namespace rcq

#endif
