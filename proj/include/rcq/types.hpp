#ifndef RCQ_TYPES_HPP
#define RCQ_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rcq {

using Elem = std::uint32_t;
using Word = std::vector<Elem>;
using Coords = std::vector<std::int64_t>;

}  // namespace rcq

#endif
