#pragma once

#include <string_view>
#include <vector>

#include "hermitian/partition.hpp"
#include "hermitian/weight.hpp"

namespace hermitian {

/* [7,5,4,2,1,1] or [] */
std::vector<int> parse_int_list(std::string_view text);
Partition parse_partition(std::string_view text);
/* (6,3,1|5,2,0) */
Frobenius parse_frobenius(std::string_view text);
/* [3/2,3/2,-3/2] or, for Type I, [3,3,3;0,0,0,0] */
Weight parse_weight(std::string_view text);
HalfInt parse_half(std::string_view token);

} // namespace hermitian
