#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace arith {

/// Published smooth/total tables for CP_{2,n} (n <= 15) and CP_{3,n}
/// (n <= 20) as CSV with header n,smooth,total.
std::optional<std::string_view> golden_table_csv(std::size_t family);

}  // namespace arith
