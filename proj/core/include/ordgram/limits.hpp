#pragma once

#include <cstdint>

namespace ordgram {

// Budgets that turn runaway computations on invalid inputs into diagnostics.
// All are generous for desk-scale grammars.
struct Limits {
  std::uint64_t step_budget = 20000;           // loop iterations per order_type_of_forms call
  std::uint32_t depth_cap = 256;               // recursion depth of order_type_of_forms
  std::uint64_t enumeration_budget = 5000000;  // string-building steps during bounded enumeration
  std::uint64_t production_budget = 200000;    // productions after any normalization step
  std::uint32_t prefix_search_factor = 10;     // cap factor for the separating-prefix search
};

}  // namespace ordgram
