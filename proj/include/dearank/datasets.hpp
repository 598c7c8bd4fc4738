#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dearank/matrix.hpp"

namespace dearank {

/// Bundled case-study matrices, keyed by id:
///   "table3.1"  4 DMUs, 1 input / 1 output    (returns-to-scale walkthrough)
///   "table3.2"  4 DMUs, 1 input / 1 output    (self-assessment walkthrough)
///   "table3.4"  18 bank branches, 2 cost / 4 benefit attributes
/// Throws std::invalid_argument for an unknown id.
const DecisionMatrix& demo_dataset(std::string_view id);

/// Available demo_dataset ids, sorted.
std::vector<std::string> demo_dataset_ids();

} // namespace dearank
