// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace fplab {

/// Shortest decimal text that parses back to exactly `value`
/// ("inf", "-inf" and "nan" for non-finite values).
[[nodiscard]] std::string format_real(double value);

/// `value` rounded to `digits` significant digits, %g style.
[[nodiscard]] std::string format_significant(double value, int digits = 6);

}  // namespace fplab
