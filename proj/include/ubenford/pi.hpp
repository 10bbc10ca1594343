#pragma once

#include <string_view>

#include "ubenford/big_real.hpp"
#include "ubenford/precision.hpp"

namespace ubenford {

/// pi to `digits` significant decimal digits.
///
/// Evaluated with Machin's formula pi = 16 atan(1/5) - 4 atan(1/239), each
/// arctangent series summed by binary splitting over exact integers. Results
/// are memoized process-wide; the memo only ever grows and every caller gets
/// its own rounded copy. Throws PrecisionCapExceeded above `policy.max_digits`.
BigReal pi_digits(int digits, const PrecisionPolicy& policy = {});

/// atan(1/q) for integer q >= 2 by binary splitting, no memoization.
BigReal arctan_inverse(unsigned long q, int digits);

/// Embedded reference: the first 1000 significant digits of pi, no decimal point.
std::string_view pi_reference_digits();

}  // namespace ubenford
