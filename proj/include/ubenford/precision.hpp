#pragma once

namespace ubenford {

/// Controls how transform evaluation escalates precision.
struct PrecisionPolicy {
  int initial_digits = 32;
  int guard_digits = 15;
  /// Decimal digits two escalating evaluations must share on the fractional part.
  int agreement_digits = 12;
  int max_digits = 100000;

  /// Throws InvalidParameter unless guard >= 15, agreement >= 12 and the cap
  /// leaves room above the initial precision.
  void validate() const;
};

}  // namespace ubenford
