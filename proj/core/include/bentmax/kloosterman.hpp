#pragma once

#include <cstdint>
#include <vector>

#include "bentmax/field.hpp"

namespace bentmax {

/// Exact Kloosterman sum over F_{2^k}: sum over nonzero x of
/// (-1)^(Tr(alpha x + 1/x)).  Direct summation; the reference path.
std::int64_t kloosterman_sum(const Field& fk, Elem alpha);

/// All 2^k sums at once via one Walsh transform of x -> Tr(1/x).
std::vector<std::int64_t> kloosterman_table(const Field& fk);

/// The same sum for alpha in the subfield F_{2^k} of a larger field, with
/// the trace taken as the k-term Frobenius sum inside the big field.
/// Requires k | n and alpha in the subfield.
std::int64_t kloosterman_sum_embedded(const Field& big, int k, Elem alpha);

struct KloostermanRow {
  int k = 0;
  Elem alpha = 0;
  std::int64_t sum = 0;
  int trace_bit = 0;
};

std::vector<KloostermanRow> kloosterman_rows(const Field& fk);

/// Scan of the trace condition at sum = -1 over all of F_{2^k}.
struct TraceScanResult {
  int k = 0;
  std::vector<Elem> zero_set;    // alpha with sum = -1, sorted
  std::vector<Elem> violations;  // members of zero_set with Tr(alpha) = 1
};

/// Requires 1 <= k <= 20 (default modulus).  Violations are empty for every
/// k >= 3 and nonempty exactly at k = 2.
TraceScanResult scan_trace_theorem(int k);

/// True iff, over F_{2^{2k}}, Tr(alpha x^(2^k - 1)) is bent exactly for the
/// subfield alpha with embedded sum -1.  Requires 2 <= k <= 6.
bool dillon_cross_check(int k);

}  // namespace bentmax
