#pragma once

#include <cstdint>

#include "json.hpp"
#include "sdp/symbolic.hpp"

namespace sdp::sym {

// Compares the generated representative table against the bundled reference
// rows.  Structural comparison is side-order insensitive.  Rows that differ
// are adjudicated numerically: seeded sampled systems decide which form
// tracks the exhaustive componentwise check; both the structured diff and the
// sample tallies land in the returned report.
//
// report fields: rows (one object per representative), all_match,
// required_exact_ok (every row with k <= 4 matches), adjudications_ok (every
// mismatching row's generated form agreed with the exhaustive check on all
// samples).
nlohmann::ordered_json verify_reference_table(int max_k, std::uint64_t seed,
                                              int samples_per_row = 12);

}  // namespace sdp::sym
