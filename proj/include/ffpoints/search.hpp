#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffpoints/bigint.hpp"
#include "ffpoints/construct.hpp"
#include "ffpoints/curves.hpp"

namespace ffp {

// Brute-force bounded search: x ranges over 0 and all reduced fractions u/w
// with w monic, deg u <= max_num_deg, deg w <= max_den_deg, gcd(u, w) = 1.
struct SearchBounds {
    unsigned max_num_deg = 0;
    unsigned max_den_deg = 0;
};

struct SearchOptions {
    // refuse to enumerate when p^(max_num_deg + max_den_deg + 2) exceeds this
    BigInt budget = BigInt(100000000);
    unsigned threads = 1;
    // cap on dense degrees when expanding the curve's a and the RHS
    BigInt dense_cap = BigInt(1000000);
};

// Points come out in a fixed deterministic order regardless of thread count:
// x = 0 first, then by (deg w, w, deg u, u); polynomials of equal degree are
// ordered by leading coefficient, then by the remaining coefficients as a
// little-endian base-p counter.  For each x with a y, one point per k-th root
// of unity, ascending.
struct SearchReport {
    std::vector<CurvePoint> points;
    std::uint64_t candidates = 0;  // reduced x values evaluated
};

SearchReport exhaustive_search(const CurveModel& curve, const SearchBounds& bounds,
                               const SearchOptions& opts = {});

// Cross-check a constructed point set against the brute-force oracle.
struct ConfirmReport {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t out_of_bounds = 0;           // points skipped: x outside bounds
    std::vector<std::size_t> missing;        // indices into report.points
    std::vector<std::string> detail;
};

ConfirmReport confirm_constructed(const CurveModel& curve, const PointSetReport& constructed,
                                  const SearchBounds& bounds, const SearchOptions& opts = {});

}  // namespace ffp
