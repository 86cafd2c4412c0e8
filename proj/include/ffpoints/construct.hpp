#pragma once

// Explicit point constructions.  For d = p^n + 1 and each divisor m of n
// with n/m odd, d' = p^m + 1 divides d; writing e = d/d', the curves with
// a = t^d acquire the exact points built here, one per admissible m, and
// the count grows with the number of such divisors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffpoints/curves.hpp"

namespace ffp {

// Divisors m of n with n/m odd, ascending.
std::vector<std::uint64_t> odd_quotient_divisors(std::uint64_t n);

struct ConstructionParams {
    std::uint64_t p, n, m;
    BigNat d;        // p^n + 1
    BigNat d_prime;  // p^m + 1
    BigNat e;        // d / d_prime
};

// Throws OddQuotientViolation unless m | n with n/m odd.
ConstructionParams make_params(std::uint64_t p, std::uint64_t n, std::uint64_t m);

struct GeneratedPoint {
    CurvePoint point;
    ConstructionParams params;
    std::string note;
    std::vector<std::string> warnings;
};

// y^2 = x(x^r+1)(x^r+a^r), a = t^d: the point (t^e, t^(e(r+1)/2) (t^(re)+1)^(d'/2)).
GeneratedPoint theorem_point(std::uint64_t p, std::uint64_t r, std::uint64_t n,
                             std::uint64_t m);

// y^6 = x(x+1)(x+a), a = t^d, x = t^e, y the exact 6th root of the RHS;
// DivisibilityError when the root is not visible for this m.
GeneratedPoint example1_point(std::uint64_t p, std::uint64_t n, std::uint64_t m);

// y^2 = f(x) x^(2b) f(a/x), a = t^d: the point (t^e, t^(be) f(t^e)^(d'/2)).
GeneratedPoint example2_point(std::uint64_t p, const DensePoly& f, std::uint64_t n,
                              std::uint64_t m);

// y^r = x(x+1)(x+a) for odd prime r, a = t^d, x = t^e, y the exact r-th root.
GeneratedPoint example3_point(std::uint64_t p, std::uint64_t r, std::uint64_t n,
                              std::uint64_t m);

// v_ell(p^k + 1) for odd prime ell | p+1 and odd k: exact valuation next to
// the lifting-the-exponent prediction v_ell(p+1) + v_ell(k).
struct LteCheck {
    unsigned long v_exact;
    unsigned long v_predicted;
};
LteCheck lte_valuation(std::uint64_t p, std::uint64_t ell, std::uint64_t k);

enum class Family { Theorem, Example1, Example2, Example3 };

const char* family_name(Family f);
Family family_from_name(const std::string& s);  // ParseError on unknown

struct PointSetOptions {
    Family family = Family::Theorem;
    std::uint64_t p = 5;
    std::uint64_t r = 3;  // theorem / example3
    std::uint64_t n = 1;
    std::optional<DensePoly> f;  // example2
    bool include_negations = false;
    bool include_involutions = false;  // theorem family only
};

struct PointProvenance {
    std::uint64_t m;
    fp_t unity;  // root of unity multiplied into y
    bool sigma;  // involution applied
};

struct SkipRecord {
    std::uint64_t m;
    std::string reason;
};

struct PointSetReport {
    CurveModel curve;
    std::size_t tau_odd = 0;
    std::vector<CurvePoint> points;           // parallel to provenance
    std::vector<PointProvenance> provenance;
    std::vector<std::uint64_t> valid_m;
    std::vector<SkipRecord> skipped;
    std::vector<std::string> warnings;
    BigNat max_x_degree;  // over the emitted points
};

// One base point per admissible m, optionally closed under y-multiplication
// by roots of unity and under the involution; canonical coordinates,
// deduplicated, deterministic order (m, then unity, then sigma flag).
PointSetReport point_set(const PointSetOptions& opts);

struct TableRow {
    std::uint64_t n;
    std::size_t tau_odd;
    std::size_t points;                  // with negations
    std::size_t points_with_involution;  // negations + involution images
    BigNat max_x_degree;
};

// Rows for the hyperelliptic family as n ranges; the growth of tau_odd is
// the unboundedness phenomenon made concrete.
std::vector<TableRow> unboundedness_table(std::uint64_t p, std::uint64_t r,
                                          const std::vector<std::uint64_t>& ns);

std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace ffp
