#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fieldext.hpp"

namespace ffgroup {

struct RunConfig {
    std::uint64_t point_budget = kDefaultPointBudget;
    std::uint64_t scan_budget = kDefaultScanBudget;
    unsigned workers = 0;  // 0 = available parallelism
};

/// One failed case with enough context to replay it: the witnessing
/// polynomials or matrix in text format, observed and expected values as
/// decimal strings.
struct FailureRecord {
    std::string f;
    std::string g;
    std::string witness;
    std::string observed;
    std::string expected;
};

/// Outcome record of one harness run. pass <=> no failures and no budget hit.
struct Report {
    std::string harness;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t cases_total = 0;
    std::uint64_t cases_checked = 0;
    std::vector<FailureRecord> failures;
    std::int64_t elapsed_ms = 0;
    bool budget_hit = false;

    bool passed() const { return failures.empty() && !budget_hit; }
};

/// Theorem grid: for every primitive f and every monic nonzero-constant g != f
/// of degree n, <C_f, C_g> has order |GL_n(q)|.
Report verify_main_theorem(std::uint64_t q, unsigned n, const RunConfig& cfg = {});

/// The g = X^n - 1 slice over a prime field.
Report verify_degos(std::uint64_t p, unsigned n, const RunConfig& cfg = {});

/// For every monic degree-n f with f(0) != 0: order(C_f) = q^n - 1 iff f is
/// primitive, and min/char polynomial of C_f both equal f.
Report verify_singer_lemma(std::uint64_t q, unsigned n, const RunConfig& cfg = {});

/// Every non-identity element of the standard degree-d extension subgroup on
/// K^a fixes at most (q^a)^(d-1) vectors.
Report verify_fixed_point_lemma(std::uint64_t q, unsigned a, unsigned d,
                                const RunConfig& cfg = {});

/// For every admissible pair: C_f^{-1} C_g fixes at least q^{n-1} vectors, and
/// the pair order divides no proper semilinear-group order (the documented
/// (2,2) degeneracy skips the divisibility check).
Report verify_two_companion(std::uint64_t q, unsigned n, const RunConfig& cfg = {});

/// Scans all of GL_n(q) and counts the distinct conjugates of the standard
/// degree-d extension subgroup containing the canonical Singer cycle; passes
/// iff the count is exactly 1.
Report verify_unique_extension(std::uint64_t q, unsigned n, unsigned d,
                               const RunConfig& cfg = {});

/// For every x in GL_n(q), the order of <s, x> (s the Singer generator) either
/// equals |GL_n(q)| or divides d * |GL_{n/d}(q^d)| for some divisor d > 1.
Report kantor_scan(std::uint64_t q, unsigned n, const RunConfig& cfg = {});

}  // namespace ffgroup
