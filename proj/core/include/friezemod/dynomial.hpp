#pragma once

/**
 * @file dynomial.hpp
 * @brief Minimal dynomial solutions (k, -k, ..., k, -k).
 *
 * On the alternating tuple M_n is the (n/2)-th power of M_1(-k) M_1(k), so the
 * minimal size is twice the order of that product in PSL_2(Z/NZ).
 *
 * A reducing part of the alternating tuple has an alternating interior
 * (s, -s, ..., ) with s = alpha k, alpha = +-1, and free boundary entries a, b.
 * For an odd part length the part is a solution only if a = b and
 * a (alpha k + a) = 2; for an even length only if a (alpha k + a) = 0.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friezemod/ctuple.hpp"
#include "friezemod/mat2.hpp"
#include "friezemod/solution.hpp"

namespace friezemod {

enum class Parity { even, odd };

struct DynomialRecord {
    Modulus modulus;
    Residue k;
    std::size_t size = 0;
    PlusMinusId sign;
    // Prime N >= 5, k != 0 and k^2 + 8 not a square.
    bool criterion_applies = false;
    // Roots of X (X - k) = 2, ascending canonical representatives.
    std::vector<std::int64_t> quad_roots;
    ReductionVerdict verdict = ReductionVerdict::unknown;
    std::string verdict_source;
    std::optional<ReductionWitness> witness;

    CTuple tuple() const { return CTuple::alternating(modulus, k.rep(), size); }
};

// Size and sign only. Throws InternalError past the 6N bound.
DynomialRecord minimal_dynomial_size(const Modulus& modulus, std::int64_t k);

// All a with a (alpha k + a) = 0 (even) or 2 (odd), ascending. Odd prime moduli
// use the quadratic formula; other moduli scan every residue.
std::vector<std::int64_t> boundary_roots(const Modulus& modulus, std::int64_t k, int alpha, Parity parity);

// Roots of X (X - k) = 2.
std::vector<std::int64_t> quad_roots(const Modulus& modulus, std::int64_t k);

// k != 0 and k^2 + 8 is not a square mod the prime N >= 5. Throws InputError otherwise.
bool discriminant_criterion(std::int64_t n, std::int64_t k);

// N not congruent to +-1 mod 12, for a prime N >= 5. Throws InputError otherwise.
bool two_dynomial_criterion(std::int64_t n);

struct StructuredStats {
    std::uint64_t candidates = 0;     // boundary values tried
    std::uint64_t odd_hits = 0;       // solutions found with odd part length
    std::uint64_t even_split_hits = 0;  // solutions found with even part length
};

struct StructuredResult {
    ReductionResult result;
    StructuredStats stats;
    std::size_t part_length = 0;  // length of the reducing part, 0 when irreducible
    int alpha = 0;
};

// Exact verdict for the minimal k-dynomial solution over a prime N >= 5,
// k not in {0, 1, -1}. Part lengths are scanned ascending, alpha = -1 before
// +1, boundary ascending; the first hit gives the witness. Every hit is checked
// against the boundary equations. Throws InputError when the hypotheses fail.
StructuredResult structured_dynomial_reducibility(const Modulus& modulus, std::int64_t k);

// Witness whose right operand is `part`, found by matching the part's interior
// against the tail of each member of t's class. nullopt if no member fits or
// the resulting split does not validate.
std::optional<ReductionWitness> witness_for_part(const CTuple& t, const CTuple& part);

// (boundary, s, -s, ..., s, boundary) of odd length.
CTuple boundary_part(const Modulus& modulus, std::int64_t boundary, std::int64_t s, std::size_t length);

// Size, roots and verdict: size 2, discriminant criterion, size-4
// classification, then the structured checker for prime N and k not in
// {0, +-1}, else the generic search under the budget.
DynomialRecord analyze_dynomial(const Modulus& modulus, std::int64_t k, WorkBudget& budget);

}  // namespace friezemod
