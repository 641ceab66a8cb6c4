#pragma once

/**
 * @file monomial.hpp
 * @brief Minimal monomial solutions (k, ..., k).
 *
 * The minimal size is the order of M_1(k) = [[k, -1], [1, 0]] in PSL_2(Z/NZ),
 * found by stepping through its powers until one is +-Id. Element orders in
 * SL_2(Z/NZ) stay below 3N, which caps the walk.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "friezemod/ctuple.hpp"
#include "friezemod/mat2.hpp"
#include "friezemod/solution.hpp"

namespace friezemod {

struct MonomialRecord {
    Modulus modulus;
    Residue k;
    std::size_t size = 0;
    PlusMinusId sign;
    ReductionVerdict verdict = ReductionVerdict::unknown;
    std::string verdict_source;
    std::optional<ReductionWitness> witness;

    CTuple tuple() const { return CTuple::constant(modulus, k.rep(), size); }
};

// Size and sign only; verdict stays unknown.
MonomialRecord minimal_monomial_size(const Modulus& modulus, std::int64_t k);

// Size plus an irreducibility verdict. Known theorems are tried first (size 3,
// prime modulus, k = 2, half modulus, N/l with l^2 | N, N = l^n, size-4
// classification); otherwise the generic search runs under the budget.
MonomialRecord analyze_monomial(const Modulus& modulus, std::int64_t k, WorkBudget& budget);

// For odd prime p: size(+-2) = p, every other size divides (p-1)/2 or (p+1)/2.
bool check_prime_monomial_sizes(std::int64_t p);

// size(k) == size(-k) for every k.
bool check_monomial_symmetry(const Modulus& modulus);

// Record for k = N/2 (N even, N >= 4): size 4 when 4 | N, else 6; always irreducible.
MonomialRecord half_modulus_analysis(const Modulus& modulus);

// For l >= 2 with l^2 | N: (N/l, ..., N/l) of length 2l is a solution, and
// when l is prime it is the minimal one. Throws InputError if l^2 does not divide N.
bool check_divisor_monomial(const Modulus& modulus, std::int64_t l);

// (l, ..., l) of length 2 l^(n-1) over Z/l^nZ.
CTuple prime_power_tuple(std::int64_t l, std::int64_t n);

// Reducibility of prime_power_tuple(l, n): irreducible for l = 2, otherwise an
// explicit witness. For n >= 3 the solution part is (2l^(n-1), l, ..., l, 2l^(n-1))
// of length 2l^(n-1) - 4l^(n-2) + 2; for n = 2 it is (-l, l, l, -l).
// Throws InputError unless modulus == l^n with l >= 2, n >= 2.
ReductionResult prime_power_reduction(const Modulus& modulus, std::int64_t l);

}  // namespace friezemod
