#pragma once

/**
 * @file solution.hpp
 * @brief Solution testing, enumeration and the generic reducibility search.
 *
 * A tuple c of length n >= 3 is reducible when some dihedral transform of it
 * splits as a (+) b with a of length m >= 3 and b a solution of length
 * l >= 3 (so m + l = n + 2). find_reduction searches that space exhaustively:
 * for each class member, each split m, the two free boundary entries of b
 * range over (Z/NZ)^2 and everything else is forced.
 */

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friezemod/ctuple.hpp"
#include "friezemod/mat2.hpp"

namespace friezemod {

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

// Shared work counter; one unit is one candidate tuple tested for solution-hood.
class WorkBudget {
public:
    explicit WorkBudget(std::uint64_t limit = kDefaultWorkLimit) : limit_(limit) {}
    WorkBudget(const WorkBudget&) = delete;
    WorkBudget& operator=(const WorkBudget&) = delete;

    // Charges the units if they fit; otherwise charges nothing, marks the
    // budget exhausted and returns false.
    bool try_charge(std::uint64_t units) noexcept;

    std::uint64_t spent() const noexcept { return spent_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t remaining() const noexcept;
    bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> spent_{0};
    std::atomic<bool> exhausted_{false};
};

struct SolutionVerdict {
    bool is_solution = false;
    PlusMinusId sign;
};

SolutionVerdict check_solution(const CTuple& t);

inline bool is_solution(const CTuple& t) { return check_solution(t).is_solution; }

// Every solution of length n, sorted lexicographically; with up_to_equivalence
// only canonical forms are kept. Charges N^n units up front and throws
// WorkLimitExceeded if that does not fit. jobs > 1 splits on the first entry.
std::vector<CTuple> enumerate_solutions(const Modulus& modulus, std::size_t n, bool up_to_equivalence,
                                        WorkBudget& budget, unsigned jobs = 1);

// Size-4 solutions are exactly (-a, b, a, -b) with ab = 0 and (a, b, a, b) with ab = 2.
bool check_size4_classification(const Modulus& modulus, WorkBudget& budget);

// transform(original) == left (+) right, with right a solution.
struct ReductionWitness {
    DihedralTransform transform;
    CTuple left;
    CTuple right;
};

// not_applicable covers size-2 solutions such as (0, 0), which are never called irreducible.
enum class ReductionVerdict { reducible, irreducible, unknown, not_applicable };

std::string to_string(ReductionVerdict v);

struct ReductionResult {
    ReductionVerdict verdict = ReductionVerdict::unknown;
    std::optional<ReductionWitness> witness;
};

// Exhaustive search in a fixed order: class members lexicographically, split
// m descending (shortest right part first), boundary pair (b_1, b_l)
// row-major. Throws NotASolution when t
// is not a solution and InputError when t is shorter than 3. Returns unknown
// when the budget runs out; never guesses irreducible.
ReductionResult find_reduction(const CTuple& t, WorkBudget& budget);

struct WitnessCheck {
    bool ok = false;
    std::string reason;
};

// Re-derives everything a witness claims: transform and (+) reconstruction,
// both parts solutions, lengths >= 3 summing to n + 2.
WitnessCheck validate_witness(const CTuple& original, const ReductionWitness& w);

}  // namespace friezemod
