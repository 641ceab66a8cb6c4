#include "friezemod/solution.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "friezemod/errors.hpp"

namespace friezemod {

bool WorkBudget::try_charge(std::uint64_t units) noexcept {
    std::uint64_t current = spent_.load(std::memory_order_relaxed);
    while (true) {
        if (units > limit_ || current > limit_ - units) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (spent_.compare_exchange_weak(current, current + units, std::memory_order_relaxed)) return true;
    }
}

std::uint64_t WorkBudget::remaining() const noexcept {
    const std::uint64_t s = spent();
    return s >= limit_ ? 0 : limit_ - s;
}

std::string to_string(ReductionVerdict v) {
    switch (v) {
        case ReductionVerdict::reducible: return "reducible";
        case ReductionVerdict::irreducible: return "irreducible";
        case ReductionVerdict::unknown: return "unknown";
        case ReductionVerdict::not_applicable: return "not-applicable";
    }
    return "unknown";
}

SolutionVerdict check_solution(const CTuple& t) {
    const PlusMinusId sign = classify_pm_id(m_n(t.modulus(), t.reps()));
    return {sign.is_pm_identity(), sign};
}

namespace {

bool is_solution_by_continuants(const Modulus& m, std::span<const std::int64_t> reps) {
    return classify_pm_id(m_n_via_continuants(m, reps)).is_pm_identity();
}

// Solutions whose first entry lies in [first_lo, first_hi).
std::vector<CTuple> enumerate_range(const Modulus& m, std::size_t n, std::int64_t first_lo,
                                    std::int64_t first_hi, bool up_to_equivalence) {
    std::vector<CTuple> found;
    std::vector<std::int64_t> digits(n, 0);
    digits[0] = first_lo;
    const std::int64_t base = m.value();
    while (digits[0] < first_hi) {
        if (is_solution_by_continuants(m, digits)) {
            CTuple t(m, digits);
            found.push_back(up_to_equivalence ? canonical_form(t) : std::move(t));
        }
        // odometer, last digit fastest
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++digits[i] < base || i == 0) break;
            digits[i] = 0;
        }
    }
    return found;
}

}  // namespace

std::vector<CTuple> enumerate_solutions(const Modulus& modulus, std::size_t n, bool up_to_equivalence,
                                        WorkBudget& budget, unsigned jobs) {
    if (n == 0) throw InputError("solution size must be at least 1");
    // N^n, saturating.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget.limit() / static_cast<std::uint64_t>(modulus.value()) + 1) {
            total = budget.limit() + 1;
            break;
        }
        total *= static_cast<std::uint64_t>(modulus.value());
    }
    if (!budget.try_charge(total)) throw WorkLimitExceeded(budget.spent() + total, budget.limit());

    const std::int64_t base = modulus.value();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::int64_t>(base, 256))));
    std::vector<std::vector<CTuple>> parts(jobs);
    if (jobs == 1) {
        parts[0] = enumerate_range(modulus, n, 0, base, up_to_equivalence);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::int64_t lo = base * j / jobs;
            const std::int64_t hi = base * (j + 1) / jobs;
            workers.emplace_back([&, j, lo, hi] { parts[j] = enumerate_range(modulus, n, lo, hi, up_to_equivalence); });
        }
    }
    std::vector<CTuple> out;
    for (auto& p : parts) {
        for (auto& t : p) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool check_size4_classification(const Modulus& modulus, WorkBudget& budget) {
    const std::vector<CTuple> found = enumerate_solutions(modulus, 4, false, budget);
    std::set<std::vector<std::int64_t>> family;
    const std::int64_t n = modulus.value();
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            const std::int64_t ab = modulus.mul(a, b);
            if (ab == 0) family.insert({modulus.neg(a), b, a, modulus.neg(b)});
            if (ab == modulus.reduce(2)) family.insert({a, b, a, b});
        }
    }
    std::set<std::vector<std::int64_t>> enumerated;
    for (const auto& t : found) enumerated.insert({t.reps().begin(), t.reps().end()});
    return enumerated == family;
}

WitnessCheck validate_witness(const CTuple& original, const ReductionWitness& w) {
    const std::size_t m = w.left.size();
    const std::size_t l = w.right.size();
    if (!(w.left.modulus() == original.modulus()) || !(w.right.modulus() == original.modulus())) {
        return {false, "modulus mismatch"};
    }
    if (m < 3 || l < 3) return {false, "parts must have length >= 3"};
    if (m + l - 2 != original.size()) return {false, "part lengths do not add up"};
    if (w.transform.rotation >= original.size()) return {false, "rotation out of range"};
    if (!(w.transform.apply(original) == oplus(w.left, w.right))) {
        return {false, "transform(original) differs from left (+) right"};
    }
    if (!is_solution(w.right)) return {false, "right part is not a solution"};
    if (!is_solution(w.left)) return {false, "left part is not a solution"};
    return {true, {}};
}

ReductionResult find_reduction(const CTuple& t, WorkBudget& budget) {
    if (t.size() < 3) throw InputError("reducibility is defined for solutions of size >= 3");
    if (!is_solution(t)) throw NotASolution("tuple " + format_tuple(t) + " is not a solution");

    const Modulus& mod = t.modulus();
    const std::size_t n = t.size();
    const std::int64_t big_n = mod.value();
    const auto row_units = static_cast<std::uint64_t>(big_n);
    const std::int64_t minus_one = big_n - 1;

    for (const ClassMember& member : equivalence_class_with_transforms(t)) {
        const auto r = member.tuple.reps();
        // suffix[j] = M(r[n-1]) ... M(r[j]); suffix[n] = Id.
        std::vector<Mat2> suffix(n + 1, Mat2::identity(mod));
        for (std::size_t j = n; j-- > 0;) suffix[j] = mat_mul(suffix[j + 1], Mat2::step(mod, r[j]));

        // shortest right part first: m runs down from n - 1 to 3
        for (std::size_t m = n - 1; m >= 3; --m) {
            const Mat2& interior = suffix[m];  // right part minus its boundary entries
            for (std::int64_t b1 = 0; b1 < big_n; ++b1) {
                // q = interior * M(b1); M(bl) * q = [[bl q11 - q21, bl q12 - q22], [q11, q12]],
                // so the bottom row (q11, q12) must already be (0, +-1) for any bl.
                const Mat2 q = mat_mul(interior, Mat2::step(mod, b1));
                const bool row_viable =
                    q.at(0, 0) == 0 && (q.at(0, 1) == 1 || q.at(0, 1) == minus_one);
                if (!row_viable) {
                    if (!budget.try_charge(row_units)) return {ReductionVerdict::unknown, std::nullopt};
                    continue;
                }
                for (std::int64_t bl = 0; bl < big_n; ++bl) {
                    if (!budget.try_charge(1)) return {ReductionVerdict::unknown, std::nullopt};
                    if (!classify_pm_id(mat_step_left(q, bl)).is_pm_identity()) continue;

                    std::vector<std::int64_t> right_entries{b1};
                    right_entries.insert(right_entries.end(), r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
                    right_entries.push_back(bl);
                    std::vector<std::int64_t> left_entries(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
                    left_entries.front() = mod.sub(left_entries.front(), bl);
                    left_entries.back() = mod.sub(left_entries.back(), b1);

                    ReductionWitness w{member.transform, CTuple(mod, std::move(left_entries)),
                                       CTuple(mod, std::move(right_entries))};
                    const WitnessCheck check = validate_witness(t, w);
                    if (!check.ok) throw InternalError("reduction witness failed validation: " + check.reason);
                    return {ReductionVerdict::reducible, std::move(w)};
                }
            }
        }
    }
    return {ReductionVerdict::irreducible, std::nullopt};
}

}  // namespace friezemod
