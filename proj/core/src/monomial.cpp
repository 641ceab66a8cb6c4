#include "friezemod/monomial.hpp"

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"

namespace friezemod {

namespace {

// n with l^n == value, or 0 when value is not a power of l.
std::int64_t exact_log(std::int64_t value, std::int64_t l) {
    if (l < 2) return 0;
    std::int64_t n = 0;
    while (value > 1 && value % l == 0) {
        value /= l;
        ++n;
    }
    return value == 1 ? n : 0;
}

std::int64_t int_pow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

ReductionWitness checked_identity_split(const CTuple& original, CTuple left, CTuple right) {
    ReductionWitness w{DihedralTransform{}, std::move(left), std::move(right)};
    const WitnessCheck check = validate_witness(original, w);
    if (!check.ok) throw InternalError("explicit decomposition failed: " + check.reason);
    return w;
}

// (edge, fill, ..., fill, edge) of the given length.
CTuple framed(const Modulus& m, std::int64_t edge, std::int64_t fill, std::size_t length) {
    std::vector<std::int64_t> v(length, fill);
    v.front() = edge;
    v.back() = edge;
    return CTuple(m, std::move(v));
}

}  // namespace

MonomialRecord minimal_monomial_size(const Modulus& modulus, std::int64_t k) {
    const Residue kr(modulus, k);
    const auto cap = static_cast<std::size_t>(3 * modulus.value());
    Mat2 power = Mat2::step(modulus, kr.rep());
    std::size_t size = 1;
    PlusMinusId sign = classify_pm_id(power);
    while (!sign.is_pm_identity()) {
        power = mat_step_left(power, kr.rep());
        ++size;
        if (size > cap) {
            throw InternalError("monomial size exceeded the 3N bound for N=" + std::to_string(modulus.value()));
        }
        sign = classify_pm_id(power);
    }
    MonomialRecord rec{modulus, kr, size, sign, ReductionVerdict::unknown, {}, std::nullopt};
    return rec;
}

MonomialRecord analyze_monomial(const Modulus& modulus, std::int64_t k, WorkBudget& budget) {
    MonomialRecord rec = minimal_monomial_size(modulus, k);
    const std::int64_t n = modulus.value();
    const std::int64_t kv = rec.k.rep();
    auto decide = [&](ReductionVerdict v, std::string source) {
        rec.verdict = v;
        rec.verdict_source = std::move(source);
        return rec;
    };

    if (rec.size == 2) return decide(ReductionVerdict::not_applicable, "size-2 solution");
    if (rec.size == 3) return decide(ReductionVerdict::irreducible, "size 3");
    if (modulus.is_prime()) return decide(ReductionVerdict::irreducible, "prime-modulus theorem");
    if (kv == 2 % n) return decide(ReductionVerdict::irreducible, "k=2 theorem");
    if (n % 2 == 0 && kv == n / 2) return decide(ReductionVerdict::irreducible, "half-modulus theorem");

    // k = N/l with l^2 | N and minimal size 2l: reducible for l >= 3.
    for (std::int64_t l = 3; l * l <= n; ++l) {
        if (n % (l * l) == 0 && kv == n / l && rec.size == static_cast<std::size_t>(2 * l)) {
            const CTuple t = rec.tuple();
            const CTuple right(modulus, {-kv, kv, kv, -kv});
            const CTuple left = framed(modulus, 2 * kv, kv, static_cast<std::size_t>(2 * l - 2));
            rec.witness = checked_identity_split(t, left, right);
            return decide(ReductionVerdict::reducible, "divisor theorem");
        }
    }
    // N = l^e, k = l, minimal size 2 l^(e-1).
    for (std::int64_t l = 3; l * l <= n; ++l) {
        const std::int64_t e = exact_log(n, l);
        if (e >= 3 && kv == l && rec.size == static_cast<std::size_t>(2 * int_pow(l, e - 1))) {
            ReductionResult r = prime_power_reduction(modulus, l);
            rec.witness = std::move(r.witness);
            return decide(r.verdict, "prime-power theorem");
        }
    }
    if (rec.size == 4) {
        // Reducible size-4 solutions are sums of two size-3 ones and contain +-1.
        const bool has_unit = kv == 1 || kv == n - 1;
        return decide(has_unit ? ReductionVerdict::reducible : ReductionVerdict::irreducible,
                      "size-4 classification");
    }

    ReductionResult r = find_reduction(rec.tuple(), budget);
    rec.witness = std::move(r.witness);
    return decide(r.verdict, "search");
}

bool check_prime_monomial_sizes(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
    const Modulus m(p);
    for (std::int64_t k = 0; k < p; ++k) {
        const std::size_t size = minimal_monomial_size(m, k).size;
        if (k == 2 || k == p - 2) {
            if (size != static_cast<std::size_t>(p)) return false;
        } else {
            const auto lo = static_cast<std::size_t>((p - 1) / 2);
            const auto hi = static_cast<std::size_t>((p + 1) / 2);
            if (lo % size != 0 && hi % size != 0) return false;
        }
    }
    return true;
}

bool check_monomial_symmetry(const Modulus& modulus) {
    for (std::int64_t k = 0; k < modulus.value(); ++k) {
        if (minimal_monomial_size(modulus, k).size != minimal_monomial_size(modulus, -k).size) return false;
    }
    return true;
}

MonomialRecord half_modulus_analysis(const Modulus& modulus) {
    const std::int64_t n = modulus.value();
    if (n < 4 || n % 2 != 0) throw InputError("half-modulus analysis needs an even N >= 4");
    MonomialRecord rec = minimal_monomial_size(modulus, n / 2);
    const std::size_t expected = (n % 4 == 0) ? 4 : 6;
    if (rec.size != expected) {
        throw InternalError("half-modulus size " + std::to_string(rec.size) + " for N=" + std::to_string(n));
    }
    rec.verdict = ReductionVerdict::irreducible;
    rec.verdict_source = "half-modulus theorem";
    return rec;
}

bool check_divisor_monomial(const Modulus& modulus, std::int64_t l) {
    const std::int64_t n = modulus.value();
    if (l < 2 || n % (l * l) != 0) {
        throw InputError(std::to_string(l) + "^2 does not divide " + std::to_string(n));
    }
    const CTuple t = CTuple::constant(modulus, n / l, static_cast<std::size_t>(2 * l));
    if (!is_solution(t)) return false;
    if (is_prime(l)) return minimal_monomial_size(modulus, n / l).size == static_cast<std::size_t>(2 * l);
    return true;
}

CTuple prime_power_tuple(std::int64_t l, std::int64_t n) {
    if (l < 2 || n < 2) throw InputError("need l >= 2 and n >= 2");
    return CTuple::constant(Modulus(int_pow(l, n)), l, static_cast<std::size_t>(2 * int_pow(l, n - 1)));
}

ReductionResult prime_power_reduction(const Modulus& modulus, std::int64_t l) {
    const std::int64_t e = exact_log(modulus.value(), l);
    if (l < 2 || e < 2) {
        throw InputError(std::to_string(modulus.value()) + " is not l^n for l=" + std::to_string(l) + ", n >= 2");
    }
    if (l == 2) return {ReductionVerdict::irreducible, std::nullopt};

    const CTuple t = prime_power_tuple(l, e);
    if (e == 2) {
        const CTuple right(modulus, {-l, l, l, -l});
        const CTuple left = framed(modulus, 2 * l, l, static_cast<std::size_t>(2 * l - 2));
        return {ReductionVerdict::reducible, checked_identity_split(t, left, right)};
    }
    const std::int64_t big = 2 * int_pow(l, e - 1);
    const auto right_len = static_cast<std::size_t>(big - 4 * int_pow(l, e - 2) + 2);
    const auto left_len = static_cast<std::size_t>(4 * int_pow(l, e - 2));
    const CTuple right = framed(modulus, big, l, right_len);
    const CTuple left = framed(modulus, l - big, l, left_len);
    return {ReductionVerdict::reducible, checked_identity_split(t, left, right)};
}

}  // namespace friezemod
