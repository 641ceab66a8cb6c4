#include "friezemod/dynomial.hpp"

#include <algorithm>
#include <array>

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"

namespace friezemod {

namespace {

void require_prime_at_least_5(std::int64_t n) {
    if (n < 5 || !is_prime(n)) throw InputError("expected a prime N >= 5, got " + std::to_string(n));
}

}  // namespace

DynomialRecord minimal_dynomial_size(const Modulus& modulus, std::int64_t k) {
    const Residue kr(modulus, k);
    const Mat2 pair = mat_step_left(Mat2::step(modulus, kr.rep()), modulus.neg(kr.rep()));
    const auto cap = static_cast<std::size_t>(6 * modulus.value());
    Mat2 power = pair;
    std::size_t size = 2;
    PlusMinusId sign = classify_pm_id(power);
    while (!sign.is_pm_identity()) {
        power = mat_mul(pair, power);
        size += 2;
        if (size > cap) {
            throw InternalError("dynomial size exceeded the 6N bound for N=" + std::to_string(modulus.value()));
        }
        sign = classify_pm_id(power);
    }
    DynomialRecord rec{modulus, kr, size, sign, false, {}, ReductionVerdict::unknown, {}, std::nullopt};
    return rec;
}

std::vector<std::int64_t> boundary_roots(const Modulus& modulus, std::int64_t k, int alpha, Parity parity) {
    if (alpha != 1 && alpha != -1) throw InputError("alpha must be +1 or -1");
    const std::int64_t s = modulus.reduce(alpha == 1 ? k : -(k % modulus.value()));
    const std::int64_t c = modulus.reduce(parity == Parity::odd ? 2 : 0);
    std::vector<std::int64_t> roots;
    const std::int64_t n = modulus.value();
    if (modulus.is_prime() && n > 2) {
        // a^2 + s a - c = 0: a = (-s +- sqrt(s^2 + 4c)) / 2
        const std::int64_t disc = modulus.add(modulus.mul(s, s), modulus.mul(4 % n, c));
        const auto root = sqrt_mod_prime(disc, n);
        if (!root) return roots;
        const std::int64_t half = res_inv(Residue(modulus, 2)).rep();
        for (std::int64_t d : {*root, modulus.neg(*root)}) {
            roots.push_back(modulus.mul(modulus.sub(d, s), half));
        }
    } else {
        for (std::int64_t a = 0; a < n; ++a) {
            if (modulus.mul(a, modulus.add(s, a)) == c) roots.push_back(a);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::int64_t> quad_roots(const Modulus& modulus, std::int64_t k) {
    return boundary_roots(modulus, k, -1, Parity::odd);
}

bool discriminant_criterion(std::int64_t n, std::int64_t k) {
    require_prime_at_least_5(n);
    const Modulus m(n);
    const Residue kr(m, k);
    if (kr.is_zero()) return false;
    return !is_square(kr * kr + Residue(m, 8));
}

bool two_dynomial_criterion(std::int64_t n) {
    require_prime_at_least_5(n);
    return !three_is_square(n);
}

CTuple boundary_part(const Modulus& modulus, std::int64_t boundary, std::int64_t s, std::size_t length) {
    if (length < 3 || length % 2 == 0) throw InputError("boundary part needs an odd length >= 3");
    std::vector<std::int64_t> v(length);
    for (std::size_t i = 1; i + 1 < length; ++i) v[i] = (i % 2 == 1) ? s : -s;
    v.front() = boundary;
    v.back() = boundary;
    return CTuple(modulus, std::move(v));
}

std::optional<ReductionWitness> witness_for_part(const CTuple& t, const CTuple& part) {
    const std::size_t n = t.size();
    const std::size_t l = part.size();
    if (l < 3 || l + 1 > n || !(part.modulus() == t.modulus())) return std::nullopt;
    const Modulus& mod = t.modulus();
    const std::size_t m = n - l + 2;
    const auto interior = part.reps().subspan(1, l - 2);
    for (const ClassMember& member : equivalence_class_with_transforms(t)) {
        const auto r = member.tuple.reps();
        if (!std::equal(interior.begin(), interior.end(), r.begin() + static_cast<std::ptrdiff_t>(m))) continue;
        std::vector<std::int64_t> left(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m));
        left.front() = mod.sub(left.front(), part[l - 1]);
        left.back() = mod.sub(left.back(), part[0]);
        ReductionWitness w{member.transform, CTuple(mod, std::move(left)), part};
        if (validate_witness(t, w).ok) return w;
    }
    return std::nullopt;
}

StructuredResult structured_dynomial_reducibility(const Modulus& modulus, std::int64_t k) {
    const std::int64_t n_mod = modulus.value();
    require_prime_at_least_5(n_mod);
    const std::int64_t kv = modulus.reduce(k);
    if (kv == 0 || kv == 1 || kv == n_mod - 1) {
        throw InputError("structured search needs k not in {0, 1, -1}");
    }
    const DynomialRecord rec = minimal_dynomial_size(modulus, kv);
    const CTuple t = rec.tuple();
    const std::size_t n = rec.size;
    const std::int64_t minus_one = n_mod - 1;

    StructuredResult out;
    out.result.verdict = ReductionVerdict::irreducible;

    // interiors[i] = product of the alternating interior starting with s = alpha k,
    // for alpha = -1 (i = 0) and +1 (i = 1); grown one entry per part length.
    const std::array<int, 2> alphas{-1, 1};
    std::array<std::int64_t, 2> first{modulus.neg(kv), kv};
    std::array<Mat2, 2> interiors{Mat2::step(modulus, first[0]), Mat2::step(modulus, first[1])};

    for (std::size_t l = 3; l + 1 <= n; ++l) {
        const std::size_t interior_len = l - 2;
        if (interior_len > 1) {
            for (std::size_t i = 0; i < 2; ++i) {
                const std::int64_t next = (interior_len % 2 == 1) ? first[i] : modulus.neg(first[i]);
                interiors[i] = mat_step_left(interiors[i], next);
            }
        }
        const Parity parity = (l % 2 == 1) ? Parity::odd : Parity::even;
        for (std::size_t i = 0; i < 2; ++i) {
            const std::int64_t s = first[i];
            for (std::int64_t a = 0; a < n_mod; ++a) {
                ++out.stats.candidates;
                // M(b) q = +-Id forces q's top row to be (0, +-1) and b = q22 q12.
                const Mat2 q = mat_mul(interiors[i], Mat2::step(modulus, a));
                if (q.at(0, 0) != 0 || (q.at(0, 1) != 1 && q.at(0, 1) != minus_one)) continue;
                const std::int64_t b = modulus.mul(q.at(1, 1), q.at(0, 1));
                if (!classify_pm_id(mat_step_left(q, b)).is_pm_identity()) continue;

                const std::int64_t lhs = modulus.mul(a, modulus.add(s, a));
                if (parity == Parity::odd) {
                    ++out.stats.odd_hits;
                    if (a != b || lhs != 2 % n_mod) {
                        throw InternalError("odd part with boundary (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ") breaks the boundary equation");
                    }
                } else {
                    ++out.stats.even_split_hits;
                    if (lhs != 0) {
                        throw InternalError("even part with boundary " + std::to_string(a) +
                                            " breaks the boundary equation");
                    }
                }
                std::vector<std::int64_t> entries(l);
                for (std::size_t j = 1; j + 1 < l; ++j) entries[j] = (j % 2 == 1) ? s : modulus.neg(s);
                entries.front() = a;
                entries.back() = b;
                auto w = witness_for_part(t, CTuple(modulus, std::move(entries)));
                if (!w) throw InternalError("structured hit did not reconstruct a valid witness");
                out.result = {ReductionVerdict::reducible, std::move(w)};
                out.part_length = l;
                out.alpha = alphas[i];
                return out;
            }
        }
    }
    return out;
}

DynomialRecord analyze_dynomial(const Modulus& modulus, std::int64_t k, WorkBudget& budget) {
    DynomialRecord rec = minimal_dynomial_size(modulus, k);
    const std::int64_t n = modulus.value();
    const std::int64_t kv = rec.k.rep();
    rec.quad_roots = quad_roots(modulus, kv);
    const bool prime5 = n >= 5 && modulus.is_prime();
    rec.criterion_applies = prime5 && discriminant_criterion(n, kv);

    auto decide = [&](ReductionVerdict v, std::string source) {
        rec.verdict = v;
        rec.verdict_source = std::move(source);
        return rec;
    };
    if (rec.size == 2) return decide(ReductionVerdict::not_applicable, "size-2 solution");
    if (rec.criterion_applies) return decide(ReductionVerdict::irreducible, "discriminant criterion");
    if (rec.size == 4) {
        const bool has_unit = kv == 1 || kv == n - 1;
        if (!has_unit) return decide(ReductionVerdict::irreducible, "size-4 classification");
    }
    if (prime5 && kv != 0 && kv != 1 && kv != n - 1) {
        StructuredResult s = structured_dynomial_reducibility(modulus, kv);
        rec.witness = std::move(s.result.witness);
        return decide(s.result.verdict, "structured search");
    }
    ReductionResult r = find_reduction(rec.tuple(), budget);
    rec.witness = std::move(r.witness);
    return decide(r.verdict, "search");
}

}  // namespace friezemod
