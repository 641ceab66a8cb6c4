#pragma once

/**
 * @file mat2.hpp
 * @brief 2x2 matrices over Z/NZ, the products M_n and continuants.
 *
 * M_n(a_1, ..., a_n) is the product [[a_n, -1], [1, 0]] * ... * [[a_1, -1], [1, 0]]
 * with a_n leftmost. Its entries are continuants:
 *
 *     M_n = [[ K_n(a_1..a_n),      -K_{n-1}(a_2..a_n)     ],
 *            [ K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1}) ]]
 *
 * where K_i = a_i K_{i-1} - K_{i-2}, K_0 = 1, K_{-1} = 0.
 */

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "friezemod/residue.hpp"

namespace friezemod {

class Mat2 {
public:
    // Entries in row-major order; reduced on construction.
    Mat2(Modulus modulus, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22);

    static Mat2 identity(Modulus modulus);

    // The generator [[a, -1], [1, 0]], i.e. M_1(a).
    static Mat2 step(Modulus modulus, std::int64_t a);

    const Modulus& modulus() const noexcept { return modulus_; }

    // Canonical representative of entry (row, col), zero-based.
    std::int64_t at(int row, int col) const noexcept { return e_[static_cast<std::size_t>(2 * row + col)]; }
    Residue entry(int row, int col) const { return Residue(modulus_, at(row, col)); }

    bool is_identity() const noexcept { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }
    bool is_minus_identity() const noexcept {
        const std::int64_t m1 = modulus_.value() - 1;
        return e_[0] == m1 && e_[1] == 0 && e_[2] == 0 && e_[3] == m1;
    }

    friend bool operator==(const Mat2& x, const Mat2& y) noexcept {
        return x.modulus_ == y.modulus_ && x.e_ == y.e_;
    }

private:
    Modulus modulus_;
    std::array<std::int64_t, 4> e_;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_identity(Modulus modulus);
Mat2 mat_neg(const Mat2& x);
Residue mat_det(const Mat2& x);

// Inverse of a determinant-one matrix: [[d, -b], [-c, a]]. Throws InputError otherwise.
Mat2 mat_inverse_sl2(const Mat2& x);

// x^e by iterated multiplication.
Mat2 mat_pow(const Mat2& x, std::uint64_t e);

// Left-multiply by the generator: step(a) * x, without building the generator.
Mat2 mat_step_left(const Mat2& x, std::int64_t a);

enum class PmSign { plus = 1, minus = -1, none = 0 };

struct PlusMinusId {
    PmSign sign = PmSign::none;
    // Set when N = 2, where Id = -Id; sign is then reported as plus.
    bool ambiguous = false;

    bool is_pm_identity() const noexcept { return sign != PmSign::none; }
    friend bool operator==(const PlusMinusId&, const PlusMinusId&) = default;
};

PlusMinusId classify_pm_id(const Mat2& x);

// M_n(a_1, ..., a_n) by direct multiplication. Entries need not be canonical.
// Throws InputError for an empty sequence; checks det = 1 on the result.
Mat2 m_n(const Modulus& modulus, std::span<const std::int64_t> entries);

// Continuant K_n of the sequence by the three-term recurrence; the empty
// sequence gives K_0 = 1.
Residue continuant(const Modulus& modulus, std::span<const std::int64_t> entries);

// K_n(x, ..., x) as the alternating binomial sum over k <= n/2 of
// (-1)^k C(n-k, k) x^(n-2k), reduced mod N.
Residue continuant_constant_closed_form(const Modulus& modulus, const Residue& x, std::int64_t n);

// M_n assembled from the four continuants; independent route to m_n.
Mat2 m_n_via_continuants(const Modulus& modulus, std::span<const std::int64_t> entries);

// K_n(x_1..x_n) == (-1)^n K_n(-x_1..-x_n).
bool continuant_sign_flip_holds(const Modulus& modulus, std::span<const std::int64_t> entries);

std::ostream& operator<<(std::ostream& os, const Mat2& x);

}  // namespace friezemod
