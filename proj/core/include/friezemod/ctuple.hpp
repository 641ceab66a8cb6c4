#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "friezemod/residue.hpp"

namespace friezemod {

// A non-empty tuple (a_1, ..., a_n) over Z/NZ, stored as canonical representatives.
class CTuple {
public:
    CTuple(Modulus modulus, std::vector<std::int64_t> entries);
    CTuple(Modulus modulus, std::initializer_list<std::int64_t> entries)
        : CTuple(modulus, std::vector<std::int64_t>(entries)) {}

    // (value, ..., value) of the given length.
    static CTuple constant(Modulus modulus, std::int64_t value, std::size_t length);

    // (k, -k, k, -k, ...) of the given length.
    static CTuple alternating(Modulus modulus, std::int64_t k, std::size_t length);

    const Modulus& modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const std::int64_t> reps() const noexcept { return entries_; }
    std::int64_t operator[](std::size_t i) const noexcept { return entries_[i]; }
    Residue at(std::size_t i) const { return Residue(modulus_, entries_.at(i)); }

    CTuple reversed() const;
    // Left rotation: result[i] = self[(i + by) mod n].
    CTuple rotated(std::size_t by) const;
    CTuple negated() const;

    friend bool operator==(const CTuple& a, const CTuple& b) noexcept {
        return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
    }
    // Lexicographic on representatives; only meaningful for a common modulus.
    friend auto operator<=>(const CTuple& a, const CTuple& b) noexcept { return a.entries_ <=> b.entries_; }

private:
    Modulus modulus_;
    std::vector<std::int64_t> entries_;
};

// One element of the dihedral action: optionally reverse, then rotate left.
struct DihedralTransform {
    std::size_t rotation = 0;
    bool reflected = false;

    CTuple apply(const CTuple& t) const;
    friend bool operator==(const DihedralTransform&, const DihedralTransform&) = default;
};

// (a_1 + b_m, a_2, ..., a_{n-1}, a_n + b_1, b_2, ..., b_{m-1}).
// Both operands need length >= 2 and a common modulus.
CTuple oplus(const CTuple& a, const CTuple& b);

struct ClassMember {
    CTuple tuple;
    DihedralTransform transform;  // first transform (unreflected before reflected, rotation ascending) producing it
};

// Distinct rotations of t and of its reversal, sorted lexicographically.
std::vector<ClassMember> equivalence_class_with_transforms(const CTuple& t);
std::vector<CTuple> equivalence_class(const CTuple& t);

// Lexicographically smallest member of the equivalence class.
CTuple canonical_form(const CTuple& t);

bool equivalent(const CTuple& a, const CTuple& b);

// Comma-separated decimal integers, normalized mod N. Whitespace around items is ignored.
CTuple parse_tuple(const Modulus& modulus, std::string_view text);

// "a1,a2,...,an"; balanced renders representatives in (-N/2, N/2].
std::string format_tuple(const CTuple& t, bool balanced = false);

std::ostream& operator<<(std::ostream& os, const CTuple& t);

}  // namespace friezemod
