#pragma once

/**
 * @file tables.hpp
 * @brief Monomial size tables and the 2-dynomial reducibility table.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "friezemod/dynomial.hpp"
#include "friezemod/monomial.hpp"

namespace friezemod {

enum class TableFormat { csv, md };

// Rows k, columns N. Cell (k, N) is filled when k <= N - 1.
struct MonomialTable {
    std::vector<std::int64_t> moduli;
    std::vector<std::vector<std::optional<std::size_t>>> sizes;  // sizes[k][column]
    std::size_t rows() const noexcept { return sizes.size(); }
};

// Rows 0..max((N-1)/2), or 0..max(N)-1 with all_k. Every modulus must be prime.
MonomialTable monomial_size_table(const std::vector<std::int64_t>& primes, bool all_k, unsigned jobs = 1);

std::string render_monomial_table(const MonomialTable& table, TableFormat format);

// Primes N = +-1 (mod 12) with 5 < N <= limit.
std::vector<std::int64_t> two_dynomial_primes(std::int64_t limit);

// analyze_dynomial(N, 2) for each N, in the given order.
std::vector<DynomialRecord> two_dynomial_table(const std::vector<std::int64_t>& moduli, WorkBudget& budget,
                                               unsigned jobs = 1);

// Columns N,size,verdict,roots,witness_length,witness_boundary. Roots are
// space-separated; balanced prints representatives in (-N/2, N/2].
std::string render_two_dynomial_table(const std::vector<DynomialRecord>& rows, TableFormat format,
                                      bool balanced = false);

// A reducing part (r, -2, 2, ..., -2, r) of the minimal 2-dynomial solution mod N.
struct ReferencePart {
    std::int64_t modulus = 0;
    std::int64_t boundary = 0;
    std::size_t length = 0;
};

// Lines "N,boundary,length"; '#' comments and the header line are skipped.
std::vector<ReferencePart> parse_reference_parts(std::string_view csv);

// The bundled list of known reducing parts.
const std::vector<ReferencePart>& bundled_reference_parts();

// The part is a solution of the stated length and splits the minimal
// 2-dynomial tuple with a witness that validates.
WitnessCheck verify_reference_part(const ReferencePart& part);

}  // namespace friezemod
