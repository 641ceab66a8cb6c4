#include "friezemod/tables.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "friezemod/errors.hpp"
#include "friezemod/number_theory.hpp"
#include "friezemod/parallel.hpp"

namespace friezemod {

extern const char* const kReferencePartsCsv;

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string markdown(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = std::max<std::size_t>(header[c].size(), 3);
        for (const auto& row : body) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t c = 0; c < cells.size(); ++c) out << ' ' << pad(cells[c], width[c]) << " |";
        out << '\n';
    };
    line(header);
    out << '|';
    for (std::size_t c = 0; c < header.size(); ++c) out << std::string(width[c] + 1, '-') << ":|";
    out << '\n';
    for (const auto& row : body) line(row);
    return out.str();
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
        out << '\n';
    };
    line(header);
    for (const auto& row : body) line(row);
    return out.str();
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("bad integer '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

MonomialTable monomial_size_table(const std::vector<std::int64_t>& primes, bool all_k, unsigned jobs) {
    MonomialTable table;
    table.moduli = primes;
    std::int64_t last_row = -1;
    for (std::int64_t p : primes) {
        if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
        last_row = std::max(last_row, all_k ? p - 1 : (p - 1) / 2);
    }
    const std::size_t rows = static_cast<std::size_t>(last_row + 1);
    const std::size_t cols = primes.size();
    table.sizes.assign(rows, std::vector<std::optional<std::size_t>>(cols));
    parallel_for(rows * cols, jobs, [&](std::size_t cell) {
        const std::size_t k = cell / cols;
        const std::size_t c = cell % cols;
        const std::int64_t p = primes[c];
        if (static_cast<std::int64_t>(k) <= p - 1) {
            table.sizes[k][c] = minimal_monomial_size(Modulus(p), static_cast<std::int64_t>(k)).size;
        }
    });
    return table;
}

std::string render_monomial_table(const MonomialTable& table, TableFormat format) {
    std::vector<std::string> header{"k"};
    for (std::int64_t p : table.moduli) header.push_back(std::to_string(p));
    std::vector<std::vector<std::string>> body;
    for (std::size_t k = 0; k < table.rows(); ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (const auto& cell : table.sizes[k]) row.push_back(cell ? std::to_string(*cell) : "");
        body.push_back(std::move(row));
    }
    return format == TableFormat::csv ? csv(header, body) : markdown(header, body);
}

std::vector<std::int64_t> two_dynomial_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t p : primes_between(7, limit)) {
        if (p % 12 == 1 || p % 12 == 11) out.push_back(p);
    }
    return out;
}

std::vector<DynomialRecord> two_dynomial_table(const std::vector<std::int64_t>& moduli, WorkBudget& budget,
                                               unsigned jobs) {
    std::vector<std::optional<DynomialRecord>> slots(moduli.size());
    parallel_for(moduli.size(), jobs, [&](std::size_t i) {
        slots[i] = analyze_dynomial(Modulus(moduli[i]), 2, budget);
    });
    std::vector<DynomialRecord> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::string render_two_dynomial_table(const std::vector<DynomialRecord>& rows, TableFormat format, bool balanced) {
    const std::vector<std::string> header{"N", "size", "verdict", "roots", "witness_length", "witness_boundary"};
    std::vector<std::vector<std::string>> body;
    for (const DynomialRecord& r : rows) {
        const Modulus& m = r.modulus;
        auto show = [&](std::int64_t v) { return std::to_string(balanced ? m.balanced(v) : v); };
        std::vector<std::int64_t> roots = r.quad_roots;
        if (balanced) {
            std::sort(roots.begin(), roots.end(),
                      [&](std::int64_t a, std::int64_t b) { return m.balanced(a) < m.balanced(b); });
        }
        std::string root_text;
        for (std::int64_t x : roots) root_text += (root_text.empty() ? "" : " ") + show(x);
        std::string wlen, wbound;
        if (r.witness) {
            wlen = std::to_string(r.witness->right.size());
            wbound = show(r.witness->right[0]);
        }
        body.push_back({std::to_string(m.value()), std::to_string(r.size), to_string(r.verdict), root_text, wlen,
                        wbound});
    }
    return format == TableFormat::csv ? csv(header, body) : markdown(header, body);
}

std::vector<ReferencePart> parse_reference_parts(std::string_view text) {
    std::vector<ReferencePart> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#' || line.front() == 'N') continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
            throw InputError("malformed reference part line '" + std::string(line) + "'");
        }
        ReferencePart part;
        part.modulus = parse_int(line.substr(0, c1));
        part.boundary = parse_int(line.substr(c1 + 1, c2 - c1 - 1));
        const std::int64_t len = parse_int(line.substr(c2 + 1));
        if (len < 3) throw InputError("reference part length must be >= 3");
        part.length = static_cast<std::size_t>(len);
        out.push_back(part);
    }
    return out;
}

const std::vector<ReferencePart>& bundled_reference_parts() {
    static const std::vector<ReferencePart> parts = parse_reference_parts(kReferencePartsCsv);
    return parts;
}

WitnessCheck verify_reference_part(const ReferencePart& part) {
    if (part.modulus < 5 || !is_prime(part.modulus)) return {false, "modulus is not a prime >= 5"};
    if (part.length % 2 == 0) return {false, "part length must be odd"};
    const Modulus m(part.modulus);
    const CTuple right = boundary_part(m, part.boundary, -2, part.length);
    if (right.size() != part.length) return {false, "part has the wrong length"};
    if (!is_solution(right)) return {false, "part is not a solution"};
    const CTuple t = minimal_dynomial_size(m, 2).tuple();
    const auto w = witness_for_part(t, right);
    if (!w) return {false, "part does not split the minimal 2-dynomial solution"};
    return validate_witness(t, *w);
}

}  // namespace friezemod
