#include "friezemod/ctuple.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "friezemod/errors.hpp"

namespace friezemod {

CTuple::CTuple(Modulus modulus, std::vector<std::int64_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("a tuple needs at least one entry");
    for (auto& e : entries_) e = modulus_.reduce(e);
}

CTuple CTuple::constant(Modulus modulus, std::int64_t value, std::size_t length) {
    return CTuple(modulus, std::vector<std::int64_t>(length, value));
}

CTuple CTuple::alternating(Modulus modulus, std::int64_t k, std::size_t length) {
    std::vector<std::int64_t> v(length);
    for (std::size_t i = 0; i < length; ++i) v[i] = (i % 2 == 0) ? k : -k;
    return CTuple(modulus, std::move(v));
}

CTuple CTuple::reversed() const {
    return CTuple(modulus_, std::vector<std::int64_t>(entries_.rbegin(), entries_.rend()));
}

CTuple CTuple::rotated(std::size_t by) const {
    std::vector<std::int64_t> v(entries_);
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(by % v.size()), v.end());
    return CTuple(modulus_, std::move(v));
}

CTuple CTuple::negated() const {
    std::vector<std::int64_t> v(entries_);
    for (auto& e : v) e = modulus_.neg(e);
    return CTuple(modulus_, std::move(v));
}

CTuple DihedralTransform::apply(const CTuple& t) const {
    return (reflected ? t.reversed() : t).rotated(rotation);
}

CTuple oplus(const CTuple& a, const CTuple& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.size() < 2 || b.size() < 2) throw InputError("oplus operands need length >= 2");
    const Modulus& m = a.modulus();
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    std::vector<std::int64_t> out;
    out.reserve(n + k - 2);
    out.push_back(m.add(a[0], b[k - 1]));
    for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(a[i]);
    out.push_back(m.add(a[n - 1], b[0]));
    for (std::size_t i = 1; i + 1 < k; ++i) out.push_back(b[i]);
    return CTuple(m, std::move(out));
}

std::vector<ClassMember> equivalence_class_with_transforms(const CTuple& t) {
    std::vector<ClassMember> members;
    members.reserve(2 * t.size());
    for (bool reflected : {false, true}) {
        for (std::size_t r = 0; r < t.size(); ++r) {
            DihedralTransform tr{r, reflected};
            members.push_back({tr.apply(t), tr});
        }
    }
    // Stable sort keeps the first producing transform in front of duplicates.
    std::stable_sort(members.begin(), members.end(),
                     [](const ClassMember& x, const ClassMember& y) { return x.tuple < y.tuple; });
    members.erase(std::unique(members.begin(), members.end(),
                              [](const ClassMember& x, const ClassMember& y) { return x.tuple == y.tuple; }),
                  members.end());
    return members;
}

std::vector<CTuple> equivalence_class(const CTuple& t) {
    std::vector<CTuple> out;
    for (auto& m : equivalence_class_with_transforms(t)) out.push_back(std::move(m.tuple));
    return out;
}

CTuple canonical_form(const CTuple& t) {
    CTuple best = t;
    for (bool reflected : {false, true}) {
        for (std::size_t r = 0; r < t.size(); ++r) {
            CTuple c = DihedralTransform{r, reflected}.apply(t);
            if (c < best) best = std::move(c);
        }
    }
    return best;
}

bool equivalent(const CTuple& a, const CTuple& b) {
    return a.modulus() == b.modulus() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

CTuple parse_tuple(const Modulus& modulus, std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
        if (!item.empty() && item.front() == '+') item.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw InputError("malformed tuple entry '" + std::string(item) + "'");
        }
        values.push_back(v);
        start = end + 1;
    }
    return CTuple(modulus, std::move(values));
}

std::string format_tuple(const CTuple& t, bool balanced) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(balanced ? t.modulus().balanced(t[i]) : t[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CTuple& t) { return os << '(' << format_tuple(t) << ')'; }

}  // namespace friezemod
