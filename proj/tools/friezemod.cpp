// friezemod: solutions of M_n(a_1, ..., a_n) = +-Id over Z/NZ from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "friezemod/dynomial.hpp"
#include "friezemod/errors.hpp"
#include "friezemod/monomial.hpp"
#include "friezemod/number_theory.hpp"
#include "friezemod/solution.hpp"
#include "friezemod/tables.hpp"

using json = nlohmann::ordered_json;
using namespace friezemod;

namespace {

constexpr const char* kFormatVersion = "1";

constexpr int kExitDecided = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Common {
    std::string format = "text";
    unsigned jobs = 1;
};

struct TupleArgs {
    std::int64_t modulus = 0;
    std::string tuple;
    std::uint64_t max_work = kDefaultWorkLimit;
};

json tuple_json(const CTuple& t) {
    json a = json::array();
    for (std::int64_t v : t.reps()) a.push_back(v);
    return a;
}

std::string paren(const CTuple& t) { return "(" + format_tuple(t) + ")"; }

json sign_json(const PlusMinusId& s) {
    if (!s.is_pm_identity()) return nullptr;
    return s.sign == PmSign::plus ? 1 : -1;
}

json witness_json(const ReductionWitness& w) {
    return json{{"transform", {{"rotation", w.transform.rotation}, {"reflected", w.transform.reflected}}},
                {"left", tuple_json(w.left)},
                {"right", tuple_json(w.right)}};
}

void print_witness_text(std::ostream& os, const ReductionWitness& w) {
    os << "transform: rotate " << w.transform.rotation << (w.transform.reflected ? " after reversal" : "") << '\n'
       << "left:  " << paren(w.left) << '\n'
       << "right: " << paren(w.right) << '\n';
}

void emit_json(const std::string& command, json inputs, json result, std::uint64_t work_spent) {
    json env{{"command", command},
             {"format_version", kFormatVersion},
             {"inputs", std::move(inputs)},
             {"result", std::move(result)},
             {"work_spent", work_spent}};
    std::cout << env.dump(2) << '\n';
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (c.format == f) return;
    }
    throw InputError("--format " + c.format + " is not available for this command");
}

int exit_for(ReductionVerdict v) { return v == ReductionVerdict::unknown ? kExitBudget : kExitDecided; }

int run_check(const Common& c, const TupleArgs& a) {
    require_format(c, {"text", "json"});
    const Modulus m(a.modulus);
    const CTuple t = parse_tuple(m, a.tuple);
    const SolutionVerdict v = check_solution(t);
    if (c.format == "json") {
        emit_json("check", {{"modulus", a.modulus}, {"tuple", tuple_json(t)}},
                  {{"is_solution", v.is_solution}, {"sign", sign_json(v.sign)}}, 0);
    } else if (v.is_solution) {
        std::cout << "solution, sign " << (v.sign.sign == PmSign::plus ? "+1" : "-1") << '\n';
    } else {
        std::cout << "not a solution\n";
    }
    return kExitDecided;
}

int run_reduce(const Common& c, const TupleArgs& a) {
    require_format(c, {"text", "json"});
    const Modulus m(a.modulus);
    const CTuple t = parse_tuple(m, a.tuple);
    WorkBudget budget(a.max_work);
    const ReductionResult r = find_reduction(t, budget);
    if (c.format == "json") {
        json result{{"verdict", to_string(r.verdict)}};
        result["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
        emit_json("reduce", {{"modulus", a.modulus}, {"tuple", tuple_json(t)}, {"max_work", a.max_work}},
                  std::move(result), budget.spent());
    } else {
        std::cout << to_string(r.verdict) << '\n';
        if (r.witness) print_witness_text(std::cout, *r.witness);
        if (r.verdict == ReductionVerdict::unknown) {
            std::cout << "work limit of " << a.max_work << " units reached\n";
        }
    }
    return exit_for(r.verdict);
}

struct RecordArgs {
    std::int64_t modulus = 0;
    std::int64_t k = 0;
    std::uint64_t max_work = kDefaultWorkLimit;
};

template <typename Record>
json record_json(const Record& r) {
    json out{{"size", r.size},
             {"sign", sign_json(r.sign)},
             {"verdict", to_string(r.verdict)},
             {"verdict_source", r.verdict_source}};
    out["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    return out;
}

template <typename Record>
void print_record_text(const Record& r) {
    std::cout << "size: " << r.size << '\n'
              << "verdict: " << to_string(r.verdict) << " (" << r.verdict_source << ")\n";
    if (r.witness) print_witness_text(std::cout, *r.witness);
}

int run_monomial(const Common& c, const RecordArgs& a) {
    require_format(c, {"text", "json"});
    WorkBudget budget(a.max_work);
    const MonomialRecord r = analyze_monomial(Modulus(a.modulus), a.k, budget);
    if (c.format == "json") {
        json result = record_json(r);
        emit_json("monomial", {{"modulus", a.modulus}, {"k", r.k.rep()}}, std::move(result), budget.spent());
    } else {
        print_record_text(r);
    }
    return exit_for(r.verdict);
}

int run_dynomial(const Common& c, const RecordArgs& a) {
    require_format(c, {"text", "json"});
    WorkBudget budget(a.max_work);
    const DynomialRecord r = analyze_dynomial(Modulus(a.modulus), a.k, budget);
    if (c.format == "json") {
        json result = record_json(r);
        result["criterion_applies"] = r.criterion_applies;
        result["quad_roots"] = r.quad_roots;
        emit_json("dynomial", {{"modulus", a.modulus}, {"k", r.k.rep()}}, std::move(result), budget.spent());
    } else {
        std::cout << "roots of X(X-k)=2:";
        for (std::int64_t x : r.quad_roots) std::cout << ' ' << x;
        std::cout << (r.quad_roots.empty() ? " none\n" : "\n");
        print_record_text(r);
    }
    return exit_for(r.verdict);
}

struct MonomialTableArgs {
    std::vector<std::int64_t> primes;
    std::int64_t up_to = 0;
    std::int64_t from = 2;
    bool all_k = false;
};

int run_monomial_table(const Common& c, const MonomialTableArgs& a) {
    std::vector<std::int64_t> primes = a.primes;
    if (a.up_to > 0) primes = primes_between(a.from, a.up_to);
    if (primes.empty()) throw InputError("no primes selected; use --primes or --primes-up-to");
    const MonomialTable table = monomial_size_table(primes, a.all_k, c.jobs);
    if (c.format == "json") {
        json rows = json::array();
        for (std::size_t k = 0; k < table.rows(); ++k) {
            json cells = json::array();
            for (const auto& cell : table.sizes[k]) cells.push_back(cell ? json(*cell) : json(nullptr));
            rows.push_back({{"k", k}, {"sizes", std::move(cells)}});
        }
        emit_json("monomial-table", {{"primes", primes}, {"all_k", a.all_k}},
                  {{"moduli", primes}, {"rows", std::move(rows)}}, 0);
    } else {
        std::cout << render_monomial_table(table, c.format == "csv" ? TableFormat::csv : TableFormat::md);
    }
    return kExitDecided;
}

struct DynomialTableArgs {
    std::int64_t up_to = 500;
    bool verify_reference = false;
    bool balanced = false;
    std::uint64_t max_work = kDefaultWorkLimit;
};

int run_dynomial2_table(const Common& c, const DynomialTableArgs& a) {
    if (a.up_to < 2) throw InputError("--up-to must be at least 2");
    WorkBudget budget(a.max_work);
    const std::vector<DynomialRecord> rows = two_dynomial_table(two_dynomial_primes(a.up_to), budget, c.jobs);
    bool any_unknown = false;
    for (const auto& r : rows) any_unknown = any_unknown || r.verdict == ReductionVerdict::unknown;

    std::vector<std::pair<ReferencePart, WitnessCheck>> checks;
    if (a.verify_reference) {
        for (const ReferencePart& p : bundled_reference_parts()) {
            if (p.modulus <= a.up_to) checks.emplace_back(p, verify_reference_part(p));
        }
    }
    bool all_ok = true;
    for (const auto& [p, chk] : checks) all_ok = all_ok && chk.ok;

    if (c.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json row{{"N", r.modulus.value()}, {"size", r.size}, {"verdict", to_string(r.verdict)}};
            json roots = json::array();
            for (std::int64_t x : r.quad_roots) roots.push_back(a.balanced ? r.modulus.balanced(x) : x);
            row["roots"] = std::move(roots);
            row["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
            out.push_back(std::move(row));
        }
        json result{{"rows", std::move(out)}};
        if (a.verify_reference) {
            json v = json::array();
            for (const auto& [p, chk] : checks) {
                v.push_back({{"N", p.modulus}, {"boundary", p.boundary}, {"length", p.length}, {"ok", chk.ok},
                             {"reason", chk.reason}});
            }
            result["reference_parts"] = std::move(v);
        }
        emit_json("dynomial2-table", {{"up_to", a.up_to}, {"balanced", a.balanced}}, std::move(result),
                  budget.spent());
    } else {
        std::cout << render_two_dynomial_table(rows, c.format == "csv" ? TableFormat::csv : TableFormat::md,
                                               a.balanced);
        if (a.verify_reference) {
            std::size_t passed = 0;
            for (const auto& [p, chk] : checks) {
                if (chk.ok) {
                    ++passed;
                } else {
                    std::cerr << "reference part N=" << p.modulus << " boundary " << p.boundary << " length "
                              << p.length << ": " << chk.reason << '\n';
                }
            }
            std::cerr << passed << "/" << checks.size() << " reference parts verified\n";
        }
    }
    if (!all_ok) return kExitInput;
    return any_unknown ? kExitBudget : kExitDecided;
}

struct EnumerateArgs {
    std::int64_t modulus = 0;
    std::size_t size = 0;
    bool irreducible_only = false;
    bool up_to_equivalence = false;
    std::uint64_t max_work = kDefaultWorkLimit;
};

int run_enumerate(const Common& c, const EnumerateArgs& a) {
    require_format(c, {"text", "csv", "json"});
    const Modulus m(a.modulus);
    WorkBudget budget(a.max_work);
    const bool canonical = a.up_to_equivalence || a.irreducible_only;
    std::vector<CTuple> found = enumerate_solutions(m, a.size, canonical, budget, c.jobs);
    bool unknown = false;
    if (a.irreducible_only) {
        if (a.size < 3) throw InputError("--irreducible-only needs --size >= 3");
        std::vector<CTuple> kept;
        for (const CTuple& t : found) {
            const ReductionResult r = find_reduction(t, budget);
            if (r.verdict == ReductionVerdict::unknown) {
                unknown = true;
                break;
            }
            if (r.verdict == ReductionVerdict::irreducible) kept.push_back(t);
        }
        found = std::move(kept);
    }
    if (c.format == "json") {
        json list = json::array();
        for (const CTuple& t : found) list.push_back(tuple_json(t));
        emit_json("enumerate",
                  {{"modulus", a.modulus},
                   {"size", a.size},
                   {"irreducible_only", a.irreducible_only},
                   {"up_to_equivalence", canonical}},
                  {{"count", found.size()}, {"complete", !unknown}, {"solutions", std::move(list)}},
                  budget.spent());
    } else {
        for (const CTuple& t : found) std::cout << (c.format == "csv" ? format_tuple(t) : paren(t)) << '\n';
        if (unknown) std::cerr << "work limit reached; list is incomplete\n";
    }
    return unknown ? kExitBudget : kExitDecided;
}

void add_common(CLI::App* sub, Common& c, std::initializer_list<const char*> formats, const char* default_format) {
    c.format = default_format;
    std::vector<std::string> names(formats.begin(), formats.end());
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(names));
    sub->add_option("--jobs", c.jobs, "Worker threads (FRIEZEMOD_JOBS overrides)")->check(CLI::Range(1u, 1024u));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solutions of M_n(a_1,...,a_n) = +-Id over Z/NZ: checks, reductions and size tables"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("friezemod format ") + kFormatVersion);

    Common common;
    TupleArgs tuple_args;
    RecordArgs record_args;
    MonomialTableArgs mono_table;
    DynomialTableArgs dyn_table;
    EnumerateArgs enum_args;

    auto* check = app.add_subcommand("check", "Test whether a tuple is a solution");
    auto* reduce = app.add_subcommand("reduce", "Search for a reduction of a solution");
    for (auto* sub : {check, reduce}) {
        sub->add_option("--modulus,-N", tuple_args.modulus, "Modulus N >= 2")->required();
        sub->add_option("--tuple,-t", tuple_args.tuple, "Comma-separated entries")->required();
    }
    reduce->add_option("--max-work", tuple_args.max_work, "Work limit in candidate tests");
    add_common(check, common, {"text", "json"}, "text");
    add_common(reduce, common, {"text", "json"}, "text");

    auto* monomial = app.add_subcommand("monomial", "Minimal (k,...,k) solution: size and verdict");
    auto* dynomial = app.add_subcommand("dynomial", "Minimal (k,-k,...,k,-k) solution: size, roots and verdict");
    for (auto* sub : {monomial, dynomial}) {
        sub->add_option("--modulus,-N", record_args.modulus, "Modulus N >= 2")->required();
        sub->add_option("--k,-k", record_args.k, "Entry k")->required();
        sub->add_option("--max-work", record_args.max_work, "Work limit for the generic search");
        add_common(sub, common, {"text", "json"}, "text");
    }

    auto* mtable = app.add_subcommand("monomial-table", "Minimal monomial sizes, rows k, columns N");
    auto* primes_opt = mtable->add_option("--primes", mono_table.primes, "Comma-separated primes")->delimiter(',');
    auto* up_to_opt = mtable->add_option("--primes-up-to", mono_table.up_to, "All primes up to P");
    mtable->add_option("--primes-from", mono_table.from, "Lower end for --primes-up-to")->needs(up_to_opt);
    primes_opt->excludes(up_to_opt);
    mtable->add_flag("--all-k", mono_table.all_k, "Rows for every k < N instead of k <= (N-1)/2");
    add_common(mtable, common, {"md", "csv", "json", "text"}, "md");

    auto* dtable = app.add_subcommand("dynomial2-table", "Reducibility of minimal 2-dynomial solutions, N = +-1 mod 12");
    dtable->add_option("--up-to", dyn_table.up_to, "Largest modulus")->capture_default_str();
    dtable->add_flag("--verify-reference-witnesses", dyn_table.verify_reference,
                     "Also validate the bundled list of known reducing parts");
    dtable->add_flag("--balanced", dyn_table.balanced, "Print residues in (-N/2, N/2]");
    dtable->add_option("--max-work", dyn_table.max_work, "Work limit");
    add_common(dtable, common, {"md", "csv", "json", "text"}, "md");

    auto* enumerate = app.add_subcommand("enumerate", "List every solution of a given size");
    enumerate->add_option("--modulus,-N", enum_args.modulus, "Modulus N >= 2")->required();
    enumerate->add_option("--size,-n", enum_args.size, "Tuple length")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--irreducible-only", enum_args.irreducible_only, "Keep irreducible classes only");
    enumerate->add_flag("--up-to-equivalence", enum_args.up_to_equivalence, "One representative per class");
    enumerate->add_option("--max-work", enum_args.max_work, "Work limit");
    add_common(enumerate, common, {"text", "csv", "json"}, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (const char* env = std::getenv("FRIEZEMOD_JOBS"); env != nullptr && *env != '\0') {
        try {
            const long v = std::stol(env);
            if (v < 1 || v > 1024) throw std::out_of_range("jobs");
            common.jobs = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            std::cerr << "error: FRIEZEMOD_JOBS must be an integer in [1, 1024]\n";
            return kExitInput;
        }
    }

    try {
        if (check->parsed()) return run_check(common, tuple_args);
        if (reduce->parsed()) return run_reduce(common, tuple_args);
        if (monomial->parsed()) return run_monomial(common, record_args);
        if (dynomial->parsed()) return run_dynomial(common, record_args);
        if (mtable->parsed()) return run_monomial_table(common, mono_table);
        if (dtable->parsed()) return run_dynomial2_table(common, dyn_table);
        if (enumerate->parsed()) return run_enumerate(common, enum_args);
    } catch (const WorkLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
