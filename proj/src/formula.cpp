#include "sethforge/formula.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sethforge {

std::uint64_t assignment_rank(const Assignment& a) {
    std::uint64_t r = 0;
    for (bool b : a.values) r = (r << 1) | (b ? 1u : 0u);
    return r;
}

Assignment assignment_from_rank(int num_vars, std::uint64_t rank) {
    Assignment a;
    a.values.resize(num_vars);
    for (int i = 0; i < num_vars; ++i)
        a.values[i] = ((rank >> (num_vars - 1 - i)) & 1u) != 0;
    return a;
}

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool header_seen = false;
    int declared_clauses = 0;
    Clause current;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == 'c') continue;
        std::istringstream ls(line);
        if (!header_seen) {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.num_vars >> declared_clauses) || p != "p" || cnf != "cnf" ||
                f.num_vars < 0 || declared_clauses < 0)
                fail("malformed-header", "expected 'p cnf <vars> <clauses>', got: " + line);
            std::string trailing;
            if (ls >> trailing) fail("malformed-header", "trailing tokens after header: " + line);
            header_seen = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.literals.empty()) fail("empty-clause", "clause terminated with no literals");
                f.clauses.push_back(current);
                current.literals.clear();
                continue;
            }
            int var = lit > 0 ? lit : -lit;
            if (var > f.num_vars)
                fail("variable-out-of-range",
                     "literal " + std::to_string(lit) + " exceeds declared " + std::to_string(f.num_vars) + " variables");
            current.literals.push_back({var, lit > 0});
        }
        if (!ls.eof()) fail("malformed-literal", "non-integer token in clause line: " + line);
    }
    if (!header_seen) fail("malformed-header", "missing 'p cnf' header");
    if (!current.literals.empty()) fail("empty-clause", "unterminated clause at end of input");
    if (f.num_clauses() != declared_clauses)
        fail("clause-count-mismatch", "header declares " + std::to_string(declared_clauses) +
                                          " clauses, found " + std::to_string(f.num_clauses()));
    return f;
}

std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.num_clauses() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c.literals) out << (l.positive ? l.var : -l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
    if (a.size() != f.num_vars)
        fail("length-mismatch", "assignment has " + std::to_string(a.size()) + " values for " +
                                    std::to_string(f.num_vars) + " variables");
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (const Literal& l : c.literals)
            if (a.values[l.var - 1] == l.positive) { sat = true; break; }
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f, int cap) {
    if (f.num_vars > cap)
        fail("cap-exceeded", "brute_force_sat: " + std::to_string(f.num_vars) + " variables exceeds cap " +
                                 std::to_string(cap));
    std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t r = 0; r < total; ++r) {
        Assignment a = assignment_from_rank(f.num_vars, r);
        if (evaluate(f, a)) return a;
    }
    return std::nullopt;
}

CnfFormula pad_to_even(const CnfFormula& f) {
    bool any_odd = std::any_of(f.clauses.begin(), f.clauses.end(),
                               [](const Clause& c) { return c.size() % 2 != 0; });
    if (!any_odd) return f;
    CnfFormula out = f;
    int z = ++out.num_vars;
    for (Clause& c : out.clauses)
        if (c.size() % 2 != 0) c.literals.push_back({z, true});
    out.clauses.push_back(Clause{{{z, false}, {z, false}}});
    return out;
}

int log2_pow(int base, int p, Rounding r) {
    if (base < 2 || p < 1) fail("invalid-parameters", "log2_pow requires base >= 2, p >= 1");
    unsigned __int128 pow = 1;
    for (int i = 0; i < p; ++i) {
        pow *= static_cast<unsigned>(base);
        if (pow > (unsigned __int128)1 << 100) fail("cap-exceeded", "base^p too large");
    }
    int fl = 0;
    while ((pow >> (fl + 1)) != 0) ++fl;
    bool exact = (unsigned __int128)1 << fl == pow;
    return r == Rounding::floor ? fl : (exact ? fl : fl + 1);
}

VariableGrouping make_groups(int n, int base, int p, Rounding r) {
    if (n < 1) fail("invalid-parameters", "make_groups requires n >= 1");
    int beta = log2_pow(base, p, r);
    if (beta < 1) fail("invalid-parameters", "grouping parameters give group_size = 0");
    VariableGrouping g;
    g.group_size = beta;
    g.rounding = r;
    for (int v = 1; v <= n; v += beta) {
        std::vector<int> grp;
        for (int u = v; u <= std::min(n, v + beta - 1); ++u) grp.push_back(u);
        g.groups.push_back(std::move(grp));
    }
    return g;
}

std::uint64_t GroupAssignment::rank() const {
    std::uint64_t r = 0;
    for (bool b : values) r = (r << 1) | (b ? 1u : 0u);
    return r;
}

GroupAssignment group_assignment_from_rank(const VariableGrouping& g, int group_index,
                                           std::uint64_t rank) {
    const auto& grp = g.groups.at(group_index);
    int k = static_cast<int>(grp.size());
    GroupAssignment ga;
    ga.group_index = group_index;
    ga.values.resize(k);
    for (int i = 0; i < k; ++i) ga.values[i] = ((rank >> (k - 1 - i)) & 1u) != 0;
    return ga;
}

bool group_assignment_satisfies(const CnfFormula& f, const VariableGrouping& g,
                                const GroupAssignment& ga, int clause_index) {
    const auto& grp = g.groups.at(ga.group_index);
    const Clause& c = f.clauses.at(clause_index);
    for (const Literal& l : c.literals) {
        auto it = std::lower_bound(grp.begin(), grp.end(), l.var);
        if (it == grp.end() || *it != l.var) continue;
        if (ga.values[it - grp.begin()] == l.positive) return true;
    }
    return false;
}

std::vector<GroupAssignment> satisfying_group_assignments(const CnfFormula& f,
                                                          const VariableGrouping& g,
                                                          int group_index, int clause_index) {
    const auto& grp = g.groups.at(group_index);
    std::vector<GroupAssignment> out;
    std::uint64_t total = std::uint64_t{1} << grp.size();
    for (std::uint64_t r = 0; r < total; ++r) {
        GroupAssignment ga = group_assignment_from_rank(g, group_index, r);
        if (group_assignment_satisfies(f, g, ga, clause_index)) out.push_back(std::move(ga));
    }
    return out;
}

} // namespace sethforge
