#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sethforge/error.hpp"

namespace sethforge {

// A literal of variable `var` (1-based); positive when `positive` is true.
struct Literal {
    int var = 0;
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

// A clause is an ordered sequence of literal occurrences. Repeats are allowed
// and counted by size().
struct Clause {
    std::vector<Literal> literals;

    int size() const { return static_cast<int>(literals.size()); }
    bool operator==(const Clause&) const = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    bool operator==(const CnfFormula&) const = default;
};

// Truth values for variables 1..n; values[i-1] is variable i.
struct Assignment {
    std::vector<bool> values;

    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const Assignment&) const = default;
};

// Rank of a full assignment: variable 1 is the most significant bit.
std::uint64_t assignment_rank(const Assignment& a);
Assignment assignment_from_rank(int num_vars, std::uint64_t rank);

CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const Assignment& a);

// Exhaustive satisfiability oracle: lowest-rank satisfying assignment, if any.
// Fails with category "cap-exceeded" when num_vars > cap.
std::optional<Assignment> brute_force_sat(const CnfFormula& f, int cap = 24);

// Appends a fresh variable z positively to every odd-size clause and a final
// clause (~z | ~z); returns the formula unchanged when all clauses are even.
CnfFormula pad_to_even(const CnfFormula& f);

// ---------------------------------------------------------------------------
// Variable grouping shared by the Dominating Set, Coloring and OCT reductions.

enum class Rounding { floor, ceil };

struct VariableGrouping {
    int group_size = 0;                  // beta
    std::vector<std::vector<int>> groups; // F_1..F_t, consecutive variable indices
    Rounding rounding = Rounding::floor;

    int num_groups() const { return static_cast<int>(groups.size()); } // t
};

// floor/ceil of log2(base^p), computed exactly in integer arithmetic.
int log2_pow(int base, int p, Rounding r);

VariableGrouping make_groups(int n, int base, int p, Rounding r);

// An assignment to the variables of one group.
struct GroupAssignment {
    int group_index = 0;          // 0-based index into the grouping
    std::vector<bool> values;     // one per group variable, ascending order

    // Canonical rank: first group variable is the most significant bit.
    std::uint64_t rank() const;
};

GroupAssignment group_assignment_from_rank(const VariableGrouping& g, int group_index,
                                           std::uint64_t rank);

// True when some literal of `c` over a variable of group `group_index` is set
// to true by `ga`.
bool group_assignment_satisfies(const CnfFormula& f, const VariableGrouping& g,
                                const GroupAssignment& ga, int clause_index);

// All group assignments of F_i satisfying clause C_j, ordered by rank.
std::vector<GroupAssignment> satisfying_group_assignments(const CnfFormula& f,
                                                          const VariableGrouping& g,
                                                          int group_index, int clause_index);

} // namespace sethforge
