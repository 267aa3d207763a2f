#pragma once

#include "sethforge/formula.hpp"
#include "sethforge/instance.hpp"

namespace sethforge {

// The six constructions. Each returns a labeled graph, a decision target,
// a width-bounded path-decomposition certificate and construction metadata.
Instance reduce_independent_set(const CnfFormula& f);
Instance reduce_dominating_set(const CnfFormula& f, int p);
Instance reduce_max_cut_weighted(const CnfFormula& f);
Instance expand_to_unweighted(const Instance& weighted);
Instance reduce_q_coloring(const CnfFormula& f, int q, int p);
Instance complete_lists_to_plain(const Instance& list_instance);
Instance reduce_oct(const CnfFormula& f, int p);
Instance reduce_triangle_packing(const CnfFormula& f);
Instance to_partition(const Instance& packing);

// Constructive witness from a satisfying assignment, following the
// reduction's intended solution shape. The instance must have been produced
// by the matching reduction on `f`.
Solution build_witness(const Instance& inst, const CnfFormula& f, const Assignment& tau);

// Feasibility + target check of a solution against its instance.
bool check_solution(const Instance& inst, const Solution& s);

namespace detail {
// Per-construction witness builders behind build_witness.
Solution witness_independent_set(const Instance&, const CnfFormula&, const Assignment&);
Solution witness_dominating_set(const Instance&, const CnfFormula&, const Assignment&);
Solution witness_max_cut(const Instance&, const CnfFormula&, const Assignment&);
Solution witness_coloring(const Instance&, const CnfFormula&, const Assignment&);
Solution witness_oct(const Instance&, const CnfFormula&, const Assignment&);
Solution witness_triangle_packing(const Instance&, const CnfFormula&, const Assignment&);
} // namespace detail

} // namespace sethforge
