#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hambit/checkers.hpp"

namespace hambit {

// Parameter feasibility, exhaustive enumeration of all bitrades in tiny
// graphs (the independent oracle for the checkers), and pruned backtracking
// search in larger graphs.

struct Feasibility {
    bool ok = false;
    std::string reason;
};

// Extended bitrades require n even and n = l*q + 2; the reason names the
// first clause that fails.
Feasibility feasible_params(int n, int q);

struct SearchConfig {
    Params params;

    enum class Mode { brute, backtrack };
    Mode mode = Mode::backtrack;

    // Cap on |T+| + |T-|.
    std::optional<std::size_t> max_support;

    // Wall-clock budget; an exhausted budget yields a result flagged
    // incomplete, never a nonexistence claim.
    std::optional<double> budget_seconds;

    // Emit only pairs with the all-zero word in T+; callers recover the rest
    // by translation symmetry.
    bool fix_seed_vertex = false;

    // Optional hint region: only these vertices may carry a sign, everything
    // else is fixed to 0.
    std::optional<VertexSet> restrict_support;
};

struct SearchResult {
    std::vector<SignedPair> pairs;  // sorted lexicographically
    bool complete = true;
    std::string note;
};

// Enumerates all 3^(q^n) sign assignments (requires q^n <= 12) and returns
// every pair, nonempty on both sides, that passes the cylinder condition —
// by the equivalence of the five conditions, any single checker suffices and
// the cylinder one is cheapest.  Infeasible parameters short-circuit to the
// empty list: no bitrade can exist there, and the one degenerate family this
// suppresses (singleton pairs of H(1,q), where every cylinder is the whole
// graph) sits outside the n >= 2 domain of the extended conditions.
std::vector<SignedPair> brute_force_enumerate(const Params& p);

// Depth-first search over vertices in lexicographic order, assigning +, -, 0
// in that order.  Prunes on cylinder counts exceeding 1, intra-component
// distance < 4, and fully-determined unbalanced cylinders.  Every emitted
// pair is re-verified with check_all before it is returned.
SearchResult backtrack_search(const SearchConfig& cfg);

}  // namespace hambit
