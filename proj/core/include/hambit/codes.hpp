#pragma once

#include <optional>
#include <vector>

#include "hambit/field.hpp"
#include "hambit/vertex.hpp"

namespace hambit {

// A linear code over GF(q) given by its word set and (optionally) the
// parity-check matrix it was built from.  Construction verifies that the set
// is actually linear: zero word present, closed under addition and scalar
// multiplication, and |words| = q^(n - rank(H)) when H is supplied.
struct LinearCode {
    Params params;
    VertexSet words;
    std::vector<std::vector<int>> parity_check;  // rows x n, empty if none

    // True when the construction-time structural checks ran to completion
    // (they are skipped above a size cutoff and for large q in
    // extended_perfect_code).
    bool validated = false;
};

LinearCode make_linear_code(Params params, VertexSet words,
                            std::vector<std::vector<int>> parity_check);

// The q-ary Hamming code of order m: length (q^m - 1)/(q - 1), q^(n-m) words,
// minimum distance 3.  Parity-check columns are one representative per
// projective point (first nonzero coordinate normalized to 1), in
// lexicographic order.
LinearCode hamming_code(int q, int m);

// The [q+2, q-1, 4] code for q = 2^k whose parity check is the hyperoval
//   {(1, t, t^2)^T : t in GF(q)} ++ {(0,0,1)^T, (0,1,0)^T},
// conic columns in ascending t.  Every cylinder of H(q+2, q) contains exactly
// one codeword; construction verifies this for q <= 8 and flags the result
// unvalidated for larger q.
LinearCode extended_perfect_code(int q);

// Appends an overall zero-sum check digit: each word w gains -sum(w) as its
// last coordinate.
LinearCode parity_extend(const LinearCode& c);

// Minimum pairwise distance; nullopt means +infinity (fewer than two words).
std::optional<int> min_distance(const VertexSet& c);

// Early-exit form: true iff min_distance(c) >= d (vacuously for |c| <= 1).
bool min_distance_at_least(const VertexSet& c, int d);

// First (lexicographic) pair of distinct words at distance < d, if any.
std::optional<std::pair<Vertex, Vertex>> closest_pair_below(const VertexSet& c, int d);

// {c + v : c in C} with coordinatewise field addition.
VertexSet translate(const VertexSet& c, const Vertex& v, const Field& f);

// (C0 \ C1, C1 \ C0).  Identical inputs give the empty pair; callers decide
// whether that is acceptable.
SignedPair difference_pair(const VertexSet& c0, const VertexSet& c1);

// True iff min_distance(c) >= 4 and every cylinder C_{x,i} of H(n,q) contains
// exactly one word of c.
bool is_extended_perfect_code(const Params& p, const VertexSet& c);

// First cylinder whose codeword count is not exactly one, if any, scanned
// direction-major; the representative vertex has digit 0 at the returned
// coordinate.  For tests and diagnostics.
std::optional<std::pair<Vertex, int>> find_cylinder_violation(const Params& p, const VertexSet& c);

}  // namespace hambit
