#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hambit/hamming.hpp"

namespace hambit {

// Exact eigenspace tooling for the adjacency operator of H(n,q).
//
// The spectrum is lambda_i = n(q-1) - iq for i = 0..n.  Membership in a sum
// of eigenspaces is decided by annihilating polynomials: the operator is
// diagonalizable with this integer spectrum, so f lies in the span of the
// selected eigenspaces iff the product of (A - lambda I) over the selected
// eigenvalues maps f to zero.  No floating point is involved anywhere.

struct EigenIndex {
    int i = 0;
    long long lambda = 0;

    bool operator==(const EigenIndex&) const = default;
};

long long eigenvalue(const Params& p, int i);

// The index i with n(q-1) - iq = target, if one exists in 0..n.  For
// target = q-2 existence is equivalent to n == 2 (mod q).
std::optional<EigenIndex> eigen_index_for(const Params& p, long long target);

// g = prod_{lambda in lambdas} (A - lambda I) applied to f, factors applied in
// ascending-lambda order.  No eigenvalue validation; exact arithmetic.
IntFunction apply_annihilator(const Space& s, const IntFunction& f, std::vector<long long> lambdas);

// True iff the product of (A - lambda I) over `lambdas` annihilates f.  Every
// lambda must be an actual eigenvalue of H(n,q); anything else is a parameter
// error (such a test would be meaningless).
bool annihilator_check(const Space& s, const IntFunction& f, const std::vector<long long>& lambdas);

// Fiber convolution: for f on H(n,q) and a length-q integer weight phi,
// (f *_i phi)(x) = sum_a f(x^a_i) phi(a) on H(n-1,q).
IntFunction convolve(const Space& s, const IntFunction& f, int i, const std::vector<long long>& phi);

// The all-ones weight used for projections.
std::vector<long long> ones_weight(int q);

// A pseudorandom element of the eigenspace U_j (or the zero function):
// draws integer values from a fixed generator seeded with `seed`, then
// applies prod_{m != j} (A - lambda_m I).  Deterministic per seed.
IntFunction eigen_fixture(const Space& s, int j, std::uint64_t seed);

}  // namespace hambit
