#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hambit/codes.hpp"
#include "hambit/spectral.hpp"

namespace hambit {

// Five independent decision procedures for "extended 1-perfect bitrade",
// one per defining condition, plus the radius-1 perfect-bitrade checker they
// bottom out in.  The five conditions are provably equivalent, so on every
// input the five checkers must return the same status; check_all enforces
// that agreement and treats any divergence as an implementation bug, never
// as a property of the data.
//
// All checkers are pure, exact-integer, and deterministic: the reported
// counterexample is always the lexicographically first failure.
//
// Domain note: the extended checkers require n >= 2.  The projection
// condition is only defined from length 2 upward, and the equivalence holds
// on that domain; in H(1,q) the remaining four conditions degenerate (every
// cylinder is the whole graph) and admit singleton pairs that the even-n
// parameter law rules out everywhere else.  Length-1 inputs are therefore a
// parameter error for every extended checker.

enum class Definition {
    perfect = 0,   // radius-1 balls, the base notion
    matrix = 1,    // witness-matrix equation AF = FS
    projection = 2,// all coordinate projections are perfect bitrades
    weight = 3,    // two-sided ball weights agree and stay <= 1
    spectral = 4,  // distance 4 + eigenspace membership for {q-2, -n}
    cylinder = 5,  // cylinder counts agree and stay <= 1
};

const char* definition_name(Definition d);
std::optional<Definition> definition_from_name(const std::string& name);

enum class Status { pass, fail, degenerate };

struct Counterexample {
    std::optional<Vertex> vertex;  // lexicographically first failing vertex
    std::optional<int> coord;      // direction, for per-line conditions
    std::string note;
};

// Witness for the matrix condition: the three columns of F and the 3x3
// constant matrix S with AF = FS.
struct WitnessMatrix {
    IntFunction f1, f2, f3;

    WitnessMatrix(IntFunction a, IntFunction b, IntFunction c)
        : f1(std::move(a)), f2(std::move(b)), f3(std::move(c)) {}
};

// S as a function of (n,q); row-major.
std::array<std::array<long long, 3>, 3> witness_s_matrix(const Params& p);

struct Verdict {
    Definition definition;
    Status status = Status::fail;
    std::optional<Counterexample> counterexample;
    std::optional<WitnessMatrix> witness;

    bool passed() const noexcept { return status == Status::pass; }
};

// Integer sphere profile of x against A: (|S_0 cap A|, |S_1 cap A|, |S_2 cap A|).
struct SphereProfile {
    long long s0 = 0, s1 = 0, s2 = 0;

    bool operator==(const SphereProfile&) const = default;
};

SphereProfile sphere_profile(const Params& p, const VertexSet& a, const Vertex& x);

// n-scaled ball weight: n*|S_0 cap A| + n*|S_1 cap A| + 2*|S_2 cap A|.
// Equals n exactly when the rational weight equals 1, so every comparison in
// the weight checker stays integral.
long long scaled_weight(const Params& p, const VertexSet& a, const Vertex& x);

// Radius-1 perfect bitrade: |B(x) cap T+| = |B(x) cap T-| <= 1 at every
// vertex.  Empty pairs pass (projections of bitrades may be empty).
Verdict check_perfect(const Params& p, const SignedPair& pair);

// The five extended-bitrade checkers.  A pair that is empty on both sides
// gets a `degenerate` verdict: all five conditions hold vacuously, and
// counting the empty pair as a bitrade would pollute search output.
Verdict check_matrix(const Params& p, const SignedPair& pair);
Verdict check_projection(const Params& p, const SignedPair& pair);
Verdict check_weight(const Params& p, const SignedPair& pair);
Verdict check_spectral(const Params& p, const SignedPair& pair);
Verdict check_cylinder(const Params& p, const SignedPair& pair);

struct CheckReport {
    std::vector<Verdict> verdicts;
    // False contradicts the equivalence of the five conditions and means the
    // implementation is broken; it is never a statement about the input.
    bool agreement = true;

    Status overall() const;
};

// Runs all five extended checkers and flags agreement.
CheckReport check_all(const Params& p, const SignedPair& pair);

}  // namespace hambit
