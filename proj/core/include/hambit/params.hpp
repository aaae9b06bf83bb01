#pragma once

#include <cstdint>
#include <vector>

#include "hambit/errors.hpp"

namespace hambit {

// Parameters of the Hamming graph H(n,q): words of length n over an alphabet
// of size q >= 3.  The binary case q = 2 is outside the supported scope and is
// rejected up front.
struct Params {
    int n = 0;
    int q = 0;

    Params() = default;
    Params(int n_, int q_) : n(n_), q(q_) {
        if (n < 1) throw param_error("word length n must be >= 1");
        if (q < 3) throw param_error("alphabet size q must be >= 3 (q = 2 unsupported)");
        if (q > 256) throw param_error("alphabet size q must be <= 256");
    }

    bool operator==(const Params&) const = default;
};

// Index arithmetic for H(n,q).  Vertices are ranked lexicographically with
// coordinate 1 most significant; rank(x) = sum_i x_i * q^(n-i).  All per-vertex
// scans in the library run over these ranks, so lexicographic iteration is the
// iteration over 0..q^n-1.
class Space {
  public:
    explicit Space(Params p) : p_(p) {
        stride_.resize(static_cast<size_t>(p.n) + 1);
        std::uint64_t s = 1;
        for (int i = p.n; i >= 1; --i) {
            stride_[static_cast<size_t>(i)] = s;
            if (s > UINT64_MAX / static_cast<std::uint64_t>(p.q))
                throw param_error("q^n exceeds the representable vertex count");
            s *= static_cast<std::uint64_t>(p.q);
        }
        count_ = s;
    }

    const Params& params() const noexcept { return p_; }
    std::uint64_t count() const noexcept { return count_; }

    // Coordinates are 1-based throughout.
    int digit(std::uint64_t idx, int i) const {
        return static_cast<int>((idx / stride_[static_cast<size_t>(i)]) %
                                static_cast<std::uint64_t>(p_.q));
    }

    std::uint64_t with_digit(std::uint64_t idx, int i, int a) const {
        const std::uint64_t s = stride_[static_cast<size_t>(i)];
        const int old = digit(idx, i);
        return idx + (static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(old)) * s;
    }

    // Rank in H(n-1,q) of the word with coordinate i removed.
    std::uint64_t erase_digit(std::uint64_t idx, int i) const {
        const std::uint64_t s = stride_[static_cast<size_t>(i)];
        const std::uint64_t hi = idx / (s * static_cast<std::uint64_t>(p_.q));
        const std::uint64_t lo = idx % s;
        return hi * s + lo;
    }

    // Inverse of erase_digit: rank in H(n,q) of the word with digit a put at
    // position i.  `below` must be a rank in H(n-1,q).
    std::uint64_t insert_digit(std::uint64_t below, int i, int a) const {
        const std::uint64_t s = stride_[static_cast<size_t>(i)];
        const std::uint64_t hi = below / s;
        const std::uint64_t lo = below % s;
        return hi * s * static_cast<std::uint64_t>(p_.q) +
               static_cast<std::uint64_t>(a) * s + lo;
    }

    std::uint64_t stride(int i) const { return stride_[static_cast<size_t>(i)]; }

  private:
    Params p_;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> stride_;
};

// Bound on q^n for operations that materialize a value per vertex (integer
// functions, membership masks, full-graph scans).
inline constexpr std::uint64_t kMaxEnumerable = std::uint64_t{1} << 24;

inline void ensure_enumerable(const Space& s, const char* what) {
    if (s.count() > kMaxEnumerable)
        throw param_error(std::string(what) + ": q^n too large for full-graph enumeration");
}

}  // namespace hambit
