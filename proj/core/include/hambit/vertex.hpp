#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hambit/params.hpp"

namespace hambit {

// A vertex of H(n,q): a length-n word with digits in {0,...,q-1}.
// Comparison is lexicographic with coordinate 1 most significant, which is the
// canonical order for sets, file output, and search branching.
class Vertex {
  public:
    Vertex() = default;
    explicit Vertex(std::vector<std::uint8_t> digits) : d_(std::move(digits)) {}
    Vertex(std::initializer_list<int> digits) {
        d_.reserve(digits.size());
        for (int v : digits) d_.push_back(static_cast<std::uint8_t>(v));
    }

    static Vertex zero(int n) { return Vertex(std::vector<std::uint8_t>(static_cast<size_t>(n), 0)); }

    // e^a_i: digit a at position i, zeros elsewhere.
    static Vertex unit(const Params& p, int i, int a) {
        if (i < 1 || i > p.n) throw param_error("unit: coordinate out of range");
        if (a < 0 || a >= p.q) throw param_error("unit: digit out of range");
        Vertex v = zero(p.n);
        v.d_[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(a);
        return v;
    }

    static Vertex from_index(const Space& s, std::uint64_t idx) {
        const int n = s.params().n;
        std::vector<std::uint8_t> d(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) d[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(s.digit(idx, i));
        return Vertex(std::move(d));
    }

    std::uint64_t to_index(const Space& s) const {
        std::uint64_t idx = 0;
        for (int i = 1; i <= length(); ++i)
            idx += static_cast<std::uint64_t>(digit(i)) * s.stride(i);
        return idx;
    }

    int length() const noexcept { return static_cast<int>(d_.size()); }

    // 1-based.
    int digit(int i) const { return d_[static_cast<size_t>(i - 1)]; }
    void set_digit(int i, int a) { d_[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(a); }

    const std::vector<std::uint8_t>& digits() const noexcept { return d_; }

    bool valid_for(const Params& p) const {
        if (length() != p.n) return false;
        for (std::uint8_t v : d_)
            if (v >= p.q) return false;
        return true;
    }

    auto operator<=>(const Vertex&) const = default;

  private:
    std::vector<std::uint8_t> d_;
};

// Finite set of vertices, kept sorted lexicographically without duplicates.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> words) : w_(std::move(words)) {
        std::sort(w_.begin(), w_.end());
        w_.erase(std::unique(w_.begin(), w_.end()), w_.end());
    }

    bool contains(const Vertex& v) const {
        return std::binary_search(w_.begin(), w_.end(), v);
    }

    void insert(Vertex v) {
        auto it = std::lower_bound(w_.begin(), w_.end(), v);
        if (it == w_.end() || *it != v) w_.insert(it, std::move(v));
    }

    std::size_t size() const noexcept { return w_.size(); }
    bool empty() const noexcept { return w_.empty(); }

    auto begin() const noexcept { return w_.begin(); }
    auto end() const noexcept { return w_.end(); }

    const std::vector<Vertex>& words() const noexcept { return w_; }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

    friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
        std::vector<Vertex> out;
        std::set_difference(a.w_.begin(), a.w_.end(), b.w_.begin(), b.w_.end(),
                            std::back_inserter(out));
        VertexSet r;
        r.w_ = std::move(out);  // inputs sorted and unique
        return r;
    }

    friend bool disjoint(const VertexSet& a, const VertexSet& b) {
        auto ia = a.w_.begin();
        auto ib = b.w_.begin();
        while (ia != a.w_.end() && ib != b.w_.end()) {
            if (*ia < *ib)
                ++ia;
            else if (*ib < *ia)
                ++ib;
            else
                return false;
        }
        return true;
    }

  private:
    std::vector<Vertex> w_;
};

// A candidate bitrade: two disjoint vertex sets over the same H(n,q).
struct SignedPair {
    VertexSet plus;
    VertexSet minus;

    SignedPair() = default;
    SignedPair(VertexSet p, VertexSet m) : plus(std::move(p)), minus(std::move(m)) {
        if (!disjoint(plus, minus)) throw param_error("signed pair components must be disjoint");
    }

    bool empty() const noexcept { return plus.empty() && minus.empty(); }

    bool operator==(const SignedPair&) const = default;
    auto operator<=>(const SignedPair&) const = default;
};

// An integer-valued function on all q^n vertices, indexed by lexicographic
// vertex rank.  Exact arithmetic only; no floating point anywhere.
class IntFunction {
  public:
    explicit IntFunction(const Space& s, long long fill = 0)
        : params_(s.params()), v_(check_size(s), fill) {}

    const Params& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return v_.size(); }

    long long at(std::uint64_t idx) const { return v_[idx]; }
    long long& at(std::uint64_t idx) { return v_[idx]; }

    const std::vector<long long>& values() const noexcept { return v_; }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](long long x) { return x == 0; });
    }

    bool operator==(const IntFunction&) const = default;

  private:
    static std::size_t check_size(const Space& s) {
        ensure_enumerable(s, "IntFunction");
        return static_cast<std::size_t>(s.count());
    }

    Params params_;
    std::vector<long long> v_;
};

// f = 1_{T+} - 1_{T-}, the signed characteristic function of a pair.
IntFunction characteristic_function(const Space& s, const SignedPair& p);

// Inverse direction: a (0,+-1)-valued function as a signed pair.
SignedPair pair_from_function(const Space& s, const IntFunction& f);

std::string to_string(const Vertex& v, const Params& p);

}  // namespace hambit
