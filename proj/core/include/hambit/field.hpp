#pragma once

#include <cstdint>
#include <vector>

#include "hambit/errors.hpp"

namespace hambit {

// Arithmetic in GF(q) for q prime or q = 2^k, k <= 8.
//
// Characteristic-2 fields use log/antilog tables built from a pinned primitive
// polynomial per degree, so element encodings (and every code built on top)
// are bit-reproducible across runs and platforms:
//
//   k=2: x^2+x+1        k=3: x^3+x+1        k=4: x^4+x+1
//   k=5: x^5+x^2+1      k=6: x^6+x+1        k=7: x^7+x^3+1
//   k=8: x^8+x^4+x^3+x^2+1
//
// Prime fields are plain modular arithmetic.
class Field {
  public:
    explicit Field(int q);

    int order() const noexcept { return q_; }
    bool binary_extension() const noexcept { return binary_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;

    // Multiplicative inverse; inverse of 0 is a domain error.
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }

    static bool valid_order(int q);

  private:
    void check(int a) const {
        if (a < 0 || a >= q_) throw param_error("field element out of range");
    }

    int q_;
    bool binary_ = false;
    int modulus_ = 0;                // pinned polynomial, binary fields only
    std::vector<std::uint16_t> log_, exp_;
};

}  // namespace hambit
