#include "hambit/field.hpp"

#include <array>

namespace hambit {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// -1 when q is not a power of two.
int log2_exact(int q) {
    int k = 0, v = q;
    while (v > 1) {
        if (v & 1) return -1;
        v >>= 1;
        ++k;
    }
    return k;
}

int pinned_modulus(int k) {
    static constexpr std::array<int, 9> table = {0, 0, 0b111, 0b1011, 0b10011, 0b100101,
                                                 0b1000011, 0b10001011, 0b100011101};
    return table[static_cast<size_t>(k)];
}

}  // namespace

bool Field::valid_order(int q) {
    if (q < 3 || q > 256) return false;
    if (is_prime(q)) return true;
    const int k = log2_exact(q);
    return k >= 2 && k <= 8;
}

Field::Field(int q) : q_(q) {
    if (q < 3 || q > 256) throw param_error("field order must be in [3,256]");
    const int k = log2_exact(q);
    if (k >= 2 && k <= 8) {
        binary_ = true;
        modulus_ = pinned_modulus(k);
        log_.assign(static_cast<size_t>(q), 0);
        exp_.assign(static_cast<size_t>(q - 1), 0);
        int b = 1;
        for (int e = 0; e < q - 1; ++e) {
            exp_[static_cast<size_t>(e)] = static_cast<std::uint16_t>(b);
            log_[static_cast<size_t>(b)] = static_cast<std::uint16_t>(e);
            b <<= 1;
            if (b & q) b ^= modulus_;
        }
        if (b != 1) throw param_error("field modulus is not primitive");
    } else if (!is_prime(q)) {
        throw param_error("field order must be prime or a power of two (k <= 8)");
    }
}

int Field::add(int a, int b) const {
    check(a);
    check(b);
    return binary_ ? (a ^ b) : (a + b) % q_;
}

int Field::sub(int a, int b) const {
    check(a);
    check(b);
    return binary_ ? (a ^ b) : (a - b + q_) % q_;
}

int Field::neg(int a) const {
    check(a);
    return binary_ ? a : (q_ - a) % q_;
}

int Field::mul(int a, int b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    if (binary_) {
        int e = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[static_cast<size_t>(e)];
    }
    return (a * b) % q_;
}

int Field::inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    if (binary_) {
        const int e = (q_ - 1 - log_[static_cast<size_t>(a)]) % (q_ - 1);
        return exp_[static_cast<size_t>(e)];
    }
    // Fermat: a^(q-2) mod q.
    int result = 1, base = a, e = q_ - 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % q_;
        base = (base * base) % q_;
        e >>= 1;
    }
    return result;
}

}  // namespace hambit
