#pragma once

#include <stdexcept>
#include <string>

namespace hambit {

// Invalid argument to a library operation (bad coordinate, alphabet out of
// range, size bound exceeded, ...).
class param_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file; carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

namespace detail {

// All arithmetic in the library is exact; these throw instead of wrapping.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

}  // namespace detail

}  // namespace hambit
