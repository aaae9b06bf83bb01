#include "hambit/spectral.hpp"

#include <algorithm>
#include <random>

namespace hambit {

long long eigenvalue(const Params& p, int i) {
    if (i < 0 || i > p.n) throw param_error("eigenvalue index out of range");
    return static_cast<long long>(p.n) * (p.q - 1) - static_cast<long long>(i) * p.q;
}

std::optional<EigenIndex> eigen_index_for(const Params& p, long long target) {
    const long long top = static_cast<long long>(p.n) * (p.q - 1);
    const long long num = top - target;
    if (num < 0 || num % p.q != 0) return std::nullopt;
    const long long i = num / p.q;
    if (i > p.n) return std::nullopt;
    return EigenIndex{static_cast<int>(i), target};
}

IntFunction apply_annihilator(const Space& s, const IntFunction& f, std::vector<long long> lambdas) {
    std::sort(lambdas.begin(), lambdas.end());
    IntFunction g = f;
    for (long long lambda : lambdas) {
        IntFunction ag = adjacency_apply(s, g);
        for (std::uint64_t x = 0; x < s.count(); ++x)
            ag.at(x) = detail::checked_add(ag.at(x), detail::checked_mul(-lambda, g.at(x)));
        g = std::move(ag);
    }
    return g;
}

bool annihilator_check(const Space& s, const IntFunction& f, const std::vector<long long>& lambdas) {
    if (lambdas.empty()) throw param_error("annihilator_check: no eigenvalues given");
    for (long long lambda : lambdas)
        if (!eigen_index_for(s.params(), lambda))
            throw param_error("annihilator_check: not an eigenvalue of H(n,q)");
    return apply_annihilator(s, f, lambdas).is_zero();
}

std::vector<long long> ones_weight(int q) { return std::vector<long long>(static_cast<size_t>(q), 1); }

IntFunction convolve(const Space& s, const IntFunction& f, int i, const std::vector<long long>& phi) {
    const Params p = s.params();
    if (p.n < 2) throw param_error("convolve: word length must be >= 2");
    detail::require_coord(p, i);
    if (static_cast<int>(phi.size()) != p.q) throw param_error("convolve: weight length must equal q");
    if (f.params() != p) throw param_error("convolve: mismatched parameters");

    const Space below((Params(p.n - 1, p.q)));
    IntFunction out(below);
    for (std::uint64_t x = 0; x < below.count(); ++x) {
        long long sum = 0;
        for (int a = 0; a < p.q; ++a)
            sum = detail::checked_add(
                sum, detail::checked_mul(f.at(s.insert_digit(x, i, a)), phi[static_cast<size_t>(a)]));
        out.at(x) = sum;
    }
    return out;
}

IntFunction eigen_fixture(const Space& s, int j, std::uint64_t seed) {
    const Params p = s.params();
    if (j < 0 || j > p.n) throw param_error("eigen_fixture: eigenspace index out of range");
    ensure_enumerable(s, "eigen_fixture");

    // mt19937_64 output is pinned by the standard, so fixtures are
    // reproducible across platforms.  Values land in [-8, 8].
    std::mt19937_64 rng(seed);
    IntFunction f(s);
    for (std::uint64_t x = 0; x < s.count(); ++x)
        f.at(x) = static_cast<long long>(rng() % 17) - 8;

    std::vector<long long> lambdas;
    for (int m = 0; m <= p.n; ++m)
        if (m != j) lambdas.push_back(eigenvalue(p, m));
    return apply_annihilator(s, f, std::move(lambdas));
}

}  // namespace hambit
