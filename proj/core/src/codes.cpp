#include "hambit/codes.hpp"

#include <random>

#include "hambit/hamming.hpp"

namespace hambit {

namespace {

// Largest code this module will materialize as an explicit word list.
constexpr std::uint64_t kMaxCodeWords = std::uint64_t{1} << 22;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<int>>& rows, const Field& f) {
    const int m = static_cast<int>(rows.size());
    const int n = m ? static_cast<int>(rows[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(r)]);
        const int pivot_inv = f.inv(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        for (int j = 0; j < n; ++j)
            rows[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                f.mul(rows[static_cast<size_t>(r)][static_cast<size_t>(j)], pivot_inv);
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const int factor = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    f.sub(rows[static_cast<size_t>(i)][static_cast<size_t>(j)],
                          f.mul(factor, rows[static_cast<size_t>(r)][static_cast<size_t>(j)]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// All words in the null space of `check`, enumerated over a basis.
VertexSet null_space(const std::vector<std::vector<int>>& check, int n, const Field& f) {
    std::vector<std::vector<int>> rows = check;
    const std::vector<int> pivots = rref(rows, f);
    const int rank = static_cast<int>(pivots.size());

    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    }

    const int k = n - rank;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= static_cast<std::uint64_t>(f.order());
        if (total > kMaxCodeWords) throw param_error("code too large to materialize");
    }

    // Basis vector per free column: 1 there, -row[fc] at each pivot column.
    std::vector<std::vector<int>> basis;
    basis.reserve(static_cast<size_t>(k));
    for (int fc : free_cols) {
        std::vector<int> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(fc)] = 1;
        for (int r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
                f.neg(rows[static_cast<size_t>(r)][static_cast<size_t>(fc)]);
        basis.push_back(std::move(v));
    }

    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<int> coef(static_cast<size_t>(k), 0);
    for (std::uint64_t it = 0;; ++it) {
        std::vector<std::uint8_t> digits(static_cast<size_t>(n), 0);
        for (int b = 0; b < k; ++b) {
            if (coef[static_cast<size_t>(b)] == 0) continue;
            for (int j = 0; j < n; ++j)
                digits[static_cast<size_t>(j)] = static_cast<std::uint8_t>(
                    f.add(digits[static_cast<size_t>(j)],
                          f.mul(coef[static_cast<size_t>(b)], basis[static_cast<size_t>(b)][static_cast<size_t>(j)])));
        }
        out.emplace_back(std::move(digits));
        int pos = k - 1;
        while (pos >= 0 && ++coef[static_cast<size_t>(pos)] == f.order()) coef[static_cast<size_t>(pos)--] = 0;
        if (pos < 0) break;
    }
    return VertexSet(std::move(out));
}

int syndrome_free_rank(const std::vector<std::vector<int>>& check, const Field& f) {
    std::vector<std::vector<int>> rows = check;
    return static_cast<int>(rref(rows, f).size());
}

}  // namespace

LinearCode make_linear_code(Params params, VertexSet words, std::vector<std::vector<int>> parity_check) {
    const Field f(params.q);
    LinearCode code{params, std::move(words), std::move(parity_check), false};

    if (!code.words.contains(Vertex::zero(params.n)))
        throw param_error("linear code must contain the zero word");
    for (const Vertex& w : code.words)
        if (!w.valid_for(params)) throw param_error("code word does not fit H(n,q)");

    if (!code.parity_check.empty()) {
        const int rank = syndrome_free_rank(code.parity_check, f);
        std::uint64_t expect = 1;
        for (int i = 0; i < params.n - rank; ++i) expect *= static_cast<std::uint64_t>(params.q);
        if (expect != code.words.size())
            throw param_error("word count does not match q^(n - rank(parity_check))");
    }

    // Closure under scalar multiplication, then addition.  Full pairwise
    // closure is quadratic, so above a cutoff a random sample stands in.
    const auto& ws = code.words.words();
    auto scaled = [&](const Vertex& w, int s) {
        std::vector<std::uint8_t> d(static_cast<size_t>(params.n));
        for (int i = 1; i <= params.n; ++i)
            d[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(f.mul(s, w.digit(i)));
        return Vertex(std::move(d));
    };
    auto summed = [&](const Vertex& a, const Vertex& b) {
        std::vector<std::uint8_t> d(static_cast<size_t>(params.n));
        for (int i = 1; i <= params.n; ++i)
            d[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(f.add(a.digit(i), b.digit(i)));
        return Vertex(std::move(d));
    };
    for (const Vertex& w : ws)
        for (int s = 2; s < params.q; ++s)
            if (!code.words.contains(scaled(w, s)))
                throw param_error("code is not closed under scalar multiplication");
    const bool full = ws.size() * ws.size() <= (std::uint64_t{1} << 22);
    if (full) {
        for (size_t i = 0; i < ws.size(); ++i)
            for (size_t j = i; j < ws.size(); ++j)
                if (!code.words.contains(summed(ws[i], ws[j])))
                    throw param_error("code is not closed under addition");
    } else {
        std::mt19937_64 rng(0x5eed);
        for (int t = 0; t < 20000; ++t) {
            const Vertex& a = ws[rng() % ws.size()];
            const Vertex& b = ws[rng() % ws.size()];
            if (!code.words.contains(summed(a, b)))
                throw param_error("code is not closed under addition");
        }
    }
    code.validated = full;
    return code;
}

LinearCode hamming_code(int q, int m) {
    if (!Field::valid_order(q)) throw param_error("hamming_code: invalid field order");
    if (m < 2) throw param_error("hamming_code: m must be >= 2");
    const Field f(q);

    // One column per projective point: nonzero vectors of GF(q)^m with first
    // nonzero coordinate 1, in lexicographic order.
    std::vector<std::vector<int>> cols;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > kMaxCodeWords) throw param_error("hamming_code: q^m too large");
    }
    for (std::uint64_t v = 1; v < total; ++v) {
        std::vector<int> col(static_cast<size_t>(m));
        std::uint64_t rest = v;
        for (int i = m - 1; i >= 0; --i) {
            col[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
            rest /= static_cast<std::uint64_t>(q);
        }
        int first = 0;
        while (col[static_cast<size_t>(first)] == 0) ++first;
        if (col[static_cast<size_t>(first)] != 1) continue;
        cols.push_back(std::move(col));
    }

    const int n = static_cast<int>(cols.size());
    std::vector<std::vector<int>> check(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r)
            check[static_cast<size_t>(r)][static_cast<size_t>(c)] = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];

    Params p(n, q);
    return make_linear_code(p, null_space(check, n, f), std::move(check));
}

LinearCode extended_perfect_code(int q) {
    const int k = [&] {
        int kk = 0, v = q;
        while (v > 1 && (v & 1) == 0) {
            v >>= 1;
            ++kk;
        }
        return (v == 1) ? kk : -1;
    }();
    if (k < 2 || k > 8) throw param_error("extended_perfect_code: q must be 2^k, 2 <= k <= 8");

    const Field f(q);
    const int n = q + 2;
    std::vector<std::vector<int>> check(3, std::vector<int>(static_cast<size_t>(n), 0));
    for (int t = 0; t < q; ++t) {
        check[0][static_cast<size_t>(t)] = 1;
        check[1][static_cast<size_t>(t)] = t;
        check[2][static_cast<size_t>(t)] = f.mul(t, t);
    }
    check[2][static_cast<size_t>(q)] = 1;      // (0,0,1)
    check[1][static_cast<size_t>(q + 1)] = 1;  // (0,1,0)

    Params p(n, q);
    LinearCode code = make_linear_code(p, null_space(check, n, f), std::move(check));

    // Cylinder validation is affordable only while the whole graph is
    // enumerable; beyond that the code is returned unvalidated.
    const Space s(p);
    if (s.count() <= kMaxEnumerable) {
        if (!is_extended_perfect_code(p, code.words))
            throw param_error("extended_perfect_code: construction failed cylinder validation");
    } else {
        code.validated = false;
    }
    return code;
}

LinearCode parity_extend(const LinearCode& c) {
    const Field f(c.params.q);
    Params p(c.params.n + 1, c.params.q);
    std::vector<Vertex> words;
    words.reserve(c.words.size());
    for (const Vertex& w : c.words) {
        int sum = 0;
        for (int i = 1; i <= c.params.n; ++i) sum = f.add(sum, w.digit(i));
        std::vector<std::uint8_t> d = w.digits();
        d.push_back(static_cast<std::uint8_t>(f.neg(sum)));
        words.emplace_back(std::move(d));
    }
    std::vector<std::vector<int>> check;
    for (const auto& row : c.parity_check) {
        std::vector<int> r = row;
        r.push_back(0);
        check.push_back(std::move(r));
    }
    check.emplace_back(static_cast<size_t>(p.n), 1);
    return make_linear_code(p, VertexSet(std::move(words)), std::move(check));
}

std::optional<int> min_distance(const VertexSet& c) {
    const auto& ws = c.words();
    if (ws.size() < 2) return std::nullopt;
    int best = ws[0].length() + 1;
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j) {
            const int d = distance(ws[i], ws[j]);
            if (d < best) best = d;
        }
    return best;
}

bool min_distance_at_least(const VertexSet& c, int d) {
    return !closest_pair_below(c, d).has_value();
}

std::optional<std::pair<Vertex, Vertex>> closest_pair_below(const VertexSet& c, int d) {
    const auto& ws = c.words();
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j)
            if (!distance_at_least(ws[i], ws[j], d)) return std::make_pair(ws[i], ws[j]);
    return std::nullopt;
}

VertexSet translate(const VertexSet& c, const Vertex& v, const Field& f) {
    std::vector<Vertex> out;
    out.reserve(c.size());
    for (const Vertex& w : c) {
        if (w.length() != v.length()) throw param_error("translate: mismatched word lengths");
        std::vector<std::uint8_t> d(static_cast<size_t>(w.length()));
        for (int i = 1; i <= w.length(); ++i)
            d[static_cast<size_t>(i - 1)] = static_cast<std::uint8_t>(f.add(w.digit(i), v.digit(i)));
        out.emplace_back(std::move(d));
    }
    return VertexSet(std::move(out));
}

SignedPair difference_pair(const VertexSet& c0, const VertexSet& c1) {
    return SignedPair(set_difference(c0, c1), set_difference(c1, c0));
}

std::optional<std::pair<Vertex, int>> find_cylinder_violation(const Params& p, const VertexSet& c) {
    const Space s(p);
    ensure_enumerable(s, "cylinder scan");
    const std::uint64_t lines = s.count() / static_cast<std::uint64_t>(p.q);

    for (int i = 1; i <= p.n; ++i) {
        std::vector<std::uint32_t> cnt(static_cast<size_t>(lines), 0);
        for (const Vertex& w : c) {
            const std::uint64_t widx = w.to_index(s);
            ++cnt[s.erase_digit(widx, i)];
            for (int j = 1; j <= p.n; ++j) {
                if (j == i) continue;
                for (int a = 0; a < p.q; ++a) {
                    if (a == w.digit(j)) continue;
                    ++cnt[s.erase_digit(s.with_digit(widx, j, a), i)];
                }
            }
        }
        for (std::uint64_t line = 0; line < lines; ++line) {
            if (cnt[line] != 1) {
                const std::uint64_t rep = s.insert_digit(line, i, 0);
                return std::make_pair(Vertex::from_index(s, rep), i);
            }
        }
    }
    return std::nullopt;
}

bool is_extended_perfect_code(const Params& p, const VertexSet& c) {
    if (!min_distance_at_least(c, 4)) return false;
    if (c.empty()) return false;
    return !find_cylinder_violation(p, c).has_value();
}

}  // namespace hambit
