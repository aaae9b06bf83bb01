#include "hambit/hamming.hpp"

namespace hambit {

namespace detail {

void require_coord(const Params& p, int i) {
    if (i < 1 || i > p.n) throw param_error("coordinate index out of range");
}

void require_vertex(const Params& p, const Vertex& x, const char* what) {
    if (!x.valid_for(p)) throw param_error(std::string(what) + ": vertex does not fit H(n,q)");
}

}  // namespace detail

int distance(const Vertex& x, const Vertex& y) {
    if (x.length() != y.length()) throw param_error("distance: mismatched word lengths");
    int d = 0;
    for (int i = 1; i <= x.length(); ++i)
        if (x.digit(i) != y.digit(i)) ++d;
    return d;
}

bool distance_at_least(const Vertex& x, const Vertex& y, int d) {
    if (x.length() != y.length()) throw param_error("distance: mismatched word lengths");
    int seen = 0;
    for (int i = 1; i <= x.length(); ++i) {
        if (x.digit(i) != y.digit(i) && ++seen >= d) return true;
    }
    return seen >= d;
}

namespace {

// Enumerates all words at distance exactly r from x by choosing r coordinates
// and nonzero digit changes in each.
void sphere_rec(const Params& p, Vertex& cur, const Vertex& x, int from, int left, VertexSet& out) {
    if (left == 0) {
        out.insert(cur);
        return;
    }
    for (int i = from; i <= p.n - left + 1; ++i) {
        for (int a = 0; a < p.q; ++a) {
            if (a == x.digit(i)) continue;
            cur.set_digit(i, a);
            sphere_rec(p, cur, x, i + 1, left - 1, out);
        }
        cur.set_digit(i, x.digit(i));
    }
}

}  // namespace

VertexSet sphere(const Params& p, const Vertex& x, int r) {
    detail::require_vertex(p, x, "sphere");
    if (r < 0) throw param_error("sphere: negative radius");
    VertexSet out;
    if (r > p.n) return out;
    Vertex cur = x;
    sphere_rec(p, cur, x, 1, r, out);
    return out;
}

VertexSet ball(const Params& p, const Vertex& x, int r) {
    detail::require_vertex(p, x, "ball");
    VertexSet out;
    for (int i = 0; i <= std::min(r, p.n); ++i) {
        Vertex cur = x;
        sphere_rec(p, cur, x, 1, i, out);
    }
    return out;
}

VertexSet line_clique(const Params& p, const Vertex& x, int i) {
    detail::require_vertex(p, x, "line_clique");
    detail::require_coord(p, i);
    VertexSet out;
    Vertex cur = x;
    for (int a = 0; a < p.q; ++a) {
        cur.set_digit(i, a);
        out.insert(cur);
    }
    return out;
}

VertexSet fiber_clique(const Params& p, const Vertex& x, int i) {
    if (x.length() != p.n - 1) throw param_error("fiber_clique: vertex must live in H(n-1,q)");
    Params below(p.n - 1, p.q);
    detail::require_vertex(below, x, "fiber_clique");
    if (i < 1 || i > p.n) throw param_error("coordinate index out of range");
    VertexSet out;
    for (int a = 0; a < p.q; ++a) out.insert(insert_coord(below, x, i, a));
    return out;
}

VertexSet cylinder(const Params& p, const Vertex& x, int i) {
    detail::require_vertex(p, x, "cylinder");
    detail::require_coord(p, i);
    VertexSet out;
    Vertex center = x;
    for (int a = 0; a < p.q; ++a) {
        center.set_digit(i, a);
        Vertex cur = center;
        sphere_rec(p, cur, center, 1, 0, out);
        cur = center;
        sphere_rec(p, cur, center, 1, 1, out);
    }
    return out;
}

Vertex insert_coord(const Params& p, const Vertex& x, int i, int a) {
    detail::require_vertex(p, x, "insert_coord");
    if (i < 1 || i > p.n + 1) throw param_error("insert_coord: position out of range");
    if (a < 0 || a >= p.q) throw param_error("insert_coord: digit out of range");
    std::vector<std::uint8_t> d;
    d.reserve(static_cast<size_t>(p.n) + 1);
    for (int j = 1; j < i; ++j) d.push_back(static_cast<std::uint8_t>(x.digit(j)));
    d.push_back(static_cast<std::uint8_t>(a));
    for (int j = i; j <= p.n; ++j) d.push_back(static_cast<std::uint8_t>(x.digit(j)));
    return Vertex(std::move(d));
}

Vertex delete_coord(const Params& p, const Vertex& x, int i) {
    detail::require_vertex(p, x, "delete_coord");
    if (p.n < 2) throw param_error("delete_coord: word length must be >= 2");
    detail::require_coord(p, i);
    std::vector<std::uint8_t> d;
    d.reserve(static_cast<size_t>(p.n) - 1);
    for (int j = 1; j <= p.n; ++j)
        if (j != i) d.push_back(static_cast<std::uint8_t>(x.digit(j)));
    return Vertex(std::move(d));
}

VertexSet delete_coord(const Params& p, const VertexSet& s, int i) {
    VertexSet out;
    for (const Vertex& v : s) out.insert(delete_coord(p, v, i));
    return out;
}

SignedPair project_pair(const Params& p, const SignedPair& pair, int i) {
    if (p.n < 2) throw param_error("project_pair: word length must be >= 2");
    detail::require_coord(p, i);
    VertexSet a_plus = delete_coord(p, pair.plus, i);
    VertexSet a_minus = delete_coord(p, pair.minus, i);
    return SignedPair(set_difference(a_plus, a_minus), set_difference(a_minus, a_plus));
}

IntFunction adjacency_apply(const Space& s, const IntFunction& f) {
    if (f.params() != s.params()) throw param_error("adjacency_apply: mismatched parameters");
    const Params p = s.params();
    IntFunction out(s);
    // Per direction, accumulate the line sum and write lineSum - f(x) to every
    // vertex on the line.  O(n * q^n) overall.
    for (int i = 1; i <= p.n; ++i) {
        const std::uint64_t stride = s.stride(i);
        const std::uint64_t block = stride * static_cast<std::uint64_t>(p.q);
        for (std::uint64_t base = 0; base < s.count(); base += block) {
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                long long sum = 0;
                for (int a = 0; a < p.q; ++a)
                    sum = detail::checked_add(sum, f.at(base + static_cast<std::uint64_t>(a) * stride + lo));
                for (int a = 0; a < p.q; ++a) {
                    const std::uint64_t idx = base + static_cast<std::uint64_t>(a) * stride + lo;
                    out.at(idx) = detail::checked_add(out.at(idx), sum - f.at(idx));
                }
            }
        }
    }
    return out;
}

}  // namespace hambit
