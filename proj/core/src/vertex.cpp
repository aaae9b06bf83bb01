#include "hambit/vertex.hpp"

namespace hambit {

IntFunction characteristic_function(const Space& s, const SignedPair& p) {
    IntFunction f(s);
    for (const Vertex& v : p.plus) f.at(v.to_index(s)) = 1;
    for (const Vertex& v : p.minus) f.at(v.to_index(s)) = -1;
    return f;
}

SignedPair pair_from_function(const Space& s, const IntFunction& f) {
    VertexSet plus, minus;
    for (std::uint64_t i = 0; i < s.count(); ++i) {
        const long long v = f.at(i);
        if (v == 1)
            plus.insert(Vertex::from_index(s, i));
        else if (v == -1)
            minus.insert(Vertex::from_index(s, i));
        else if (v != 0)
            throw param_error("pair_from_function: function is not (0,+-1)-valued");
    }
    return SignedPair(std::move(plus), std::move(minus));
}

std::string to_string(const Vertex& v, const Params& p) {
    std::string out;
    if (p.q <= 10) {
        for (int i = 1; i <= v.length(); ++i) out.push_back(static_cast<char>('0' + v.digit(i)));
    } else {
        for (int i = 1; i <= v.length(); ++i) {
            if (i > 1) out.push_back(',');
            out += std::to_string(v.digit(i));
        }
    }
    return out;
}

}  // namespace hambit
