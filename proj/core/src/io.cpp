#include "hambit/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace hambit::io {

namespace {

// Strips a trailing '\r' so CRLF input parses; output is always LF.
std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t') return false;
    }
    return true;
}

int parse_header_int(const std::string& line, const std::string& key, int lineno) {
    std::istringstream ss(line);
    std::string k;
    long long value = 0;
    if (!(ss >> k >> value) || k != key)
        throw parse_error("expected header line '" + key + " <int>'", lineno);
    std::string rest;
    if (ss >> rest) throw parse_error("trailing content after header value", lineno);
    if (value < 1 || value > 1'000'000) throw parse_error("header value out of range", lineno);
    return static_cast<int>(value);
}

Vertex parse_word(const std::string& token, const Params& p, int lineno) {
    std::vector<std::uint8_t> digits;
    digits.reserve(static_cast<size_t>(p.n));
    if (p.q <= 10) {
        for (char c : token) {
            if (c < '0' || c > '9') throw parse_error("invalid digit character", lineno);
            digits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    } else {
        std::istringstream ss(token);
        std::string part;
        while (std::getline(ss, part, ',')) {
            int v;
            try {
                size_t used = 0;
                v = std::stoi(part, &used);
                if (used != part.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw parse_error("invalid digit '" + part + "'", lineno);
            }
            if (v < 0 || v > 255) throw parse_error("digit out of range", lineno);
            digits.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (static_cast<int>(digits.size()) != p.n)
        throw parse_error("word length does not match n", lineno);
    for (std::uint8_t d : digits)
        if (d >= p.q) throw parse_error("digit out of range for alphabet", lineno);
    return Vertex(std::move(digits));
}

}  // namespace

BitradeDoc parse_bitrade(std::istream& in) {
    std::string line;
    int lineno = 0;
    int header_seen = 0;
    int n = 0, q = 0;
    std::vector<Vertex> plus, minus;
    std::map<Vertex, char> seen;
    std::optional<Params> params;

    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (blank_or_comment(line)) continue;

        if (header_seen < 2) {
            if (header_seen == 0)
                n = parse_header_int(line, "n", lineno);
            else {
                q = parse_header_int(line, "q", lineno);
                if (q < 3) throw parse_error("unsupported alphabet: q must be >= 3", lineno);
                try {
                    params = Params(n, q);
                } catch (const param_error& e) {
                    throw parse_error(e.what(), lineno);
                }
            }
            ++header_seen;
            continue;
        }

        std::istringstream ss(line);
        std::string sign, token, rest;
        if (!(ss >> sign >> token) || (ss >> rest))
            throw parse_error("expected '<sign> <word>'", lineno);
        if (sign != "+" && sign != "-") throw parse_error("sign must be '+' or '-'", lineno);

        Vertex w = parse_word(token, *params, lineno);
        auto [it, inserted] = seen.emplace(w, sign[0]);
        if (!inserted) {
            if (it->second != sign[0])
                throw parse_error("word appears with both signs", lineno);
            throw parse_error("duplicate word", lineno);
        }
        (sign == "+" ? plus : minus).push_back(std::move(w));
    }
    if (header_seen < 2) throw parse_error("missing 'n'/'q' header", lineno + 1);

    return BitradeDoc{*params, SignedPair(VertexSet(std::move(plus)), VertexSet(std::move(minus)))};
}

BitradeDoc parse_bitrade_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path, 0);
    return parse_bitrade(in);
}

std::string serialize_bitrade(const Params& p, const SignedPair& pair) {
    std::string out = "n " + std::to_string(p.n) + "\nq " + std::to_string(p.q) + "\n";
    for (const Vertex& v : pair.plus) out += "+ " + to_string(v, p) + "\n";
    for (const Vertex& v : pair.minus) out += "- " + to_string(v, p) + "\n";
    return out;
}

std::string serialize_code(const Params& p, const VertexSet& code) {
    return serialize_bitrade(p, SignedPair(code, VertexSet{}));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open file for writing: " + path, 0);
    out << content;
    if (!out) throw parse_error("write failed: " + path, 0);
}

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "degenerate";
    }
}

std::string render_report(const Params& p, const SignedPair& pair,
                          const std::vector<Verdict>& verdicts,
                          std::optional<bool> agreement) {
    std::string out;
    out += "n: " + std::to_string(p.n) + "\n";
    out += "q: " + std::to_string(p.q) + "\n";
    out += "plus: " + std::to_string(pair.plus.size()) + "\n";
    out += "minus: " + std::to_string(pair.minus.size()) + "\n";

    bool any_fail = false, any_degenerate = false;
    for (const Verdict& v : verdicts) {
        const std::string name = definition_name(v.definition);
        out += name + ": " + status_name(v.status) + "\n";
        if (v.counterexample) {
            if (v.counterexample->vertex)
                out += name + "_counterexample: " + to_string(*v.counterexample->vertex, p) + "\n";
            if (v.counterexample->coord)
                out += name + "_coordinate: " + std::to_string(*v.counterexample->coord) + "\n";
            if (!v.counterexample->note.empty())
                out += name + "_note: " + v.counterexample->note + "\n";
        }
        any_fail |= v.status == Status::fail;
        any_degenerate |= v.status == Status::degenerate;
    }
    if (agreement) out += std::string("agreement: ") + (*agreement ? "true" : "false") + "\n";
    out += std::string("overall: ") +
           (any_fail ? "fail" : (any_degenerate ? "degenerate" : "pass")) + "\n";
    return out;
}

}  // namespace hambit::io
