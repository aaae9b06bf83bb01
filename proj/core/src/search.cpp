#include "hambit/search.hpp"

#include <algorithm>
#include <chrono>

namespace hambit {

Feasibility feasible_params(int n, int q) {
    if (q < 3) throw param_error("feasible_params: q must be >= 3");
    if (n < 1) throw param_error("feasible_params: n must be >= 1");
    if (n % 2 != 0) return {false, "n is odd"};
    if (n % q != 2 % q) return {false, "n != 2 (mod q)"};
    return {true, "n is even and n = l*q + 2 with l = " + std::to_string((n - 2) / q)};
}

std::vector<SignedPair> brute_force_enumerate(const Params& p) {
    const Space s(p);
    if (s.count() > 12) throw param_error("brute_force_enumerate: q^n must be <= 12");
    if (!feasible_params(p.n, p.q).ok) return {};

    const int nv = static_cast<int>(s.count());
    std::vector<int> sign(static_cast<size_t>(nv), 0);  // 0, +1, -1
    std::vector<SignedPair> out;
    for (;;) {
        VertexSet plus, minus;
        for (int v = 0; v < nv; ++v) {
            if (sign[static_cast<size_t>(v)] == 1)
                plus.insert(Vertex::from_index(s, static_cast<std::uint64_t>(v)));
            else if (sign[static_cast<size_t>(v)] == -1)
                minus.insert(Vertex::from_index(s, static_cast<std::uint64_t>(v)));
        }
        if (!plus.empty() && !minus.empty()) {
            SignedPair pair(std::move(plus), std::move(minus));
            if (check_cylinder(p, pair).passed()) out.push_back(std::move(pair));
        }
        int pos = nv - 1;
        while (pos >= 0) {
            int& v = sign[static_cast<size_t>(pos)];
            v = (v == 0) ? 1 : (v == 1 ? -1 : 0);
            if (v != 0) break;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class Backtracker {
  public:
    Backtracker(const SearchConfig& cfg, const Space& s) : cfg_(cfg), s_(s), p_(s.params()) {
        // Candidate vertices in lexicographic order; everything else is 0.
        if (cfg.restrict_support) {
            for (const Vertex& v : *cfg.restrict_support) {
                if (!v.valid_for(p_)) throw param_error("search: restriction word does not fit H(n,q)");
                candidates_.push_back(v.to_index(s_));
            }
            std::sort(candidates_.begin(), candidates_.end());
        } else {
            candidates_.resize(static_cast<size_t>(s.count()));
            for (std::uint64_t i = 0; i < s.count(); ++i) candidates_[static_cast<size_t>(i)] = i;
        }

        lines_ = s.count() / static_cast<std::uint64_t>(p_.q);
        const std::size_t ncyl = static_cast<std::size_t>(lines_) * static_cast<std::size_t>(p_.n);
        cnt_plus_.assign(ncyl, 0);
        cnt_minus_.assign(ncyl, 0);
        remaining_.assign(ncyl, 0);

        cyl_of_.resize(candidates_.size());
        for (std::size_t k = 0; k < candidates_.size(); ++k) {
            cyl_of_[k] = cylinders_of(candidates_[k]);
            for (std::uint32_t c : cyl_of_[k]) ++remaining_[c];
        }

        if (cfg.budget_seconds)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*cfg.budget_seconds));
    }

    SearchResult run() {
        SearchResult result;
        if (cfg_.fix_seed_vertex && (candidates_.empty() || candidates_[0] != 0)) {
            result.note = "seed vertex is outside the search region";
            return result;
        }
        dfs(0);
        std::sort(found_.begin(), found_.end());
        result.pairs = std::move(found_);
        result.complete = !aborted_;
        if (aborted_) result.note = "wall-clock budget exhausted; result may be incomplete";
        return result;
    }

  private:
    std::vector<std::uint32_t> cylinders_of(std::uint64_t v) const {
        std::vector<std::uint32_t> out;
        out.reserve(static_cast<size_t>(p_.n) * static_cast<size_t>(1 + (p_.n - 1) * (p_.q - 1)));
        for (int i = 1; i <= p_.n; ++i) {
            const std::uint64_t base = static_cast<std::uint64_t>(i - 1) * lines_;
            out.push_back(static_cast<std::uint32_t>(base + s_.erase_digit(v, i)));
            for (int j = 1; j <= p_.n; ++j) {
                if (j == i) continue;
                const int d = s_.digit(v, j);
                for (int a = 0; a < p_.q; ++a)
                    if (a != d)
                        out.push_back(static_cast<std::uint32_t>(
                            base + s_.erase_digit(s_.with_digit(v, j, a), i)));
            }
        }
        return out;
    }

    bool out_of_time() {
        if (!deadline_) return false;
        if (++tick_ % 1024 == 0 && std::chrono::steady_clock::now() > *deadline_) aborted_ = true;
        return aborted_;
    }

    bool distance_ok(std::uint64_t v, const std::vector<std::uint64_t>& same_side) const {
        for (std::uint64_t w : same_side) {
            int diff = 0;
            for (int i = 1; i <= p_.n; ++i)
                if (s_.digit(v, i) != s_.digit(w, i) && ++diff >= 4) break;
            if (diff < 4) return false;
        }
        return true;
    }

    void dfs(std::size_t k) {
        if (aborted_ || out_of_time()) return;
        if (k == candidates_.size()) {
            if (!plus_.empty() && !minus_.empty()) emit();
            return;
        }
        const std::uint64_t v = candidates_[k];
        const bool support_full =
            cfg_.max_support && plus_.size() + minus_.size() >= *cfg_.max_support;

        for (int choice = 0; choice < 3; ++choice) {  // +, -, 0
            if (cfg_.fix_seed_vertex && k == 0 && choice != 0) break;
            const int sgn = (choice == 0) ? 1 : (choice == 1 ? -1 : 0);
            if (sgn != 0 && support_full) continue;
            if (sgn == 1 && !distance_ok(v, plus_)) continue;
            if (sgn == -1 && !distance_ok(v, minus_)) continue;

            auto& cnt = (sgn == 1) ? cnt_plus_ : cnt_minus_;
            if (sgn != 0) {
                bool clash = false;
                for (std::uint32_t c : cyl_of_[k])
                    if (cnt[c] != 0) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                for (std::uint32_t c : cyl_of_[k]) ++cnt[c];
                if (sgn == 1)
                    plus_.push_back(v);
                else
                    minus_.push_back(v);
            }

            // Cylinders whose last candidate this was must balance now.
            bool balanced = true;
            for (std::uint32_t c : cyl_of_[k])
                if (--remaining_[c] == 0 && cnt_plus_[c] != cnt_minus_[c]) balanced = false;

            if (balanced) dfs(k + 1);

            for (std::uint32_t c : cyl_of_[k]) ++remaining_[c];
            if (sgn != 0) {
                for (std::uint32_t c : cyl_of_[k]) --cnt[c];
                if (sgn == 1)
                    plus_.pop_back();
                else
                    minus_.pop_back();
            }
            if (aborted_) return;
        }
    }

    void emit() {
        VertexSet plus, minus;
        for (std::uint64_t v : plus_) plus.insert(Vertex::from_index(s_, v));
        for (std::uint64_t v : minus_) minus.insert(Vertex::from_index(s_, v));
        SignedPair pair(std::move(plus), std::move(minus));
        const CheckReport report = check_all(p_, pair);
        if (report.overall() != Status::pass || !report.agreement)
            throw std::logic_error("backtrack_search: emitted pair fails verification");
        found_.push_back(std::move(pair));
    }

    const SearchConfig& cfg_;
    const Space& s_;
    Params p_;
    std::uint64_t lines_ = 0;
    std::vector<std::uint64_t> candidates_;
    std::vector<std::vector<std::uint32_t>> cyl_of_;
    std::vector<std::uint32_t> cnt_plus_, cnt_minus_, remaining_;
    std::vector<std::uint64_t> plus_, minus_;
    std::vector<SignedPair> found_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t tick_ = 0;
    bool aborted_ = false;
};

}  // namespace

SearchResult backtrack_search(const SearchConfig& cfg) {
    const Feasibility feas = feasible_params(cfg.params.n, cfg.params.q);
    if (!feas.ok) return SearchResult{{}, true, "infeasible parameters: " + feas.reason};

    const Space s(cfg.params);
    ensure_enumerable(s, "backtrack_search");
    Backtracker bt(cfg, s);
    return bt.run();
}

}  // namespace hambit
