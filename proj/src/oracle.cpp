#include "seatmatch/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace seatmatch {

namespace {

class Search {
public:
    Search(const LengthList& l, int v, const OracleOptions& options, bool counting)
        : v_(v), n_(l.size()), options_(options), counting_(counting),
          partner_(static_cast<std::size_t>(v), -1), cnt_(static_cast<std::size_t>(n_) + 1, 0) {
        for (int len = 1; len <= n_; ++len) cnt_[len] = l.count(len);
        if (v_ % 2 == 0) {
            unmatched_[0] = unmatched_[1] = v_ / 2;
            for (int len = 1; len <= n_; len += 2) odd_left_ += cnt_[len];
        }
    }

    OracleResult run() {
        const auto start = std::chrono::steady_clock::now();
        const bool fix = options_.symmetry && !counting_;
        if (v_ % 2 == 1) {
            if (fix) {
                partner_[0] = 0;  // rotate the uncovered vertex to 0
                uncovered_used_ = true;
            }
            recurse(0);
        } else if (fix && n_ > 0) {
            // any solution rotates and reflects onto one with the rarest
            // length at {0, len}
            int best = 0;
            for (int len = 1; len <= n_; ++len) {
                if (cnt_[len] > 0 && (best == 0 || cnt_[len] < cnt_[best])) best = len;
            }
            place(0, best, best);
            recurse(1);
        } else {
            recurse(0);
        }
        result_.stats.wall_time = std::chrono::steady_clock::now() - start;
        return std::move(result_);
    }

private:
    void place(int u, int w, int len) {
        partner_[u] = w;
        partner_[w] = u;
        --cnt_[len];
        if (v_ % 2 == 0) {
            --unmatched_[u % 2];
            --unmatched_[w % 2];
            odd_left_ -= len % 2;
        }
    }
    void unplace(int u, int w, int len) {
        partner_[u] = partner_[w] = -1;
        ++cnt_[len];
        if (v_ % 2 == 0) {
            ++unmatched_[u % 2];
            ++unmatched_[w % 2];
            odd_left_ += len % 2;
        }
    }

    bool parity_ok() const {
        for (int side = 0; side < 2; ++side) {
            int rest = unmatched_[side] - odd_left_;
            if (rest < 0 || rest % 2 != 0) return false;
        }
        return true;
    }

    void recurse(int from) {
        if (stop_) return;
        auto& stats = result_.stats;
        if (options_.node_limit && stats.nodes_expanded >= *options_.node_limit) {
            result_.aborted = stop_ = true;
            return;
        }
        ++stats.nodes_expanded;
        int u = from;
        while (u < v_ && partner_[u] >= 0) ++u;
        if (u == v_) {
            ++stats.solutions_found;
            if (!counting_) {
                record();
                stop_ = true;
            }
            return;
        }
        if (options_.parity_pruning && v_ % 2 == 0 && !parity_ok()) return;

        // descending remaining multiplicity, then ascending length
        int order[64];
        int k = 0;
        for (int len = 1; len <= n_; ++len) {
            if (cnt_[len] == 0) continue;
            int i = k++;
            while (i > 0 && cnt_[order[i - 1]] < cnt_[len]) {
                order[i] = order[i - 1];
                --i;
            }
            order[i] = len;
        }
        for (int i = 0; i < k; ++i) {
            const int len = order[i];
            const int up = (u + len) % v_;
            const int down = (u - len + v_) % v_;
            const int choices[2] = {up, down};
            for (int j = 0; j < (up == down ? 1 : 2); ++j) {
                const int w = choices[j];
                if (partner_[w] >= 0) continue;
                place(u, w, len);
                recurse(u + 1);
                unplace(u, w, len);
                if (stop_) return;
            }
        }
        if (v_ % 2 == 1 && !uncovered_used_) {
            uncovered_used_ = true;
            partner_[u] = u;
            recurse(u + 1);
            partner_[u] = -1;
            uncovered_used_ = false;
        }
    }

    void record() {
        std::vector<Edge> edges;
        for (int u = 0; u < v_; ++u) {
            if (partner_[u] > u) edges.push_back({u, partner_[u]});
        }
        result_.matching = Matching(v_, std::move(edges));
    }

    int v_, n_;
    OracleOptions options_;
    bool counting_;
    std::vector<int> partner_;
    std::vector<int> cnt_;
    int unmatched_[2] = {0, 0};
    int odd_left_ = 0;
    bool uncovered_used_ = false;
    bool stop_ = false;
    OracleResult result_;
};

void check_size(const LengthList& l, int v) {
    if (v < 1) throw InvalidArgument("order must be positive");
    if (l.size() != v / 2) {
        throw InvalidArgument("list has " + std::to_string(l.size()) + " lengths but K_" + std::to_string(v) +
                              " takes " + std::to_string(v / 2));
    }
    if (l.size() > 60) throw InvalidArgument("list too long for the oracle");
}

}  // namespace

OracleResult oracle_solve(const LengthList& l, int v, const OracleOptions& options) {
    check_size(l, v);
    return Search(l, v, options, false).run();
}

std::uint64_t oracle_count(const LengthList& l, int v) {
    check_size(l, v);
    if (v > 12) throw InvalidArgument("counting is limited to v <= 12");
    OracleOptions options;
    options.symmetry = false;
    return Search(l, v, options, true).run().stats.solutions_found;
}

// ---------------------------------------------------------------------------

MultisetEnumerator::MultisetEnumerator(int n, int max_len)
    : seq_(static_cast<std::size_t>(std::max(n, 0)), 1), max_len_(max_len) {
    if (n < 1 || max_len < 1) throw InvalidArgument("enumeration needs n >= 1 and max_len >= 1");
    if (max_len > n) throw InvalidArgument("lengths above n do not fit a list of size n");
}

bool MultisetEnumerator::next(LengthList& out) {
    if (done_) return false;
    if (started_) {
        int i = static_cast<int>(seq_.size()) - 1;
        while (i >= 0 && seq_[i] == max_len_) --i;
        if (i < 0) {
            done_ = true;
            return false;
        }
        const int value = seq_[i] + 1;
        std::fill(seq_.begin() + i, seq_.end(), value);
    }
    started_ = true;
    out = LengthList::from_lengths(seq_);
    return true;
}

std::vector<LengthList> enumerate_lists(int n, int max_len, const std::function<bool(const LengthList&)>& filter) {
    std::vector<LengthList> out;
    MultisetEnumerator e(n, max_len);
    LengthList l;
    while (e.next(l)) {
        if (!filter || filter(l)) out.push_back(l);
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int q = 3; q * q <= p; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

namespace {

bool even_many_evens(const LengthList& l) {
    int evens = 0;
    for (int len = 2; len <= l.size(); len += 2) evens += l.count(len);
    return evens % 2 == 0;
}

// Pulls lists from a shared enumerator in batches so workers need no
// materialized list vector.
template <class Visit>
void for_each_list_parallel(int n, int max_len, int workers, Visit visit) {
    MultisetEnumerator e(n, max_len);
    std::mutex m;
    std::uint64_t index = 0;
    bool stop = false;
    std::exception_ptr failure;
    auto worker = [&] {
        std::vector<std::pair<std::uint64_t, LengthList>> batch;
        for (;;) {
            batch.clear();
            {
                std::lock_guard lock(m);
                LengthList l;
                while (!stop && batch.size() < 64 && e.next(l)) batch.emplace_back(index++, l);
            }
            if (batch.empty()) return;
            try {
                for (auto& [i, l] : batch) visit(i, l);
            } catch (...) {
                std::lock_guard lock(m);
                if (!failure) failure = std::current_exception();
                stop = true;
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

ConjectureReport check_conjecture(int p, int workers, const OracleOptions& options) {
    if (!is_odd_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
    ConjectureReport report;
    report.p = p;
    std::mutex m;
    std::vector<std::pair<std::uint64_t, Counterexample>> found;
    std::atomic<std::uint64_t> checked{0};
    for_each_list_parallel(p, p - 1, workers, [&](std::uint64_t i, const LengthList& l) {
        OracleResult r = oracle_solve(l, 2 * p, options);
        if (r.aborted) throw InternalError("oracle aborted on {" + l.to_string() + "}");
        if (r.found() && !verify_realizes(*r.matching, l)) {
            throw InternalError("oracle certificate for {" + l.to_string() + "} does not verify");
        }
        ++checked;
        const bool predicted = even_many_evens(l);
        if (r.found() != predicted) {
            Counterexample c{l, r.found(), predicted, r.matching, r.stats.nodes_expanded};
            std::lock_guard lock(m);
            found.emplace_back(i, std::move(c));
        }
    });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, c] : found) report.counterexamples.push_back(std::move(c));
    report.lists_checked = checked;
    report.agrees = report.counterexamples.empty();
    return report;
}

bool check_coprime_lists(int n, int workers) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<int> values;
    for (int x = 1; x <= n; ++x) {
        if (gcd(x, 2 * n) == 1) values.push_back(x);
    }
    // enumerate multisets over the index set, then map to values
    const int k = static_cast<int>(values.size());
    std::vector<LengthList> lists;
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> lens;
        for (int i : idx) lens.push_back(values[i]);
        lists.push_back(LengthList::from_lengths(lens));
        int i = n - 1;
        while (i >= 0 && idx[i] == k - 1) --i;
        if (i < 0) break;
        std::fill(idx.begin() + i, idx.end(), idx[i] + 1);
    }
    std::atomic<bool> ok{true};
    parallel_for(lists.size(), workers, [&](std::size_t i) {
        if (!oracle_solve(lists[i], 2 * n).found()) ok = false;
    });
    return ok;
}

void sweep(const std::vector<LengthList>& lists, int v, int workers, const OracleOptions& options,
           const std::function<void(const SweepRecord&)>& sink) {
    std::vector<std::optional<SweepRecord>> done(lists.size());
    std::mutex m;
    std::size_t emitted = 0;
    parallel_for(lists.size(), workers, [&](std::size_t i) {
        OracleResult r = oracle_solve(lists[i], v, options);
        SweepRecord rec{lists[i], r.found() ? "found" : r.aborted ? "aborted" : "exhausted", r.stats.nodes_expanded,
                        std::chrono::duration<double, std::milli>(r.stats.wall_time).count()};
        std::lock_guard lock(m);
        done[i] = std::move(rec);
        while (emitted < done.size() && done[emitted]) {
            sink(*done[emitted]);
            done[emitted].reset();
            ++emitted;
        }
    });
}

}  // namespace seatmatch
