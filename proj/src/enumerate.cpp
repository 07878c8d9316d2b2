#include "subring/enumerate.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "subring/util.hpp"

namespace subring {

void require_prime(int64_t p) {
    if (p < 2 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

mpz_class search_space_size(const Composition& alpha, int64_t p) {
    const int m = alpha.length();
    mpz_class size = 1;
    for (int i = 1; i <= m - 1; ++i) {
        // row i carries m - i free entries, each with p^{alpha_i - 1} digits
        mpz_class per = pow_mpz(p, static_cast<unsigned long>(alpha.parts[i - 1] - 1));
        for (int j = i + 1; j <= m; ++j)
            size *= per;
    }
    return size;
}

namespace {

/*
 * Candidate matrices have the fixed shape
 *
 *   ( p^a1  p b12  p b13 ... 1 )
 *   (       p^a2   p b23 ... 1 )
 *   (                 ...      )
 *   (              p^a_{n-1} 1 )
 *   (                        1 )
 *
 * with 0 <= b_ij < p^{a_i - 1}. The all-ones column and every composite
 * involving column 1 or column n lie in the span automatically, so the
 * subring condition reduces to v_i o v_j in Col(A) for 2 <= i <= j <= n-1.
 * Such a composite has support in rows 1..i and back-substitution touches
 * only columns <= j, so the test for the pair (i,j) splits into
 *   - the divisibility checks at rows i..2, which never read row 1, and
 *   - one final divisibility at row 1.
 *
 * Columns are filled left to right. Within column j the small rows
 * 2..j-1 come first, each firing the row>=2 part of its pair test at
 * once; the row-1 digit comes last and is scanned against precomputed
 * row-1 residuals, one modular check per candidate. Scanning row 1 first
 * (top-to-bottom fill) re-explores the full digit range of row 1 before
 * any constraint can fire and is orders of magnitude slower for
 * compositions with a large first part.
 *
 * The walker is templated on the scalar used during back-substitution.
 * Intermediate values are bounded by M * (1 + p^A * 2^m) with M = p^{2A},
 * A = max alpha_i; the driver picks int64, 128-bit or arbitrary precision
 * from that bound.
 */
template <typename Z>
struct Walker {
    int m = 0;
    int64_t p = 0;
    std::vector<int64_t> diag;    // diag[i-1] = p^{alpha_i}
    std::vector<int64_t> range;   // range[i-1] = p^{alpha_i - 1}
    std::vector<int64_t> a;       // entry (i,j), 1-based, flat m*m
    std::vector<std::pair<int, int>> order; // fill order of the free entries
    uint64_t count = 0;

    int64_t& at(int i, int j) { return a[static_cast<size_t>(i - 1) * m + (j - 1)]; }
    int64_t at(int i, int j) const { return a[static_cast<size_t>(i - 1) * m + (j - 1)]; }

    void init(const Composition& alpha, int64_t prime) {
        m = alpha.length();
        if (m > 48)
            throw std::invalid_argument("composition length above the supported limit of 48");
        p = prime;
        diag.resize(m);
        range.resize(m);
        for (int i = 0; i < m; ++i) {
            diag[i] = pow_i64_checked(p, alpha.parts[i]);
            range[i] = diag[i] / p;
        }
        a.assign(static_cast<size_t>(m) * m, 0);
        for (int i = 1; i <= m; ++i)
            at(i, i) = diag[i - 1];
        order.clear();
        for (int j = 2; j <= m; ++j) {
            for (int i = 2; i < j; ++i)
                order.emplace_back(i, j);
            order.emplace_back(1, j);
        }
    }

    // Divisibility of v_i o v_j back-substitution at rows i..2; fills x[2..i].
    bool partial_rows(int i, int j, Z* x) const {
        for (int r = i; r >= 2; --r) {
            Z acc = Z(at(r, i)) * Z(at(r, j));
            for (int k = r + 1; k <= i; ++k)
                acc -= Z(at(r, k)) * x[k - 1];
            if (acc % diag[r - 1] != 0)
                return false;
            x[r - 1] = acc / diag[r - 1];
        }
        return true;
    }

    // Row >= 2 part of the pair test fired when entry (i,j), i >= 2, lands.
    bool entry_partial_ok(int i, int j) const {
        Z x[48];
        if (!partial_rows(i, j, x))
            return false;
        // column j rows 2..j-1 complete: the square test's row>=2 part is due
        if (i == j - 1 && !partial_rows(j, j, x))
            return false;
        return true;
    }

    // Row-1 residuals for the tests (i,j), 2 <= i <= j, once rows >= 2 of
    // column j are fixed: test i accepts digit b iff
    //   diag_1 | coef_i * (p b) - V_i         (i < j)
    //   diag_1 | (p b)^2 - diag_j * (p b) - V_j  (i = j)
    struct Row1Scan {
        std::vector<Z> coef; // coef[i-2] = entry (1,i), i = 2..j-1
        std::vector<Z> V;    // V[i-2] for i = 2..j
    };

    bool prepare_row1(int j, Row1Scan& scan) const {
        scan.coef.clear();
        scan.V.clear();
        Z x[48];
        for (int i = 2; i <= j; ++i) {
            if (!partial_rows(i, j, x))
                return false; // cannot happen: partial tests already passed
            Z v = 0;
            const int kmax = (i == j) ? j - 1 : i;
            for (int k = 2; k <= kmax; ++k)
                v += Z(at(1, k)) * x[k - 1];
            if (i < j)
                scan.coef.push_back(Z(at(1, i)));
            scan.V.push_back(v);
        }
        return true;
    }

    bool row1_ok(const Row1Scan& scan, int j, int64_t entry) const {
        const Z e = Z(entry);
        for (size_t t = 0; t < scan.coef.size(); ++t)
            if ((scan.coef[t] * e - scan.V[t]) % diag[0] != 0)
                return false;
        // square test for column j
        Z acc = e * e - Z(diag[j - 1]) * e - scan.V.back();
        return acc % diag[0] == 0;
    }

    void dfs(size_t depth) {
        if (depth == order.size()) {
            ++count;
            return;
        }
        const auto [i, j] = order[depth];
        if (i >= 2) {
            for (int64_t b = 0; b < range[i - 1]; ++b) {
                at(i, j) = p * b;
                if (entry_partial_ok(i, j))
                    dfs(depth + 1);
            }
            at(i, j) = 0;
        } else {
            Row1Scan scan;
            if (!prepare_row1(j, scan))
                return;
            for (int64_t b = 0; b < range[0]; ++b) {
                int64_t entry = p * b;
                if (row1_ok(scan, j, entry)) {
                    at(1, j) = entry;
                    dfs(depth + 1);
                }
            }
            at(1, j) = 0;
        }
    }

    // Validation used when replaying a pinned prefix: same checks the dfs
    // would have applied when placing entry `depth`.
    bool place_checked(size_t depth, int64_t digit) {
        const auto [i, j] = order[depth];
        if (digit < 0 || digit >= range[i - 1])
            throw std::invalid_argument("prefix digit out of range");
        at(i, j) = p * digit;
        if (i >= 2)
            return entry_partial_ok(i, j);
        Row1Scan scan;
        if (!prepare_row1(j, scan))
            return false;
        return row1_ok(scan, j, at(1, j));
    }

    void collect_prefixes(size_t level, size_t depth, std::vector<int64_t>& cur,
                          std::vector<std::vector<int64_t>>& out) {
        if (level == depth) {
            out.push_back(cur);
            return;
        }
        const auto [i, j] = order[level];
        for (int64_t b = 0; b < range[i - 1]; ++b) {
            if (place_checked(level, b)) {
                cur.push_back(b);
                collect_prefixes(level + 1, depth, cur, out);
                cur.pop_back();
            }
        }
        at(i, j) = 0;
    }

    void apply_prefix(const std::vector<int64_t>& prefix) {
        for (size_t d = 0; d < prefix.size(); ++d) {
            const auto [i, j] = order[d];
            at(i, j) = p * prefix[d];
        }
    }
};

// Ceiling on |values| seen during back-substitution: p^{2A} * (1 + p^A * 2^m).
mpz_class growth_bound(const Composition& alpha, int64_t p) {
    unsigned long A = 0;
    for (int part : alpha.parts)
        A = std::max(A, static_cast<unsigned long>(part));
    mpz_class M = pow_mpz(p, 2 * A);
    mpz_class bound = M * (1 + pow_mpz(p, A) * pow_mpz(2, alpha.length()));
    return bound;
}

template <typename Z>
mpz_class run_enumeration(const Composition& alpha, int64_t p, const EnumerateOptions& opt) {
    Walker<Z> base;
    base.init(alpha, p);

    int jobs = opt.jobs > 0 ? opt.jobs
                            : std::max(1u, std::thread::hardware_concurrency());
    if (base.order.empty() || jobs == 1) {
        base.dfs(0);
        return mpz_class(base.count);
    }

    // Split by pinning a prefix of entries; aim for >= 4 branches per worker.
    size_t depth;
    if (opt.prefix_depth >= 0) {
        depth = std::min<size_t>(opt.prefix_depth, base.order.size());
    } else {
        depth = 0;
        uint64_t width = 1;
        while (depth < base.order.size() && width < 4ull * jobs) {
            width *= static_cast<uint64_t>(base.range[base.order[depth].first - 1]);
            ++depth;
        }
    }

    std::vector<std::vector<int64_t>> prefixes;
    {
        std::vector<int64_t> cur;
        Walker<Z> w = base;
        w.collect_prefixes(0, depth, cur, prefixes);
    }

    std::atomic<size_t> next{0};
    std::mutex sum_mutex;
    mpz_class total = 0;
    auto worker = [&]() {
        uint64_t local = 0;
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= prefixes.size())
                break;
            Walker<Z> w = base;
            w.apply_prefix(prefixes[idx]);
            w.dfs(depth);
            local += w.count;
        }
        std::lock_guard<std::mutex> lk(sum_mutex);
        total += mpz_class(local);
    };
    std::vector<std::thread> threads;
    const int nthreads = std::min<size_t>(jobs, std::max<size_t>(prefixes.size(), 1));
    threads.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    return total;
}

void check_budget(const Composition& alpha, int64_t p, uint64_t budget) {
    mpz_class size = search_space_size(alpha, p);
    if (size > mpz_class(budget))
        throw BudgetError("search space for alpha=" + alpha.str() + ", p=" + std::to_string(p) +
                              " has " + size.get_str() + " leaf candidates, over the budget of " +
                              std::to_string(budget),
                          size.get_str());
}

mpz_class dispatch(const Composition& alpha, int64_t p, const EnumerateOptions& opt) {
    mpz_class bound = growth_bound(alpha, p);
    static const mpz_class lim64 = mpz_class(1) << 62;
    static const mpz_class lim128 = mpz_class(1) << 125;
    if (bound < lim64)
        return run_enumeration<int64_t>(alpha, p, opt);
    if (bound < lim128)
        return run_enumeration<int128>(alpha, p, opt);
    return run_enumeration<mpz_class>(alpha, p, opt);
}

} // namespace

mpz_class count_g_alpha(const Composition& alpha, int64_t p, const EnumerateOptions& opt) {
    require_prime(p);
    check_budget(alpha, p, opt.budget);
    return dispatch(alpha, p, opt);
}

mpz_class count_task(const EnumerationTask& task) {
    require_prime(task.p);
    Walker<int128> w;
    w.init(task.alpha, task.p);
    if (task.prefix.size() > w.order.size())
        throw std::invalid_argument("task prefix longer than entry list");
    for (size_t d = 0; d < task.prefix.size(); ++d)
        if (!w.place_checked(d, task.prefix[d]))
            return 0;
    w.dfs(task.prefix.size());
    return mpz_class(w.count);
}

mpz_class count_g_n(int n, int e, int64_t p, const EnumerateOptions& opt) {
    if (n < 2)
        throw std::invalid_argument("count_g_n: n must be >= 2");
    require_prime(p);
    if (e < 0)
        throw std::invalid_argument("count_g_n: e must be >= 0");
    mpz_class total = 0;
    for (const auto& alpha : compositions(e, n - 1))
        total += count_g_alpha(alpha, p, opt);
    return total;
}

bool check_gn_recurrence(int n, int e, int64_t p, const EnumerateOptions& opt) {
    if (n <= 1 || e < n - 1)
        throw std::invalid_argument("check_gn_recurrence: need n > 1 and e >= n-1");
    mpz_class lhs = count_g_n(n, e, p, opt);
    mpz_class rhs;
    if (n >= 3)
        rhs = count_g_n(n - 1, e - 1, p, opt);
    else
        rhs = (e == 1) ? 1 : 0; // g_1(p^{e-1}) under the recursion conventions
    for (const auto& alpha : compositions_first_gt1(e, n - 1))
        rhs += count_g_alpha(alpha, p, opt);
    return lhs == rhs;
}

} // namespace subring
