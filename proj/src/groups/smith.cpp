#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <limits>
#include <type_traits>
#include <map>
#include <set>

#include "zsurg/groups.hpp"

namespace zsurg {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

struct Dense {
    IntMatrix a;
    IntMatrix left, right;
    bool track;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j)
    {
        std::swap(a[i], a[j]);
        if (track)
            std::swap(left[i], left[j]);
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        for (auto& r : a)
            std::swap(r[i], r[j]);
        if (track)
            for (auto& r : right)
                std::swap(r[i], r[j]);
    }
    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const BigInt& q)
    {
        for (std::size_t c = 0; c < cols; ++c)
            if (a[j][c] != 0)
                a[i][c] += q * a[j][c];
        if (track)
            for (std::size_t c = 0; c < rows; ++c)
                if (left[j][c] != 0)
                    left[i][c] += q * left[j][c];
    }
    // col i += q * col j
    void add_col(std::size_t i, std::size_t j, const BigInt& q)
    {
        for (std::size_t r = 0; r < rows; ++r)
            if (a[r][j] != 0)
                a[r][i] += q * a[r][j];
        if (track)
            for (std::size_t r = 0; r < cols; ++r)
                if (right[r][j] != 0)
                    right[r][i] += q * right[r][j];
    }
    void negate_row(std::size_t i)
    {
        for (auto& x : a[i])
            x = -x;
        if (track)
            for (auto& x : left[i])
                x = -x;
    }
};

// Truncating division leaves a remainder strictly smaller than the pivot.
BigInt quot(const BigInt& x, const BigInt& p) { return x / p; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input, bool record_transforms)
{
    Dense d;
    d.a = input;
    d.rows = input.size();
    d.cols = d.rows ? input[0].size() : 0;
    d.track = record_transforms;
    if (record_transforms) {
        d.left = identity(d.rows);
        d.right = identity(d.cols);
    }

    const std::size_t steps = std::min(d.rows, d.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block
            std::size_t pr = d.rows, pc = d.cols;
            BigInt best;
            for (std::size_t r = t; r < d.rows; ++r)
                for (std::size_t c = t; c < d.cols; ++c)
                    if (d.a[r][c] != 0 && (pr == d.rows || babs(d.a[r][c]) < best)) {
                        best = babs(d.a[r][c]);
                        pr = r;
                        pc = c;
                    }
            if (pr == d.rows)
                goto done;
            d.swap_rows(t, pr);
            d.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < d.rows; ++r)
                if (d.a[r][t] != 0) {
                    d.add_row(r, t, -quot(d.a[r][t], d.a[t][t]));
                    if (d.a[r][t] != 0)
                        clean = false;
                }
            for (std::size_t c = t + 1; c < d.cols; ++c)
                if (d.a[t][c] != 0) {
                    d.add_col(c, t, -quot(d.a[t][c], d.a[t][t]));
                    if (d.a[t][c] != 0)
                        clean = false;
                }
            if (!clean)
                continue;

            std::size_t bad = d.rows;
            for (std::size_t r = t + 1; r < d.rows && bad == d.rows; ++r)
                for (std::size_t c = t + 1; c < d.cols; ++c)
                    if (d.a[r][c] % d.a[t][t] != 0) {
                        bad = r;
                        break;
                    }
            if (bad == d.rows)
                break;
            d.add_row(t, bad, 1);
        }
        if (d.a[t][t] < 0)
            d.negate_row(t);
    }
done:
    SmithForm out;
    for (std::size_t t = 0; t < steps; ++t)
        out.diagonal.push_back(d.a[t][t]);
    out.left = std::move(d.left);
    out.right = std::move(d.right);
    return out;
}

namespace {

struct Overflow {};

// Arithmetic for the exact fallback. The long long and __int128 versions
// throw Overflow so the caller can redo the work with a wider type.
inline long long sub_mul(long long x, long long f, long long v)
{
    long long p, r;
    if (__builtin_mul_overflow(f, v, &p) || __builtin_sub_overflow(x, p, &r))
        throw Overflow{};
    return r;
}
inline __int128 sub_mul(__int128 x, __int128 f, __int128 v)
{
    __int128 p, r;
    if (__builtin_mul_overflow(f, v, &p) || __builtin_sub_overflow(x, p, &r))
        throw Overflow{};
    return r;
}
inline BigInt sub_mul(const BigInt& x, const BigInt& f, const BigInt& v) { return x - f * v; }

inline long long magnitude(long long x)
{
    if (x == std::numeric_limits<long long>::min())
        throw Overflow{};
    return x < 0 ? -x : x;
}
inline __int128 magnitude(__int128 x)
{
    if (x == -x && x != 0)
        throw Overflow{};
    return x < 0 ? -x : x;
}
inline BigInt magnitude(const BigInt& x) { return babs(x); }

inline BigInt to_big(long long v) { return BigInt(v); }
inline BigInt to_big(const BigInt& v) { return v; }
inline BigInt to_big(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<unsigned long long>(u >> 64);
    out <<= 64;
    out += static_cast<unsigned long long>(u);
    return neg ? BigInt(-out) : out;
}

template <typename T>
using SparseRow = std::map<int, T>;

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(__int128 v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Diagonal factors merged pairwise into the invariant-factor chain.
std::vector<BigInt> invariant_factors(std::vector<BigInt> d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    std::vector<BigInt> out;
    for (const BigInt& x : d)
        if (x != 1)
            out.push_back(x);
    return out;
}

/// Exact sparse diagonalization. The pivot is the entry of least magnitude,
/// ties broken by Markowitz cost. Column operations are applied only once
/// the pivot column is a singleton, so they touch the pivot row alone.
template <typename T>
AbelianGroup exact_invariants(const IntMatrix& input, int cols)
{
    std::vector<SparseRow<T>> rows;
    rows.reserve(input.size());
    for (const auto& r : input) {
        SparseRow<T> s;
        for (int c = 0; c < cols; ++c) {
            const BigInt& v = r[static_cast<std::size_t>(c)];
            if (v == 0)
                continue;
            if constexpr (std::is_same_v<T, BigInt>) {
                s.emplace(c, v);
            } else {
                if (v > std::numeric_limits<long long>::max() || v < -std::numeric_limits<long long>::max())
                    throw Overflow{};
                s.emplace(c, static_cast<T>(static_cast<long long>(v)));
            }
        }
        if (!s.empty())
            rows.push_back(std::move(s));
    }
    std::vector<std::set<int>> col_rows(static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i])
            col_rows[static_cast<std::size_t>(c)].insert(static_cast<int>(i));
    std::vector<bool> row_alive(rows.size(), true);
    int live_cols = cols;
    std::vector<BigInt> diagonal;

    auto set_entry = [&](int r, int c, const T& nv) {
        auto& row = rows[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        if (nv == 0) {
            if (it != row.end()) {
                row.erase(it);
                col_rows[static_cast<std::size_t>(c)].erase(r);
            }
        } else if (it == row.end()) {
            row.emplace(c, nv);
            col_rows[static_cast<std::size_t>(c)].insert(r);
        } else {
            it->second = nv;
        }
    };

    for (;;) {
        int pr = -1, pc = -1;
        T best_mag{};
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!row_alive[i])
                continue;
            for (const auto& [c, v] : rows[i]) {
                const T mag = magnitude(v);
                if (pr >= 0 && best_mag < mag)
                    continue;
                const std::size_t cost = (rows[i].size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
                if (pr < 0 || mag < best_mag || cost < best_cost) {
                    pr = static_cast<int>(i);
                    pc = c;
                    best_mag = mag;
                    best_cost = cost;
                }
            }
            if (pr >= 0 && best_cost == 0 && is_unit(best_mag))
                break;
        }
        if (pr < 0)
            break;

        const SparseRow<T> pivot_row = rows[static_cast<std::size_t>(pr)];
        const T pv = pivot_row.at(pc);

        bool column_clear = true;
        const std::set<int> targets = col_rows[static_cast<std::size_t>(pc)];
        for (int r : targets) {
            if (r == pr)
                continue;
            const T q = T(rows[static_cast<std::size_t>(r)].at(pc) / pv);
            for (const auto& [c, v] : pivot_row) {
                auto& row = rows[static_cast<std::size_t>(r)];
                auto it = row.find(c);
                set_entry(r, c, sub_mul(it == row.end() ? T(0) : it->second, q, v));
            }
            if (rows[static_cast<std::size_t>(r)].count(pc))
                column_clear = false;
        }
        if (!column_clear)
            continue;

        bool row_clear = true;
        for (const auto& [c, v] : pivot_row) {
            if (c == pc)
                continue;
            const T rem = T(v % pv);
            set_entry(pr, c, rem);
            if (rem != 0)
                row_clear = false;
        }
        if (!row_clear)
            continue;

        diagonal.push_back(to_big(magnitude(pv)));
        set_entry(pr, pc, T(0));
        row_alive[static_cast<std::size_t>(pr)] = false;
        --live_cols;
    }

    AbelianGroup g;
    g.rank = live_cols;
    g.torsion = invariant_factors(std::move(diagonal));
    return g;
}

AbelianGroup exact_invariants(const IntMatrix& input, int cols)
{
    try {
        return exact_invariants<long long>(input, cols);
    } catch (const Overflow&) {
    }
    try {
        return exact_invariants<__int128>(input, cols);
    } catch (const Overflow&) {
        return exact_invariants<BigInt>(input, cols);
    }
}

// ---------------------------------------------------------------------------
// Unit elimination followed by modular arithmetic on the remainder.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Entries of the remainder stay below this, so they fit any modulus below 2^62.
constexpr long long kEntryBound = 1LL << 40;
constexpr u64 kTrialDivisionBound = 1u << 20;
constexpr int kMinorAttempts = 6;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    for (a %= m; e; e >>= 1, a = mul_mod(a, a, m))
        if (e & 1)
            r = mul_mod(r, a, m);
    return r;
}

// Inverse of a unit modulo m.
u64 inv_mod(u64 a, u64 m)
{
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        const __int128 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return static_cast<u64>(t < 0 ? t + m : t);
}

bool is_prime_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0)
            return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mul_mod(x, x, n);
            composite = x != n - 1;
        }
        if (composite)
            return false;
    }
    return true;
}

/// Primes just below 2^62, generated on first use.
std::vector<u64> large_primes(std::size_t count)
{
    static std::mutex lock;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> guard(lock);
    u64 n = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
    while (primes.size() < count) {
        if (is_prime_u64(n))
            primes.push_back(n);
        n -= 2;
    }
    return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

const std::vector<u64>& small_primes()
{
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialDivisionBound + 1);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialDivisionBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialDivisionBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

using DenseRows = std::vector<std::vector<long long>>;

inline u64 reduce(long long x, u64 m)
{
    const long long r = x % static_cast<long long>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

/// Sparse exact elimination on unit pivots of least Markowitz cost. A pivot
/// whose elimination would push an entry past kEntryBound is left alone.
/// Returns false when the input does not fit in 64 bits.
bool eliminate_units(const IntMatrix& input, int cols, DenseRows& remainder, int& eliminated)
{
    using Row = std::vector<std::pair<int, long long>>;
    std::vector<Row> rows;
    std::vector<int> col_count(static_cast<std::size_t>(cols));
    for (const auto& r : input) {
        Row s;
        for (int c = 0; c < cols; ++c) {
            const BigInt& v = r[static_cast<std::size_t>(c)];
            if (v == 0)
                continue;
            if (v > kEntryBound || v < -kEntryBound)
                return false;
            s.emplace_back(c, static_cast<long long>(v));
            ++col_count[static_cast<std::size_t>(c)];
        }
        if (!s.empty())
            rows.push_back(std::move(s));
    }
    std::vector<bool> row_alive(rows.size(), true), col_alive(static_cast<std::size_t>(cols), true);
    std::set<std::pair<std::size_t, int>> refused;

    auto entry = [](const Row& row, int c) -> long long {
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::numeric_limits<long long>::min()));
        return it != row.end() && it->first == c ? it->second : 0;
    };

    for (;;) {
        std::size_t pr = rows.size();
        int pc = -1;
        std::size_t best = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!row_alive[i])
                continue;
            for (const auto& [c, v] : rows[i]) {
                if (v != 1 && v != -1)
                    continue;
                const std::size_t cost = (rows[i].size() - 1) * static_cast<std::size_t>(col_count[static_cast<std::size_t>(c)] - 1);
                if (pr != rows.size() && cost >= best)
                    continue;
                if (!refused.empty() && refused.count({i, c}))
                    continue;
                pr = i;
                pc = c;
                best = cost;
            }
            if (pr != rows.size() && best == 0)
                break;
        }
        if (pr == rows.size())
            break;

        const Row& prow = rows[pr];
        const long long pv = entry(prow, pc);
        std::vector<std::pair<std::size_t, Row>> updates;
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            if (r == pr || !row_alive[r])
                continue;
            const long long a = entry(rows[r], pc);
            if (a == 0)
                continue;
            const long long f = a * pv;  // pv is its own inverse
            Row merged;
            merged.reserve(rows[r].size() + prow.size());
            auto x = rows[r].cbegin(), y = prow.cbegin();
            while (x != rows[r].cend() || y != prow.cend()) {
                long long v;
                int c;
                if (y == prow.cend() || (x != rows[r].cend() && x->first < y->first)) {
                    c = x->first;
                    v = x->second;
                    ++x;
                } else if (x == rows[r].cend() || y->first < x->first) {
                    c = y->first;
                    v = -f * y->second;
                    ++y;
                } else {
                    c = x->first;
                    v = x->second - f * y->second;
                    ++x;
                    ++y;
                }
                if (v > kEntryBound || v < -kEntryBound) {
                    ok = false;
                    break;
                }
                if (v != 0)
                    merged.emplace_back(c, v);
            }
            updates.emplace_back(r, std::move(merged));
        }
        if (!ok) {
            refused.insert({pr, pc});
            continue;
        }
        for (auto& [r, merged] : updates) {
            for (const auto& [c, v] : rows[r])
                --col_count[static_cast<std::size_t>(c)];
            for (const auto& [c, v] : merged)
                ++col_count[static_cast<std::size_t>(c)];
            rows[r] = std::move(merged);
        }
        for (const auto& [c, v] : prow)
            --col_count[static_cast<std::size_t>(c)];
        row_alive[pr] = false;
        col_alive[static_cast<std::size_t>(pc)] = false;
    }

    std::vector<int> new_index(static_cast<std::size_t>(cols), -1);
    int width = 0;
    for (int c = 0; c < cols; ++c)
        if (col_alive[static_cast<std::size_t>(c)])
            new_index[static_cast<std::size_t>(c)] = width++;
    remainder.clear();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!row_alive[i] || rows[i].empty())
            continue;
        std::vector<long long> dense(static_cast<std::size_t>(width));
        for (const auto& [c, v] : rows[i])
            dense[static_cast<std::size_t>(new_index[static_cast<std::size_t>(c)])] = v;
        remainder.push_back(std::move(dense));
    }
    eliminated = cols - width;
    return true;
}

struct RankProfile {
    std::vector<std::size_t> rows;  // independent rows, in the order met
    std::vector<std::size_t> cols;  // their pivot columns
};

/// Row echelon form modulo a prime, visiting rows and columns in the given orders.
RankProfile rank_profile(const DenseRows& a, u64 p, const std::vector<std::size_t>& row_order,
                         const std::vector<std::size_t>& col_order)
{
    const std::size_t width = a.empty() ? 0 : a[0].size();
    RankProfile out;
    std::vector<std::vector<u64>> basis;  // normalized so the pivot entry is 1
    std::vector<u64> v(width);
    for (std::size_t r : row_order) {
        for (std::size_t c = 0; c < width; ++c)
            v[c] = reduce(a[r][c], p);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const u64 f = v[out.cols[b]];
            if (f == 0)
                continue;
            const u64 neg = p - f;
            for (std::size_t c = 0; c < width; ++c)
                if (basis[b][c] != 0)
                    v[c] = (v[c] + mul_mod(neg, basis[b][c], p)) % p;
        }
        std::size_t pivot = width;
        for (std::size_t c : col_order)
            if (v[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot == width)
            continue;
        const u64 inv = inv_mod(v[pivot], p);
        for (auto& x : v)
            x = mul_mod(x, inv, p);
        basis.push_back(v);
        out.rows.push_back(r);
        out.cols.push_back(pivot);
    }
    return out;
}

u64 det_mod(const DenseRows& m, u64 p)
{
    const std::size_t n = m.size();
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = reduce(m[i][j], p);
    u64 det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[k][k], p);
        const u64 inv = inv_mod(a[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            const u64 f = p - mul_mod(a[i][k], inv, p);
            for (std::size_t j = k; j < n; ++j)
                if (a[k][j] != 0)
                    a[i][j] = (a[i][j] + mul_mod(f, a[k][j], p)) % p;
        }
    }
    return det;
}

/// Exact determinant by Chinese remaindering up to the Hadamard bound.
BigInt det_exact(const DenseRows& m)
{
    double log2_bound = 1.0;
    for (const auto& row : m) {
        long double norm2 = 0;
        for (long long x : row)
            norm2 += static_cast<long double>(x) * static_cast<long double>(x);
        log2_bound += 0.5 * std::log2(static_cast<double>(norm2));
    }
    // Each prime exceeds 2^61; one extra prime covers the sign.
    const std::size_t count = static_cast<std::size_t>(log2_bound / 61.0) + 2;
    const auto primes = large_primes(count);
    BigInt value = 0, modulus = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const u64 p = primes[i];
        const u64 d = det_mod(m, p);
        const u64 current = static_cast<u64>(value % p);
        const u64 step = mul_mod((d + p - current) % p, inv_mod(static_cast<u64>(modulus % p), p), p);
        value += modulus * step;
        modulus *= p;
    }
    if (value * 2 > modulus)
        value -= modulus;
    return value;
}

/// Valuations of the Smith form over Z/q^e Z. Entries of valuation e or more
/// read as zero there; fails if q^e does not fit below 2^62.
std::optional<std::vector<int>> local_valuations(const DenseRows& a, u64 q, int e)
{
    u64 modulus = 1;
    for (int i = 0; i < e; ++i) {
        if (modulus > (u64{1} << 62) / q)
            return std::nullopt;
        modulus *= q;
    }
    const std::size_t rows = a.size(), width = a.empty() ? 0 : a[0].size();
    std::vector<std::vector<u64>> m(rows, std::vector<u64>(width));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j)
            m[i][j] = reduce(a[i][j], modulus);
    std::vector<bool> row_alive(rows, true), col_alive(width, true);

    auto valuation = [&](u64 x) {
        int v = 0;
        while (x % q == 0) {
            x /= q;
            ++v;
        }
        return v;
    };

    std::vector<int> out;
    for (;;) {
        std::size_t pr = rows, pc = width;
        int best = e;
        for (std::size_t i = 0; i < rows && best > 0; ++i) {
            if (!row_alive[i])
                continue;
            for (std::size_t j = 0; j < width; ++j) {
                if (!col_alive[j] || m[i][j] == 0)
                    continue;
                const int v = m[i][j] % q != 0 ? 0 : valuation(m[i][j]);
                if (v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                    if (v == 0)
                        break;
                }
            }
        }
        if (pr == rows)
            break;
        u64 scale = 1;
        for (int i = 0; i < best; ++i)
            scale *= q;
        const u64 unit_inv = inv_mod(m[pr][pc] / scale, modulus);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || !row_alive[i] || m[i][pc] == 0)
                continue;
            const u64 f = modulus - mul_mod(m[i][pc] / scale, unit_inv, modulus);
            for (std::size_t j = 0; j < width; ++j)
                if (col_alive[j] && m[pr][j] != 0)
                    m[i][j] = (m[i][j] + mul_mod(f, m[pr][j], modulus)) % modulus;
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
        out.push_back(best);
    }
    return out;
}

/// Torsion and rank of Z^width / rowspace(a) for a matrix with small
/// entries. The rank comes from two large primes, a multiple of the torsion
/// order from the gcd of a few nonsingular maximal minors, and each prime
/// part from local elimination. Returns nullopt whenever a step cannot be
/// certified, e.g. when that gcd keeps an unfactored composite cofactor.
std::optional<AbelianGroup> modular_invariants(const DenseRows& a, int width)
{
    AbelianGroup g;
    if (a.empty()) {
        g.rank = width;
        return g;
    }
    std::vector<std::size_t> row_order(a.size()), col_order(static_cast<std::size_t>(width));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::iota(col_order.begin(), col_order.end(), 0);
    const auto primes = large_primes(2);
    const RankProfile first = rank_profile(a, primes[0], row_order, col_order);
    const std::size_t rank = first.rows.size();
    if (rank_profile(a, primes[1], row_order, col_order).rows.size() != rank)
        return std::nullopt;
    g.rank = width - static_cast<int>(rank);
    if (rank == 0)
        return g;

    auto minor = [&](const RankProfile& prof) {
        DenseRows m(rank, std::vector<long long>(rank));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                m[i][j] = a[prof.rows[i]][prof.cols[j]];
        return babs(det_exact(m));
    };

    // A multiple of the torsion order, split into known primes and a cofactor.
    BigInt multiple = minor(first);
    std::map<u64, int> factors;
    BigInt cofactor;
    for (int attempt = 0;; ++attempt) {
        factors.clear();
        cofactor = multiple;
        for (u64 p : small_primes()) {
            if (cofactor == 1)
                break;
            while (cofactor % p == 0) {
                cofactor /= p;
                ++factors[p];
            }
        }
        if (cofactor == 1)
            break;
        if (cofactor < BigInt(kTrialDivisionBound) * kTrialDivisionBound) {
            // No factor up to the trial bound, so the cofactor is prime.
            factors[static_cast<u64>(cofactor)] = 1;
            break;
        }
        if (attempt == kMinorAttempts)
            return std::nullopt;
        // Another maximal minor: rotate the row order and reverse the column order.
        const auto rows = static_cast<std::ptrdiff_t>(a.size());
        const auto step = static_cast<std::ptrdiff_t>(a.size() / (kMinorAttempts + 1) + 1) % rows;
        std::rotate(row_order.begin(), row_order.begin() + step, row_order.end());
        std::reverse(col_order.begin(), col_order.end());
        const RankProfile other = rank_profile(a, primes[0], row_order, col_order);
        if (other.rows.size() != rank)
            return std::nullopt;
        multiple = boost::multiprecision::gcd(multiple, minor(other));
    }

    std::vector<BigInt> diagonal;
    for (const auto& [q, exponent] : factors) {
        const auto vals = local_valuations(a, q, exponent + 1);
        if (!vals || vals->size() != rank)
            return std::nullopt;
        for (int v : *vals) {
            if (v == 0)
                continue;
            BigInt d = 1;
            for (int i = 0; i < v; ++i)
                d *= q;
            diagonal.push_back(d);
        }
    }
    g.torsion = invariant_factors(std::move(diagonal));
    return g;
}

}  // namespace

AbelianGroup abelian_invariants(const IntMatrix& input, int cols)
{
    DenseRows remainder;
    int eliminated = 0;
    if (eliminate_units(input, cols, remainder, eliminated))
        if (auto g = modular_invariants(remainder, cols - eliminated))
            return *g;
    return exact_invariants(input, cols);
}

}  // namespace zsurg
