#include "zsurg/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <queue>

#include "zsurg/groups.hpp"

namespace zsurg {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// d(word)/d(x_g) with every generator sent to t.
LaurentPolynomial fox_derivative(const Word& w, int g)
{
    LaurentPolynomial acc;
    int prefix = 0;
    for (int x : w.letters()) {
        if (x == g + 1)
            acc += LaurentPolynomial::monomial(1, prefix);
        else if (x == -(g + 1))
            acc -= LaurentPolynomial::monomial(1, prefix - 1);
        prefix += x > 0 ? 1 : -1;
    }
    return acc;
}

}  // namespace

LaurentPolynomial alexander(const KnotDiagram& d)
{
    if (d.crossing_count() == 0)
        return LaurentPolynomial::constant(1);
    const GroupPresentation p = wirtinger(d);
    const int n = p.generator_count;
    std::vector<std::vector<LaurentPolynomial>> m;
    for (const Word& r : p.relators) {
        std::vector<LaurentPolynomial> row;
        for (int g = 1; g < n; ++g)
            row.push_back(fox_derivative(r, g));
        m.push_back(std::move(row));
    }
    return determinant(std::move(m)).normalized();
}

int symmetric_signature(const IntMatrix& input)
{
    const std::size_t n = input.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(input[i][j]);

    int sig = 0;
    std::vector<bool> alive(n, true);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (alive[i] && a[i][i] != 0)
                p = i;
        if (p == n) {
            // zero diagonal: a congruence i += j turns a_ij into a diagonal 2*a_ij
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[i] && alive[j] && i != j && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n)
                break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k)
                a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k)
                a[k][pi] += a[k][pj];
            p = pi;
        }
        const Rational piv = a[p][p];
        sig += piv > 0 ? 1 : -1;
        alive[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || a[i][p] == 0)
                continue;
            const Rational f = a[i][p] / piv;
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j])
                    a[i][j] -= f * a[p][j];
        }
        for (std::size_t j = 0; j < n; ++j)
            a[p][j] = a[j][p] = 0;
    }
    return sig;
}

int signature(const KnotDiagram& d, int shade_color)
{
    const std::size_t n = d.crossing_count();
    if (n == 0)
        return 0;
    const auto faces = d.faces();
    std::vector<std::array<int, 4>> face_at(n);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (const Corner& c : faces[f])
            face_at[static_cast<std::size_t>(c.crossing)][static_cast<std::size_t>(c.slot)] = static_cast<int>(f);

    // Faces meeting across an edge sit in consecutive corners of a crossing.
    std::vector<int> color(faces.size(), -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (const Corner& c : faces[static_cast<std::size_t>(f)])
            for (int step : {1, 3}) {
                const int g = face_at[static_cast<std::size_t>(c.crossing)][static_cast<std::size_t>((c.slot + step) % 4)];
                if (color[static_cast<std::size_t>(g)] < 0) {
                    color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
                    q.push(g);
                }
            }
    }

    std::vector<int> white_index(faces.size(), -1);
    int whites = 0;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (color[f] != shade_color)
            white_index[f] = whites++;

    IntMatrix g(static_cast<std::size_t>(whites), std::vector<BigInt>(static_cast<std::size_t>(whites)));
    int correction = 0;
    for (std::size_t ci = 0; ci < n; ++ci) {
        const Crossing& c = d.crossings()[ci];
        int shaded_slot = color[static_cast<std::size_t>(face_at[ci][0])] == shade_color ? 0 : 1;
        const EdgeEnd& e1 = c.ends[static_cast<std::size_t>(shaded_slot)];
        const EdgeEnd& e2 = c.ends[static_cast<std::size_t>(shaded_slot + 1)];
        const bool type_one = e1.incoming != e2.incoming;
        const int h = type_one ? c.sign : -c.sign;
        if (!type_one)
            correction += c.sign;
        const int f1 = white_index[static_cast<std::size_t>(face_at[ci][static_cast<std::size_t>(shaded_slot + 1)])];
        const int f2 = white_index[static_cast<std::size_t>(face_at[ci][static_cast<std::size_t>((shaded_slot + 3) % 4)])];
        if (f1 == f2)
            continue;
        g[static_cast<std::size_t>(f1)][static_cast<std::size_t>(f1)] -= h;
        g[static_cast<std::size_t>(f2)][static_cast<std::size_t>(f2)] -= h;
        g[static_cast<std::size_t>(f1)][static_cast<std::size_t>(f2)] += h;
        g[static_cast<std::size_t>(f2)][static_cast<std::size_t>(f1)] += h;
    }
    if (whites == 0)
        return -correction;
    // The rows sum to zero; drop the last face.
    g.pop_back();
    for (auto& row : g)
        row.pop_back();
    return symmetric_signature(g) - correction;
}

BigInt determinant(const KnotDiagram& d)
{
    const BigInt v = alexander(d).at_minus_one();
    return v < 0 ? BigInt(-v) : v;
}

int arf_from_determinant(const BigInt& det)
{
    const int r = static_cast<int>(det % 8);
    return (r == 1 || r == 7) ? 0 : 1;
}

int arf(const KnotDiagram& d) { return arf_from_determinant(determinant(d)); }

ClassicalInvariants classical_invariants(const KnotDiagram& d)
{
    ClassicalInvariants inv;
    inv.alexander = alexander(d);
    const BigInt v = inv.alexander.at_minus_one();
    inv.determinant = v < 0 ? BigInt(-v) : v;
    inv.arf = arf_from_determinant(inv.determinant);
    inv.signature = signature(d);
    return inv;
}

}  // namespace zsurg
