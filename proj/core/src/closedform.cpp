#include "irregwalk/closedform.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "irregwalk/errors.hpp"
#include "irregwalk/generators.hpp"
#include "irregwalk/walkops.hpp"

namespace irregwalk {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::OrderTooSmall, what);
}

// Lexicographically first optimal walks from exhaustive search; the
// constructive argument only covers longer paths. Regenerated by a test.
const std::array<std::vector<Vertex>, 10> small_path_witness{{
    {},
    {},
    {},
    {0, 1},
    {0, 1, 2},
    {1, 2, 3},
    {2, 3, 4},
    {2, 3, 4, 5, 4},
    {2, 3, 4, 5, 6, 5, 4},
    {3, 2, 3, 4, 5, 6, 7, 6, 5},
}};

const std::array<std::vector<Vertex>, 8> small_cycle_witness{{
    {},
    {},
    {},
    {0, 1, 0, 2},
    {0, 1, 2},
    {0, 1, 0, 4, 3},
    {0, 1, 0, 5, 4, 3, 4},
    {0, 1, 0, 6, 5, 4, 3, 4, 5},
}};

int path_formula(int n)
{
    if (n == 2)
        return 0;
    if (n == 3)
        return 1;
    if (n <= 5)
        return 2;
    return 2 * n - 10;
}

// Walk on the path of length n: closed excursions to u_2 and u_{n-2}
// around a central stretch u_i..u_j that carries an optimal multiset.
Walk path_construction(int i, int j, int n)
{
    Walk w;
    auto& s = w.vertices;
    s.push_back(i);
    for (int k = i - 1; k >= 2; --k)
        s.push_back(k);
    for (int k = 3; k <= i; ++k)
        s.push_back(k);
    auto extra = phi_path_multiset(j - i);
    for (int k = i; k < j; ++k) {
        for (int r = 0; r < extra[k - i]; ++r) {
            s.push_back(k + 1);
            s.push_back(k);
        }
        s.push_back(k + 1);
    }
    for (int k = j + 1; k <= n - 2; ++k)
        s.push_back(k);
    for (int k = n - 3; k >= j; --k)
        s.push_back(k);
    return w;
}

} // namespace

ClosedFormAnswer mlw_complete(int n)
{
    require(n >= 3, "complete graph needs n >= 3");
    if (n == 3)
        return {3, Walk{{0, 1, 2, 1}}};

    // alt[v]: how much the walk raises v's degree. Start from K_4 with
    // alterations 0,1,2,3 on vertices 0..3; the walk ends at the +3 vertex.
    Walk w{{1, 3, 2, 3}};
    std::vector<int> alt{0, 1, 2, 3};
    for (int size = 5; size <= n; ++size) {
        std::vector<Vertex> by_alt(size - 1);
        std::iota(by_alt.begin(), by_alt.end(), 0);
        std::sort(by_alt.begin(), by_alt.end(), [&](Vertex a, Vertex b) { return alt[a] < alt[b]; });
        if (w.vertices.back() != by_alt[3])
            w = w.reversed();
        const Vertex fresh = size - 1;
        std::vector<Vertex> tail{by_alt[1]};
        for (int r = 4; r < size - 1; ++r)
            tail.push_back(by_alt[r]);
        tail.push_back(fresh);
        alt.push_back(0);
        Vertex prev = w.vertices.back();
        for (Vertex v : tail) {
            ++alt[prev];
            ++alt[v];
            w.vertices.push_back(v);
            prev = v;
        }
    }
    return {(n * n - 5 * n + 10) / 2, std::move(w)};
}

ClosedFormAnswer mlw_complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1 && a + b >= 3, "complete bipartite graph needs sides >= 1 and order >= 3");
    if (a != b)
        return {0, Walk{}};
    // Star-shaped walk: B-vertices in turn, always through vertex 0 of A.
    Walk w{{a}};
    for (int r = 1; r < b; ++r) {
        w.vertices.push_back(0);
        w.vertices.push_back(a + r);
    }
    return {2 * a - 2, std::move(w)};
}

ClosedFormAnswer mlw_path(int n)
{
    require(n >= 2, "path needs length >= 2");
    if (n <= 9)
        return {path_formula(n), Walk{small_path_witness[n]}};

    const Graph g = make_path(n);
    int best = std::numeric_limits<int>::max();
    Walk best_walk;
    for (int i = 2; i <= 4; ++i)
        for (int j = n - 2; j >= n - 4; --j) {
            if (j - i < 2)
                continue;
            int cost = 2 * n + i - j - 8 + 2 * phi_path(j - i);
            if (cost >= best)
                continue;
            Walk w = path_construction(i, j, n);
            if (check_irregularising(g, w).irregularising()) {
                best = cost;
                best_walk = std::move(w);
            }
        }
    return {best, std::move(best_walk)};
}

ClosedFormAnswer mlw_cycle(int n)
{
    require(n >= 3, "cycle needs length >= 3");
    if (n <= 7)
        return {n == 3 ? 3 : 2 * n - 6, Walk{small_cycle_witness[n]}};
    // The untouched stretch v_{n-1} v_0 v_1 plays the part of u_0 u_1 u_2 and
    // u_n u_{n+1} u_{n+2} of the path of length n + 2; u_k maps to v_{k-1}.
    ClosedFormAnswer path = mlw_path(n + 2);
    for (Vertex& v : path.witness.vertices)
        v -= 1;
    return path;
}

int phi_path(int n)
{
    require(n >= 2, "path needs length >= 2");
    if (n % 4 == 0)
        return n / 2;
    if (n % 4 == 2)
        return n / 2 - 1;
    return (n - 1) / 2;
}

std::vector<int> phi_path_multiset(int n)
{
    require(n >= 2, "path needs length >= 2");
    std::vector<int> counts(n, 0);
    for (int k = 2; k < n; k += 4) {
        counts[k] = 1;
        if (k + 1 < n)
            counts[k + 1] = 1;
    }
    return counts;
}

} // namespace irregwalk
