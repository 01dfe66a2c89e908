#pragma once

// test-side oracles, kept independent of the library implementations they
// guard: Smith normal form for the Picard relation lattice, and assorted
// brute-force helpers

#include "intutil.hpp"
#include <algorithm>
#include <vector>

namespace oracle {

using modrep::i64;

struct SnfResult {
    i64 free_rank = 0;
    std::vector<i64> torsion;  // nontrivial diagonal entries, ascending
};

// Smith normal form of an integer matrix (rows = relations on Z^cols)
inline SnfResult smith_presentation(std::vector<std::vector<i64>> m, i64 cols) {
    i64 rows = i64(m.size());
    for (auto& r : m)
        if (i64(r.size()) != cols) throw std::logic_error("ragged relation matrix");
    std::vector<i64> diag;
    i64 t = 0;
    while (t < rows && t < cols) {
        // pivot search
        i64 pr = -1, pc = -1;
        for (i64 i = t; i < rows && pr < 0; ++i)
            for (i64 j = t; j < cols; ++j)
                if (m[i][j] != 0) { pr = i; pc = j; break; }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (i64 i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool stable = false;
        while (!stable) {
            // clear column t
            for (i64 i = t + 1; i < rows; ++i)
                while (m[i][t] != 0) {
                    i64 q = m[i][t] / m[t][t];
                    for (i64 j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) std::swap(m[t], m[i]);
                }
            // clear row t
            for (i64 j = t + 1; j < cols; ++j)
                while (m[t][j] != 0) {
                    i64 q = m[t][j] / m[t][t];
                    for (i64 i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0)
                        for (i64 i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                }
            // column may have been dirtied by row operations
            bool colclean = true;
            for (i64 i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) colclean = false;
            if (!colclean) continue;
            // divisibility: pivot divides the remaining block
            stable = true;
            for (i64 i = t + 1; i < rows && stable; ++i)
                for (i64 j = t + 1; j < cols && stable; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (i64 jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        stable = false;
                    }
        }
        diag.push_back(m[t][t] < 0 ? -m[t][t] : m[t][t]);
        ++t;
    }
    SnfResult r;
    r.free_rank = cols - i64(diag.size());
    for (i64 d : diag)
        if (d > 1) r.torsion.push_back(d);
    std::sort(r.torsion.begin(), r.torsion.end());
    return r;
}

// relation lattice of the orbifold Picard group over P^1: generators
// s_1..s_n with e_1 s_1 = e_2 s_2 = ... = e_n s_n
inline SnfResult picard_snf(const std::vector<i64>& e) {
    i64 n = i64(e.size());
    std::vector<std::vector<i64>> rel;
    for (i64 i = 0; i + 1 < n; ++i) {
        std::vector<i64> row(n, 0);
        row[i] = e[i];
        row[i + 1] = -e[i + 1];
        rel.push_back(row);
    }
    return smith_presentation(rel, n);
}

} // namespace oracle
