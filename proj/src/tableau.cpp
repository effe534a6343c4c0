#include "ylat/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "ylat/tropical.hpp"

namespace ylat {

std::vector<int> Tableau::census(int k) const {
    std::vector<int> c(static_cast<size_t>(k) + 1, 0);
    for (const auto& row : rows) {
        int r = static_cast<int>(row.size()) - 1;
        if (r < 0 || r > k) throw std::invalid_argument("tableau row length out of range");
        ++c[static_cast<size_t>(r)];
    }
    return c;
}

int Tableau::boxes_beyond(int cols) const {
    int total = 0;
    for (const auto& row : rows)
        total += std::max(0, static_cast<int>(row.size()) - cols);
    return total;
}

namespace {

// longest <1-chain available in `mult` starting at index >= from
int max_chain_from(const std::vector<int>& mult, int from) {
    int count = 0;
    int i = from;
    const int n = static_cast<int>(mult.size()) - 1;
    while (i <= n) {
        if (mult[static_cast<size_t>(i)] > 0) {
            ++count;
            i += 2;
        } else {
            ++i;
        }
    }
    return count;
}

// lex-smallest <1-chain of exactly `len` entries, or empty if none exists;
// each step takes the smallest feasible index (enough room must remain)
std::vector<int> extract_chain(std::vector<int>& mult, int len) {
    std::vector<int> row;
    int from = 0;
    const int n = static_cast<int>(mult.size()) - 1;
    for (int need = len; need > 0; --need) {
        int pick = -1;
        for (int i = from; i <= n; ++i) {
            if (mult[static_cast<size_t>(i)] == 0) continue;
            if (1 + max_chain_from(mult, i + 2) >= need) {
                pick = i;
                break;
            }
        }
        if (pick < 0) return {};
        row.push_back(pick);
        from = pick + 2;
    }
    for (int i : row) --mult[static_cast<size_t>(i)];
    return row;
}

}   // namespace

Tableau canonical_tableau(const Monomial& mu) {
    const int k = mu.n() / 2;
    std::vector<int> mult = mu.exponents();
    Tableau t;
    for (int r = k; r >= 0; --r) {
        while (max_chain_from(mult, 0) >= r + 1) {
            std::vector<int> row = extract_chain(mult, r + 1);
            if (row.empty()) throw std::logic_error("canonical_tableau: extraction failed");
            t.rows.push_back(std::move(row));
        }
    }
    for (int e : mult)
        if (e != 0) throw std::logic_error("canonical_tableau: leftover entries");

    // bug trap: greedy length-first extraction must realize the deg_r census
    std::vector<int> c = t.census(k);
    for (int r = 0; r <= k; ++r)
        if (c[static_cast<size_t>(r)] != deg_r(mu, r))
            throw std::logic_error("canonical_tableau: census disagrees with deg_r");
    return t;
}

bool verify_tableau(const Monomial& mu, const Tableau& t) {
    const int n = mu.n();
    const int k = n / 2;

    std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
    size_t prev_len = static_cast<size_t>(k) + 1;
    for (const auto& row : t.rows) {
        if (row.empty() || row.size() > prev_len) return false;
        prev_len = row.size();
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0 || row[j] > n) return false;
            if (j > 0 && row[j] - row[j - 1] < 2) return false;
            ++seen[static_cast<size_t>(row[j])];
        }
    }
    if (seen != mu.exponents()) return false;

    // minimality: every entry a has a or a-1 in each preceding row
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (int a : t.rows[i])
            for (size_t p = 0; p < i; ++p) {
                const auto& prev = t.rows[p];
                bool hit = std::find(prev.begin(), prev.end(), a) != prev.end() ||
                           (a > 0 && std::find(prev.begin(), prev.end(), a - 1) != prev.end());
                if (!hit) return false;
            }

    std::vector<int> c = t.census(k);
    for (int r = 0; r <= k; ++r)
        if (c[static_cast<size_t>(r)] != deg_r(mu, r)) return false;
    return true;
}

}   // namespace ylat
