#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace onerow {

enum class Family { C, D };

inline std::string family_name(Family f) { return f == Family::C ? "C" : "D"; }

// Letters 1 < 2 < ... < n < nbar < ... < 1bar, stored by position 0..2n-1.
// For D, n and nbar are incomparable; every other pair follows position order.
struct Alphabet {
    Family family;
    int rank;

    Alphabet(Family f, int n) : family(f), rank(n) {
        if (n < 1) throw UsageError("alphabet rank must be >= 1");
    }

    int size() const { return 2 * rank; }
    int unbarred(int i) const { return check(i) - 1; }
    int barred(int i) const { return 2 * rank - check(i); }
    bool is_barred(int pos) const { return pos >= rank; }
    int index(int pos) const { return pos < rank ? pos + 1 : 2 * rank - pos; }  // i for i and ibar
    int conjugate(int pos) const { return 2 * rank - 1 - pos; }

    std::string letter(int pos) const { return std::to_string(index(pos)) + (is_barred(pos) ? "bar" : ""); }

    // Strict order; false for incomparable pairs.
    bool precedes(int a, int b) const {
        if (family == Family::D && comparable_exception(a, b)) return false;
        return a < b;
    }
    bool comparable(int a, int b) const { return a == b || precedes(a, b) || precedes(b, a); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.family == b.family && a.rank == b.rank; }

private:
    int check(int i) const {
        if (i < 1 || i > rank) throw UsageError("letter index out of range");
        return i;
    }
    bool comparable_exception(int a, int b) const {
        return (a == rank - 1 && b == rank) || (a == rank && b == rank - 1);
    }
};

// A one-row tableau is determined by its letter occupancies theta (alphabet order).
struct OneRowTableau {
    Alphabet alphabet;
    std::vector<int> theta;

    int length() const {
        int s = 0;
        for (int x : theta) s += x;
        return s;
    }
    int at(int pos) const { return theta.at(pos); }
};

inline bool is_valid(const OneRowTableau& t, std::optional<int> r = std::nullopt) {
    const Alphabet& a = t.alphabet;
    if (static_cast<int>(t.theta.size()) != a.size()) return false;
    for (int x : t.theta)
        if (x < 0) return false;
    if (r && t.length() != *r) return false;
    if (a.family == Family::D && t.theta[a.rank - 1] * t.theta[a.rank] != 0) return false;
    return true;
}

// Canonical order: lexicographic on theta in alphabet order.
template <class Fn>
void for_each_tableau(const Alphabet& alpha, int r, Fn&& fn) {
    if (r < 0) throw UsageError("row length must be >= 0");
    for_each_composition(r, alpha.size(), [&](const std::vector<int>& c) {
        if (alpha.family == Family::D && c[alpha.rank - 1] * c[alpha.rank] != 0) return;
        fn(OneRowTableau{alpha, c});
    });
}

inline std::vector<OneRowTableau> enumerate(const Alphabet& alpha, int r) {
    std::vector<OneRowTableau> out;
    for_each_tableau(alpha, r, [&](OneRowTableau t) { out.push_back(std::move(t)); });
    return out;
}

inline Exps weight(const OneRowTableau& t) {
    const Alphabet& a = t.alphabet;
    Exps w(a.rank);
    for (int i = 1; i <= a.rank; ++i) w[i - 1] = t.theta.at(a.unbarred(i)) - t.theta.at(a.barred(i));
    return w;
}

// Closed-form counts: weak compositions, minus (for D) those with theta_n, theta_nbar >= 1.
inline long tableau_count(const Alphabet& alpha, int r) {
    const long k = alpha.size();
    long c = binomial(r + k - 1, k - 1);
    if (alpha.family == Family::D && r >= 2) c -= binomial(r - 2 + k - 1, k - 1);
    return c;
}

}  // namespace onerow
