// Braid words and the diagram-level invariants of their closures.
//
// A braid word on n strands is a sequence of nonzero letters k with
// 1 <= |k| <= n-1, letter k meaning the generator sigma_{|k|} raised to
// sign(k). Letters compose left to right.

#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "slopecalc/errors.hpp"

namespace slopecalc {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(letters[i]);
        }
        return s;
    }
};

/// Parses whitespace-separated signed integers into a braid word.
inline BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw parse_error("strand count must be at least 1");
    std::vector<int> letters;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(token, &pos);
        } catch (const std::exception&) {
            throw parse_error("invalid braid token '" + token + "'");
        }
        if (pos != token.size()) throw parse_error("invalid braid token '" + token + "'");
        if (value == 0) throw parse_error("generator index 0 is not a valid braid letter");
        if (std::labs(value) >= strands)
            throw parse_error("generator index " + token + " out of range for " +
                              std::to_string(strands) + " strands");
        letters.push_back(static_cast<int>(value));
    }
    return BraidWord{strands, std::move(letters)};
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw parse_error("cannot concatenate braids on different strand counts");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

/// The (p,q)-torus braid (sigma_1 ... sigma_{p-1})^q on p strands.
inline BraidWord torus_braid(int p, int q) {
    if (p < 1 || q < 1) throw parse_error("torus braid parameters must be positive");
    std::vector<int> letters;
    for (int rep = 0; rep < q; ++rep)
        for (int i = 1; i < p; ++i) letters.push_back(i);
    return BraidWord{p, std::move(letters)};
}

class Permutation {
public:
    Permutation() : images_{0} {}
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw internal_error("permutation images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }
    bool operator==(const Permutation&) const = default;

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    bool is_full_cycle() const {
        int at = 0;
        for (int step = 0; step < size(); ++step) at = images_[at];
        int length = 1;
        at = images_[0];
        while (at != 0) {
            at = images_[at];
            ++length;
        }
        return length == size();
    }

private:
    std::vector<int> images_;
};

/// compose(a, b) applies a first and b second.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw internal_error("permutation size mismatch");
    std::vector<int> im(a.size());
    for (int i = 0; i < a.size(); ++i) im[i] = b(a(i));
    return Permutation(std::move(im));
}

/// Underlying permutation of the braid: the product of the transpositions
/// (|k|, |k|+1) over the letters. permutation(concat(b1, b2)) equals
/// compose(permutation(b2), permutation(b1)).
inline Permutation permutation(const BraidWord& b) {
    std::vector<int> im(b.strands);
    std::iota(im.begin(), im.end(), 0);
    // Each step precomposes with the letter's transposition, so the final
    // map is images[j] = t_1(t_2(...t_c(j)...)).
    for (int letter : b.letters) {
        const int a = std::abs(letter) - 1;
        std::swap(im[a], im[a + 1]);
    }
    return Permutation(std::move(im));
}

inline bool closure_is_knot(const BraidWord& b) { return permutation(b).is_full_cycle(); }

inline void require_knot_closure(const BraidWord& b) {
    if (!closure_is_knot(b))
        throw hypothesis_error(citation::def_5_1,
                               "the braid closure must be a single simple closed loop; the word '" +
                                   b.to_string() + "' on " + std::to_string(b.strands) +
                                   " strands closes to a multi-component link");
}

/// Winding number of the braid as a pattern: every strand meets a fiber disk
/// positively, so the algebraic count is the strand count.
inline int winding_number(const BraidWord& b) {
    require_knot_closure(b);
    return b.strands;
}

/// Genus of the Seifert-algorithm surface of the closure: (c - n + 1)/2.
inline long long seifert_genus_upper(const BraidWord& b) {
    require_knot_closure(b);
    const long long c = static_cast<long long>(b.letters.size());
    const long long n = b.strands;
    if ((c - n + 1) % 2 != 0) throw internal_error("Seifert surface rank parity violated for a knot");
    return (c - n + 1) / 2;
}

/// Every generator index occurs with a single sign.
inline bool is_homogeneous(const BraidWord& b) {
    std::vector<int> sign(static_cast<std::size_t>(b.strands), 0);
    for (int k : b.letters) {
        const int i = std::abs(k) - 1;
        const int s = k > 0 ? 1 : -1;
        if (sign[i] == 0)
            sign[i] = s;
        else if (sign[i] != s)
            return false;
    }
    return true;
}

}  // namespace slopecalc
