// Small free-group engine with a brute-force commutator-length upper-bound
// search.
//
// Words are reduced sequences of signed generator indices in a free group of
// declared rank. cl_upper_bound(w, k_max, len_max) finds the smallest
// k <= k_max such that w is a product of k commutators [a_i, b_i] with
// |a_i|, |b_i| <= len_max, by exhaustive search over reduced words; absence
// of a witness is NOT a proof that cl(w) > k_max. Since conjugate elements
// have the same commutator length, the search runs on the cyclic reduction
// of w and the witness is conjugated back, so it always replays to w
// exactly.

#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "slopecalc/errors.hpp"

namespace slopecalc {

struct GroupWord {
    int rank = 1;
    std::vector<int> letters;  // reduced; |letter| in [1, rank]

    bool operator==(const GroupWord&) const = default;
    bool operator<(const GroupWord& other) const {
        if (letters.size() != other.letters.size()) return letters.size() < other.letters.size();
        return letters < other.letters;
    }
};

inline std::vector<int> free_reduce(const std::vector<int>& raw) {
    std::vector<int> stack;
    for (int letter : raw) {
        if (!stack.empty() && stack.back() == -letter)
            stack.pop_back();
        else
            stack.push_back(letter);
    }
    return stack;
}

inline GroupWord reduce(int rank, const std::vector<int>& raw) {
    if (rank < 1) throw parse_error("free group rank must be at least 1");
    for (int letter : raw)
        if (letter == 0 || std::abs(letter) > rank)
            throw parse_error("letter " + std::to_string(letter) + " out of range for rank " +
                              std::to_string(rank));
    return GroupWord{rank, free_reduce(raw)};
}

inline GroupWord inverse(const GroupWord& w) {
    GroupWord r{w.rank, {}};
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

inline GroupWord multiply(const GroupWord& a, const GroupWord& b) {
    if (a.rank != b.rank) throw parse_error("rank mismatch in free group multiplication");
    std::vector<int> raw = a.letters;
    raw.insert(raw.end(), b.letters.begin(), b.letters.end());
    return GroupWord{a.rank, free_reduce(raw)};
}

inline GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

inline GroupWord commutator_product(const std::vector<std::pair<GroupWord, GroupWord>>& pairs,
                                    int rank = 1) {
    GroupWord acc{pairs.empty() ? rank : pairs.front().first.rank, {}};
    for (const auto& [a, b] : pairs) acc = multiply(acc, commutator(a, b));
    return acc;
}

inline std::vector<long long> abelianization(const GroupWord& w) {
    std::vector<long long> sums(static_cast<std::size_t>(w.rank), 0);
    for (int letter : w.letters) sums[static_cast<std::size_t>(std::abs(letter)) - 1] +=
        letter > 0 ? 1 : -1;
    return sums;
}

/// Splits w = u * core * u^-1 with core cyclically reduced.
inline std::pair<GroupWord, GroupWord> cyclic_reduce(const GroupWord& w) {
    std::vector<int> letters = w.letters;
    std::vector<int> prefix;
    while (letters.size() >= 2 && letters.front() == -letters.back()) {
        prefix.push_back(letters.front());
        letters.erase(letters.begin());
        letters.pop_back();
    }
    return {GroupWord{w.rank, std::move(prefix)}, GroupWord{w.rank, std::move(letters)}};
}

struct ClWitness {
    int k = 0;
    std::vector<std::pair<GroupWord, GroupWord>> pairs;
};

inline constexpr long long kDefaultNodeLimit = 5'000'000;

namespace oracle_detail {

inline std::string encode(const std::vector<int>& letters) {
    std::string s;
    s.reserve(letters.size());
    for (int v : letters) s.push_back(static_cast<char>(100 + v));
    return s;
}

// All reduced words of length 1..len_max in shortlex order, letter order
// 1 < -1 < 2 < -2 < ...
inline std::vector<GroupWord> enumerate_words(int rank, int len_max) {
    std::vector<int> alphabet;
    for (int g = 1; g <= rank; ++g) {
        alphabet.push_back(g);
        alphabet.push_back(-g);
    }
    std::vector<GroupWord> all;
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= len_max; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& stem : frontier)
            for (int letter : alphabet) {
                if (!stem.empty() && stem.back() == -letter) continue;
                std::vector<int> word = stem;
                word.push_back(letter);
                all.push_back(GroupWord{rank, word});
                next.push_back(std::move(word));
            }
        frontier = std::move(next);
    }
    return all;
}

}  // namespace oracle_detail

/// Upper-bound oracle; returns the witness so callers can replay it.
inline std::optional<ClWitness> cl_upper_bound_witness(const GroupWord& w, int k_max, int len_max,
                                                       long long node_limit = kDefaultNodeLimit) {
    if (k_max < 0 || len_max < 0) throw parse_error("search budgets must be nonnegative");
    for (long long sum : abelianization(w))
        if (sum != 0)
            throw hypothesis_error(citation::remark_3_3, "w not in commutator subgroup");
    const auto [conjugator, core] = cyclic_reduce(w);
    if (core.letters.empty()) return ClWitness{0, {}};
    if (k_max == 0) return std::nullopt;

    long long nodes = 0;
    const auto charge = [&](long long cost) {
        nodes += cost;
        if (nodes > node_limit)
            throw budget_error("commutator search exceeded the node limit of " +
                               std::to_string(node_limit));
    };

    const std::vector<GroupWord> words = oracle_detail::enumerate_words(w.rank, len_max);
    std::map<GroupWord, std::pair<GroupWord, GroupWord>> commutators;
    for (const GroupWord& a : words)
        for (const GroupWord& b : words) {
            charge(1);
            GroupWord value = commutator(a, b);
            if (value.letters.empty()) continue;
            commutators.emplace(std::move(value), std::make_pair(a, b));
        }

    std::vector<std::unordered_set<std::string>> failed(static_cast<std::size_t>(k_max) + 1);
    std::vector<std::pair<GroupWord, GroupWord>> stack;

    const auto search = [&](const auto& self, const GroupWord& target, int k) -> bool {
        charge(1);
        if (k == 0) return target.letters.empty();
        if (failed[static_cast<std::size_t>(k)].contains(oracle_detail::encode(target.letters)))
            return false;
        if (k == 1) {
            auto it = commutators.find(target);
            if (it != commutators.end()) {
                stack.push_back(it->second);
                return true;
            }
        } else {
            for (const auto& [value, witness] : commutators) {
                stack.push_back(witness);
                if (self(self, multiply(inverse(value), target), k - 1)) return true;
                stack.pop_back();
            }
        }
        failed[static_cast<std::size_t>(k)].insert(oracle_detail::encode(target.letters));
        return false;
    };

    for (int k = 1; k <= k_max; ++k) {
        stack.clear();
        if (search(search, core, k)) {
            ClWitness result{k, {}};
            for (const auto& [a, b] : stack)
                result.pairs.emplace_back(multiply(conjugator, multiply(a, inverse(conjugator))),
                                          multiply(conjugator, multiply(b, inverse(conjugator))));
            return result;
        }
    }
    return std::nullopt;
}

inline std::optional<int> cl_upper_bound(const GroupWord& w, int k_max, int len_max,
                                         long long node_limit = kDefaultNodeLimit) {
    auto witness = cl_upper_bound_witness(w, k_max, len_max, node_limit);
    if (!witness) return std::nullopt;
    return witness->k;
}

}  // namespace slopecalc
