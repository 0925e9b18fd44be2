#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "plactic/errors.hpp"
#include "plactic/partition.hpp"

namespace plactic::typec {

// Word over the signed alphabet -n < ... < -1 < 1 < ... < n, where -i
// stands for the barred letter. Letters are nonzero with |letter| <= rank.
struct SignedWord {
    std::vector<int> letters;
    int rank = 0;

    friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
};

SignedWord parse_signed_word(const std::string& csv, int rank);
std::string to_string(const SignedWord& w);

// Position of a letter in the alphabet order, 0-based.
int order_key(int letter, int rank);

bool strictly_decreasing(const SignedWord& w);

// +i contributes +e_i, -i contributes -e_i; length rank.
std::vector<int> signed_weight(const SignedWord& w);

// Erasure on a strictly decreasing word w = x_1 > ... > x_k: drop every
// pair (x_p, x_q) = (i, -i) with q - p < k + i - rank. Throws
// not_decreasing otherwise.
SignedWord erase_pairs(const SignedWord& w);

// Words one relation step away: the constrained three-letter exchanges,
// the contraction i,-i <-> -(i+1),i+1 next to a small letter, and the
// erasure rule applied to whole strictly decreasing words in both
// directions (a pair is reinserted only when erasing it again gives back
// the word, which keeps the move sound).
std::vector<SignedWord> neighbors(const SignedWord& w);

enum class Verdict { True, False, Unknown };

std::string to_string(Verdict v);

// Bidirectional closure search. True when the classes meet; False when
// both closures are exhausted within the bounds without ever discarding a
// candidate; Unknown as soon as a bound bites.
Verdict congruent(const SignedWord& a, const SignedWord& b, std::size_t max_len,
                  std::size_t max_states);

} // namespace plactic::typec
