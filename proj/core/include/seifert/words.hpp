/**
 * @file words.hpp
 * @brief The pavement word w_{alpha,beta} over {Q, H} and its rotation data.
 */
#ifndef SEIFERT_WORDS_HPP
#define SEIFERT_WORDS_HPP

#include <cstdint>
#include <string>

namespace seifert {

/**
 * Boundary word of a meridian disc, letters x_1..x_z over {Q,H}.
 * Positions are 1-based in the accessors to match the x_{k,i} indexing.
 */
struct PavementWord {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;
    std::string letters;
    std::int64_t u = 1;
    std::int64_t v = 0;
    std::int64_t w = 1;
    std::int64_t z = 1;

    char x(std::int64_t i) const { return letters[static_cast<std::size_t>(i - 1)]; }
    /// Number of indices i >= from (1-based) with x_i == letter.
    std::int64_t count_from(std::int64_t from, char letter) const;
};

/// Letters of w_{alpha,beta} for coprime alpha, beta >= 0 (not both zero).
std::string word_letters(std::int64_t alpha, std::int64_t beta);

PavementWord build_word(std::int64_t alpha, std::int64_t beta);

/// The decomposition, rotation and suffix-count properties; requires beta > 0.
bool check_rotation_identity(const PavementWord& word);

}  // namespace seifert

#endif
