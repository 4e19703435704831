/**
 * @file words.cpp
 * @brief Recursive construction of w_{alpha,beta}.
 */
#include "seifert/words.hpp"

#include <numeric>

#include "seifert/invariants.hpp"

namespace seifert {

std::int64_t PavementWord::count_from(std::int64_t from, char letter) const {
    std::int64_t n = 0;
    for (std::int64_t i = std::max<std::int64_t>(from, 1); i <= z; ++i) {
        if (x(i) == letter) ++n;
    }
    return n;
}

namespace {

std::string substitute(const std::string& s, char from, const char* to) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char ch : s) {
        if (ch == from) {
            out += to;
        } else {
            out.push_back(ch);
        }
    }
    return out;
}

}  // namespace

std::string word_letters(std::int64_t alpha, std::int64_t beta) {
    if (alpha < 0 || beta < 0 || std::gcd(alpha, beta) != 1) {
        throw InputError("word_letters needs coprime non-negative arguments");
    }
    if (alpha == 1 && beta == 0) return "Q";
    if (alpha == 0 && beta == 1) return "H";
    // w_{a+b,b}(a,t) = w_{a,b}(a,at) and w_{a,a+b}(a,t) = w_{a,b}(at,t)
    if (alpha >= beta) return substitute(word_letters(alpha - beta, beta), 'H', "QH");
    return substitute(word_letters(alpha, beta - alpha), 'Q', "QH");
}

PavementWord build_word(std::int64_t alpha, std::int64_t beta) {
    if (alpha <= 0) throw InputError("pavement word needs alpha > 0");
    if (std::gcd(alpha, beta < 0 ? -beta : beta) != 1) {
        throw InputError("pavement word needs coprime (alpha, beta)");
    }
    PavementWord out;
    out.alpha = alpha;
    out.beta = beta;
    if (beta <= 0) {
        if (alpha != 1) throw InputError("beta <= 0 requires alpha = 1");
        out.z = 1 - beta;
        out.letters = "Q" + std::string(static_cast<std::size_t>(-beta), 'H');
        out.u = 1;
        out.v = 0;
        out.w = out.z;
        return out;
    }
    out.letters = word_letters(alpha, beta);
    out.z = alpha + beta;
    // u = alpha^{-1} mod beta in the window 0 < u <= beta.
    std::int64_t old_r = alpha % beta, r = beta, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    std::int64_t u = old_s % beta;
    if (u <= 0) u += beta;
    out.u = u;
    out.v = (alpha * u - 1) / beta;
    out.w = out.z - out.u - out.v + 1;
    return out;
}

bool check_rotation_identity(const PavementWord& word) {
    if (word.beta <= 0) return false;
    const std::int64_t a = word.alpha, b = word.beta, u = word.u, v = word.v;
    if (a * u - b * v != 1 || u <= 0 || u > b || v < 0 || v >= a) return false;

    // (i) w_{a,b} = w_{a-v,b-u} w_{v,u}
    if (word.letters != word_letters(a - v, b - u) + word_letters(v, u)) return false;

    // (ii) x_w..x_{z-1} Q H x_2..x_{w-1} reproduces the word
    std::string rotated;
    for (std::int64_t i = word.w; i <= word.z - 1; ++i) rotated.push_back(word.x(i));
    rotated += "QH";
    for (std::int64_t i = 2; i <= word.w - 1; ++i) rotated.push_back(word.x(i));
    if (rotated != word.letters) return false;

    // (iii) the suffix x_w..x_z holds v letters Q and u letters H
    return word.count_from(word.w, 'Q') == v && word.count_from(word.w, 'H') == u;
}

}  // namespace seifert
