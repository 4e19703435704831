#include <doctest.h>

#include <numeric>
#include <string>

#include "seifert/words.hpp"

using namespace seifert;

namespace {

// Unfolds the recursive definition by substitution: w(a+b, b) = w(a, b) with t -> at,
// w(a, a+b) = w(a, b) with a -> at, starting from w(1,0) = Q and w(0,1) = H.
std::string substitution_word(std::int64_t alpha, std::int64_t beta) {
    if (alpha == 1 && beta == 0) return "Q";
    if (alpha == 0 && beta == 1) return "H";
    std::string inner;
    const bool reduce_alpha = alpha >= beta;
    inner = reduce_alpha ? substitution_word(alpha - beta, beta) : substitution_word(alpha, beta - alpha);
    std::string out;
    for (char ch : inner) {
        if (reduce_alpha) {
            out += ch == 'H' ? std::string("QH") : std::string("Q");
        } else {
            out += ch == 'Q' ? std::string("QH") : std::string("H");
        }
    }
    return out;
}

}  // namespace

TEST_CASE("small words") {
    CHECK(word_letters(1, 0) == "Q");
    const auto w = build_word(5, 2);
    CHECK(w.letters == "QQQHQQH");
    CHECK(w.u == 1);
    CHECK(w.v == 2);
    CHECK(w.w == 5);
    CHECK(w.z == 7);
    CHECK(word_letters(2, 3) == "QHQHH");
}

TEST_CASE("non-positive beta convention") {
    const auto w = build_word(1, -3);
    CHECK(w.letters == "QHHH");
    CHECK(w.u == 1);
    CHECK(w.v == 0);
    CHECK(w.z == 4);
    CHECK(w.w == 4);
    CHECK(build_word(1, 0).z == 1);
}

TEST_CASE("invalid words") {
    CHECK_THROWS(build_word(4, 2));
    CHECK_THROWS(build_word(3, -1));
    CHECK_THROWS(build_word(3, 0));
}

TEST_CASE("words agree with the substitution oracle") {
    for (std::int64_t a = 1; a <= 30; ++a) {
        for (std::int64_t b = 1; a + b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CAPTURE(a);
            CAPTURE(b);
            CHECK(word_letters(a, b) == substitution_word(a, b));
        }
    }
}

TEST_CASE("rotation data on every small coprime pair") {
    for (std::int64_t a = 1; a <= 49; ++a) {
        for (std::int64_t b = 1; a + b <= 50; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto w = build_word(a, b);
            CAPTURE(w.letters);
            CHECK(check_rotation_identity(w));
            CHECK(a * w.u - b * w.v == 1);
            CHECK(w.u > 0);
            CHECK(w.u <= b);
            CHECK(w.v >= 0);
            CHECK(w.v < a);
            CHECK(w.z == a + b);
            CHECK(w.w == w.z - w.u - w.v + 1);
            CHECK(w.count_from(1, 'Q') == a);
            CHECK(w.count_from(1, 'H') == b);
            CHECK(w.count_from(w.w, 'Q') == w.v);
            CHECK(w.count_from(w.w, 'H') == w.u);
        }
    }
}

TEST_CASE("a single Q followed by beta letters H") {
    for (std::int64_t b = 1; b < 10; ++b) {
        const auto w = build_word(1, b);
        CHECK(w.letters == "Q" + std::string(static_cast<std::size_t>(b), 'H'));
        CHECK(w.u == 1);
        CHECK(w.v == 0);
        CHECK(check_rotation_identity(w));
    }
}
