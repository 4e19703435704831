/**
 * @file invariants.hpp
 * @brief Seifert invariant lists: parsing, validation and the constants
 *        (a, c, n, Case, signs) that every other module consumes.
 */
#ifndef SEIFERT_INVARIANTS_HPP
#define SEIFERT_INVARIANTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

/// Raised on malformed or inadmissible invariant lists.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeifertType { O1, O2, N1, N2, N3, N4 };

enum class CaseId { Case1 = 1, Case2 = 2, Case3 = 3 };

std::string to_string(SeifertType t);
std::string to_string(CaseId c);
SeifertType parse_type(std::string_view s);

inline bool is_orientable_base(SeifertType t) {
    return t == SeifertType::O1 || t == SeifertType::O2;
}

/// Minimal admissible genus for a type.
int minimal_genus(SeifertType t);

struct Fiber {
    std::int64_t a = 1;
    std::int64_t b = 0;
    friend bool operator==(const Fiber&, const Fiber&) = default;
};

/**
 * Normalized invariant list {e; (type, g); (a_1,b_1),...,(a_m,b_m)}.
 * fibers[0] is always the extra fiber (1, e).
 */
struct SeifertInvariants {
    std::int64_t e = 0;
    SeifertType type = SeifertType::O1;
    int g = 0;
    std::vector<Fiber> fibers;

    /// Builds and validates; prepends (1, e).
    static SeifertInvariants make(std::int64_t e, SeifertType type, int g,
                                  const std::vector<Fiber>& exceptional);

    /// Number of fibers minus one.
    int m() const { return static_cast<int>(fibers.size()) - 1; }
    /// g' = 2g for orientable bases, g otherwise.
    int gp() const { return is_orientable_base(type) ? 2 * g : g; }
    /// The symbol * : 4g for orientable bases, 2g otherwise.
    int star() const { return 2 * gp(); }
    /// Sign epsilon_j for j = 1..g'.
    int eps(int j) const;
    std::vector<int> eps_signs() const;

    /// Canonical text form in the input grammar.
    std::string to_text() const;

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

/// Parses `e=<int>;type=<o1|..|n4>;g=<uint>[;fibers=(a,b),...]`.
SeifertInvariants parse(std::string_view text);

struct DerivedConstants {
    std::uint32_t p = 2;
    std::int64_t a = 1;            ///< lcm of |a_k|
    std::int64_t c = 0;            ///< sum of b_k * a / a_k, exact
    int n = 0;                     ///< number of a_k divisible by p
    int r = 0;                     ///< number of b_k divisible by p
    int gp = 0;
    int star = 0;
    CaseId case_id = CaseId::Case1;
    std::vector<int> eps_signs;    ///< eps_1..eps_g'
    std::vector<int> fiber_order;  ///< working index -> input index
};

bool is_prime(std::uint64_t p);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t x, std::uint32_t p);

DerivedConstants derive(const SeifertInvariants& inv, std::uint32_t p);

/// Copy of the invariants with fibers permuted into the working order.
SeifertInvariants reordered(const SeifertInvariants& inv, const std::vector<int>& order);

/// Text rendering of the fundamental group presentation.
std::string presentation_pi1(const SeifertInvariants& inv);

}  // namespace seifert

#endif
