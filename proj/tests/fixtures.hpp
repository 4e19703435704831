#ifndef SEIFERT_TEST_FIXTURES_HPP
#define SEIFERT_TEST_FIXTURES_HPP

#include <vector>

#include "seifert/invariants.hpp"

namespace seifert {

/// Every type at its minimal genus, fiber sets chosen to hit all three cases for p in {2, 3, 5}.
inline std::vector<SeifertInvariants> test_fixtures() {
    const std::vector<std::vector<Fiber>> fiber_sets = {
        {}, {{2, 1}, {3, 1}, {5, 1}}, {{2, 1}, {4, 3}}, {{3, 1}, {3, 2}}, {{2, 3}, {5, 2}}};
    std::vector<SeifertInvariants> out;
    for (SeifertType t : {SeifertType::O1, SeifertType::O2, SeifertType::N1, SeifertType::N2, SeifertType::N3,
                          SeifertType::N4}) {
        for (const auto& fibers : fiber_sets) {
            for (std::int64_t e : {0, -1, 2}) out.push_back(SeifertInvariants::make(e, t, minimal_genus(t), fibers));
        }
    }
    return out;
}

}  // namespace seifert

#endif
