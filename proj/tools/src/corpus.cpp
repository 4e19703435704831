#include "seifert_cli/corpus.hpp"

namespace seifert::cli {

std::vector<SeifertInvariants> corpus() {
    const std::vector<std::vector<Fiber>> fiber_sets = {
        {},
        {{2, 1}, {3, 1}, {5, 1}},
        {{2, 1}, {4, 3}},
        {{3, 1}, {3, 2}},
    };
    std::vector<SeifertInvariants> out;
    for (SeifertType t : {SeifertType::O1, SeifertType::O2, SeifertType::N1, SeifertType::N2, SeifertType::N3,
                          SeifertType::N4}) {
        for (int extra = 0; extra < 2; ++extra) {
            for (const auto& fibers : fiber_sets) {
                for (std::int64_t e : {0, -1}) out.push_back(SeifertInvariants::make(e, t, minimal_genus(t) + extra, fibers));
            }
        }
    }
    return out;
}

}  // namespace seifert::cli
