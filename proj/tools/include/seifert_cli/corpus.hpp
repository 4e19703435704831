/**
 * @file corpus.hpp
 * @brief The pinned verification corpus.
 */
#ifndef SEIFERT_CLI_CORPUS_HPP
#define SEIFERT_CLI_CORPUS_HPP

#include <vector>

#include "seifert/invariants.hpp"

namespace seifert::cli {

/**
 * Every type at its minimal genus and one above, crossed with the fiber
 * sets {}, {(2,1),(3,1),(5,1)}, {(2,1),(4,3)}, {(3,1),(3,2)} and e in {0, -1}.
 * 96 manifolds, in a fixed order.
 */
std::vector<SeifertInvariants> corpus();

}  // namespace seifert::cli

#endif
