/**
 * @file report.hpp
 * @brief Per-fixture verification report and its JSON form.
 */
#ifndef SEIFERT_CLI_REPORT_HPP
#define SEIFERT_CLI_REPORT_HPP

#include <array>
#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "seifert/closedform.hpp"
#include "seifert/invariants.hpp"

namespace seifert::cli {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct GeneratorEntry {
    std::string name;
    int degree = 0;
    std::string cellular;
    std::string lift;  ///< "formula" or "solver"
    friend bool operator==(const GeneratorEntry&, const GeneratorEntry&) = default;
};

struct ProductEntry {
    std::string left;
    std::string right;
    std::string computed;
    std::string expected;
    bool match = true;
    friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

struct RingReport {
    std::string invariants;
    std::uint32_t p = 2;
    std::string type;
    int case_id = 1;
    std::string variant = "theorem";
    std::array<std::size_t, 4> dims_simplicial{};
    std::array<std::size_t, 4> dims_cellular{};
    std::array<std::size_t, 4> dims_expected{};
    std::vector<GeneratorEntry> generators;
    std::vector<ProductEntry> products;
    std::vector<CheckResult> checks;
    /// Basis variants whose product table equals the brute-force one:
    /// "theorem", "table", "both" or "neither".
    std::string matching_variants;
    bool passed = true;
    double elapsed_ms = 0.0;
    friend bool operator==(const RingReport&, const RingReport&) = default;
};

struct RunOptions {
    Variant variant = Variant::Theorem;
    bool paranoid = false;
    /// Skip the product computation (groups only).
    bool groups_only = false;
};

/// Runs every check on one (invariants, p). Never throws on mathematical
/// failures; they become failed checks.
RingReport check_fixture(const SeifertInvariants& inv, std::uint32_t p, const RunOptions& options);

void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
void to_json(nlohmann::json& j, const GeneratorEntry& g);
void from_json(const nlohmann::json& j, GeneratorEntry& g);
void to_json(nlohmann::json& j, const ProductEntry& e);
void from_json(const nlohmann::json& j, ProductEntry& e);
void to_json(nlohmann::json& j, const RingReport& r);
void from_json(const nlohmann::json& j, RingReport& r);

std::string render_text(const RingReport& r);

}  // namespace seifert::cli

#endif
