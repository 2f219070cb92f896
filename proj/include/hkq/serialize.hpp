#pragma once

// JSON schemas for the exact types. All integers travel as decimal strings,
// never as native JSON numbers, so nothing is ever truncated to 64 bits.
//
//   Rational          {"num": "<decimal>", "den": "<decimal>"}
//   Polynomial        {"coeffs": [Rational...]}  (ascending degree)
//   RationalFunction  {"num": Polynomial, "den": Polynomial,
//                      "unreduced_deg_num": int, "unreduced_deg_den": int}
//   SwapTable cache   {"d": int, "convention": "down-up-v1", "s": [<decimal>...]}
//
// Emission uses ordered maps with fixed key order so identical values always
// serialize to identical bytes.

#include "hkq/combinatorics.hpp"
#include "hkq/polynomial.hpp"
#include "hkq/rational.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace hkq {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

ordered_json rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);

ordered_json swap_table_to_json(const SwapTable& t);
SwapTable swap_table_from_json(const nlohmann::json& j);

// Disk cache for swap tables, keyed by dimension and convention tag. A cache
// hit must be byte-identical to what recomputation would write; anything that
// fails to parse back to the recomputed table is rejected.
class SwapTableCache {
public:
    explicit SwapTableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path path_for(int d) const;
    std::optional<SwapTable> load(int d) const;
    void store(const SwapTable& t) const;

    // Load when present and valid, otherwise compute and store.
    SwapTable get_or_compute(int d, int cap = kSwapEnumCap) const;

private:
    std::filesystem::path dir_;
};

// Serialized bytes of a swap table as the cache writes them.
std::string swap_table_cache_bytes(const SwapTable& t);

}  // namespace hkq
