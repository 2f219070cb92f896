#include "hkq/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hkq {

ordered_json rational_to_json(const Rational& x) {
    ordered_json j;
    j["num"] = Integer(x.get_num()).get_str();
    j["den"] = Integer(x.get_den()).get_str();
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    Integer num = integer_from_decimal(j.at("num").get<std::string>());
    Integer den = integer_from_decimal(j.at("den").get<std::string>());
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return make_rational(num, den);
}

ordered_json polynomial_to_json(const Polynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
    ordered_json j;
    j["coeffs"] = std::move(coeffs);
    return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

ordered_json rational_function_to_json(const RationalFunction& f) {
    ordered_json j;
    j["num"] = polynomial_to_json(f.num);
    j["den"] = polynomial_to_json(f.den);
    j["unreduced_deg_num"] = f.unreduced_deg_num;
    j["unreduced_deg_den"] = f.unreduced_deg_den;
    return j;
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
    RationalFunction f;
    f.num = polynomial_from_json(j.at("num"));
    f.den = polynomial_from_json(j.at("den"));
    f.unreduced_deg_num = j.at("unreduced_deg_num").get<int>();
    f.unreduced_deg_den = j.at("unreduced_deg_den").get<int>();
    return f;
}

ordered_json swap_table_to_json(const SwapTable& t) {
    ordered_json j;
    j["d"] = t.d;
    j["convention"] = kAlternatingConventionTag;
    ordered_json s = ordered_json::array();
    for (const auto& v : t.s) s.push_back(v.get_str());
    j["s"] = std::move(s);
    return j;
}

SwapTable swap_table_from_json(const nlohmann::json& j) {
    if (j.at("convention").get<std::string>() != kAlternatingConventionTag)
        throw std::invalid_argument("swap table with unknown convention tag");
    SwapTable t;
    t.d = j.at("d").get<int>();
    for (const auto& v : j.at("s")) t.s.push_back(integer_from_decimal(v.get<std::string>()));
    return t;
}

std::string swap_table_cache_bytes(const SwapTable& t) {
    return swap_table_to_json(t).dump() + "\n";
}

std::filesystem::path SwapTableCache::path_for(int d) const {
    return dir_ / ("swap_d" + std::to_string(d) + "_" + kAlternatingConventionTag + ".json");
}

std::optional<SwapTable> SwapTableCache::load(int d) const {
    std::ifstream in(path_for(d));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        SwapTable t = swap_table_from_json(j);
        if (t.d != d) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void SwapTableCache::store(const SwapTable& t) const {
    std::filesystem::create_directories(dir_);
    std::ofstream out(path_for(t.d), std::ios::binary | std::ios::trunc);
    out << swap_table_cache_bytes(t);
}

SwapTable SwapTableCache::get_or_compute(int d, int cap) const {
    if (auto cached = load(d)) return *cached;
    SwapTable t = swap_table(d, cap);
    store(t);
    return t;
}

}  // namespace hkq
