#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "merocoef/laurent.hpp"

namespace merocoef {

constexpr int kDefaultOrder = 64;

LaurentSeries eisenstein(int weight, int order);
// (Delta, j) through q^order.
std::pair<LaurentSeries, LaurentSeries> delta_and_j(int order);

// Quotients E2^a E4^b E6^c whose coefficients are expanded by the ideal sums.
enum class Target {
    InvE4,
    InvE6,
    E4OverE6,
    E4Sq_E6Sq,
    E2OverE6,
    E2Sq_E6,
    E2OverE4,
    InvE6Sq,
    E4_E6Sq,
    InvE4Sq,
    E6_E4Sq,
    InvE4Cube,
    E6_E4Cube,
    E2E4Sq_E6Sq,
};

struct Monomial {
    int e2, e4, e6;
};

const std::vector<Target>& all_targets();
std::string target_name(Target t);
Monomial target_monomial(Target t);
// Accepts the ASCII names from target_name plus unicode subscript/superscript
// spellings such as "E₂E₄²/E₆²". Throws InvalidArgument.
Target parse_target(std::string_view name);

LaurentSeries oracle_coefficients(Target t, int order);
LaurentSeries oracle_coefficients(std::string_view name, int order);

// Series of E2^a E4^b E6^c through q^order (negative exponents allowed).
LaurentSeries eisenstein_monomial(const Monomial& m, int order);

}  // namespace merocoef
