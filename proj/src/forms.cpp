#include "merocoef/forms.hpp"

#include <array>
#include <map>

#include "merocoef/errors.hpp"

namespace merocoef {

namespace {

mpz_class sigma(int k, int n) {
    mpz_class s = 0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, k);
        s += t;
        int e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), e, k);
            s += t;
        }
    }
    return s;
}

struct TargetEntry {
    Target t;
    const char* name;
    Monomial m;
};

constexpr std::array<TargetEntry, 14> kTargets{{
    {Target::InvE4, "1/E4", {0, -1, 0}},
    {Target::InvE6, "1/E6", {0, 0, -1}},
    {Target::E4OverE6, "E4/E6", {0, 1, -1}},
    {Target::E4Sq_E6Sq, "E4^2/E6^2", {0, 2, -2}},
    {Target::E2OverE6, "E2/E6", {1, 0, -1}},
    {Target::E2Sq_E6, "E2^2/E6", {2, 0, -1}},
    {Target::E2OverE4, "E2/E4", {1, -1, 0}},
    {Target::InvE6Sq, "1/E6^2", {0, 0, -2}},
    {Target::E4_E6Sq, "E4/E6^2", {0, 1, -2}},
    {Target::InvE4Sq, "1/E4^2", {0, -2, 0}},
    {Target::E6_E4Sq, "E6/E4^2", {0, -2, 1}},
    {Target::InvE4Cube, "1/E4^3", {0, -3, 0}},
    {Target::E6_E4Cube, "E6/E4^3", {0, -3, 1}},
    {Target::E2E4Sq_E6Sq, "E2*E4^2/E6^2", {1, 2, -2}},
}};

const TargetEntry& entry(Target t) {
    for (const auto& e : kTargets)
        if (e.t == t) return e;
    throw InvalidArgument("unknown target");
}

std::string ascii_spelling(std::string_view in) {
    static const std::map<std::string, std::string> repl = {
        {"₂", "2"}, {"₄", "4"}, {"₆", "6"}, {"²", "^2"},
        {"³", "^3"}, {"·", "*"}, {"⋅", "*"},
    };
    std::string out;
    std::size_t i = 0;
    while (i < in.size()) {
        bool hit = false;
        for (const auto& [from, to] : repl) {
            if (in.substr(i, from.size()) == from) {
                out += to;
                i += from.size();
                hit = true;
                break;
            }
        }
        if (!hit) {
            if (in[i] != ' ') out += in[i];
            ++i;
        }
    }
    return out;
}

}  // namespace

LaurentSeries eisenstein(int weight, int order) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    long c;
    switch (weight) {
        case 2: c = -24; break;
        case 4: c = 240; break;
        case 6: c = -504; break;
        default: throw InvalidArgument("unsupported Eisenstein weight " + std::to_string(weight));
    }
    std::vector<Rational> v(order + 1);
    v[0] = 1;
    for (int n = 1; n <= order; ++n) v[n] = Rational(c * sigma(weight - 1, n));
    return LaurentSeries(0, std::move(v));
}

std::pair<LaurentSeries, LaurentSeries> delta_and_j(int order) {
    if (order < 1) throw InvalidArgument("delta_and_j needs order >= 1");
    // j = E4^3 / Delta loses two orders to the division by q.
    int work = order + 2;
    auto e4 = eisenstein(4, work);
    auto e6 = eisenstein(6, work);
    auto e4c = power(e4, 3);
    auto delta = (e4c - e6 * e6) * Rational(1, 1728);
    delta = delta.normalized();
    auto j = divide(e4c, delta);
    return {delta.truncated(order), j.truncated(order)};
}

const std::vector<Target>& all_targets() {
    static const std::vector<Target> v = [] {
        std::vector<Target> r;
        for (const auto& e : kTargets) r.push_back(e.t);
        return r;
    }();
    return v;
}

std::string target_name(Target t) { return entry(t).name; }

Monomial target_monomial(Target t) { return entry(t).m; }

Target parse_target(std::string_view name) {
    std::string s = ascii_spelling(name);
    for (const auto& e : kTargets) {
        if (s == e.name) return e.t;
    }
    if (s == "E2E4^2/E6^2") return Target::E2E4Sq_E6Sq;
    throw InvalidArgument("unknown target '" + std::string(name) + "'");
}

LaurentSeries eisenstein_monomial(const Monomial& m, int order) {
    LaurentSeries acc = LaurentSeries::constant(1, order);
    const int w[3] = {2, 4, 6};
    const int e[3] = {m.e2, m.e4, m.e6};
    for (int i = 0; i < 3; ++i)
        if (e[i] != 0) acc = mul(acc, power(eisenstein(w[i], order), e[i]));
    return acc.truncated(order);
}

LaurentSeries oracle_coefficients(Target t, int order) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    return eisenstein_monomial(target_monomial(t), order);
}

LaurentSeries oracle_coefficients(std::string_view name, int order) {
    return oracle_coefficients(parse_target(name), order);
}

}  // namespace merocoef
