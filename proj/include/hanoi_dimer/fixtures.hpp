#pragma once

// Published reference values used by the acceptance tests and by
// `reproduce`. Integers are written without separators; ratio strings
// carry exactly the digits that were published.

#include <array>
#include <string_view>

namespace hanoi_dimer::reference {

inline constexpr int kVersion = 1;

/// One published class count row: k is the class index, -1 for M.
struct CountRow {
    std::string_view label;
    int k;
    std::array<std::string_view, 2> at;  // n = 1, 2
};

inline constexpr std::array<CountRow, 6> kCountsD3{{
    {"f", 0, {"1010", "49464202269253193"}},
    {"g", 1, {"1242", "62379666478434024"}},
    {"h", 2, {"1556", "78668504245191833"}},
    {"t", 3, {"1983", "99212077110534768"}},
    {"s", 4, {"2571", "125122091640871731"}},
    {"M", -1, {"25817", "1292964293737151090"}},
}};

inline constexpr std::array<CountRow, 7> kCountsD4{{
    {"M", -1, {"48645865", "1209689823065753613801849265389348210254"}},
    {"f", 0, {"510980", "12567379442065248794102222711306394841"}},
    {"g", 1, {"755968", "18760454431707651977688401100886141664"}},
    {"h", 2, {"1123642", "28005432734266093414497192140551929071"}},
    {"t", 3, {"1677248", "41806280366033934562540832493986021752"}},
    {"s", 4, {"2513329", "62408116726493840561375438310621519011"}},
    {"u", 5, {"3779500", "93162456829680622542047599275124003808"}},
}};

/// r_j(n) = c_j(n) / c_{j+1}(n) for n = 1..4, rounded to `digits` places.
struct RatioRow {
    std::string_view label;
    int j;
    int digits;
    std::array<std::string_view, 4> at;
};

inline constexpr std::array<RatioRow, 4> kRatiosD3{{
    {"alpha", 0, 15, {"0.813204508856683", "0.792953939347432", "0.792939105706120", "0.792939105697681"}},
    {"beta", 1, 15, {"0.798200514138817", "0.792943339611629", "0.792939105700090", "0.792939105697681"}},
    {"gamma", 2, 15, {"0.784669692385275", "0.792932741016451", "0.792939105694060", "0.792939105697681"}},
    {"omega", 3, 15, {"0.771295215869312", "0.792922143559552", "0.792939105688030", "0.792939105697681"}},
}};

inline constexpr std::array<RatioRow, 5> kRatiosD4{{
    {"alpha", 0, 14, {"0.67592808161192", "0.66988672837395", "0.66988575004178", "0.66988575004175"}},
    {"g/h", 1, 14, {"0.67278368021131", "0.66988625420357", "0.66988575004176", "0.66988575004175"}},
    {"h/t", 2, 14, {"0.66993193612394", "0.66988578005661", "0.66988575004175", "0.66988575004175"}},
    {"t/s", 3, 14, {"0.66734120363868", "0.66988530593307", "0.66988575004173", "0.66988575004175"}},
    {"omega", 4, 14, {"0.66498981346739", "0.66988483183294", "0.66988575004172", "0.66988575004175"}},
}};

/// eps(n+1) / eps(n)^2 for d=3, n = 1..4, as published. These are ten
/// times the exact values and truncated, so they cannot be matched.
inline constexpr int kEpsRatioDigits = 14;
inline constexpr std::array<std::string_view, 4> kEpsRatiosD3{
    "0.18102932094933", "0.17893865402990", "0.17893332747848", "0.17893332747295"};

/// Exact eps-ratio limit for d=3 to the published number of places.
inline constexpr std::string_view kEpsRatioLimitD3 = "0.01789333274729";

inline constexpr std::string_view kLimitD3 = "0.79293910569768130956986961523";
inline constexpr std::string_view kLimitD4 = "0.66988575004174782028883689785";

inline constexpr std::string_view kEntropyD2 = "0.5764643016";
inline constexpr std::string_view kEntropyD3 = "0.65719921144295911522";
inline constexpr std::string_view kEntropyD4 = "0.72291383087181938879";
inline constexpr int kCertifiedDigitsD3 = 101;
inline constexpr int kCertifiedDigitsD4 = 120;

/// Sierpinski gasket entropies for the same d, documentation only.
inline constexpr std::array<std::string_view, 3> kSierpinskiD2to4{"0.6562942369", "0.7811514674", "0.8767794029"};

}  // namespace hanoi_dimer::reference
