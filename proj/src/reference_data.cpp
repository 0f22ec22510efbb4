// Generated from the published result tables.
#include "sbsearch/bench.hpp"

namespace sbs {

namespace {

// Rows are delta = 10^-1 .. 10^-15, columns pi, e, sqrt2, sqrt5.
const char* const kApprox[15][4] = {
    {"16/5", "8/3", "3/2", "7/3"},
    {"22/7", "19/7", "17/12", "29/13"},
    {"201/64", "87/32", "41/29", "38/17"},
    {"333/106", "193/71", "99/70", "161/72"},
    {"355/113", "1071/394", "577/408", "682/305"},
    {"355/113", "2721/1001", "1393/985", "2207/987"},
    {"75948/24175", "15062/5541", "3363/2378", "9349/4181"},
    {"100798/32085", "23225/8544", "19601/13860", "12238/5473"},
    {"103993/33102", "49171/18089", "47321/33461", "51841/23184"},
    {"312689/99532", "419314/154257", "114243/80782", "219602/98209"},
    {"833719/265381", "1084483/398959", "275807/195025", "710647/317811"},
    {"4272943/1360120", "1084483/398959", "1607521/1136689", "3010349/1346269"},
    {"5419351/1725033", "12496140/4597073", "3880899/2744210", "3940598/1762289"},
    {"58466453/18610450", "28245729/10391023", "9369319/6625109", "16692641/7465176"},
    {"80143857/25510582", "28245729/10391023", "54608393/38613965", "70711162/31622993"},
};

const unsigned kQueries[15][4] = {
    {14, 12, 6, 11},
    {11, 13, 10, 16},
    {24, 17, 13, 16},
    {24, 17, 14, 17},
    {19, 26, 18, 24},
    {19, 27, 21, 27},
    {47, 34, 22, 32},
    {47, 34, 26, 32},
    {47, 33, 29, 33},
    {39, 45, 30, 40},
    {46, 45, 33, 43},
    {50, 45, 37, 48},
    {47, 54, 38, 48},
    {60, 54, 41, 49},
    {60, 63, 45, 56},
};

}  // namespace

const std::vector<std::string> kReferenceConstants = {"pi", "e", "sqrt2", "sqrt5"};

namespace {
int column(const std::string& c) {
    for (std::size_t i = 0; i < kReferenceConstants.size(); ++i)
        if (kReferenceConstants[i] == c) return static_cast<int>(i);
    return -1;
}
}  // namespace

std::optional<Fraction> reference_approximation(const std::string& constant, unsigned delta_exp) {
    int c = column(constant);
    if (c < 0 || delta_exp < 1 || delta_exp > 15) return std::nullopt;
    return Fraction::parse(kApprox[delta_exp - 1][c]);
}

std::optional<std::uint64_t> reference_query_count(const std::string& constant, unsigned delta_exp) {
    int c = column(constant);
    if (c < 0 || delta_exp < 1 || delta_exp > 15) return std::nullopt;
    return kQueries[delta_exp - 1][c];
}

const std::vector<ReferenceSearchStats>& reference_search_stats() {
    static const std::vector<ReferenceSearchStats> rows = {
        {1, 8, 5.5, 7, 3.5},
        {2, 15, 13.2, 15, 8.5},
        {3, 21, 20.7, 23, 15.1},
        {4, 28, 27.6, 29, 21.8},
        {5, 35, 34.3, 38, 28.5},
        {6, 41, 40.9, 44, 35.5},
        {7, 48, 47.6, 52, 42.1},
        {8, 55, 54.2, 59, 48.9},
        {9, 61, 60.8, 66, 55.8},
        {10, 68, 67.5, 72, 62.3},
        {11, 75, 74.1, 80, 69.2},
        {12, 81, 80.8, 86, 76.2},
        {13, 88, 87.4, 96, 82.8},
        {14, 95, 94.0, 102, 89.9},
        {15, 101, 100.8, 110, 96.4},
        {16, 108, 107.4, 114, 103.3},
        {17, 114, 114.0, 122, 110.3},
        {18, 121, 120.6, 128, 117.0},
        {19, 128, 127.3, 136, 123.6},
        {20, 134, 133.9, 145, 130.4},
        {21, 141, 140.6, 151, 137.4},
        {22, 148, 147.2, 157, 144.1},
        {23, 154, 153.9, 165, 150.6},
        {24, 161, 160.6, 172, 157.6},
        {25, 168, 167.1, 176, 164.3},
        {26, 174, 173.8, 185, 171.3},
        {27, 181, 180.5, 195, 178.2},
        {28, 188, 187.0, 200, 184.7},
        {29, 194, 193.7, 206, 191.6},
        {30, 201, 200.4, 213, 198.4},
        {31, 207, 207.0, 219, 205.3},
        {32, 214, 213.7, 228, 211.8},
        {33, 221, 220.3, 235, 218.4},
        {34, 227, 226.9, 239, 225.9},
        {35, 234, 233.6, 247, 232.5},
        {36, 241, 240.2, 253, 239.0},
        {37, 247, 246.9, 264, 245.7},
        {38, 254, 253.6, 268, 252.9},
        {39, 261, 260.1, 274, 259.7},
        {40, 267, 266.8, 282, 265.9},
        {41, 274, 273.5, 289, 273.2},
        {42, 281, 280.0, 298, 280.2},
        {43, 287, 286.7, 303, 286.7},
        {44, 294, 293.4, 311, 293.8},
        {45, 300, 300.0, 316, 300.5},
        {46, 307, 306.7, 323, 307.1},
        {47, 314, 313.3, 335, 313.7},
        {48, 320, 319.9, 339, 321.2},
        {49, 327, 326.6, 345, 327.6},
        {50, 334, 333.3, 351, 334.0},
    };
    return rows;
}

}  // namespace sbs
