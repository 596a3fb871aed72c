#include "qovar/symbols.hpp"

namespace qovar {

std::string CovariantSymbol::str() const {
    std::string s(1, letter);
    if (tag) s += "^" + std::to_string(tag);
    s += "_";
    for (int d : sub) s += std::to_string(d);
    return s;
}

CovariantSymbol CovariantSymbol::parse(const std::string& s) {
    if (s == "f") return kGroundForm;
    if (s.size() < 6 || s[0] < 'A' || s[0] > 'L') throw Error("bad covariant symbol '" + s + "'");
    CovariantSymbol out;
    out.letter = s[0];
    std::size_t i = 1;
    if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != '_') ++j;
        out.tag = std::stoi(s.substr(i, j - i));
        i = j;
    }
    if (i >= s.size() || s[i] != '_' || s.size() != i + 5)
        throw Error("bad covariant symbol '" + s + "'");
    for (int k = 0; k < 4; ++k) {
        char c = s[i + 1 + k];
        if (c < '0' || c > '9') throw Error("bad covariant symbol '" + s + "'");
        out.sub[k] = c - '0';
    }
    return out;
}

namespace {

struct Row {
    const char* sym;
    const char* right;
    int e[4];
};

// Transcription of the fundamental-covariant tables (degree 2..12).
constexpr Row kRows[] = {
    {"B_0000", "f", {1, 1, 1, 1}},
    {"B_2200", "f", {0, 0, 1, 1}},
    {"B_2020", "f", {0, 1, 0, 1}},
    {"B_2002", "f", {0, 1, 1, 0}},
    {"B_0220", "f", {1, 0, 0, 1}},
    {"B_0202", "f", {1, 0, 1, 0}},
    {"B_0022", "f", {1, 1, 0, 0}},

    {"C^1_1111", "B_2200", {1, 1, 0, 0}},
    {"C^2_1111", "B_2020", {1, 0, 1, 0}},
    {"C_3111", "B_2200", {0, 1, 0, 0}},
    {"C_1311", "B_2200", {1, 0, 0, 0}},
    {"C_1131", "B_2020", {1, 0, 0, 0}},
    {"C_1113", "B_2002", {1, 0, 0, 0}},

    {"D^1_0000", "C^1_1111", {1, 1, 1, 1}},
    {"D^2_0000", "C^2_1111", {1, 1, 1, 1}},
    {"D_2200", "C_3111", {1, 0, 1, 1}},
    {"D_2020", "C^1_1111", {0, 1, 0, 1}},
    {"D_2002", "C_3111", {1, 1, 1, 0}},
    {"D_0220", "C_1311", {1, 1, 0, 1}},
    {"D_0202", "C_1311", {1, 1, 1, 0}},
    {"D_0022", "C_1131", {1, 1, 1, 0}},
    {"D_4000", "C_3111", {0, 1, 1, 1}},
    {"D_0400", "C_1311", {1, 0, 1, 1}},
    {"D_0040", "C_1131", {1, 1, 0, 1}},
    {"D_0004", "C_1113", {1, 1, 1, 0}},
    {"D^1_2220", "C_1311", {0, 1, 0, 1}},
    {"D^2_2220", "C^1_1111", {0, 0, 0, 1}},
    {"D^1_2202", "C_1113", {0, 0, 1, 1}},
    {"D^2_2202", "C_1311", {0, 1, 1, 0}},
    {"D^1_2022", "C_1113", {0, 1, 0, 1}},
    {"D^2_2022", "C^1_1111", {0, 1, 0, 0}},
    {"D^1_0222", "C_1113", {1, 0, 0, 1}},
    {"D^2_0222", "C_1311", {1, 1, 0, 0}},

    {"E_1111", "D_2200", {1, 1, 0, 0}},
    {"E^1_3111", "D_2200", {0, 1, 0, 0}},
    {"E^2_3111", "D^1_2202", {0, 1, 0, 1}},
    {"E^3_3111", "D^2_2022", {0, 0, 1, 1}},
    {"E^1_1311", "D_2200", {1, 0, 0, 0}},
    {"E^2_1311", "D_0202", {0, 0, 0, 1}},
    {"E^3_1311", "D_0220", {0, 0, 1, 0}},
    {"E^1_1131", "D^1_0222", {0, 1, 0, 1}},
    {"E^2_1131", "D^2_2022", {1, 0, 0, 1}},
    {"E^3_1131", "D_2020", {1, 0, 0, 0}},
    {"E^1_1113", "D^1_2022", {1, 0, 1, 0}},
    {"E^2_1113", "D^2_2022", {1, 0, 1, 0}},
    {"E^3_1113", "D_0004", {0, 0, 0, 1}},

    {"F_0000", "E_1111", {1, 1, 1, 1}},
    {"F_2200", "E^1_3111", {1, 0, 1, 1}},
    {"F_2020", "E_1111", {0, 1, 0, 1}},
    {"F_2002", "E^1_1113", {0, 1, 1, 1}},
    {"F_0220", "E^1_1311", {1, 1, 0, 1}},
    {"F_0202", "E^3_1113", {1, 0, 1, 1}},
    {"F_0022", "E^1_1113", {1, 1, 0, 1}},
    {"F^1_2220", "E^1_1311", {0, 1, 0, 1}},
    {"F^2_2220", "E^2_1311", {0, 1, 0, 1}},
    {"F^1_2202", "E^2_3111", {1, 0, 1, 0}},
    {"F^2_2202", "E^3_3111", {1, 0, 1, 0}},
    {"F^1_2022", "E^1_1113", {0, 1, 0, 1}},
    {"F^2_2022", "E^2_1113", {0, 1, 0, 1}},
    {"F^1_0222", "E^1_1131", {1, 0, 1, 0}},
    {"F^2_0222", "E^2_1131", {1, 0, 1, 0}},
    {"F_4200", "E^1_3111", {0, 0, 1, 1}},
    {"F_4020", "E^2_3111", {0, 1, 0, 1}},
    {"F_4002", "E^2_3111", {0, 1, 1, 0}},
    {"F_0420", "E^3_1311", {1, 0, 0, 1}},
    {"F_0402", "E^2_1311", {1, 0, 1, 0}},
    {"F_0042", "E^1_1131", {1, 1, 0, 0}},
    {"F_2400", "E^1_1311", {0, 0, 1, 1}},
    {"F_2040", "E^1_1131", {0, 1, 0, 1}},
    {"F_2004", "E^1_1113", {0, 1, 1, 0}},
    {"F_0240", "E^1_1131", {1, 0, 0, 1}},
    {"F_0204", "E^1_1113", {1, 0, 1, 0}},
    {"F_0024", "E^1_1113", {1, 1, 0, 0}},

    {"G^1_3111", "F_2200", {0, 1, 0, 0}},
    {"G^2_3111", "F_4002", {1, 0, 0, 1}},
    {"G^3_3111", "F^1_2202", {0, 1, 0, 1}},
    {"G^1_1311", "F_0402", {0, 1, 0, 1}},
    {"G^2_1311", "F_2200", {1, 0, 0, 0}},
    {"G^3_1311", "F_0202", {0, 0, 0, 1}},
    {"G^1_1131", "F^1_0222", {0, 1, 0, 1}},
    {"G^2_1131", "F^2_0222", {0, 1, 0, 1}},
    {"G^3_1131", "F_2040", {1, 0, 1, 0}},
    {"G^1_1113", "F^1_2022", {1, 0, 1, 0}},
    {"G^2_1113", "F^2_2022", {1, 0, 1, 0}},
    {"G^3_1113", "F_0202", {0, 1, 0, 0}},
    {"G_5111", "F_4002", {0, 0, 0, 1}},
    {"G_1511", "F_0402", {0, 0, 0, 1}},
    {"G_1151", "F_2040", {1, 0, 0, 0}},
    {"G_1115", "F_0024", {0, 0, 1, 0}},
    {"G_3311", "F_2400", {0, 1, 0, 0}},
    {"G_3131", "F^2_2022", {0, 0, 0, 1}},
    {"G_3113", "F_4002", {1, 0, 0, 0}},
    {"G_1331", "F_0240", {0, 0, 1, 0}},
    {"G_1313", "F_0402", {0, 1, 0, 0}},
    {"G_1133", "F^2_2022", {1, 0, 0, 0}},

    {"H_4000", "G_5111", {1, 1, 1, 1}},
    {"H_0400", "G^1_1311", {1, 0, 1, 1}},
    {"H_0040", "G_1151", {1, 1, 1, 1}},
    {"H_0004", "G^3_1113", {1, 1, 1, 0}},
    {"H^1_2220", "G^1_1311", {0, 1, 0, 1}},
    {"H^2_2220", "G^2_1311", {0, 1, 0, 1}},
    {"H^1_2202", "G^3_3111", {1, 0, 1, 0}},
    {"H^2_2202", "G^2_1113", {0, 0, 1, 1}},
    {"H^1_2022", "G^1_1113", {0, 1, 0, 1}},
    {"H^2_2022", "G^2_1113", {0, 1, 0, 1}},
    {"H^1_0222", "G^1_1131", {1, 0, 1, 0}},
    {"H^2_0222", "G^2_1131", {1, 0, 1, 0}},
    {"H_4200", "G_5111", {1, 0, 1, 1}},
    {"H_4020", "G_5111", {1, 1, 0, 1}},
    {"H_4002", "G_5111", {1, 1, 1, 0}},
    {"H_0420", "G^1_1311", {1, 0, 0, 1}},
    {"H_0402", "G_1313", {1, 0, 1, 1}},
    {"H_0042", "G_1151", {1, 1, 1, 0}},
    {"H_2400", "G^1_1311", {0, 0, 1, 1}},
    {"H_2040", "G_1151", {0, 1, 1, 1}},
    {"H_2004", "G^1_1113", {0, 1, 1, 0}},
    {"H_0240", "G_1151", {1, 0, 1, 1}},
    {"H_0204", "G^1_1113", {1, 0, 1, 0}},
    {"H_0024", "G^1_1113", {1, 1, 0, 0}},

    {"I_3111", "H_4020", {1, 0, 1, 0}},
    {"I_1311", "H^1_2220", {1, 0, 1, 0}},
    {"I_1131", "H_0240", {0, 1, 1, 0}},
    {"I_1113", "H_2004", {1, 0, 0, 1}},
    {"I^1_5111", "H_4020", {0, 0, 1, 0}},
    {"I^2_5111", "H_4002", {0, 0, 0, 1}},
    {"I^1_1511", "H_0402", {0, 0, 0, 1}},
    {"I^2_1511", "H_2400", {1, 0, 0, 0}},
    {"I^1_1151", "H_0240", {0, 1, 0, 0}},
    {"I^2_1151", "H_0042", {0, 0, 0, 1}},
    {"I^1_1115", "H_2004", {1, 0, 0, 0}},
    {"I^2_1115", "H_0024", {0, 0, 1, 0}},
    {"I^1_3311", "H^1_2220", {0, 0, 1, 0}},
    {"I^2_3311", "H^2_2220", {0, 0, 1, 0}},
    {"I^1_3131", "H_4020", {1, 0, 0, 0}},
    {"I^2_3131", "H^1_2220", {0, 1, 0, 0}},
    {"I^1_3113", "H_2004", {0, 0, 0, 1}},
    {"I^2_3113", "H^1_2022", {0, 0, 1, 0}},
    {"I^1_1331", "H_0240", {0, 0, 1, 0}},
    {"I^2_1331", "H^1_2220", {1, 0, 0, 0}},
    {"I^1_1313", "H_0204", {0, 0, 0, 1}},
    {"I^2_1313", "H^1_0222", {0, 0, 1, 0}},
    {"I^1_1133", "H_0024", {0, 0, 0, 1}},
    {"I^2_1133", "H^1_0222", {0, 1, 0, 0}},

    {"J_4200", "I^1_5111", {1, 0, 1, 1}},
    {"J_4020", "I^1_5111", {1, 1, 0, 1}},
    {"J_4002", "I^1_3113", {0, 1, 1, 1}},
    {"J_0420", "I^1_1331", {1, 0, 1, 1}},
    {"J_0402", "I^1_1511", {1, 1, 1, 0}},
    {"J_0042", "I^1_1133", {1, 1, 0, 1}},
    {"J_2400", "I^1_1511", {0, 1, 1, 1}},
    {"J_2040", "I^1_3131", {1, 1, 0, 1}},
    {"J_2004", "I^1_3113", {1, 1, 1, 0}},
    {"J_0240", "I^1_1331", {1, 1, 0, 1}},
    {"J_0204", "I^1_1115", {1, 0, 1, 1}},
    {"J_0024", "I^1_1115", {1, 1, 0, 1}},

    {"K_3311", "J_4200", {1, 0, 0, 0}},
    {"K_3131", "J_4020", {1, 0, 0, 0}},
    {"K_3113", "J_4002", {1, 0, 0, 0}},
    {"K_1331", "J_0420", {0, 1, 0, 0}},
    {"K_1313", "J_0402", {0, 1, 0, 0}},
    {"K_1133", "J_0042", {0, 0, 1, 0}},
    {"K_5111", "J_4200", {0, 1, 0, 0}},
    {"K_1511", "J_2400", {1, 0, 0, 0}},
    {"K_1151", "J_2040", {1, 0, 0, 0}},
    {"K_1115", "J_2004", {1, 0, 0, 0}},

    {"L_6000", "K_5111", {0, 1, 1, 1}},
    {"L_0600", "K_1511", {1, 0, 1, 1}},
    {"L_0060", "K_1151", {1, 1, 0, 1}},
    {"L_0006", "K_1115", {1, 1, 1, 0}},
};

}  // namespace

const std::vector<CovariantRecipe>& recipes() {
    static const std::vector<CovariantRecipe> table = [] {
        std::vector<CovariantRecipe> out;
        out.reserve(std::size(kRows));
        for (const Row& r : kRows) {
            CovariantRecipe rec;
            rec.symbol = CovariantSymbol::parse(r.sym);
            rec.right = CovariantSymbol::parse(r.right);
            rec.index = {r.e[0], r.e[1], r.e[2], r.e[3]};
            out.push_back(rec);
        }
        return out;
    }();
    return table;
}

const std::vector<CountRow>& expected_counts() {
    static const std::vector<CountRow> table = {
        {{0, 0, 0, 0}, {0, 1, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0}},
        {{1, 1, 1, 1}, {1, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
        {{2, 2, 0, 0}, {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
        {{2, 2, 2, 0}, {0, 0, 0, 2, 0, 2, 0, 2, 0, 0, 0, 0}},
        {{3, 1, 1, 1}, {0, 0, 1, 0, 3, 0, 3, 0, 1, 0, 0, 0}},
        {{3, 3, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1, 0}},
        {{4, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
        {{4, 2, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0}},
        {{5, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1, 0}},
        {{6, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    };
    return table;
}

}  // namespace qovar
