#include "pmut/fixtures.hpp"

namespace pmut::fixtures {

std::vector<YoungDiagram> Table::column_diagrams() const {
    std::vector<YoungDiagram> out;
    for (const auto& c : columns) out.push_back(YoungDiagram::parse(c));
    return out;
}

std::vector<Subset> Table::subsets() const {
    std::vector<Subset> out;
    for (const auto& r : rows) out.push_back(parse_subset(r.first));
    return out;
}

std::vector<ZVec> Table::values() const {
    std::vector<ZVec> out;
    for (const auto& r : rows) {
        ZVec v;
        for (char c : r.second) v.push_back(c - '0');
        out.push_back(std::move(v));
    }
    return out;
}

const Table& table1() {
    static const Table t{"Table 1 (rectangle, Gr(2,6))", 2, 6,
                         {"1", "2", "3", "4", "1,1", "2,2", "3,3", "4,4"},
                         {{"12", "00000000"}, {"13", "00000001"}, {"14", "00000011"}, {"15", "00000111"},
                          {"16", "00001111"}, {"23", "00010001"}, {"24", "00010011"}, {"25", "00010111"},
                          {"26", "00011111"}, {"34", "00110012"}, {"35", "00110112"}, {"36", "00111112"},
                          {"45", "01110122"}, {"46", "01111122"}, {"56", "11111222"}}};
    return t;
}

const Table& table2() {
    static const Table t{"Table 2 (rectangle, Gr(3,6))", 3, 6,
                         {"1", "2", "1,1", "2,2", "3", "1,1,1", "3,3", "2,2,2", "3,3,3"},
                         {{"123", "000000000"}, {"124", "000000001"}, {"125", "000000011"}, {"126", "000001011"},
                          {"134", "000000101"}, {"135", "000000111"}, {"136", "000001111"}, {"145", "000100112"},
                          {"146", "000101112"}, {"156", "001101122"}, {"234", "000010101"}, {"235", "000010111"},
                          {"236", "000011111"}, {"245", "000110112"}, {"246", "000111112"}, {"256", "001111122"},
                          {"345", "010110212"}, {"346", "010111212"}, {"356", "011111222"}, {"456", "111211223"}}};
    return t;
}

const Table& table3() {
    static const Table t{"Table 3 (dual rectangle, Gr(3,6))", 3, 6,
                         {"3,3,2", "3,3,1", "3,2,2", "3,1,1", "3", "1,1,1", "3,3", "2,2,2", "3,3,3"},
                         {{"123", "000000000"}, {"124", "000000001"}, {"125", "101000011"}, {"126", "111101011"},
                          {"134", "110000101"}, {"135", "111000111"}, {"136", "111101111"}, {"145", "111000112"},
                          {"146", "111101112"}, {"156", "212101122"}, {"234", "111110101"}, {"235", "111110111"},
                          {"236", "111111111"}, {"245", "111110112"}, {"246", "111111112"}, {"256", "212111122"},
                          {"345", "221110212"}, {"346", "221111212"}, {"356", "222111222"}, {"456", "222111223"}}};
    return t;
}

const Table& dual_table_2_6() {
    static const Table t{"dual rectangle, Gr(2,6)", 2, 6,
                         {"4,3", "4,2", "4,1", "4", "1,1", "2,2", "3,3", "4,4"},
                         {{"12", "00000000"}, {"13", "00000001"}, {"14", "10000011"}, {"15", "11000111"},
                          {"16", "11101111"}, {"23", "11110001"}, {"24", "11110011"}, {"25", "11110111"},
                          {"26", "11111111"}, {"34", "11110012"}, {"35", "11110112"}, {"36", "11111112"},
                          {"45", "21110122"}, {"46", "21111122"}, {"56", "22111222"}}};
    return t;
}

const Table& g_image_2_6() {
    // positional columns x_{1x1}, ..., x_{1x4}, x_{2x1}, ..., x_{2x4}
    static const Table t{"g-image of the dual table, Gr(2,6)", 2, 6,
                         {},
                         {{"12", "00000000"}, {"13", "10000000"}, {"14", "01000000"}, {"15", "00100000"},
                          {"16", "00010000"}, {"23", "00001000"}, {"24", "00000100"}, {"25", "00000010"},
                          {"26", "00000001"}, {"34", "10000100"}, {"35", "10000010"}, {"36", "10000001"},
                          {"45", "01000010"}, {"46", "01000001"}, {"56", "00100001"}}};
    return t;
}

const Table& phi_image_2_6() {
    static const Table t{"image of Table 1 without the sign flip", 2, 6,
                         {"1", "2", "3", "4", "1,1", "2,2", "3,3", "4,4"},
                         {{"12", "00000000"}, {"13", "00000001"}, {"14", "00000011"}, {"15", "00000111"},
                          {"16", "10001111"}, {"23", "00010001"}, {"24", "00010011"}, {"25", "00010111"},
                          {"26", "10011111"}, {"34", "00110012"}, {"35", "00110112"}, {"36", "10111112"},
                          {"45", "11110122"}, {"46", "11111122"}, {"56", "31111222"}}};
    return t;
}

const std::vector<long long>& generalized_column_3_6() {
    static const std::vector<long long> v{0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3};
    return v;
}

const std::vector<std::pair<std::string, std::string>>& quiver_arrows_2_6() {
    static const std::vector<std::pair<std::string, std::string>> a{
        {"16", "26"}, {"26", "12"}, {"26", "36"}, {"23", "26"}, {"36", "23"},
        {"36", "46"}, {"34", "36"}, {"46", "34"}, {"45", "46"}, {"46", "56"}};
    return a;
}

}  // namespace pmut::fixtures
