#pragma once

#include "pmut/young.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pmut::fixtures {

// A valuation table as printed: explicit column order, one digit string per row.
struct Table {
    std::string name;
    int k = 0, n = 0;
    std::vector<std::string> columns;
    std::vector<std::pair<std::string, std::string>> rows;  // ("35", "00110112")

    std::vector<YoungDiagram> column_diagrams() const;
    std::vector<Subset> subsets() const;
    std::vector<ZVec> values() const;
};

const Table& table1();           // rectangle graph, Gr(2,6)
const Table& table2();           // rectangle graph, Gr(3,6)
const Table& table3();           // dual rectangle graph, Gr(3,6)
const Table& dual_table_2_6();   // dual rectangle graph, Gr(2,6)
const Table& g_image_2_6();      // g applied to the previous table; columns are positional x_{a x b}
const Table& phi_image_2_6();    // image of Table 1 under the mutation without the sign flip

// Column (2,2) of Table 2 after the generalized mutation, in the row order of Table 2.
const std::vector<long long>& generalized_column_3_6();

// Quiver of the Gr(2,6) rectangle graph, arrows between k-subsets.
const std::vector<std::pair<std::string, std::string>>& quiver_arrows_2_6();

}  // namespace pmut::fixtures
