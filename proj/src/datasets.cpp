#include "dearank/datasets.hpp"

#include <stdexcept>

namespace dearank {

namespace {

DecisionMatrix make_table31() {
    return DecisionMatrix(
        {"DMU1", "DMU2", "DMU3", "DMU4"},
        {{"Input", AttributeRole::Input}, {"Output", AttributeRole::Output}},
        {{1, 1}, {2, 2}, {2, 10}, {2, 9}});
}

DecisionMatrix make_table32() {
    return DecisionMatrix(
        {"DMU1", "DMU2", "DMU3", "DMU4"},
        {{"Input", AttributeRole::Input}, {"Output", AttributeRole::Output}},
        {{1, 8}, {1, 7}, {2, 2}, {6, 1}});
}

DecisionMatrix make_table34() {
    return DecisionMatrix(
        {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13",
         "14", "15", "16", "17", "18"},
        {{"FTE sales", AttributeRole::Input},
         {"FTE support", AttributeRole::Input},
         {"RRSP", AttributeRole::Output},
         {"LC", AttributeRole::Output},
         {"Loans", AttributeRole::Output},
         {"Mortgages", AttributeRole::Output}},
        {{45.34, 40.93, 263, 137, 935, 429},
         {9.02, 1.34, 42, 6, 176, 32},
         {26.12, 8.24, 130, 20, 679, 101},
         {10.94, 4.87, 134, 37, 437, 80},
         {49.52, 32.28, 308, 46, 726, 227},
         {10.82, 1.09, 27, 2, 18, 136},
         {11.52, 1.98, 44, 5, 337, 47},
         {8.11, 3.91, 34, 1, 245, 33},
         {9.96, 5.26, 29, 2, 202, 49},
         {9.86, 1.01, 67, 10, 161, 52},
         {4, 1.58, 42, 2, 159, 17},
         {5.78, 1.52, 85, 1, 196, 78},
         {4.87, 1.05, 52, 4, 237, 52},
         {2.93, 1.97, 6, 2, 127, 18},
         {2.96, 1.58, 21, 2, 103, 23},
         {9.84, 5.02, 55, 1, 301, 50},
         {16.06, 1.99, 143, 7, 551, 187},
         {25.06, 7.76, 151, 13, 808, 211}});
}

} // namespace

const DecisionMatrix& demo_dataset(std::string_view id) {
    static const DecisionMatrix t31 = make_table31();
    static const DecisionMatrix t32 = make_table32();
    static const DecisionMatrix t34 = make_table34();
    if (id == "table3.1") return t31;
    if (id == "table3.2") return t32;
    if (id == "table3.4") return t34;
    throw std::invalid_argument("unknown demo dataset '" + std::string(id) +
                                "' (try: table3.1, table3.2, table3.4)");
}

std::vector<std::string> demo_dataset_ids() {
    return {"table3.1", "table3.2", "table3.4"};
}

} // namespace dearank
