#pragma once

#include <cstddef>
#include <vector>

// Frozen f(x,y,z) grids for every word of rank <= 4 plus the z=0 row of
// x=21221. Values are "p/q" strings; each grid lists rows z = 0..#x, each
// row the values for y = 0..|x|.
namespace fixtures {

struct FTable {
    const char* x;
    std::vector<std::vector<const char*>> rows; // rows[z][y]
};

inline const std::vector<FTable>& f_tables() {
    static const std::vector<FTable> tables = {
        {"e", {{"1/1"}}},
        {"1", {{"1/1", "-1/1"}, {"1/1", "0/1"}}},
        {"2", {{"1/2", "0/1", "-1/2"}, {"1/2", "0/1", "-1/2"}}},
        {"11", {{"1/2", "-1/1", "1/2"}, {"1/2", "0/1", "-1/2"}, {"1/2", "0/1", "1/2"}}},
        {"12",
         {{"1/6", "0/1", "-1/2", "1/3"},
          {"1/6", "0/1", "-1/2", "1/3"},
          {"1/6", "0/1", "-1/2", "-1/6"}}},
        {"21",
         {{"1/3", "-1/2", "0/1", "1/6"},
          {"1/3", "0/1", "0/1", "-1/3"},
          {"1/3", "0/1", "0/1", "-1/3"}}},
        {"111",
         {{"1/6", "-1/2", "1/2", "-1/6"},
          {"1/6", "0/1", "-1/2", "1/3"},
          {"1/6", "0/1", "1/2", "-2/3"},
          {"1/6", "0/1", "1/2", "1/3"}}},
        {"112",
         {{"1/24", "0/1", "-1/4", "1/3", "-1/8"},
          {"1/24", "0/1", "-1/4", "1/3", "-1/8"},
          {"1/24", "0/1", "-1/4", "-1/6", "5/24"},
          {"1/24", "0/1", "-1/4", "-1/6", "-1/8"}}},
        {"22",
         {{"1/8", "0/1", "-1/4", "0/1", "1/8"},
          {"1/8", "0/1", "-1/4", "0/1", "1/8"},
          {"1/8", "0/1", "-1/4", "0/1", "1/8"}}},
        {"121",
         {{"1/12", "-1/6", "0/1", "1/6", "-1/12"},
          {"1/12", "0/1", "0/1", "-1/3", "1/4"},
          {"1/12", "0/1", "0/1", "-1/3", "1/4"},
          {"1/12", "0/1", "0/1", "-1/3", "-1/4"}}},
        {"211",
         {{"1/8", "-1/3", "1/4", "0/1", "-1/24"},
          {"1/8", "0/1", "-1/4", "0/1", "1/8"},
          {"1/8", "0/1", "1/4", "0/1", "-3/8"},
          {"1/8", "0/1", "1/4", "0/1", "-3/8"}}},
        {"1111",
         {{"1/24", "-1/6", "1/4", "-1/6", "1/24"},
          {"1/24", "0/1", "-1/4", "1/3", "-1/8"},
          {"1/24", "0/1", "1/4", "-2/3", "3/8"},
          {"1/24", "0/1", "1/4", "1/3", "-5/8"},
          {"1/24", "0/1", "1/4", "1/3", "3/8"}}},
    };
    return tables;
}

// z = 0 row for x = 21221, y = 0..8.
inline const std::vector<const char*>& f_21221_z0() {
    static const std::vector<const char*> row = {"1/720", "-1/280", "0/1",   "1/180", "0/1",
                                                 "-1/120", "1/180",  "0/1",  "-1/1680"};
    return row;
}

} // namespace fixtures
