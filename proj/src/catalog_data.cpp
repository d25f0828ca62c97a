// Mathieu group generators as image lists (0-indexed).
// M24, M12 and M11 (degree 11) use well-known published generators; M23 and M22 are
// point stabilizers in M24, relabelled for M22 onto the Witt design built in designs.cpp.
// M11 on 12 points acts on the Paley 3-(12,6,2) design from designs.cpp.
// The catalog revalidates all of this at load time.

#include "catalog_data.hpp"

namespace symquot::data {

const std::vector<std::vector<Point>> kM24 = {
    {3, 6, 16, 0, 12, 8, 1, 14, 5, 18, 17, 20, 4, 15, 7, 13, 2, 10, 9, 23, 11, 22, 21, 19},
    {3, 20, 8, 5, 17, 0, 6, 7, 14, 4, 10, 11, 16, 1, 2, 12, 15, 9, 23, 19, 13, 21, 18, 22},
};

const std::vector<std::vector<Point>> kM23 = {
    {16, 8, 5, 12, 11, 15, 20, 3, 2, 1, 13, 22, 0, 21, 18, 19, 9, 7, 10, 6, 17, 14, 4},
    {20, 6, 11, 3, 18, 4, 15, 7, 9, 10, 14, 1, 13, 5, 17, 16, 21, 0, 19, 22, 8, 2, 12},
};

const std::vector<std::vector<Point>> kM22 = {
    {13, 21, 4, 6, 20, 7, 10, 14, 5, 19, 12, 17, 16, 1, 0, 8, 18, 15, 9, 2, 3, 11},
    {12, 6, 3, 15, 21, 0, 14, 7, 1, 13, 16, 11, 19, 2, 20, 9, 4, 10, 5, 18, 8, 17},
};

const std::vector<std::vector<Point>> kAutM22 = {
    {13, 21, 4, 6, 20, 7, 10, 14, 5, 19, 12, 17, 16, 1, 0, 8, 18, 15, 9, 2, 3, 11},
    {12, 6, 3, 15, 21, 0, 14, 7, 1, 13, 16, 11, 19, 2, 20, 9, 4, 10, 5, 18, 8, 17},
    {10, 9, 5, 4, 6, 15, 7, 0, 18, 2, 14, 16, 12, 13, 21, 8, 19, 11, 20, 17, 1, 3},
};

const std::vector<std::vector<Point>> kM12 = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11},
    {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11},
    {11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0},
};

const std::vector<std::vector<Point>> kM11on11 = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0},
    {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7},
};

const std::vector<std::vector<Point>> kM11on12 = {
    {8, 2, 3, 5, 10, 1, 9, 11, 0, 6, 7, 4},
    {1, 5, 11, 7, 4, 8, 0, 3, 10, 2, 6, 9},
};

}  // namespace symquot::data
