#include "agx/reference.hpp"

#include <array>

namespace agx {

namespace {

constexpr std::array<GraphCount, 22> kGraphCounts{{
    {1, 0, 1},
    {2, 1, 1},
    {3, 2, 1},
    {3, 3, 1},
    {4, 3, 3},
    {4, 4, 2},
    {4, 5, 1},
    {4, 6, 1},
    {5, 5, 6},
    {5, 6, 6},
    {5, 7, 4},
    {5, 8, 2},
    {5, 9, 1},
    {6, 5, 14},
    {6, 6, 20},
    {6, 7, 22},
    {6, 8, 20},
    {6, 9, 15},
    {7, 6, 38},
    {7, 8, 82},
    {8, 8, 188},
    {10, 9, 883},
}};

constexpr std::array<BoundGap, 22> kBoundGaps{{
    {1, 0, 0.2811},
    {2, 1, 0.5000},
    {3, 2, 0.5000},
    {3, 3, 0.5000},
    {4, 3, 0.3170},
    {4, 4, 0.4254},
    {4, 5, 0.4175},
    {4, 6, 0.2811},
    {5, 5, 0.1598},
    {5, 6, 0.1984},
    {5, 7, 0.1360},
    {5, 8, 0.1183},
    {5, 9, 0.0591},
    {6, 5, 0.2500},
    {6, 6, 0.2537},
    {6, 7, 0.0384},
    {6, 8, 0.0799},
    {6, 9, 0.0976},
    {7, 6, 0.2113},
    {7, 8, 0.1360},
    {8, 8, 0.0384},
    {10, 9, 0.1057},
}};

constexpr std::array<ExtremalCell, 123> kExtremalCells{{
    {1, 0, 1, 0},
    {2, 1, 1, 0},
    {3, 2, 1, 0},
    {3, 3, 1, 0}, {4, 3, 1, 0},
    {4, 4, 1, 0}, {5, 4, 1, 0},
    {4, 5, 1, 0}, {5, 5, 1, 0}, {6, 5, 1, 0},
    {4, 6, 1, 0}, {5, 6, 1, 0}, {6, 6, 1, 0}, {7, 6, 1, 0},
    {5, 7, 1, 0}, {6, 7, 1, 0}, {7, 7, 1, 0}, {8, 7, 1, 0},
    {5, 8, 1, 0}, {6, 8, 1, 0}, {7, 8, 1, 0}, {8, 8, 1, 0}, {9, 8, 1, 0},
    {5, 9, 1, 0}, {6, 9, 1, 0}, {7, 9, 1, 0}, {8, 9, 1, 0}, {9, 9, 1, 0}, {10, 9, 1, 0},
    {5, 10, 1, 0}, {6, 10, 1, 0}, {7, 10, 1, 0}, {8, 10, 1, 0}, {9, 10, 1, 0}, {10, 10, 2, 0}, {11, 10, 1, 0},
    {6, 11, 1, 0}, {7, 11, 1, 0}, {8, 11, 2, 0}, {9, 11, 3, 0}, {10, 11, 1, 0}, {11, 11, 1, 0}, {12, 11, 1, 1},
    {6, 12, 1, 0}, {7, 12, 2, 0}, {8, 12, 4, 0}, {9, 12, 2, 0}, {10, 12, 4, 0}, {11, 12, 6, 0}, {12, 12, 2, 0}, {13, 12, 1, 0},
    {7, 13, 2, 0}, {8, 13, 3, 0}, {9, 13, 10, 0}, {10, 13, 12, 0}, {11, 13, 4, 0}, {12, 13, 5, 1}, {13, 13, 7, 1}, {14, 13, 2, 1},
    {7, 14, 2, 0}, {8, 14, 8, 0}, {9, 14, 17, 0}, {10, 14, 8, 1}, {11, 14, 21, 1}, {12, 14, 23, 1}, {13, 14, 5, 1}, {14, 14, 3, 1},
    {8, 15, 7, 0}, {9, 15, 9, 0}, {10, 15, 47, 0}, {11, 15, 58, 1}, {12, 15, 14, 1}, {13, 15, 27, 2}, {14, 15, 27, 3},
    {8, 16, 6, 0}, {9, 16, 37, 0}, {10, 16, 77, 0}, {11, 16, 31, 1}, {12, 16, 113, 2}, {13, 16, 111, 4}, {14, 16, 18, 2},
    {9, 17, 28, 0}, {10, 17, 35, 0}, {11, 17, 249, 0}, {12, 17, 303, 3}, {13, 17, 59, 4}, {14, 17, 159, 11},
    {9, 18, 16, 0}, {10, 18, 198, 0}, {11, 18, 399, 0}, {12, 18, 134, 2}, {13, 18, 684, 8}, {14, 18, 625, 20},
    {10, 19, 126, 0}, {11, 19, 154, 0}, {12, 19, 1550, 1}, {13, 19, 1786, 9}, {14, 19, 298, 11},
    {10, 20, 59, 1}, {11, 20, 1246, 1}, {12, 20, 2395, 1}, {13, 20, 707, 7}, {14, 20, 4620, 40},
    {11, 21, 719, 1}, {12, 21, 845, 1}, {13, 21, 10801, 4}, {14, 21, 11855, 36},
    {11, 22, 265, 1}, {12, 22, 8789, 3}, {13, 22, 16433, 6}, {14, 22, 4399, 20},
    {12, 23, 4721, 3}, {13, 23, 5440, 4}, {14, 23, 83399, 19},
    {12, 24, 1544, 3}, {13, 24, 68804, 12}, {14, 24, 125829, 28},
    {13, 25, 35678, 11}, {14, 25, 40399, 14},
    {13, 26, 10778, 8}, {14, 26, 590342, 55},
    {14, 27, 300361, 45},
    {14, 28, 88168, 25},
}};

}  // namespace

std::span<const GraphCount> reference_graph_counts() { return kGraphCounts; }
std::span<const BoundGap> reference_bound_gaps() { return kBoundGaps; }
std::span<const ExtremalCell> reference_extremal_counts() { return kExtremalCells; }

}  // namespace agx
