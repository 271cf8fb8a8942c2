#pragma once

#include <vector>

#include "dlt/geometry.hpp"

namespace dlt {

// Reference triangles with exactly known bilinear dot products, edge
// self-products and areas. The vertices have small Gaussian-integer
// coordinates, so every expected value below is exact in double precision.
struct TriangleExample {
    int id;
    FormalVector a, b, c;
    Complex dot_ab_ac;      // <AB, AC>, also (|AB|^2 + |AC|^2 - |BC|^2)/2
    Complex dot_ac_bc;      // <AC, BC>, also (|AC|^2 + |BC|^2 - |AB|^2)/2
    Complex ab_sq, ac_sq, bc_sq;
    Complex four_area_sq;   // (2 * area)^2; area = (1/2) principal sqrt of this
};

inline const std::vector<TriangleExample>& triangle_examples() {
    static const std::vector<TriangleExample> examples = {
        {1,
         {{1.0, 1.0}, {3.0, 0.0}},
         {{0.0, -1.0}, {0.0, 2.0}},
         {{1.0, 0.0}, {0.0, -1.0}},
         {9.0, -2.0},
         {-2.0, 8.0},
         {2.0, -8.0},
         {7.0, 6.0},
         {-9.0, 2.0},
         {-15.0, -8.0}},
        {2,
         {{1.0, 1.0}, {1.0, -1.0}, {0.0, 2.0}},
         {{1.0, -1.0}, {1.0, 1.0}, {0.0, -2.0}},
         {{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}},
         {-8.0, -2.0},
         {6.0, 0.0},
         {-24.0, 0.0},
         {-2.0, -2.0},
         {-10.0, 2.0},
         {-12.0, 16.0}},
        {3,
         {{0.0, 8.0}, {14.0, 0.0}, {8.0, -1.0}, {1.0, 0.0}},
         {{6.0, 0.0}, {0.0, 15.0}, {17.0, 0.0}, {-8.0, 0.0}},
         {{3.0, -1.0}, {10.0, 7.0}, {11.0, 0.0}, {0.0, 3.0}},
         {-68.0, -251.0},
         {-37.0, 141.0},
         {104.0, -498.0},
         {-105.0, -110.0},
         {135.0, -106.0},
         {-7323.0, 6714.0}},
    };
    return examples;
}

}  // namespace dlt
