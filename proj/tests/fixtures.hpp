#pragma once

// Shared fixtures: the worked examples used across the unit and acceptance
// suites. Entries are written out longhand so the tests do not depend on the
// code paths they are meant to check.

#include "farey/exact.hpp"
#include "farey/farey_graph.hpp"
#include "farey/friezes.hpp"
#include "farey/hypertilings.hpp"
#include "farey/tilings.hpp"

namespace fixtures {

using farey::FareyPath;
using farey::FareyVertex;
using farey::Frieze;
using farey::Hypertiling;
using farey::Int;
using farey::Tiling;

// 7x7 tame 9-tiling with parameters (1, 3, 1, 3), indices [-3,3]^2.
inline Tiling tame9() {
    const long long rows[7][7] = {
        {67, 144, 29, 30, 11, 36, 13},  //
        {46, 99, 20, 21, 8, 27, 10},    //
        {25, 54, 11, 12, 5, 18, 7},     //
        {4, 9, 2, 3, 2, 9, 4},          //
        {7, 18, 5, 12, 11, 54, 25},     //
        {10, 27, 8, 21, 20, 99, 46},    //
        {13, 36, 11, 30, 29, 144, 67},
    };
    Tiling t(-3, -3, 7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) t.at(i - 3, j - 3) = rows[i][j];
    return t;
}

// The level-1 and level-3 paths whose pairing produces tame9() with K=1, L=3.
inline FareyPath path_w1() {
    return {1, -3, {{10, -3}, {7, -2}, {4, -1}, {1, 0}, {4, 1}, {7, 2}, {10, 3}}};
}
inline FareyPath path_w3() {
    return {3, -3, {{3, 4}, {6, 9}, {1, 2}, {0, 3}, {-1, 2}, {-6, 9}, {-3, 4}}};
}

// Closed clockwise path of length 7 in F_2; its width-7 frieze over (1/2)Z.
inline FareyPath closed_path_w7() {
    return {2, 0, {{1, 0}, {3, 2}, {2, 2}, {0, 1}, {-2, 3}, {-2, 2}, {-3, 2}, {-1, 0}}};
}

inline Frieze frieze_w7() {
    Frieze f;
    f.width = 7;
    f.denom = 2;
    f.gcd_k = 1;
    const long long rows[8][7] = {
        {0, 0, 0, 0, 0, 0, 0},        //
        {2, 2, 2, 2, 2, 2, 2},        //
        {2, 3, 10, 2, 5, 2, 12},      //
        {1, 13, 8, 3, 3, 10, 10},     //
        {3, 10, 10, 1, 13, 8, 3},     //
        {2, 12, 2, 3, 10, 2, 5},      //
        {2, 2, 2, 2, 2, 2, 2},        //
        {0, 0, 0, 0, 0, 0, 0},
    };
    for (int d = 0; d <= 7; ++d) {
        f.rows.emplace_back();
        for (int j = 0; j < 7; ++j) f.rows.back().push_back(rows[d][j]);
    }
    return f;
}

// Weighted decagon: products d_i w_{i-1} w_i all equal 2.
inline farey::WeightedPolygon decagon() {
    farey::WeightedPolygon wp;
    wp.poly.m = 10;
    wp.poly.diagonals = {{1, 9}, {1, 8}, {2, 8}, {2, 5}, {5, 8}, {5, 7}, {3, 5}};
    wp.marked = {{0, 1}, {1, 2}, {2, 1}, {4, 1}, {5, 2}, {6, 1}, {8, 1}};
    return wp;
}

// 5x5x5 tame 1-hypertiling, indices [-2,2]^3; layers along axis 0.
inline Hypertiling hyper555() {
    const long long layers[5][5][5] = {
        {{4, 11, 7, 10, 13},
         {5, 14, 9, 13, 17},
         {1, 3, 2, 3, 4},
         {2, 7, 5, 8, 11},
         {1, 4, 3, 5, 7}},
        {{10, 28, 18, 26, 34},
         {13, 37, 24, 35, 46},
         {3, 9, 6, 9, 12},
         {8, 26, 18, 28, 38},
         {5, 17, 12, 19, 26}},
        {{16, 45, 29, 42, 55},
         {21, 60, 39, 57, 75},
         {5, 15, 10, 15, 20},
         {14, 45, 31, 48, 65},
         {9, 30, 21, 33, 45}},
        {{6, 17, 11, 16, 21},
         {8, 23, 15, 22, 29},
         {2, 6, 4, 6, 8},
         {6, 19, 13, 20, 27},
         {4, 13, 9, 14, 19}},
        {{14, 40, 26, 38, 50},
         {19, 55, 36, 53, 70},
         {5, 15, 10, 15, 20},
         {16, 50, 34, 52, 70},
         {11, 35, 24, 37, 50}},
    };
    Hypertiling h({-2, -2, -2}, {5, 5, 5});
    for (int l = 0; l < 5; ++l)
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) h.at(l - 2, r - 2, c - 2) = layers[l][r][c];
    return h;
}

// The three level-1 paths generating hyper555() with the identity cube:
// rows, columns, layers.
inline FareyPath hyper_rows() {
    return {1, -2, {{1, 2}, {1, 3}, {0, 1}, {-1, 4}, {-1, 3}}};
}
inline FareyPath hyper_cols() {
    return {1, -2, {{2, 1}, {5, 3}, {3, 2}, {4, 3}, {5, 4}}};
}
inline FareyPath hyper_layers() {
    return {1, -2, {{1, 1}, {2, 3}, {3, 5}, {1, 2}, {2, 5}}};
}

// 3x3x3 hypertiling whose cross sections are all tame but which fails the
// synchronisation identity (witness stack (8,-1; 1,-1; 4,-7)).
inline Hypertiling hyper_unsync() {
    const long long layers[3][3][3] = {
        {{0, -1, 0}, {8, 0, -8}, {0, 1, 0}},
        {{0, -1, 0}, {1, 0, -1}, {0, 1, 0}},
        {{0, -7, 0}, {4, 0, -4}, {0, 7, 0}},
    };
    Hypertiling h({-1, -1, -1}, {3, 3, 3});
    for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) h.at(l - 1, r - 1, c - 1) = layers[l][r][c];
    return h;
}

// 6x6x3 window of the odd-index Fibonacci hypertiling, F_{2(x0+x1+x2)-1},
// with axis ranges [0,2] x [-4,1] x [0,5].
inline Hypertiling fib_window() {
    const long long layers[3][6][6] = {
        {{34, 13, 5, 2, 1, 1},
         {13, 5, 2, 1, 1, 2},
         {5, 2, 1, 1, 2, 5},
         {2, 1, 1, 2, 5, 13},
         {1, 1, 2, 5, 13, 34},
         {1, 2, 5, 13, 34, 89}},
        {{13, 5, 2, 1, 1, 2},
         {5, 2, 1, 1, 2, 5},
         {2, 1, 1, 2, 5, 13},
         {1, 1, 2, 5, 13, 34},
         {1, 2, 5, 13, 34, 89},
         {2, 5, 13, 34, 89, 233}},
        {{5, 2, 1, 1, 2, 5},
         {2, 1, 1, 2, 5, 13},
         {1, 1, 2, 5, 13, 34},
         {1, 2, 5, 13, 34, 89},
         {2, 5, 13, 34, 89, 233},
         {5, 13, 34, 89, 233, 610}},
    };
    Hypertiling h({0, -4, 0}, {3, 6, 6});
    for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) h.at(l, r - 4, c) = layers[l][r][c];
    return h;
}

// The hyperdeterminant-5 cube generating the Fibonacci hypertiling from
// three copies of the path F_{2t-1}/F_{2t+1}.
inline farey::BhargavaCube fib_cube() {
    farey::BhargavaCube c;
    c.at(0, 0, 0) = 3;
    c.at(0, 0, 1) = -1;
    c.at(0, 1, 0) = -1;
    c.at(1, 0, 0) = -1;
    c.at(1, 1, 1) = 1;
    return c;
}

inline FareyPath fib_path(std::int64_t base, std::size_t len) {
    FareyPath p{1, base, {}};
    for (std::size_t t = 0; t < len; ++t) {
        std::int64_t idx = base + static_cast<std::int64_t>(t);
        p.v.push_back({farey::fibonacci(2 * idx - 1), farey::fibonacci(2 * idx + 1)});
    }
    return p;
}

}  // namespace fixtures
