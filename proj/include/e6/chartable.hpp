#pragma once

#include <array>
#include <string_view>

namespace e6 {

// Atlas class names, U4(2).2 convention. The first 15 classes lie in the
// rotation subgroup (determinant +1), the last 10 are outer.
inline constexpr std::array<std::string_view, 25> kClassNames = {
    "1a", "2a", "2b", "3a", "3b", "3c", "4a", "4b", "5a", "6a", "6b", "6c",
    "6d", "9a", "12a", "2c", "2d", "4c", "4d", "6e", "6f", "6g", "8a", "10a",
    "12b"};

// Character names; a trailing '~' marks the twist by the sign character 1~.
inline constexpr std::array<std::string_view, 25> kCharNames = {
    "1",   "1~",   "10",  "6",   "6~",  "20a", "15a", "15a~", "15b",
    "15b~", "20b", "20b~", "24",  "24~", "30",  "30~", "60a", "80",
    "90",  "60b",  "60b~", "64",  "64~", "81",  "81~"};

inline constexpr int kCharIdx1 = 0;
inline constexpr int kCharIdx1Bar = 1;
inline constexpr int kCharIdx6 = 3;
inline constexpr int kCharIdx15b = 8;
inline constexpr int kCharIdx20b = 10;
inline constexpr int kCharIdx24 = 12;

inline constexpr int kClassIdx1a = 0;
inline constexpr int kClassIdx2b = 2;
inline constexpr int kClassIdx3b = 4;
inline constexpr int kClassIdx2c = 15;

// Character table of W(E6), rows = kCharNames, columns = kClassNames.
inline constexpr std::array<std::array<int, 25>, 25> kCharTable = {{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
    {10, -6, 2, 1, -2, 4, 2, -2, 0, -3, 0, 0, 2, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {6, -2, 2, -3, 3, 0, 2, 0, 1, 1, 1, -2, -1, 0, -1, 4, 0, -2, 2, 1, -2, 0, 0, -1, 1},
    {6, -2, 2, -3, 3, 0, 2, 0, 1, 1, 1, -2, -1, 0, -1, -4, 0, 2, -2, -1, 2, 0, 0, 1, -1},
    {20, 4, -4, -7, 2, 2, 4, 0, 0, 1, -2, -2, 2, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {15, -1, -1, 6, 3, 0, 3, -1, 0, 2, -1, 2, -1, 0, 0, 5, -3, 1, 1, -1, 2, 0, -1, 0, 1},
    {15, -1, -1, 6, 3, 0, 3, -1, 0, 2, -1, 2, -1, 0, 0, -5, 3, -1, -1, 1, -2, 0, 1, 0, -1},
    {15, 7, 3, -3, 0, 3, -1, 1, 0, 1, -2, 1, 0, 0, -1, 5, 1, 3, -1, 2, -1, 1, -1, 0, 0},
    {15, 7, 3, -3, 0, 3, -1, 1, 0, 1, -2, 1, 0, 0, -1, -5, -1, -3, 1, -2, 1, -1, 1, 0, 0},
    {20, 4, 4, 2, 5, -1, 0, 0, 0, -2, 1, 1, 1, -1, 0, 10, 2, 2, 2, 1, 1, -1, 0, 0, -1},
    {20, 4, 4, 2, 5, -1, 0, 0, 0, -2, 1, 1, 1, -1, 0, -10, -2, -2, -2, -1, -1, 1, 0, 0, 1},
    {24, 8, 0, 6, 0, 3, 0, 0, -1, 2, 2, -1, 0, 0, 0, 4, 4, 0, 0, -2, 1, 1, 0, -1, 0},
    {24, 8, 0, 6, 0, 3, 0, 0, -1, 2, 2, -1, 0, 0, 0, -4, -4, 0, 0, 2, -1, -1, 0, 1, 0},
    {30, -10, 2, 3, 3, 3, -2, 0, 0, -1, -1, -1, -1, 0, 1, 10, -2, -4, 0, 1, 1, 1, 0, 0, -1},
    {30, -10, 2, 3, 3, 3, -2, 0, 0, -1, -1, -1, -1, 0, 1, -10, 2, 4, 0, -1, -1, -1, 0, 0, 1},
    {60, 12, 4, -3, -6, 0, 4, 0, 0, -3, 0, 0, -2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {80, -16, 0, -10, -4, 2, 0, 0, 0, 2, 2, 2, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {90, -6, -6, 9, 0, 0, 2, 2, 0, -3, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {60, -4, 4, 6, -3, -3, 0, 0, 0, 2, -1, -1, 1, 0, 0, 10, 2, -2, -2, 1, 1, -1, 0, 0, 1},
    {60, -4, 4, 6, -3, -3, 0, 0, 0, 2, -1, -1, 1, 0, 0, -10, -2, 2, 2, -1, -1, 1, 0, 0, -1},
    {64, 0, 0, -8, 4, -2, 0, 0, -1, 0, 0, 0, 0, 1, 0, 16, 0, 0, 0, -2, -2, 0, 0, 1, 0},
    {64, 0, 0, -8, 4, -2, 0, 0, -1, 0, 0, 0, 0, 1, 0, -16, 0, 0, 0, 2, 2, 0, 0, -1, 0},
    {81, 9, -3, 0, 0, 0, -3, -1, 1, 0, 0, 0, 0, 0, 0, 9, -3, 3, -1, 0, 0, 0, 1, -1, 0},
    {81, 9, -3, 0, 0, 0, -3, -1, 1, 0, 0, 0, 0, 0, 0, -9, 3, -3, 1, 0, 0, 0, -1, 1, 0},
}};

// Element order encoded in a class name ("12a" -> 12).
constexpr int class_order(std::string_view name) {
    int o = 0;
    for (char ch : name) {
        if (ch < '0' || ch > '9') break;
        o = o * 10 + (ch - '0');
    }
    return o;
}

}  // namespace e6
