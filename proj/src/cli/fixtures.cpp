#include "eve/cli/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "eve/cli/matrix_io.hpp"

namespace eve::cli {

namespace {

constexpr std::array kFixtures = {
    Fixture{"Ma", "binary, half of each class correct", "15,25\n15,25\n"},
    Fixture{"Mb", "binary, 90% correct, balanced", "45,5\n5,45\n"},
    Fixture{"Mc", "binary, 10% correct, balanced", "5,45\n45,5\n"},
    Fixture{"M1", "balanced diagnostic test, 300 individuals", "125,30\n15,130\n"},
    Fixture{"M2", "imbalanced diagnostic test, 300 individuals", "9,80\n1,210\n"},
    Fixture{"M3", "SVM on breast cancer data, 683 instances", "434,7\n10,232\n"},
    Fixture{"M4", "iris: one separated class, two overlapping", "50,0,0\n0,35,7\n0,15,43\n"},
    Fixture{"M5", "three classes, large off-diagonal mass", "48,28,19\n5,42,23\n14,9,44\n"},
    Fixture{"M6", "forest images, five classes",
            "17,2,0,0,0\n"
            "28,127,0,0,0\n"
            "16,0,122,6,0\n"
            "6,0,4,3,0\n"
            "0,0,0,0,127\n"},
    Fixture{"M7", "M6 with the class-4 diagonal moved off-diagonal",
            "17,2,0,0,0\n"
            "28,127,0,3,0\n"
            "16,0,122,6,0\n"
            "6,0,4,0,0\n"
            "0,0,0,0,127\n"},
    Fixture{"M8", "MNIST test set, LDA hard assignment",
            "939,0,17,5,1,23,17,5,14,17\n"
            "1,1106,58,17,21,16,9,40,52,11\n"
            "2,2,820,21,6,4,11,17,9,4\n"
            "3,2,26,887,1,90,0,8,30,16\n"
            "1,1,16,2,873,17,19,19,32,66\n"
            "11,1,0,12,5,616,18,1,44,0\n"
            "13,5,34,12,10,23,874,2,17,1\n"
            "1,2,17,24,1,15,0,872,11,74\n"
            "8,16,39,18,12,62,10,5,741,12\n"
            "1,0,5,12,52,26,0,59,24,808\n"},
    Fixture{"M9", "MNIST test set, LDA soft memberships",
            "358.72,28.22,77.91,78.47,43.83,87.26,76.82,61.75,65.44,48.65\n"
            "39.85,559.51,91.05,87.34,60.11,58.08,62.44,62.06,90.47,60.28\n"
            "73.24,82.13,304.03,92.69,59.87,49.34,88.77,81.59,75.25,53.07\n"
            "76.46,89.64,106.79,302.24,57.14,99.99,51.23,81.44,81.89,65.30\n"
            "49.64,45.77,64.79,55.22,318.28,66.97,86.53,64.93,81.98,141.22\n"
            "90.80,47.62,55.54,109.30,70.59,231.95,73.20,58.43,108.59,64.39\n"
            "86.12,57.39,92.38,55.86,82.26,67.64,336.46,47.78,69.91,61.94\n"
            "67.03,58.02,75.59,78.50,67.47,58.59,50.64,366.61,51.59,130.04\n"
            "78.81,104.32,98.75,83.29,85.08,111.45,66.51,59.52,272.41,83.02\n"
            "59.33,62.38,65.16,67.07,137.37,60.72,65.39,143.88,76.47,301.09\n"},
};

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

ConfusionMatrix fixture(std::string_view id) {
  for (const auto& f : kFixtures)
    if (f.id == id) return parse_matrix_csv(f.csv);
  throw std::out_of_range("unknown fixture '" + std::string(id) + "'");
}

}  // namespace eve::cli
