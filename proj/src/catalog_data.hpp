#pragma once

#include <vector>

#include "symquot/partition.hpp"

namespace symquot::data {

extern const std::vector<std::vector<Point>> kM24;
extern const std::vector<std::vector<Point>> kM23;
extern const std::vector<std::vector<Point>> kM22;
extern const std::vector<std::vector<Point>> kAutM22;
extern const std::vector<std::vector<Point>> kM12;
extern const std::vector<std::vector<Point>> kM11on11;
extern const std::vector<std::vector<Point>> kM11on12;

}  // namespace symquot::data
