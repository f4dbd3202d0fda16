// Copyright 2026 The EGC Concierge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference recommendation tables for the two worked utterances.

#ifndef EGC_TESTS_REFERENCE_TABLES_HPP_
#define EGC_TESTS_REFERENCE_TABLES_HPP_

#include <array>
#include <string_view>

namespace egc_test {

struct Row {
  std::string_view word;
  double g1, g2, egc, rec;
};

inline constexpr std::string_view kSpotUtterance = "I am going to get to the Hiroshima castle.";
inline constexpr std::string_view kFoodUtterance = "I would like to eat a lunch.";

inline constexpr std::array<Row, 10> kSpotTable = {{
    {"gokuraku temple", 0.0958, 0.8020, 0.7071, 1.0735},
    {"battleship yamato", 0.7082, 5.1722e-4, 0.7071, 1.0008},
    {"the self defense forces", 0.7639, 2.9405e-4, 0.5830, 0.9610},
    {"miyajima", 0.3092, 7.9025e-4, 0.8602, 0.9141},
    {"itukushima shrine", 0.1335, 1.6933e-4, 0.8602, 0.8705},
    {"torii", 0.1251, 9.3482e-5, 0.8602, 0.8693},
    {"momijidani park", 0.2499, 7.5539e-5, 0.7071, 0.7500},
    {"rihga royal hotel hiroshima", 0.1705, 8.912e-5, 0.7071, 0.7274},
    {"view the scarlet maple leaves", 0.1207, 1.0161e-4, 0.7071, 0.7173},
    {"hiroshima peace memorial park", 0.1136, 0.0025, 0.7071, 0.7162},
}};

inline constexpr std::array<Row, 5> kFoodTable = {{
    {"okonomiyaki", 0.5563, 0.0070, 1.1912, 1.3115},
    {"fried oysters lunch", 0.2937, 7.3239e-5, 1.0488, 1.0892},
    {"conger", 0.2547, 7.6289e-5, 1.0488, 1.0793},
    {"oyster", 0.5022, 0.0022, 0.9273, 1.0546},
    {"local sake", 0.3622, 7.5449e-5, 0.9273, 0.9956},
}};

}  // namespace egc_test

#endif  // EGC_TESTS_REFERENCE_TABLES_HPP_
