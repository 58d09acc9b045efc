#include "gwa/reference_table.hpp"

#include <algorithm>

namespace gwa {

  std::vector<ReferenceRow> const& reference_rows() {
    // Published values, transcribed as printed (including the row name
    // "C16" at [18,2]).  Histograms are (key, count) pairs.
    static std::vector<ReferenceRow> const rows = {
        {{1, 1}, "I", 1, 1, 1, {{1, 1}}, {{0, 1}}},
        {{2, 1}, "C2", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{3, 1}, "C3", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{4, 1}, "C4", 2, 2, 2, {{3, 2}}, {{1, 1}, {2, 1}}},
        {{4, 2}, "C2xC2", 10, 3, 2, {{3, 2}, {5, 1}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{5, 1}, "C5", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{6, 1}, "S3", 10, 5, 3, {{3, 5}}, {{0, 5}}},
        {{6, 2}, "C6", 2, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{7, 1}, "C7", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{8, 1}, "C8", 4, 4, 4, {{4, 4}}, {{0, 2}, {1, 1}, {2, 1}}},
        {{8, 2}, "C4xC2", 32, 15, 11, {{4, 2}, {5, 2}, {6, 9}, {8, 2}}, {{0, 4}, {1, 1}, {2, 10}}},
        {{8, 3}, "D8", 36, 16, 11, {{4, 6}, {6, 10}}, {{0, 6}, {2, 10}}},
        {{8, 4}, "Q8", 52, 10, 7, {{4, 4}, {6, 6}}, {{0, 4}, {2, 6}}},
        {{8, 5}, "C2xC2xC2", 736, 14, 6, {{3, 1}, {4, 2}, {5, 1}, {6, 7}, {7, 1}, {8, 1}, {16, 1}}, {{0, 8}, {1, 1}, {2, 5}}},
        {{9, 1}, "C9", 3, 2, 2, {{3, 2}}, {{1, 1}, {2, 1}}},
        {{9, 2}, "C3xC3", 33, 3, 2, {{3, 2}, {6, 1}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{10, 1}, "D10", 26, 7, 3, {{3, 7}}, {{0, 7}}},
        {{10, 2}, "C10", 2, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{11, 1}, "C11", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{12, 1}, "C3:C4", 20, 10, 6, {{5, 10}}, {{0, 10}}},
        {{12, 2}, "C12", 4, 4, 4, {{5, 2}, {6, 2}}, {{0, 2}, {1, 1}, {2, 1}}},
        {{12, 3}, "A4", 33, 8, 4, {{3, 8}}, {{0, 8}}},
        {{12, 4}, "D12", 64, 19, 7, {{4, 3}, {5, 10}, {6, 1}, {7, 5}}, {{0, 19}}},
        {{12, 5}, "C6xC2", 48, 11, 5, {{2, 1}, {3, 1}, {4, 3}, {5, 2}, {6, 2}, {7, 1}, {10, 1}}, {{0, 9}, {1, 1}, {2, 1}}},
        {{13, 1}, "C13", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{14, 1}, "D14", 50, 9, 3, {{3, 9}}, {{0, 9}}},
        {{14, 2}, "C14", 2, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{15, 1}, "C15", 1, 1, 1, {{4, 1}}, {{1, 1}}},
        {{16, 1}, "C16", 8, 6, 5, {{5, 6}}, {{0, 3}, {1, 1}, {2, 2}}},
        {{16, 2}, "C4xC4", 832, 73, 54, {{4, 4}, {5, 7}, {6, 6}, {7, 4}, {9, 33}, {11, 16}, {13, 2}, {15, 1}}, {{0, 20}, {1, 1}, {2, 52}}},
        {{16, 3}, "(C4xC2):C2", 640, 168, 138, {{4, 12}, {5, 9}, {6, 6}, {7, 5}, {9, 116}, {11, 20}}, {{0, 32}, {2, 136}}},
        {{16, 4}, "C4:C4", 448, 161, 138, {{5, 3}, {6, 8}, {7, 8}, {8, 4}, {9, 118}, {11, 20}}, {{0, 25}, {2, 136}}},
        {{16, 5}, "C8xC2", 128, 56, 40, {{5, 4}, {6, 4}, {7, 26}, {9, 18}, {11, 4}}, {{0, 44}, {1, 1}, {2, 11}}},
        {{16, 6}, "C8:C2", 128, 56, 40, {{5, 4}, {6, 8}, {7, 24}, {9, 20}}, {{0, 46}, {2, 10}}},
        {{16, 7}, "D16", 256, 63, 45, {{5, 13}, {7, 50}}, {{0, 63}}},
        {{16, 8}, "QD16", 144, 88, 80, {{7, 88}}, {{0, 88}}},
        {{16, 9}, "Q16", 192, 57, 45, {{5, 7}, {7, 50}}, {{0, 57}}},
        {{16, 10}, "C4xC2xC2", 14912, 404, 105, {{4, 7}, {5, 10}, {6, 6}, {7, 129}, {8, 92}, {9, 75}, {10, 11}, {11, 31}, {13, 4}, {17, 28}, {19, 9}, {27, 2}}, {{0, 300}, {1, 1}, {2, 103}}},
        {{16, 11}, "C2xD8", 7744, 578, 166, {{4, 14}, {5, 25}, {6, 16}, {7, 157}, {8, 149}, {9, 113}, {10, 2}, {11, 16}, {17, 76}, {19, 10}}, {{0, 426}, {2, 152}}},
        {{16, 12}, "C2xQ8", 9536, 275, 80, {{4, 4}, {5, 14}, {6, 14}, {7, 67}, {8, 77}, {9, 51}, {10, 2}, {11, 8}, {17, 32}, {19, 6}}, {{0, 209}, {2, 66}}},
        {{16, 13}, "(C4xC2):C2", 1856, 232, 128, {{7, 40}, {8, 64}, {9, 24}, {17, 104}}, {{0, 128}, {2, 104}}},
        {{17, 1}, "C17", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{18, 1}, "D18", 82, 14, 3, {{4, 14}}, {{0, 14}}},
        {{18, 2}, "C16", 6, 4, 3, {{4, 2}, {6, 2}}, {{0, 2}, {1, 1}, {2, 1}}},
        {{18, 3}, "C3xS3", 24, 12, 7, {{4, 1}, {5, 6}, {6, 5}}, {{0, 12}}},
        {{18, 4}, "(C3xC3):C2", 4510, 41, 6, {{3, 4}, {4, 23}, {5, 9}, {7, 5}}, {{0, 41}}},
        {{18, 5}, "C6xC3", 78, 7, 4, {{4, 2}, {6, 3}, {7, 1}, {12, 1}}, {{0, 5}, {1, 1}, {2, 1}}},
        {{19, 1}, "C19", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{20, 1}, "Q20", 72, 16, 7, {{4, 2}, {5, 14}}, {{0, 16}}},
        {{20, 2}, "C20", 8, 6, 5, {{4, 2}, {5, 2}, {6, 2}}, {{0, 4}, {1, 1}, {2, 1}}},
        {{20, 3}, "C5:C4", 36, 9, 5, {{4, 9}}, {{0, 9}}},
        {{20, 4}, "D20", 144, 25, 7, {{4, 3}, {5, 14}, {6, 1}, {7, 7}}, {{0, 25}}},
        {{20, 5}, "C10xC2", 40, 9, 4, {{4, 3}, {5, 2}, {6, 2}, {7, 1}, {10, 1}}, {{0, 7}, {1, 1}, {2, 1}}},
        {{21, 1}, "C7:C3", 57, 10, 4, {{3, 10}}, {{0, 10}}},
        {{21, 2}, "C21", 3, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{22, 1}, "D22", 122, 13, 3, {{3, 13}}, {{0, 13}}},
        {{22, 2}, "C22", 2, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{23, 1}, "C23", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{24, 1}, "C3:C8", 40, 20, 12, {{7, 20}}, {{0, 20}}},
        {{24, 2}, "C24", 8, 8, 8, {{7, 4}, {8, 4}}, {{0, 6}, {1, 1}, {2, 1}}},
        {{24, 3}, "SL(2,3)", 33, 8, 2, {{4, 8}}, {{0, 8}}},
        {{24, 4}, "C3:Q8", 448, 92, 49, {{6, 6}, {7, 20}, {8, 16}, {9, 50}}, {{0, 92}}},
        {{24, 5}, "C4xS3", 256, 112, 80, {{8, 28}, {9, 70}, {10, 4}, {11, 10}}, {{0, 112}}},
        {{24, 6}, "D24", 576, 106, 49, {{6, 10}, {7, 30}, {8, 16}, {9, 50}}, {{0, 106}}},
        {{24, 7}, "C2x(C3:C4)", 512, 98, 49, {{6, 2}, {7, 14}, {8, 15}, {9, 50}, {10, 2}, {11, 5}, {13, 10}}, {{0, 98}}},
        {{24, 8}, "(C6xC2):C2", 256, 112, 80, {{8, 32}, {9, 80}}, {{0, 112}}},
        {{24, 9}, "C12xC2", 128, 53, 38, {{6, 2}, {7, 6}, {8, 3}, {9, 24}, {10, 2}, {11, 3}, {12, 9}, {13, 2}, {16, 2}}, {{0, 42}, {1, 1}, {2, 10}}},
        {{24, 10}, "C3xD8", 144, 58, 38, {{6, 10}, {7, 6}, {8, 6}, {9, 26}, {12, 10}}, {{0, 48}, {2, 10}}},
        {{24, 11}, "C3xQ8", 240, 32, 18, {{3, 1}, {4, 1}, {6, 6}, {7, 4}, {8, 4}, {9, 10}, {12, 6}}, {{0, 26}, {2, 6}}},
        {{24, 12}, "S4", 58, 11, 4, {{4, 11}}, {{0, 11}}},
        {{24, 13}, "C2xA4", 42, 10, 6, {{4, 1}, {5, 1}, {6, 8}}, {{0, 10}}},
        {{24, 14}, "C2xC2xS3", 7168, 196, 46, {{3, 4}, {4, 7}, {5, 8}, {6, 4}, {7, 39}, {8, 28}, {9, 71}, {10, 9}, {11, 15}, {13, 5}, {18, 1}, {21, 5}}, {{0, 196}}},
        {{24, 15}, "C6xC2xC2", 6636, 69, 17, {{3, 1}, {4, 4}, {5, 4}, {6, 6}, {7, 16}, {8, 5}, {9, 15}, {10, 3}, {11, 3}, {12, 7}, {13, 1}, {14, 1}, {16, 1}, {21, 1}, {32, 1}}, {{0, 63}, {1, 1}, {2, 5}}},
        {{25, 1}, "C25", 5, 2, 2, {{3, 2}}, {{1, 1}, {2, 1}}},
        {{25, 2}, "C5xC5", 145, 3, 2, {{3, 2}, {8, 1}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{26, 1}, "D26", 170, 15, 3, {{3, 15}}, {{0, 15}}},
        {{26, 2}, "C26", 2, 2, 2, {{3, 1}, {4, 1}}, {{0, 1}, {1, 1}}},
        {{27, 1}, "C27", 9, 3, 2, {{4, 3}}, {{0, 1}, {1, 1}, {2, 1}}},
        {{27, 2}, "C9xC3", 297, 31, 16, {{4, 14}, {5, 3}, {7, 12}, {10, 2}}, {{0, 17}, {1, 1}, {2, 13}}},
        {{27, 3}, "(C3xC3):C3", 2673, 35, 15, {{4, 23}, {7, 12}}, {{0, 23}, {2, 12}}},
        {{27, 4}, "C9:C3", 297, 48, 27, {{4, 27}, {7, 21}}, {{0, 27}, {2, 21}}},
        {{28, 1}, "C7:C4", 100, 18, 6, {{5, 18}}, {{0, 18}}},
        {{28, 2}, "C28", 4, 4, 4, {{5, 2}, {6, 2}}, {{0, 2}, {1, 1}, {2, 1}}},
        {{28, 3}, "D28", 256, 31, 7, {{4, 3}, {5, 18}, {6, 1}, {7, 9}}, {{0, 31}}},
        {{28, 4}, "C14xC2", 40, 9, 4, {{4, 3}, {5, 2}, {6, 2}, {7, 1}, {10, 1}}, {{0, 7}, {1, 1}, {2, 1}}},
        {{29, 1}, "C29", 1, 1, 1, {{2, 1}}, {{1, 1}}},
        {{30, 1}, "C5xS3", 20, 10, 6, {{5, 5}, {6, 5}}, {{0, 10}}},
        {{30, 2}, "C3xD10", 52, 14, 6, {{5, 7}, {6, 7}}, {{0, 14}}},
        {{30, 3}, "D30", 260, 35, 9, {{5, 35}}, {{0, 35}}},
        {{30, 4}, "C30", 4, 4, 4, {{5, 1}, {6, 2}, {8, 1}}, {{0, 3}, {1, 1}}},
        {{31, 1}, "C31", 1, 1, 1, {{2, 1}}, {{1, 1}}},
    };
    return rows;
  }

  std::optional<ReferenceRow> reference_row(GapId id) {
    auto const& rows = reference_rows();
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](ReferenceRow const& r) { return r.id == id; });
    if (it == rows.end()) {
      return std::nullopt;
    }
    return *it;
  }

}  // namespace gwa
