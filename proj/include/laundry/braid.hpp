#pragma once

#include <string>
#include <variant>
#include <vector>

namespace laundry {

// One crossing: generator index (the column between strands i and i+1) and
// the crossing sign, -1 for the inverse generator.
struct BraidLetter {
    int column = 1;
    int sign = 1;
    bool operator==(const BraidLetter&) const = default;
};

// A braid word on n strands, letters read bottom-to-top (height 1 first).
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;
    bool operator==(const BraidWord&) const = default;
};

// Braid word text format (bit-exact): "<n>: <signed letters>", e.g.
// "4: 3 -2 1 -2 1"; the empty word on n strands is "<n>:".
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& w);

// Number of components of the word's closure (cycles of the strand
// permutation).
int component_count(const BraidWord& w);

// A closed braid diagram: a word in canonical form under distant
// commutation, i.e. letters whose columns differ by at least two may be
// reordered freely. The canonical representative repeatedly emits, among
// letters whose not-yet-emitted predecessors all sit in distant columns,
// the one in the smallest column.
class ClosedBraidDiagram {
public:
    ClosedBraidDiagram() = default;
    explicit ClosedBraidDiagram(const BraidWord& w);

    const BraidWord& word() const { return word_; }
    int strands() const { return word_.strands; }
    int crossings() const { return (int)word_.letters.size(); }

    bool operator==(const ClosedBraidDiagram&) const = default;

private:
    BraidWord word_;
};

ClosedBraidDiagram b0_normal_form(const BraidWord& w);

// Diagram-level moves. Heights refer to positions in the canonical word,
// 1-based from the bottom.
struct R2Insert {
    int column = 1;
    int height = 1;
    int upper_sign = 1;  // the lower letter gets the opposite sign
};
struct R2Delete {
    int height = 1;  // height of the lower letter of the canceling pair
};
struct Stabilize {
    int sign = 1;
};
struct Destabilize {};
struct ConjugateRotate {};
struct R3 {
    int height = 1;      // height of the lowest letter of the pattern
    char direction = 'r';  // 'r': partner column is column+1, 'l': column-1
};

using BraidMoveSpec = std::variant<R2Insert, R2Delete, Stabilize, Destabilize, ConjugateRotate, R3>;

ClosedBraidDiagram apply_braid_move(const ClosedBraidDiagram& d, const BraidMoveSpec& move);

std::string describe(const BraidMoveSpec& move);

}  // namespace laundry
