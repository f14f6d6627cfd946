#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qweb {

struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p); // throws unless strictly decreasing positive
    static StrictPartition parse(std::string_view s); // "4,3,1" or ""

    int size() const;
    int length() const { return int(parts.size()); }
    int delta() const { return length() % 2; }
    int operator[](int i) const { return i < length() ? parts[i] : 0; } // 0-based
    bool contains(const StrictPartition& inner) const;
    std::string str() const;
    friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts == b.parts; }
    friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.parts < b.parts; }
};

std::vector<StrictPartition> strict_partitions(int k);
StrictPartition staircase(int n); // (n+1, n, ..., 1), n >= 1

struct CanonicalFilling {
    std::vector<std::vector<int>> rows; // numbers 1..k
    std::vector<int> col;               // col[i-1] = column of box i (shifted)
};
CanonicalFilling canonical_filling(const StrictPartition& la);

// 1' < 1 < 2' < 2 < ...
struct MarkedLetter {
    int value = 1;
    bool marked = false;
    int rank() const { return 2 * value - (marked ? 1 : 0); }
    std::string str() const { return std::to_string(value) + (marked ? "'" : ""); }
    friend bool operator==(const MarkedLetter& a, const MarkedLetter& b) {
        return a.value == b.value && a.marked == b.marked;
    }
};

using Word = std::vector<MarkedLetter>;
Word parse_word(std::string_view s); // "1 2 1' 2'" or "121'2'"
std::string format_word(const Word& w);

struct ShiftedShape {
    StrictPartition outer, inner;
    // first column (1-based) of skew row r (1-based); rows are shifted by r-1
    int row_start(int r) const { return r + inner[r - 1]; }
    int row_end(int r) const { return r + outer[r - 1] - 1; }
    int rows() const { return outer.length(); }
    int cells() const { return outer.size() - inner.size(); }
};

struct ShiftedTableau {
    ShiftedShape shape;
    std::vector<std::vector<MarkedLetter>> rows; // rows[r-1] covers columns row_start..row_end

    bool has(int r, int c) const;
    const MarkedLetter& at(int r, int c) const;
    std::string str() const; // "1',1,1 / 1',2' / ..."
};

bool is_valid_tableau(const ShiftedTableau& t);
Word reading_word(const ShiftedTableau& t); // bottom row first, rows left to right
std::vector<int> content(const ShiftedTableau& t);

bool lattice_property(const Word& w);
bool leftmost_unmarked(const Word& w); // condition (b)
bool is_lr_tableau(const ShiftedTableau& t);

long long lr_coefficient(const StrictPartition& la, const StrictPartition& nu, const StrictPartition& mu);

ShiftedTableau staircase_tableau(const StrictPartition& mu, int n);

using Poly = std::map<std::vector<int>, long long>; // exponent vector -> coefficient
Poly schur_p(const StrictPartition& la, int m);
Poly poly_mul(const Poly& a, const Poly& b);
// Expand a symmetric polynomial in the P basis. Throws if it is not in their span.
std::map<StrictPartition, long long> expand_in_p(Poly f, int m);

struct Prop714Result {
    StrictPartition mu;
    int n;
    bool ok;
    std::string detail;
};
std::vector<Prop714Result> verify_prop_714(int n, int bound);

} // namespace qweb
