#include "qweb/shifted.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qweb {

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("strict partition parts must be positive");
        if (i && parts[i] >= parts[i - 1]) throw std::invalid_argument("partition is not strict: " + str());
    }
}

StrictPartition StrictPartition::parse(std::string_view s) {
    std::vector<int> p;
    std::string cur;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
            if (!cur.empty()) p.push_back(std::stoi(cur));
            cur.clear();
        } else {
            throw std::invalid_argument("bad partition text: " + std::string(s));
        }
    }
    if (!cur.empty()) p.push_back(std::stoi(cur));
    return StrictPartition(std::move(p));
}

int StrictPartition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

bool StrictPartition::contains(const StrictPartition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts[i] > parts[i]) return false;
    return true;
}

std::string StrictPartition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<StrictPartition> strict_partitions(int k) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            StrictPartition p;
            p.parts = cur;
            out.push_back(p);
            return;
        }
        for (int x = std::min(rest, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x - 1);
            cur.pop_back();
        }
    };
    rec(k, k);
    std::sort(out.begin(), out.end());
    return out;
}

StrictPartition staircase(int n) {
    if (n < 1) throw std::invalid_argument("staircase partition needs n >= 1");
    std::vector<int> p;
    for (int x = n + 1; x >= 1; --x) p.push_back(x);
    return StrictPartition(p);
}

CanonicalFilling canonical_filling(const StrictPartition& la) {
    CanonicalFilling f;
    int next = 1;
    for (int r = 0; r < la.length(); ++r) {
        std::vector<int> row;
        for (int t = 0; t < la.parts[r]; ++t) {
            row.push_back(next++);
            f.col.push_back(r + 1 + t);
        }
        f.rows.push_back(row);
    }
    return f;
}

Word parse_word(std::string_view s) {
    Word w;
    std::size_t p = 0;
    while (p < s.size()) {
        char ch = s[p];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++p;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad letter in word");
        // letters are single digits when written without separators
        MarkedLetter l;
        l.value = ch - '0';
        ++p;
        if (p < s.size() && s[p] == '\'') {
            l.marked = true;
            ++p;
        }
        if (l.value == 0) throw std::invalid_argument("letter 0 in word");
        w.push_back(l);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (const auto& l : w) s += l.str();
    return s;
}

bool ShiftedTableau::has(int r, int c) const {
    if (r < 1 || r > shape.rows()) return false;
    return c >= shape.row_start(r) && c <= shape.row_end(r);
}

const MarkedLetter& ShiftedTableau::at(int r, int c) const { return rows[r - 1][c - shape.row_start(r)]; }

std::string ShiftedTableau::str() const {
    std::string s;
    bool first_row = true;
    for (const auto& row : rows) {
        if (row.empty()) continue;
        if (!first_row) s += " / ";
        first_row = false;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ",";
            s += row[i].str();
        }
    }
    return s;
}

bool is_valid_tableau(const ShiftedTableau& t) {
    const auto& sh = t.shape;
    if (!sh.outer.contains(sh.inner)) return false;
    for (int r = 1; r <= sh.rows(); ++r) {
        int len = std::max(0, sh.row_end(r) - sh.row_start(r) + 1);
        if (int(t.rows[r - 1].size()) != len) return false;
        for (int c = sh.row_start(r); c <= sh.row_end(r); ++c) {
            const auto& x = t.at(r, c);
            if (t.has(r, c + 1)) {
                const auto& y = t.at(r, c + 1);
                if (y.rank() < x.rank()) return false;
                if (x.marked && x == y) return false;
            }
            if (t.has(r + 1, c)) {
                const auto& y = t.at(r + 1, c);
                if (y.rank() < x.rank()) return false;
                if (!x.marked && x == y) return false;
            }
        }
    }
    return true;
}

Word reading_word(const ShiftedTableau& t) {
    Word w;
    for (int r = t.shape.rows(); r >= 1; --r)
        for (const auto& l : t.rows[r - 1]) w.push_back(l);
    return w;
}

std::vector<int> content(const ShiftedTableau& t) {
    std::vector<int> c;
    for (const auto& row : t.rows)
        for (const auto& l : row) {
            if (int(c.size()) < l.value) c.resize(l.value, 0);
            ++c[l.value - 1];
        }
    return c;
}

bool lattice_property(const Word& w) {
    const int N = int(w.size());
    int maxv = 0;
    for (const auto& l : w) maxv = std::max(maxv, l.value);
    // letter at 1-based position p
    auto W = [&](int p) -> const MarkedLetter& { return w[p - 1]; };
    for (int i = 2; i <= maxv; ++i) {
        // m_i(j), m_{i-1}(j) for j = 0 .. 2N-1, built incrementally
        int mi = 0, mp = 0;
        for (int j = 0; j < 2 * N; ++j) {
            if (j >= 1 && j <= N) {
                const auto& l = W(N - j + 1);
                if (!l.marked && l.value == i) ++mi;
                if (!l.marked && l.value == i - 1) ++mp;
            } else if (j > N) {
                const auto& l = W(j - N);
                if (l.marked && l.value == i) ++mi;
                if (l.marked && l.value == i - 1) ++mp;
            }
            if (mi != mp) continue;
            if (j < N) {
                const auto& l = W(N - j);
                if (l.value == i) return false; // i or i'
            } else {
                const auto& l = W(j - N + 1);
                if ((!l.marked && l.value == i - 1) || (l.marked && l.value == i)) return false;
            }
        }
    }
    return true;
}

bool leftmost_unmarked(const Word& w) {
    std::vector<char> seen;
    for (const auto& l : w) {
        if (int(seen.size()) < l.value) seen.resize(l.value, 0);
        if (!seen[l.value - 1]) {
            if (l.marked) return false;
            seen[l.value - 1] = 1;
        }
    }
    return true;
}

bool is_lr_tableau(const ShiftedTableau& t) {
    if (!is_valid_tableau(t)) return false;
    Word w = reading_word(t);
    return lattice_property(w) && leftmost_unmarked(w);
}

namespace {

// Enumerate fillings of a skew shifted shape row by row. Letters are bounded by
// maxv and by per-letter caps; diag_unmarked forces unmarked main-diagonal cells.
void enumerate_fillings(const ShiftedShape& sh, int maxv, const std::vector<int>& caps, bool diag_unmarked,
                        const std::function<void(const ShiftedTableau&)>& visit) {
    ShiftedTableau t;
    t.shape = sh;
    std::vector<std::pair<int, int>> cells;
    t.rows.resize(sh.rows());
    for (int r = 1; r <= sh.rows(); ++r) {
        int len = std::max(0, sh.row_end(r) - sh.row_start(r) + 1);
        t.rows[r - 1].resize(len);
        for (int c = sh.row_start(r); c <= sh.row_end(r); ++c) cells.emplace_back(r, c);
    }
    std::vector<int> used(maxv + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(t);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1; // minimal rank
        if (t.has(r, c - 1)) {
            const auto& x = t.at(r, c - 1);
            lo = std::max(lo, x.marked ? x.rank() + 1 : x.rank());
        }
        if (t.has(r - 1, c)) {
            const auto& x = t.at(r - 1, c);
            lo = std::max(lo, x.marked ? x.rank() : x.rank() + 1);
        }
        for (int rk = lo; rk <= 2 * maxv; ++rk) {
            MarkedLetter l{(rk + 1) / 2, rk % 2 == 1};
            if (diag_unmarked && c == r && l.marked) continue;
            if (used[l.value] >= caps[l.value]) continue;
            ++used[l.value];
            t.rows[r - 1][c - sh.row_start(r)] = l;
            rec(idx + 1);
            --used[l.value];
        }
    };
    rec(0);
}

} // namespace

long long lr_coefficient(const StrictPartition& la, const StrictPartition& nu, const StrictPartition& mu) {
    if (!mu.contains(la) || la.size() + nu.size() != mu.size()) return 0;
    ShiftedShape sh{mu, la};
    int maxv = nu.length();
    std::vector<int> caps(maxv + 1, 0);
    for (int i = 1; i <= maxv; ++i) caps[i] = nu[i - 1];
    long long count = 0;
    enumerate_fillings(sh, maxv, caps, false, [&](const ShiftedTableau& t) {
        if (content(t) != nu.parts) return;
        Word w = reading_word(t);
        if (lattice_property(w) && leftmost_unmarked(w)) ++count;
    });
    return count;
}

ShiftedTableau staircase_tableau(const StrictPartition& mu, int n) {
    StrictPartition inner = staircase(n);
    if (mu.length() <= n) throw std::invalid_argument("staircase tableau needs length(mu) > n");
    if (!mu.contains(inner)) throw std::invalid_argument("mu does not contain the staircase");
    ShiftedTableau t;
    t.shape = ShiftedShape{mu, inner};
    t.rows.resize(mu.length());
    auto present = [&](int r, int c) { return t.has(r, c); };
    for (int r = 1; r <= mu.length(); ++r) {
        for (int c = t.shape.row_start(r); c <= t.shape.row_end(r); ++c) {
            int h = std::min(r, c - (n + 1));
            int corner_col = n + 1 + h;
            MarkedLetter l{h, false};
            if (r == h) {
                // arm; the corner is primed unless the hook is a single row
                if (c == corner_col && present(r + 1, c)) l.marked = true;
            } else {
                // leg; the bottom cell stays unmarked
                if (present(r + 1, c)) l.marked = true;
            }
            t.rows[r - 1].push_back(l);
        }
    }
    return t;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

Poly schur_p(const StrictPartition& la, int m) {
    Poly out;
    if (la.length() > m) return out;
    ShiftedShape sh{la, StrictPartition()};
    std::vector<int> caps(m + 1, 1 << 20);
    enumerate_fillings(sh, m, caps, true, [&](const ShiftedTableau& t) {
        std::vector<int> e(m, 0);
        for (const auto& row : t.rows)
            for (const auto& l : row) ++e[l.value - 1];
        out[e] += 1;
    });
    return out;
}

std::map<StrictPartition, long long> expand_in_p(Poly f, int m) {
    std::map<StrictPartition, long long> out;
    while (!f.empty()) {
        auto lead = std::prev(f.end());
        std::vector<int> e = lead->first;
        long long c = lead->second;
        std::vector<int> parts;
        for (int x : e)
            if (x) parts.push_back(x);
        StrictPartition mu(parts); // throws if the leading exponent is not strict
        Poly p = schur_p(mu, m);
        for (const auto& [ep, cp] : p) {
            long long& v = f[ep];
            v -= c * cp;
            if (v == 0) f.erase(ep);
        }
        out[mu] += c;
        if (f.count(e)) throw std::logic_error("P-basis expansion did not cancel the leading term");
    }
    return out;
}

std::vector<Prop714Result> verify_prop_714(int n, int bound) {
    std::vector<Prop714Result> out;
    StrictPartition st = staircase(n);
    for (int s = 0; s <= bound; ++s) {
        for (const auto& mu : strict_partitions(s)) {
            if (mu.length() <= n) continue;
            Prop714Result res{mu, n, true, ""};
            ShiftedTableau t = staircase_tableau(mu, n);
            std::vector<int> ct = content(t);
            bool strict = true;
            for (std::size_t i = 0; i < ct.size(); ++i)
                if (ct[i] <= 0 || (i && ct[i] >= ct[i - 1])) strict = false;
            Word w = reading_word(t);
            std::ostringstream d;
            d << "tableau " << t.str() << " word " << format_word(w);
            if (!is_valid_tableau(t)) {
                res.ok = false;
                d << " invalid tableau";
            } else if (!strict) {
                res.ok = false;
                d << " content not strict";
            } else if (!lattice_property(w)) {
                res.ok = false;
                d << " not lattice";
            } else if (!leftmost_unmarked(w)) {
                res.ok = false;
                d << " leftmost letter marked";
            } else if (lr_coefficient(st, StrictPartition(ct), mu) < 1) {
                res.ok = false;
                d << " zero LR coefficient";
            }
            res.detail = d.str();
            out.push_back(res);
        }
    }
    return out;
}

} // namespace qweb
