#include "qweb/sergeev.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qweb/qfunctor.hpp"
#include "qweb/shifted.hpp"

namespace qweb {

// ---- Perm ----

Perm Perm::identity(int k) {
    Perm p;
    for (int i = 1; i <= k; ++i) p.img.push_back(i);
    return p;
}

Perm Perm::transposition(int k, int i, int j) {
    Perm p = identity(k);
    std::swap(p.img[i - 1], p.img[j - 1]);
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) p.img[img[i] - 1] = int(i) + 1;
    return p;
}

std::string Perm::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img.size(); ++i) s += (i ? "," : "") + std::to_string(img[i]);
    return s + "]";
}

Perm operator*(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("permutations of different sizes");
    Perm r;
    r.img.resize(t.img.size());
    for (std::size_t i = 0; i < t.img.size(); ++i) r.img[i] = s.img[t.img[i] - 1];
    return r;
}

std::vector<Perm> all_perms(int k) {
    std::vector<Perm> out;
    Perm p = Perm::identity(k);
    do out.push_back(p);
    while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

// ---- multiplication tables ----

namespace {

struct Tables {
    int k = 0;
    std::uint32_t nperm = 1;
    std::vector<Perm> perms;
    std::map<std::vector<int>, std::uint32_t> rank;
    std::vector<std::uint16_t> compose;   // [a*nperm+b] = rank(perm a * perm b)
    std::vector<std::uint8_t> mask_img;   // [p*2^k+m] = sigma(m)
    std::vector<std::int8_t> mask_sign;   // sign of sorting c_{sigma(b1)} c_{sigma(b2)} ...
    std::vector<std::int8_t> merge_sign;  // [A*2^k+C]
};

Tables build_tables(int k) {
    Tables t;
    t.k = k;
    t.perms = all_perms(k);
    t.nperm = std::uint32_t(t.perms.size());
    for (std::uint32_t i = 0; i < t.nperm; ++i) t.rank[t.perms[i].img] = i;
    t.compose.resize(std::size_t(t.nperm) * t.nperm);
    for (std::uint32_t a = 0; a < t.nperm; ++a)
        for (std::uint32_t b = 0; b < t.nperm; ++b)
            t.compose[std::size_t(a) * t.nperm + b] = std::uint16_t(t.rank.at((t.perms[a] * t.perms[b]).img));
    const std::uint32_t nm = 1u << k;
    t.mask_img.resize(std::size_t(t.nperm) * nm);
    t.mask_sign.resize(std::size_t(t.nperm) * nm);
    for (std::uint32_t p = 0; p < t.nperm; ++p) {
        for (std::uint32_t m = 0; m < nm; ++m) {
            std::vector<int> word;
            for (int b = 1; b <= k; ++b)
                if (m >> (b - 1) & 1) word.push_back(t.perms[p](b));
            int inv = 0;
            std::uint32_t out = 0;
            for (std::size_t x = 0; x < word.size(); ++x) {
                out |= 1u << (word[x] - 1);
                for (std::size_t y = x + 1; y < word.size(); ++y)
                    if (word[x] > word[y]) ++inv;
            }
            t.mask_img[std::size_t(p) * nm + m] = std::uint8_t(out);
            t.mask_sign[std::size_t(p) * nm + m] = inv % 2 ? -1 : 1;
        }
    }
    t.merge_sign.resize(std::size_t(nm) * nm);
    for (std::uint32_t a = 0; a < nm; ++a)
        for (std::uint32_t c = 0; c < nm; ++c) {
            int cnt = 0;
            for (int x = 0; x < k; ++x)
                if (a >> x & 1)
                    for (int y = 0; y < x; ++y)
                        if (c >> y & 1) ++cnt;
            t.merge_sign[std::size_t(a) * nm + c] = cnt % 2 ? -1 : 1;
        }
    return t;
}

const Tables& tables(int k) {
    if (k < 0 || k > kMaxSergeevStrands)
        throw std::invalid_argument("Sergeev algebra supported for 0 <= k <= " + std::to_string(kMaxSergeevStrands));
    static std::array<std::once_flag, kMaxSergeevStrands + 1> once;
    static std::array<Tables, kMaxSergeevStrands + 1> tab;
    std::call_once(once[k], [k] { tab[k] = build_tables(k); });
    return tab[k];
}

using Terms = std::vector<std::pair<std::uint32_t, Scalar>>;

void normalize(Terms& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Terms out;
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    v = std::move(out);
}

} // namespace

struct SerOps {
    static SergeevElt make(int k, Terms t) {
        SergeevElt e(k);
        normalize(t);
        e.terms_ = std::move(t);
        return e;
    }
    static const Terms& terms(const SergeevElt& e) { return e.terms_; }
};

// ---- SergeevElt ----

SergeevElt SergeevElt::one(int k) { return basis(k, 0, Perm::identity(k)); }

SergeevElt SergeevElt::basis(int k, std::uint32_t mask, const Perm& p, Scalar coeff) {
    const Tables& t = tables(k);
    if (p.size() != k || mask >= (1u << k)) throw std::invalid_argument("basis element does not fit k strands");
    auto it = t.rank.find(p.img);
    if (it == t.rank.end()) throw std::invalid_argument("not a permutation: " + p.str());
    return SerOps::make(k, {{mask * t.nperm + it->second, std::move(coeff)}});
}

SergeevElt SergeevElt::c(int k, int i) {
    if (i < 1 || i > k) throw std::invalid_argument("c_i index out of range");
    return basis(k, 1u << (i - 1), Perm::identity(k));
}

SergeevElt SergeevElt::s(int k, int i) {
    if (i < 1 || i >= k) throw std::invalid_argument("s_i index out of range");
    return basis(k, 0, Perm::transposition(k, i, i + 1));
}

SergeevElt SergeevElt::perm(const Perm& p) { return basis(p.size(), 0, p); }

std::vector<std::pair<SergeevBasisElt, Scalar>> SergeevElt::terms() const {
    const Tables& t = tables(k_);
    std::vector<std::pair<SergeevBasisElt, Scalar>> out;
    for (const auto& [idx, v] : terms_) out.push_back({{idx / t.nperm, t.perms[idx % t.nperm]}, v});
    return out;
}

int SergeevElt::parity() const {
    int p = -1;
    const Tables& t = tables(k_);
    for (const auto& e : terms_) {
        int q = std::popcount(e.first / t.nperm) % 2;
        if (p == -1) p = q;
        else if (p != q) return -1;
    }
    return p;
}

Scalar SergeevElt::coeff(std::uint32_t mask, const Perm& p) const {
    const Tables& t = tables(k_);
    auto it = t.rank.find(p.img);
    if (it == t.rank.end()) return Scalar();
    std::uint32_t idx = mask * t.nperm + it->second;
    auto f = std::lower_bound(terms_.begin(), terms_.end(), idx,
                              [](const auto& e, std::uint32_t v) { return e.first < v; });
    return f != terms_.end() && f->first == idx ? f->second : Scalar();
}

std::string SergeevElt::str() const {
    if (terms_.empty()) return "0";
    const Tables& t = tables(k_);
    std::string s;
    for (const auto& [idx, v] : terms_) {
        if (!s.empty()) s += " + ";
        std::uint32_t mask = idx / t.nperm;
        const Perm& p = t.perms[idx % t.nperm];
        s += v.is_rational() ? v.str() : "(" + v.str() + ")";
        if (mask) {
            s += "*c[";
            bool first = true;
            for (int i = 1; i <= k_; ++i)
                if (mask >> (i - 1) & 1) {
                    s += (first ? "" : ",") + std::to_string(i);
                    first = false;
                }
            s += "]";
        }
        if (!(p == Perm::identity(k_))) s += "*p" + p.str();
    }
    return s;
}

SergeevElt operator+(const SergeevElt& x, const SergeevElt& y) {
    if (x.k_ != y.k_) throw std::invalid_argument("strand-count mismatch");
    Terms t = x.terms_;
    t.insert(t.end(), y.terms_.begin(), y.terms_.end());
    return SerOps::make(x.k_, std::move(t));
}

SergeevElt operator-(const SergeevElt& x, const SergeevElt& y) { return x + Scalar(-1) * y; }

SergeevElt operator*(const Scalar& a, const SergeevElt& x) {
    if (a.is_zero()) return SergeevElt(x.k_);
    Terms t;
    t.reserve(x.terms_.size());
    for (const auto& [i, v] : x.terms_) t.push_back({i, a * v});
    return SerOps::make(x.k_, std::move(t));
}

SergeevElt operator*(const SergeevElt& x, const SergeevElt& y) { return ser_mul(x, y); }

SergeevElt ser_mul(const SergeevElt& x, const SergeevElt& y) {
    if (x.k() != y.k()) throw std::invalid_argument("strand-count mismatch");
    const int k = x.k();
    const Tables& t = tables(k);
    const std::uint32_t nm = 1u << k;
    const Terms& xt = SerOps::terms(x);
    const Terms& yt = SerOps::terms(y);
    const std::size_t dim = std::size_t(nm) * t.nperm;
    std::vector<Scalar> acc(dim);
    std::vector<std::uint8_t> used(dim, 0);
    std::vector<std::uint32_t> touched;
    for (const auto& [xi, xv] : xt) {
        const std::uint32_t a = xi / t.nperm, sp = xi % t.nperm;
        for (const auto& [yi, yv] : yt) {
            const std::uint32_t b = yi / t.nperm, tp = yi % t.nperm;
            const std::size_t mi = std::size_t(sp) * nm + b;
            const std::uint32_t sb = t.mask_img[mi];
            int sign = t.mask_sign[mi] * t.merge_sign[std::size_t(a) * nm + sb];
            const std::uint32_t idx = (a ^ sb) * t.nperm + t.compose[std::size_t(sp) * t.nperm + tp];
            Scalar prod = xv * yv;
            if (sign < 0) acc[idx] -= prod;
            else acc[idx] += prod;
            if (!used[idx]) {
                used[idx] = 1;
                touched.push_back(idx);
            }
        }
    }
    std::sort(touched.begin(), touched.end());
    Terms out;
    for (auto idx : touched)
        if (!acc[idx].is_zero()) out.push_back({idx, std::move(acc[idx])});
    SergeevElt r(k);
    r = SerOps::make(k, std::move(out));
    return r;
}

// ---- parsing ----

namespace {

struct SerParser {
    std::string_view s;
    int k;
    std::size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool peek(char c) {
        ws();
        return p < s.size() && s[p] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++p;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p);
    }
    int integer() {
        ws();
        std::size_t st = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (st == p) throw ParseError("expected an integer", p);
        if (p - st > 6) throw ParseError("integer too large", st);
        return std::stoi(std::string(s.substr(st, p - st)));
    }
    std::vector<int> int_list(char close) {
        std::vector<int> v;
        if (eat(close)) return v;
        do v.push_back(integer());
        while (eat(','));
        expect(close);
        return v;
    }

    SergeevElt factor() {
        ws();
        std::size_t st = p;
        if (eat('(')) {
            std::size_t close = s.find(')', p);
            if (close == std::string_view::npos) throw ParseError("unterminated coefficient", st);
            Scalar v;
            try {
                v = Scalar::parse(s.substr(p, close - p));
            } catch (const ParseError& e) {
                throw ParseError("bad coefficient", p + e.pos);
            }
            p = close + 1;
            return v * SergeevElt::one(k);
        }
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
            return Scalar(Rational::parse(s.substr(st, p - st))) * SergeevElt::one(k);
        }
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])))) ++p;
        std::string name(s.substr(st, p - st));
        auto guard = [&](auto f) {
            try {
                return f();
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), st);
            }
        };
        if (name == "i") return Scalar::i() * SergeevElt::one(k);
        if (name == "r2") return Scalar::sqrt2() * SergeevElt::one(k);
        if (name == "c" && eat('[')) {
            std::vector<int> idx = int_list(']');
            return guard([&] {
                SergeevElt r = SergeevElt::one(k);
                for (int i : idx) r = r * SergeevElt::c(k, i);
                return r;
            });
        }
        if (name == "p" && eat('[')) {
            std::vector<int> img = int_list(']');
            return guard([&] {
                if (int(img.size()) != k) throw std::invalid_argument("permutation must have k images");
                return SergeevElt::perm(Perm{img});
            });
        }
        if (name == "tau" && eat('(')) {
            int i = integer();
            expect(',');
            int j = integer();
            expect(')');
            return guard([&] { return tau(i, j, k); });
        }
        if (name == "pi" && eat('(')) {
            int j = integer();
            expect(')');
            return guard([&] { return pi(j, k); });
        }
        if (name.size() > 1 && (name[0] == 'c' || name[0] == 's') &&
            std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            int i = std::stoi(name.substr(1));
            return guard([&] { return name[0] == 'c' ? SergeevElt::c(k, i) : SergeevElt::s(k, i); });
        }
        throw ParseError("unknown Sergeev factor '" + name + "'", st);
    }

    SergeevElt term() {
        bool neg = false;
        while (true) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        SergeevElt r = factor();
        while (eat('*')) r = r * factor();
        return neg ? -r : r;
    }

    SergeevElt parse() {
        ws();
        if (p == s.size()) throw ParseError("empty element", p);
        SergeevElt r = term();
        for (;;) {
            ws();
            if (p == s.size()) break;
            if (peek('+')) {
                ++p;
                r = r + term();
            } else if (peek('-')) {
                r = r + term(); // term() consumes the sign
            } else {
                throw ParseError("unexpected '" + std::string(1, s[p]) + "'", p);
            }
        }
        return r;
    }
};

} // namespace

SergeevElt SergeevElt::parse(std::string_view text, int k) {
    tables(k);
    return SerParser{text, k}.parse();
}

// ---- distinguished elements ----

SergeevElt tau(int i, int j, int k) {
    if (!(1 <= i && i < j && j <= k)) throw std::invalid_argument("tau(i,j) needs 1 <= i < j <= k");
    Scalar h = Scalar(Rational(0), Rational(0), Rational(1, 2), Rational(0)); // 1/sqrt(2)
    return h * ((SergeevElt::c(k, i) - SergeevElt::c(k, j)) * SergeevElt::perm(Perm::transposition(k, i, j)));
}

SergeevElt pi(int j, int k) {
    if (j < 1 || j > k) throw std::invalid_argument("pi(j) needs 1 <= j <= k");
    SergeevElt r(k);
    for (int i = 1; i < j; ++i) r = r + tau(i, j, k);
    return r;
}

namespace {
long long fact(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
} // namespace

SergeevElt clasp(int k) {
    SergeevElt r(k);
    Terms t;
    const Tables& tb = tables(k);
    for (std::uint32_t p = 0; p < tb.nperm; ++p) t.push_back({p, Scalar(Rational(1, fact(k)))});
    return SerOps::make(k, std::move(t));
}

namespace {

// (shifted column - row) of each box in the canonical filling, 0-based
std::vector<int> canonical_contents(const StrictPartition& la) {
    CanonicalFilling f = canonical_filling(la);
    std::vector<int> c(la.size());
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (int v : f.rows[r]) c[v - 1] = f.col[v - 1] - int(r + 1);
    return c;
}

int tri(int c) { return c * (c + 1) / 2; }

// Applies a_lambda to x from the left, one factor at a time.
SergeevElt apply_a(const StrictPartition& la, SergeevElt x) {
    const int k = la.size();
    std::vector<int> own = canonical_contents(la);
    for (int i = 2; i <= k; ++i) {
        SergeevElt p = pi(i, k);
        SergeevElt p2 = p * p;
        for (int c = 0; c < i; ++c)
            if (c != own[i - 1]) x = Scalar(tri(c)) * x + p2 * x;
    }
    return x;
}

} // namespace

SergeevElt a_lambda(const StrictPartition& la) {
    const int k = la.size();
    CanonicalFilling f = canonical_filling(la);
    SergeevElt r = SergeevElt::one(k);
    for (int i = 1; i <= k; ++i) {
        int c = f.col[i - 1];
        SergeevElt p = pi(i, k);
        r = r * (Scalar(tri(c)) * SergeevElt::one(k) - p * p);
    }
    return r;
}

// pi_i^2 acts on Gelfand-Tsetlin vectors by -c(c+1)/2, c the content of box i.
// Killing every other content leaves the projector onto the canonical tableau's weight.
SergeevElt content_projector(const StrictPartition& la) { return apply_a(la, SergeevElt::one(la.size())); }

SergeevElt b_lambda(const StrictPartition& la) {
    const int k = la.size();
    CanonicalFilling f = canonical_filling(la);
    // Young subgroup: product of the symmetric groups on each row's entries
    std::vector<Perm> group{Perm::identity(k)};
    for (const auto& row : f.rows) {
        std::vector<int> vals = row;
        std::vector<Perm> row_perms;
        std::vector<int> arr = vals;
        do {
            Perm q = Perm::identity(k);
            for (std::size_t x = 0; x < vals.size(); ++x) q.img[vals[x] - 1] = arr[x];
            row_perms.push_back(q);
        } while (std::next_permutation(arr.begin(), arr.end()));
        std::vector<Perm> next;
        for (const auto& g : group)
            for (const auto& q : row_perms) next.push_back(g * q);
        group = std::move(next);
    }
    const Tables& tb = tables(k);
    Terms t;
    for (const auto& g : group) t.push_back({tb.rank.at(g.img), Scalar(1)});
    return SerOps::make(k, std::move(t));
}

SergeevElt e_lambda(const StrictPartition& la) { return apply_a(la, b_lambda(la)); }

Scalar quasi_idempotent_constant(const SergeevElt& e) {
    if (e.is_zero()) throw std::invalid_argument("zero element");
    SergeevElt sq = e * e;
    const auto& first = e.raw().front();
    Scalar top;
    for (const auto& [i, v] : sq.raw())
        if (i == first.first) top = v;
    Scalar kappa = top / first.second;
    if (!(sq == kappa * e)) throw std::domain_error("element is not quasi-idempotent");
    return kappa;
}

// ---- psi ----

GradedBasis tensor_power_basis(int n, int k) {
    GradedBasis b;
    GradedBasis v = sym_basis(n, 1);
    for (int i = 0; i < k; ++i) b = b.tensor(v);
    return b;
}

namespace {

// i^ph * sign * coeff
Scalar phase(const Scalar& v, int ph, int sign) {
    Scalar r = v;
    for (int q = 0; q < (ph & 3); ++q) r = Scalar(-r.b, r.a, -r.d, r.c);
    return sign < 0 ? -r : r;
}

} // namespace

SparseVec psi_apply(const SergeevElt& x, int n, std::uint32_t index) {
    const int k = x.k();
    const Tables& t = tables(k);
    const std::uint32_t base = 2 * n;
    std::vector<int> u(k);
    std::uint32_t rest = index;
    for (int j = k - 1; j >= 0; --j) {
        u[j] = int(rest % base);
        rest /= base;
    }
    auto odd = [n](int letter) { return letter >= n; };
    SparseVec out;
    std::vector<int> w(k);
    for (const auto& [idx, v] : x.raw()) {
        const std::uint32_t mask = idx / t.nperm;
        const Perm& s = t.perms[idx % t.nperm];
        int sign = 1, ph = 0;
        for (int j = 0; j < k; ++j) w[s.img[j] - 1] = u[j];
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (s.img[a] > s.img[b] && odd(u[a]) && odd(u[b])) sign = -sign;
        for (int a = k; a >= 1; --a) {
            if (!(mask >> (a - 1) & 1)) continue;
            int before = 0;
            for (int q = 0; q < a - 1; ++q) before += odd(w[q]);
            if (before % 2) sign = -sign;
            int& l = w[a - 1];
            if (odd(l)) {
                ph += 3; // -i
                l -= n;
            } else {
                ph += 1;
                l += n;
            }
        }
        std::uint32_t row = 0;
        for (int j = 0; j < k; ++j) row = row * base + std::uint32_t(w[j]);
        out.push_back({row, phase(v, ph, sign)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    return merged;
}

SuperMatrix psi_action(const SergeevElt& x, int n) {
    GradedBasis b = tensor_power_basis(n, x.k());
    SuperMatrix m(b, b);
    for (std::uint32_t j = 0; j < b.dim(); ++j) {
        Column c;
        for (auto& [r, v] : psi_apply(x, n, j)) c.push_back({r, std::move(v)});
        m.set_col(j, std::move(c));
    }
    return m;
}

} // namespace qweb
