#include "qweb/superlinalg.hpp"

#include <algorithm>
#include <map>

namespace qweb {

// ---- GradedBasis ----

GradedBasis::GradedBasis() : par_(std::make_shared<const std::vector<Parity>>(1, Parity(0))) {}

GradedBasis::GradedBasis(std::shared_ptr<const BasisFactor> f)
    : factors_{f}, par_(std::make_shared<const std::vector<Parity>>(f->parity)) {}

GradedBasis GradedBasis::simple(std::vector<std::string> labels, std::vector<Parity> parity) {
    auto f = std::make_shared<BasisFactor>();
    f->key = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        f->key += labels[i] + ":" + std::to_string(parity[i]) + ",";
    }
    f->key += "}";
    f->labels = std::move(labels);
    f->parity = std::move(parity);
    return GradedBasis(std::shared_ptr<const BasisFactor>(f));
}

GradedBasis GradedBasis::tensor(const GradedBasis& o) const {
    if (factors_.empty()) return o;
    if (o.factors_.empty()) return *this;
    GradedBasis r;
    r.factors_ = factors_;
    r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
    auto p = std::make_shared<std::vector<Parity>>();
    p->reserve(dim() * o.dim());
    for (Parity x : *par_)
        for (Parity y : *o.par_) p->push_back(x ^ y);
    r.par_ = p;
    return r;
}

std::string GradedBasis::label(std::size_t i) const {
    if (factors_.empty()) return "1";
    std::vector<std::size_t> idx(factors_.size());
    for (std::size_t f = factors_.size(); f-- > 0;) {
        std::size_t d = factors_[f]->labels.size();
        idx[f] = i % d;
        i /= d;
    }
    std::string s;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (f) s += " ⊗ ";
        s += factors_[f]->labels[idx[f]];
    }
    return s;
}

std::string GradedBasis::key() const {
    std::string s;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (f) s += "|";
        s += factors_[f]->key;
    }
    return s.empty() ? "1" : s;
}

bool operator==(const GradedBasis& x, const GradedBasis& y) {
    if (x.factors_.size() != y.factors_.size()) return false;
    for (std::size_t i = 0; i < x.factors_.size(); ++i) {
        if (x.factors_[i] != y.factors_[i] && x.factors_[i]->key != y.factors_[i]->key) return false;
    }
    return true;
}

// ---- SuperMatrix ----

SuperMatrix::SuperMatrix(GradedBasis dom, GradedBasis cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), cols_(dom_.dim()) {}

SuperMatrix SuperMatrix::identity(const GradedBasis& b) {
    SuperMatrix m(b, b);
    for (std::size_t j = 0; j < b.dim(); ++j) m.cols_[j].push_back({std::uint32_t(j), Scalar(1)});
    return m;
}

Scalar SuperMatrix::at(std::size_t r, std::size_t c) const {
    const Column& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.row < x; });
    if (it != col.end() && it->row == r) return it->v;
    return Scalar();
}

void SuperMatrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    Column& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t x) { return e.row < x; });
    if (it != col.end() && it->row == r) {
        it->v += v;
        if (it->v.is_zero()) col.erase(it);
    } else {
        col.insert(it, {std::uint32_t(r), v});
    }
}

std::size_t SuperMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

SuperMatrix SuperMatrix::component(Parity p) const {
    SuperMatrix m(dom_, cod_);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j])
            if ((cod_.parity(e.row) ^ dom_.parity(j)) == p) m.cols_[j].push_back(e);
    return m;
}

std::optional<Parity> SuperMatrix::parity() const {
    std::optional<Parity> p;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j]) {
            Parity q = cod_.parity(e.row) ^ dom_.parity(j);
            if (p && *p != q) return std::nullopt;
            p = q;
        }
    return p;
}

nlohmann::json SuperMatrix::to_json() const {
    auto basis = [](const GradedBasis& b) {
        nlohmann::json a = nlohmann::json::array();
        for (std::size_t i = 0; i < b.dim(); ++i) a.push_back({b.label(i), int(b.parity(i))});
        return a;
    };
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::string>> es;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& e : cols_[j]) es.emplace_back(e.row, std::uint32_t(j), e.v.str());
    std::sort(es.begin(), es.end());
    nlohmann::json entries = nlohmann::json::array();
    for (auto& [r, c, s] : es) entries.push_back({r, c, s});
    return {{"domain", basis(dom_)}, {"codomain", basis(cod_)}, {"entries", entries}};
}

bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.dom_ != y.dom_ || x.cod_ != y.cod_) return false;
    for (std::size_t j = 0; j < x.cols_.size(); ++j) {
        const Column& a = x.cols_[j];
        const Column& b = y.cols_[j];
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t].row != b[t].row || a[t].v != b[t].v) return false;
    }
    return true;
}

std::optional<Difference> first_difference(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.domain() != y.domain() || x.codomain() != y.codomain())
        throw BasisMismatch("comparing matrices over different bases");
    for (std::size_t j = 0; j < x.cols(); ++j) {
        const Column& a = x.col(j);
        const Column& b = y.col(j);
        std::size_t p = 0, q = 0;
        while (p < a.size() || q < b.size()) {
            if (q == b.size() || (p < a.size() && a[p].row < b[q].row))
                return Difference{a[p].row, j, a[p].v, Scalar()};
            if (p == a.size() || b[q].row < a[p].row) return Difference{b[q].row, j, Scalar(), b[q].v};
            if (a[p].v != b[q].v) return Difference{a[p].row, j, a[p].v, b[q].v};
            ++p;
            ++q;
        }
    }
    return std::nullopt;
}

SuperMatrix mat_compose(const SuperMatrix& g, const SuperMatrix& f) {
    if (g.domain() != f.codomain()) throw BasisMismatch("compose: domain(g) != codomain(f)");
    SuperMatrix out(f.domain(), g.codomain());
    std::vector<Scalar> acc(g.rows());
    std::vector<char> hit(g.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        touched.clear();
        for (const auto& e : f.col(j)) {
            for (const auto& h : g.col(e.row)) {
                if (!hit[h.row]) {
                    hit[h.row] = 1;
                    touched.push_back(h.row);
                    acc[h.row] = e.v * h.v;
                } else {
                    acc[h.row] += e.v * h.v;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        Column c;
        for (auto r : touched) {
            if (!acc[r].is_zero()) c.push_back({r, std::move(acc[r])});
            acc[r] = Scalar();
            hit[r] = 0;
        }
        out.set_col(j, std::move(c));
    }
    return out;
}

SuperMatrix mat_tensor(const SuperMatrix& f, const SuperMatrix& g) {
    SuperMatrix out(f.domain().tensor(g.domain()), f.codomain().tensor(g.codomain()));
    const std::size_t dg = g.cols(), rg = g.rows();
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1) {
        Parity pc1 = f.domain().parity(c1);
        for (std::size_t c2 = 0; c2 < dg; ++c2) {
            Parity pc2 = g.domain().parity(c2);
            Column c;
            c.reserve(f.col(c1).size() * g.col(c2).size());
            for (const auto& e1 : f.col(c1))
                for (const auto& e2 : g.col(c2)) {
                    Scalar v = e1.v * e2.v;
                    if (pc1 & (g.codomain().parity(e2.row) ^ pc2)) v = -v;
                    c.push_back({std::uint32_t(e1.row * rg + e2.row), std::move(v)});
                }
            out.set_col(c1 * dg + c2, std::move(c));
        }
    }
    return out;
}

SuperMatrix mat_add(const SuperMatrix& f, const SuperMatrix& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) throw BasisMismatch("add: basis mismatch");
    SuperMatrix out(f.domain(), f.codomain());
    for (std::size_t j = 0; j < f.cols(); ++j) {
        const Column& a = f.col(j);
        const Column& b = g.col(j);
        Column c;
        std::size_t p = 0, q = 0;
        while (p < a.size() || q < b.size()) {
            if (q == b.size() || (p < a.size() && a[p].row < b[q].row)) {
                c.push_back(a[p++]);
            } else if (p == a.size() || b[q].row < a[p].row) {
                c.push_back(b[q++]);
            } else {
                Scalar s = a[p].v + b[q].v;
                if (!s.is_zero()) c.push_back({a[p].row, std::move(s)});
                ++p;
                ++q;
            }
        }
        out.set_col(j, std::move(c));
    }
    return out;
}

SuperMatrix mat_scale(const Scalar& s, const SuperMatrix& f) {
    SuperMatrix out(f.domain(), f.codomain());
    if (s.is_zero()) return out;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        Column c = f.col(j);
        for (auto& e : c) e.v = s * e.v;
        out.set_col(j, std::move(c));
    }
    return out;
}

SuperMatrix mat_identity(const GradedBasis& b) { return SuperMatrix::identity(b); }

Scalar supertrace(const SuperMatrix& f) {
    if (f.domain() != f.codomain()) throw BasisMismatch("supertrace of a non-square matrix");
    Scalar s;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        Scalar v = f.at(j, j);
        if (f.domain().parity(j)) s -= v;
        else s += v;
    }
    return s;
}

// ---- sparse elimination ----

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t p = 0, q = 0;
    while (p < y.size() || q < x.size()) {
        if (q == x.size() || (p < y.size() && y[p].first < x[q].first)) {
            out.push_back(std::move(y[p++]));
        } else if (p == y.size() || x[q].first < y[p].first) {
            out.emplace_back(x[q].first, a * x[q].second);
            ++q;
        } else {
            Scalar s = y[p].second + a * x[q].second;
            if (!s.is_zero()) out.emplace_back(y[p].first, std::move(s));
            ++p;
            ++q;
        }
    }
    y = std::move(out);
}

namespace {

const Scalar* find_in(const SparseVec& v, std::uint32_t c) {
    auto it = std::lower_bound(v.begin(), v.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
    if (it != v.end() && it->first == c) return &it->second;
    return nullptr;
}

} // namespace

std::vector<std::uint32_t> row_reduce(std::vector<SparseVec>& rows) {
    std::vector<SparseVec> basis;
    std::vector<std::uint32_t> piv;
    std::map<std::uint32_t, std::size_t> where;
    for (auto& r0 : rows) {
        SparseVec r = std::move(r0);
        std::vector<std::pair<std::size_t, Scalar>> subs;
        for (const auto& [c, v] : r) {
            auto it = where.find(c);
            if (it != where.end()) subs.emplace_back(it->second, v);
        }
        for (auto& [bi, v] : subs) axpy(r, -v, basis[bi]);
        if (r.empty()) continue;
        std::uint32_t pc = r.front().first;
        Scalar inv = r.front().second.inv();
        for (auto& e : r) e.second = inv * e.second;
        for (auto& b : basis) {
            if (const Scalar* v = find_in(b, pc)) {
                Scalar f = -*v;
                axpy(b, f, r);
            }
        }
        where[pc] = basis.size();
        basis.push_back(std::move(r));
        piv.push_back(pc);
    }
    rows = std::move(basis);
    return piv;
}

std::size_t rank_of(std::vector<SparseVec> rows) { return row_reduce(rows).size(); }

std::vector<SparseVec> solve_null(std::vector<SparseVec> rows, std::size_t ncols) {
    auto piv = row_reduce(rows);
    std::vector<char> is_piv(ncols, 0);
    for (auto p : piv) is_piv[p] = 1;
    std::vector<SparseVec> out;
    for (std::uint32_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::pair<std::uint32_t, Scalar>> x;
        x.emplace_back(f, Scalar(1));
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (const Scalar* v = find_in(rows[i], f)) x.emplace_back(piv[i], -*v);
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(x));
    }
    return out;
}

std::size_t mat_rank(const SuperMatrix& f) {
    std::vector<SparseVec> rows(f.rows());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& e : f.col(j)) rows[e.row].emplace_back(std::uint32_t(j), e.v);
    return rank_of(std::move(rows));
}

SuperMatrix mat_inverse(const SuperMatrix& f) {
    if (f.rows() != f.cols()) throw SingularMatrix();
    const std::uint32_t n = std::uint32_t(f.cols());
    std::vector<SparseVec> rows(n);
    for (std::uint32_t j = 0; j < n; ++j)
        for (const auto& e : f.col(j)) rows[e.row].emplace_back(j, e.v);
    for (std::uint32_t i = 0; i < n; ++i) rows[i].emplace_back(n + i, Scalar(1));
    auto piv = row_reduce(rows);
    if (piv.size() != n) throw SingularMatrix();
    SuperMatrix inv(f.codomain(), f.domain());
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (piv[t] >= n) throw SingularMatrix();
        for (auto& [c, v] : rows[t])
            if (c >= n) inv.col_mut(c - n).push_back({piv[t], v});
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        Column& c = inv.col_mut(j);
        std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    }
    return inv;
}

} // namespace qweb
