#include "qweb/qfunctor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace qweb {

// ---- supersymmetric powers ----

namespace {

struct SymSpace {
    int n = 0, k = 0;
    std::vector<SymWord> words;
    std::map<SymWord, std::uint32_t> index;
    GradedBasis basis, dual;
};

void gen_words(int n, int k, int from, SymWord& cur, std::vector<SymWord>& out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int t = from; t < 2 * n; ++t) {
        cur.push_back(std::uint8_t(t));
        // odd letters at most once
        gen_words(n, k, t >= n ? t + 1 : t, cur, out);
        cur.pop_back();
    }
}

std::string letter_label(int n, int t) { return t < n ? "v" + std::to_string(t + 1) : "vb" + std::to_string(t - n + 1); }

const SymSpace& sym_space(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("sym_basis needs n >= 1 and k >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SymSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, k}];
    if (!slot) {
        auto s = std::make_unique<SymSpace>();
        s->n = n;
        s->k = k;
        SymWord cur;
        gen_words(n, k, 0, cur, s->words);
        auto f = std::make_shared<BasisFactor>();
        auto g = std::make_shared<BasisFactor>();
        f->key = "S^" + std::to_string(k) + "(V_" + std::to_string(n) + ")";
        g->key = f->key + "*";
        for (std::uint32_t i = 0; i < s->words.size(); ++i) {
            const SymWord& w = s->words[i];
            s->index[w] = i;
            std::string lab;
            int odd = 0;
            for (auto t : w) {
                lab += letter_label(n, t);
                odd += t >= n;
            }
            if (lab.empty()) lab = "1";
            f->labels.push_back(lab);
            g->labels.push_back(lab + "'");
            f->parity.push_back(Parity(odd % 2));
            g->parity.push_back(Parity(odd % 2));
        }
        s->basis = GradedBasis(std::shared_ptr<const BasisFactor>(f));
        s->dual = GradedBasis(std::shared_ptr<const BasisFactor>(g));
        slot = std::move(s);
    }
    return *slot;
}

// Sort a word of letters; sign from odd inversions. False if an odd letter repeats.
bool resort(int n, SymWord& w, int& sign) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        if (w[a] >= n)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                if (w[b] >= n && w[b] < w[a]) ++inv;
    std::sort(w.begin(), w.end());
    for (std::size_t a = 1; a < w.size(); ++a)
        if (w[a] >= n && w[a] == w[a - 1]) return false;
    sign = inv % 2 ? -1 : 1;
    return true;
}

void sort_column(Column& c) {
    std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column out;
    for (auto& e : c) {
        if (!out.empty() && out.back().row == e.row) out.back().v += e.v;
        else out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return e.v.is_zero(); });
    c = std::move(out);
}

} // namespace

std::size_t sym_dim(int n, int k) { return sym_space(n, k).words.size(); }
const std::vector<SymWord>& sym_words(int n, int k) { return sym_space(n, k).words; }
GradedBasis sym_basis(int n, int k) { return sym_space(n, k).basis; }
GradedBasis dual_sym_basis(int n, int k) { return sym_space(n, k).dual; }

GradedBasis word_basis(int n, const ObjectWord& w) {
    if (w.has_negative()) return GradedBasis::simple({}, {});
    GradedBasis b;
    for (const auto& s : w.normalized().strands) b = b.tensor(s.up ? sym_basis(n, s.k) : dual_sym_basis(n, s.k));
    return b;
}

// ---- generator matrices ----

SuperMatrix eval_dot(int n, int k) {
    const SymSpace& sp = sym_space(n, k);
    SuperMatrix m(sp.basis, sp.basis);
    for (std::uint32_t j = 0; j < sp.words.size(); ++j) {
        Column c;
        const SymWord& w = sp.words[j];
        int odd_before = 0;
        for (std::size_t t = 0; t < w.size(); ++t) {
            SymWord u = w;
            bool odd = w[t] >= n;
            Scalar v = odd ? -Scalar::i() : Scalar::i();
            u[t] = std::uint8_t(odd ? w[t] - n : w[t] + n);
            int sg;
            if (resort(n, u, sg)) {
                if ((odd_before + (sg < 0)) % 2) v = -v;
                c.push_back({sp.index.at(u), v});
            }
            odd_before += odd;
        }
        sort_column(c);
        m.set_col(j, std::move(c));
    }
    return m;
}

SuperMatrix eval_merge(int n, int k, int l) {
    const SymSpace& a = sym_space(n, k);
    const SymSpace& b = sym_space(n, l);
    const SymSpace& ab = sym_space(n, k + l);
    SuperMatrix m(a.basis.tensor(b.basis), ab.basis);
    for (std::uint32_t x = 0; x < a.words.size(); ++x)
        for (std::uint32_t y = 0; y < b.words.size(); ++y) {
            SymWord u = a.words[x];
            u.insert(u.end(), b.words[y].begin(), b.words[y].end());
            int sg;
            Column c;
            if (resort(n, u, sg)) c.push_back({ab.index.at(u), Scalar(sg)});
            m.set_col(x * b.words.size() + y, std::move(c));
        }
    return m;
}

SuperMatrix eval_split(int n, int k, int l) {
    const SymSpace& a = sym_space(n, k);
    const SymSpace& b = sym_space(n, l);
    const SymSpace& ab = sym_space(n, k + l);
    SuperMatrix m(ab.basis, a.basis.tensor(b.basis));
    const int tot = k + l;
    const std::uint32_t db = std::uint32_t(b.words.size());
    for (std::uint32_t j = 0; j < ab.words.size(); ++j) {
        const SymWord& w = ab.words[j];
        Column c;
        for (std::uint32_t sub = 0; sub < (1u << tot); ++sub) {
            if (std::popcount(sub) != k) continue;
            SymWord left, right;
            int eps = 0, odd_right = 0;
            for (int p = 0; p < tot; ++p) {
                bool odd = w[p] >= n;
                if (sub >> p & 1) {
                    left.push_back(w[p]);
                    if (odd) eps += odd_right;
                } else {
                    right.push_back(w[p]);
                    odd_right += odd;
                }
            }
            c.push_back({a.index.at(left) * db + b.index.at(right), Scalar(eps % 2 ? -1 : 1)});
        }
        sort_column(c);
        m.set_col(j, std::move(c));
    }
    return m;
}

SuperMatrix eval_cup(int n, int k) {
    const SymSpace& s = sym_space(n, k);
    SuperMatrix m(GradedBasis(), s.basis.tensor(s.dual));
    const std::uint32_t d = std::uint32_t(s.words.size());
    Column c;
    for (std::uint32_t b = 0; b < d; ++b) c.push_back({b * d + b, Scalar(1)});
    m.set_col(0, std::move(c));
    return m;
}

SuperMatrix eval_cap(int n, int k) {
    const SymSpace& s = sym_space(n, k);
    SuperMatrix m(s.dual.tensor(s.basis), GradedBasis());
    const std::uint32_t d = std::uint32_t(s.words.size());
    for (std::uint32_t b = 0; b < d; ++b) m.set_col(b * d + b, Column{{0, Scalar(1)}});
    return m;
}

// ---- lazy evaluation ----

namespace {

using Col64 = std::vector<std::pair<std::uint64_t, Scalar>>;

// Product of sym / dual factors, indexed in row-major order.
struct Space {
    std::vector<const SymSpace*> f;
    std::uint64_t dim = 1;
    bool empty = false; // a negative strand: the zero object

    Parity parity(std::uint64_t i) const {
        Parity p = 0;
        for (std::size_t x = f.size(); x-- > 0;) {
            const auto& pv = f[x]->basis;
            std::uint64_t d = f[x]->words.size();
            p ^= pv.parity(std::size_t(i % d));
            i /= d;
        }
        return p;
    }
};

Space make_space(int n, const ObjectWord& w) {
    Space s;
    if (w.has_negative()) {
        s.empty = true;
        s.dim = 0;
        return s;
    }
    for (const auto& st : w.normalized().strands) {
        s.f.push_back(&sym_space(n, st.k));
        s.dim *= s.f.back()->words.size();
    }
    return s;
}

void merge_col(Col64& c) {
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Col64 out;
    for (auto& e : c) {
        if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
        else out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    c = std::move(out);
}

struct ENode {
    enum Kind { Leaf, Ident, Compose, Tensor, Lin, Zero } kind;
    Space dom, cod;
    std::shared_ptr<const SuperMatrix> leaf;
    std::vector<ENode*> kids;
    std::vector<Scalar> coeffs;
    // every column is a single +-1: the node only relabels basis vectors
    bool signed_perm = false;

    using ColPtr = std::shared_ptr<const Col64>;
    // Wide intermediate spaces rarely revisit a column; past this many the memo starts over.
    static constexpr std::size_t kMemoCap = 1 << 16;
    std::unordered_map<std::uint64_t, ColPtr> memo;

    struct Image {
        std::uint64_t row;
        bool neg;
        bool odd; // parity of the entry
    };
    std::vector<Image> leaf_perm; // Leaf only, per column
    // image of basis vector j under a signed permutation node
    Image apply(std::uint64_t j) const {
        switch (kind) {
        case Ident: return {j, false, false};
        case Leaf: return leaf_perm[std::size_t(j)];
        case Compose: {
            Image x = kids[1]->apply(j);
            Image y = kids[0]->apply(x.row);
            return {y.row, x.neg != y.neg, x.odd != y.odd};
        }
        case Tensor: {
            const ENode* L = kids[0];
            const ENode* R = kids[1];
            const std::uint64_t dR = R->dom.dim, a = j / dR, b = j % dR;
            Image x = L->apply(a);
            Image y = R->apply(b);
            bool neg = x.neg != y.neg;
            if (y.odd && L->dom.parity(a)) neg = !neg;
            return {x.row * R->cod.dim + y.row, neg, x.odd != y.odd};
        }
        default: throw std::logic_error("apply on a node that is not a signed permutation");
        }
    }

    ColPtr col(std::uint64_t j) {
        auto it = memo.find(j);
        if (it != memo.end()) return it->second;
        auto c = std::make_shared<Col64>();
        switch (kind) {
        case Leaf:
            for (const auto& e : leaf->col(std::size_t(j))) c->push_back({e.row, e.v});
            break;
        case Ident: c->push_back({j, Scalar(1)}); break;
        case Zero: break;
        case Compose: {
            ENode* top = kids[0];
            ColPtr b = kids[1]->col(j);
            if (top->signed_perm) {
                // a bijection on rows: no products, no collisions
                c->reserve(b->size());
                for (const auto& [r, v] : *b) {
                    Image im = top->apply(r);
                    c->push_back({im.row, im.neg ? -v : v});
                }
                break;
            }
            for (const auto& [r, v] : *b) {
                ColPtr t = top->col(r);
                for (const auto& [r2, w] : *t) c->push_back({r2, v * w});
            }
            merge_col(*c);
            break;
        }
        case Tensor: {
            ENode* L = kids[0];
            ENode* R = kids[1];
            const std::uint64_t dR = R->dom.dim, cR = R->cod.dim;
            const std::uint64_t a = j / dR, b = j % dR;
            ColPtr lc = L->col(a);
            ColPtr rc = R->col(b);
            const bool pa = L->dom.parity(a);
            const Parity pb = R->dom.parity(b);
            c->reserve(lc->size() * rc->size());
            for (const auto& [r1, v1] : *lc)
                for (const auto& [r2, v2] : *rc) {
                    Scalar v = v1 * v2;
                    if (pa && (R->cod.parity(r2) ^ pb)) v = -v;
                    c->push_back({r1 * cR + r2, std::move(v)});
                }
            break;
        }
        case Lin:
            for (std::size_t t = 0; t < kids.size(); ++t) {
                ColPtr k = kids[t]->col(j);
                for (const auto& [r, v] : *k) c->push_back({r, coeffs[t] * v});
            }
            merge_col(*c);
            break;
        }
        // identities and leaves are cheap to rebuild; skip the memo
        if (kind == Ident || kind == Zero) return c;
        if (memo.size() >= kMemoCap) memo.clear();
        return memo.emplace(j, std::move(c)).first->second;
    }
};

// Columns of m that are each a single +-1; empty if m is not of that form.
std::vector<ENode::Image> signed_permutation(const SuperMatrix& m) {
    std::vector<ENode::Image> out;
    if (m.rows() != m.cols()) return {};
    out.reserve(m.cols());
    const Scalar one(1), minus_one(-1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Column& c = m.col(j);
        if (c.size() != 1) return {};
        bool odd = m.codomain().parity(c[0].row) != m.domain().parity(j);
        if (c[0].v == one) out.push_back({c[0].row, false, odd});
        else if (c[0].v == minus_one) out.push_back({c[0].row, true, odd});
        else return {};
    }
    return out;
}

struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const SuperMatrix>> mats;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::string node_key(int n, const WebNode& w) {
    std::string s = std::to_string(n) + ":" + op_name(w.op) + (w.up ? "^" : "v");
    for (int a : w.args) s += "," + std::to_string(a);
    return s;
}

std::shared_ptr<const SuperMatrix> evaluate_full(int n, const WebExpr& w);

std::shared_ptr<const SuperMatrix> leaf_matrix(int n, const WebExpr& w) {
    std::string key = node_key(n, *w);
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto it = cache().mats.find(key);
        if (it != cache().mats.end()) return it->second;
    }
    const auto& a = w->args;
    std::shared_ptr<const SuperMatrix> m;
    switch (w->op) {
    case Op::Dot: m = std::make_shared<SuperMatrix>(eval_dot(n, a[0])); break;
    case Op::Merge: m = std::make_shared<SuperMatrix>(eval_merge(n, a[0], a[1])); break;
    case Op::Split: m = std::make_shared<SuperMatrix>(eval_split(n, a[0], a[1])); break;
    case Op::CupL: m = std::make_shared<SuperMatrix>(eval_cup(n, a[0])); break;
    case Op::CapL: m = std::make_shared<SuperMatrix>(eval_cap(n, a[0])); break;
    case Op::RCross: {
        auto l = evaluate_full(n, web::xl(a[0], a[1]));
        SuperMatrix inv;
        try {
            inv = mat_inverse(*l);
        } catch (const SingularMatrix&) {
            throw std::logic_error("leftward crossing evaluated to a singular matrix");
        }
        m = std::make_shared<SuperMatrix>(std::move(inv));
        break;
    }
    default: m = evaluate_full(n, expand(w)); break;
    }
    std::lock_guard<std::mutex> lock(cache().mu);
    return cache().mats.emplace(key, m).first->second;
}

struct Builder {
    int n;
    std::vector<std::unique_ptr<ENode>> nodes;
    std::map<const WebNode*, ENode*> seen;

    ENode* node(ENode::Kind k, Space dom, Space cod) {
        nodes.push_back(std::make_unique<ENode>());
        ENode* e = nodes.back().get();
        e->kind = k;
        e->dom = std::move(dom);
        e->cod = std::move(cod);
        return e;
    }

    ENode* build(const WebExpr& w) {
        auto it = seen.find(w.get());
        if (it != seen.end()) return it->second;
        ENode* e = nullptr;
        switch (w->op) {
        case Op::Compose: {
            ENode* top = build(w->kids[0]);
            ENode* bot = build(w->kids[1]);
            e = node(ENode::Compose, bot->dom, top->cod);
            e->kids = {top, bot};
            e->signed_perm = top->signed_perm && bot->signed_perm;
            break;
        }
        case Op::Tensor: {
            ENode* l = build(w->kids[0]);
            ENode* r = build(w->kids[1]);
            Space d = l->dom, c = l->cod;
            d.f.insert(d.f.end(), r->dom.f.begin(), r->dom.f.end());
            c.f.insert(c.f.end(), r->cod.f.begin(), r->cod.f.end());
            d.dim *= r->dom.dim;
            c.dim *= r->cod.dim;
            d.empty = d.empty || r->dom.empty;
            c.empty = c.empty || r->cod.empty;
            e = node(ENode::Tensor, d, c);
            e->kids = {l, r};
            e->signed_perm = l->signed_perm && r->signed_perm;
            break;
        }
        case Op::Lin: {
            std::vector<ENode*> ks;
            for (const auto& k : w->kids) ks.push_back(build(k));
            e = node(ENode::Lin, ks[0]->dom, ks[0]->cod);
            e->kids = ks;
            e->coeffs = w->coeffs;
            break;
        }
        case Op::Zero: e = node(ENode::Zero, make_space(n, w->zdom), make_space(n, w->zcod)); break;
        case Op::Id: {
            Space s = make_space(n, ObjectWord{{{w->up, w->args[0]}}});
            e = node(ENode::Ident, s, s);
            e->signed_perm = !s.empty;
            break;
        }
        default: {
            WebType t = typecheck(w);
            e = node(ENode::Leaf, make_space(n, t.dom), make_space(n, t.cod));
            e->leaf = leaf_matrix(n, w);
            if (!e->dom.empty && !e->cod.empty && e->dom.dim == e->cod.dim) {
                e->leaf_perm = signed_permutation(*e->leaf);
                e->signed_perm = e->leaf_perm.size() == e->dom.dim && e->dom.dim > 0;
            }
            break;
        }
        }
        seen[w.get()] = e;
        return e;
    }
};

std::shared_ptr<const SuperMatrix> evaluate_full(int n, const WebExpr& w) {
    WebType t = typecheck(w);
    GradedBasis dom = word_basis(n, t.dom), cod = word_basis(n, t.cod);
    auto out = std::make_shared<SuperMatrix>(dom, cod);
    if (t.dom.has_negative() || t.cod.has_negative() || is_zero_web(w)) return out;
    Builder b{n, {}, {}};
    ENode* root = b.build(w);
    for (std::uint64_t j = 0; j < dom.dim(); ++j) {
        Col64 c = *root->col(j);
        merge_col(c);
        Column col;
        col.reserve(c.size());
        for (auto& [r, v] : c) col.push_back({std::uint32_t(r), std::move(v)});
        out->set_col(std::size_t(j), std::move(col));
        root->memo.clear();
    }
    return out;
}

} // namespace

SuperMatrix eval_web(int n, const WebExpr& w) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return *evaluate_full(n, w);
}

void clear_eval_cache() {
    std::lock_guard<std::mutex> lock(cache().mu);
    cache().mats.clear();
}

// ---- xi ----

WebExpr xi_image(const SergeevElt& x) {
    const int k = x.k();
    std::vector<int> ones(k, 1);
    WebExpr ident = web::id(ObjectWord::ups(ones));
    if (x.is_zero()) return make_zero(ObjectWord::ups(ones), ObjectWord::ups(ones));
    std::vector<std::pair<Scalar, WebExpr>> terms;
    for (const auto& [b, v] : x.terms()) {
        WebExpr w = b.perm == Perm::identity(k) ? ident : web::perm(b.perm.img);
        // c_{a1} c_{a2} ... with a1 < a2: the smallest index ends up on top
        for (int a = k; a >= 1; --a)
            if (b.mask >> (a - 1) & 1) w = web::compose(web::on_strand(ones, a - 1, web::dot(1)), w);
        terms.push_back({v, w});
    }
    return web::sum(terms);
}

// ---- q(n) action ----

std::string QnGenerator::name() const {
    return std::string("e") + (parity ? "1" : "0") + "_" + std::to_string(i) + std::to_string(j);
}

std::vector<QnGenerator> qn_generators(int n) {
    std::vector<QnGenerator> g;
    for (Parity p : {Parity(0), Parity(1)})
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) g.push_back({i, j, p});
    return g;
}

SuperMatrix qn_action_on_sym(int n, int k, const QnGenerator& x, bool dual) {
    const SymSpace& sp = sym_space(n, k);
    // letter images: e0 sends j -> i and jb -> ib, e1 sends j -> ib and jb -> i
    auto image = [&](int t) -> int {
        int src_even = x.j - 1, src_odd = n + x.j - 1;
        if (t == src_even) return x.parity ? n + x.i - 1 : x.i - 1;
        if (t == src_odd) return x.parity ? x.i - 1 : n + x.i - 1;
        return -1;
    };
    SuperMatrix m(sp.basis, sp.basis);
    for (std::uint32_t c = 0; c < sp.words.size(); ++c) {
        const SymWord& w = sp.words[c];
        Column col;
        int odd_before = 0;
        for (std::size_t t = 0; t < w.size(); ++t) {
            int img = image(w[t]);
            if (img >= 0) {
                SymWord u = w;
                u[t] = std::uint8_t(img);
                int sg;
                if (resort(n, u, sg)) {
                    if (x.parity && odd_before % 2) sg = -sg;
                    col.push_back({sp.index.at(u), Scalar(sg)});
                }
            }
            odd_before += w[t] >= n;
        }
        sort_column(col);
        m.set_col(c, std::move(col));
    }
    if (!dual) return m;
    SuperMatrix d(sp.dual, sp.dual);
    for (std::uint32_t b = 0; b < sp.words.size(); ++b)
        for (const auto& e : m.col(b)) {
            // x.v_c* has coefficient -(-1)^{p(x)p(c)} X[c][b] at v_b*
            Scalar v = -e.v;
            if (x.parity && sp.basis.parity(e.row)) v = -v;
            d.col_mut(e.row).push_back({b, v});
        }
    for (std::size_t c = 0; c < sp.words.size(); ++c) sort_column(d.col_mut(c));
    return d;
}

std::vector<SuperMatrix> qn_generator_action(int n, const ObjectWord& w) {
    std::vector<SuperMatrix> out;
    ObjectWord nw = w.normalized();
    std::vector<GradedBasis> fb;
    for (const auto& s : nw.strands) fb.push_back(s.up ? sym_basis(n, s.k) : dual_sym_basis(n, s.k));
    for (const auto& x : qn_generators(n)) {
        SuperMatrix total = SuperMatrix::zero(word_basis(n, nw), word_basis(n, nw));
        for (std::size_t f = 0; f < nw.strands.size(); ++f) {
            GradedBasis left, right;
            for (std::size_t q = 0; q < f; ++q) left = left.tensor(fb[q]);
            for (std::size_t q = f + 1; q < fb.size(); ++q) right = right.tensor(fb[q]);
            SuperMatrix xf = qn_action_on_sym(n, nw.strands[f].k, x, !nw.strands[f].up);
            SuperMatrix term = mat_tensor(mat_tensor(SuperMatrix::identity(left), xf), SuperMatrix::identity(right));
            total = mat_add(total, term);
        }
        out.push_back(std::move(total));
    }
    return out;
}

namespace {

// rho(x) per (n, word), cached for moderate dimensions
std::shared_ptr<const std::vector<SuperMatrix>> rho_cached(int n, const ObjectWord& w) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const std::vector<SuperMatrix>>> rho;
    std::string key = std::to_string(n) + "|" + w.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = rho.find(key);
        if (it != rho.end()) return it->second;
    }
    // large words: only the few most recent survive
    static std::deque<std::pair<std::string, std::shared_ptr<const std::vector<SuperMatrix>>>> recent;
    {
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& [k, v] : recent)
            if (k == key) return v;
    }
    auto v = std::make_shared<const std::vector<SuperMatrix>>(qn_generator_action(n, w));
    std::lock_guard<std::mutex> lock(mu);
    if (word_basis(n, w).dim() <= 20000) {
        rho.emplace(key, v);
    } else {
        recent.emplace_back(key, v);
        if (recent.size() > 3) recent.pop_front();
    }
    return v;
}

} // namespace

std::optional<EquivarianceFailure> check_equivariance(int n, const ObjectWord& dom, const ObjectWord& cod,
                                                      const SuperMatrix& m) {
    if (dom.has_negative() || cod.has_negative() || m.is_zero()) return std::nullopt;
    auto rd = rho_cached(n, dom);
    auto rc = rho_cached(n, cod);
    auto gens = qn_generators(n);
    for (Parity p : {Parity(0), Parity(1)}) {
        SuperMatrix mp = m.component(p);
        if (mp.is_zero()) continue;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            SuperMatrix lhs = mat_compose(mp, (*rd)[g]);
            SuperMatrix rhs = mat_compose((*rc)[g], mp);
            if (gens[g].parity && p) rhs = mat_scale(Scalar(-1), rhs);
            if (auto d = first_difference(lhs, rhs)) return EquivarianceFailure{gens[g].name(), int(p), *d};
        }
    }
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> hom_dim(int n, const ObjectWord& a, const ObjectWord& b) {
    GradedBasis A = word_basis(n, a), B = word_basis(n, b);
    const std::uint32_t da = std::uint32_t(A.dim()), db = std::uint32_t(B.dim());
    auto ra = qn_generator_action(n, a);
    auto rb = qn_generator_action(n, b);
    auto gens = qn_generators(n);
    std::size_t dims[2] = {0, 0};
    for (Parity p : {Parity(0), Parity(1)}) {
        // variables: entries (r, c) with p(r)+p(c) = p
        std::vector<std::int64_t> var(std::size_t(db) * da, -1);
        std::uint32_t nv = 0;
        for (std::uint32_t r = 0; r < db; ++r)
            for (std::uint32_t c = 0; c < da; ++c)
                if ((B.parity(r) ^ A.parity(c)) == p) var[std::size_t(r) * da + c] = nv++;
        std::vector<SparseVec> rows;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Scalar s = gens[g].parity && p ? Scalar(-1) : Scalar(1);
            // equation (r, c): sum_q M[r,q] ra[q,c] - s sum_q rb[r,q] M[q,c]
            std::vector<SparseVec> eq(std::size_t(db) * da);
            for (std::uint32_t c = 0; c < da; ++c)
                for (const auto& e : ra[g].col(c))
                    for (std::uint32_t r = 0; r < db; ++r) {
                        auto v = var[std::size_t(r) * da + e.row];
                        if (v >= 0) eq[std::size_t(r) * da + c].push_back({std::uint32_t(v), e.v});
                    }
            for (std::uint32_t q = 0; q < db; ++q)
                for (const auto& e : rb[g].col(q))
                    for (std::uint32_t c = 0; c < da; ++c) {
                        auto v = var[std::size_t(q) * da + c];
                        if (v >= 0) eq[std::size_t(e.row) * da + c].push_back({std::uint32_t(v), -(s * e.v)});
                    }
            for (auto& r : eq) {
                std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                SparseVec m;
                for (auto& t : r) {
                    if (!m.empty() && m.back().first == t.first) m.back().second += t.second;
                    else m.push_back(std::move(t));
                }
                std::erase_if(m, [](const auto& t) { return t.second.is_zero(); });
                if (!m.empty()) rows.push_back(std::move(m));
            }
        }
        dims[p] = nv - rank_of(std::move(rows));
    }
    return {dims[0], dims[1]};
}

} // namespace qweb
