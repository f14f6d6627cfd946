#include "qweb/web.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qweb {

// ---- ObjectWord ----

ObjectWord ObjectWord::ups(const std::vector<int>& ks) {
    ObjectWord w;
    for (int k : ks) w.strands.push_back({true, k});
    return w;
}

ObjectWord ObjectWord::parse(std::string_view s) {
    ObjectWord w;
    std::size_t p = 0;
    while (p < s.size()) {
        char ch = s[p];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++p;
            continue;
        }
        bool up;
        if (ch == '^') up = true;
        else if (ch == 'v') up = false;
        else throw ParseError("expected ^ or v in object word", p);
        ++p;
        std::size_t st = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (st == p) throw ParseError("expected strand thickness", p);
        w.strands.push_back({up, std::stoi(std::string(s.substr(st, p - st)))});
    }
    return w;
}

ObjectWord ObjectWord::normalized() const {
    ObjectWord w;
    for (const auto& s : strands)
        if (s.k != 0) w.strands.push_back(s);
    return w;
}

bool ObjectWord::has_negative() const {
    for (const auto& s : strands)
        if (s.k < 0) return true;
    return false;
}

ObjectWord ObjectWord::operator+(const ObjectWord& o) const {
    ObjectWord w = *this;
    w.strands.insert(w.strands.end(), o.strands.begin(), o.strands.end());
    return w;
}

std::string ObjectWord::str() const {
    std::string s;
    for (const auto& x : normalized().strands) {
        if (!s.empty()) s += ",";
        s += (x.up ? "^" : "v") + std::to_string(x.k);
    }
    return s;
}

// ---- nodes ----

namespace {

struct OpInfo {
    Op op;
    const char* name;
    int arity; // -1: list
};

const OpInfo kOps[] = {
    {Op::Id, "id", 1},        {Op::Dot, "dot", 1},       {Op::Merge, "merge", 2},   {Op::Split, "split", 2},
    {Op::CupL, "cupL", 1},    {Op::CapL, "capL", 1},     {Op::RCross, "xr", 2},     {Op::XUp, "xup", 2},
    {Op::XL, "xl", 2},        {Op::CupR, "cupR", 1},     {Op::CapR, "capR", 1},     {Op::DDot, "ddot", 1},
    {Op::DMerge, "dmerge", 2}, {Op::DSplit, "dsplit", 2}, {Op::DCross, "dcross", 2}, {Op::Clasp, "clasp", 1},
    {Op::Perm, "perm", -1},   {Op::RungL, "rungL", 3},   {Op::RungR, "rungR", 3},   {Op::Explode, "explode", -1},
    {Op::Implode, "implode", -1},
};

const OpInfo* info(Op op) {
    for (const auto& i : kOps)
        if (i.op == op) return &i;
    return nullptr;
}

const OpInfo* info(std::string_view name) {
    for (const auto& i : kOps)
        if (name == i.name) return &i;
    return nullptr;
}

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

bool is_generator(Op op) { return op <= Op::RCross; }
bool is_derived(Op op) { return op >= Op::XUp && op <= Op::Implode; }

const char* op_name(Op op) {
    if (const OpInfo* i = info(op)) return i->name;
    switch (op) {
    case Op::Compose: return "compose";
    case Op::Tensor: return "tensor";
    case Op::Zero: return "zero";
    case Op::Lin: return "lin";
    default: return "?";
    }
}

TypeError::TypeError(const std::string& msg, std::size_t p, std::string pth)
    : std::runtime_error(msg + (p == std::string::npos ? std::string() : " at position " + std::to_string(p)) +
                         (pth.empty() ? std::string() : " (path " + pth + ")")),
      pos(p), path(std::move(pth)) {}

WebExpr make_gen(Op op, std::vector<int> args, bool up, std::size_t pos) {
    auto n = std::make_shared<WebNode>();
    n->op = op;
    n->args = std::move(args);
    n->up = up;
    n->pos = pos;
    return n;
}

WebExpr make_compose(WebExpr top, WebExpr bottom, std::size_t pos) {
    auto n = std::make_shared<WebNode>();
    n->op = Op::Compose;
    n->kids = {std::move(top), std::move(bottom)};
    n->pos = pos;
    return n;
}

WebExpr make_tensor(WebExpr left, WebExpr right, std::size_t pos) {
    auto n = std::make_shared<WebNode>();
    n->op = Op::Tensor;
    n->kids = {std::move(left), std::move(right)};
    n->pos = pos;
    return n;
}

WebExpr make_zero(ObjectWord dom, ObjectWord cod, std::size_t pos) {
    auto n = std::make_shared<WebNode>();
    n->op = Op::Zero;
    n->zdom = std::move(dom);
    n->zcod = std::move(cod);
    n->pos = pos;
    return n;
}

WebExpr make_lin(std::vector<Scalar> coeffs, std::vector<WebExpr> terms, std::size_t pos) {
    auto n = std::make_shared<WebNode>();
    n->op = Op::Lin;
    n->coeffs = std::move(coeffs);
    n->kids = std::move(terms);
    n->pos = pos;
    return n;
}

bool is_zero_web(const WebExpr& w) { return w->op == Op::Zero; }

// ---- typing ----

namespace {

ObjectWord U(std::initializer_list<int> ks) { return ObjectWord::ups(ks); }
ObjectWord D(int k) { return ObjectWord{{{false, k}}}; }
ObjectWord Up(int k) { return ObjectWord{{{true, k}}}; }

WebType leaf_type(const WebNode& n, const std::string& path) {
    const auto& a = n.args;
    auto need = [&](std::size_t c) {
        if (a.size() != c)
            throw TypeError(std::string(op_name(n.op)) + " expects " + std::to_string(c) + " arguments", n.pos, path);
    };
    for (int x : a)
        if (x < 0 && n.op != Op::Perm) throw TypeError("negative label", n.pos, path);
    switch (n.op) {
    case Op::Id: need(1); return {ObjectWord{{{n.up, a[0]}}}, ObjectWord{{{n.up, a[0]}}}};
    case Op::Dot: need(1); return {Up(a[0]), Up(a[0])};
    case Op::Merge: need(2); return {U({a[0], a[1]}), Up(a[0] + a[1])};
    case Op::Split: need(2); return {Up(a[0] + a[1]), U({a[0], a[1]})};
    case Op::CupL: need(1); return {ObjectWord{}, Up(a[0]) + D(a[0])};
    case Op::CapL: need(1); return {D(a[0]) + Up(a[0]), ObjectWord{}};
    case Op::RCross: need(2); return {Up(a[0]) + D(a[1]), D(a[1]) + Up(a[0])};
    case Op::XUp: need(2); return {U({a[0], a[1]}), U({a[1], a[0]})};
    case Op::XL: need(2); return {D(a[1]) + Up(a[0]), Up(a[0]) + D(a[1])};
    case Op::CupR: need(1); return {ObjectWord{}, D(a[0]) + Up(a[0])};
    case Op::CapR: need(1); return {Up(a[0]) + D(a[0]), ObjectWord{}};
    case Op::DDot: need(1); return {D(a[0]), D(a[0])};
    case Op::DMerge: need(2); return {D(a[0] + a[1]), D(a[0]) + D(a[1])};
    case Op::DSplit: need(2); return {D(a[0]) + D(a[1]), D(a[0] + a[1])};
    case Op::DCross: need(2); return {D(a[0]) + D(a[1]), D(a[1]) + D(a[0])};
    case Op::Clasp: {
        need(1);
        ObjectWord w = ObjectWord::ups(std::vector<int>(a[0], 1));
        return {w, w};
    }
    case Op::Perm: {
        std::vector<int> seen(a.size() + 1, 0);
        for (int x : a) {
            if (x < 1 || x > int(a.size()) || seen[x]) throw TypeError("perm arguments are not a permutation", n.pos, path);
            seen[x] = 1;
        }
        ObjectWord w = ObjectWord::ups(std::vector<int>(a.size(), 1));
        return {w, w};
    }
    case Op::RungL:
        need(3);
        if (a[2] > a[1]) throw TypeError("rung thicker than its source strand", n.pos, path);
        return {U({a[0], a[1]}), U({a[0] + a[2], a[1] - a[2]})};
    case Op::RungR:
        need(3);
        if (a[2] > a[0]) throw TypeError("rung thicker than its source strand", n.pos, path);
        return {U({a[0], a[1]}), U({a[0] - a[2], a[1] + a[2]})};
    case Op::Explode:
    case Op::Implode: {
        int tot = 0;
        for (int x : a) tot += x;
        ObjectWord thick = ObjectWord::ups(a);
        ObjectWord thin = ObjectWord::ups(std::vector<int>(tot, 1));
        return n.op == Op::Explode ? WebType{thick, thin} : WebType{thin, thick};
    }
    default: break;
    }
    throw TypeError("not a leaf", n.pos, path);
}

WebType typecheck_at(const WebExpr& w, const std::string& path) {
    const WebNode& n = *w;
    switch (n.op) {
    case Op::Compose: {
        WebType top = typecheck_at(n.kids[0], path + "0");
        WebType bot = typecheck_at(n.kids[1], path + "1");
        if (top.dom != bot.cod)
            throw TypeError("cannot compose: bottom has codomain [" + bot.cod.str() + "] but top has domain [" +
                                top.dom.str() + "]",
                            n.pos, path);
        return {bot.dom, top.cod};
    }
    case Op::Tensor: {
        WebType l = typecheck_at(n.kids[0], path + "0");
        WebType r = typecheck_at(n.kids[1], path + "1");
        return {l.dom + r.dom, l.cod + r.cod};
    }
    case Op::Zero: return {n.zdom, n.zcod};
    case Op::Lin: {
        if (n.kids.empty()) throw TypeError("empty linear combination", n.pos, path);
        WebType t = typecheck_at(n.kids[0], path + "0");
        for (std::size_t i = 1; i < n.kids.size(); ++i) {
            WebType u = typecheck_at(n.kids[i], path + std::to_string(i));
            if (u.dom.normalized() != t.dom.normalized() || u.cod.normalized() != t.cod.normalized())
                throw TypeError("summands have different types", n.pos, path);
        }
        return t;
    }
    default: return leaf_type(n, path);
    }
}

} // namespace

WebType typecheck(const WebExpr& w) {
    WebType t = typecheck_at(w, "");
    return {t.dom.normalized(), t.cod.normalized()};
}

int dot_count(const WebExpr& w) {
    if (w->op == Op::Dot || w->op == Op::DDot) return 1;
    int c = 0;
    if (w->op == Op::Lin) return w->kids.empty() ? 0 : dot_count(w->kids[0]);
    for (const auto& k : w->kids) c += dot_count(k);
    return c;
}

// ---- smart builders ----

namespace web {

namespace {
WebExpr zero_of(const WebType& t) { return make_zero(t.dom, t.cod); }
} // namespace

WebExpr id(bool up, int k) {
    if (k < 0) return make_zero(ObjectWord{{{up, k}}}, ObjectWord{{{up, k}}});
    return make_gen(Op::Id, {k}, up);
}

WebExpr id(const ObjectWord& w) {
    ObjectWord nw = w;
    if (nw.strands.empty()) return make_gen(Op::Id, {0});
    WebExpr e;
    for (const auto& s : nw.strands) {
        WebExpr f = id(s.up, s.k);
        e = e ? tensor(e, f) : f;
    }
    return e;
}

WebExpr dot(int k) {
    if (k <= 0) return make_zero(Up(k), Up(k));
    return make_gen(Op::Dot, {k});
}

WebExpr merge(int k, int l) {
    if (k < 0 || l < 0) return make_zero(U({k, l}), Up(k + l));
    if (k == 0 || l == 0) return id(true, k + l);
    return make_gen(Op::Merge, {k, l});
}

WebExpr split(int k, int l) {
    if (k < 0 || l < 0) return make_zero(Up(k + l), U({k, l}));
    if (k == 0 || l == 0) return id(true, k + l);
    return make_gen(Op::Split, {k, l});
}

WebExpr cupL(int k) {
    if (k < 0) return make_zero(ObjectWord{}, Up(k) + D(k));
    if (k == 0) return id(true, 0);
    return make_gen(Op::CupL, {k});
}

WebExpr capL(int k) {
    if (k < 0) return make_zero(D(k) + Up(k), ObjectWord{});
    if (k == 0) return id(true, 0);
    return make_gen(Op::CapL, {k});
}

WebExpr rcross(int k, int l) {
    if (k < 0 || l < 0) return make_zero(Up(k) + D(l), D(l) + Up(k));
    if (k == 0 || l == 0) return id(Up(k) + D(l));
    return make_gen(Op::RCross, {k, l});
}

namespace {
WebExpr derived2(Op op, int k, int l, const WebType& t) {
    if (k < 0 || l < 0) return zero_of(t);
    return make_gen(op, {k, l});
}
} // namespace

WebExpr xup(int k, int l) {
    if (k == 0 || l == 0) return id(U({k, l}));
    return derived2(Op::XUp, k, l, {U({k, l}), U({l, k})});
}

WebExpr xl(int k, int l) {
    if (k == 0 || l == 0) return id(D(l) + Up(k));
    return derived2(Op::XL, k, l, {D(l) + Up(k), Up(k) + D(l)});
}

WebExpr cupR(int k) {
    if (k < 0) return make_zero(ObjectWord{}, D(k) + Up(k));
    if (k == 0) return id(true, 0);
    return make_gen(Op::CupR, {k});
}

WebExpr capR(int k) {
    if (k < 0) return make_zero(Up(k) + D(k), ObjectWord{});
    if (k == 0) return id(true, 0);
    return make_gen(Op::CapR, {k});
}

WebExpr ddot(int k) {
    if (k <= 0) return make_zero(D(k), D(k));
    return make_gen(Op::DDot, {k});
}

WebExpr dmerge(int k, int l) {
    if (k == 0 || l == 0) return id(false, k + l);
    return derived2(Op::DMerge, k, l, {D(k + l), D(k) + D(l)});
}

WebExpr dsplit(int k, int l) {
    if (k == 0 || l == 0) return id(false, k + l);
    return derived2(Op::DSplit, k, l, {D(k) + D(l), D(k + l)});
}

WebExpr dcross(int k, int l) {
    if (k == 0 || l == 0) return id(D(k) + D(l));
    return derived2(Op::DCross, k, l, {D(k) + D(l), D(l) + D(k)});
}

WebExpr clasp(int k) {
    if (k <= 1) return id(true, k);
    return make_gen(Op::Clasp, {k});
}

WebExpr perm(const std::vector<int>& img) { return make_gen(Op::Perm, img); }

WebExpr rungL(int k, int l, int j) {
    if (k < 0 || l < 0 || j < 0 || j > l) return make_zero(U({k, l}), U({k + j, l - j}));
    if (j == 0) return id(U({k, l}));
    return make_gen(Op::RungL, {k, l, j});
}

WebExpr rungR(int k, int l, int j) {
    if (k < 0 || l < 0 || j < 0 || j > k) return make_zero(U({k, l}), U({k - j, l + j}));
    if (j == 0) return id(U({k, l}));
    return make_gen(Op::RungR, {k, l, j});
}

WebExpr explode(const std::vector<int>& a) { return make_gen(Op::Explode, a); }
WebExpr implode(const std::vector<int>& a) { return make_gen(Op::Implode, a); }

WebExpr compose(WebExpr top, WebExpr bottom) {
    if (is_zero_web(top) || is_zero_web(bottom)) {
        WebType t = typecheck_at(top, "");
        WebType b = typecheck_at(bottom, "");
        return make_zero(b.dom, t.cod);
    }
    if (top->op == Op::Id && top->args[0] == 0 && bottom->op == Op::Id && bottom->args[0] == 0) return top;
    return make_compose(std::move(top), std::move(bottom));
}

WebExpr compose(std::initializer_list<WebExpr> top_to_bottom) {
    std::vector<WebExpr> v(top_to_bottom);
    WebExpr acc = v.back();
    for (std::size_t i = v.size() - 1; i-- > 0;) acc = compose(v[i], acc);
    return acc;
}

WebExpr tensor(WebExpr left, WebExpr right) {
    auto is_unit = [](const WebExpr& e) { return e->op == Op::Id && e->args[0] == 0; };
    if (is_zero_web(left) || is_zero_web(right)) {
        WebType l = typecheck_at(left, "");
        WebType r = typecheck_at(right, "");
        return make_zero(l.dom + r.dom, l.cod + r.cod);
    }
    if (is_unit(left)) return right;
    if (is_unit(right)) return left;
    return make_tensor(std::move(left), std::move(right));
}

WebExpr tensor(std::initializer_list<WebExpr> left_to_right) {
    WebExpr acc;
    for (const auto& e : left_to_right) acc = acc ? tensor(acc, e) : e;
    return acc;
}

WebExpr scale(const Scalar& c, WebExpr w) {
    if (c.is_zero() || is_zero_web(w)) return zero_of(typecheck_at(w, ""));
    if (c == Scalar(1)) return w;
    return make_lin({c}, {std::move(w)});
}

WebExpr sum(const std::vector<std::pair<Scalar, WebExpr>>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty sum of webs");
    std::vector<Scalar> cs;
    std::vector<WebExpr> ws;
    for (const auto& [c, w] : terms) {
        if (c.is_zero() || is_zero_web(w)) continue;
        cs.push_back(c);
        ws.push_back(w);
    }
    if (ws.empty()) return zero_of(typecheck_at(terms.front().second, ""));
    if (ws.size() == 1 && cs[0] == Scalar(1)) return ws[0];
    return make_lin(std::move(cs), std::move(ws));
}

WebExpr perm_word(const std::vector<int>& img, bool leftmost_descent) {
    const int k = int(img.size());
    std::vector<int> s = img;
    std::vector<int> factors; // rightmost factor first
    for (;;) {
        int pick = -1;
        for (int i = 0; i + 1 < k; ++i) {
            if (s[i] > s[i + 1]) {
                pick = i;
                if (leftmost_descent) break;
            }
        }
        if (pick < 0) break;
        std::swap(s[pick], s[pick + 1]);
        factors.push_back(pick);
    }
    std::vector<int> ones(k, 1);
    WebExpr acc = id(ObjectWord::ups(ones));
    for (int f : factors) acc = compose(on_strand(ones, f, xup(1, 1), 2), acc);
    return acc;
}

WebExpr on_strand(const std::vector<int>& labels, int i, WebExpr f, int width) {
    std::vector<int> left(labels.begin(), labels.begin() + i);
    std::vector<int> right(labels.begin() + i + width, labels.end());
    return tensor({id(ObjectWord::ups(left)), std::move(f), id(ObjectWord::ups(right))});
}

} // namespace web

// ---- expansion ----

namespace {

using namespace web;

WebExpr explode_all(int k) {
    if (k <= 1) return id(true, k);
    return compose(tensor(id(true, 1), explode_all(k - 1)), split(1, k - 1));
}

WebExpr implode_all(int k) {
    if (k <= 1) return id(true, k);
    return compose(merge(1, k - 1), tensor(id(true, 1), implode_all(k - 1)));
}

WebExpr rung_e(int k, int l, int j, bool dotted) {
    if (k < 0 || l < 0 || j < 0 || j > l) return make_zero(U({k, l}), U({k + j, l - j}));
    if (j == 0) return id(U({k, l}));
    WebExpr bottom = tensor(id(true, k), split(j, l - j));
    WebExpr top = tensor(merge(k, j), id(true, l - j));
    if (!dotted) return compose(top, bottom);
    return compose({top, tensor({id(true, k), dot(j), id(true, l - j)}), bottom});
}

WebExpr rung_f(int k, int l, int j, bool dotted) {
    if (k < 0 || l < 0 || j < 0 || j > k) return make_zero(U({k, l}), U({k - j, l + j}));
    if (j == 0) return id(U({k, l}));
    WebExpr bottom = tensor(split(k - j, j), id(true, l));
    WebExpr top = tensor(id(true, k - j), merge(j, l));
    if (!dotted) return compose(top, bottom);
    return compose({top, tensor({id(true, k - j), dot(j), id(true, l)}), bottom});
}

WebExpr caps_nested(int k, int l) { // ↓k↓l↑l↑k → 1
    return compose(capL(k), tensor({id(false, k), capL(l), id(true, k)}));
}

WebExpr cups_nested(int k, int l) { // 1 → ↑k↑l↓l↓k
    return compose(tensor({id(true, k), cupL(l), id(false, k)}), cupL(k));
}

} // namespace

WebExpr expand(const WebExpr& w) {
    const auto& a = w->args;
    switch (w->op) {
    case Op::XUp: {
        int k = a[0], l = a[1];
        if (k == 1 && l == 1)
            return sum({{Scalar(1), compose(split(1, 1), merge(1, 1))}, {Scalar(-1), id(U({1, 1}))}});
        std::vector<int> img(k + l);
        for (int p = 0; p < k; ++p) img[p] = l + p + 1;
        for (int p = 0; p < l; ++p) img[k + p] = p + 1;
        WebExpr body = compose({tensor(implode_all(l), implode_all(k)), perm_word(img, true),
                                tensor(explode_all(k), explode_all(l))});
        return scale(Scalar(Rational(1, factorial(k) * factorial(l))), body);
    }
    case Op::XL: {
        int k = a[0], l = a[1];
        return compose({tensor({capL(l), id(true, k), id(false, l)}), tensor({id(false, l), xup(k, l), id(false, l)}),
                        tensor({id(false, l), id(true, k), cupL(l)})});
    }
    case Op::CupR: return compose(rcross(a[0], a[0]), cupL(a[0]));
    case Op::CapR: return compose(capL(a[0]), rcross(a[0], a[0]));
    case Op::DDot: {
        int k = a[0];
        return compose({tensor(capL(k), id(false, k)), tensor({id(false, k), dot(k), id(false, k)}),
                        tensor(id(false, k), cupL(k))});
    }
    case Op::DMerge: {
        int k = a[0], l = a[1];
        return compose({tensor({capL(k + l), id(false, k), id(false, l)}),
                        tensor({id(false, k + l), merge(l, k), id(false, k), id(false, l)}),
                        tensor(id(false, k + l), cups_nested(l, k))});
    }
    case Op::DSplit: {
        int k = a[0], l = a[1];
        return compose({tensor(caps_nested(k, l), id(false, k + l)),
                        tensor({id(false, k), id(false, l), split(l, k), id(false, k + l)}),
                        tensor({id(false, k), id(false, l), cupL(k + l)})});
    }
    case Op::DCross: {
        int k = a[0], l = a[1];
        return compose({tensor({caps_nested(k, l), id(false, l), id(false, k)}),
                        tensor({id(false, k), id(false, l), xup(k, l), id(false, l), id(false, k)}),
                        tensor({id(false, k), id(false, l), cups_nested(k, l)})});
    }
    case Op::Clasp: {
        int k = a[0];
        if (k <= 1) return id(true, k);
        return scale(Scalar(Rational(1, factorial(k))), compose(explode_all(k), implode_all(k)));
    }
    case Op::Perm: return perm_word(a, true);
    case Op::RungL: return rung_e(a[0], a[1], a[2], false);
    case Op::RungR: return rung_f(a[0], a[1], a[2], false);
    case Op::Explode:
    case Op::Implode: {
        WebExpr acc;
        for (int x : a) {
            WebExpr f = w->op == Op::Explode ? explode_all(x) : implode_all(x);
            acc = acc ? tensor(acc, f) : f;
        }
        return acc ? acc : id(true, 0);
    }
    default: return w;
    }
}

// ---- Π_m ----

std::vector<int> pi_target(const PiGen& g, const std::vector<int>& la) {
    std::vector<int> t = la;
    int i = g.i - 1;
    switch (g.kind) {
    case PiGen::E:
    case PiGen::EBar:
        t[i] += g.j;
        t[i + 1] -= g.j;
        break;
    case PiGen::F:
    case PiGen::FBar:
        t[i] -= g.j;
        t[i + 1] += g.j;
        break;
    case PiGen::HBar: break;
    }
    return t;
}

WebExpr pi_generator(int m, const PiGen& g, const std::vector<int>& la) {
    if (int(la.size()) != m) throw std::invalid_argument("weight has the wrong length");
    bool h = g.kind == PiGen::HBar;
    if (g.i < 1 || g.i > (h ? m : m - 1)) throw std::invalid_argument("generator index out of range");
    std::vector<int> tgt = pi_target(g, la);
    bool neg = false;
    for (std::size_t t = 0; t < la.size(); ++t)
        if (la[t] < 0 || tgt[t] < 0) neg = true;
    if (neg) return make_zero(ObjectWord::ups(la), ObjectWord::ups(tgt));
    int i = g.i - 1;
    WebExpr f;
    switch (g.kind) {
    case PiGen::E: f = rung_e(la[i], la[i + 1], g.j, false); break;
    case PiGen::EBar: f = rung_e(la[i], la[i + 1], g.j, true); break;
    case PiGen::F: f = rung_f(la[i], la[i + 1], g.j, false); break;
    case PiGen::FBar: f = rung_f(la[i], la[i + 1], g.j, true); break;
    case PiGen::HBar: return on_strand(la, i, dot(la[i]), 1);
    }
    if (is_zero_web(f)) return make_zero(ObjectWord::ups(la), ObjectWord::ups(tgt));
    return on_strand(la, i, f, 2);
}

WebExpr pi_word(int m, const std::vector<PiGen>& gens, const std::vector<int>& la) {
    std::vector<int> cur = la;
    WebExpr acc = id(ObjectWord::ups(la));
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        acc = compose(pi_generator(m, *it, cur), acc);
        cur = pi_target(*it, cur);
    }
    return acc;
}

// ---- DSL ----

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    WebExpr parse_all() {
        WebExpr e = expr();
        ws();
        if (p_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[p_]) + "'", p_);
        return e;
    }

private:
    std::string_view s_;
    std::size_t p_ = 0;

    void ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        ws();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p_);
    }
    int integer() {
        ws();
        std::size_t st = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (st == p_) throw ParseError("expected a nonnegative integer", p_);
        if (p_ - st > 6) throw ParseError("integer too large", st);
        return std::stoi(std::string(s_.substr(st, p_ - st)));
    }
    std::string ident() {
        ws();
        std::size_t st = p_;
        while (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (st == p_) throw ParseError("expected a generator name or '('", p_);
        return std::string(s_.substr(st, p_ - st));
    }

    WebExpr expr() {
        ws();
        std::size_t pos = p_;
        WebExpr e = term();
        while (eat(';')) e = make_compose(e, term(), pos);
        return e;
    }
    WebExpr term() {
        ws();
        std::size_t pos = p_;
        WebExpr e = factor();
        while (eat('*')) e = make_tensor(e, factor(), pos);
        return e;
    }
    ObjectWord word() {
        expect('[');
        ObjectWord w;
        ws();
        if (eat(']')) return w;
        do {
            ws();
            bool up;
            if (eat('^')) up = true;
            else if (eat('v')) up = false;
            else throw ParseError("expected ^ or v", p_);
            w.strands.push_back({up, integer()});
        } while (eat(','));
        expect(']');
        return w;
    }
    WebExpr factor() {
        ws();
        if (eat('(')) {
            WebExpr e = expr();
            expect(')');
            return e;
        }
        std::size_t pos = p_;
        std::string name = ident();
        expect('(');
        if (name == "id") {
            ws();
            bool up;
            if (eat('^')) up = true;
            else if (eat('v')) up = false;
            else throw ParseError("expected ^k or vk", p_);
            int k = integer();
            expect(')');
            return make_gen(Op::Id, {k}, up, pos);
        }
        if (name == "zero") {
            ObjectWord d = word();
            expect(',');
            ObjectWord c = word();
            expect(')');
            return make_zero(d, c, pos);
        }
        if (name == "lin") {
            std::vector<Scalar> cs;
            std::vector<WebExpr> ts;
            do {
                expect('{');
                std::size_t st = p_;
                std::size_t close = s_.find('}', p_);
                if (close == std::string_view::npos) throw ParseError("unterminated coefficient", st);
                try {
                    cs.push_back(Scalar::parse(s_.substr(st, close - st)));
                } catch (const ParseError& e) {
                    throw ParseError("bad coefficient", st + e.pos);
                }
                p_ = close + 1;
                expect(':');
                ts.push_back(expr());
            } while (eat(','));
            expect(')');
            return make_lin(std::move(cs), std::move(ts), pos);
        }
        const OpInfo* oi = info(name);
        if (!oi) throw ParseError("unknown generator '" + name + "'", pos);
        std::vector<int> args;
        ws();
        if (!(oi->arity == -1 && eat(')'))) {
            do args.push_back(integer());
            while (eat(','));
            expect(')');
        }
        if (oi->arity >= 0 && int(args.size()) != oi->arity)
            throw ParseError(name + " takes " + std::to_string(oi->arity) + " arguments", pos);
        return make_gen(oi->op, std::move(args), true, pos);
    }
};

std::string fmt(const WebExpr& w) {
    const WebNode& n = *w;
    switch (n.op) {
    case Op::Compose: {
        std::string r = fmt(n.kids[1]);
        if (n.kids[1]->op == Op::Compose) r = "(" + r + ")";
        return fmt(n.kids[0]) + " ; " + r;
    }
    case Op::Tensor: {
        std::string l = fmt(n.kids[0]);
        std::string r = fmt(n.kids[1]);
        if (n.kids[0]->op == Op::Compose) l = "(" + l + ")";
        if (n.kids[1]->op == Op::Compose || n.kids[1]->op == Op::Tensor) r = "(" + r + ")";
        return l + " * " + r;
    }
    case Op::Zero: {
        auto wd = [](const ObjectWord& o) {
            std::string s = "[";
            for (std::size_t i = 0; i < o.strands.size(); ++i) {
                if (i) s += ",";
                s += (o.strands[i].up ? "^" : "v") + std::to_string(o.strands[i].k);
            }
            return s + "]";
        };
        return "zero(" + wd(n.zdom) + "," + wd(n.zcod) + ")";
    }
    case Op::Lin: {
        std::string s = "lin(";
        for (std::size_t i = 0; i < n.kids.size(); ++i) {
            if (i) s += ", ";
            s += "{" + n.coeffs[i].str() + "}: " + fmt(n.kids[i]);
        }
        return s + ")";
    }
    case Op::Id: return std::string("id(") + (n.up ? "^" : "v") + std::to_string(n.args[0]) + ")";
    default: {
        std::string s = std::string(op_name(n.op)) + "(";
        for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(n.args[i]);
        }
        return s + ")";
    }
    }
}

} // namespace

WebExpr parse_dsl(std::string_view text) { return Parser(text).parse_all(); }

std::string format_dsl(const WebExpr& w) { return fmt(w); }

nlohmann::json to_json(const WebExpr& w) {
    const WebNode& n = *w;
    nlohmann::json j;
    j["op"] = op_name(n.op);
    switch (n.op) {
    case Op::Compose:
        j["top"] = to_json(n.kids[0]);
        j["bottom"] = to_json(n.kids[1]);
        break;
    case Op::Tensor:
        j["left"] = to_json(n.kids[0]);
        j["right"] = to_json(n.kids[1]);
        break;
    case Op::Zero:
        j["domain"] = n.zdom.str();
        j["codomain"] = n.zcod.str();
        break;
    case Op::Lin: {
        nlohmann::json terms = nlohmann::json::array();
        for (std::size_t i = 0; i < n.kids.size(); ++i)
            terms.push_back({{"coeff", n.coeffs[i].str()}, {"web", to_json(n.kids[i])}});
        j["terms"] = terms;
        break;
    }
    case Op::Id:
        j["orientation"] = n.up ? "up" : "down";
        j["args"] = n.args;
        break;
    default: j["args"] = n.args;
    }
    if (n.op != Op::Lin && n.op != Op::Zero) {
        try {
            WebType t = typecheck(w);
            j["domain"] = t.dom.str();
            j["codomain"] = t.cod.str();
        } catch (const TypeError&) {
        }
    }
    return j;
}

} // namespace qweb
