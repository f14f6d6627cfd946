#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qweb/scalar.hpp"

namespace qweb {

struct Strand {
    bool up = true;
    int k = 0;
    friend bool operator==(const Strand& a, const Strand& b) { return a.up == b.up && a.k == b.k; }
};

struct ObjectWord {
    std::vector<Strand> strands;

    static ObjectWord ups(const std::vector<int>& ks);
    static ObjectWord parse(std::string_view s); // "^1 ^2 v3", "" for the unit
    ObjectWord normalized() const;               // zero strands dropped
    bool has_negative() const;
    ObjectWord operator+(const ObjectWord& o) const;
    std::string str() const;
    friend bool operator==(const ObjectWord& a, const ObjectWord& b) {
        return a.normalized().strands == b.normalized().strands;
    }
    friend bool operator!=(const ObjectWord& a, const ObjectWord& b) { return !(a == b); }
};

enum class Op {
    // generators
    Id, Dot, Merge, Split, CupL, CapL, RCross,
    // derived
    XUp, XL, CupR, CapR, DDot, DMerge, DSplit, DCross, Clasp, Perm, RungL, RungR, Explode, Implode,
    // structure
    Compose, Tensor, Zero, Lin
};

bool is_generator(Op op);
bool is_derived(Op op);
const char* op_name(Op op);

struct WebNode;
using WebExpr = std::shared_ptr<const WebNode>;

struct WebNode {
    Op op;
    std::vector<int> args;       // generator / derived parameters
    bool up = true;              // Id orientation
    std::vector<WebExpr> kids;   // Compose: {top, bottom}; Tensor: {left, right}; Lin: terms
    std::vector<Scalar> coeffs;  // Lin
    ObjectWord zdom, zcod;       // Zero
    std::size_t pos = std::string::npos;
};

struct WebType {
    ObjectWord dom, cod;
};

struct TypeError : std::runtime_error {
    std::size_t pos;
    std::string path;
    TypeError(const std::string& msg, std::size_t p, std::string pth);
};

// Raw node constructors, no simplification.
WebExpr make_gen(Op op, std::vector<int> args, bool up = true, std::size_t pos = std::string::npos);
WebExpr make_compose(WebExpr top, WebExpr bottom, std::size_t pos = std::string::npos);
WebExpr make_tensor(WebExpr left, WebExpr right, std::size_t pos = std::string::npos);
WebExpr make_zero(ObjectWord dom, ObjectWord cod, std::size_t pos = std::string::npos);
WebExpr make_lin(std::vector<Scalar> coeffs, std::vector<WebExpr> terms, std::size_t pos = std::string::npos);

WebType typecheck(const WebExpr& w);
int dot_count(const WebExpr& w);
bool is_zero_web(const WebExpr& w);

// Smart builders: zero labels become identities, negative labels and zero
// operands propagate to Zero.
namespace web {
WebExpr id(bool up, int k);
WebExpr id(const ObjectWord& w);
WebExpr dot(int k);
WebExpr merge(int k, int l);
WebExpr split(int k, int l);
WebExpr cupL(int k);
WebExpr capL(int k);
WebExpr rcross(int k, int l);
WebExpr xup(int k, int l);
WebExpr xl(int k, int l);
WebExpr cupR(int k);
WebExpr capR(int k);
WebExpr ddot(int k);
WebExpr dmerge(int k, int l);
WebExpr dsplit(int k, int l);
WebExpr dcross(int k, int l);
WebExpr clasp(int k);
WebExpr perm(const std::vector<int>& img); // 1-based images
WebExpr rungL(int k, int l, int j);
WebExpr rungR(int k, int l, int j);
WebExpr explode(const std::vector<int>& a);
WebExpr implode(const std::vector<int>& a);
WebExpr compose(WebExpr top, WebExpr bottom);
WebExpr compose(std::initializer_list<WebExpr> top_to_bottom);
WebExpr tensor(WebExpr left, WebExpr right);
WebExpr tensor(std::initializer_list<WebExpr> left_to_right);
WebExpr scale(const Scalar& c, WebExpr w);
WebExpr sum(const std::vector<std::pair<Scalar, WebExpr>>& terms);

// Crossing built from a chosen reduced word (descents taken from the left or right).
WebExpr perm_word(const std::vector<int>& img, bool leftmost_descent);
// A single strand operation within a word of up strands.
WebExpr on_strand(const std::vector<int>& labels, int i, WebExpr f, int width = 1);
} // namespace web

// Derived nodes expand to generator-level expressions.
WebExpr expand(const WebExpr& w);

// Π_m: images of divided-power generators on ↑λ.
struct PiGen {
    enum Kind { E, F, EBar, FBar, HBar } kind;
    int i = 1; // 1-based
    int j = 1; // divided power
};
WebExpr pi_generator(int m, const PiGen& g, const std::vector<int>& lambda);
std::vector<int> pi_target(const PiGen& g, const std::vector<int>& lambda);
// x_1 x_2 ... x_r 1_λ, the rightmost generator acts first
WebExpr pi_word(int m, const std::vector<PiGen>& gens, const std::vector<int>& lambda);

WebExpr parse_dsl(std::string_view text);
std::string format_dsl(const WebExpr& w);
nlohmann::json to_json(const WebExpr& w);

} // namespace qweb
