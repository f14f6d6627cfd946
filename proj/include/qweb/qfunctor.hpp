#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qweb/sergeev.hpp"
#include "qweb/superlinalg.hpp"
#include "qweb/web.hpp"

namespace qweb {

// Letters 0..n-1 are v_1..v_n (even), n..2n-1 are the barred v_1..v_n (odd).
using SymWord = std::vector<std::uint8_t>;

std::size_t sym_dim(int n, int k);
// Sorted words, odd letters at most once, in lex order.
const std::vector<SymWord>& sym_words(int n, int k);
GradedBasis sym_basis(int n, int k);
GradedBasis dual_sym_basis(int n, int k);
GradedBasis word_basis(int n, const ObjectWord& w);

SuperMatrix eval_dot(int n, int k);
SuperMatrix eval_merge(int n, int k, int l);
SuperMatrix eval_split(int n, int k, int l);
SuperMatrix eval_cup(int n, int k);  // 1 -> S^k (x) S^k*
SuperMatrix eval_cap(int n, int k);  // S^k* (x) S^k -> 1

// Throws TypeError if the web is ill-typed.
SuperMatrix eval_web(int n, const WebExpr& w);

// c_A sigma -> dots over the upward crossings realizing sigma
WebExpr xi_image(const SergeevElt& x);

// q(n) generators: e0_ij for all i,j (even), then e1_ij (odd), row-major in (i,j).
struct QnGenerator {
    int i, j;
    Parity parity;
    std::string name() const;
};
std::vector<QnGenerator> qn_generators(int n);
SuperMatrix qn_action_on_sym(int n, int k, const QnGenerator& x, bool dual);
std::vector<SuperMatrix> qn_generator_action(int n, const ObjectWord& w);

struct EquivarianceFailure {
    std::string generator;
    int component;
    Difference diff;
};
// M (x) rho(x) = (-1)^{p(x)p(M)} rho(x) M, per homogeneous component of M
std::optional<EquivarianceFailure> check_equivariance(int n, const ObjectWord& dom, const ObjectWord& cod,
                                                      const SuperMatrix& m);

// (even, odd) dimensions of the q(n)-equivariant maps a -> b
std::pair<std::size_t, std::size_t> hom_dim(int n, const ObjectWord& a, const ObjectWord& b);

// Drops cached generator and derived-node matrices.
void clear_eval_cache();

} // namespace qweb
