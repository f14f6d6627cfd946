#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qweb/scalar.hpp"
#include "qweb/superlinalg.hpp"

namespace qweb {

constexpr int kMaxSergeevStrands = 6;

// images are 1-based: img[i-1] = sigma(i)
struct Perm {
    std::vector<int> img;

    static Perm identity(int k);
    static Perm transposition(int k, int i, int j);
    int size() const { return int(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    Perm inverse() const;
    std::string str() const;
    friend Perm operator*(const Perm& s, const Perm& t); // (s*t)(i) = s(t(i))
    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
};

std::vector<Perm> all_perms(int k); // lexicographic

struct SergeevBasisElt {
    std::uint32_t mask = 0; // bit i-1 set <=> c_i present
    Perm perm;
};

class SergeevElt {
public:
    SergeevElt() = default;
    explicit SergeevElt(int k) : k_(k) {}

    static SergeevElt one(int k);
    static SergeevElt basis(int k, std::uint32_t mask, const Perm& p, Scalar coeff = Scalar(1));
    static SergeevElt c(int k, int i);
    static SergeevElt s(int k, int i);
    static SergeevElt perm(const Perm& p);
    static SergeevElt parse(std::string_view text, int k);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::vector<std::pair<SergeevBasisElt, Scalar>> terms() const;
    // parity if homogeneous and nonzero; -1 otherwise
    int parity() const;
    Scalar coeff(std::uint32_t mask, const Perm& p) const;
    std::string str() const;

    friend SergeevElt operator+(const SergeevElt& x, const SergeevElt& y);
    friend SergeevElt operator-(const SergeevElt& x, const SergeevElt& y);
    friend SergeevElt operator*(const SergeevElt& x, const SergeevElt& y);
    friend SergeevElt operator*(const Scalar& a, const SergeevElt& x);
    SergeevElt operator-() const { return Scalar(-1) * *this; }
    friend bool operator==(const SergeevElt& x, const SergeevElt& y) { return x.k_ == y.k_ && x.terms_ == y.terms_; }
    friend bool operator!=(const SergeevElt& x, const SergeevElt& y) { return !(x == y); }

    // packed index mask * k! + rank(perm), sorted
    const std::vector<std::pair<std::uint32_t, Scalar>>& raw() const { return terms_; }

private:
    friend struct SerOps;
    int k_ = 0;
    std::vector<std::pair<std::uint32_t, Scalar>> terms_;
};

SergeevElt ser_mul(const SergeevElt& x, const SergeevElt& y);
SergeevElt tau(int i, int j, int k);
SergeevElt pi(int j, int k);
SergeevElt clasp(int k);

struct StrictPartition;
// prod_i (col(i)(col(i)+1)/2 - pi_i^2), i = 1..k over the canonical filling
SergeevElt a_lambda(const StrictPartition& la);
// prod_i prod_{c != content(i)} (c(c+1)/2 + pi_i^2)
SergeevElt content_projector(const StrictPartition& la);
SergeevElt b_lambda(const StrictPartition& la);
// content_projector * b_lambda. a_lambda * b_lambda is not quasi-idempotent once
// lambda has a second row, e.g. (2,1).
SergeevElt e_lambda(const StrictPartition& la);
// kappa with e*e = kappa*e; throws if e*e is not a multiple of e
Scalar quasi_idempotent_constant(const SergeevElt& e);

// psi on V_n^{(x)k}; basis is the k-fold tensor power of sym_basis(n,1)
SuperMatrix psi_action(const SergeevElt& x, int n);
// psi(x) applied to a single tensor basis vector (index in the product basis)
SparseVec psi_apply(const SergeevElt& x, int n, std::uint32_t index);
GradedBasis tensor_power_basis(int n, int k);

} // namespace qweb
