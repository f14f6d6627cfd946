#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qweb/scalar.hpp"

namespace qweb {

using Parity = std::uint8_t; // 0 even, 1 odd

// One tensor factor of a basis, shared between all bases that contain it.
struct BasisFactor {
    std::string key;
    std::vector<std::string> labels;
    std::vector<Parity> parity;
};

// Ordered graded basis. Products keep their factor list, so tensoring is
// associative on the nose and labels are only materialized on request.
class GradedBasis {
public:
    GradedBasis(); // the unit object, one even vector
    explicit GradedBasis(std::shared_ptr<const BasisFactor> f);
    static GradedBasis simple(std::vector<std::string> labels, std::vector<Parity> parity);

    GradedBasis tensor(const GradedBasis& o) const;

    std::size_t dim() const { return par_->size(); }
    Parity parity(std::size_t i) const { return (*par_)[i]; }
    std::string label(std::size_t i) const;
    const std::vector<std::shared_ptr<const BasisFactor>>& factors() const { return factors_; }
    std::string key() const;

    friend bool operator==(const GradedBasis& x, const GradedBasis& y);
    friend bool operator!=(const GradedBasis& x, const GradedBasis& y) { return !(x == y); }

private:
    std::vector<std::shared_ptr<const BasisFactor>> factors_;
    std::shared_ptr<const std::vector<Parity>> par_;
};

struct Entry {
    std::uint32_t row;
    Scalar v;
};
using Column = std::vector<Entry>; // sorted by row, no zeros

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("singular matrix") {}
};

class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(GradedBasis dom, GradedBasis cod);

    static SuperMatrix identity(const GradedBasis& b);
    static SuperMatrix zero(const GradedBasis& dom, const GradedBasis& cod) { return SuperMatrix(dom, cod); }

    const GradedBasis& domain() const { return dom_; }
    const GradedBasis& codomain() const { return cod_; }
    std::size_t rows() const { return cod_.dim(); }
    std::size_t cols() const { return dom_.dim(); }
    const Column& col(std::size_t j) const { return cols_[j]; }
    Column& col_mut(std::size_t j) { return cols_[j]; }
    void set_col(std::size_t j, Column c) { cols_[j] = std::move(c); }

    Scalar at(std::size_t r, std::size_t c) const;
    void add_to(std::size_t r, std::size_t c, const Scalar& v);
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    // homogeneous component of the given parity
    SuperMatrix component(Parity p) const;
    // parity if homogeneous and nonzero
    std::optional<Parity> parity() const;

    nlohmann::json to_json() const;

    friend bool operator==(const SuperMatrix& x, const SuperMatrix& y);

private:
    GradedBasis dom_, cod_;
    std::vector<Column> cols_;
};

SuperMatrix mat_compose(const SuperMatrix& g, const SuperMatrix& f);
SuperMatrix mat_tensor(const SuperMatrix& f, const SuperMatrix& g);
SuperMatrix mat_add(const SuperMatrix& f, const SuperMatrix& g);
SuperMatrix mat_scale(const Scalar& s, const SuperMatrix& f);
SuperMatrix mat_identity(const GradedBasis& b);
SuperMatrix mat_inverse(const SuperMatrix& f);
std::size_t mat_rank(const SuperMatrix& f);
Scalar supertrace(const SuperMatrix& f);

struct Difference {
    std::size_t row, col;
    Scalar lhs, rhs;
};
std::optional<Difference> first_difference(const SuperMatrix& x, const SuperMatrix& y);

// Sparse row over an index set; entries sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x); // y += a x

// Reduced row echelon form in place. Returns pivot column per surviving row.
std::vector<std::uint32_t> row_reduce(std::vector<SparseVec>& rows);

std::size_t rank_of(std::vector<SparseVec> rows);

// Basis of {x : r.x = 0 for every row r}, x in k^ncols.
std::vector<SparseVec> solve_null(std::vector<SparseVec> rows, std::size_t ncols);

} // namespace qweb
