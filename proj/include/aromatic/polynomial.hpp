#pragma once

#include <map>
#include <string>
#include <vector>

#include "aromatic/rational.hpp"

namespace aromatic {

/// Multivariate polynomial with exact rational coefficients, stored as a
/// normal form: exponent vector -> nonzero coefficient. Equality of normal
/// forms decides polynomial identity; no sampling anywhere.
class Polynomial {
public:
    using Exps = std::vector<int>;

    explicit Polynomial(int dim = 0) : dim_(dim) {}

    static Polynomial constant(int dim, const Rat& c);
    static Polynomial variable(int dim, int i);  // x_i, 0-based
    static Polynomial monomial(int dim, Exps e, const Rat& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    const std::map<Exps, Rat>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;

    Polynomial derivative(int i) const;
    Rat eval(const std::vector<Rat>& x) const;

    /// Substitute x_i -> subs[i]; subs must have dim() entries, all of a
    /// common dimension.
    Polynomial substitute(const std::vector<Polynomial>& subs) const;

    std::string str() const;  // human-readable, for diagnostics

private:
    int dim_;
    std::map<Exps, Rat> terms_;
};

class AffineMap;

/// Vector of dim() polynomials over dim() variables.
class PolyVectorField {
public:
    explicit PolyVectorField(int dim = 0);
    PolyVectorField(int dim, std::vector<Polynomial> components);

    static PolyVectorField zero(int dim) { return PolyVectorField(dim); }

    int dim() const { return dim_; }
    bool is_zero() const;
    const Polynomial& operator[](int i) const { return comps_[i]; }
    Polynomial& operator[](int i) { return comps_[i]; }

    PolyVectorField operator+(const PolyVectorField& o) const;
    PolyVectorField operator-(const PolyVectorField& o) const;
    PolyVectorField operator*(const Rat& c) const;
    bool operator==(const PolyVectorField& o) const;

    std::vector<Rat> eval(const std::vector<Rat>& x) const;

private:
    int dim_;
    std::vector<Polynomial> comps_;
};

/// x -> Ax + b with A an m-by-n exact rational matrix.
class AffineMap {
public:
    AffineMap(std::vector<std::vector<Rat>> matrix, std::vector<Rat> offset);

    static AffineMap identity(int n);
    static AffineMap linear(std::vector<std::vector<Rat>> matrix);

    int rows() const { return static_cast<int>(offset_.size()); }
    int cols() const { return cols_; }
    const Rat& a(int i, int j) const { return matrix_[i][j]; }
    const Rat& b(int i) const { return offset_[i]; }

    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    /// The affine substitution x_i -> sum_j A_ij y_j + b_i as polynomials
    /// in the source variables.
    std::vector<Polynomial> as_substitution() const;

private:
    std::vector<std::vector<Rat>> matrix_;
    std::vector<Rat> offset_;
    int cols_;
};

}  // namespace aromatic
