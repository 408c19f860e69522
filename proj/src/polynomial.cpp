#include "aromatic/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace aromatic {

Polynomial Polynomial::constant(int dim, const Rat& c) {
    Polynomial p(dim);
    p.add_term(Exps(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    if (i < 0 || i >= dim) throw std::invalid_argument("variable index out of range");
    Exps e(dim, 0);
    e[i] = 1;
    return monomial(dim, e, 1);
}

Polynomial Polynomial::monomial(int dim, Exps e, const Rat& c) {
    Polynomial p(dim);
    p.add_term(e, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void Polynomial::add_term(const Exps& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    Polynomial r(dim_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Exps e(dim_);
            for (int i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(dim_);
    if (c == 0) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int i) const {
    Polynomial r(dim_);
    for (auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

Rat Polynomial::eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rat s = 0;
    for (auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
    if (static_cast<int>(subs.size()) != dim_)
        throw std::invalid_argument("substitution list has wrong length");
    const int out_dim = subs.empty() ? 0 : subs[0].dim();
    Polynomial r(out_dim);
    for (auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(out_dim, c);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * subs[i];
        r += t;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

PolyVectorField::PolyVectorField(int dim) : dim_(dim), comps_(dim, Polynomial(dim)) {}

PolyVectorField::PolyVectorField(int dim, std::vector<Polynomial> components)
    : dim_(dim), comps_(std::move(components)) {
    if (static_cast<int>(comps_.size()) != dim_)
        throw std::invalid_argument("component count must equal dimension");
    for (auto& p : comps_)
        if (p.dim() != dim_) throw std::invalid_argument("component dimension mismatch");
}

bool PolyVectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    PolyVectorField r(dim_);
    for (int i = 0; i < dim_; ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    PolyVectorField r(dim_);
    for (int i = 0; i < dim_; ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

PolyVectorField PolyVectorField::operator*(const Rat& c) const {
    PolyVectorField r(dim_);
    for (int i = 0; i < dim_; ++i) r.comps_[i] = comps_[i] * c;
    return r;
}

bool PolyVectorField::operator==(const PolyVectorField& o) const {
    return dim_ == o.dim_ && comps_ == o.comps_;
}

std::vector<Rat> PolyVectorField::eval(const std::vector<Rat>& x) const {
    std::vector<Rat> r;
    r.reserve(dim_);
    for (auto& p : comps_) r.push_back(p.eval(x));
    return r;
}

AffineMap::AffineMap(std::vector<std::vector<Rat>> matrix, std::vector<Rat> offset)
    : matrix_(std::move(matrix)), offset_(std::move(offset)) {
    if (matrix_.size() != offset_.size())
        throw std::invalid_argument("matrix row count must match offset length");
    cols_ = matrix_.empty() ? 0 : static_cast<int>(matrix_[0].size());
    for (auto& row : matrix_)
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged matrix");
}

AffineMap AffineMap::identity(int n) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return AffineMap(std::move(m), std::vector<Rat>(n, Rat(0)));
}

AffineMap AffineMap::linear(std::vector<std::vector<Rat>> matrix) {
    std::vector<Rat> b(matrix.size(), Rat(0));
    return AffineMap(std::move(matrix), std::move(b));
}

std::vector<Rat> AffineMap::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("affine map applied to wrong dimension");
    std::vector<Rat> y(rows(), Rat(0));
    for (int i = 0; i < rows(); ++i) {
        y[i] = offset_[i];
        for (int j = 0; j < cols_; ++j) y[i] += matrix_[i][j] * x[j];
    }
    return y;
}

std::vector<Polynomial> AffineMap::as_substitution() const {
    std::vector<Polynomial> subs;
    subs.reserve(rows());
    for (int i = 0; i < rows(); ++i) {
        Polynomial p = Polynomial::constant(cols_, offset_[i]);
        for (int j = 0; j < cols_; ++j)
            p += Polynomial::variable(cols_, j) * matrix_[i][j];
        subs.push_back(p);
    }
    return subs;
}

}  // namespace aromatic
