#include "sumcat/poly.hpp"

#include <stdexcept>

namespace sumcat {

AffineMap AffineMap::identity(int dim) {
    AffineMap m;
    m.in = dim;
    m.mat.assign(dim, std::vector<int64_t>(dim, 0));
    m.off.assign(dim, 0);
    for (int i = 0; i < dim; ++i) m.mat[i][i] = 1;
    return m;
}

AffineMap AffineMap::constant(std::vector<int64_t> value, int in_dim) {
    AffineMap m;
    m.in = in_dim;
    m.mat.assign(value.size(), std::vector<int64_t>(in_dim, 0));
    m.off = std::move(value);
    return m;
}

AffineMap AffineMap::block(const AffineMap& f, const AffineMap& g) {
    AffineMap m;
    m.in = f.in_dim() + g.in_dim();
    m.off.reserve(f.out_dim() + g.out_dim());
    for (int r = 0; r < f.out_dim(); ++r) {
        std::vector<int64_t> row(m.in, 0);
        for (int c = 0; c < f.in_dim(); ++c) row[c] = f.mat[r][c];
        m.mat.push_back(std::move(row));
        m.off.push_back(f.off[r]);
    }
    for (int r = 0; r < g.out_dim(); ++r) {
        std::vector<int64_t> row(m.in, 0);
        for (int c = 0; c < g.in_dim(); ++c) row[f.in_dim() + c] = g.mat[r][c];
        m.mat.push_back(std::move(row));
        m.off.push_back(g.off[r]);
    }
    return m;
}

AffineMap AffineMap::swap_blocks(int a, int b) {
    AffineMap m;
    m.in = a + b;
    m.mat.assign(a + b, std::vector<int64_t>(a + b, 0));
    m.off.assign(a + b, 0);
    for (int i = 0; i < b; ++i) m.mat[i][a + i] = 1;
    for (int i = 0; i < a; ++i) m.mat[b + i][i] = 1;
    return m;
}

std::vector<int64_t> AffineMap::apply(const std::vector<int64_t>& n) const {
    if (static_cast<int>(n.size()) != in) throw std::invalid_argument("AffineMap::apply: dimension");
    std::vector<int64_t> r = off;
    for (int i = 0; i < out_dim(); ++i)
        for (int j = 0; j < in; ++j) r[i] += mat[i][j] * n[j];
    return r;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
    if (inner.out_dim() != in) throw std::invalid_argument("AffineMap::after: dimension");
    AffineMap r;
    r.in = inner.in_dim();
    r.mat.assign(out_dim(), std::vector<int64_t>(r.in, 0));
    r.off = off;
    for (int i = 0; i < out_dim(); ++i) {
        for (int j = 0; j < in; ++j) {
            if (mat[i][j] == 0) continue;
            r.off[i] += mat[i][j] * inner.off[j];
            for (int k = 0; k < r.in; ++k) r.mat[i][k] += mat[i][j] * inner.mat[j][k];
        }
    }
    return r;
}

AffineMap AffineMap::inverse() const {
    int n = out_dim();
    if (n != in) throw NotInvertible("AffineMap::inverse: not square");
    // Gauss-Jordan over Q, then demand an integer result.
    std::vector<std::vector<QQ>> a(n, std::vector<QQ>(2 * n, QQ(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = mat[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw NotInvertible("AffineMap::inverse: singular");
        std::swap(a[piv], a[col]);
        QQ inv = QQ(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            QQ f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    AffineMap r;
    r.in = n;
    r.mat.assign(n, std::vector<int64_t>(n, 0));
    r.off.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!q_is_integer(a[i][n + j])) throw NotInvertible("AffineMap::inverse: not unimodular");
            r.mat[i][j] = q_to_i64(a[i][n + j]);
        }
    // b' = -A^{-1} b
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.off[i] -= r.mat[i][j] * off[j];
    return r;
}

ExpPoly::ExpPoly(int nvars) : nvars_(nvars), c0_(0) {
    lin_.assign(nvars, QQ(0));
    quad_.assign(static_cast<size_t>(nvars) * (nvars + 1) / 2, QQ(0));
}

size_t ExpPoly::idx(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle: row i starts at i*nvars - i(i-1)/2
    return static_cast<size_t>(i) * nvars_ - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
}

ExpPoly ExpPoly::constant(const QQ& c, int nvars) {
    ExpPoly p(nvars);
    p.c0_ = c;
    return p;
}

ExpPoly ExpPoly::variable(int i, int nvars) {
    ExpPoly p(nvars);
    p.lin_[i] = 1;
    return p;
}

ExpPoly ExpPoly::add(const ExpPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ExpPoly::add: nvars");
    ExpPoly r = *this;
    r.c0_ += o.c0_;
    for (int i = 0; i < nvars_; ++i) r.lin_[i] += o.lin_[i];
    for (size_t k = 0; k < quad_.size(); ++k) r.quad_[k] += o.quad_[k];
    return r;
}

ExpPoly ExpPoly::sub(const ExpPoly& o) const { return add(o.neg()); }

ExpPoly ExpPoly::neg() const { return scale(QQ(-1)); }

ExpPoly ExpPoly::scale(const QQ& r) const {
    ExpPoly p = *this;
    p.c0_ *= r;
    for (auto& c : p.lin_) c *= r;
    for (auto& c : p.quad_) c *= r;
    return p;
}

ExpPoly ExpPoly::add_const(const QQ& r) const {
    ExpPoly p = *this;
    p.c0_ += r;
    return p;
}

ExpPoly ExpPoly::mul(const ExpPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ExpPoly::mul: nvars");
    auto deg = [](const ExpPoly& p) {
        int d = 0;
        for (const auto& c : p.lin_)
            if (c != 0) d = 1;
        for (const auto& c : p.quad_)
            if (c != 0) d = 2;
        return d;
    };
    if (deg(*this) + deg(o) > 2) throw std::invalid_argument("ExpPoly::mul: degree > 2");
    ExpPoly r(nvars_);
    r.c0_ = c0_ * o.c0_;
    for (int i = 0; i < nvars_; ++i) r.lin_[i] = c0_ * o.lin_[i] + o.c0_ * lin_[i];
    for (size_t k = 0; k < quad_.size(); ++k) r.quad_[k] = c0_ * o.quad_[k] + o.c0_ * quad_[k];
    for (int i = 0; i < nvars_; ++i)
        for (int j = 0; j < nvars_; ++j) {
            QQ c = lin_[i] * o.lin_[j];
            if (c != 0) r.quad_[idx(std::min(i, j), std::max(i, j))] += c;
        }
    return r;
}

QQ ExpPoly::eval(const std::vector<int64_t>& n) const {
    if (static_cast<int>(n.size()) != nvars_) throw std::invalid_argument("ExpPoly::eval: dimension");
    QQ v = c0_;
    for (int i = 0; i < nvars_; ++i) {
        if (lin_[i] != 0) v += lin_[i] * n[i];
        for (int j = i; j < nvars_; ++j) {
            const QQ& q = quad_[idx(i, j)];
            if (q != 0) v += q * n[i] * n[j];
        }
    }
    return v;
}

ExpPoly ExpPoly::substitute(const AffineMap& inner) const {
    if (inner.out_dim() != nvars_) throw std::invalid_argument("ExpPoly::substitute: dimension");
    int m = inner.in_dim();
    // affine forms for each original variable
    std::vector<ExpPoly> var(nvars_, ExpPoly(m));
    for (int i = 0; i < nvars_; ++i) {
        var[i].c0_ = inner.off[i];
        for (int j = 0; j < m; ++j) var[i].lin_[j] = inner.mat[i][j];
    }
    ExpPoly r = ExpPoly::constant(c0_, m);
    for (int i = 0; i < nvars_; ++i) {
        if (lin_[i] != 0) r = r.add(var[i].scale(lin_[i]));
        for (int j = i; j < nvars_; ++j) {
            const QQ& q = quad_[idx(i, j)];
            if (q != 0) r = r.add(var[i].mul(var[j]).scale(q));
        }
    }
    return r;
}

bool ExpPoly::is_zero_mod2() const {
    if (!q_is_even_integer(c0_)) return false;
    for (int i = 0; i < nvars_; ++i) {
        const QQ& a = quad_[idx(i, i)];
        const QQ& c = lin_[i];
        if (!q_is_integer(a) || !q_is_integer(c)) return false;
        if (!q_is_even_integer(a + c)) return false;
        for (int j = i + 1; j < nvars_; ++j)
            if (!q_is_even_integer(quad_[idx(i, j)])) return false;
    }
    return true;
}

std::optional<QQ> ExpPoly::constant_mod2() const {
    ExpPoly p = *this;
    p.c0_ = 0;
    // p - c0 must vanish mod 2 including its (zero) constant term
    if (!p.is_zero_mod2()) return std::nullopt;
    return q_mod2(c0_);
}

}  // namespace sumcat
