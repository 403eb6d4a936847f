#include "repkit/matrix.hpp"

#include <algorithm>
#include <utility>

namespace repkit {

namespace {

struct PrimeOps {
    using T = std::uint64_t;
    const Field* f;
    std::uint64_t p;
    explicit PrimeOps(const Field& fld) : f(&fld), p(fld.characteristic()) {}
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(T a) { return a == 0; }
    T add(T a, T b) const {
        T s = a + b;
        return s >= p ? s - p : s;
    }
    T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % p); }
    T inv(T a) const { return f->inv(a); }
    void sub_mul(T& y, T a, T x) const { y = sub(y, mul(a, x)); }
    void add_mul(T& y, T a, T x) const { y = add(y, mul(a, x)); }
};

struct ExtOps {
    using T = std::uint64_t;
    const Field* f;
    explicit ExtOps(const Field& fld) : f(&fld) {}
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(T a) { return a == 0; }
    T add(T a, T b) const { return f->add(a, b); }
    T sub(T a, T b) const { return f->sub(a, b); }
    T neg(T a) const { return f->neg(a); }
    T mul(T a, T b) const { return f->mul(a, b); }
    T inv(T a) const { return f->inv(a); }
    void sub_mul(T& y, T a, T x) const { y = sub(y, mul(a, x)); }
    void add_mul(T& y, T a, T x) const { y = add(y, mul(a, x)); }
};

struct RatOps {
    using T = mpq_class;
    explicit RatOps(const Field&) {}
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T neg(const T& a) { return -a; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T inv(const T& a) {
        if (sgn(a) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in Q");
        return 1 / a;
    }
    static void sub_mul(T& y, const T& a, const T& x) { y -= a * x; }
    static void add_mul(T& y, const T& a, const T& x) { y += a * x; }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
    switch (f.kind()) {
        case FieldKind::Prime: return fn(PrimeOps(f));
        case FieldKind::PrimePower: return fn(ExtOps(f));
        case FieldKind::Rational: break;
    }
    return fn(RatOps(f));
}

template <class Ops>
std::vector<typename Ops::T>& raw(Mat& m) {
    return std::get<std::vector<typename Ops::T>>(m.storage());
}

template <class Ops>
const std::vector<typename Ops::T>& raw(const Mat& m) {
    return std::get<std::vector<typename Ops::T>>(m.storage());
}

template <class Ops>
typename Ops::T to_raw(const Scalar& s) {
    if constexpr (std::is_same_v<typename Ops::T, mpq_class>)
        return s.rational();
    else
        return s.code();
}

template <class Ops>
Scalar from_raw(const Field& f, const typename Ops::T& v) {
    if constexpr (std::is_same_v<typename Ops::T, mpq_class>)
        return Scalar::from_rational(f, v);
    else
        return Scalar::from_code(f, v);
}

// In-place reduced row echelon form; pivots restricted to columns < col_limit.
template <class Ops>
std::vector<std::size_t> rref_inplace(const Ops& ops, std::vector<typename Ops::T>& d, std::size_t rows,
                                      std::size_t cols, std::size_t col_limit) {
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!Ops::is_zero(d[i * cols + c])) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(d.begin() + piv * cols, d.begin() + (piv + 1) * cols, d.begin() + r * cols);
        T* prow = d.data() + r * cols;
        const T inv = ops.inv(prow[c]);
        nz.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (Ops::is_zero(prow[j])) continue;
            prow[j] = ops.mul(prow[j], inv);
            nz.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            T* row = d.data() + i * cols;
            if (Ops::is_zero(row[c])) continue;
            const T factor = row[c];
            for (std::size_t j : nz) ops.sub_mul(row[j], factor, prow[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

void check_shape(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::ShapeMismatch, what);
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols) : field_(&f), rows_(rows), cols_(cols) {
    if (f.is_finite())
        data_ = std::vector<std::uint64_t>(rows * cols, 0);
    else
        data_ = std::vector<mpq_class>(rows * cols);
}

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Mat Mat::from_ints(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> entries) {
    check_shape(entries.size() == rows * cols, "entry count does not match shape");
    Mat m(f, rows, cols);
    std::size_t k = 0;
    for (auto v : entries) {
        m.set(k / cols, k % cols, Scalar::from_int(f, v));
        ++k;
    }
    return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Mat m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_shape(rows[i].size() == nc, "ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, Scalar::from_int(f, rows[i][j]));
    }
    return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    const std::size_t nc = rows.empty() ? cols : rows[0].size();
    Mat m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_shape(rows[i].size() == nc, "ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Mat Mat::column(const std::vector<Scalar>& entries, const Field& f) {
    Mat m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
    check_shape(r < rows_ && c < cols_, "matrix index out of range");
    return with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        return from_raw<Ops>(*field_, raw<Ops>(*this)[r * cols_ + c]);
    });
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
    check_shape(r < rows_ && c < cols_, "matrix index out of range");
    check_same_field(*field_, v.field());
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        raw<Ops>(*this)[r * cols_ + c] = to_raw<Ops>(v);
    });
}

bool Mat::entry_is_zero(std::size_t r, std::size_t c) const {
    return with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        return Ops::is_zero(raw<Ops>(*this)[r * cols_ + c]);
    });
}

bool Mat::is_zero() const {
    return with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& d = raw<Ops>(*this);
        return std::all_of(d.begin(), d.end(), [](const auto& v) { return Ops::is_zero(v); });
    });
}

Mat Mat::transpose() const {
    Mat t(*field_, cols_, rows_);
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = raw<Ops>(*this);
        auto& d = raw<Ops>(t);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) d[j * rows_ + i] = s[i * cols_ + j];
    });
    return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    check_shape(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Mat b(*field_, nr, nc);
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = raw<Ops>(*this);
        auto& d = raw<Ops>(b);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = s[(r0 + i) * cols_ + c0 + j];
    });
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    check_same_field(*field_, b.field());
    check_shape(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = raw<Ops>(b);
        auto& d = raw<Ops>(*this);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = s[i * b.cols_ + j];
    });
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
    Mat out(*field_, rows_, idx.size());
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = raw<Ops>(*this);
        auto& d = raw<Ops>(out);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            check_shape(idx[j] < cols_, "column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) d[i * idx.size() + j] = s[i * cols_ + idx[j]];
        }
    });
    return out;
}

Mat Mat::vectorize() const {
    Mat v = *this;
    v.rows_ = rows_ * cols_;
    v.cols_ = 1;
    return v;
}

Mat Mat::reshape(std::size_t rows, std::size_t cols) const {
    check_shape(rows * cols == rows_ * cols_, "reshape changes the entry count");
    Mat v = *this;
    v.rows_ = rows;
    v.cols_ = cols;
    return v;
}

Scalar Mat::trace() const {
    check_shape(is_square(), "trace of a non-square matrix");
    Scalar t = Scalar::zero(*field_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Mat& Mat::operator+=(const Mat& o) {
    check_same_field(*field_, o.field());
    check_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum of different shapes");
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& d = raw<Ops>(*this);
        const auto& s = raw<Ops>(o);
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = ops.add(d[k], s[k]);
    });
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_same_field(*field_, o.field());
    check_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference of different shapes");
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& d = raw<Ops>(*this);
        const auto& s = raw<Ops>(o);
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = ops.sub(d[k], s[k]);
    });
    return *this;
}

Mat& Mat::operator*=(const Scalar& c) {
    check_same_field(*field_, c.field());
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto cv = to_raw<Ops>(c);
        for (auto& v : raw<Ops>(*this)) v = ops.mul(v, cv);
    });
    return *this;
}

Mat Mat::operator-() const {
    Mat out = *this;
    with_ops(*field_, [&](auto ops) {
        using Ops = decltype(ops);
        for (auto& v : raw<Ops>(out)) v = ops.neg(v);
    });
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    check_same_field(a.field(), b.field());
    check_shape(a.cols() == b.rows(), "matrix product of incompatible shapes");
    Mat c(a.field(), a.rows(), b.cols());
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    with_ops(a.field(), [&](auto ops) {
        using Ops = decltype(ops);
        const auto& x = raw<Ops>(a);
        const auto& y = raw<Ops>(b);
        auto& z = raw<Ops>(c);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                const auto& aik = x[i * m + k];
                if (Ops::is_zero(aik)) continue;
                for (std::size_t j = 0; j < p; ++j) {
                    const auto& bkj = y[k * p + j];
                    if (!Ops::is_zero(bkj)) ops.add_mul(z[i * p + j], aik, bkj);
                }
            }
        }
    });
    return c;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<Scalar>> Mat::to_rows() const {
    std::vector<std::vector<Scalar>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j));
    return out;
}

Rref rref(const Mat& a) {
    Rref out{a, {}};
    with_ops(a.field(), [&](auto ops) {
        using Ops = decltype(ops);
        out.pivots = rref_inplace(ops, raw<Ops>(out.reduced), a.rows(), a.cols(), a.cols());
    });
    return out;
}

std::size_t rank(const Mat& a) {
    Mat work = a;
    return with_ops(a.field(), [&](auto ops) {
        using Ops = decltype(ops);
        return rref_inplace(ops, raw<Ops>(work), a.rows(), a.cols(), a.cols()).size();
    });
}

namespace {

Mat kernel_from_rref(const Rref& r) {
    const Mat& red = r.reduced;
    const Field& f = red.field();
    const std::size_t n = red.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(f, n, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t fc = free_cols[t];
        k.set(fc, t, Scalar::one(f));
        for (std::size_t row = 0; row < r.pivots.size(); ++row) {
            if (!red.entry_is_zero(row, fc)) k.set(r.pivots[row], t, -red.at(row, fc));
        }
    }
    return k;
}

}  // namespace

Mat kernel_basis(const Mat& a) { return kernel_from_rref(rref(a)); }

Mat column_basis(const Mat& a) { return a.select_cols(rref(a).pivots); }

Solution solve(const Mat& a, const Mat& b) {
    check_same_field(a.field(), b.field());
    check_shape(a.rows() == b.rows(), "right-hand side has the wrong number of rows");
    const Field& f = a.field();
    const std::size_t n = a.cols(), k = b.cols();
    Mat aug = hstack({a, b}, f, a.rows());
    std::vector<std::size_t> pivots;
    with_ops(f, [&](auto ops) {
        using Ops = decltype(ops);
        pivots = rref_inplace(ops, raw<Ops>(aug), aug.rows(), aug.cols(), n);
    });
    Solution out;
    out.consistent = true;
    for (std::size_t row = pivots.size(); row < aug.rows() && out.consistent; ++row)
        for (std::size_t j = 0; j < k; ++j)
            if (!aug.entry_is_zero(row, n + j)) {
                out.consistent = false;
                break;
            }
    out.particular = Mat(f, n, k);
    if (out.consistent) {
        for (std::size_t row = 0; row < pivots.size(); ++row)
            for (std::size_t j = 0; j < k; ++j) out.particular.set(pivots[row], j, aug.at(row, n + j));
    }
    Rref left{aug.block(0, 0, aug.rows(), n), pivots};
    out.kernel = kernel_from_rref(left);
    return out;
}

Mat inverse(const Mat& a) {
    check_shape(a.is_square(), "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Solution s = solve(a, Mat::identity(a.field(), n));
    if (!s.consistent || s.kernel.cols() != 0) fail(ErrorCode::Singular, "matrix is singular");
    return s.particular;
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

Mat kronecker_product(const Mat& a, const Mat& b) {
    check_same_field(a.field(), b.field());
    Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.entry_is_zero(i, j)) continue;
            out.set_block(i * b.rows(), j * b.cols(), b * a.at(i, j));
        }
    return out;
}

Mat block_diag(const std::vector<Mat>& blocks, const Field& f) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat out(f, r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

Mat vstack(const std::vector<Mat>& parts, const Field& f, std::size_t cols) {
    std::size_t r = 0;
    for (const auto& p : parts) {
        check_shape(p.cols() == cols, "vstack of different widths");
        r += p.rows();
    }
    Mat out(f, r, cols);
    r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows();
    }
    return out;
}

Mat hstack(const std::vector<Mat>& parts, const Field& f, std::size_t rows) {
    std::size_t c = 0;
    for (const auto& p : parts) {
        check_shape(p.rows() == rows, "hstack of different heights");
        c += p.cols();
    }
    Mat out(f, rows, c);
    c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols();
    }
    return out;
}

Mat matrix_power(const Mat& a, std::size_t e) {
    check_shape(a.is_square(), "power of a non-square matrix");
    Mat r = Mat::identity(a.field(), a.rows());
    Mat b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool column_space_contains(const Mat& space, const Mat& sub) {
    check_shape(space.rows() == sub.rows(), "subspaces of different ambient dimension");
    if (sub.cols() == 0) return true;
    return rank(hstack({space, sub}, space.field(), space.rows())) == rank(space);
}

UniPoly minimal_polynomial(const Mat& a) {
    check_shape(a.is_square(), "minimal polynomial of a non-square matrix");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    // columns vec(a^0), vec(a^1), ..., vec(a^n); the first dependent column
    // yields the monic relation of least degree
    Mat krylov(f, n * n, n + 1);
    Mat power = Mat::identity(f, n);
    for (std::size_t j = 0; j <= n; ++j) {
        krylov.set_block(0, j, power.vectorize());
        if (j < n) power = power * a;
    }
    const Rref r = rref(krylov);
    std::size_t k = 0;
    while (k < r.pivots.size() && r.pivots[k] == k) ++k;
    std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
    coeffs[k] = Scalar::one(f);
    for (std::size_t t = 0; t < k; ++t) coeffs[t] = -r.reduced.at(t, k);
    return UniPoly(f, std::move(coeffs));
}

Mat evaluate(const UniPoly& p, const Mat& a) {
    check_same_field(p.field(), a.field());
    check_shape(a.is_square(), "polynomial evaluated at a non-square matrix");
    const Field& f = a.field();
    Mat acc(f, a.rows(), a.cols());
    const Mat id = Mat::identity(f, a.rows());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + id * p.coeffs()[i];
    return acc;
}

}  // namespace repkit
