#include "repkit/tubes.hpp"

#include <algorithm>

namespace repkit {

PolyMat PolyMat::identity(const Field& f, std::size_t n) {
    PolyMat out(f, n, n);
    for (std::size_t r = 0; r < n; ++r) out.at(r, r) = UniPoly::constant(Scalar::one(f));
    return out;
}

PolyMat PolyMat::constant(const Mat& m) {
    PolyMat out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = UniPoly::constant(m.at(r, c));
    return out;
}

bool PolyMat::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const UniPoly& p) { return p.is_zero(); });
}

Mat PolyMat::substitute(const Mat& j) const {
    const Field& f = j.field();
    const std::size_t m = j.rows();
    Mat out(f, rows * m, cols * m);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!at(r, c).is_zero()) out.set_block(r * m, c * m, evaluate(at(r, c), j));
    return out;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    check_shape(a.cols == b.rows, "polynomial matrix product");
    const Field& f = a.entries.empty() ? b.entries.front().field() : a.entries.front().field();
    PolyMat out(f, a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols; ++c)
                if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
    return out;
}

PolyMat operator*(const PolyMat& a, const UniPoly& p) {
    PolyMat out = a;
    for (auto& e : out.entries) e = e * p;
    return out;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
    check_shape(a.rows == b.rows && a.cols == b.cols, "polynomial matrix sum");
    PolyMat out = a;
    for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] += b.entries[k];
    return out;
}

BimoduleFamily::BimoduleFamily(AlgebraPtr algebra, std::size_t rank, std::vector<PolyMat> numerator,
                               std::vector<std::size_t> den_power, UniPoly denominator)
    : algebra_(std::move(algebra)),
      rank_(rank),
      numerator_(std::move(numerator)),
      den_power_(std::move(den_power)),
      denominator_(std::move(denominator)) {
    if (den_power_.empty()) den_power_.assign(numerator_.size(), 0);
    if (numerator_.size() != algebra_->action_count() || den_power_.size() != numerator_.size())
        fail(ErrorCode::ShapeMismatch, "one polynomial matrix and denominator power per action expected");
    for (const auto& m : numerator_) {
        if (m.rows != rank_ || m.cols != rank_) fail(ErrorCode::ShapeMismatch, "family matrix is not rank x rank");
        for (const auto& p : m.entries) check_same_field(algebra_->field(), p.field());
    }
    check_same_field(algebra_->field(), denominator_.field());
    if (denominator_.is_zero()) fail(ErrorCode::InvalidArgument, "denominator must be nonzero");
}

bool operator==(const BimoduleFamily& a, const BimoduleFamily& b) {
    return same_algebra(a.algebra_, b.algebra_) && a.rank_ == b.rank_ && a.numerator_ == b.numerator_ &&
           a.den_power_ == b.den_power_ && a.denominator_ == b.denominator_;
}

BimoduleFamily kronecker_family(const Field& f) {
    AlgebraPtr k = kronecker_algebra(f, 2);
    std::vector<PolyMat> num(4, PolyMat(f, 2, 2));
    num[0].at(0, 0) = UniPoly::constant(Scalar::one(f));
    num[1].at(1, 1) = UniPoly::constant(Scalar::one(f));
    num[2].at(1, 0) = UniPoly::constant(Scalar::one(f));
    num[3].at(1, 0) = UniPoly::x(f);
    return BimoduleFamily(std::move(k), 2, std::move(num), {0, 0, 0, 0}, UniPoly::constant(Scalar::one(f)));
}

FamilyReport validate_family(const BimoduleFamily& fam) {
    const Field& f = fam.field();
    const auto labels = fam.algebra()->relation_labels();
    const auto& relations = fam.algebra()->defining_relations();
    FamilyReport report;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        std::size_t top = 0;
        for (const auto& t : relations[k].terms()) {
            std::size_t d = 0;
            for (auto g : t.word) d += fam.den_power()[g];
            top = std::max(top, d);
        }
        PolyMat residual(f, fam.rank(), fam.rank());
        for (const auto& t : relations[k].terms()) {
            PolyMat prod = PolyMat::identity(f, fam.rank());
            std::size_t d = 0;
            for (auto g : t.word) {
                prod = prod * fam.numerator()[g];
                d += fam.den_power()[g];
            }
            residual = residual + prod * (pow(fam.denominator(), top - d) * t.coeff);
        }
        if (!residual.is_zero()) report.violations.push_back({k, labels[k], std::move(residual)});
    }
    return report;
}

Mat jordan_block(const Scalar& lambda, std::size_t i) {
    const Field& f = lambda.field();
    Mat j = Mat::identity(f, i) * lambda;
    for (std::size_t t = 0; t + 1 < i; ++t) j.set(t + 1, t, Scalar::one(f));
    return j;
}

namespace {

void check_point(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i) {
    check_same_field(fam.field(), lambda.field());
    if (i == 0) fail(ErrorCode::InvalidArgument, "multiplicity must be positive");
    if (fam.denominator().evaluate(lambda).is_zero())
        fail(ErrorCode::DenominatorVanishes, "denominator vanishes at the tube point", {{"lambda", lambda.to_string()}});
}

}  // namespace

ModuleRep specialize(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i) {
    check_point(fam, lambda, i);
    const Field& f = fam.field();
    const Mat j = jordan_block(lambda, i);
    const Mat finv = inverse(evaluate(fam.denominator(), j));
    const Mat id = Mat::identity(f, fam.rank());
    std::vector<Mat> action;
    for (std::size_t g = 0; g < fam.numerator().size(); ++g) {
        Mat m = fam.numerator()[g].substitute(j);
        if (fam.den_power()[g] > 0) m = m * kronecker_product(id, matrix_power(finv, fam.den_power()[g]));
        action.push_back(std::move(m));
    }
    return ModuleRep(fam.algebra(), fam.rank() * i, std::move(action));
}

Mat tube_inclusion(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i, std::size_t j) {
    check_point(fam, lambda, i);
    if (i >= j) fail(ErrorCode::IndexOrder, "tube inclusion needs i < j", {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
    const Field& f = fam.field();
    Mat shift(f, j, i);
    for (std::size_t t = 0; t < i; ++t) shift.set(t + (j - i), t, Scalar::one(f));
    return kronecker_product(Mat::identity(f, fam.rank()), shift);
}

SesData tube_ses(const BimoduleFamily& fam, const Scalar& lambda, std::size_t i, std::size_t j, std::uint64_t seed) {
    const Mat inc = tube_inclusion(fam, lambda, i, j);
    ModuleRep xi = specialize(fam, lambda, i);
    ModuleRep xj = specialize(fam, lambda, j);
    ModuleRep xq = specialize(fam, lambda, j - i);
    const Quotient q = quotient_module(xj, inc);
    const IsoResult iso = is_isomorphic(q.module, xq, seed);
    if (!iso.isomorphic)
        fail(ErrorCode::PreconditionViolated, "tube quotient is not isomorphic to the expected tube member",
             {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
    SesData s{std::move(xi), std::move(xj), std::move(xq), inc, *iso.witness * q.projection};
    check_exact(s);
    return s;
}

ModuleRep restrict_scalars(const ModuleRep& y) {
    const Field& big = y.field();
    if (big.kind() != FieldKind::PrimePower)
        fail(ErrorCode::FieldMismatch, "restriction of scalars needs a module over a prime-power field");
    const Field& small = big.prime_subfield();
    const std::size_t r = big.degree();
    AlgebraPtr a;
    try {
        a = y.algebra()->with_field(small);
    } catch (const Error&) {
        fail(ErrorCode::FieldMismatch, "algebra is not defined over the prime field");
    }
    // powers of the generator w (code p) of F_{p^r}
    std::vector<std::uint64_t> w_pow(r);
    for (std::size_t t = 0; t < r; ++t) w_pow[t] = big.pow(big.characteristic(), mpz_class(static_cast<unsigned long>(t)));
    const std::size_t n = y.dim();
    std::vector<Mat> action;
    for (const auto& m : y.action()) {
        Mat out(small, n * r, n * r);
        for (std::size_t a_row = 0; a_row < n; ++a_row)
            for (std::size_t b_col = 0; b_col < n; ++b_col) {
                const Scalar c = m.at(a_row, b_col);
                if (c.is_zero()) continue;
                for (std::size_t t = 0; t < r; ++t) {
                    const auto digits = big.digits(big.mul(c.code(), w_pow[t]));
                    for (std::size_t s = 0; s < r; ++s)
                        if (digits[s] != 0) out.set(a_row * r + s, b_col * r + t, Scalar::from_code(small, digits[s]));
                }
            }
        action.push_back(std::move(out));
    }
    return ModuleRep(std::move(a), n * r, std::move(action));
}

ModuleRep extend_scalars(const ModuleRep& x, const Field& target) {
    const Field& src = x.field();
    if (&src == &target) return x;
    if (src.kind() != FieldKind::Prime || !target.is_finite() || target.characteristic() != src.characteristic())
        fail(ErrorCode::NotAnExtension, "target field does not extend the module's field",
             {{"from", src.name()}, {"to", target.name()}});
    AlgebraPtr a = x.algebra()->with_field(target);
    std::vector<Mat> action;
    for (const auto& m : x.action()) {
        Mat out(target, m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m.entry_is_zero(r, c)) out.set(r, c, convert_scalar(m.at(r, c), target));
        action.push_back(std::move(out));
    }
    return ModuleRep(std::move(a), x.dim(), std::move(action));
}

Bt1Report bt1_experiment(const BimoduleFamily& fam, const std::vector<Scalar>& lambdas, std::size_t i_max,
                         std::uint64_t seed) {
    Bt1Report report;
    report.seed = seed;
    struct ClassRep {
        ModuleRep module;
        bool local;
    };
    std::vector<ClassRep> classes;
    auto classify = [&](const ModuleRep& s, bool local) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].module.dim() != s.dim()) continue;
            const bool iso = (local && classes[c].local) ? iso_between_indecomposables(classes[c].module, s).has_value()
                                                         : is_isomorphic(classes[c].module, s, seed).isomorphic;
            if (iso) return c;
        }
        classes.push_back({s, local});
        ++report.classes_per_dim[s.dim()];
        return classes.size() - 1;
    };
    report.all_indecomposable = report.all_certified = !lambdas.empty() && i_max > 0;
    for (const auto& lambda : lambdas)
        for (std::size_t i = 1; i <= i_max; ++i) {
            Bt1Row row;
            row.lambda = lambda;
            row.i = i;
            try {
                const ModuleRep x = specialize(fam, lambda, i);
                row.dim = x.dim();
                const Decomposition d = decompose(x, seed);
                row.certified = d.complete();
                for (std::size_t k = 0; k < d.summands.size(); ++k) {
                    row.summand_dims.push_back(d.summands[k].dim());
                    row.class_ids.push_back(classify(d.summands[k], d.local[k]));
                }
            } catch (const Error& e) {
                row.error = e.what();
            }
            if (!row.error.empty() || !row.certified) report.all_certified = false;
            if (!row.error.empty() || row.summand_dims.size() != 1) report.all_indecomposable = false;
            report.max_dim = std::max(report.max_dim, row.dim);
            for (auto s : row.summand_dims) report.max_summand_dim[i] = std::max(report.max_summand_dim[i], s);
            report.rows.push_back(std::move(row));
        }
    for (std::size_t r = 0; r < report.rows.size(); ++r)
        if (report.rows[r].error.empty()) report.rows_by_dim[report.rows[r].dim].push_back(r);
    for (const auto& [dim, idx] : report.rows_by_dim) {
        std::vector<std::vector<bool>> m(idx.size(), std::vector<bool>(idx.size(), false));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                auto ca = report.rows[idx[a]].class_ids, cb = report.rows[idx[b]].class_ids;
                std::sort(ca.begin(), ca.end());
                std::sort(cb.begin(), cb.end());
                m[a][b] = ca != cb;
            }
        report.non_isomorphic[dim] = std::move(m);
    }
    report.unbounded = i_max >= 2 && report.max_summand_dim.size() == i_max;
    std::size_t prev = 0;
    for (std::size_t i = 1; i <= i_max && report.unbounded; ++i) {
        auto it = report.max_summand_dim.find(i);
        if (it == report.max_summand_dim.end() || (i > 1 && it->second <= prev)) report.unbounded = false;
        if (it != report.max_summand_dim.end()) prev = it->second;
    }
    return report;
}

}  // namespace repkit
