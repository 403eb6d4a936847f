#include "repkit/module.hpp"

namespace repkit {

ModuleRep::ModuleRep(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    if (!algebra_) fail(ErrorCode::InvalidArgument, "module without algebra");
    if (action_.size() != algebra_->action_count())
        fail(ErrorCode::ShapeMismatch, "wrong number of action matrices",
             {{"expected", std::to_string(algebra_->action_count())}, {"got", std::to_string(action_.size())}});
    for (std::size_t g = 0; g < action_.size(); ++g) {
        check_same_field(algebra_->field(), action_[g].field());
        if (action_[g].rows() != dim_ || action_[g].cols() != dim_)
            fail(ErrorCode::ShapeMismatch, "action matrix is not dim x dim", {{"index", std::to_string(g)}});
    }
}

Mat ModuleRep::act_element(const Mat& coords) const {
    const Field& f = field();
    check_shape(coords.rows() == action_.size() && coords.cols() == 1, "element coordinates");
    Mat out(f, dim_, dim_);
    for (std::size_t k = 0; k < action_.size(); ++k)
        if (!coords.entry_is_zero(k, 0)) out += action_[k] * coords.at(k, 0);
    return out;
}

bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return a.dim_ == b.dim_ && same_algebra(a.algebra_, b.algebra_) && a.action_ == b.action_;
}

Mat evaluate_ncpoly(const NCPoly& p, const std::vector<Mat>& mats, const Field& f, std::size_t n) {
    Mat out(f, n, n);
    for (const auto& t : p.terms()) {
        Mat prod = Mat::identity(f, n);
        for (auto g : t.word) prod = prod * mats.at(g);
        out += prod * t.coeff;
    }
    return out;
}

std::vector<Mat> relation_residuals(const ModuleRep& x) {
    std::vector<Mat> out;
    for (const auto& r : x.algebra()->defining_relations())
        out.push_back(evaluate_ncpoly(r, x.action(), x.field(), x.dim()));
    return out;
}

ValidationReport validate_module(const ModuleRep& x) {
    ValidationReport report;
    const auto labels = x.algebra()->relation_labels();
    const auto residuals = relation_residuals(x);
    for (std::size_t i = 0; i < residuals.size(); ++i)
        if (!residuals[i].is_zero()) report.violations.push_back({i, labels[i], residuals[i]});
    return report;
}

void require_valid(const ModuleRep& x, const char* what) {
    const auto report = validate_module(x);
    if (!report.valid())
        fail(ErrorCode::InvalidArgument, std::string(what) + " violates a defining relation",
             {{"relation", report.violations.front().relation}});
}

void check_same_algebra(const ModuleRep& x, const ModuleRep& y) {
    if (!same_algebra(x.algebra(), y.algebra()))
        fail(ErrorCode::AlgebraMismatch, "modules are defined over different algebras");
}

ModuleRep zero_module(const AlgebraPtr& a) {
    return ModuleRep(a, 0, std::vector<Mat>(a->action_count(), Mat(a->field(), 0, 0)));
}

ModuleRep regular_module(const AlgebraPtr& a) {
    const auto& s = a->structure();
    return ModuleRep(a, s.dim(), s.left_mults());
}

ModuleRep direct_sum(const ModuleRep& x, const ModuleRep& y) {
    check_same_algebra(x, y);
    std::vector<Mat> action;
    for (std::size_t g = 0; g < x.action().size(); ++g) action.push_back(block_diag({x.act(g), y.act(g)}, x.field()));
    return ModuleRep(x.algebra(), x.dim() + y.dim(), std::move(action));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts, const AlgebraPtr& a) {
    ModuleRep out = zero_module(a);
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

ModuleRep change_basis(const ModuleRep& x, const Mat& p) {
    const Mat pinv = inverse(p);
    std::vector<Mat> action;
    for (const auto& m : x.action()) action.push_back(pinv * m * p);
    return ModuleRep(x.algebra(), x.dim(), std::move(action));
}

ModuleRep conjugate(const ModuleRep& x, const Mat& p) {
    const Mat pinv = inverse(p);
    std::vector<Mat> action;
    for (const auto& m : x.action()) action.push_back(p * m * pinv);
    return ModuleRep(x.algebra(), x.dim(), std::move(action));
}

ModuleRep submodule(const ModuleRep& x, const Mat& basis) {
    const std::size_t k = basis.cols();
    if (k == 0) return zero_module(x.algebra());
    std::vector<Mat> rhs;
    for (const auto& m : x.action()) rhs.push_back(m * basis);
    const Solution sol = solve(basis, hstack(rhs, x.field(), x.dim()));
    if (!sol.consistent) fail(ErrorCode::InvalidArgument, "subspace is not invariant under the action");
    if (sol.kernel.cols() != 0) fail(ErrorCode::InvalidArgument, "submodule basis is not linearly independent");
    std::vector<Mat> action;
    for (std::size_t g = 0; g < x.action().size(); ++g) action.push_back(sol.particular.block(0, g * k, k, k));
    return ModuleRep(x.algebra(), k, std::move(action));
}

Quotient quotient_module(const ModuleRep& x, const Mat& sub) {
    const Field& f = x.field();
    const std::size_t n = x.dim();
    const Rref r = rref(sub.transpose());
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Quotient q;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) q.kept.push_back(c);
    // projection: reduce a vector modulo U, then read the kept coordinates
    Mat reduce = Mat::identity(f, n);
    for (std::size_t t = 0; t < r.pivots.size(); ++t) {
        const Mat row = r.reduced.block(t, 0, 1, n);
        Mat update = row.transpose() * reduce.block(r.pivots[t], 0, 1, n);
        reduce -= update;
    }
    const std::size_t k = q.kept.size();
    Mat proj(f, k, n);
    for (std::size_t i = 0; i < k; ++i) proj.set_block(i, 0, reduce.block(q.kept[i], 0, 1, n));
    std::vector<Mat> action;
    for (const auto& m : x.action()) {
        const Mat image = proj * m;
        action.push_back(image.select_cols(q.kept));
    }
    for (std::size_t g = 0; g < x.action().size(); ++g)
        if (!(proj * x.act(g) * sub).is_zero()) fail(ErrorCode::InvalidArgument, "subspace is not invariant under the action");
    q.module = ModuleRep(x.algebra(), k, std::move(action));
    q.projection = std::move(proj);
    return q;
}

Mat generated_submodule(const ModuleRep& x, const Mat& vectors) {
    const Field& f = x.field();
    Mat span = column_basis(vectors);
    for (;;) {
        std::vector<Mat> parts{span};
        for (const auto& m : x.action()) parts.push_back(m * span);
        Mat next = column_basis(hstack(parts, f, x.dim()));
        if (next.cols() == span.cols()) return span;
        span = std::move(next);
    }
}

}  // namespace repkit
