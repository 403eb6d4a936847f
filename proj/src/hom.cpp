#include "repkit/homcalc.hpp"

namespace repkit {

std::vector<Mat> hom_basis(const ModuleRep& x, const ModuleRep& y) {
    check_same_algebra(x, y);
    const Field& f = x.field();
    const std::size_t n = x.dim(), m = y.dim();
    if (n == 0 || m == 0) return {};
    // row-major vec(T X - Y T) = (I_m (x) X^T - Y (x) I_n) vec(T)
    const Mat im = Mat::identity(f, m), in = Mat::identity(f, n);
    std::vector<Mat> blocks;
    for (auto g : x.algebra()->hom_generators())
        blocks.push_back(kronecker_product(im, x.act(g).transpose()) - kronecker_product(y.act(g), in));
    const Mat kernel = kernel_basis(vstack(blocks, f, m * n));
    std::vector<Mat> out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) out.push_back(kernel.col(c).reshape(m, n));
    return out;
}

bool is_intertwiner(const Mat& t, const ModuleRep& x, const ModuleRep& y) {
    check_same_algebra(x, y);
    if (t.rows() != y.dim() || t.cols() != x.dim()) return false;
    check_same_field(t.field(), x.field());
    for (std::size_t g = 0; g < x.action().size(); ++g)
        if (t * x.act(g) != y.act(g) * t) return false;
    return true;
}

Mat combine(const std::vector<Mat>& basis, const std::vector<Scalar>& coeffs) {
    check_shape(!basis.empty() && basis.size() == coeffs.size(), "combination of an empty or mismatched basis");
    Mat out(basis[0].field(), basis[0].rows(), basis[0].cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) out += basis[k] * coeffs[k];
    return out;
}

ModuleRep dual_module(const ModuleRep& x) {
    std::vector<Mat> action;
    for (const auto& m : x.action()) action.push_back(m.transpose());
    return ModuleRep(x.algebra()->opposite(), x.dim(), std::move(action));
}

ModuleRep kronecker_embed(const ModuleRep& x) {
    const Algebra& a = *x.algebra();
    if (!a.is_free() || !a.free().relations.empty())
        fail(ErrorCode::InvalidArgument, "Kronecker embedding needs a free algebra without relations");
    const Field& f = x.field();
    const std::size_t n = a.free().num_generators, d = x.dim();
    AlgebraPtr kron = kronecker_algebra(f, n + 1);
    const Mat id = Mat::identity(f, d);
    std::vector<Mat> action;
    Mat e0(f, 2 * d, 2 * d), e1(f, 2 * d, 2 * d);
    e0.set_block(0, 0, id);
    e1.set_block(d, d, id);
    action.push_back(e0);
    action.push_back(e1);
    for (std::size_t i = 0; i <= n; ++i) {
        Mat arrow(f, 2 * d, 2 * d);
        arrow.set_block(d, 0, i < n ? x.act(i) : id);
        action.push_back(std::move(arrow));
    }
    return ModuleRep(std::move(kron), 2 * d, std::move(action));
}

}  // namespace repkit
