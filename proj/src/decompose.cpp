#include "repkit/homcalc.hpp"
#include "repkit/random.hpp"

namespace repkit {

namespace {

constexpr int kMaxAttempts = 64;

// Column basis of the span of the vectorized matrices.
Mat span_of(const std::vector<Mat>& mats, const Field& f, std::size_t n) {
    std::vector<Mat> cols;
    for (const auto& m : mats) cols.push_back(m.vectorize());
    if (cols.empty()) return Mat(f, n * n, 0);
    return column_basis(hstack(cols, f, n * n));
}

std::vector<Mat> unvectorize(const Mat& cols, std::size_t n) {
    std::vector<Mat> out;
    for (std::size_t c = 0; c < cols.cols(); ++c) out.push_back(cols.col(c).reshape(n, n));
    return out;
}

struct Piece {
    Mat basis;  // columns in the coordinates of the input module
    ModuleRep module;
    std::vector<Mat> end;
    bool local = false;
};

class Decomposer {
   public:
    Decomposer(const Field& f, std::uint64_t seed) : f_(f), rng_(seed) {}

    void run(Piece p, std::vector<Piece>& out) {
        const std::size_t n = p.module.dim();
        if (n <= 1 || p.end.size() == 1) {
            p.local = true;
            out.push_back(std::move(p));
            return;
        }
        std::vector<Mat> nilpotents;
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            std::vector<Scalar> coeffs;
            for (std::size_t k = 0; k < p.end.size(); ++k) coeffs.push_back(rng_.scalar(f_));
            const Mat e = combine(p.end, coeffs);
            const UniPoly mu = minimal_polynomial(e);
            const Factorization fac = factor(mu, rng_.next());
            if (fac.factors.size() >= 2) {
                for (auto& q : split(p, e, fac)) run(std::move(q), out);
                return;
            }
            if (!fac.irreducible.front()) continue;
            const UniPoly& q = fac.factors.front().factor;
            nilpotents.push_back(evaluate(q, e));
            const Mat ideal = two_sided_ideal(p.end, nilpotents, n);
            if (!is_nilpotent(ideal, n)) continue;  // End is not local; keep sampling for a splitting element
            if (static_cast<std::size_t>(q.degree()) + ideal.cols() == p.end.size()) {
                p.local = true;
                out.push_back(std::move(p));
                return;
            }
        }
        p.local = false;
        out.push_back(std::move(p));
    }

   private:
    std::vector<Piece> split(const Piece& p, const Mat& e, const Factorization& fac) {
        const std::size_t n = p.module.dim();
        std::vector<Mat> parts;
        std::vector<std::size_t> sizes;
        for (const auto& fe : fac.factors) {
            Mat k = kernel_basis(evaluate(pow(fe.factor, fe.multiplicity), e));
            sizes.push_back(k.cols());
            parts.push_back(std::move(k));
        }
        const Mat b = hstack(parts, f_, n);
        const Mat binv = inverse(b);
        std::vector<Mat> action;
        for (const auto& m : p.module.action()) action.push_back(binv * m * b);
        std::vector<Mat> end;
        for (const auto& m : p.end) end.push_back(binv * m * b);
        std::vector<Piece> out;
        std::size_t off = 0;
        for (auto s : sizes) {
            Piece q;
            q.basis = p.basis * b.block(0, off, n, s);
            std::vector<Mat> sub_action;
            for (const auto& m : action) sub_action.push_back(m.block(off, off, s, s));
            q.module = ModuleRep(p.module.algebra(), s, std::move(sub_action));
            std::vector<Mat> blocks;
            for (const auto& m : end) blocks.push_back(m.block(off, off, s, s));
            q.end = unvectorize(span_of(blocks, f_, s), s);
            out.push_back(std::move(q));
            off += s;
        }
        return out;
    }

    // Two-sided ideal of End generated by the given elements, as vectorized columns.
    Mat two_sided_ideal(const std::vector<Mat>& end, const std::vector<Mat>& gens, std::size_t n) {
        Mat span = span_of(gens, f_, n);
        for (;;) {
            std::vector<Mat> mats = unvectorize(span, n);
            const std::size_t before = mats.size();
            for (std::size_t j = 0; j < before; ++j)
                for (const auto& a : end) {
                    mats.push_back(a * mats[j]);
                    mats.push_back(mats[j] * a);
                }
            Mat next = span_of(mats, f_, n);
            if (next.cols() == span.cols()) return span;
            span = std::move(next);
        }
    }

    bool is_nilpotent(const Mat& ideal, std::size_t n) {
        const std::vector<Mat> gens = unvectorize(ideal, n);
        std::vector<Mat> power = gens;
        for (std::size_t step = 0; step <= n; ++step) {
            if (power.empty()) return true;
            std::vector<Mat> prods;
            for (const auto& a : power)
                for (const auto& b : gens) prods.push_back(a * b);
            const Mat next = span_of(prods, f_, n);
            if (next.cols() == power.size() && next.cols() > 0) return false;
            power = unvectorize(next, n);
        }
        return power.empty();
    }

    const Field& f_;
    Rng rng_;
};

}  // namespace

std::size_t Decomposition::offset(std::size_t k) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) off += summands.at(i).dim();
    return off;
}

Decomposition decompose(const ModuleRep& x, std::uint64_t seed) {
    const Field& f = x.field();
    Decomposition d;
    d.seed = seed;
    if (x.dim() == 0) {
        d.change_of_basis = Mat(f, 0, 0);
        return d;
    }
    Piece root;
    root.basis = Mat::identity(f, x.dim());
    root.module = x;
    root.end = hom_basis(x, x);
    std::vector<Piece> pieces;
    Decomposer(f, seed).run(std::move(root), pieces);
    std::vector<Mat> cols;
    for (auto& p : pieces) {
        cols.push_back(p.basis);
        if (!p.local) d.status = DecompositionStatus::NotCertified;
        d.local.push_back(p.local);
        d.summands.push_back(std::move(p.module));
        d.endomorphisms.push_back(std::move(p.end));
    }
    d.change_of_basis = hstack(cols, f, x.dim());
    return d;
}

}  // namespace repkit
