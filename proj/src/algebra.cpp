#include "repkit/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace repkit {

namespace {

bool word_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

NCPoly::NCPoly(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return word_less(a.word, b.word); });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().word == t.word) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
            continue;
        }
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
    }
}

NCPoly NCPoly::reversed() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) std::reverse(t.word.begin(), t.word.end());
    return NCPoly(std::move(out));
}

std::string NCPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Scalar c = t.coeff;
        const bool negative = c.field().kind() == FieldKind::Rational && c.rational() < 0;
        if (negative) c = -c;
        if (i) os << (negative ? " - " : " + ");
        else if (negative) os << '-';
        const bool bare = c.is_one() && !t.word.empty();
        if (!bare) os << c.to_string();
        for (std::size_t k = 0; k < t.word.size(); ++k) {
            if (k || !bare) os << '*';
            const auto g = t.word[k];
            os << (g < names.size() ? names[g] : "x" + std::to_string(g));
        }
    }
    return os.str();
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].word != b.terms_[i].word || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

// ---------------------------------------------------------------------------

StructureAlgebra::StructureAlgebra(const Field& f, std::vector<Mat> left_mult, Mat unit, std::vector<std::string> names)
    : field_(&f), left_mult_(std::move(left_mult)), unit_(std::move(unit)), names_(std::move(names)) {
    const std::size_t d = left_mult_.size();
    check_shape(unit_.rows() == d && unit_.cols() == 1, "unit must be a coordinate column vector");
    check_same_field(f, unit_.field());
    for (const auto& l : left_mult_) {
        check_same_field(f, l.field());
        check_shape(l.rows() == d && l.cols() == d, "structure constants have the wrong shape");
    }
    if (names_.empty())
        for (std::size_t i = 0; i < d; ++i) names_.push_back("b" + std::to_string(i));
    check_shape(names_.size() == d, "one name per basis element expected");

    // associativity: L_{e_i e_j} = L_i L_j, where e_i e_j = L_i e_j
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (left_mult_of(left_mult_[i].col(j)) != left_mult_[i] * left_mult_[j])
                fail(ErrorCode::InvalidArgument, "structure constants are not associative",
                     {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
        }
    if (left_mult_of(unit_) != Mat::identity(f, d))
        fail(ErrorCode::InvalidArgument, "unit is not a left identity");
    for (std::size_t i = 0; i < d; ++i)
        if (left_mult_[i] * unit_ != basis_vector(i))
            fail(ErrorCode::InvalidArgument, "unit is not a right identity", {{"i", std::to_string(i)}});

    // greedy generating set: add basis elements outside the generated subalgebra
    Mat span = column_basis(unit_);
    auto close = [&](const std::vector<std::size_t>& gens) {
        std::vector<Mat> parts{unit_};
        for (auto g : gens) parts.push_back(basis_vector(g));
        Mat w = column_basis(hstack(parts, f, d));
        for (;;) {
            std::vector<Mat> more{w};
            for (std::size_t c = 0; c < w.cols(); ++c) {
                const Mat lw = left_mult_of(w.col(c));
                for (auto g : gens) more.push_back(lw.col(g));
            }
            Mat next = column_basis(hstack(more, f, d));
            if (next.cols() == w.cols()) return w;
            w = std::move(next);
        }
    };
    for (std::size_t i = 0; i < d && span.cols() < d; ++i) {
        if (column_space_contains(span, basis_vector(i))) continue;
        generators_.push_back(i);
        span = close(generators_);
    }
}

Mat StructureAlgebra::basis_vector(std::size_t i) const {
    Mat v(*field_, dim(), 1);
    v.set(i, 0, Scalar::one(*field_));
    return v;
}

Mat StructureAlgebra::left_mult_of(const Mat& a) const {
    check_shape(a.rows() == dim() && a.cols() == 1, "element must be a coordinate column vector");
    Mat out(*field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a.entry_is_zero(i, 0)) continue;
        out += left_mult_[i] * a.at(i, 0);
    }
    return out;
}

Mat StructureAlgebra::product(const Mat& a, const Mat& b) const { return left_mult_of(a) * b; }

StructureAlgebra StructureAlgebra::opposite() const {
    const std::size_t d = dim();
    std::vector<Mat> op;
    for (std::size_t i = 0; i < d; ++i) {
        Mat l(*field_, d, d);
        for (std::size_t j = 0; j < d; ++j) l.set_block(0, j, left_mult_[j].col(i));
        op.push_back(std::move(l));
    }
    return StructureAlgebra(*field_, std::move(op), unit_, names_);
}

bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.field_ == b.field_ && a.left_mult_ == b.left_mult_ && a.unit_ == b.unit_;
}

// ---------------------------------------------------------------------------

Algebra::Algebra(FreePresentation p) : field_(p.field), form_(std::move(p)) {
    const auto& fp = std::get<FreePresentation>(form_);
    for (const auto& r : fp.relations)
        for (const auto& t : r.terms()) {
            check_same_field(*field_, t.coeff.field());
            for (auto g : t.word)
                if (g >= fp.num_generators)
                    fail(ErrorCode::InvalidRelation, "relation uses an unknown generator", {{"index", std::to_string(g)}});
        }
    if (!fp.names.empty() && fp.names.size() != fp.num_generators)
        fail(ErrorCode::InvalidArgument, "one name per generator expected");
    for (std::size_t g = 0; g < fp.num_generators; ++g) hom_generators_.push_back(g);
    relations_ = fp.relations;
}

Algebra::Algebra(StructureAlgebra s) : field_(&s.field()), form_(std::move(s)) {
    const auto& sa = std::get<StructureAlgebra>(form_);
    hom_generators_ = sa.generators();
    const Field& f = *field_;
    const std::size_t d = sa.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Term> terms{{Scalar::one(f), {i, j}}};
            const Mat prod = sa.left_mult(i).col(j);
            for (std::size_t k = 0; k < d; ++k)
                if (!prod.entry_is_zero(k, 0)) terms.push_back({-prod.at(k, 0), {k}});
            relations_.emplace_back(std::move(terms));
        }
    std::vector<Term> unit_terms{{-Scalar::one(f), {}}};
    for (std::size_t k = 0; k < d; ++k)
        if (!sa.unit().entry_is_zero(k, 0)) unit_terms.push_back({sa.unit().at(k, 0), {k}});
    relations_.emplace_back(std::move(unit_terms));
}

const FreePresentation& Algebra::free() const {
    if (!is_free()) fail(ErrorCode::InvalidArgument, "algebra is not in free form");
    return std::get<FreePresentation>(form_);
}

const StructureAlgebra& Algebra::structure() const {
    if (!is_structure()) fail(ErrorCode::InvalidArgument, "algebra is not in structure form");
    return std::get<StructureAlgebra>(form_);
}

std::size_t Algebra::action_count() const noexcept {
    if (is_free()) return std::get<FreePresentation>(form_).num_generators;
    return std::get<StructureAlgebra>(form_).dim();
}

std::vector<std::string> Algebra::action_names() const {
    if (is_structure()) return structure().names();
    const auto& fp = free();
    if (!fp.names.empty()) return fp.names;
    std::vector<std::string> out;
    for (std::size_t g = 0; g < fp.num_generators; ++g) out.push_back("x" + std::to_string(g));
    return out;
}

std::vector<std::string> Algebra::relation_labels() const {
    const auto names = action_names();
    std::vector<std::string> out;
    if (is_free()) {
        for (const auto& r : relations_) out.push_back(r.to_string(names));
        return out;
    }
    const std::size_t d = structure().dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.push_back(names[i] + "*" + names[j]);
    out.push_back("unit");
    return out;
}

AlgebraPtr Algebra::opposite() const {
    if (is_structure()) return make_algebra(structure().opposite());
    FreePresentation p = free();
    for (auto& r : p.relations) r = r.reversed();
    return make_algebra(std::move(p));
}

Scalar convert_scalar(const Scalar& s, const Field& target) {
    const Field& src = s.field();
    if (&src == &target) return s;
    if (src.is_finite() && target.is_finite() && src.characteristic() == target.characteristic()) {
        if (src.kind() == FieldKind::Prime) return Scalar::from_code(target, s.code());
        if (target.kind() == FieldKind::Prime) {
            if (s.code() >= src.characteristic())
                fail(ErrorCode::NotAnExtension, "element does not lie in the prime subfield", {{"value", s.to_string()}});
            return Scalar::from_code(target, s.code());
        }
    }
    fail(ErrorCode::NotAnExtension, "no field embedding from " + src.name() + " to " + target.name());
}

AlgebraPtr Algebra::with_field(const Field& target) const {
    if (&target == field_) return std::make_shared<Algebra>(*this);
    auto conv_poly = [&](const NCPoly& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) terms.push_back({convert_scalar(t.coeff, target), t.word});
        return NCPoly(std::move(terms));
    };
    auto conv_mat = [&](const Mat& m) {
        Mat out(target, m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, convert_scalar(m.at(i, j), target));
        return out;
    };
    if (is_free()) {
        FreePresentation p = free();
        p.field = &target;
        for (auto& r : p.relations) r = conv_poly(r);
        return make_algebra(std::move(p));
    }
    const auto& s = structure();
    std::vector<Mat> lm;
    for (const auto& l : s.left_mults()) lm.push_back(conv_mat(l));
    return make_algebra(StructureAlgebra(target, std::move(lm), conv_mat(s.unit()), s.names()));
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (a.field_ != b.field_ || a.is_free() != b.is_free()) return false;
    if (a.is_structure()) return a.structure() == b.structure();
    const auto& x = a.free();
    const auto& y = b.free();
    return x.num_generators == y.num_generators && x.relations == y.relations;
}

AlgebraPtr make_algebra(FreePresentation p) { return std::make_shared<const Algebra>(std::move(p)); }
AlgebraPtr make_algebra(StructureAlgebra s) { return std::make_shared<const Algebra>(std::move(s)); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!a || !b) return a == b;
    return a == b || *a == *b;
}

// ---------------------------------------------------------------------------

namespace {

// Quotient of a structure algebra by a two-sided ideal; the complement basis
// is given by the non-pivot coordinates of the ideal's echelon form.
StructureAlgebra quotient_algebra(const StructureAlgebra& a, const Mat& ideal) {
    const Field& f = a.field();
    const std::size_t d = a.dim();
    const Rref r = rref(ideal.transpose());
    std::vector<bool> is_pivot(d, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_pivot[c]) keep.push_back(c);
    auto reduce = [&](Mat v) {
        for (std::size_t t = 0; t < r.pivots.size(); ++t) {
            const Scalar c = v.at(r.pivots[t], 0);
            if (c.is_zero()) continue;
            v -= r.reduced.block(t, 0, 1, d).transpose() * c;
        }
        Mat out(f, keep.size(), 1);
        for (std::size_t k = 0; k < keep.size(); ++k) out.set(k, 0, v.at(keep[k], 0));
        return out;
    };
    std::vector<Mat> lm;
    std::vector<std::string> names;
    for (auto i : keep) {
        Mat l(f, keep.size(), keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) l.set_block(0, j, reduce(a.left_mult(i).col(keep[j])));
        lm.push_back(std::move(l));
        names.push_back(a.names()[i]);
    }
    return StructureAlgebra(f, std::move(lm), reduce(a.unit()), std::move(names));
}

Mat trace_form_kernel(const StructureAlgebra& a) {
    const std::size_t d = a.dim();
    Mat gram(a.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram.set(i, j, (a.left_mult(i) * a.left_mult(j)).trace());
    return kernel_basis(gram);
}

}  // namespace

Mat algebra_radical(const StructureAlgebra& a) {
    const Field& f = a.field();
    const std::size_t d = a.dim();
    if (f.is_finite() && f.characteristic() <= d)
        fail(ErrorCode::UnsupportedCharacteristic, "trace-form radical needs characteristic 0 or larger than the dimension",
             {{"characteristic", std::to_string(f.characteristic())}, {"dim", std::to_string(d)}});
    Mat rad = trace_form_kernel(a);

    // self-checks: nilpotent ideal, semisimple quotient
    Mat power = rad;
    for (std::size_t k = 0; k <= d && power.cols() > 0; ++k) {
        std::vector<Mat> prods;
        for (std::size_t i = 0; i < power.cols(); ++i) {
            const Mat lp = a.left_mult_of(power.col(i));
            for (std::size_t j = 0; j < rad.cols(); ++j) prods.push_back(lp * rad.col(j));
        }
        power = prods.empty() ? Mat(f, d, 0) : column_basis(hstack(prods, f, d));
    }
    if (power.cols() != 0) fail(ErrorCode::PreconditionViolated, "radical self-check failed: ideal is not nilpotent");
    if (rad.cols() > 0 && trace_form_kernel(quotient_algebra(a, rad)).cols() != 0)
        fail(ErrorCode::PreconditionViolated, "radical self-check failed: quotient is not semisimple");
    return rad;
}

}  // namespace repkit
