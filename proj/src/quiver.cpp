#include <map>

#include "repkit/algebra.hpp"

namespace repkit {

namespace {

using Word = std::vector<std::size_t>;

struct PathInfo {
    std::size_t source;
    std::size_t target;
};

class PathCalculus {
   public:
    explicit PathCalculus(const QuiverPresentation& q) : q_(q) {}

    // Product-order word: the last letter is traversed first.
    std::optional<PathInfo> endpoints(const Word& w) const {
        if (w.empty()) return std::nullopt;
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (q_.arrows[w[t + 1]].target != q_.arrows[w[t]].source) return std::nullopt;
        return PathInfo{q_.arrows[w.back()].source, q_.arrows[w.front()].target};
    }

    std::vector<Word> paths_of_length(std::size_t len) const {
        std::vector<Word> out;
        if (len == 0) return out;
        Word w(len, 0);
        extend(w, 0, out);
        return out;
    }

   private:
    void extend(Word& w, std::size_t pos, std::vector<Word>& out) const {
        if (pos == w.size()) {
            out.push_back(w);
            return;
        }
        for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
            if (pos > 0 && q_.arrows[a].target != q_.arrows[w[pos - 1]].source) continue;
            w[pos] = a;
            extend(w, pos + 1, out);
        }
    }

    const QuiverPresentation& q_;
};

struct Stratum {
    std::vector<Word> paths;
    std::map<Word, std::size_t> index;
    Rref relations;
    std::vector<std::size_t> basis;  // indices into paths that survive
    std::vector<std::ptrdiff_t> basis_pos;
};

std::string path_name(const QuiverPresentation& q, const Word& w) {
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) s += "*";
        s += q.arrows[w[t]].name.empty() ? "a" + std::to_string(w[t]) : q.arrows[w[t]].name;
    }
    return s;
}

}  // namespace

StructureAlgebra quiver_to_structure(const QuiverPresentation& q) {
    const Field& f = *q.field;
    const std::size_t nv = q.vertices;
    for (const auto& a : q.arrows)
        if (a.source >= nv || a.target >= nv) fail(ErrorCode::InvalidArgument, "arrow endpoint out of range");
    PathCalculus calc(q);

    std::map<std::size_t, std::vector<const NCPoly*>> rel_by_len;
    for (const auto& r : q.relations) {
        if (r.is_zero()) continue;
        const auto& first = r.terms().front();
        auto ends = calc.endpoints(first.word);
        if (!ends) fail(ErrorCode::InvalidRelation, "relation term is not a path");
        for (const auto& t : r.terms()) {
            auto e = calc.endpoints(t.word);
            if (!e || e->source != ends->source || e->target != ends->target || t.word.size() != first.word.size())
                fail(ErrorCode::InvalidRelation,
                     "relation terms must be paths with common endpoints and common length");
            check_same_field(f, t.coeff.field());
        }
        rel_by_len[first.word.size()].push_back(&r);
    }

    std::vector<Stratum> strata;
    std::size_t stop = 0;  // first length whose stratum vanishes
    for (std::size_t len = 1;; ++len) {
        if (len > q.bound) fail(ErrorCode::BasisNotFinite, "paths survive beyond the length bound",
                                {{"bound", std::to_string(q.bound)}});
        Stratum s;
        s.paths = calc.paths_of_length(len);
        for (std::size_t i = 0; i < s.paths.size(); ++i) s.index[s.paths[i]] = i;
        std::vector<Mat> rows;
        for (const auto& [rlen, rels] : rel_by_len) {
            if (rlen > len) break;
            const std::size_t spare = len - rlen;
            for (std::size_t left = 0; left <= spare; ++left) {
                const std::size_t right = spare - left;
                auto lefts = left ? calc.paths_of_length(left) : std::vector<Word>{Word{}};
                auto rights = right ? calc.paths_of_length(right) : std::vector<Word>{Word{}};
                for (const NCPoly* r : rels) {
                    for (const auto& p : lefts)
                        for (const auto& qq : rights) {
                            Mat row(f, 1, s.paths.size());
                            bool ok = true;
                            for (const auto& t : r->terms()) {
                                Word w = p;
                                w.insert(w.end(), t.word.begin(), t.word.end());
                                w.insert(w.end(), qq.begin(), qq.end());
                                auto it = s.index.find(w);
                                if (it == s.index.end()) {
                                    ok = false;
                                    break;
                                }
                                row.set(0, it->second, row.at(0, it->second) + t.coeff);
                            }
                            if (ok) rows.push_back(std::move(row));
                        }
                }
            }
        }
        s.relations = rref(vstack(rows, f, s.paths.size()));
        std::vector<bool> pivot(s.paths.size(), false);
        for (auto c : s.relations.pivots) pivot[c] = true;
        for (std::size_t i = 0; i < s.paths.size(); ++i)
            if (!pivot[i]) s.basis.push_back(i);
        if (s.basis.empty()) {
            stop = len;
            break;
        }
        strata.push_back(std::move(s));
    }

    // global basis: vertices, then surviving paths by length
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) names.push_back("e" + std::to_string(v));
    std::vector<std::size_t> offset;
    std::size_t d = nv;
    for (auto& s : strata) {
        offset.push_back(d);
        s.basis_pos.assign(s.paths.size(), -1);
        for (std::size_t k = 0; k < s.basis.size(); ++k) {
            s.basis_pos[s.basis[k]] = static_cast<std::ptrdiff_t>(k);
            names.push_back(path_name(q, s.paths[s.basis[k]]));
        }
        d += s.basis.size();
    }

    struct BasisElem {
        bool trivial;
        std::size_t vertex;
        Word word;
    };
    std::vector<BasisElem> basis;
    for (std::size_t v = 0; v < nv; ++v) basis.push_back({true, v, {}});
    for (const auto& s : strata)
        for (auto i : s.basis) basis.push_back({false, 0, s.paths[i]});

    // coordinates of a path of positive length in the global basis
    auto normal_form = [&](const Word& w, Mat& col) {
        const std::size_t len = w.size();
        if (len >= stop) return;
        const Stratum& s = strata[len - 1];
        const std::size_t n = s.paths.size();
        Mat v(f, n, 1);
        v.set(s.index.at(w), 0, Scalar::one(f));
        for (std::size_t t = 0; t < s.relations.pivots.size(); ++t) {
            const Scalar c = v.at(s.relations.pivots[t], 0);
            if (c.is_zero()) continue;
            v -= s.relations.reduced.block(t, 0, 1, n).transpose() * c;
        }
        for (std::size_t k = 0; k < s.basis.size(); ++k) col.set(offset[len - 1] + k, 0, v.at(s.basis[k], 0));
    };

    std::vector<Mat> left_mult;
    for (std::size_t i = 0; i < d; ++i) {
        Mat l(f, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            Mat col(f, d, 1);
            if (a.trivial && b.trivial) {
                if (a.vertex == b.vertex) col.set(a.vertex, 0, Scalar::one(f));
            } else if (a.trivial) {
                if (calc.endpoints(b.word)->target == a.vertex) col.set(j, 0, Scalar::one(f));
            } else if (b.trivial) {
                if (calc.endpoints(a.word)->source == b.vertex) col.set(i, 0, Scalar::one(f));
            } else {
                Word w = a.word;
                w.insert(w.end(), b.word.begin(), b.word.end());
                if (calc.endpoints(w)) normal_form(w, col);
            }
            l.set_block(0, j, col);
        }
        left_mult.push_back(std::move(l));
    }
    Mat unit(f, d, 1);
    for (std::size_t v = 0; v < nv; ++v) unit.set(v, 0, Scalar::one(f));
    return StructureAlgebra(f, std::move(left_mult), std::move(unit), std::move(names));
}

AlgebraPtr kronecker_algebra(const Field& f, std::size_t arrows) {
    QuiverPresentation q;
    q.field = &f;
    q.vertices = 2;
    for (std::size_t a = 0; a < arrows; ++a) q.arrows.push_back({0, 1, "a" + std::to_string(a + 1)});
    q.bound = 2;
    return make_algebra(quiver_to_structure(q));
}

}  // namespace repkit
