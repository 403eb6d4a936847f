#include "repkit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace repkit {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing member \"") + key + "\"");
    return j.at(key);
}

std::size_t count_of(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(ErrorCode::ParseError, std::string("member \"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

const Json& array_of(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_array()) fail(ErrorCode::ParseError, std::string("member \"") + key + "\" must be an array");
    return v;
}

std::vector<std::string> names_of(const Json& j) {
    std::vector<std::string> out;
    if (!j.contains("names")) return out;
    for (const auto& n : j.at("names")) out.push_back(n.get<std::string>());
    return out;
}

Json module_body(const ModuleRep& x) {
    Json j;
    j["dim"] = x.dim();
    Json action = Json::array();
    for (const auto& m : x.action()) action.push_back(mat_to_json(m));
    j["action"] = std::move(action);
    return j;
}

ModuleRep module_body_from(const Json& j, const AlgebraPtr& a) {
    const Field& f = a->field();
    const std::size_t n = count_of(j, "dim");
    std::vector<Mat> action;
    for (const auto& m : array_of(j, "action")) action.push_back(mat_from_json(f, m, n, n));
    return ModuleRep(a, n, std::move(action));
}

AlgebraPtr resolve_algebra(const Json& j, const AlgebraPtr& algebra, const Field* field_override) {
    if (j.contains("algebra")) return algebra_from_json(j.at("algebra"), field_override);
    if (!algebra) fail(ErrorCode::ParseError, "document has no algebra and none was supplied");
    return algebra;
}

}  // namespace

Json field_to_json(const Field& f) {
    Json j;
    switch (f.kind()) {
        case FieldKind::Rational: j["type"] = "Q"; break;
        case FieldKind::Prime:
            j["type"] = "Fp";
            j["p"] = f.characteristic();
            break;
        case FieldKind::PrimePower:
            j["type"] = "Fq";
            j["p"] = f.characteristic();
            j["modulus"] = f.spec().modulus;
            break;
    }
    return j;
}

const Field& field_from_json(const Json& j) {
    const std::string type = member(j, "type").get<std::string>();
    if (type == "Q") return Field::rational();
    if (type == "Fp") return Field::prime(member(j, "p").get<std::uint64_t>());
    if (type == "Fq") {
        std::vector<std::uint64_t> modulus;
        for (const auto& c : array_of(j, "modulus")) modulus.push_back(c.get<std::uint64_t>());
        return Field::get(FieldSpec::prime_power(member(j, "p").get<std::uint64_t>(), std::move(modulus)));
    }
    fail(ErrorCode::ParseError, "unknown field type \"" + type + "\"");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    if (j.is_array()) return Scalar::parse(f, j.dump());
    fail(ErrorCode::ParseError, "scalar must be a string or an integer", {{"value", j.dump()}});
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "matrix must be an array of rows");
    if (j.empty()) {
        if (rows != 0 && cols != 0) fail(ErrorCode::ShapeMismatch, "empty matrix where a nonempty one was expected");
        return Mat(f, 0, cols);
    }
    const std::size_t r = j.size(), c = j.front().size();
    if ((rows || cols) && (r != rows || c != cols))
        fail(ErrorCode::ShapeMismatch, "matrix has the wrong shape",
             {{"expected", std::to_string(rows) + "x" + std::to_string(cols)},
              {"got", std::to_string(r) + "x" + std::to_string(c)}});
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c) fail(ErrorCode::ShapeMismatch, "ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m.set(i, k, scalar_from_json(f, j[i][k]));
    }
    return m;
}

Json column_to_json(const Mat& v) {
    Json out = Json::array();
    for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(scalar_to_json(v.at(r, 0)));
    return out;
}

Mat column_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be an array");
    Mat v(f, j.size(), 1);
    for (std::size_t r = 0; r < j.size(); ++r) v.set(r, 0, scalar_from_json(f, j[r]));
    return v;
}

Json poly_to_json(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(scalar_to_json(c));
    return out;
}

UniPoly poly_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "polynomial must be a coefficient array");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(f, c));
    return UniPoly(f, std::move(coeffs));
}

Json ncpoly_to_json(const NCPoly& p) {
    Json out = Json::array();
    for (const auto& t : p.terms()) {
        Json term;
        term["c"] = scalar_to_json(t.coeff);
        term["w"] = t.word;
        out.push_back(std::move(term));
    }
    return out;
}

NCPoly ncpoly_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "relation must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        std::vector<std::size_t> word;
        for (const auto& w : array_of(t, "w")) word.push_back(w.get<std::size_t>());
        terms.push_back({scalar_from_json(f, member(t, "c")), std::move(word)});
    }
    return NCPoly(std::move(terms));
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    if (a.is_free()) {
        const auto& p = a.free();
        j["form"] = "free";
        j["field"] = field_to_json(a.field());
        j["generators"] = p.num_generators;
        if (!p.names.empty()) j["names"] = p.names;
        Json rels = Json::array();
        for (const auto& r : p.relations) rels.push_back(ncpoly_to_json(r));
        j["relations"] = std::move(rels);
        return j;
    }
    const auto& s = a.structure();
    j["form"] = "structure";
    j["field"] = field_to_json(a.field());
    j["dim"] = s.dim();
    j["names"] = s.names();
    Json constants = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < s.dim(); ++k) row.push_back(column_to_json(s.left_mult(i).col(k)));
        constants.push_back(std::move(row));
    }
    j["constants"] = std::move(constants);
    j["unit"] = column_to_json(s.unit());
    return j;
}

AlgebraPtr algebra_from_json(const Json& j, const Field* field_override) {
    const std::string form = member(j, "form").get<std::string>();
    const Field& f = field_override ? *field_override : (j.contains("field") ? field_from_json(j.at("field")) : Field::rational());
    if (form == "free") {
        FreePresentation p;
        p.field = &f;
        p.num_generators = count_of(j, "generators");
        p.names = names_of(j);
        if (j.contains("relations"))
            for (const auto& r : j.at("relations")) p.relations.push_back(ncpoly_from_json(f, r));
        return make_algebra(std::move(p));
    }
    if (form == "structure") {
        const std::size_t d = count_of(j, "dim");
        const Json& constants = array_of(j, "constants");
        if (constants.size() != d) fail(ErrorCode::ShapeMismatch, "structure constants must be d x d vectors");
        std::vector<Mat> lm;
        for (std::size_t i = 0; i < d; ++i) {
            if (constants[i].size() != d) fail(ErrorCode::ShapeMismatch, "structure constants must be d x d vectors");
            Mat l(f, d, d);
            for (std::size_t k = 0; k < d; ++k) {
                const Mat col = column_from_json(f, constants[i][k]);
                if (col.rows() != d) fail(ErrorCode::ShapeMismatch, "structure constant vector has the wrong length");
                l.set_block(0, k, col);
            }
            lm.push_back(std::move(l));
        }
        Mat unit = column_from_json(f, member(j, "unit"));
        if (unit.rows() != d) fail(ErrorCode::ShapeMismatch, "unit vector has the wrong length");
        return make_algebra(StructureAlgebra(f, std::move(lm), std::move(unit), names_of(j)));
    }
    if (form == "quiver") {
        QuiverPresentation q;
        q.field = &f;
        q.vertices = count_of(j, "vertices");
        for (const auto& a : array_of(j, "arrows"))
            q.arrows.push_back({count_of(a, "source"), count_of(a, "target"), a.value("name", std::string())});
        if (j.contains("relations"))
            for (const auto& r : j.at("relations")) q.relations.push_back(ncpoly_from_json(f, r));
        if (j.contains("bound")) q.bound = count_of(j, "bound");
        return make_algebra(quiver_to_structure(q));
    }
    fail(ErrorCode::ParseError, "unknown algebra form \"" + form + "\"");
}

Json module_to_json(const ModuleRep& x) {
    Json j;
    j["algebra"] = algebra_to_json(*x.algebra());
    const Json body = module_body(x);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

ModuleRep module_from_json(const Json& j, const AlgebraPtr& algebra, const Field* field_override) {
    return module_body_from(j, resolve_algebra(j, algebra, field_override));
}

Json family_to_json(const BimoduleFamily& fam) {
    Json j;
    j["algebra"] = algebra_to_json(*fam.algebra());
    j["rank"] = fam.rank();
    Json action = Json::array();
    for (const auto& m : fam.numerator()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols; ++c) row.push_back(poly_to_json(m.at(r, c)));
            rows.push_back(std::move(row));
        }
        action.push_back(std::move(rows));
    }
    j["action"] = std::move(action);
    j["den_power"] = fam.den_power();
    j["denominator"] = poly_to_json(fam.denominator());
    return j;
}

BimoduleFamily family_from_json(const Json& j, const Field* field_override) {
    AlgebraPtr a = algebra_from_json(member(j, "algebra"), field_override);
    const Field& f = a->field();
    const std::size_t n = count_of(j, "rank");
    std::vector<PolyMat> num;
    for (const auto& m : array_of(j, "action")) {
        if (!m.is_array() || m.size() != n) fail(ErrorCode::ShapeMismatch, "family matrix must have rank rows");
        PolyMat p(f, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (!m[r].is_array() || m[r].size() != n) fail(ErrorCode::ShapeMismatch, "family matrix must be square");
            for (std::size_t c = 0; c < n; ++c) p.at(r, c) = poly_from_json(f, m[r][c]);
        }
        num.push_back(std::move(p));
    }
    std::vector<std::size_t> den;
    if (j.contains("den_power"))
        for (const auto& d : j.at("den_power")) den.push_back(d.get<std::size_t>());
    UniPoly denominator = j.contains("denominator") ? poly_from_json(f, j.at("denominator"))
                                                     : UniPoly::constant(Scalar::one(f));
    return BimoduleFamily(std::move(a), n, std::move(num), std::move(den), std::move(denominator));
}

Json ses_to_json(const SesData& s) {
    Json j;
    j["algebra"] = algebra_to_json(*s.m.algebra());
    j["L"] = module_body(s.l);
    j["M"] = module_body(s.m);
    j["N"] = module_body(s.n);
    j["f"] = mat_to_json(s.f);
    j["g"] = mat_to_json(s.g);
    return j;
}

SesData ses_from_json(const Json& j, const AlgebraPtr& algebra, const Field* field_override) {
    AlgebraPtr a = resolve_algebra(j, algebra, field_override);
    SesData s{module_body_from(member(j, "L"), a), module_body_from(member(j, "M"), a),
              module_body_from(member(j, "N"), a), Mat(), Mat()};
    s.f = mat_from_json(a->field(), member(j, "f"), s.m.dim(), s.l.dim());
    s.g = mat_from_json(a->field(), member(j, "g"), s.n.dim(), s.m.dim());
    return s;
}

Json presentation_to_json(const PresentationMorphism& pm) {
    Json j;
    j["algebra"] = algebra_to_json(*pm.p0.algebra());
    j["P1"] = module_body(pm.p1);
    j["P0"] = module_body(pm.p0);
    j["phi"] = mat_to_json(pm.phi);
    j["in_proj2"] = pm.in_proj2;
    j["in_P1"] = pm.in_p1;
    j["in_P2"] = pm.in_p2;
    return j;
}

PresentationMorphism presentation_from_json(const Json& j, const AlgebraPtr& algebra, const Field* field_override) {
    AlgebraPtr a = resolve_algebra(j, algebra, field_override);
    ModuleRep p1 = module_body_from(member(j, "P1"), a);
    ModuleRep p0 = module_body_from(member(j, "P0"), a);
    Mat phi = mat_from_json(a->field(), member(j, "phi"), p0.dim(), p1.dim());
    return make_presentation(std::move(p1), std::move(p0), std::move(phi));
}

Json validation_to_json(const ValidationReport& r) {
    Json j;
    j["valid"] = r.valid();
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json e;
        e["index"] = viol.index;
        e["relation"] = viol.relation;
        e["residual"] = mat_to_json(viol.residual);
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return j;
}

Json family_validation_to_json(const FamilyReport& r) {
    Json j;
    j["valid"] = r.valid();
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json e;
        e["index"] = viol.index;
        e["relation"] = viol.relation;
        Json rows = Json::array();
        for (std::size_t a = 0; a < viol.residual.rows; ++a) {
            Json row = Json::array();
            for (std::size_t b = 0; b < viol.residual.cols; ++b) row.push_back(poly_to_json(viol.residual.at(a, b)));
            rows.push_back(std::move(row));
        }
        e["residual"] = std::move(rows);
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return j;
}

Json decomposition_to_json(const Decomposition& d, std::uint64_t seed) {
    std::vector<std::size_t> cls(d.summands.size());
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        cls[k] = reps.size();
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const auto& s = d.summands[reps[r]];
            if (s.dim() != d.summands[k].dim()) continue;
            const bool iso = (d.local[k] && d.local[reps[r]]) ? iso_between_indecomposables(s, d.summands[k]).has_value()
                                                             : is_isomorphic(s, d.summands[k], seed).isomorphic;
            if (iso) {
                cls[k] = r;
                break;
            }
        }
        if (cls[k] == reps.size()) reps.push_back(k);
    }
    Json j;
    j["seed"] = seed;
    j["status"] = d.complete() ? "Complete" : "NotCertified";
    j["num_summands"] = d.summands.size();
    Json dims = Json::array();
    for (const auto& s : d.summands) dims.push_back(s.dim());
    j["summand_dims"] = std::move(dims);
    j["iso_classes"] = cls;
    Json summands = Json::array();
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        Json s = module_body(d.summands[k]);
        s["iso_class"] = cls[k];
        s["local"] = static_cast<bool>(d.local[k]);
        summands.push_back(std::move(s));
    }
    j["summands"] = std::move(summands);
    j["change_of_basis"] = mat_to_json(d.change_of_basis);
    return j;
}

Json scheme_to_json(const SchemeEquations& eqs) {
    Json j;
    j["algebra"] = algebra_to_json(*eqs.algebra);
    j["n"] = eqs.n;
    j["variables"] = eqs.variables;
    Json list = Json::array();
    for (std::size_t e = 0; e < eqs.equations.size(); ++e) {
        Json eq;
        eq["label"] = eqs.labels[e];
        Json terms = Json::array();
        for (const auto& [mono, c] : eqs.equations[e].terms()) {
            Json t;
            t["c"] = scalar_to_json(c);
            Json m = Json::array();
            for (const auto& [v, p] : mono) m.push_back(Json::array({v, p}));
            t["m"] = std::move(m);
            terms.push_back(std::move(t));
        }
        eq["terms"] = std::move(terms);
        list.push_back(std::move(eq));
    }
    j["equations"] = std::move(list);
    return j;
}

Json bt1_to_json(const Bt1Report& r) {
    Json j;
    j["seed"] = r.seed;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["lambda"] = row.lambda.to_string();
        e["i"] = row.i;
        e["dim"] = row.dim;
        e["num_summands"] = row.summand_dims.size();
        e["summand_dims"] = row.summand_dims;
        e["iso_class_id"] = row.class_ids;
        e["certified"] = row.certified;
        if (!row.error.empty()) e["error"] = row.error;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    Json classes = Json::object();
    for (const auto& [d, c] : r.classes_per_dim) classes[std::to_string(d)] = c;
    j["classes_per_dim"] = std::move(classes);
    j["max_dim"] = r.max_dim;
    Json maxima = Json::object();
    for (const auto& [i, d] : r.max_summand_dim) maxima[std::to_string(i)] = d;
    j["max_summand_dim"] = std::move(maxima);
    Json pairwise = Json::object();
    for (const auto& [d, m] : r.non_isomorphic) {
        Json e;
        e["rows"] = r.rows_by_dim.at(d);
        Json mat = Json::array();
        for (const auto& line : m) mat.push_back(line);
        e["non_isomorphic"] = std::move(mat);
        bool all = true;
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = 0; b < m.size(); ++b)
                if (a != b && !m[a][b]) all = false;
        e["pairwise_non_isomorphic"] = all;
        pairwise[std::to_string(d)] = std::move(e);
    }
    j["by_dimension"] = std::move(pairwise);
    j["unbounded"] = r.unbounded;
    j["all_indecomposable"] = r.all_indecomposable;
    j["all_certified"] = r.all_certified;
    return j;
}

std::string bt1_to_csv(const Bt1Report& r) {
    std::ostringstream os;
    os << "lambda,i,dim,num_summands,iso_class_id\n";
    for (const auto& row : r.rows) {
        os << row.lambda.to_string() << ',' << row.i << ',' << row.dim << ',' << row.summand_dims.size() << ',';
        for (std::size_t k = 0; k < row.class_ids.size(); ++k) os << (k ? ";" : "") << row.class_ids[k];
        os << '\n';
    }
    return os.str();
}

Json harada_sai_to_json(const HaradaSaiReport& r) {
    Json j;
    j["bound"] = r.bound;
    j["vanishing_length"] = r.vanishing_length;
    j["chain_length"] = r.prefixes.size();
    Json ranks = Json::array();
    for (const auto& p : r.prefixes) ranks.push_back(rank(p));
    j["prefix_ranks"] = std::move(ranks);
    j["first_zero"] = r.first_zero ? Json(*r.first_zero) : Json(nullptr);
    j["checked"] = r.checked;
    j["vanishes"] = r.vanishes;
    return j;
}

Json error_to_json(const Error& e) {
    Json ctx = Json::object();
    for (const auto& [k, v] : e.context()) ctx[k] = v;
    Json inner;
    inner["code"] = to_string(e.code());
    inner["message"] = e.what();
    inner["context"] = std::move(ctx);
    Json j;
    j["error"] = std::move(inner);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open file", {{"path", path}});
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::ParseError, e.what(), {{"path", path}});
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace repkit
