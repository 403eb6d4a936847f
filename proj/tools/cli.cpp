#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "repkit/json_io.hpp"

namespace repkit::cli {

namespace {

struct Options {
    std::string field;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::string output;
    std::string algebra;  // for module documents without an embedded algebra
};

// "Q", "F<p>" or "F<p^r>"; extensions use the first monic irreducible modulus
// in lexicographic order of coefficients.
const Field& parse_field(const std::string& text) {
    if (text == "Q" || text == "QQ") return Field::rational();
    std::string digits = text;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::InvalidArgument, "unrecognized field", {{"field", text}});
    const std::uint64_t q = std::stoull(digits);
    std::uint64_t p = 2;
    while (p * p <= q && q % p) ++p;
    if (q % p) p = q;
    std::size_t r = 0;
    for (std::uint64_t t = q; t > 1; t /= p) {
        if (t % p) fail(ErrorCode::InvalidArgument, "field order is not a prime power", {{"field", text}});
        ++r;
    }
    if (r == 0) fail(ErrorCode::InvalidArgument, "field order must exceed 1", {{"field", text}});
    if (r == 1) return Field::prime(p);
    const Field& base = Field::prime(p);
    std::vector<std::uint64_t> c(r + 1, 0);
    c[r] = 1;
    for (;;) {
        std::vector<Scalar> coeffs;
        for (auto v : c) coeffs.push_back(Scalar::from_code(base, v));
        if (c[0] != 0 && is_irreducible(UniPoly(base, coeffs))) return Field::get(FieldSpec::prime_power(p, c));
        std::size_t k = 0;
        while (k < r && ++c[k] == p) c[k++] = 0;
        if (k == r) fail(ErrorCode::InvalidArgument, "no irreducible modulus found", {{"field", text}});
    }
}

class Runner {
   public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : opt_(o), out_(out), err_(err) {
        if (!opt_.field.empty()) field_ = &parse_field(opt_.field);
    }

    Json load(const std::string& path) const { return read_json_file(path); }

    AlgebraPtr algebra(const std::string& path) const { return algebra_from_json(load(path), field_); }

    ModuleRep module(const std::string& path) const {
        const Json j = load(path);
        AlgebraPtr a;
        if (!j.contains("algebra")) {
            if (opt_.algebra.empty()) fail(ErrorCode::ParseError, "module has no algebra; pass --algebra", {{"path", path}});
            a = algebra(opt_.algebra);
        }
        return module_from_json(j, a, field_);
    }

    ModuleRep valid_module(const std::string& path) const {
        ModuleRep x = module(path);
        require_valid(x, path.c_str());
        return x;
    }

    BimoduleFamily family(const std::string& path) const { return family_from_json(load(path), field_); }

    std::uint64_t seed() const { return opt_.seed; }
    const Field* field_override() const { return field_; }

    void emit(const Json& j) const { write(dump(j)); }

    void write(const std::string& text) const {
        if (opt_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.output, std::ios::binary);
        if (!f) fail(ErrorCode::IoError, "cannot write output", {{"path", opt_.output}});
        f << text;
    }

    void note_seed() const { err_ << "seed: " << opt_.seed << "\n"; }

    const std::string& format() const { return opt_.format; }

   private:
    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    const Field* field_ = nullptr;
};

Scalar parse_scalar(const Field& f, const std::string& s) { return Scalar::parse(f, s); }

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

OrthoSide parse_side(const std::string& s) { return s == "left" ? OrthoSide::Left : OrthoSide::Right; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact computations with finite-dimensional modules over finitely presented algebras", "repkit"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--field", opt.field, "Override the field of every input (Q, F<p>, F<p^r>)");
    app.add_option("--seed", opt.seed, "Seed for randomized algorithms")->capture_default_str();
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write the report to this file");
    app.add_option("--algebra", opt.algebra, "Algebra document for modules that do not embed one")
        ->check(CLI::ExistingFile);

    std::function<void(const Runner&)> action;
    auto file_arg = [](CLI::App* sub, const char* name, std::string& target, const char* help) {
        sub->add_option(name, target, help)->required()->check(CLI::ExistingFile);
    };

    std::string a_path, x_path, y_path, doc_path;
    std::size_t n = 1, i = 1, j = 2, i_max = 6, lambda_count = 10, bound = 1, chains = 100;
    std::string lambda = "0", lambdas, side = "right";

    auto* check = app.add_subcommand("algebra-check", "Validate an algebra document and report its invariants");
    file_arg(check, "algebra", a_path, "Algebra document");
    check->callback([&] {
        action = [&](const Runner& r) {
            AlgebraPtr a = r.algebra(a_path);
            Json j;
            j["form"] = a->is_free() ? "free" : "structure";
            j["field"] = field_to_json(a->field());
            if (a->is_structure()) j["dim"] = a->structure().dim();
            j["action_count"] = a->action_count();
            j["relations"] = a->defining_relations().size();
            j["hom_generators"] = a->hom_generators();
            if (a->is_structure()) {
                try {
                    j["radical_dim"] = algebra_radical(a->structure()).cols();
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::UnsupportedCharacteristic) throw;
                    j["radical_dim"] = nullptr;
                }
            }
            j["valid"] = true;
            r.emit(j);
        };
    });

    auto* validate = app.add_subcommand("module-validate", "Check a module against the algebra's relations");
    file_arg(validate, "module", x_path, "Module document");
    validate->callback([&] {
        action = [&](const Runner& r) { r.emit(validation_to_json(validate_module(r.module(x_path)))); };
    });

    auto* decomp = app.add_subcommand("module-decompose", "Krull-Schmidt decomposition");
    file_arg(decomp, "module", x_path, "Module document");
    decomp->callback([&] {
        action = [&](const Runner& r) {
            r.note_seed();
            const ModuleRep x = r.valid_module(x_path);
            r.emit(decomposition_to_json(decompose(x, r.seed()), r.seed()));
        };
    });

    auto* hom = app.add_subcommand("module-hom", "Basis of Hom(X, Y)");
    file_arg(hom, "X", x_path, "Source module");
    file_arg(hom, "Y", y_path, "Target module");
    hom->callback([&] {
        action = [&](const Runner& r) {
            const ModuleRep x = r.valid_module(x_path), y = r.valid_module(y_path);
            check_same_algebra(x, y);
            const auto basis = hom_basis(x, y);
            Json j;
            j["dim"] = basis.size();
            Json b = Json::array();
            for (const auto& m : basis) b.push_back(mat_to_json(m));
            j["basis"] = std::move(b);
            r.emit(j);
        };
    });

    auto* ext = app.add_subcommand("module-ext", "dim Ext^n(M, X)");
    file_arg(ext, "M", x_path, "First argument");
    file_arg(ext, "X", y_path, "Second argument");
    ext->add_option("--n", n, "Degree")->capture_default_str();
    ext->callback([&] {
        action = [&](const Runner& r) {
            r.note_seed();
            const ModuleRep m = r.valid_module(x_path), x = r.valid_module(y_path);
            check_same_algebra(m, x);
            Json j;
            j["seed"] = r.seed();
            j["n"] = n;
            j["dim"] = ext_dim(n, m, x, r.seed());
            r.emit(j);
        };
    });

    auto* dual = app.add_subcommand("module-dual", "Standard dual over the opposite algebra");
    file_arg(dual, "module", x_path, "Module document");
    dual->callback([&] { action = [&](const Runner& r) { r.emit(module_to_json(dual_module(r.valid_module(x_path)))); }; });

    auto* member = app.add_subcommand("membership", "Membership predicates");
    member->require_subcommand(1);
    auto predicate = [&](const char* name, const char* help, bool two, std::function<Json(const Runner&)> body) {
        auto* sub = member->add_subcommand(name, help);
        file_arg(sub, two ? "M" : "X", x_path, two ? "Test module" : "Module");
        if (two) file_arg(sub, "X", y_path, "Candidate");
        return std::pair{sub, body};
    };
    auto finish = [&](std::pair<CLI::App*, std::function<Json(const Runner&)>> p, const char* kind) {
        auto body = p.second;
        p.first->callback([&, body, kind] {
            action = [&, body, kind](const Runner& r) {
                Json j;
                j["kind"] = kind;
                const Json fields = body(r);
                for (const auto& [k, v] : fields.items()) j[k] = v;
                r.emit(j);
            };
        });
        return p.first;
    };
    auto pair_of = [&](const Runner& r) {
        std::pair<ModuleRep, ModuleRep> xy{r.valid_module(x_path), r.valid_module(y_path)};
        check_same_algebra(xy.first, xy.second);
        return xy;
    };
    finish(predicate("gen", "X in gen(M)", true,
                     [&](const Runner& r) {
                         auto [m, x] = pair_of(r);
                         return Json{{"member", gen_membership(m, x)}};
                     }),
           "gen");
    finish(predicate("cogen", "X in cogen(M)", true,
                     [&](const Runner& r) {
                         auto [m, x] = pair_of(r);
                         return Json{{"member", cogen_membership(m, x)}};
                     }),
           "cogen");
    finish(predicate("hom-orth", "Hom(M, X) = 0 (right) or Hom(X, M) = 0 (left)", true,
                     [&](const Runner& r) {
                         auto [m, x] = pair_of(r);
                         return Json{{"side", side},
                                     {"member", hom_ext_orthogonal(m, x, OrthoMode::Hom, 0, parse_side(side), r.seed())}};
                     }),
           "hom-orth")
        ->add_option("--side", side, "right or left")
        ->check(CLI::IsMember({"right", "left"}));
    auto* ext_orth = finish(predicate("ext-orth", "Ext^n(M, X) = 0 (right) or Ext^n(X, M) = 0 (left)", true,
                                      [&](const Runner& r) {
                                          r.note_seed();
                                          auto [m, x] = pair_of(r);
                                          return Json{{"seed", r.seed()},
                                                      {"side", side},
                                                      {"n", n},
                                                      {"member", hom_ext_orthogonal(m, x, OrthoMode::Ext, n,
                                                                                    parse_side(side), r.seed())}};
                                      }),
                            "ext-orth");
    ext_orth->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}));
    ext_orth->add_option("--n", n, "Degree");
    finish(predicate("pdim", "pd X <= n", false,
                     [&](const Runner& r) {
                         r.note_seed();
                         const ModuleRep x = r.valid_module(x_path);
                         return Json{{"seed", r.seed()}, {"n", n}, {"member", pdim_le(x, n, r.seed())}};
                     }),
           "pdim")
        ->add_option("--n", n, "Bound");
    {
        auto* sub = member->add_subcommand("rel-inj", "X injective relative to a short exact sequence");
        file_arg(sub, "ses", doc_path, "Sequence document");
        file_arg(sub, "X", x_path, "Module");
        sub->callback([&] {
            action = [&](const Runner& r) {
                SesData s = ses_from_json(r.load(doc_path), nullptr, r.field_override());
                check_exact(s);
                const ModuleRep x = r.valid_module(x_path);
                check_same_algebra(s.m, x);
                r.emit(Json{{"kind", "rel-inj"}, {"member", relative_injectivity(s, x)}});
            };
        });
    }
    for (const char* kind : {"p1", "p2"}) {
        auto* sub = member->add_subcommand(kind, std::string("Morphism of projectives in P") + (kind[1]) +
                                                     "(A); without a document, the minimal presentation of --of");
        sub->add_option("presentation", doc_path, "Presentation document")->check(CLI::ExistingFile);
        sub->add_option("--of", x_path, "Module whose minimal presentation is tested")->check(CLI::ExistingFile);
        sub->callback([&, kind] {
            action = [&, kind](const Runner& r) {
                PresentationMorphism pm;
                if (!doc_path.empty()) {
                    pm = presentation_from_json(r.load(doc_path), nullptr, r.field_override());
                } else if (!x_path.empty()) {
                    r.note_seed();
                    pm = minimal_presentation(r.valid_module(x_path), r.seed());
                } else {
                    fail(ErrorCode::InvalidArgument, "give a presentation document or --of");
                }
                Json j;
                j["kind"] = kind;
                j["in_proj2"] = pm.in_proj2;
                j["in_P1"] = pm.in_p1;
                j["in_P2"] = pm.in_p2;
                j["member"] = std::string(kind) == "p1" ? pm.in_p1 : pm.in_p2;
                if (doc_path.empty()) j["presentation"] = presentation_to_json(pm);
                r.emit(j);
            };
        });
    }

    auto* embed = app.add_subcommand("embed-kronecker", "Embed a k<x_1..x_n>-module into Kronecker modules");
    file_arg(embed, "module", x_path, "Module over a free algebra without relations");
    embed->callback(
        [&] { action = [&](const Runner& r) { r.emit(module_to_json(kronecker_embed(r.valid_module(x_path)))); }; });

    auto* eqs = app.add_subcommand("scheme-equations", "Equations of the module scheme Mod(A, n)");
    file_arg(eqs, "algebra", a_path, "Algebra document");
    eqs->add_option("--n", n, "Module dimension")->capture_default_str();
    eqs->callback([&] {
        action = [&](const Runner& r) {
            const SchemeEquations s = module_scheme_equations(r.algebra(a_path), n);
            if (r.format() == "text")
                r.write(equations_text(s));
            else
                r.emit(scheme_to_json(s));
        };
    });

    auto* orbit = app.add_subcommand("scheme-orbit", "Stabilizer and orbit dimensions; orbit comparison with Y");
    file_arg(orbit, "X", x_path, "Module");
    orbit->add_option("Y", y_path, "Second module")->check(CLI::ExistingFile);
    orbit->callback([&] {
        action = [&](const Runner& r) {
            const ModuleRep x = r.valid_module(x_path);
            const OrbitData d = orbit_data(x);
            Json j;
            j["n"] = x.dim();
            j["stab_dim"] = d.stab_dim;
            j["orbit_dim"] = d.orbit_dim;
            if (!y_path.empty()) {
                r.note_seed();
                j["seed"] = r.seed();
                j["same_orbit"] = same_orbit(x, r.valid_module(y_path), r.seed());
            }
            r.emit(j);
        };
    });

    auto* spec = app.add_subcommand("tube-specialize", "Module X_{lambda,i} of a family");
    file_arg(spec, "family", doc_path, "Family document");
    spec->add_option("--lambda", lambda, "Point")->capture_default_str();
    spec->add_option("--i", i, "Jordan block size")->capture_default_str();
    spec->callback([&] {
        action = [&](const Runner& r) {
            const BimoduleFamily fam = r.family(doc_path);
            r.emit(module_to_json(specialize(fam, parse_scalar(fam.field(), lambda), i)));
        };
    });

    auto* ses = app.add_subcommand("tube-ses", "0 -> X_i -> X_j -> X_{j-i} -> 0");
    file_arg(ses, "family", doc_path, "Family document");
    ses->add_option("--lambda", lambda, "Point")->capture_default_str();
    ses->add_option("--i", i, "Smaller index")->capture_default_str();
    ses->add_option("--j", j, "Larger index")->capture_default_str();
    ses->callback([&] {
        action = [&](const Runner& r) {
            r.note_seed();
            const BimoduleFamily fam = r.family(doc_path);
            const SesData s = tube_ses(fam, parse_scalar(fam.field(), lambda), i, j, r.seed());
            check_exact(s);
            Json out;
            out["seed"] = r.seed();
            out["exact"] = true;
            out["rank_f"] = rank(s.f);
            out["rank_g"] = rank(s.g);
            const Json doc = ses_to_json(s);
            for (const auto& [k, v] : doc.items()) out[k] = v;
            r.emit(out);
        };
    });

    auto* bt1 = app.add_subcommand("experiment-bt1", "Specialize a family along many points and block sizes");
    file_arg(bt1, "family", doc_path, "Family document");
    bt1->add_option("--lambdas", lambdas, "Comma-separated points (default 0..count-1)");
    bt1->add_option("--lambda-count", lambda_count, "Number of points 0, 1, ...")->capture_default_str();
    bt1->add_option("--i-max", i_max, "Largest block size")->capture_default_str();
    bt1->callback([&] {
        action = [&](const Runner& r) {
            r.note_seed();
            const BimoduleFamily fam = r.family(doc_path);
            std::vector<Scalar> pts;
            if (!lambdas.empty())
                for (const auto& s : split_list(lambdas)) pts.push_back(parse_scalar(fam.field(), s));
            else
                for (std::size_t k = 0; k < lambda_count; ++k)
                    pts.push_back(Scalar::from_int(fam.field(), static_cast<long long>(k)));
            const Bt1Report rep = bt1_experiment(fam, pts, i_max, r.seed());
            if (r.format() == "csv")
                r.write(bt1_to_csv(rep));
            else
                r.emit(bt1_to_json(rep));
        };
    });

    auto* hs = app.add_subcommand("experiment-harada-sai", "Random chains of radical maps between small indecomposables");
    file_arg(hs, "algebra", a_path, "Algebra document (structure or quiver form)");
    hs->add_option("--bound", bound, "Dimension bound b")->capture_default_str();
    hs->add_option("--chains", chains, "Number of chains")->capture_default_str();
    hs->callback([&] {
        action = [&](const Runner& r) {
            r.note_seed();
            const AlgebraPtr a = r.algebra(a_path);
            const auto catalog = indecomposable_catalog(a, bound, 32, r.seed());
            const std::size_t length = (std::size_t{1} << bound) - 1;
            Rng rng(r.seed());
            Json results = Json::array();
            bool all = true;
            std::size_t nonzero_maps = 0;
            for (std::size_t c = 0; c < chains && !catalog.empty(); ++c) {
                const RadicalChain ch = random_radical_chain(catalog, length, rng);
                for (const auto& m : ch.maps) nonzero_maps += !m.is_zero();
                const HaradaSaiReport rep = harada_sai_chain_check(ch.maps, ch.modules, bound, r.seed());
                all = all && rep.vanishes;
                results.push_back(harada_sai_to_json(rep));
            }
            Json j;
            j["seed"] = r.seed();
            j["bound"] = bound;
            j["vanishing_length"] = length;
            j["catalog_dims"] = Json::array();
            for (const auto& m : catalog) j["catalog_dims"].push_back(m.dim());
            j["chains"] = results.size();
            j["nonzero_maps"] = nonzero_maps;
            j["all_vanish"] = all;
            j["results"] = std::move(results);
            r.emit(j);
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back();
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        app.exit(e, os, err);
        out << os.str();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream os;
        app.exit(e, os, err);
        out << os.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        app.exit(e, os, err);
        err << os.str();
        return 2;
    }

    try {
        Runner runner(opt, out, err);
        if (!action) return 2;
        action(runner);
        return 0;
    } catch (const Error& e) {
        out << dump(error_to_json(e));
        return 1;
    } catch (const nlohmann::json::exception& e) {
        out << dump(error_to_json(Error(ErrorCode::ParseError, e.what())));
        return 1;
    }
}

}  // namespace repkit::cli
