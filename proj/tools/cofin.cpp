#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cofin/cofinality.hpp"
#include "cofin/delta.hpp"
#include "cofin/fixtures.hpp"
#include "cofin/reshape.hpp"
#include "cofin/serialize.hpp"
#include "cofin/topology.hpp"

namespace {

using namespace cofin;

json fixture_document(const std::string& name) {
    int n = 0, m = 0, k = 0;
    if (std::sscanf(name.c_str(), "delta_leq_%d_op", &n) == 1 && name == "delta_leq_" + std::to_string(n) + "_op")
        return to_document("category", opposite(delta_leq(n).cat));
    if (std::sscanf(name.c_str(), "delta_s_leq_%d_op", &n) == 1 && name == "delta_s_leq_" + std::to_string(n) + "_op")
        return to_document("category", opposite(delta_s_leq(n).cat));
    if (std::sscanf(name.c_str(), "delta_leq_%d", &n) == 1 && name == "delta_leq_" + std::to_string(n))
        return to_document("category", delta_leq(n).cat);
    if (std::sscanf(name.c_str(), "delta_s_leq_%d", &n) == 1 && name == "delta_s_leq_" + std::to_string(n))
        return to_document("category", delta_s_leq(n).cat);
    if (std::sscanf(name.c_str(), "incl_delta_s%d_delta%d", &m, &n) == 2)
        return to_document("functor", delta_inclusion(delta_s_leq(m), delta_leq(n)));
    if (std::sscanf(name.c_str(), "op_incl_delta%d_delta%d", &m, &n) == 2)
        return to_document("functor", opposite(delta_inclusion(delta_leq(m), delta_leq(n))));
    if (std::sscanf(name.c_str(), "incl_delta%d_delta%d", &m, &n) == 2)
        return to_document("functor", delta_inclusion(delta_leq(m), delta_leq(n)));
    if (std::sscanf(name.c_str(), "boundary_%d", &n) == 1)
        return to_document("sset", boundary(n));
    if (std::sscanf(name.c_str(), "standard_%d", &n) == 1)
        return to_document("sset", standard(n));
    if (std::sscanf(name.c_str(), "horn_%d_%d", &n, &k) == 2)
        return to_document("sset", horn(n, k));
    if (name == "projective_plane") return to_document("sset", fixtures::projective_plane());
    if (name == "circle") return to_document("sset", fixtures::circle());
    if (name == "no_coequalizer" || name == "no-coequalizer")
        return to_document("category", fixtures::no_coequalizer());
    throw error("unknown fixture: " + name);
}

Document load(const std::string& arg) {
    if (arg.rfind("fixtures:", 0) == 0) {
        json doc = fixture_document(arg.substr(9));
        return {doc.at("kind").get<std::string>(), doc.at("payload")};
    }
    std::ifstream in(arg);
    if (!in) throw error("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

FinCategory load_category(const std::string& arg) {
    Document d = load(arg);
    if (d.kind != "category") throw error(arg + ": expected a category document");
    return category_from_json(d.payload);
}

Functor load_functor(const std::string& arg) {
    Document d = load(arg);
    if (d.kind != "functor") throw error(arg + ": expected a functor document");
    return functor_from_json(d.payload);
}

SSet load_sset(const std::string& arg) {
    Document d = load(arg);
    if (d.kind != "sset") throw error(arg + ": expected an sset document");
    return sset_from_json(d.payload);
}

int object_index(const FinCategory& C, const std::string& at) {
    for (int i = 0; i < C.num_objects(); ++i)
        if (C.objects[static_cast<std::size_t>(i)] == at) return i;
    try {
        std::size_t pos = 0;
        int i = std::stoi(at, &pos);
        if (pos == at.size() && i >= 0 && i < C.num_objects()) return i;
    } catch (...) {
    }
    throw error("no object named " + at);
}

void emit(const json& j) { std::cout << dump_document(j); }

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Yes: return 0;
        case Verdict::No: return 1;
        default: return 2;
    }
}

json connectivity_json(const ConnectivityReport& r) {
    return json{{"level", r.level}, {"verdict", to_string(r.verdict)}, {"witness", r.witness},
                {"certificate", r.certificate}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite category and truncated simplicial set calculator"};
    app.require_subcommand(1);

    std::string file, file2, side = "right", at, kind_arg;
    int n = 1, dim = 2, tuples = -1, trials = 20;
    long tietze_budget = 10000;
    std::uint64_t seed = 1;
    bool cosifted = false, check = false;

    auto* c_validate = app.add_subcommand("validate", "check a document's invariants");
    c_validate->add_option("file", file)->required();

    auto* c_nerve = app.add_subcommand("nerve", "nerve of a category");
    c_nerve->add_option("cat", file)->required();
    c_nerve->add_option("--dim", dim)->required();

    auto* c_comma = app.add_subcommand("comma", "comma category of two functors");
    std::string left_arg, right_arg;
    c_comma->add_option("--left", left_arg)->required();
    c_comma->add_option("--right", right_arg)->required();

    auto* c_slice = app.add_subcommand("slice", "slice of a category or functor");
    c_slice->add_option("arg", file)->required();
    c_slice->add_option("--at", at)->required();

    auto* c_coslice = app.add_subcommand("coslice", "coslice of a category or functor");
    c_coslice->add_option("arg", file)->required();
    c_coslice->add_option("--at", at)->required();

    auto* c_colim = app.add_subcommand("colim", "colimit of a set-valued diagram");
    c_colim->add_option("diagram", file)->required();

    auto* c_lim = app.add_subcommand("lim", "limit of a set-valued diagram");
    c_lim->add_option("diagram", file)->required();

    auto* c_cic = app.add_subcommand("colim-in-cat", "colimit inside a finite category");
    c_cic->add_option("cat", file)->required();
    c_cic->add_option("diagram", file2)->required();

    auto* c_reshape = app.add_subcommand("reshape", "level diagram of a simplicial diagram");
    c_reshape->add_option("diagram", file)->required();
    c_reshape->add_option("--level", n)->required();
    c_reshape->add_flag("--check", check);

    auto* c_hom = app.add_subcommand("homology", "integer homology of an sset");
    c_hom->add_option("sset", file)->required();

    auto* c_conn = app.add_subcommand("connectivity", "n-connectivity verdict");
    c_conn->add_option("sset", file)->required();
    c_conn->add_option("--n", n)->required();
    c_conn->add_option("--tietze-budget", tietze_budget);

    auto* c_contr = app.add_subcommand("contractible", "weak contractibility verdict");
    c_contr->add_option("sset", file)->required();
    c_contr->add_option("--tietze-budget", tietze_budget);

    auto* c_cof = app.add_subcommand("cofinal", "n-cofinality of a functor");
    c_cof->add_option("functor", file)->required();
    c_cof->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    c_cof->add_option("--n", n)->required();
    c_cof->add_option("--tietze-budget", tietze_budget);

    auto* c_sift = app.add_subcommand("sifted", "n-siftedness of a category");
    c_sift->add_option("cat", file)->required();
    c_sift->add_option("--n", n)->required();
    c_sift->add_flag("--cosifted", cosifted);
    c_sift->add_option("--tuples", tuples);

    auto* c_probe = app.add_subcommand("probe", "cross-validate a verdict against (co)limits");
    c_probe->add_option("what", kind_arg)->required()->check(CLI::IsMember({"preservation", "limits", "products"}));
    c_probe->add_option("arg", file)->required();
    c_probe->add_option("--trials", trials);
    c_probe->add_option("--seed", seed);

    auto* c_fix = app.add_subcommand("fixtures", "emit a built-in document");
    c_fix->add_option("name", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*c_validate) {
            Document d = load(file);
            std::vector<std::string> bad;
            if (d.kind == "category")
                bad = validate(category_from_json(d.payload));
            else if (d.kind == "functor")
                bad = validate(functor_from_json(d.payload));
            else if (d.kind == "sset")
                bad = validate(sset_from_json(d.payload));
            else if (d.kind == "set_diagram")
                bad = validate(set_diagram_from_json(d.payload));
            else if (d.kind == "sset_diagram")
                bad = validate(sset_diagram_from_json(d.payload));
            else
                throw error("unknown document kind: " + d.kind);
            emit(json{{"kind", d.kind}, {"valid", bad.empty()}, {"violations", bad}});
            return bad.empty() ? 0 : 1;
        }
        if (*c_nerve) {
            emit(to_document("sset", nerve(load_category(file), dim).sset));
            return 0;
        }
        if (*c_comma) {
            CommaResult K = comma(load_functor(left_arg), load_functor(right_arg));
            emit(to_document("category", K.cat));
            return 0;
        }
        if (*c_slice || *c_coslice) {
            Document d = load(file);
            Functor p = d.kind == "category"
                            ? identity_functor(category_from_json(d.payload))
                            : functor_from_json(d.payload);
            int obj = object_index(p.cod, at);
            CommaResult K = *c_slice ? slice_along(p, obj) : coslice_along(p, obj);
            emit(to_document("category", K.cat));
            return 0;
        }
        if (*c_colim) {
            Document d = load(file);
            SetDiagram D = set_diagram_from_json(d.payload);
            if (auto bad = validate(D); !bad.empty()) throw error("invalid diagram: " + bad.front());
            Quotient q = colim_finset(D);
            emit(json{{"classes", q.classes}, {"legs", q.legs}});
            return 0;
        }
        if (*c_lim) {
            Document d = load(file);
            SetDiagram D = set_diagram_from_json(d.payload);
            if (auto bad = validate(D); !bad.empty()) throw error("invalid diagram: " + bad.front());
            LimitSet l = lim_finset(D);
            emit(json{{"size", l.elements.size()}, {"elements", l.elements}});
            return 0;
        }
        if (*c_cic) {
            FinCategory C = load_category(file);
            Functor D = load_functor(file2);
            if (C.objects != D.cod.objects) throw error("diagram codomain differs from the category");
            auto cone = colim_in_category(C, D);
            if (cone)
                emit(json{{"found", true}, {"apex", C.objects[static_cast<std::size_t>(cone->apex)]},
                          {"legs", cone->legs}});
            else
                emit(json{{"found", false}});
            return cone ? 0 : 1;
        }
        if (*c_reshape) {
            Document d = load(file);
            SSetDiagram F = sset_diagram_from_json(d.payload);
            if (auto bad = validate(F); !bad.empty()) throw error("invalid diagram: " + bad.front());
            if (check) {
                ReshapeReport rep = reshape_colim_check(F);
                emit(json{{"ok", rep.ok}, {"level_classes", rep.reshaped_classes},
                          {"direct_classes", rep.direct_classes}, {"issues", rep.issues}});
                return rep.ok ? 0 : 1;
            }
            emit(to_document("set_diagram", reshape_build(F, n).diagram));
            return 0;
        }
        if (*c_hom) {
            auto H = homology(load_sset(file));
            json out = json::array();
            for (const auto& h : H) {
                std::vector<std::string> tor;
                for (const auto& t : h.torsion) tor.push_back(t.get_str());
                out.push_back({{"betti", h.betti}, {"torsion", tor}});
            }
            emit(json{{"homology", out}});
            return 0;
        }
        if (*c_conn) {
            ConnectivityReport r = connectivity(load_sset(file), n, tietze_budget);
            emit(connectivity_json(r));
            return verdict_exit(r.verdict);
        }
        if (*c_contr) {
            ConnectivityReport r = weak_contractible(load_sset(file), tietze_budget);
            emit(connectivity_json(r));
            return verdict_exit(r.verdict);
        }
        if (*c_cof) {
            Functor p = load_functor(file);
            CofinalityReport r = side == "right" ? right_n_cofinal(p, n, tietze_budget)
                                                 : left_n_cofinal(p, n, tietze_budget);
            json per = json::array();
            for (std::size_t d = 0; d < r.per_object.size(); ++d)
                per.push_back({{"object", p.cod.objects[d]},
                               {"report", connectivity_json(r.per_object[d])}});
            json out{{"direction", r.direction}, {"level", r.level},
                     {"verdict", to_string(r.overall)}, {"per_object", per}};
            if (r.witness_object >= 0) {
                out["witness_object"] = p.cod.objects[static_cast<std::size_t>(r.witness_object)];
                out["witness_comma"] = to_json(*r.witness_comma);
            }
            emit(out);
            return verdict_exit(r.overall);
        }
        if (*c_sift) {
            FinCategory C = load_category(file);
            if (tuples >= 0) {
                MultiSiftednessReport r = multi_sifted(cosifted ? opposite(C) : C, n, tuples, tietze_budget);
                json out{{"level", r.level}, {"arity", r.arity}, {"verdict", to_string(r.overall)}};
                if (r.witness_tuple) out["witness_tuple"] = *r.witness_tuple;
                emit(out);
                return verdict_exit(r.overall);
            }
            SiftednessReport r = cosifted ? n_cosifted(C, n, tietze_budget) : n_sifted(C, n, tietze_budget);
            json out{{"level", r.level}, {"nonempty", r.nonempty}, {"verdict", to_string(r.overall)}};
            if (r.witness_pair) {
                const FinCategory& W = cosifted ? opposite(C) : C;
                out["witness_pair"] = {W.objects[static_cast<std::size_t>(r.witness_pair->first)],
                                       W.objects[static_cast<std::size_t>(r.witness_pair->second)]};
                out["witness_comma"] = to_json(*r.witness_comma);
            }
            emit(out);
            return verdict_exit(r.overall);
        }
        if (*c_probe) {
            if (kind_arg == "products") {
                ProductProbeReport r = product_preservation_probe(load_category(file), trials, seed);
                json out{{"pass", r.pass}, {"reason", r.reason}};
                if (r.witness)
                    out["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
                emit(out);
                return r.pass ? 0 : 1;
            }
            Functor p = load_functor(file);
            ProbeReport r = kind_arg == "preservation" ? preservation_probe(p, trials, seed)
                                                       : limit_probe(p, trials, seed);
            json out{{"pass", r.pass}, {"reason", r.reason}};
            if (r.witness) out["witness"] = to_json(*r.witness);
            if (r.witness_object >= 0)
                out["witness_object"] = p.cod.objects[static_cast<std::size_t>(r.witness_object)];
            emit(out);
            return r.pass ? 0 : 1;
        }
        if (*c_fix) {
            emit(fixture_document(file));
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
