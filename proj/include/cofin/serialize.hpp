#pragma once

#include <string>

#include <json.hpp>

#include "cofin/diagram.hpp"
#include "cofin/fincat.hpp"
#include "cofin/sset.hpp"

namespace cofin {

using json = nlohmann::json;  // std::map keyed, so dumps are canonically sorted

inline const char* format_version = "1";

inline json to_json(const MonotoneMap& f) {
    return json{{"source", f.source_rank}, {"target", f.target_rank}, {"values", f.values}};
}

inline MonotoneMap monotone_from_json(const json& j) {
    return MonotoneMap(j.at("source").get<int>(), j.at("target").get<int>(),
                       j.at("values").get<std::vector<int>>());
}

inline json to_json(const FinCategory& C) {
    json mors = json::array();
    for (const auto& m : C.morphisms) mors.push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
    return json{{"objects", C.objects}, {"morphisms", mors}, {"identity", C.identity},
                {"table", C.table}};
}

inline FinCategory category_from_json(const json& j) {
    FinCategory C;
    C.objects = j.at("objects").get<std::vector<std::string>>();
    for (const auto& m : j.at("morphisms"))
        C.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<int>(),
                               m.at("dst").get<int>()});
    C.identity = j.at("identity").get<std::vector<int>>();
    C.table = j.at("table").get<std::vector<std::vector<int>>>();
    return C;
}

inline json to_json(const Functor& F) {
    return json{{"dom", to_json(F.dom)}, {"cod", to_json(F.cod)}, {"on_objects", F.obj_map},
                {"on_morphisms", F.mor_map}};
}

inline Functor functor_from_json(const json& j) {
    return Functor{category_from_json(j.at("dom")), category_from_json(j.at("cod")),
                   j.at("on_objects").get<std::vector<int>>(),
                   j.at("on_morphisms").get<std::vector<int>>()};
}

inline json to_json(const SSet& S) {
    json levels = json::array();
    for (int k = 0; k <= S.truncation; ++k) {
        json level = json::array();
        for (int x = 0; x < S.nondeg_count(k); ++x) {
            json faces = json::array();
            if (k > 0)
                for (int i = 0; i <= k; ++i) {
                    SimplexRef f = face(S, {identity_map(k), x}, i);
                    faces.push_back({{"op", to_json(f.op)}, {"gen", f.gen}});
                }
            level.push_back({{"id", S.id_of(k, x)}, {"faces", faces}});
        }
        levels.push_back(level);
    }
    return json{{"truncation", S.truncation}, {"levels", levels}};
}

inline SSet sset_from_json(const json& j) {
    SSet S;
    S.truncation = j.at("truncation").get<int>();
    S.init_levels();
    const json& levels = j.at("levels");
    for (int k = 0; k <= S.truncation && k < static_cast<int>(levels.size()); ++k)
        for (const auto& cell : levels.at(static_cast<std::size_t>(k))) {
            std::vector<SimplexRef> faces;
            for (const auto& f : cell.at("faces"))
                faces.push_back({monotone_from_json(f.at("op")), f.at("gen").get<int>()});
            S.add(k, cell.at("id").get<std::string>(), std::move(faces));
        }
    return S;
}

inline json to_json(const SetDiagram& D) {
    return json{{"shape", to_json(D.shape)}, {"sizes", D.sizes}, {"action", D.action}};
}

inline SetDiagram set_diagram_from_json(const json& j) {
    SetDiagram D;
    D.shape = category_from_json(j.at("shape"));
    D.sizes = j.at("sizes").get<std::vector<int>>();
    D.action = j.at("action").get<std::vector<std::vector<int>>>();
    return D;
}

inline json to_json(const SSetDiagram& F) {
    return json{{"base", to_json(F.base)}, {"vertex_sizes", F.vertex_sizes},
                {"edge_actions", F.edge_actions}};
}

inline SSetDiagram sset_diagram_from_json(const json& j) {
    SSetDiagram F;
    F.base = sset_from_json(j.at("base"));
    F.vertex_sizes = j.at("vertex_sizes").get<std::vector<int>>();
    F.edge_actions = j.at("edge_actions").get<std::vector<std::vector<int>>>();
    return F;
}

template <typename T>
json to_document(const std::string& kind, const T& value) {
    return json{{"format_version", format_version}, {"kind", kind}, {"payload", to_json(value)}};
}

struct Document {
    std::string kind;
    json payload;
};

inline Document parse_document(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("kind") || !j.contains("payload"))
        throw error("document: missing kind or payload");
    if (j.value("format_version", "") != format_version)
        throw error("document: unsupported format_version");
    return {j.at("kind").get<std::string>(), j.at("payload")};
}

inline std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cofin
