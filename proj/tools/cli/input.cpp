#include "cli/input.hpp"

#include <fstream>

#include "cli/convert.hpp"

namespace krull::cli {

namespace {

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
    return j;
}

Preset from_group_and_set(const Json& group, const Json& set, const Json* multiplicities) {
    GroupSpec g = group_from_json(group);
    if (!set.is_array()) throw ParseError("set must be a JSON array of elements");
    std::vector<GroupElement> els;
    for (const auto& e : set) els.push_back(element_from_json(g, e));
    Preset p;
    p.family = "custom";
    p.name = "custom";
    p.alphabet = make_alphabet(g, els);
    if (multiplicities) {
        if (!multiplicities->is_array() || multiplicities->size() != els.size())
            throw ParseError("multiplicities must list one count per element");
        Characteristic c{g, {}};
        for (std::size_t i = 0; i < els.size(); ++i) c.classes.emplace_back(els[i], (*multiplicities)[i].get<Int>());
        p.characteristic = c;
    }
    return p;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open input file '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("input file '" + path + "' is not a JSON object");
    return j;
}

Preset from_file(const std::string& path) {
    Json j = read_json_file(path);
    if (j.contains("columns")) {
        const Json& cols = j["columns"];
        if (!cols.is_array() || cols.empty()) throw ParseError("columns must be a nonempty array");
        DefiningMatrix dm;
        dm.rows = j.value("rows", static_cast<int>(cols[0].at("vec").size()));
        for (const auto& c : cols) dm.columns.emplace_back(c.at("vec").get<Vec>(), c.value("mult", Int{1}));
        return from_matrix(dm, j.value("row_reduce", false));
    }
    if (j.contains("matrix")) {
        const Json& m = j["matrix"];
        if (!m.is_array() || m.empty()) throw ParseError("matrix must be a nonempty array of rows");
        DefiningMatrix dm;
        dm.rows = static_cast<int>(m.size());
        const std::size_t cols = m[0].size();
        std::vector<Int> mult = j.value("multiplicities", std::vector<Int>(cols, 1));
        if (mult.size() != cols) throw ParseError("multiplicities must list one count per column");
        for (std::size_t c = 0; c < cols; ++c) {
            Vec col;
            for (const auto& row : m) {
                if (row.size() != cols) throw ShapeError("matrix rows differ in length");
                col.push_back(row[c].get<Int>());
            }
            dm.columns.emplace_back(col, mult[c]);
        }
        return from_matrix(dm, j.value("row_reduce", false));
    }
    if (!j.contains("group") || !j.contains("set")) throw ParseError("input file needs 'group' and 'set', or 'matrix'");
    const Json* mult = j.contains("multiplicities") ? &j["multiplicities"] : nullptr;
    return from_group_and_set(j["group"], j["set"], mult);
}

AlphabetPtr alphabet_from_json(const Json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("group") || !j.contains("set"))
        throw ParseError(what + " needs 'group' and 'set'");
    return from_group_and_set(j["group"], j["set"], nullptr).alphabet;
}

}  // namespace

TransferMap load_transfer_map(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return builtin_map(spec.substr(prefix.size()));
    if (spec == "prop712" || spec == "prop713" || spec == "collapse") return builtin_map(spec);
    Json j = read_json_file(spec);
    const Json& src = j.at("source");
    const Json& dst = j.at("target");
    GroupSpec tg = group_from_json(dst.at("group"));
    std::vector<GroupElement> images;
    for (const auto& e : j.at("images")) images.push_back(element_from_json(tg, e));
    // Images are listed in the order of the source set as written, so pair
    // them up before the alphabet sorts its elements.
    GroupSpec sg = group_from_json(src.at("group"));
    const Json& set = src.at("set");
    if (!set.is_array() || set.size() != images.size()) throw ParseError("images must list one element per source element");
    std::map<GroupElement, GroupElement> image_of;
    for (std::size_t i = 0; i < images.size(); ++i) image_of[element_from_json(sg, set[i])] = images[i];
    AlphabetPtr source = alphabet_from_json(src, "source");
    AlphabetPtr target = alphabet_from_json(dst, "target");
    std::vector<GroupElement> assignment;
    for (const auto& g : source->elements()) assignment.push_back(image_of.at(g));
    return TransferMap(j.value("name", std::string("custom")), source, target, assignment);
}

Preset resolve_input(const InputOptions& in) {
    const int sources = !in.preset.empty() + !in.file.empty() + (!in.group.empty() || !in.set.empty());
    if (sources == 0) throw ArgumentError("no input: give --preset, --group with --set, or --input");
    if (sources > 1) throw ArgumentError("give only one of --preset, --group/--set and --input");
    if (!in.file.empty()) return from_file(in.file);
    if (!in.group.empty() || !in.set.empty()) {
        if (in.group.empty() || in.set.empty()) throw ArgumentError("--group and --set must be given together");
        return from_group_and_set(parse_json_text(in.group, "--group"), parse_json_text(in.set, "--set"), nullptr);
    }
    std::map<std::string, std::string> named{{"r", in.r},         {"alpha", in.alpha}, {"n", in.n},
                                             {"q", in.q},         {"type", in.type},   {"spl", in.spl},
                                             {"include_zero", in.include_zero}};
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : named)
        if (!v.empty()) params[k] = v;
    for (const auto& kv : in.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ArgumentError("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (params.empty()) return preset_from_name(in.preset);
    if (in.preset.find(':') != std::string::npos)
        throw ArgumentError("use either 'family:p1:p2' or named parameters, not both");
    return build_preset(in.preset, params);
}

Json input_echo(const Preset& p) {
    Json j{{"name", p.name}, {"family", p.family}, {"params", p.params}, {"alphabet", alphabet_json(*p.alphabet)}};
    if (p.characteristic) j["characteristic"] = characteristic_json(*p.characteristic);
    return j;
}

}  // namespace krull::cli
