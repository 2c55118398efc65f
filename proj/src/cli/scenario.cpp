#include "mvtop/cli/scenario.hpp"

#include "mvtop/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace mvtop {

using nlohmann::json;

namespace {

std::pair<long, long> line_column(const std::string& text, std::size_t offset) {
    long line = 1;
    long col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string pointer_escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

// Offsets of every value (and of every object key, under "pointer#key") in
// text that nlohmann already accepted.
class PositionIndex {
public:
    explicit PositionIndex(const std::string& text) : s_(text) {
        skip_ws();
        value("");
    }

    [[nodiscard]] std::size_t find(const std::string& ptr) const {
        auto it = pos_.find(ptr);
        return it == pos_.end() ? 0 : it->second;
    }

private:
    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) {
            ++i_;
        }
    }
    std::string string_token() {
        std::string raw;
        ++i_; // opening quote
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                raw += s_[i_++];
            }
            raw += s_[i_++];
        }
        ++i_;
        return json::parse("\"" + raw + "\"").get<std::string>();
    }
    void value(const std::string& ptr) {
        pos_[ptr] = i_;
        if (i_ >= s_.size()) {
            return;
        }
        char c = s_[i_];
        if (c == '{') {
            ++i_;
            for (;;) {
                skip_ws();
                if (s_[i_] == '}') {
                    ++i_;
                    return;
                }
                std::size_t at = i_;
                std::string child = ptr + "/" + pointer_escape(string_token());
                pos_[child + "#key"] = at;
                skip_ws();
                ++i_; // ':'
                skip_ws();
                value(child);
                skip_ws();
                if (s_[i_] == ',') {
                    ++i_;
                }
            }
        }
        if (c == '[') {
            ++i_;
            for (std::size_t k = 0;; ++k) {
                skip_ws();
                if (s_[i_] == ']') {
                    ++i_;
                    return;
                }
                value(ptr + "/" + std::to_string(k));
                skip_ws();
                if (s_[i_] == ',') {
                    ++i_;
                }
            }
        }
        if (c == '"') {
            (void)string_token();
            return;
        }
        while (i_ < s_.size() && std::string_view(",}] \t\r\n").find(s_[i_]) == std::string_view::npos) {
            ++i_;
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::map<std::string, std::size_t> pos_;
};

// Already carries its location; passed through nested Reader::at calls.
class LocatedError : public Error {
public:
    using Error::Error;
};

class Reader {
public:
    Reader(const std::string& text, std::string origin) : text_(text), origin_(std::move(origin)) {
        try {
            doc_ = json::parse(text);
        } catch (const json::parse_error& e) {
            auto [l, c] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
            throw LocatedError(ErrorKind::ParseError, where(l, c) + "malformed JSON: " + e.what());
        }
        index_.emplace(text_);
    }

    const json& doc() const { return doc_; }

    [[noreturn]] void error(const std::string& ptr, const std::string& msg, ErrorKind kind = ErrorKind::ParseError,
                            bool key = false) const {
        std::size_t off = key ? index_->find(ptr + "#key") : index_->find(ptr);
        auto [l, c] = line_column(text_, off);
        throw LocatedError(kind, where(l, c) + msg + " (at " + (ptr.empty() ? "/" : ptr) + ")");
    }

    /// Object with the given fields; unknown fields rejected.
    void fields(const json& j, const std::string& ptr, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) const {
        if (!j.is_object()) {
            error(ptr, "expected an object");
        }
        std::set<std::string> allowed;
        for (const char* r : required) {
            allowed.insert(r);
            if (!j.contains(r)) {
                error(ptr, std::string("missing field \"") + r + "\"");
            }
        }
        for (const char* o : optional) {
            allowed.insert(o);
        }
        for (const auto& [k, v] : j.items()) {
            if (!allowed.contains(k)) {
                error(ptr + "/" + pointer_escape(k), "unknown field \"" + k + "\"", ErrorKind::ParseError, true);
            }
        }
    }

    std::string str(const json& j, const std::string& ptr) const {
        if (!j.is_string()) {
            error(ptr, "expected a string");
        }
        return j.get<std::string>();
    }
    long integer(const json& j, const std::string& ptr) const {
        if (!j.is_number_integer()) {
            error(ptr, "expected an integer");
        }
        return j.get<long>();
    }
    const json& array(const json& j, const std::string& ptr) const {
        if (!j.is_array()) {
            error(ptr, "expected an array");
        }
        return j;
    }

    /// Runs fn, re-raising library errors at ptr with their kind kept.
    template <class F> auto at(const std::string& ptr, F&& fn) const -> decltype(fn()) {
        try {
            return fn();
        } catch (const LocatedError&) {
            throw;
        } catch (const Error& e) {
            std::string msg = e.what();
            std::string prefix = std::string(to_string(e.kind())) + ": ";
            if (msg.starts_with(prefix)) {
                msg.erase(0, prefix.size());
            }
            error(ptr, msg, e.kind());
        }
    }

private:
    std::string where(long l, long c) const { return origin_ + ":" + std::to_string(l) + ":" + std::to_string(c) + ": "; }

    const std::string& text_;
    std::string origin_;
    json doc_;
    std::optional<PositionIndex> index_;
};

std::string key_ptr(const std::string& base, const std::string& key) { return base + "/" + pointer_escape(key); }

std::set<Place> places(const Reader& r, const json& j, const std::string& ptr) {
    std::set<Place> out;
    std::size_t k = 0;
    for (const auto& e : r.array(j, ptr)) {
        std::string p = ptr + "/" + std::to_string(k++);
        out.insert(r.at(p, [&] { return parse_place(r.str(e, p)); }));
    }
    return out;
}

ModulusPair read_pair(const Reader& r, const json& j, const std::string& ptr) {
    r.fields(j, ptr, {"components"}, {});
    ModulusPair m;
    std::size_t k = 0;
    for (const auto& c : r.array(j["components"], ptr + "/components")) {
        std::string cp = ptr + "/components/" + std::to_string(k++);
        r.fields(c, cp, {"divisor"}, {"deleted", "label"});
        Divisor d = r.at(cp + "/divisor", [&] { return parse_divisor(r.str(c["divisor"], cp + "/divisor")); });
        std::set<Place> del = c.contains("deleted") ? places(r, c["deleted"], cp + "/deleted") : std::set<Place>{};
        std::string label = c.contains("label") ? r.str(c["label"], cp + "/label") : "";
        m.ambient.components.push_back({label, del});
        m.modulus.push_back(d);
    }
    r.at(ptr, [&] {
        m.validate();
        return 0;
    });
    return m;
}

RationalMap read_map(const Reader& r, const json& j, const std::string& ptr) {
    RationalMap out;
    std::size_t k = 0;
    for (const auto& c : r.array(j, ptr)) {
        std::string cp = ptr + "/" + std::to_string(k++);
        r.fields(c, cp, {"target"}, {"map", "constant"});
        int target = static_cast<int>(r.integer(c["target"], cp + "/target"));
        if (c.contains("map") == c.contains("constant")) {
            r.error(cp, "exactly one of \"map\" and \"constant\" is required");
        }
        if (c.contains("map")) {
            auto f = r.at(cp + "/map", [&] { return parse_rational_function(r.str(c["map"], cp + "/map")); });
            out.parts.emplace_back(target, f);
        } else {
            auto p = r.at(cp + "/constant", [&] { return parse_place(r.str(c["constant"], cp + "/constant")); });
            out.parts.push_back(ComponentMap::constant_at(target, p));
        }
    }
    return out;
}

std::vector<std::pair<std::string, long>> read_terms(const Reader& r, const Scenario& s, const json& j,
                                                     const std::string& ptr) {
    std::vector<std::pair<std::string, long>> out;
    std::size_t k = 0;
    for (const auto& t : r.array(j, ptr)) {
        std::string tp = ptr + "/" + std::to_string(k++);
        r.fields(t, tp, {"corr"}, {"mult"});
        std::string name = r.str(t["corr"], tp + "/corr");
        if (!s.correspondences.contains(name)) {
            r.error(tp + "/corr", "unknown correspondence \"" + name + "\"");
        }
        long n = t.contains("mult") ? r.integer(t["mult"], tp + "/mult") : 1;
        out.emplace_back(name, n);
    }
    return out;
}

} // namespace

const ModulusPair& Scenario::pair(const std::string& ref) const {
    if (auto it = pairs.find(ref); it != pairs.end()) {
        return it->second;
    }
    auto dot = ref.rfind('.');
    if (dot != std::string::npos) {
        const MSquare& t = square(ref.substr(0, dot)).t;
        std::string corner = ref.substr(dot + 1);
        if (corner == "00") {
            return t.t00();
        }
        if (corner == "01") {
            return t.t01();
        }
        if (corner == "10") {
            return t.t10();
        }
        if (corner == "11") {
            return t.t11();
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown modulus pair \"" + ref + "\"");
}

const AdmissibleMorphism& Scenario::morphism(const std::string& ref) const {
    if (auto it = morphisms.find(ref); it != morphisms.end()) {
        return it->second;
    }
    auto dot = ref.rfind('.');
    if (dot != std::string::npos) {
        const MSquare& t = square(ref.substr(0, dot)).t;
        std::string edge = ref.substr(dot + 1);
        if (edge == "u") {
            return t.u;
        }
        if (edge == "p") {
            return t.p;
        }
        if (edge == "v") {
            return t.v;
        }
        if (edge == "q") {
            return t.q;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown morphism \"" + ref + "\"");
}

const BuiltSquare& Scenario::square(const std::string& ref) const {
    auto it = squares.find(ref);
    if (it == squares.end()) {
        fail(ErrorKind::InvalidArgument, "unknown square \"" + ref + "\"");
    }
    return it->second;
}

Corr Scenario::corr(const std::vector<std::pair<std::string, long>>& terms) const {
    Corr out;
    for (const auto& [name, n] : terms) {
        auto it = correspondences.find(name);
        if (it == correspondences.end()) {
            fail(ErrorKind::InvalidArgument, "unknown correspondence \"" + name + "\"");
        }
        out.add(it->second.v, n);
    }
    return out;
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    Reader r(text, origin);
    const json& doc = r.doc();
    r.fields(doc, "", {"schema"},
             {"description", "pairs", "morphisms", "squares", "correspondences", "tasks"});
    if (r.str(doc["schema"], "/schema") != kScenarioSchema) {
        r.error("/schema", std::string("unsupported schema, expected \"") + kScenarioSchema + "\"");
    }
    if (doc.contains("description")) {
        (void)r.str(doc["description"], "/description");
    }
    auto section = [&](const char* name) -> const json& {
        static const json empty = json::object();
        if (!doc.contains(name)) {
            return empty;
        }
        if (!doc[name].is_object()) {
            r.error(std::string("/") + name, "expected an object");
        }
        return doc[name];
    };

    Scenario s;
    for (const auto& [name, j] : section("pairs").items()) {
        s.pairs.emplace(name, read_pair(r, j, key_ptr("/pairs", name)));
    }

    // generated squares only need their base pair
    const json& squares = section("squares");
    for (const auto& [name, j] : squares.items()) {
        std::string ptr = key_ptr("/squares", name);
        if (!j.is_object() || !j.contains("kind")) {
            r.error(ptr, "square needs a \"kind\"");
        }
        std::string kind = r.str(j["kind"], ptr + "/kind");
        if (kind == "explicit") {
            continue;
        }
        if (kind != "nisnevich" && kind != "zariski") {
            r.error(ptr + "/kind", "kind must be nisnevich, zariski or explicit");
        }
        if (kind == "nisnevich") {
            r.fields(j, ptr, {"kind", "base", "z", "e", "cover", "c", "d"}, {});
        } else {
            r.fields(j, ptr, {"kind", "base", "z", "e", "c", "d"}, {});
        }
        const ModulusPair& base = r.at(ptr + "/base", [&]() -> const ModulusPair& {
            return s.pair(r.str(j["base"], ptr + "/base"));
        });
        auto z = places(r, j["z"], ptr + "/z");
        auto e = places(r, j["e"], ptr + "/e");
        int c = static_cast<int>(r.integer(j["c"], ptr + "/c"));
        int d = static_cast<int>(r.integer(j["d"], ptr + "/d"));
        BuiltSquare b = r.at(ptr, [&] {
            if (kind == "nisnevich") {
                auto cover = r.at(ptr + "/cover", [&] { return parse_rational_function(r.str(j["cover"], ptr + "/cover")); });
                return build_nisnevich_mv_square(base, z, cover, e, c, d);
            }
            return build_zariski_square(base, z, e, c, d);
        });
        s.squares.emplace(name, std::move(b));
    }

    for (const auto& [name, j] : section("morphisms").items()) {
        std::string ptr = key_ptr("/morphisms", name);
        r.fields(j, ptr, {"source", "target", "components"}, {});
        const ModulusPair& src =
            r.at(ptr + "/source", [&]() -> const ModulusPair& { return s.pair(r.str(j["source"], ptr + "/source")); });
        const ModulusPair& tgt =
            r.at(ptr + "/target", [&]() -> const ModulusPair& { return s.pair(r.str(j["target"], ptr + "/target")); });
        RationalMap map = read_map(r, j["components"], ptr + "/components");
        if (map.size() != src.size()) {
            r.error(ptr + "/components", "one entry per source component is required");
        }
        for (const auto& part : map.parts) {
            if (part.target() < 0 || static_cast<std::size_t>(part.target()) >= tgt.size()) {
                r.error(ptr + "/components", "target component out of range");
            }
        }
        s.morphisms.emplace(name, r.at(ptr, [&] { return AdmissibleMorphism::make(src, tgt, map); }));
    }

    for (const auto& [name, j] : squares.items()) {
        std::string ptr = key_ptr("/squares", name);
        if (j["kind"] != "explicit") {
            continue;
        }
        r.fields(j, ptr, {"kind", "u", "p", "v", "q"}, {});
        auto edge = [&](const char* e) {
            std::string ep = ptr + "/" + e;
            return r.at(ep, [&] { return s.morphism(r.str(j[e], ep)); });
        };
        MSquare t{edge("u"), edge("p"), edge("v"), edge("q")};
        if (!t.commutes()) {
            r.error(ptr, "square does not commute", ErrorKind::InconsistentInput);
        }
        s.squares.emplace(name, BuiltSquare{t, std::nullopt});
    }

    for (const auto& [name, j] : section("correspondences").items()) {
        std::string ptr = key_ptr("/correspondences", name);
        r.fields(j, ptr, {"F"}, {"from", "to", "from_component", "to_component"});
        Poly f = r.at(ptr + "/F", [&] { return parse_poly(r.str(j["F"], ptr + "/F")); });
        auto comp = [&](const char* k) {
            return j.contains(k) ? static_cast<std::size_t>(r.integer(j[k], ptr + "/" + k)) : std::size_t{0};
        };
        NamedCorr nc{r.at(ptr + "/F", [&] { return ElemCorr::make(comp("from_component"), comp("to_component"), f); }),
                     std::nullopt, std::nullopt, "", ""};
        if (j.contains("from") != j.contains("to")) {
            r.error(ptr, "\"from\" and \"to\" go together");
        }
        if (j.contains("from")) {
            nc.from_ref = r.str(j["from"], ptr + "/from");
            nc.to_ref = r.str(j["to"], ptr + "/to");
            nc.from = r.at(ptr + "/from", [&] { return s.pair(nc.from_ref); });
            nc.to = r.at(ptr + "/to", [&] { return s.pair(nc.to_ref); });
        }
        s.correspondences.emplace(name, std::move(nc));
    }

    if (!doc.contains("tasks")) {
        return s;
    }
    const json& tasks = doc["tasks"];
    r.fields(tasks, "/tasks", {}, {"fiber_products", "off_diagonals", "base_changes", "glues", "lifts", "oracles"});
    auto each = [&](const char* key, auto&& fn) {
        if (!tasks.contains(key)) {
            return;
        }
        std::string ptr = std::string("/tasks/") + key;
        std::size_t k = 0;
        for (const auto& t : r.array(tasks[key], ptr)) {
            fn(t, ptr + "/" + std::to_string(k++));
        }
    };
    auto morphism_ref = [&](const json& t, const std::string& ptr, const char* k) {
        std::string ref = r.str(t[k], ptr + "/" + k);
        r.at(ptr + "/" + k, [&] { return s.morphism(ref); });
        return ref;
    };
    auto square_ref = [&](const json& t, const std::string& ptr) {
        std::string ref = r.str(t["square"], ptr + "/square");
        r.at(ptr + "/square", [&] { return s.square(ref); });
        return ref;
    };
    auto pair_ref = [&](const json& t, const std::string& ptr, const char* k) {
        std::string ref = r.str(t[k], ptr + "/" + k);
        r.at(ptr + "/" + k, [&] { return s.pair(ref); });
        return ref;
    };
    each("fiber_products", [&](const json& t, const std::string& ptr) {
        r.fields(t, ptr, {"left", "right"}, {});
        s.fiber_products.push_back({morphism_ref(t, ptr, "left"), morphism_ref(t, ptr, "right")});
    });
    each("off_diagonals", [&](const json& t, const std::string& ptr) {
        std::string ref = r.str(t, ptr);
        r.at(ptr, [&] { return s.morphism(ref); });
        s.off_diagonals.push_back(ref);
    });
    each("base_changes", [&](const json& t, const std::string& ptr) {
        r.fields(t, ptr, {"along"}, {"square", "cover"});
        if (t.contains("square") == t.contains("cover")) {
            r.error(ptr, "exactly one of \"square\" and \"cover\" is required");
        }
        BaseChangeTask b;
        b.along = morphism_ref(t, ptr, "along");
        if (t.contains("square")) {
            b.square = square_ref(t, ptr);
        } else {
            b.cover = morphism_ref(t, ptr, "cover");
        }
        s.base_changes.push_back(b);
    });
    each("glues", [&](const json& t, const std::string& ptr) {
        r.fields(t, ptr, {"square", "f", "g"}, {});
        s.glues.push_back({square_ref(t, ptr), morphism_ref(t, ptr, "f"), morphism_ref(t, ptr, "g")});
    });
    each("lifts", [&](const json& t, const std::string& ptr) {
        r.fields(t, ptr, {"square", "source", "alpha", "beta"}, {});
        s.lifts.push_back({square_ref(t, ptr), pair_ref(t, ptr, "source"), read_terms(r, s, t["alpha"], ptr + "/alpha"),
                           read_terms(r, s, t["beta"], ptr + "/beta")});
    });
    each("oracles", [&](const json& t, const std::string& ptr) {
        r.fields(t, ptr, {"square", "source"}, {});
        s.oracles.push_back({square_ref(t, ptr), pair_ref(t, ptr, "source")});
    });
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::InvalidArgument, "cannot read scenario file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

} // namespace mvtop
