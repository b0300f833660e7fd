#include "io.hpp"

#include <fstream>
#include <sstream>

namespace weylscope::io {

namespace {

std::vector<std::string> pointer_tokens(const json::json_pointer& ptr) {
    std::vector<std::string> out;
    std::string s = ptr.to_string();
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('/', i + 1);
        std::string tok = s.substr(i + 1, j == std::string::npos ? std::string::npos : j - i - 1);
        std::string un;
        for (std::size_t k = 0; k < tok.size(); ++k) {
            if (tok[k] == '~' && k + 1 < tok.size()) {
                un += tok[k + 1] == '1' ? '/' : '~';
                ++k;
            } else {
                un += tok[k];
            }
        }
        out.push_back(un);
        if (j == std::string::npos) break;
        i = j;
    }
    return out;
}

std::string where(const Document& doc, const json::json_pointer& ptr) {
    int line = doc.line_of(ptr);
    std::string loc = doc.source;
    if (line > 0) loc += ":" + std::to_string(line);
    std::string p = ptr.to_string();
    return loc + (p.empty() ? "" : " (" + p + ")");
}

}  // namespace

int Document::line_of(const json::json_pointer& ptr) const {
    const auto target = pointer_tokens(ptr);
    struct Frame {
        bool object;
        int index;
        std::string key;
    };
    std::vector<Frame> st;
    bool expect_key = false;
    int line = 1;
    auto matches = [&] {
        if (st.size() != target.size()) return false;
        for (std::size_t k = 0; k < st.size(); ++k) {
            std::string tok = st[k].object ? st[k].key : std::to_string(st[k].index);
            if (tok != target[k]) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == ':') continue;
        if (c == ',') {
            if (!st.empty() && !st.back().object) ++st.back().index;
            expect_key = !st.empty() && st.back().object;
            continue;
        }
        if (c == '}' || c == ']') {
            if (!st.empty()) st.pop_back();
            expect_key = false;
            continue;
        }
        if (c == '"') {
            std::string s;
            std::size_t j = i + 1;
            for (; j < text.size() && text[j] != '"'; ++j) {
                if (text[j] == '\\' && j + 1 < text.size()) ++j;
                s += text[j];
            }
            if (expect_key) {
                st.back().key = s;
                expect_key = false;
            } else if (matches()) {
                return line;
            }
            i = j;
            continue;
        }
        if (matches()) return line;
        if (c == '{') {
            st.push_back({true, 0, ""});
            expect_key = true;
        } else if (c == '[') {
            st.push_back({false, 0, ""});
        } else {
            while (i + 1 < text.size() && std::string_view(",]}\n \t\r").find(text[i + 1]) == std::string_view::npos) ++i;
        }
    }
    return 0;
}

void Document::fail(const json::json_pointer& ptr, const std::string& what) const {
    throw ValidationError(where(*this, ptr) + ": " + what);
}

Document parse_document(std::string text, std::string source) {
    Document doc{std::move(source), std::move(text), {}};
    try {
        doc.value = json::parse(doc.text);
    } catch (const json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < doc.text.size(); ++i) line += doc.text[i] == '\n';
        throw ValidationError(doc.source + ":" + std::to_string(line) + ": malformed JSON");
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

std::int64_t get_int(const Document& doc, const json::json_pointer& ptr) {
    if (!doc.value.contains(ptr)) doc.fail(ptr, "missing value");
    const json& v = doc.value.at(ptr);
    if (!v.is_number_integer()) doc.fail(ptr, "expected an integer");
    return v.get<std::int64_t>();
}

Rational get_rational(const Document& doc, const json::json_pointer& ptr) {
    if (!doc.value.contains(ptr)) doc.fail(ptr, "missing value");
    const json& v = doc.value.at(ptr);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) doc.fail(ptr, "expected an integer or a rational string \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ValidationError& e) {
        doc.fail(ptr, e.what());
    }
}

ExtendedValue get_extended(const Document& doc, const json::json_pointer& ptr) {
    if (doc.value.contains(ptr) && doc.value.at(ptr).is_string()) {
        try {
            return ExtendedValue::parse(doc.value.at(ptr).get<std::string>());
        } catch (const ValidationError& e) {
            doc.fail(ptr, e.what());
        }
    }
    return get_rational(doc, ptr);
}

Vec get_vec(const Document& doc, const json::json_pointer& ptr, int n) {
    if (!doc.value.contains(ptr) || !doc.value.at(ptr).is_array()) doc.fail(ptr, "expected an array");
    const json& a = doc.value.at(ptr);
    if (static_cast<int>(a.size()) != n) doc.fail(ptr, "expected " + std::to_string(n) + " entries");
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(get_rational(doc, ptr / i));
    return v;
}

Vec parse_vec(const std::string& s, int n) {
    Vec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(parse_rational(tok));
    if (static_cast<int>(v.size()) != n)
        throw ValidationError("expected " + std::to_string(n) + " comma-separated entries in \"" + s + "\"");
    return v;
}

std::vector<ExtendedValue> parse_extended_list(const std::string& s) {
    std::vector<ExtendedValue> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(ExtendedValue::parse(tok));
    return v;
}

DatumPtr datum_from_json(const Document& doc) {
    using P = json::json_pointer;
    if (!doc.value.is_object()) doc.fail(P(""), "expected an object");
    if (!doc.value.contains("cartan")) {
        if (doc.value.contains("name") && doc.value["name"].is_string()) return build_named(doc.value["name"]);
        doc.fail(P(""), "missing \"cartan\"");
    }
    const std::int64_t rank = get_int(doc, P("/rank"));
    if (rank < 1) doc.fail(P("/rank"), "rank must be at least 1");
    if (rank > 32) doc.fail(P("/rank"), "rank must be at most 32");
    const json& c = doc.value["cartan"];
    if (!c.is_array() || static_cast<std::int64_t>(c.size()) != rank) doc.fail(P("/cartan"), "expected " + std::to_string(rank) + " rows");
    RootDatum::Cartan cartan(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i) {
        P row = P("/cartan") / i;
        if (!c[i].is_array() || static_cast<std::int64_t>(c[i].size()) != rank)
            doc.fail(row, "expected a row of " + std::to_string(rank) + " integers");
        for (int j = 0; j < rank; ++j) {
            std::int64_t x = get_int(doc, row / j);
            if (x < -3 || x > 2) doc.fail(row / j, "Cartan entry out of range");
            cartan[i][j] = static_cast<int>(x);
        }
    }
    std::string name = doc.value.contains("name") && doc.value["name"].is_string() ? doc.value["name"].get<std::string>() : "";
    DatumPtr d;
    try {
        d = RootDatum::from_cartan(std::move(cartan), name);
    } catch (const ValidationError& e) {
        doc.fail(P("/cartan"), e.what());
    }
    if (doc.value.contains("roots")) {
        const json& rs = doc.value["roots"];
        if (!rs.is_array()) doc.fail(P("/roots"), "expected an array");
        for (std::size_t k = 0; k < rs.size(); ++k) {
            P rp = P("/roots") / k;
            if (!rs[k].is_array() || static_cast<std::int64_t>(rs[k].size()) != rank) doc.fail(rp, "expected a root of length " + std::to_string(rank));
            IVec r;
            for (int i = 0; i < rank; ++i) r.push_back(get_int(doc, rp / i));
            if (!d->find(r)) doc.fail(rp, "not a root of the datum");
        }
    }
    return d;
}

DatumPtr load_datum(const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty()) throw ValidationError("give either --datum or --datum-file");
    if (!file.empty()) return datum_from_json(load_document(file));
    if (name.empty()) throw ValidationError("a root datum is required (--datum or --datum-file)");
    return build_named(name);
}

TypeLabel parse_type(const std::string& s, const RootDatum& d) {
    if (s.empty() || s == "none" || s == "{}") return {};
    if (s == "all") return TypeLabel::full(d.rank());
    if (s == "delta") return TypeLabel{TypeLabel::full(d.rank()).mask & ~(std::uint64_t{1} << (d.rank() - 1))};
    TypeLabel t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A')) throw ValidationError("bad simple root \"" + tok + "\"");
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(tok.substr(1), &used);
            if (used != tok.size() - 1) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ValidationError("bad simple root \"" + tok + "\"");
        }
        if (i < 1 || i > d.rank()) throw ValidationError("simple root " + tok + " out of range");
        t.mask |= std::uint64_t{1} << (i - 1);
    }
    return t;
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const ExtendedValue& v) { return v.str(); }

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(const IVec& v) { return json(v); }

json roots_json(const RootDatum& d, const RootSet& s) {
    json a = json::array();
    for (int k : s.indices()) a.push_back(d.root(k));
    return a;
}

json to_json(const Cone& c) {
    json j;
    j["dim"] = c.dim();
    j["inequalities"] = c.inequalities();
    j["equalities"] = c.equalities();
    j["facets"] = c.canonical().facets;
    j["span_equalities"] = c.canonical().equalities;
    j["lineality_dim"] = c.lineality().size();
    return j;
}

Cone cone_from_json(const Document& doc, const json::json_pointer& ptr, int n) {
    std::vector<Functional> parts[2];
    const char* keys[2] = {"inequalities", "equalities"};
    for (int p = 0; p < 2; ++p) {
        auto kp = ptr / keys[p];
        if (!doc.value.contains(kp)) continue;
        const json& a = doc.value.at(kp);
        if (!a.is_array()) doc.fail(kp, "expected an array");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_array() || static_cast<int>(a[i].size()) != n) doc.fail(kp / i, "expected a functional of length " + std::to_string(n));
            Functional f;
            for (int k = 0; k < n; ++k) f.push_back(get_int(doc, kp / i / k));
            parts[p].push_back(f);
        }
    }
    return Cone(n, parts[0], parts[1]);
}

json parabolic_json(const ParabolicSet& p) {
    auto sp = standard_position(p);
    json j;
    j["id"] = parabolic_id(p);
    j["type"] = sp.type.str();
    j["conjugator"] = sp.w.word;
    j["standard"] = is_standard(p);
    j["roots"] = roots_json(*p.datum, p.members);
    return j;
}

json to_json(const LabeledPrefan& f) {
    json j;
    j["type"] = f.type.str();
    j["cones"] = json::array();
    for (int s = 0; s < f.fan.size(); ++s) {
        json c = to_json(f.fan.cone(s));
        c["stratum"] = s;
        c["parabolic"] = f.parabolic_ids[s];
        c["parabolic_type"] = type_of(f.parabolic(s)).str();
        j["cones"].push_back(c);
    }
    return j;
}

json to_json(const CompactApartmentPoint& x) {
    json j;
    j["stratum"] = parabolic_id(x.stratum);
    j["stratum_index"] = x.point.stratum;
    j["stratum_type"] = type_of(x.stratum).str();
    j["residual"] = to_json(x.point.residual);
    return j;
}

json to_json(const StabilizerProfile& p) {
    const RootDatum& d = *p.stratum.datum;
    json j;
    j["stratum"] = parabolic_id(p.stratum);
    j["full_unipotent"] = roots_json(d, p.full_unipotent);
    j["full_levi"] = roots_json(d, p.full_levi);
    j["filtered"] = json::array();
    for (const auto& [k, level] : p.filtered) j["filtered"].push_back({{"root", d.root(k)}, {"level", to_string(level)}});
    j["normalizer"] = p.normalizer_note;
    return j;
}

json to_json(const RelevanceReport& r) {
    const RootDatum& d = *r.query.datum;
    json j;
    j["parabolic"] = parabolic_id(r.query);
    j["type"] = r.type.str();
    j["relevant"] = r.is_relevant;
    j["minimal_relevant"] = parabolic_id(r.minimal_relevant);
    j["minimal_relevant_type"] = type_of(r.minimal_relevant).str();
    j["active_components"] = roots_json(d, r.active_components);
    j["span_equalities"] = r.span_equalities;
    j["dims_equal"] = r.dims_equal;
    return j;
}

json to_json(const TropicalPolynomial& f) {
    json a = json::array();
    for (const auto& m : f.monomials()) {
        json e = json::object();
        for (const auto& [k, n] : m.exponents) e[std::to_string(k)] = n;
        json mj{{"exponents", e}, {"log_coeff", m.log_coeff.str()}};
        if (!m.character.empty()) mj["character"] = m.character;
        a.push_back(mj);
    }
    return a;
}

json to_json(const DiagSeminorm& s) {
    json a = json::array();
    for (const auto& v : s.values()) a.push_back(v.str());
    return json{{"values", a}};
}

CompactApartmentPoint point_from_json(const Document& doc, const ApartmentContext& ctx) {
    using P = json::json_pointer;
    const int n = ctx.datum()->rank();
    if (!doc.value.is_object()) doc.fail(P(""), "expected an object");
    if (doc.value.contains("interior")) return interior_point(ctx, get_vec(doc, P("/interior"), n));
    const std::int64_t id = get_int(doc, P("/stratum"));
    ParabolicSet q;
    try {
        q = parabolic_by_id(ctx.datum(), static_cast<int>(id));
        ctx.stratum_index(q);
    } catch (const ValidationError& e) {
        doc.fail(P("/stratum"), std::string(e.what()) + " for type " + ctx.type().str());
    }
    return make_point(ctx, q, get_vec(doc, P("/residual"), n));
}

TropicalPolynomial poly_from_json(const Document& doc, const RootDatum& d) {
    using P = json::json_pointer;
    const json& a = doc.value.is_object() && doc.value.contains("monomials") ? doc.value["monomials"] : doc.value;
    P base = doc.value.is_object() ? P("/monomials") : P("");
    if (!a.is_array()) doc.fail(base, "expected a list of monomials");
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < a.size(); ++i) {
        P mp = base / i;
        if (!a[i].is_object()) doc.fail(mp, "expected an object");
        Monomial m;
        m.log_coeff = get_extended(doc, mp / "log_coeff");
        if (m.log_coeff.is_pos_inf()) doc.fail(mp / "log_coeff", "coefficient +inf");
        if (a[i].contains("exponents")) {
            const json& e = a[i]["exponents"];
            if (!e.is_object()) doc.fail(mp / "exponents", "expected an object");
            for (auto it = e.begin(); it != e.end(); ++it) {
                P ep = mp / "exponents" / it.key();
                int k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoi(it.key(), &used);
                    if (used != it.key().size()) throw std::invalid_argument(it.key());
                } catch (const std::exception&) {
                    doc.fail(ep, "generator keys are root indices");
                }
                if (k < 0 || k >= d.num_roots()) doc.fail(ep, "root index out of range");
                std::int64_t n = get_int(doc, ep);
                if (n < 0) doc.fail(ep, "negative exponent");
                m.exponents[k] = n;
            }
        }
        if (a[i].contains("character")) {
            const json& c = a[i]["character"];
            if (!c.is_array() || static_cast<int>(c.size()) != d.rank()) doc.fail(mp / "character", "expected a character of length " + std::to_string(d.rank()));
            for (int k = 0; k < d.rank(); ++k) m.character.push_back(get_int(doc, mp / "character" / k));
        }
        ms.push_back(std::move(m));
    }
    return TropicalPolynomial(std::move(ms));
}

DiagSeminorm seminorm_from_json(const Document& doc) {
    using P = json::json_pointer;
    if (!doc.value.is_object() || !doc.value.contains("values") || !doc.value["values"].is_array())
        doc.fail(P("/values"), "expected a list of values");
    std::vector<ExtendedValue> c;
    for (std::size_t i = 0; i < doc.value["values"].size(); ++i) c.push_back(get_extended(doc, P("/values") / i));
    try {
        return DiagSeminorm(std::move(c));
    } catch (const ValidationError& e) {
        doc.fail(P("/values"), e.what());
    }
}

}  // namespace weylscope::io
