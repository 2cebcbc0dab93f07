#include "untwist/knot/dataset.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>

namespace untwist {

using nlohmann::json;

namespace {

class ConstructionParser {
public:
    ConstructionParser(std::string_view text, const KnotLookup& lookup) : s_(text), lookup_(lookup) {}

    KnotRecord parse() {
        KnotRecord k = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return k;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw DatasetError("construction '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && word_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    std::int64_t integer() {
        std::string w = word();
        if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) error("expected an integer");
        return std::stoll(w);
    }

    KnotRecord expr() {
        KnotRecord k = term();
        while (accept('#')) k = connected_sum(k, term());
        return k;
    }

    KnotRecord term() {
        bool neg = accept('-');
        skip();
        std::size_t save = pos_;
        std::string w = word();
        std::int64_t copies = 1;
        if (!w.empty() && w.find_first_not_of("0123456789") == std::string::npos && accept('*')) {
            copies = std::stoll(w);
            if (copies < 1) error("multiplier must be positive");
        } else {
            pos_ = save;
        }
        KnotRecord a = atom();
        KnotRecord k = a;
        for (std::int64_t i = 1; i < copies; ++i) k = connected_sum(k, a);
        return neg ? mirror(k) : k;
    }

    KnotRecord atom() {
        if (accept('(')) {
            KnotRecord k = expr();
            expect(')');
            return k;
        }
        std::string w = word();
        if (w.empty()) error("expected a knot");
        if (w == "T" && accept('(')) {
            std::int64_t p = integer();
            expect(',');
            std::int64_t q = integer();
            expect(')');
            try {
                return torus_knot(p, q);
            } catch (const std::domain_error& e) {
                error(e.what());
            }
        }
        const KnotRecord* ref = lookup_ ? lookup_(w) : nullptr;
        if (!ref) error("unknown knot '" + w + "' (records may only refer to earlier records)");
        return *ref;
    }

    std::string_view s_;
    const KnotLookup& lookup_;
    std::size_t pos_ = 0;
};

const std::set<std::string> kFields = {
    "name",        "alternating",  "thin",           "signature",         "determinant",  "arf",
    "genus",       "genus4",       "tau",            "v_seq",             "v_seq_mirror", "signature_samples",
    "signature_range", "two_bridge", "branched_ranks", "e1_trivial", "d_spin_double_cover", "known_indices",
    "construction", "external_obstructions"};

struct FieldReader {
    const json& j;
    std::string where;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw DatasetError(where + ": field '" + field + "': " + what);
    }
    bool has(const char* f) const { return j.contains(f); }
    std::int64_t integer(const char* f) const {
        const json& v = j.at(f);
        if (!v.is_number_integer()) fail(f, "expected an integer");
        return v.get<std::int64_t>();
    }
    bool boolean(const char* f) const {
        const json& v = j.at(f);
        if (!v.is_boolean()) fail(f, "expected true or false");
        return v.get<bool>();
    }
    std::string string(const char* f) const {
        const json& v = j.at(f);
        if (!v.is_string()) fail(f, "expected a string");
        return v.get<std::string>();
    }
    Rational rational(const char* f) const {
        try {
            return Rational::parse(string(f));
        } catch (const std::invalid_argument& e) {
            fail(f, e.what());
        }
    }
    std::pair<std::int64_t, std::int64_t> int_pair(const char* f) const {
        const json& v = j.at(f);
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            fail(f, "expected [integer, integer]");
        return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
    }
    VSequence vseq(const char* f) const {
        const json& v = j.at(f);
        if (!v.is_array()) fail(f, "expected an array of integers");
        std::vector<std::int64_t> vals;
        for (const auto& e : v) {
            if (!e.is_number_integer()) fail(f, "expected an array of integers");
            vals.push_back(e.get<std::int64_t>());
        }
        try {
            return VSequence(std::move(vals));
        } catch (const std::invalid_argument& e) {
            fail(f, e.what());
        }
    }
};

template <typename T>
void merge(const FieldReader& r, const char* field, T value, T& slot, bool computed) {
    if (computed && !(slot == value)) r.fail(field, "conflicts with the value computed from the construction");
    slot = std::move(value);
}

template <typename T>
void merge(const FieldReader& r, const char* field, T value, std::optional<T>& slot) {
    if (slot && !(*slot == value)) r.fail(field, "conflicts with the value computed from the construction");
    slot = std::move(value);
}

}  // namespace

KnotRecord build_construction(std::string_view expr, const KnotLookup& lookup) {
    return ConstructionParser(expr, lookup).parse();
}

KnotRecord record_from_json(const json& j, const KnotLookup& lookup) {
    std::string where = "record";
    if (!j.is_object()) throw DatasetError(where + ": expected an object");
    if (j.contains("name") && j["name"].is_string()) where += " '" + j["name"].get<std::string>() + "'";
    for (const auto& [key, _] : j.items())
        if (!kFields.count(key)) throw DatasetError(where + ": unknown field '" + key + "'");
    FieldReader r{j, where};
    if (!r.has("name")) r.fail("name", "missing");

    KnotRecord k;
    const bool built = r.has("construction");
    if (built) {
        k = build_construction(r.string("construction"), lookup);
        k.construction = r.string("construction");
    } else {
        for (const char* f : {"signature", "determinant", "arf", "genus"})
            if (!r.has(f)) r.fail(f, "missing (required without a construction)");
    }
    k.name = r.string("name");
    if (r.has("alternating")) merge(r, "alternating", r.boolean("alternating"), k.alternating, built && k.alternating);
    if (r.has("thin")) merge(r, "thin", r.boolean("thin"), k.thin, built && k.thin);
    if (r.has("signature")) merge(r, "signature", r.integer("signature"), k.signature, built);
    if (r.has("determinant")) merge(r, "determinant", r.integer("determinant"), k.determinant, built);
    if (r.has("arf")) {
        std::int64_t a = r.integer("arf");
        if (a != 0 && a != 1) r.fail("arf", "must be 0 or 1");
        merge(r, "arf", static_cast<int>(a), k.arf, built);
    }
    if (r.has("genus")) merge(r, "genus", r.integer("genus"), k.genus, built);
    if (r.has("genus4")) merge(r, "genus4", r.integer("genus4"), k.genus4);
    if (r.has("tau")) merge(r, "tau", r.integer("tau"), k.tau);
    if (r.has("v_seq")) merge(r, "v_seq", r.vseq("v_seq"), k.v_seq);
    if (r.has("v_seq_mirror")) merge(r, "v_seq_mirror", r.vseq("v_seq_mirror"), k.v_seq_mirror);
    if (r.has("signature_samples")) {
        const json& s = j["signature_samples"];
        if (!s.is_object()) r.fail("signature_samples", "expected an object mapping \"r/l\" to an integer");
        for (const auto& [x, v] : s.items()) {
            if (!v.is_number_integer()) r.fail("signature_samples", "value at " + x + " is not an integer");
            Rational rx;
            try {
                rx = Rational::parse(x);
            } catch (const std::invalid_argument& e) {
                r.fail("signature_samples", e.what());
            }
            k.signature_samples[rx] = v.get<std::int64_t>();
        }
    }
    if (r.has("signature_range")) merge(r, "signature_range", r.int_pair("signature_range"), k.signature_range);
    if (r.has("two_bridge")) merge(r, "two_bridge", r.int_pair("two_bridge"), k.two_bridge);
    if (r.has("branched_ranks")) {
        const json& b = j["branched_ranks"];
        if (!b.is_object()) r.fail("branched_ranks", "expected an object mapping q to a rank");
        for (const auto& [q, v] : b.items()) {
            if (!v.is_number_integer() || q.empty() || q.find_first_not_of("0123456789") != std::string::npos)
                r.fail("branched_ranks", "entry '" + q + "' must map an integer q to an integer rank");
            k.branched_ranks[std::stoll(q)] = v.get<std::int64_t>();
        }
    }
    if (r.has("e1_trivial")) k.e1_trivial = r.boolean("e1_trivial");
    if (r.has("d_spin_double_cover"))
        merge(r, "d_spin_double_cover", r.rational("d_spin_double_cover"), k.d_spin_double_cover);
    if (r.has("known_indices")) {
        const json& ks = j["known_indices"];
        if (!ks.is_array()) r.fail("known_indices", "expected an array of indices like \"2-\"");
        k.known_indices.clear();
        for (const auto& e : ks) {
            if (!e.is_string()) r.fail("known_indices", "expected strings like \"2-\"");
            try {
                k.known_indices.insert(TwistIndex::parse(e.get<std::string>()));
            } catch (const std::invalid_argument& ex) {
                r.fail("known_indices", ex.what());
            }
        }
    }
    if (r.has("external_obstructions")) {
        const json& es = j["external_obstructions"];
        if (!es.is_array()) r.fail("external_obstructions", "expected an array of {index, reason}");
        k.external_obstructions.clear();
        for (const auto& e : es) {
            if (!e.is_object() || !e.contains("index") || !e.contains("reason") || !e["index"].is_string() ||
                !e["reason"].is_string() || e.size() != 2)
                r.fail("external_obstructions", "entries must be {\"index\": \"1+\", \"reason\": \"...\"}");
            try {
                k.external_obstructions.push_back(
                    {TwistIndex::parse(e["index"].get<std::string>()), e["reason"].get<std::string>()});
            } catch (const std::invalid_argument& ex) {
                r.fail("external_obstructions", ex.what());
            }
        }
    }
    fill_thin_invariants(k);
    try {
        k.validate();
    } catch (const std::invalid_argument& e) {
        throw DatasetError(where + ": " + e.what());
    }
    return k;
}

std::vector<KnotRecord> load_dataset(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DatasetError(std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw DatasetError("dataset must be a JSON array of knot objects");
    std::vector<KnotRecord> out;
    std::map<std::string, std::size_t> index;
    KnotLookup lookup = [&](std::string_view name) -> const KnotRecord* {
        auto it = index.find(std::string(name));
        return it == index.end() ? nullptr : &out[it->second];
    };
    for (std::size_t i = 0; i < doc.size(); ++i) {
        KnotRecord k;
        try {
            k = record_from_json(doc[i], lookup);
        } catch (const DatasetError& e) {
            throw DatasetError("entry " + std::to_string(i) + ": " + e.what());
        }
        if (index.count(k.name)) throw DatasetError("entry " + std::to_string(i) + ": duplicate name '" + k.name + "'");
        index[k.name] = out.size();
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<KnotRecord> load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset '" + path + "'");
    return load_dataset(in);
}

json record_to_json(const KnotRecord& k) {
    json j;
    j["name"] = k.name;
    j["alternating"] = k.alternating;
    j["thin"] = k.thin;
    j["signature"] = k.signature;
    j["determinant"] = k.determinant;
    j["arf"] = k.arf;
    j["genus"] = k.genus;
    if (k.genus4) j["genus4"] = *k.genus4;
    if (k.tau) j["tau"] = *k.tau;
    if (k.v_seq) j["v_seq"] = k.v_seq->values();
    if (k.v_seq_mirror) j["v_seq_mirror"] = k.v_seq_mirror->values();
    if (!k.signature_samples.empty()) {
        json s = json::object();
        for (const auto& [x, v] : k.signature_samples) s[x.fraction_str()] = v;
        j["signature_samples"] = s;
    }
    if (k.signature_range) j["signature_range"] = {k.signature_range->first, k.signature_range->second};
    if (k.two_bridge) j["two_bridge"] = {k.two_bridge->first, k.two_bridge->second};
    if (!k.branched_ranks.empty()) {
        json b = json::object();
        for (const auto& [q, r] : k.branched_ranks) b[std::to_string(q)] = r;
        j["branched_ranks"] = b;
    }
    if (k.e1_trivial) j["e1_trivial"] = *k.e1_trivial;
    if (k.d_spin_double_cover) j["d_spin_double_cover"] = k.d_spin_double_cover->fraction_str();
    json known = json::array();
    for (const auto& t : k.known_indices) known.push_back(t.str());
    j["known_indices"] = known;
    if (!k.construction.empty()) j["construction"] = k.construction;
    if (!k.external_obstructions.empty()) {
        json es = json::array();
        for (const auto& e : k.external_obstructions) es.push_back({{"index", e.index.str()}, {"reason", e.reason}});
        j["external_obstructions"] = es;
    }
    return j;
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& dataset, std::string_view name) {
    for (const auto& k : dataset)
        if (k.name == name) return k;
    throw std::out_of_range("no knot named '" + std::string(name) + "' in the dataset");
}

}  // namespace untwist
