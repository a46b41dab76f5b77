#include "catlab/json_io.hpp"

#include "catlab/errors.hpp"

#include <fstream>

namespace catlab {

Json rat_json(const Rat& q) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw InvalidParameterError("rational fields must be {num, den}");
    try {
        return make_rat(j.at("num").get<std::string>(), j.at("den").get<std::string>());
    } catch (const std::invalid_argument&) {
        throw InvalidParameterError("malformed rational digits");
    }
}

Json multi_index_json(const MultiIndex& m) {
    Json j = Json::array();
    for (unsigned e : m.a) j.push_back(e);
    return j;
}

MultiIndex multi_index_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidParameterError("multi-index must be an array");
    MultiIndex m;
    for (const auto& e : j) {
        long v = e.get<long>();
        if (v < 0) throw InvalidParameterError("multi-index entries must be >= 0");
        m.a.push_back(static_cast<unsigned>(v));
    }
    return m;
}

Json table_json(const CoefficientTable& table) {
    Json j;
    j["n"] = table.n;
    j["d"] = table.d;
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries) {
        Json e;
        e["i"] = key.first + 1;
        e["alpha"] = multi_index_json(key.second);
        e["num"] = value.get_num().get_str();
        e["den"] = value.get_den().get_str();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

CoefficientTable table_from_json(const Json& j) {
    CoefficientTable table(j.at("n").get<int>(), j.at("d").get<int>());
    for (const auto& e : j.at("entries")) {
        int i = e.at("i").get<int>() - 1;
        MultiIndex alpha = multi_index_from_json(e.at("alpha"));
        table.set(i, alpha, rat_from_json(e));
    }
    return table;
}

Json series_json(const TruncatedSeriesMap& f) {
    Json j;
    j["n"] = f.n;
    j["D"] = f.degree_cap;
    Json comps = Json::array();
    for (int i = 0; i < f.n; ++i) {
        Json c;
        c["i"] = i + 1;
        Json terms = Json::array();
        for (const auto& [alpha, coeff] : f.components[i].terms) {
            Json t;
            t["alpha"] = multi_index_json(alpha);
            t["num"] = coeff.get_num().get_str();
            t["den"] = coeff.get_den().get_str();
            terms.push_back(std::move(t));
        }
        c["terms"] = std::move(terms);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

TruncatedSeriesMap series_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    unsigned long cap = j.at("D").get<unsigned long>();
    if (n < 1) throw InvalidParameterError("series needs n >= 1");
    TruncatedSeriesMap f(n, cap);
    for (const auto& c : j.at("components")) {
        int i = c.at("i").get<int>() - 1;
        if (i < 0 || i >= n) throw InvalidParameterError("series component index out of range");
        for (const auto& t : c.at("terms")) {
            MultiIndex alpha = multi_index_from_json(t.at("alpha"));
            if (static_cast<int>(alpha.size()) != n)
                throw InvalidParameterError("series multi-index length mismatch");
            if (alpha.weight() > cap) continue;
            f.components[i].add_term(alpha, rat_from_json(t));
        }
    }
    return f;
}

Json offspring_json(const OffspringDistribution& offspring) {
    Json j;
    j["n"] = offspring.n;
    Json entries = Json::array();
    for (int i = 0; i < offspring.n; ++i) {
        for (const auto& [alpha, mass] : offspring.rows[i]) {
            Json e;
            e["i"] = i + 1;
            e["alpha"] = multi_index_json(alpha);
            e["num"] = mass.get_num().get_str();
            e["den"] = mass.get_den().get_str();
            entries.push_back(std::move(e));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

OffspringDistribution offspring_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    if (n < 1) throw InvalidParameterError("offspring distribution needs n >= 1");
    std::vector<std::map<MultiIndex, Rat>> rows(n);
    for (const auto& e : j.at("entries")) {
        int i = e.at("i").get<int>() - 1;
        if (i < 0 || i >= n) throw InvalidParameterError("offspring type index out of range");
        MultiIndex alpha = multi_index_from_json(e.at("alpha"));
        if (static_cast<int>(alpha.size()) != n)
            throw InvalidParameterError("offspring multi-index length mismatch");
        rows[i][alpha] = rat_from_json(e);
    }
    return OffspringDistribution::make(n, std::move(rows));
}

Json tree_json(const CatalanTree& tree) {
    Json j;
    j["d"] = tree.degree();
    j["k"] = tree.internal_count();
    j["enc"] = tree.encoding();
    return j;
}

CatalanTree tree_from_json(const Json& j) {
    CatalanTree tree = CatalanTree::parse(j.at("d").get<int>(), j.at("enc").get<std::string>());
    if (j.contains("k") && j.at("k").get<long>() != tree.internal_count())
        throw InvalidParameterError("tree JSON k does not match its encoding");
    return tree;
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidParameterError("malformed JSON input");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

} // namespace catlab
