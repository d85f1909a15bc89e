#include "mqa/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mqa/errors.hpp"

namespace mqa {

MixedDataPtr QuiverFile::mixed_data() const {
    if (chain && tower_spec) {
        return make_mixed_data(quiver, *chain, Tower(*tower_spec));
    }
    if (chain || tower_spec)
        throw ValidationError("\"chain\" and \"tower\" must be given together");
    HereditaryChain trivial(quiver, {VertexSet::full(quiver)});
    return make_mixed_data(quiver, std::move(trivial), Tower(TowerSpec::constants(0)));
}

QuiverFile load_quiver_json(const nlohmann::json& j) {
    QuiverFile qf;
    qf.quiver = Quiver::from_json(j);
    if (j.contains("chain")) {
        std::vector<VertexSet> sets;
        if (!j.at("chain").is_array()) throw ParseError("\"chain\" must be a list of id lists");
        for (const auto& entry : j.at("chain")) {
            std::vector<std::string> ids;
            for (const auto& id : entry) ids.push_back(id.get<std::string>());
            sets.push_back(VertexSet::of_ids(qf.quiver, ids));
        }
        qf.chain = HereditaryChain(qf.quiver, std::move(sets));
    }
    if (j.contains("tower")) qf.tower_spec = TowerSpec::from_json(j.at("tower"));
    return qf;
}

QuiverFile load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open quiver file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return load_quiver_json(j);
}

nlohmann::json linear_rep_to_json(const LinearRep& rep) {
    nlohmann::json j;
    j["size"] = rep.size();
    nlohmann::json lambda = nlohmann::json::array();
    for (const auto& e : rep.lambda()) lambda.push_back(e.str());
    j["lambda"] = lambda;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& row : rep.b()) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& e : row) jrow.push_back(e.str());
        b.push_back(jrow);
    }
    j["B"] = b;
    nlohmann::json rho = nlohmann::json::array();
    for (const auto& e : rep.rho()) rho.push_back(e.str());
    j["rho"] = rho;
    return j;
}

LinearRep linear_rep_from_json(const MixedDataPtr& data, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("B") || !j.contains("rho"))
        throw ParseError("linear representation needs \"lambda\", \"B\", \"rho\"");
    std::vector<MpaElement> lambda, rho;
    for (const auto& s : j.at("lambda"))
        lambda.push_back(MpaElement::parse(data, s.get<std::string>()));
    for (const auto& s : j.at("rho"))
        rho.push_back(MpaElement::parse(data, s.get<std::string>()));
    MpaMatrix b;
    for (const auto& row : j.at("B")) {
        std::vector<MpaElement> brow;
        for (const auto& s : row) brow.push_back(MpaElement::parse(data, s.get<std::string>()));
        b.push_back(std::move(brow));
    }
    return LinearRep(data, std::move(lambda), std::move(b), std::move(rho));
}

LinearRep load_linear_rep_file(const MixedDataPtr& data, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open representation file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return linear_rep_from_json(data, j);
}

}  // namespace mqa
