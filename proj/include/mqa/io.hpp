#ifndef MQA_IO_HPP
#define MQA_IO_HPP

#include <optional>
#include <string>

#include "mqa/series.hpp"

#include <nlohmann/json_fwd.hpp>

namespace mqa {

// Parsed quiver document: the graph plus the optional "chain" and "tower"
// keys consumed by the mixed algebras.
struct QuiverFile {
    QuiverPtr quiver;
    std::optional<HereditaryChain> chain;
    std::optional<TowerSpec> tower_spec;

    // Mixed data from the declared chain/tower; trivial chain over the
    // rationals when the keys are absent.
    MixedDataPtr mixed_data() const;
    bool has_mixed_keys() const { return chain.has_value() && tower_spec.has_value(); }
};

QuiverFile load_quiver_json(const nlohmann::json& j);
QuiverFile load_quiver_file(const std::string& path);  // throws ParseError/ValidationError

nlohmann::json linear_rep_to_json(const LinearRep& rep);
LinearRep linear_rep_from_json(const MixedDataPtr& data, const nlohmann::json& j);
LinearRep load_linear_rep_file(const MixedDataPtr& data, const std::string& path);

}  // namespace mqa

#endif  // MQA_IO_HPP
