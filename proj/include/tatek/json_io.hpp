#pragma once

#include <tatek/affine_weyl.hpp>
#include <tatek/kac_characters.hpp>
#include <tatek/theta_torus.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace tatek {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);  // number when it fits, decimal string otherwise
Json vec_to_json(const IntVec& v);
IntMat mat_from_json(const Json& j);

Json qseries_to_json(const QSeries& a);
Json weighted_to_json(const WeightedQSeries& a);

Json orbits_to_json(const std::string& group, i64 level,
                    const std::vector<AffineOrbitRep>& orbits);

Json character_to_json(const std::string& group, const KacCharacter& ch, i64 order);

}  // namespace tatek
