#pragma once

// JSON encodings shared by the CLI and tests. Partitions are descending
// integer arrays; rationals are "p/q" strings; integers stay bare numbers.

#include <json.hpp>

#include "hgp/partition.hpp"
#include "hgp/rational.hpp"

namespace hgp {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Bipartition& b) {
    return Json{{"first", to_json(b.first)}, {"second", to_json(b.second)}};
}

inline Json to_json(const MarkedBipartition& m) {
    return Json{{"first", to_json(m.base.first)},
                {"second", to_json(m.base.second)},
                {"mark", Json{{"component", static_cast<int>(m.component)}, {"part", m.part}}}};
}

inline Json to_json(const Rat& r) { return Json(rat_string(r)); }

}   // namespace hgp
