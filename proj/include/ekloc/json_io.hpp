#ifndef EKLOC_JSON_IO_HPP
#define EKLOC_JSON_IO_HPP

#include <memory>
#include <string>

#include "json.hpp"

#include "ekloc/gkm.hpp"
#include "ekloc/gset.hpp"
#include "ekloc/quotient_rr.hpp"

namespace ekloc {

/** Ordered so that serialized reports are byte-stable. */
using json = nlohmann::ordered_json;

/*
 * Every scalar stays exact: rationals are "p/q" strings, cyclotomics are
 * {"order": N, "coeffs": ["p/q", ...]} on the power basis of Q(zeta_N).
 * Nothing anywhere is ever a float.
 */
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json cyclotomic_to_json(const Cyclotomic& c);
/** Accepts {"order", "coeffs"}, a rational string, or a plain integer. */
Cyclotomic cyclotomic_from_json(const json& j);
/** {"nvars": n, "terms": [{"exponents": [...], "coeff": <cyclotomic>}, ...]} */
json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const json& j);

/** Partial override of the default caps; unknown keys are rejected. */
Caps caps_from_json(const json& j);

/**
 * Group descriptors:
 *   {"type": "named", "name": "S3"}
 *   {"type": "permutation", "degree": n, "generators": [[1-based images]..]}
 *   {"type": "matrix", "cyclotomic_order": N, "generators": [[[entry]..]..]}
 */
FiniteGroup group_from_json(const json& j, const Caps& caps = {});

/**
 * {"group": <descriptor>, "rep": {"generator_images": [[[entry]..]..]}}:
 * one matrix per group generator. The loaded action owns its group.
 */
LinearAction action_from_json(const json& j, const Caps& caps = {});

/**
 * {"variables": ["x0", ...], "points": [{"label": ..., "tangent":
 * [[int exponents], ...]}, ...]}: fixed point data for the torus
 * localization routines.
 */
FixedPointData gkm_from_json(const json& j);

/** {"restrictions": [polynomial, ...]}: one per fixed point of data. */
EquivClass equiv_class_from_json(const json& j, const FixedPointData& data);

/**
 * {"group": <descriptor>, "points": n, "action": [[1-based images]..]}:
 * one permutation of the points per group generator.
 */
struct LoadedGSet {
  std::shared_ptr<const FiniteGroup> group;
  GSet space;
};
LoadedGSet gset_from_json(const json& j, const Caps& caps = {});

/**
 * Sheaf on a G-set, one entry per orbit:
 * [{"orbit_rep": x, "rep": {"generator_images": [[matrix], ...]}}, ...]
 * with x the 1-based least point of its orbit and one matrix per generator
 * of that point's stabilizer. The localize-gset report lists each orbit's
 * stabilizer generators so descriptors can be written against them.
 */
GSheaf sheaf_from_json(const json& j, const GSet& X);

}  // namespace ekloc

#endif
