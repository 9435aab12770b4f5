#ifndef STRMOD_IO_HPP
#define STRMOD_IO_HPP
//
// strmod / io
// The module exchange format: a JSON document
//   {"dim": n, "field": "Q" | {"Fp": p}, "x": [[...], ...], "y": [[...], ...]}
// with row-major matrices, prime-field entries as integers in [0, p) and
// rationals as "num/den" strings in lowest terms. The emitted document is
// canonical, so load(save(m)) == m bit for bit.
//

#include <string>
#include <string_view>

#include "strmod/modrep.hpp"

namespace strmod {

std::string module_to_json(const ModuleRep& m);
ModuleRep module_from_json(std::string_view text);

/// "17", "-3" or "num/den", reduced into the field.
Scalar scalar_from_text(const FieldSpec& f, std::string_view text);
std::string scalar_to_text(const FieldSpec& f, const Scalar& v);

ModuleRep load_module(const std::string& path);
void save_module(const ModuleRep& m, const std::string& path);

} // namespace strmod

#endif
