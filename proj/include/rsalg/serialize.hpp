#pragma once

#include <string>

#include <json.hpp>

#include "rsalg/algebra.hpp"
#include "rsalg/identities.hpp"
#include "rsalg/lemmas.hpp"
#include "rsalg/structure.hpp"

namespace rsalg {

using Json = nlohmann::ordered_json;

// Ring descriptors in files: {"kind":"rationals"}, {"kind":"polynomial",
// "vars":[...]} or {"kind":"prime_field","p":N}. Coefficients of a file
// may be ratios of polynomials, so "polynomial" loads as the fraction
// field of the declared variables.
Json ring_to_json(const RingDesc& ring);
RingDesc ring_from_json(const Json& j);

// Algebra files: {name, ring, dim, parity, labels, products}, products
// as [{i, j, terms: [{k, coeff}]}] with coefficient strings in the
// scalar literal grammar. Zero-coefficient terms are dropped on load.
Json algebra_to_json(const AlgebraPtr& alg);
AlgebraPtr algebra_from_json(const Json& j);

// pretty-printed JSON with a trailing newline
std::string serialize_algebra(const AlgebraPtr& alg);
// throws parse_error on malformed text, validation_error when the data
// does not form a valid algebra
AlgebraPtr parse_algebra(const std::string& text);

AlgebraPtr load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraPtr& alg, const std::string& path);

Json to_json(const CheckReport& r);
Json to_json(const Subspace& s);
Json to_json(const SimplicityVerdict& v);
Json to_json(const ExtractionRecord& r);
Json to_json(const LemmaReport& r);
Json to_json(const ShadowReport& r);

} // namespace rsalg
